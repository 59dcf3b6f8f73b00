#include "artin/brute.hpp"
#include "artin/error.hpp"

#include <algorithm>

namespace artin {

FieldVector FieldMatrix::column(std::size_t c) const
{
	FieldVector out(rows);
	for (std::size_t r = 0; r < rows; ++r)
		out[r] = (*this)(r, c);
	return out;
}

namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p)
{
	// a^(p-2) mod p
	std::uint64_t result = 1, base = a % p;
	for (std::uint32_t e = p - 2; e; e >>= 1)
	{
		if (e & 1)
			result = result * base % p;
		base = base * base % p;
	}
	return std::uint32_t(result);
}

void check_guards(std::size_t n, std::uint32_t p)
{
	if (p != 2 && p != 3 && p != 5)
		throw DomainError("enumeration requires p in {2,3,5}, got " + std::to_string(p));
	if (n < 1 || n > kMaxEnumerationDim)
		throw DomainError("enumeration requires 1 <= n <= " + std::to_string(kMaxEnumerationDim) +
		                  ", got " + std::to_string(n));
}

// Rows kept in echelon form: pivot[i] is the leading column of rows[i],
// normalised to 1.
struct Echelon
{
	std::uint32_t p;
	std::vector<FieldVector> rows;
	std::vector<std::size_t> pivot;

	// Reduces v against the basis; returns false if v is in the span.
	bool reduce(FieldVector &v) const
	{
		for (std::size_t i = 0; i < rows.size(); ++i)
		{
			std::uint32_t const c = v[pivot[i]];
			if (c == 0)
				continue;
			for (std::size_t j = 0; j < v.size(); ++j)
				v[j] = std::uint32_t((v[j] + std::uint64_t(p - c) * rows[i][j]) % p);
		}
		return std::any_of(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
	}

	void push(FieldVector v)
	{
		std::size_t lead = 0;
		while (v[lead] == 0)
			++lead;
		std::uint32_t const inv = inverse_mod(v[lead], p);
		for (auto &x : v)
			x = std::uint32_t(std::uint64_t(x) * inv % p);
		// keep earlier rows reduced at the new pivot
		for (auto &r : rows)
		{
			std::uint32_t const c = r[lead];
			if (c == 0)
				continue;
			for (std::size_t j = 0; j < r.size(); ++j)
				r[j] = std::uint32_t((r[j] + std::uint64_t(p - c) * v[j]) % p);
		}
		rows.push_back(std::move(v));
		pivot.push_back(lead);
	}
};

class InvertibleEnumerator
{
public:
	InvertibleEnumerator(std::size_t n, std::uint32_t p,
	                     std::function<bool(FieldMatrix const &)> const &visit)
	    : n_(n), p_(p), visit_(visit)
	{
		current_.rows = current_.cols = n;
		current_.p = p;
		current_.data.assign(n * n, 0);
	}

	std::uint64_t run()
	{
		Echelon e{p_, {}, {}};
		descend(0, e);
		return count_;
	}

private:
	// returns false to stop
	bool descend(std::size_t row, Echelon const &basis)
	{
		if (row == n_)
		{
			++count_;
			return visit_(current_);
		}
		FieldVector v(n_, 0);
		do
		{
			FieldVector r = v;
			if (basis.reduce(r))
			{
				std::copy(v.begin(), v.end(), current_.data.begin() + row * n_);
				Echelon next = basis;
				next.push(std::move(r));
				if (!descend(row + 1, next))
					return false;
			}
		} while (increment(v));
		return true;
	}

	bool increment(FieldVector &v) const
	{
		for (std::size_t i = n_; i-- > 0;)
		{
			if (++v[i] < p_)
				return true;
			v[i] = 0;
		}
		return false;
	}

	std::size_t n_;
	std::uint32_t p_;
	std::function<bool(FieldMatrix const &)> const &visit_;
	FieldMatrix current_;
	std::uint64_t count_ = 0;
};

} // namespace

std::size_t field_rank(FieldMatrix m)
{
	Echelon e{m.p, {}, {}};
	for (std::size_t r = 0; r < m.rows; ++r)
	{
		FieldVector v(m.data.begin() + r * m.cols, m.data.begin() + (r + 1) * m.cols);
		for (auto &x : v)
			x %= m.p;
		if (e.reduce(v))
			e.push(std::move(v));
	}
	return e.rows.size();
}

std::uint64_t enumerate_invertible(std::size_t n, std::uint32_t p,
                                   std::function<bool(FieldMatrix const &)> const &visit)
{
	check_guards(n, p);
	return InvertibleEnumerator(n, p, visit).run();
}

std::uint64_t general_linear_order(std::size_t n, std::uint32_t p)
{
	std::uint64_t pn = 1;
	for (std::size_t i = 0; i < n; ++i)
		pn *= p;
	std::uint64_t order = 1, pk = 1;
	for (std::size_t k = 0; k < n; ++k)
	{
		order *= pn - pk;
		pk *= p;
	}
	return order;
}

namespace {

bool is_zero(FieldVector const &v)
{
	return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

// Fills F2 from F1 and checks the m(s,t) = 2 relations; false if violated.
bool forced_degree2(FieldLieAlgebra const &src, FieldLieAlgebra const &dst, FieldMatrix const &F1,
                    FieldMatrix &F2)
{
	std::size_t const n = src.rank();
	std::vector<FieldVector> img(n);
	for (Index s = 0; s < n; ++s)
		img[s] = F1.column(s);
	for (Index s = 0; s < n; ++s)
		for (Index t = s + 1; t < n; ++t)
			if (!src.slot_of(s, t) && !is_zero(dst.bracket(img[s], img[t])))
				return false;
	F2.rows = dst.slots().size();
	F2.cols = src.slots().size();
	F2.p = src.prime();
	F2.data.assign(F2.rows * F2.cols, 0);
	for (std::size_t j = 0; j < src.slots().size(); ++j)
	{
		Slot const &sl = src.slots()[j];
		FieldVector const c = dst.bracket(img[sl.s], img[sl.t]);
		for (std::size_t i = 0; i < c.size(); ++i)
			F2(i, j) = c[i];
	}
	return true;
}

} // namespace

bool verify_field_iso(FieldLieAlgebra const &src, FieldLieAlgebra const &dst,
                      FieldIsoWitness const &w)
{
	std::size_t const n = src.rank();
	if (dst.rank() != n || src.prime() != dst.prime())
		return false;
	if (w.F1.rows != n || w.F1.cols != n || field_rank(w.F1) != n)
		return false;
	FieldMatrix forced;
	if (!forced_degree2(src, dst, w.F1, forced))
		return false;
	return forced == w.F2 && forced.rows == forced.cols && field_rank(forced) == forced.rows;
}

std::optional<FieldIsoWitness> brute_lie_iso_field(CoxeterMatrix const &m, CoxeterMatrix const &n,
                                                   std::uint32_t p)
{
	FieldLieAlgebra const src(m, p);
	FieldLieAlgebra const dst(n, p);
	if (m.size() != n.size())
		return std::nullopt;
	check_guards(m.size(), p);
	if (src.slots().size() != dst.slots().size())
		return std::nullopt;

	std::optional<FieldIsoWitness> found;
	FieldMatrix F2;
	enumerate_invertible(m.size(), p, [&](FieldMatrix const &F1) {
		if (!forced_degree2(src, dst, F1, F2))
			return true;
		if (field_rank(F2) != F2.rows)
			return true;
		found = FieldIsoWitness{F1, F2};
		return false;
	});
	return found;
}

} // namespace artin
