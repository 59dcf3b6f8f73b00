#include "artin/coxeter.hpp"
#include "artin/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace artin {

CoxeterMatrix::CoxeterMatrix(std::vector<std::vector<Entry>> const &rows)
{
	n_ = rows.size();
	if (n_ == 0)
		throw ParseError("Coxeter matrix must have at least one generator");
	entries_.resize(n_ * n_);
	for (std::size_t i = 0; i < n_; ++i)
	{
		if (rows[i].size() != n_)
			throw ParseError("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
			                 " entries, expected " + std::to_string(n_));
		for (std::size_t j = 0; j < n_; ++j)
			entries_[i * n_ + j] = rows[i][j];
	}
	for (std::size_t i = 0; i < n_; ++i)
	{
		if (entries_[i * n_ + i] != Entry(1))
			throw ParseError("diagonal entry must be 1", i, i);
		for (std::size_t j = 0; j < n_; ++j)
		{
			if (i == j)
				continue;
			Entry const e = entries_[i * n_ + j];
			if (e.is_finite() && e.value() < 2)
				throw ParseError("off-diagonal entry must be >= 2 or inf", i, j);
			if (e != entries_[j * n_ + i])
				throw ParseError("matrix is not symmetric", i, j);
		}
	}
}

CoxeterMatrix CoxeterMatrix::uniform(std::size_t n, Entry off)
{
	std::vector<std::vector<Entry>> rows(n, std::vector<Entry>(n, off));
	for (std::size_t i = 0; i < n; ++i)
		rows[i][i] = Entry(1);
	return CoxeterMatrix(rows);
}

CoxeterMatrix CoxeterMatrix::relabeled(std::span<Index const> perm) const
{
	if (perm.size() != n_)
		throw DomainError("relabeled: permutation size mismatch");
	std::vector<bool> seen(n_, false);
	for (Index p : perm)
	{
		if (p >= n_ || seen[p])
			throw DomainError("relabeled: not a permutation");
		seen[p] = true;
	}
	CoxeterMatrix out;
	out.n_ = n_;
	out.entries_.resize(n_ * n_);
	for (Index s = 0; s < n_; ++s)
		for (Index t = 0; t < n_; ++t)
			out.entries_[perm[s] * n_ + perm[t]] = entries_[s * n_ + t];
	return out;
}

std::vector<std::vector<Entry>> CoxeterMatrix::rows() const
{
	std::vector<std::vector<Entry>> out(n_, std::vector<Entry>(n_));
	for (std::size_t i = 0; i < n_; ++i)
		for (std::size_t j = 0; j < n_; ++j)
			out[i][j] = entries_[i * n_ + j];
	return out;
}

std::string CoxeterMatrix::to_string() const
{
	std::ostringstream os;
	os << '[';
	for (std::size_t i = 0; i < n_; ++i)
	{
		os << (i ? ",[" : "[");
		for (std::size_t j = 0; j < n_; ++j)
			os << (j ? "," : "") << entries_[i * n_ + j].to_string();
		os << ']';
	}
	os << ']';
	return os.str();
}

// -- classification ---------------------------------------------------------

void check_family(Family f)
{
	if (f.c < 1 || f.d < 2 || std::gcd(f.c, f.d) != 1)
		throw DomainError("family (" + std::to_string(f.c) + "," + std::to_string(f.d) +
		                  ") requires c >= 1, d >= 2, gcd(c,d) = 1");
}

namespace {

template <class Pred> bool all_off_diagonal(CoxeterMatrix const &m, Pred pred)
{
	for (Index s = 0; s < m.size(); ++s)
		for (Index t = s + 1; t < m.size(); ++t)
			if (!pred(m(s, t)))
				return false;
	return true;
}

// v = 2 d^r for some r >= 1
bool is_twice_power(std::uint64_t v, std::uint64_t d)
{
	if (v % 2 != 0)
		return false;
	v /= 2;
	if (v < d)
		return false;
	while (v % d == 0)
		v /= d;
	return v == 1;
}

} // namespace

bool is_even(CoxeterMatrix const &m)
{
	return all_off_diagonal(m, [](Entry e) { return e.is_infinite() || e.value() % 2 == 0; });
}

bool is_right_angled(CoxeterMatrix const &m)
{
	return all_off_diagonal(m, [](Entry e) { return e.is_infinite() || e.value() == 2; });
}

bool in_family(CoxeterMatrix const &m, Family f)
{
	check_family(f);
	return all_off_diagonal(m, [&](Entry e) {
		if (e.is_infinite())
			return true;
		std::uint64_t const v = e.value();
		return v == 2 * f.c || is_twice_power(v, f.d);
	});
}

Classification classify(CoxeterMatrix const &m, std::span<Family const> queries)
{
	for (Family const &f : queries)
		check_family(f);
	Classification c;
	c.is_even = is_even(m);
	c.is_right_angled = is_right_angled(m);
	for (Family const &f : queries)
		c.family_memberships.emplace_back(f, in_family(m, f));
	return c;
}

// -- links and the quasi-order ----------------------------------------------

namespace {

void check_index(CoxeterMatrix const &m, Index s)
{
	if (s >= m.size())
		throw DomainError("generator index " + std::to_string(s) + " out of range");
}

} // namespace

IndexSet link(CoxeterMatrix const &m, Index s, std::uint64_t bound)
{
	check_index(m, s);
	if (bound < 2)
		throw DomainError("link: m must be >= 2");
	IndexSet out;
	for (Index t = 0; t < m.size(); ++t)
		if (t != s && m(s, t).divides(Entry(bound)))
			out.push_back(t);
	return out;
}

IndexSet star(CoxeterMatrix const &m, Index s, std::uint64_t bound)
{
	IndexSet out = link(m, s, bound);
	out.insert(std::lower_bound(out.begin(), out.end(), s), s);
	return out;
}

bool precedes(CoxeterMatrix const &m, Index s, Index t)
{
	check_index(m, s);
	check_index(m, t);
	for (Index r = 0; r < m.size(); ++r)
	{
		if (r == s || r == t)
			continue;
		Entry const sr = m(s, r);
		if (sr.is_infinite())
			continue;
		if (!m(t, r).divides(sr))
			return false;
	}
	return true;
}

std::vector<IndexSet> equiv_classes(CoxeterMatrix const &m)
{
	std::size_t const n = m.size();
	std::vector<bool> placed(n, false);
	std::vector<IndexSet> classes;
	for (Index s = 0; s < n; ++s)
	{
		if (placed[s])
			continue;
		IndexSet cls{s};
		placed[s] = true;
		for (Index t = s + 1; t < n; ++t)
			if (!placed[t] && precedes(m, s, t) && precedes(m, t, s))
			{
				cls.push_back(t);
				placed[t] = true;
			}
		classes.push_back(std::move(cls));
	}
	return classes;
}

ReducedMatrix reduce(CoxeterMatrix const &m)
{
	std::vector<IndexSet> classes = equiv_classes(m);
	std::size_t const k = classes.size();

	std::vector<std::vector<Entry>> rows(k, std::vector<Entry>(k, Entry(1)));
	for (std::size_t a = 0; a < k; ++a)
		for (std::size_t b = 0; b < k; ++b)
		{
			if (a == b)
				continue;
			Entry const e = m(classes[a].front(), classes[b].front());
			for (Index s : classes[a])
				for (Index t : classes[b])
					if (m(s, t) != e)
						throw InternalError("reduce: entries between classes " + std::to_string(a) +
						                    " and " + std::to_string(b) + " are not constant");
			rows[a][b] = e;
		}

	std::vector<std::size_t> sizes;
	std::vector<Entry> labels;
	for (std::size_t a = 0; a < k; ++a)
	{
		IndexSet const &c = classes[a];
		sizes.push_back(c.size());
		if (c.size() == 1)
		{
			labels.push_back(Entry(0));
			continue;
		}
		Entry const lb = m(c[0], c[1]);
		for (Index s : c)
			for (Index t : c)
				if (s != t && m(s, t) != lb)
					throw InternalError("reduce: entries inside class " + std::to_string(a) +
					                    " are not constant");
		labels.push_back(lb);
	}

	return ReducedMatrix{std::move(classes), CoxeterMatrix(rows), std::move(sizes),
	                     std::move(labels)};
}

// -- isomorphism --------------------------------------------------------------

bool verify_iso(CoxeterMatrix const &m, CoxeterMatrix const &n, IsoWitness const &w)
{
	if (m.size() != n.size() || w.permutation.size() != m.size())
		return false;
	std::vector<bool> seen(m.size(), false);
	for (Index p : w.permutation)
	{
		if (p >= m.size() || seen[p])
			return false;
		seen[p] = true;
	}
	for (Index s = 0; s < m.size(); ++s)
		for (Index t = 0; t < m.size(); ++t)
			if (m(s, t) != n(w.permutation[s], w.permutation[t]))
				return false;
	return true;
}

namespace {

using ClassKey = std::tuple<Entry, std::size_t, Entry>; // entry to D, |D|, lb(D)

struct ClassSignature
{
	std::size_t size;
	Entry label;
	std::vector<ClassKey> row; // sorted
	bool operator==(ClassSignature const &) const = default;
};

std::vector<ClassSignature> signatures(ReducedMatrix const &r)
{
	std::size_t const k = r.classes.size();
	std::vector<ClassSignature> out;
	for (std::size_t a = 0; a < k; ++a)
	{
		ClassSignature sig{r.sizes[a], r.labels[a], {}};
		for (std::size_t b = 0; b < k; ++b)
			if (b != a)
				sig.row.emplace_back(r.entries(a, b), r.sizes[b], r.labels[b]);
		std::sort(sig.row.begin(), sig.row.end());
		out.push_back(std::move(sig));
	}
	return out;
}

class ClassMatcher
{
public:
	ClassMatcher(ReducedMatrix const &rm, ReducedMatrix const &rn)
	    : rm_(rm), rn_(rn), sm_(signatures(rm)), sn_(signatures(rn)),
	      assign_(rm.classes.size()), used_(rn.classes.size(), false)
	{
	}

	bool solve() { return extend(0); }
	std::vector<std::size_t> const &assignment() const { return assign_; }

private:
	bool extend(std::size_t a)
	{
		if (a == assign_.size())
			return true;
		for (std::size_t b = 0; b < used_.size(); ++b)
		{
			if (used_[b] || !(sm_[a] == sn_[b]))
				continue;
			bool ok = true;
			for (std::size_t j = 0; j < a && ok; ++j)
				ok = rm_.entries(a, j) == rn_.entries(b, assign_[j]);
			if (!ok)
				continue;
			assign_[a] = b;
			used_[b] = true;
			if (extend(a + 1))
				return true;
			used_[b] = false;
		}
		return false;
	}

	ReducedMatrix const &rm_;
	ReducedMatrix const &rn_;
	std::vector<ClassSignature> sm_;
	std::vector<ClassSignature> sn_;
	std::vector<std::size_t> assign_;
	std::vector<bool> used_;
};

} // namespace

std::optional<IsoWitness> matrices_isomorphic(CoxeterMatrix const &m, CoxeterMatrix const &n)
{
	if (m.size() != n.size())
		return std::nullopt;
	ReducedMatrix const rm = reduce(m);
	ReducedMatrix const rn = reduce(n);
	if (rm.classes.size() != rn.classes.size())
		return std::nullopt;

	ClassMatcher matcher(rm, rn);
	if (!matcher.solve())
		return std::nullopt;

	IsoWitness w;
	w.permutation.resize(m.size());
	auto const &assign = matcher.assignment();
	for (std::size_t a = 0; a < assign.size(); ++a)
	{
		IndexSet const &src = rm.classes[a];
		IndexSet const &dst = rn.classes[assign[a]];
		for (std::size_t i = 0; i < src.size(); ++i)
			w.permutation[src[i]] = dst[i];
	}
	if (!verify_iso(m, n, w))
		throw InternalError("matrices_isomorphic: expanded class map is not an isomorphism");
	return w;
}

std::optional<IsoWitness> brute_matrix_iso(CoxeterMatrix const &m, CoxeterMatrix const &n)
{
	if (m.size() != n.size())
		return std::nullopt;
	if (m.size() > kBruteIsoMaxSize)
		throw DomainError("brute_matrix_iso: n = " + std::to_string(m.size()) + " exceeds " +
		                  std::to_string(kBruteIsoMaxSize));
	std::size_t const sz = m.size();
	std::vector<Index> perm(sz);
	std::iota(perm.begin(), perm.end(), Index{0});
	do
	{
		bool ok = true;
		for (Index s = 0; s < sz && ok; ++s)
			for (Index t = s + 1; t < sz && ok; ++t)
				ok = m(s, t) == n(perm[s], perm[t]);
		if (ok)
			return IsoWitness{perm};
	} while (std::next_permutation(perm.begin(), perm.end()));
	return std::nullopt;
}

} // namespace artin
