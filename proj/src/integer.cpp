#include "artin/integer.hpp"
#include "artin/error.hpp"

#include <utility>

namespace artin {

BigInt mod_floor(BigInt const &a, BigInt const &m)
{
	BigInt r = a % m;
	if (r < 0)
		r += m;
	return r;
}

bool is_prime(std::uint64_t n)
{
	if (n < 2)
		return false;
	for (std::uint64_t q = 2; q <= n / q; ++q)
		if (n % q == 0)
			return false;
	return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n)
{
	if (n == 0)
		throw DomainError("factorize: zero has no factorisation");
	std::vector<std::pair<std::uint64_t, unsigned>> out;
	for (std::uint64_t q = 2; q <= n / q; ++q)
	{
		unsigned e = 0;
		while (n % q == 0)
		{
			n /= q;
			++e;
		}
		if (e)
			out.emplace_back(q, e);
	}
	if (n > 1)
		out.emplace_back(n, 1);
	return out;
}

std::string to_string(BigInt const &v) { return v.str(); }

IntMatrix IntMatrix::identity(std::size_t n)
{
	IntMatrix m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		m(i, i) = 1;
	return m;
}

IntMatrix IntMatrix::from_rows(std::vector<std::vector<BigInt>> const &rows)
{
	std::size_t const r = rows.size();
	std::size_t const c = r ? rows[0].size() : 0;
	IntMatrix m(r, c);
	for (std::size_t i = 0; i < r; ++i)
	{
		if (rows[i].size() != c)
			throw DomainError("IntMatrix: ragged rows");
		for (std::size_t j = 0; j < c; ++j)
			m(i, j) = rows[i][j];
	}
	return m;
}

std::vector<BigInt> IntMatrix::column(std::size_t c) const
{
	std::vector<BigInt> out(rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		out[r] = (*this)(r, c);
	return out;
}

IntMatrix IntMatrix::operator*(IntMatrix const &o) const
{
	if (cols_ != o.rows_)
		throw DomainError("IntMatrix: shape mismatch in product");
	IntMatrix out(rows_, o.cols_);
	for (std::size_t i = 0; i < rows_; ++i)
		for (std::size_t k = 0; k < cols_; ++k)
		{
			BigInt const &a = (*this)(i, k);
			if (a == 0)
				continue;
			for (std::size_t j = 0; j < o.cols_; ++j)
				out(i, j) += a * o(k, j);
		}
	return out;
}

std::size_t rational_rank(IntMatrix m)
{
	// fraction-free elimination by cross-multiplication
	std::size_t rank = 0;
	for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col)
	{
		std::size_t piv = rank;
		while (piv < m.rows() && m(piv, col) == 0)
			++piv;
		if (piv == m.rows())
			continue;
		if (piv != rank)
			for (std::size_t j = 0; j < m.cols(); ++j)
				std::swap(m(piv, j), m(rank, j));
		for (std::size_t i = rank + 1; i < m.rows(); ++i)
		{
			if (m(i, col) == 0)
				continue;
			BigInt const a = m(rank, col);
			BigInt const b = m(i, col);
			for (std::size_t j = col; j < m.cols(); ++j)
				m(i, j) = a * m(i, j) - b * m(rank, j);
		}
		++rank;
	}
	return rank;
}

} // namespace artin
