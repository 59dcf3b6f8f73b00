#pragma once

// Independent reference implementations used only by the tests. None of
// these share code paths with the library routines they check.

#include "artin/brute.hpp"
#include "artin/coxeter.hpp"
#include "artin/lie.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using namespace artin;

/// lk_m(s) subset of st_m(t) for every m among the finite off-diagonal
/// entries of row s, evaluated literally from link and star.
inline bool precedes(CoxeterMatrix const &m, Index s, Index t)
{
	for (Index r = 0; r < m.size(); ++r)
	{
		if (r == s || m(s, r).is_infinite())
			continue;
		std::uint64_t const bound = m(s, r).value();
		IndexSet const lk = link(m, s, bound);
		IndexSet const st = star(m, t, bound);
		if (!std::includes(st.begin(), st.end(), lk.begin(), lk.end()))
			return false;
	}
	return true;
}

/// Entry-by-entry membership in E(c,d) by listing powers of d.
inline bool in_family(CoxeterMatrix const &m, std::uint64_t c, std::uint64_t d)
{
	for (Index s = 0; s < m.size(); ++s)
		for (Index t = 0; t < m.size(); ++t)
		{
			if (s == t || m(s, t).is_infinite())
				continue;
			std::uint64_t const e = m(s, t).value();
			bool ok = e == 2 * c;
			for (std::uint64_t q = 2 * d; q <= e && !ok; q *= d)
				ok = q == e;
			if (!ok)
				return false;
		}
	return true;
}

/// Reduced row echelon form over F_p of the given rows; returns the rank.
inline std::size_t rref(std::vector<std::vector<std::uint32_t>> &rows, std::uint32_t p)
{
	auto inv = [p](std::uint32_t a) {
		for (std::uint32_t x = 1; x < p; ++x)
			if (a * x % p == 1)
				return x;
		return 0u;
	};
	std::size_t rank = 0;
	std::size_t const cols = rows.empty() ? 0 : rows[0].size();
	for (std::size_t c = 0; c < cols && rank < rows.size(); ++c)
	{
		std::size_t piv = rank;
		while (piv < rows.size() && rows[piv][c] % p == 0)
			++piv;
		if (piv == rows.size())
			continue;
		std::swap(rows[rank], rows[piv]);
		std::uint32_t const k = inv(rows[rank][c] % p);
		for (auto &x : rows[rank])
			x = x % p * k % p;
		for (std::size_t r = 0; r < rows.size(); ++r)
		{
			if (r == rank || rows[r][c] % p == 0)
				continue;
			std::uint32_t const f = rows[r][c] % p;
			for (std::size_t j = 0; j < cols; ++j)
				rows[r][j] = (rows[r][j] % p + p * p - f * rows[rank][j]) % p;
		}
		++rank;
	}
	rows.resize(rank);
	return rank;
}

/// Kernel of b -> [a, b] on degree 1 of L_{F_p}[M] for right-angled M,
/// as an RREF basis. The bracket map is written out directly from the
/// entries of M: coordinate (s,t) of [a,b] is a_s b_t - a_t b_s.
inline std::vector<std::vector<std::uint32_t>> bracket_kernel(CoxeterMatrix const &m,
                                                              std::vector<std::uint32_t> const &a,
                                                              std::uint32_t p)
{
	std::size_t const n = m.size();
	// equations: one per pair with m(s,t) = inf, unknowns b_0..b_{n-1}
	std::vector<std::vector<std::uint32_t>> eq;
	for (Index s = 0; s < n; ++s)
		for (Index t = s + 1; t < n; ++t)
			if (m(s, t).is_infinite())
			{
				std::vector<std::uint32_t> row(n, 0);
				row[t] = a[s] % p;
				row[s] = (p - a[t] % p) % p;
				eq.push_back(row);
			}
	rref(eq, p);
	std::vector<bool> pivot_col(n, false);
	std::vector<std::size_t> pivot_of_row;
	for (auto const &r : eq)
	{
		std::size_t c = 0;
		while (r[c] == 0)
			++c;
		pivot_col[c] = true;
		pivot_of_row.push_back(c);
	}
	std::vector<std::vector<std::uint32_t>> basis;
	for (std::size_t f = 0; f < n; ++f)
	{
		if (pivot_col[f])
			continue;
		std::vector<std::uint32_t> v(n, 0);
		v[f] = 1;
		for (std::size_t i = 0; i < eq.size(); ++i)
			v[pivot_of_row[i]] = (p - eq[i][f]) % p;
		basis.push_back(v);
	}
	rref(basis, p);
	return basis;
}

/// All n x n matrices over F_p with nonzero determinant, counted by
/// cofactor expansion.
inline std::uint64_t count_invertible(std::size_t n, std::uint32_t p)
{
	std::function<std::int64_t(std::vector<std::int64_t> const &, std::size_t)> det =
	    [&](std::vector<std::int64_t> const &a, std::size_t k) -> std::int64_t {
		if (k == 1)
			return a[0];
		std::int64_t sum = 0;
		for (std::size_t c = 0; c < k; ++c)
		{
			std::vector<std::int64_t> minor;
			for (std::size_t r = 1; r < k; ++r)
				for (std::size_t cc = 0; cc < k; ++cc)
					if (cc != c)
						minor.push_back(a[r * k + cc]);
			std::int64_t const term = a[c] * det(minor, k - 1);
			sum += (c % 2 ? -term : term);
		}
		return sum;
	};
	std::vector<std::int64_t> a(n * n, 0);
	std::uint64_t count = 0;
	while (true)
	{
		if (((det(a, n) % p) + p) % p != 0)
			++count;
		std::size_t i = 0;
		while (i < a.size() && ++a[i] == p)
			a[i++] = 0;
		if (i == a.size())
			break;
	}
	return count;
}

// -- corpora ----------------------------------------------------------------

/// All symmetric matrices on n generators whose off-diagonal entries are
/// drawn from `values`, in lexicographic order of the upper triangle.
inline std::vector<CoxeterMatrix> all_matrices(std::size_t n, std::vector<Entry> const &values)
{
	std::vector<CoxeterMatrix> out;
	std::size_t const pairs = n * (n - 1) / 2;
	std::vector<std::size_t> idx(pairs, 0);
	while (true)
	{
		std::vector<std::vector<Entry>> rows(n, std::vector<Entry>(n, Entry(1)));
		std::size_t k = 0;
		for (std::size_t s = 0; s < n; ++s)
			for (std::size_t t = s + 1; t < n; ++t, ++k)
				rows[s][t] = rows[t][s] = values[idx[k]];
		out.emplace_back(rows);
		std::size_t i = pairs;
		while (i > 0 && ++idx[i - 1] == values.size())
			idx[--i] = 0;
		if (i == 0)
			break;
	}
	return out;
}

inline CoxeterMatrix random_matrix(std::size_t n, std::vector<Entry> const &values,
                                   std::mt19937_64 &rng)
{
	std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
	std::vector<std::vector<Entry>> rows(n, std::vector<Entry>(n, Entry(1)));
	for (std::size_t s = 0; s < n; ++s)
		for (std::size_t t = s + 1; t < n; ++t)
			rows[s][t] = rows[t][s] = values[pick(rng)];
	return CoxeterMatrix(rows);
}

inline std::vector<Index> random_permutation(std::size_t n, std::mt19937_64 &rng)
{
	std::vector<Index> perm(n);
	for (std::size_t i = 0; i < n; ++i)
		perm[i] = i;
	std::shuffle(perm.begin(), perm.end(), rng);
	return perm;
}

inline std::vector<Entry> entries(std::initializer_list<int> finite, bool with_infinity = true)
{
	std::vector<Entry> out;
	for (int v : finite)
		out.emplace_back(std::uint64_t(v));
	if (with_infinity)
		out.push_back(kInfinity);
	return out;
}

} // namespace oracle
