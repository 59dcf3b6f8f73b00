#include "artin/brute.hpp"
#include "artin/error.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace artin;
using testing_helpers::INF;
using testing_helpers::m0;
using testing_helpers::mat;

TEST(Enumerate, GroupOrders)
{
	EXPECT_EQ(enumerate_invertible(1, 2, [](FieldMatrix const &) { return true; }), 1u);
	EXPECT_EQ(enumerate_invertible(2, 2, [](FieldMatrix const &) { return true; }), 6u);
	EXPECT_EQ(enumerate_invertible(3, 2, [](FieldMatrix const &) { return true; }), 168u);
	EXPECT_EQ(general_linear_order(3, 3), 11232u);
	EXPECT_EQ(general_linear_order(2, 5), 480u);
}

TEST(Enumerate, MatchesDeterminantCount)
{
	for (auto [n, p] : {std::pair<std::size_t, std::uint32_t>{1, 5}, {2, 2}, {2, 3}, {2, 5}, {3, 2}})
	{
		std::uint64_t const expected = oracle::count_invertible(n, p);
		EXPECT_EQ(general_linear_order(n, p), expected);
		EXPECT_EQ(enumerate_invertible(n, p, [](FieldMatrix const &) { return true; }), expected);
	}
}

TEST(Enumerate, EachMatrixOnceInLexicographicOrder)
{
	std::set<std::vector<std::uint32_t>> seen;
	std::vector<std::uint32_t> prev;
	enumerate_invertible(3, 3, [&](FieldMatrix const &m) {
		EXPECT_EQ(field_rank(m), 3u);
		EXPECT_TRUE(seen.insert(m.data).second);
		if (!prev.empty())
			EXPECT_LT(prev, m.data);
		prev = m.data;
		return true;
	});
	EXPECT_EQ(seen.size(), 11232u);
}

TEST(Enumerate, StopsEarly)
{
	std::size_t calls = 0;
	auto const visited = enumerate_invertible(3, 2, [&](FieldMatrix const &) { return ++calls < 5; });
	EXPECT_EQ(calls, 5u);
	EXPECT_EQ(visited, 5u);
}

TEST(Enumerate, Guards)
{
	auto any = [](FieldMatrix const &) { return true; };
	EXPECT_THROW(enumerate_invertible(2, 7, any), DomainError);
	EXPECT_THROW(enumerate_invertible(2, 4, any), DomainError);
	EXPECT_THROW(enumerate_invertible(5, 2, any), DomainError);
	EXPECT_THROW(enumerate_invertible(0, 2, any), DomainError);
}

TEST(FieldRank, Examples)
{
	FieldMatrix m{2, 2, 3, {1, 2, 2, 1}};
	EXPECT_EQ(field_rank(m), 1u); // det = -3 = 0 mod 3
	m.p = 5;
	EXPECT_EQ(field_rank(m), 2u);
	EXPECT_EQ(field_rank(FieldMatrix{2, 3, 2, {0, 0, 0, 0, 0, 0}}), 0u);
}

TEST(BruteLieIso, SingleInfiniteEdge)
{
	CoxeterMatrix const m = mat({{1, INF}, {INF, 1}});
	auto const w = brute_lie_iso_field(m, m, 2);
	ASSERT_TRUE(w.has_value());
	EXPECT_EQ(w->F1.data, (std::vector<std::uint32_t>{0, 1, 1, 0}));
	EXPECT_TRUE(verify_field_iso(FieldLieAlgebra(m, 2), FieldLieAlgebra(m, 2), *w));
	std::size_t accepted = 0;
	FieldLieAlgebra const L(m, 2);
	enumerate_invertible(2, 2, [&](FieldMatrix const &F1) {
		FieldMatrix F2{1, 1, 2, {L.bracket(F1.column(0), F1.column(1))[0]}};
		accepted += verify_field_iso(L, L, FieldIsoWitness{F1, F2});
		return true;
	});
	EXPECT_EQ(accepted, 6u);
}

TEST(BruteLieIso, DimensionMismatch)
{
	EXPECT_FALSE(brute_lie_iso_field(mat({{1, 2}, {2, 1}}), mat({{1, INF}, {INF, 1}}), 2).has_value());
	EXPECT_FALSE(brute_lie_iso_field(mat({{1, 2}, {2, 1}}), CoxeterMatrix::uniform(3, Entry(2)), 2).has_value());
}

TEST(BruteLieIso, RejectsNonRightAngledAndBadPrime)
{
	EXPECT_THROW(brute_lie_iso_field(m0(), m0(), 2), DomainError);
	CoxeterMatrix const ra = CoxeterMatrix::uniform(3, kInfinity);
	EXPECT_THROW(brute_lie_iso_field(ra, ra, 7), DomainError);
}

TEST(BruteLieIso, AgreesWithMatrixIsomorphism)
{
	auto const corpus = oracle::all_matrices(3, oracle::entries({2}));
	ASSERT_EQ(corpus.size(), 8u);
	for (std::uint32_t p : {2u, 3u})
		for (auto const &m : corpus)
			for (auto const &n : corpus)
			{
				auto const w = brute_lie_iso_field(m, n, p);
				ASSERT_EQ(w.has_value(), brute_matrix_iso(m, n).has_value())
				    << m.to_string() << " vs " << n.to_string() << " p=" << p;
				if (w)
					EXPECT_TRUE(verify_field_iso(FieldLieAlgebra(m, p), FieldLieAlgebra(n, p), *w));
			}
}

TEST(BruteLieIso, FourGeneratorsOverF2)
{
	// path 0-1-2-3 against star centred at 0, both with three inf edges
	CoxeterMatrix const path = mat({{1, INF, 2, 2}, {INF, 1, INF, 2}, {2, INF, 1, INF}, {2, 2, INF, 1}});
	CoxeterMatrix const star = mat({{1, INF, INF, INF}, {INF, 1, 2, 2}, {INF, 2, 1, 2}, {INF, 2, 2, 1}});
	EXPECT_FALSE(brute_lie_iso_field(path, star, 2).has_value());
	std::vector<Index> const perm{3, 1, 0, 2};
	EXPECT_TRUE(brute_lie_iso_field(path, path.relabeled(perm), 2).has_value());
}

TEST(VerifyFieldIso, RejectsBadWitnesses)
{
	CoxeterMatrix const m = mat({{1, INF, 2}, {INF, 1, 2}, {2, 2, 1}});
	FieldLieAlgebra const L(m, 3);
	auto w = brute_lie_iso_field(m, m, 3);
	ASSERT_TRUE(w.has_value());
	FieldIsoWitness bad = *w;
	bad.F2.data[0] = (bad.F2.data[0] + 1) % 3;
	EXPECT_FALSE(verify_field_iso(L, L, bad));
	FieldIsoWitness singular = *w;
	std::fill(singular.F1.data.begin(), singular.F1.data.end(), 0);
	EXPECT_FALSE(verify_field_iso(L, L, singular));
}
