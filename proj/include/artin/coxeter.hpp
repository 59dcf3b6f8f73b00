#pragma once

#include "artin/entry.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace artin {

using Index = std::size_t;
using IndexSet = std::vector<Index>; // sorted ascending

/// Symmetric matrix over {1,2,3,...} and infinity with 1 on the diagonal
/// and entries >= 2 off it. Generators are the indices 0..n-1, and the
/// total order on them is the index order.
class CoxeterMatrix
{
public:
	/// Validates the invariants; throws ParseError with coordinates.
	explicit CoxeterMatrix(std::vector<std::vector<Entry>> const &rows);

	/// n x n matrix with every off-diagonal entry equal to `off`.
	static CoxeterMatrix uniform(std::size_t n, Entry off);

	std::size_t size() const { return n_; }
	Entry operator()(Index s, Index t) const { return entries_[s * n_ + t]; }

	/// The matrix N with N(perm[s], perm[t]) = M(s, t).
	CoxeterMatrix relabeled(std::span<Index const> perm) const;

	std::vector<std::vector<Entry>> rows() const;
	std::string to_string() const;

	bool operator==(CoxeterMatrix const &) const = default;

private:
	CoxeterMatrix() = default;

	std::size_t n_ = 0;
	std::vector<Entry> entries_;
};

// -- classification ---------------------------------------------------------

struct Family
{
	std::uint64_t c = 1;
	std::uint64_t d = 2;
	bool operator==(Family const &) const = default;
};

struct Classification
{
	bool is_even = false;
	bool is_right_angled = false;
	std::vector<std::pair<Family, bool>> family_memberships;
};

/// Throws DomainError unless c >= 1, d >= 2 and gcd(c, d) = 1.
void check_family(Family f);

bool is_even(CoxeterMatrix const &m);
bool is_right_angled(CoxeterMatrix const &m);

/// Membership in E(c,d): every off-diagonal entry lies in
/// {2c, inf} u {2 d^r : r >= 1}.
bool in_family(CoxeterMatrix const &m, Family f);

Classification classify(CoxeterMatrix const &m, std::span<Family const> queries);

// -- links, the quasi-order and the reduced matrix --------------------------

/// {t != s : m(s,t) finite and dividing m}. Requires 2 <= m.
IndexSet link(CoxeterMatrix const &m, Index s, std::uint64_t bound);
IndexSet star(CoxeterMatrix const &m, Index s, std::uint64_t bound);

/// s precedes t iff lk_m(s) is contained in st_m(t) for every finite m >= 2.
/// Evaluated as: for every r outside {s,t} with m(s,r) finite, m(t,r) is
/// finite and divides m(s,r).
bool precedes(CoxeterMatrix const &m, Index s, Index t);

/// Classes of mutual precedence. Each class is sorted; classes are ordered
/// by their least element.
std::vector<IndexSet> equiv_classes(CoxeterMatrix const &m);

struct ReducedMatrix
{
	std::vector<IndexSet> classes;
	CoxeterMatrix entries;
	std::vector<std::size_t> sizes;
	/// 0 for singleton classes, otherwise the common mutual entry.
	std::vector<Entry> labels;
};

/// Throws InternalError if the class-constancy lemmas are violated.
ReducedMatrix reduce(CoxeterMatrix const &m);

// -- matrix isomorphism -----------------------------------------------------

/// perm[s] is the image of generator s.
struct IsoWitness
{
	std::vector<Index> permutation;
};

/// True iff m(s,t) = n(perm[s], perm[t]) for all s, t.
bool verify_iso(CoxeterMatrix const &m, CoxeterMatrix const &n, IsoWitness const &w);

/// Decides isomorphism through the reduced matrices: backtracks over class
/// assignments preserving entries, sizes and labels, then expands the class
/// map to generators. The witness is the least one in class order.
std::optional<IsoWitness> matrices_isomorphic(CoxeterMatrix const &m, CoxeterMatrix const &n);

inline constexpr std::size_t kBruteIsoMaxSize = 10;

/// Exhaustive search over all permutations in lexicographic order.
/// Throws DomainError when the size exceeds kBruteIsoMaxSize.
std::optional<IsoWitness> brute_matrix_iso(CoxeterMatrix const &m, CoxeterMatrix const &n);

} // namespace artin
