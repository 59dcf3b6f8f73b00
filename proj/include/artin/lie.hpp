#pragma once

#include "artin/coxeter.hpp"
#include "artin/integer.hpp"
#include "artin/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace artin {

/// Additive order of a degree-2 coordinate: a finite modulus n, or free
/// (nullopt) for a copy of Z.
using Modulus = std::optional<std::uint64_t>;

std::string to_string(Modulus const &m);

/// A degree-2 coordinate v_{s,t}, s < t.
struct Slot
{
	Index s = 0;
	Index t = 0;
	Modulus modulus;
	bool operator==(Slot const &) const = default;
};

class LieElement;

/// The graded Lie ring L[M] = L1 + L2 of an even Coxeter matrix M.
/// L1 is free on u_s. L2 has one slot v_{s,t} for each s < t with
/// m(s,t) != 2: Z/n when m(s,t) = 2n, Z when m(s,t) = inf.
class LieAlgebra
{
public:
	/// Throws DomainError when M is not even.
	explicit LieAlgebra(CoxeterMatrix m);

	CoxeterMatrix const &matrix() const { return matrix_; }
	std::size_t rank() const { return matrix_.size(); }
	std::vector<Slot> const &slots() const { return slots_; }

	/// Slot index of the pair {s,t}, or nullopt when [u_s,u_t] = 0.
	std::optional<std::size_t> slot_of(Index s, Index t) const;

	LieElement zero() const;
	LieElement u(Index s) const;
	LieElement v(std::size_t slot) const;
	/// Canonicalises degree-2 torsion coordinates.
	LieElement element(std::vector<BigInt> deg1, std::vector<BigInt> deg2) const;

	bool operator==(LieAlgebra const &o) const { return matrix_ == o.matrix_; }

private:
	CoxeterMatrix matrix_;
	std::vector<Slot> slots_;
	std::vector<std::optional<std::size_t>> slot_table_; // n*n
};

class LieElement
{
public:
	std::vector<BigInt> const &deg1() const { return deg1_; }
	std::vector<BigInt> const &deg2() const { return deg2_; }

	bool is_zero() const;
	bool operator==(LieElement const &) const = default;

private:
	friend class LieAlgebra;
	std::vector<BigInt> deg1_;
	std::vector<BigInt> deg2_;
};

LieAlgebra build_lie(CoxeterMatrix const &m);

/// Throws DomainError when either element does not belong to L.
LieElement bracket(LieAlgebra const &L, LieElement const &a, LieElement const &b);
LieElement add(LieAlgebra const &L, LieElement const &a, LieElement const &b);
LieElement scale(LieAlgebra const &L, BigInt const &k, LieElement const &a);

IndexSet support(LieElement const &a);
/// {s : gcd(p, a_s) = 1}. Throws DomainError unless p is prime.
IndexSet p_support(LieElement const &a, std::uint64_t p);

// -- right-angled algebras over F_p -----------------------------------------

using FieldVector = std::vector<std::uint32_t>;

/// L_K[M] over K = F_p for a right-angled M: degree-2 slots are exactly
/// the pairs with m(s,t) = inf.
class FieldLieAlgebra
{
public:
	/// Throws DomainError unless M is right-angled and p is prime (p < 2^16).
	FieldLieAlgebra(CoxeterMatrix m, std::uint32_t p);

	CoxeterMatrix const &matrix() const { return matrix_; }
	std::uint32_t prime() const { return p_; }
	std::size_t rank() const { return matrix_.size(); }
	std::vector<Slot> const &slots() const { return slots_; }
	std::optional<std::size_t> slot_of(Index s, Index t) const;

	/// Degree-2 coordinates of [a, b] for degree-1 vectors a, b.
	FieldVector bracket(FieldVector const &a, FieldVector const &b) const;

private:
	CoxeterMatrix matrix_;
	std::uint32_t p_;
	std::vector<Slot> slots_;
	std::vector<std::optional<std::size_t>> slot_table_;
};

/// Basis of Z(a) = {b in L1 : [a,b] = 0}: the restrictions of a to the
/// connected components of the inf-graph on supp(a), followed by u_s for
/// s in the common 2-link of supp(a).
std::vector<FieldVector> centralizer(FieldLieAlgebra const &L, FieldVector const &a);

// -- derived matrices -------------------------------------------------------

/// 2, 2d -> 2; 2d^r -> 2d^(r-1) (r >= 2); inf -> inf. Requires M in E(1,d).
CoxeterMatrix dilate(CoxeterMatrix const &m, std::uint64_t d);
/// 2 -> 2; every other off-diagonal entry -> inf. Requires M in E(1,d).
CoxeterMatrix collapse_p(CoxeterMatrix const &m, std::uint64_t d);
/// 2c -> 2, other entries unchanged. Requires M in E(c,d).
CoxeterMatrix contract_c(CoxeterMatrix const &m, Family f);

/// F_p (x) L[M] as L_{F_p}[M_(p)]. Requires M in E(1,d), p prime, p | d.
FieldLieAlgebra tensor_field(LieAlgebra const &L, std::uint32_t p, std::uint64_t d);

/// For each slot of L, the F_p-slot it becomes after tensoring, or nullopt
/// when Z/n (x) F_p = 0.
std::vector<std::optional<std::size_t>> tensor_slot_map(LieAlgebra const &L, std::uint32_t p);

/// Degree-2 structure of a graded Lie ring generated in degree 1: slot
/// pairs with their orders, and [u_s,u_t] for every s < t written in the
/// slot basis (pairs in row-major order).
struct BracketTable
{
	std::size_t rank = 0;
	std::vector<Slot> slots;
	std::vector<std::vector<BigInt>> constants;
	bool operator==(BracketTable const &) const = default;
};

BracketTable bracket_table(LieAlgebra const &L);
BracketTable bracket_table(FieldLieAlgebra const &L);
/// Table of L^(d): degree 2 replaced by d L2 with bracket d[.,.].
/// Slots whose rescaled order is 1 are dropped.
BracketTable scaled_bracket_table(LieAlgebra const &L, std::uint64_t d);
/// Table of F_p (x) L computed from L, with field slots ordered as in L.
BracketTable tensor_bracket_table(LieAlgebra const &L, std::uint32_t p);

// -- morphisms --------------------------------------------------------------

/// Graded map between L[M] and L[N]. Columns of F are images of u_s in the
/// target basis; columns of f2 are images of source slots in target slots.
struct MorphismWitness
{
	IntMatrix F;
	IntMatrix G;
	IntMatrix f2;
	IntMatrix g2;
};

/// Checks: degree1_inverse, degree2_inverse, well_defined,
/// bracket_preserved. Throws DomainError on shape mismatch.
Report verify_morphism(LieAlgebra const &src, LieAlgebra const &dst, MorphismWitness const &w);

/// Lie isomorphism induced by a matrix isomorphism.
MorphismWitness permutation_morphism(LieAlgebra const &src, LieAlgebra const &dst,
                                     IsoWitness const &perm);

/// s <-> x (or s <-p-> x): s in supp(G col x) and x in supp(F col s).
/// Throws DomainError unless the witness verifies.
bool correspondence(LieAlgebra const &src, LieAlgebra const &dst, MorphismWitness const &w,
                    Index s, Index x, std::optional<std::uint64_t> p = std::nullopt);

// -- invariants and the family decision -------------------------------------

struct TorsionInvariant
{
	/// Sorted prime powers of the torsion part of L2.
	std::vector<std::uint64_t> prime_powers;
	std::size_t free_rank = 0;
	bool operator==(TorsionInvariant const &) const = default;
};

TorsionInvariant torsion_invariant(LieAlgebra const &L);
std::string to_string(TorsionInvariant const &t);

struct FamilyIsoResult
{
	enum class Basis
	{
		Witness,   // isomorphic, verified witness attached
		Invariant, // separated by a computed invariant
		Theorem    // no computed invariant separates; non-isomorphic by rigidity
	};

	bool isomorphic = false;
	Basis basis = Basis::Theorem;
	std::optional<MorphismWitness> witness;
	std::optional<IsoWitness> permutation;
	std::string invariant; // which invariant separated (Invariant basis)
	std::string detail;
};

/// Decides L[M] ~ L[N] for M, N in E(c,d) by deciding M ~ N.
/// Throws DomainError on family membership failure.
FamilyIsoResult lie_iso_family(CoxeterMatrix const &m, CoxeterMatrix const &n, Family f);

} // namespace artin
