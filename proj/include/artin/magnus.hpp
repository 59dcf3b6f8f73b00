#pragma once

#include "artin/coxeter.hpp"
#include "artin/integer.hpp"
#include "artin/lie.hpp"
#include "artin/report.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace artin {

class RingElement;

/// R = Z<X>/(I^3 + J): the free associative ring on x_s truncated above
/// degree 2, modulo n (x_s x_t - x_t x_s) whenever m(s,t) = 2n.
///
/// Degree 2 has basis x_s^2, x_t x_s (s < t) and the commutator classes
/// c_{s,t} = x_s x_t - x_t x_s (s < t). The commutator class for pair
/// (s,t) has order m(s,t)/2 (so 1, i.e. zero, when m(s,t) = 2) or is free
/// when m(s,t) = inf. Products x_s x_t with s < t are rewritten as
/// x_t x_s + c_{s,t}.
class TruncatedRing
{
public:
	/// Throws DomainError when M is not even.
	explicit TruncatedRing(CoxeterMatrix m);

	/// Ring with explicitly chosen commutator orders (one per pair s < t,
	/// row-major). Used to build deliberately wrong rings.
	TruncatedRing(CoxeterMatrix m, std::vector<Modulus> commutator_orders);

	CoxeterMatrix const &matrix() const { return matrix_; }
	std::size_t rank() const { return matrix_.size(); }
	std::size_t pair_count() const { return orders_.size(); }
	std::size_t pair_index(Index s, Index t) const; // s < t
	Modulus const &commutator_order(std::size_t pair) const { return orders_[pair]; }

	RingElement zero() const;
	RingElement one() const;
	RingElement x(Index s) const;
	/// The class c_{s,t} for s < t.
	RingElement commutator_class(Index s, Index t) const;

	bool operator==(TruncatedRing const &o) const
	{
		return matrix_ == o.matrix_ && orders_ == o.orders_;
	}

private:
	CoxeterMatrix matrix_;
	std::vector<Modulus> orders_;
};

/// Normal-form element c0 + sum c1[s] x_s + sum sq[s] x_s^2
/// + sum lo[p] x_t x_s + sum com[p] c_{s,t} (p the index of s < t).
class RingElement
{
public:
	BigInt c0;
	std::vector<BigInt> c1;
	std::vector<BigInt> sq;
	std::vector<BigInt> lo;
	std::vector<BigInt> com;

	bool operator==(RingElement const &) const = default;

	/// Lowest degree with a nonzero coefficient; 3 for zero.
	int min_degree() const;
};

/// Reduces commutator coordinates into canonical residues.
void canonicalize(TruncatedRing const &R, RingElement &a);

RingElement add(TruncatedRing const &R, RingElement const &a, RingElement const &b);
RingElement sub(TruncatedRing const &R, RingElement const &a, RingElement const &b);
RingElement scale(TruncatedRing const &R, BigInt const &k, RingElement const &a);
/// Throws DomainError on ring mismatch.
RingElement mul(TruncatedRing const &R, RingElement const &a, RingElement const &b);

/// An element 1 + w, w in the augmentation ideal.
class Unit
{
public:
	/// Throws DomainError unless the constant term is exactly 1.
	explicit Unit(RingElement e);
	RingElement const &element() const { return element_; }
	bool operator==(Unit const &) const = default;

private:
	RingElement element_;
};

Unit unit_mul(TruncatedRing const &R, Unit const &a, Unit const &b);
/// (1 + w)^-1 = 1 - w + w^2.
Unit unit_inverse(TruncatedRing const &R, Unit const &u);
Unit unit_pow(TruncatedRing const &R, Unit const &u, std::int64_t n);
/// a^-1 b^-1 a b, checked against the closed form 1 + uv - vu.
/// Throws InternalError on disagreement.
Unit unit_commutator(TruncatedRing const &R, Unit const &a, Unit const &b);

/// ((1+u)(1+v))^n by repeated multiplication against
/// 1 + nu + nv + S_{n-1}(u^2 + v^2 + vu) + S_n uv, S_k = k(k+1)/2.
bool power_formula_check(TruncatedRing const &R, RingElement const &u, RingElement const &v,
                         std::int64_t n);

/// (ba)^-n (ab)^n == [a,b]^n, exactly (degree 3 vanishes in R).
bool commutator_power_check(TruncatedRing const &R, Unit const &a, Unit const &b, std::int64_t n);

struct Letter
{
	Index generator = 0;
	int exponent = 1; // +1 or -1
};
using Word = std::vector<Letter>;

/// The alternating word s t s ... of length m.
Word alternating_word(Index s, Index t, std::uint64_t m);

/// Product of (1 + x_s)^{+-1} in order.
Unit magnus_eval(TruncatedRing const &R, std::span<Letter const> word);

/// One check per pair s < t with m(s,t) finite: the images of the two
/// alternating words of length m(s,t) agree.
Report check_relations(TruncatedRing const &R);

/// Image in R of an element of L[M]: u_s -> x_s, v_{s,t} -> c_{s,t}.
RingElement lie_image(TruncatedRing const &R, LieAlgebra const &L, LieElement const &a);

/// Additive order of a degree-2 element; nullopt for infinite order.
Modulus additive_order(TruncatedRing const &R, RingElement const &a);

/// Computational content of TGr(A[M]) ~ L[M]: relations, independence of
/// the degree-1 images, commutator-class orders equal to slot orders, and
/// bracket compatibility with the unit commutator.
Report verify_presentation(CoxeterMatrix const &m);

// -- randomized suites ------------------------------------------------------

using Rng = std::mt19937_64;

/// Random element with zero components below min_degree and coefficients
/// in [-bound, bound].
RingElement random_element(TruncatedRing const &R, Rng &rng, int min_degree, int bound = 3);

struct PropertySuiteOptions
{
	std::size_t trials = 1000;
	std::uint64_t seed = 0;
	std::int64_t max_power = 8;
};

/// Commutator powers, the power formula, the commutator closed form and
/// filtration, unit inverses, ring axioms and bracket compatibility on
/// seeded random inputs.
Report run_property_suite(TruncatedRing const &R, PropertySuiteOptions const &opt);

} // namespace artin
