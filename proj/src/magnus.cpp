#include "artin/magnus.hpp"
#include "artin/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace artin {

namespace {

std::size_t pairs_of(std::size_t n) { return n * (n - 1) / 2; }

std::vector<Modulus> orders_from_matrix(CoxeterMatrix const &m)
{
	if (!is_even(m))
		throw DomainError("truncated ring requires an even Coxeter matrix, got " + m.to_string());
	std::vector<Modulus> out;
	for (Index s = 0; s < m.size(); ++s)
		for (Index t = s + 1; t < m.size(); ++t)
		{
			Entry const e = m(s, t);
			out.push_back(e.is_infinite() ? Modulus{} : Modulus{e.value() / 2});
		}
	return out;
}

} // namespace

TruncatedRing::TruncatedRing(CoxeterMatrix m) : matrix_(std::move(m))
{
	orders_ = orders_from_matrix(matrix_);
}

TruncatedRing::TruncatedRing(CoxeterMatrix m, std::vector<Modulus> commutator_orders)
    : matrix_(std::move(m)), orders_(std::move(commutator_orders))
{
	if (orders_.size() != pairs_of(matrix_.size()))
		throw DomainError("truncated ring: expected one commutator order per pair");
	for (Modulus const &o : orders_)
		if (o && *o == 0)
			throw DomainError("truncated ring: commutator order must be positive");
}

std::size_t TruncatedRing::pair_index(Index s, Index t) const
{
	std::size_t const n = rank();
	if (!(s < t && t < n))
		throw DomainError("pair_index requires s < t < n");
	return s * n - s * (s + 1) / 2 + (t - s - 1);
}

RingElement TruncatedRing::zero() const
{
	RingElement e;
	e.c0 = 0;
	e.c1.assign(rank(), 0);
	e.sq.assign(rank(), 0);
	e.lo.assign(pair_count(), 0);
	e.com.assign(pair_count(), 0);
	return e;
}

RingElement TruncatedRing::one() const
{
	RingElement e = zero();
	e.c0 = 1;
	return e;
}

RingElement TruncatedRing::x(Index s) const
{
	if (s >= rank())
		throw DomainError("x: generator out of range");
	RingElement e = zero();
	e.c1[s] = 1;
	return e;
}

RingElement TruncatedRing::commutator_class(Index s, Index t) const
{
	RingElement e = zero();
	e.com[pair_index(s, t)] = 1;
	canonicalize(*this, e);
	return e;
}

int RingElement::min_degree() const
{
	auto nz = [](std::vector<BigInt> const &v) {
		return std::any_of(v.begin(), v.end(), [](BigInt const &x) { return x != 0; });
	};
	if (c0 != 0)
		return 0;
	if (nz(c1))
		return 1;
	if (nz(sq) || nz(lo) || nz(com))
		return 2;
	return 3;
}

void canonicalize(TruncatedRing const &R, RingElement &a)
{
	for (std::size_t p = 0; p < R.pair_count(); ++p)
		if (Modulus const &o = R.commutator_order(p))
			a.com[p] = mod_floor(a.com[p], BigInt(*o));
}

namespace {

void check_shape(TruncatedRing const &R, RingElement const &a)
{
	if (a.c1.size() != R.rank() || a.sq.size() != R.rank() || a.lo.size() != R.pair_count() ||
	    a.com.size() != R.pair_count())
		throw DomainError("ring element does not belong to this ring");
}

template <class Op>
RingElement combine(TruncatedRing const &R, RingElement const &a, RingElement const &b, Op op)
{
	check_shape(R, a);
	check_shape(R, b);
	RingElement out = R.zero();
	out.c0 = op(a.c0, b.c0);
	auto zip = [&](std::vector<BigInt> &o, std::vector<BigInt> const &x,
	               std::vector<BigInt> const &y) {
		for (std::size_t i = 0; i < o.size(); ++i)
			o[i] = op(x[i], y[i]);
	};
	zip(out.c1, a.c1, b.c1);
	zip(out.sq, a.sq, b.sq);
	zip(out.lo, a.lo, b.lo);
	zip(out.com, a.com, b.com);
	canonicalize(R, out);
	return out;
}

} // namespace

RingElement add(TruncatedRing const &R, RingElement const &a, RingElement const &b)
{
	return combine(R, a, b, [](BigInt const &x, BigInt const &y) { return BigInt(x + y); });
}

RingElement sub(TruncatedRing const &R, RingElement const &a, RingElement const &b)
{
	return combine(R, a, b, [](BigInt const &x, BigInt const &y) { return BigInt(x - y); });
}

RingElement scale(TruncatedRing const &R, BigInt const &k, RingElement const &a)
{
	return combine(R, a, a, [&k](BigInt const &x, BigInt const &) { return BigInt(k * x); });
}

RingElement mul(TruncatedRing const &R, RingElement const &a, RingElement const &b)
{
	check_shape(R, a);
	check_shape(R, b);
	std::size_t const n = R.rank();
	RingElement out = R.zero();
	out.c0 = a.c0 * b.c0;
	for (std::size_t i = 0; i < n; ++i)
	{
		out.c1[i] = a.c0 * b.c1[i] + b.c0 * a.c1[i];
		out.sq[i] = a.c0 * b.sq[i] + b.c0 * a.sq[i];
	}
	for (std::size_t p = 0; p < R.pair_count(); ++p)
	{
		out.lo[p] = a.c0 * b.lo[p] + b.c0 * a.lo[p];
		out.com[p] = a.c0 * b.com[p] + b.c0 * a.com[p];
	}
	for (Index i = 0; i < n; ++i)
	{
		if (a.c1[i] == 0)
			continue;
		for (Index j = 0; j < n; ++j)
		{
			if (b.c1[j] == 0)
				continue;
			BigInt const k = a.c1[i] * b.c1[j];
			if (i == j)
				out.sq[i] += k;
			else if (i > j)
				out.lo[R.pair_index(j, i)] += k; // already x_t x_s with s < t
			else
			{
				// x_i x_j = x_j x_i + c_{i,j}
				std::size_t const p = R.pair_index(i, j);
				out.lo[p] += k;
				out.com[p] += k;
			}
		}
	}
	canonicalize(R, out);
	return out;
}

// -- units --------------------------------------------------------------------

Unit::Unit(RingElement e) : element_(std::move(e))
{
	if (element_.c0 != 1)
		throw DomainError("unit must have constant term 1");
}

Unit unit_mul(TruncatedRing const &R, Unit const &a, Unit const &b)
{
	return Unit(mul(R, a.element(), b.element()));
}

Unit unit_inverse(TruncatedRing const &R, Unit const &u)
{
	RingElement const w = sub(R, u.element(), R.one());
	RingElement inv = add(R, sub(R, R.one(), w), mul(R, w, w));
	return Unit(std::move(inv));
}

Unit unit_pow(TruncatedRing const &R, Unit const &u, std::int64_t n)
{
	Unit const base = n < 0 ? unit_inverse(R, u) : u;
	Unit acc(R.one());
	for (std::int64_t i = 0; i < (n < 0 ? -n : n); ++i)
		acc = unit_mul(R, acc, base);
	return acc;
}

namespace {

RingElement commutator_direct(TruncatedRing const &R, Unit const &a, Unit const &b)
{
	Unit const ai = unit_inverse(R, a);
	Unit const bi = unit_inverse(R, b);
	return unit_mul(R, unit_mul(R, unit_mul(R, ai, bi), a), b).element();
}

RingElement commutator_closed(TruncatedRing const &R, Unit const &a, Unit const &b)
{
	RingElement const u = sub(R, a.element(), R.one());
	RingElement const v = sub(R, b.element(), R.one());
	return add(R, R.one(), sub(R, mul(R, u, v), mul(R, v, u)));
}

BigInt triangular(std::int64_t k) { return BigInt(k) * BigInt(k + 1) / 2; }

} // namespace

Unit unit_commutator(TruncatedRing const &R, Unit const &a, Unit const &b)
{
	RingElement direct = commutator_direct(R, a, b);
	if (direct != commutator_closed(R, a, b))
		throw InternalError("unit_commutator: direct product disagrees with 1 + uv - vu");
	return Unit(std::move(direct));
}

bool power_formula_check(TruncatedRing const &R, RingElement const &u, RingElement const &v,
                         std::int64_t n)
{
	if (u.c0 != 0 || v.c0 != 0)
		throw DomainError("power_formula_check: u and v must lie in the augmentation ideal");
	if (n < 1)
		throw DomainError("power_formula_check: n must be >= 1");
	Unit const a(add(R, R.one(), u));
	Unit const b(add(R, R.one(), v));
	RingElement const lhs = unit_pow(R, unit_mul(R, a, b), n).element();

	BigInt const bn(n);
	RingElement rhs = add(R, R.one(), add(R, scale(R, bn, u), scale(R, bn, v)));
	RingElement const quad = add(R, add(R, mul(R, u, u), mul(R, v, v)), mul(R, v, u));
	rhs = add(R, rhs, scale(R, triangular(n - 1), quad));
	rhs = add(R, rhs, scale(R, triangular(n), mul(R, u, v)));
	return lhs == rhs;
}

bool commutator_power_check(TruncatedRing const &R, Unit const &a, Unit const &b, std::int64_t n)
{
	if (n < 1)
		throw DomainError("commutator_power_check: n must be >= 1");
	Unit const ab = unit_mul(R, a, b);
	Unit const ba = unit_mul(R, b, a);
	Unit const lhs = unit_mul(R, unit_pow(R, ba, -n), unit_pow(R, ab, n));
	Unit const rhs = unit_pow(R, unit_commutator(R, a, b), n);
	return lhs == rhs;
}

// -- words and the Magnus map ---------------------------------------------------

Word alternating_word(Index s, Index t, std::uint64_t m)
{
	Word w;
	w.reserve(m);
	for (std::uint64_t i = 0; i < m; ++i)
		w.push_back(Letter{i % 2 == 0 ? s : t, 1});
	return w;
}

Unit magnus_eval(TruncatedRing const &R, std::span<Letter const> word)
{
	Unit acc(R.one());
	for (Letter const &l : word)
	{
		if (l.exponent != 1 && l.exponent != -1)
			throw DomainError("magnus_eval: exponents must be +1 or -1");
		Unit g(add(R, R.one(), R.x(l.generator)));
		acc = unit_mul(R, acc, l.exponent == 1 ? g : unit_inverse(R, g));
	}
	return acc;
}

Report check_relations(TruncatedRing const &R)
{
	Report rep;
	CoxeterMatrix const &m = R.matrix();
	for (Index s = 0; s < m.size(); ++s)
		for (Index t = s + 1; t < m.size(); ++t)
		{
			Entry const e = m(s, t);
			if (e.is_infinite())
				continue;
			Word const left = alternating_word(s, t, e.value());
			Word const right = alternating_word(t, s, e.value());
			bool const ok = magnus_eval(R, left) == magnus_eval(R, right);
			rep.add("relation(" + std::to_string(s) + "," + std::to_string(t) + ")", ok,
			        "m = " + e.to_string());
		}
	return rep;
}

RingElement lie_image(TruncatedRing const &R, LieAlgebra const &L, LieElement const &a)
{
	if (R.matrix() != L.matrix())
		throw DomainError("lie_image: ring and algebra come from different matrices");
	RingElement out = R.zero();
	for (Index s = 0; s < L.rank(); ++s)
		out.c1[s] = a.deg1()[s];
	for (std::size_t i = 0; i < L.slots().size(); ++i)
	{
		Slot const &sl = L.slots()[i];
		out.com[R.pair_index(sl.s, sl.t)] = a.deg2()[i];
	}
	canonicalize(R, out);
	return out;
}

Modulus additive_order(TruncatedRing const &R, RingElement const &a)
{
	check_shape(R, a);
	if (a.min_degree() < 2)
		return std::nullopt;
	auto nz = [](BigInt const &x) { return x != 0; };
	if (std::any_of(a.sq.begin(), a.sq.end(), nz) || std::any_of(a.lo.begin(), a.lo.end(), nz))
		return std::nullopt;
	std::uint64_t order = 1;
	for (std::size_t p = 0; p < R.pair_count(); ++p)
	{
		if (a.com[p] == 0)
			continue;
		Modulus const &o = R.commutator_order(p);
		if (!o)
			return std::nullopt;
		BigInt const g = gcd(mod_floor(a.com[p], BigInt(*o)), BigInt(*o));
		std::uint64_t const part = *o / g.convert_to<std::uint64_t>();
		order = std::lcm(order, part);
	}
	return order;
}

Report verify_presentation(CoxeterMatrix const &m)
{
	TruncatedRing const R(m);
	LieAlgebra const L(m);
	std::size_t const n = m.size();
	Report rep;

	Report const rel = check_relations(R);
	{
		std::size_t const ok = std::count_if(rel.checks.begin(), rel.checks.end(),
		                                     [](Check const &c) { return c.pass; });
		std::string detail = std::to_string(ok) + "/" + std::to_string(rel.checks.size()) +
		                     " relations hold";
		for (Check const &c : rel.checks)
			if (!c.pass)
			{
				detail += "; first failure " + c.name;
				break;
			}
		rep.add("relations", rel.all_pass(), detail);
	}

	std::vector<Unit> images;
	{
		IntMatrix deg1(n, n);
		bool exact = true;
		for (Index s = 0; s < n; ++s)
		{
			Letter const l{s, 1};
			images.push_back(magnus_eval(R, std::span<Letter const>(&l, 1)));
			RingElement const w = sub(R, images.back().element(), R.one());
			for (Index t = 0; t < n; ++t)
				deg1(t, s) = w.c1[t];
			exact = exact && w == R.x(s);
		}
		std::size_t const rk = rational_rank(deg1);
		rep.add("degree1_independent", rk == n && exact,
		        "rank " + std::to_string(rk) + " of " + std::to_string(n) +
		            (exact ? ", images are x_s" : ", images differ from x_s"));
	}

	{
		bool ok = true;
		std::string orders;
		std::string failure;
		for (Index s = 0; s < n; ++s)
			for (Index t = s + 1; t < n; ++t)
			{
				RingElement const c =
				    sub(R, unit_commutator(R, images[s], images[t]).element(), R.one());
				Modulus const ord = additive_order(R, c);
				bool pair_ok;
				if (auto sl = L.slot_of(s, t))
				{
					Modulus const want = L.slots()[*sl].modulus;
					pair_ok = c.min_degree() >= 2 && ord == want;
					orders += (orders.empty() ? "" : ",") + (ord ? std::to_string(*ord) : "inf");
				}
				else
					pair_ok = c.min_degree() == 3; // m(s,t) = 2: commutator vanishes
				if (!pair_ok && failure.empty())
					failure = "pair (" + std::to_string(s) + "," + std::to_string(t) + ")";
				ok = ok && pair_ok;
			}
		rep.add("commutator_orders", ok, ok ? "orders (" + orders + ")" : failure);
	}

	{
		std::string failure;
		for (Index s = 0; s < n && failure.empty(); ++s)
			for (Index t = s + 1; t < n && failure.empty(); ++t)
			{
				Unit const a(add(R, R.one(), R.x(s)));
				Unit const b(add(R, R.one(), R.x(t)));
				RingElement const lhs = sub(R, unit_commutator(R, a, b).element(), R.one());
				RingElement const rhs = lie_image(R, L, bracket(L, L.u(s), L.u(t)));
				if (lhs != rhs)
					failure = "pair (" + std::to_string(s) + "," + std::to_string(t) + ")";
			}
		rep.add("bracket_image", failure.empty(),
		        failure.empty() ? "[1+x_s,1+x_t] - 1 = image of [u_s,u_t]" : failure);
	}
	return rep;
}

// -- randomized suites ------------------------------------------------------------

RingElement random_element(TruncatedRing const &R, Rng &rng, int min_degree, int bound)
{
	std::uniform_int_distribution<int> coef(-bound, bound);
	RingElement e = R.zero();
	if (min_degree <= 0)
		e.c0 = coef(rng);
	if (min_degree <= 1)
		for (auto &c : e.c1)
			c = coef(rng);
	if (min_degree <= 2)
	{
		for (auto &c : e.sq)
			c = coef(rng);
		for (auto &c : e.lo)
			c = coef(rng);
		for (auto &c : e.com)
			c = coef(rng);
	}
	canonicalize(R, e);
	return e;
}

namespace {

LieElement random_lie(LieAlgebra const &L, Rng &rng, int bound)
{
	std::uniform_int_distribution<int> coef(-bound, bound);
	std::vector<BigInt> d1(L.rank()), d2(L.slots().size());
	for (auto &c : d1)
		c = coef(rng);
	for (auto &c : d2)
		c = coef(rng);
	return L.element(std::move(d1), std::move(d2));
}

struct Tally
{
	std::string name;
	std::size_t pass = 0;
	std::size_t total = 0;
	void record(bool ok)
	{
		++total;
		pass += ok ? 1 : 0;
	}
};

} // namespace

Report run_property_suite(TruncatedRing const &R, PropertySuiteOptions const &opt)
{
	if (opt.max_power < 1)
		throw DomainError("run_property_suite: max_power must be >= 1");
	Rng rng(opt.seed);
	std::uniform_int_distribution<std::int64_t> power(1, opt.max_power);
	std::uniform_int_distribution<int> filtration(1, 2);

	std::optional<LieAlgebra> L;
	if (is_even(R.matrix()))
	{
		// bracket compatibility only makes sense for the ring built from M
		if (R == TruncatedRing(R.matrix()))
			L.emplace(R.matrix());
	}

	Tally cpow{"commutator_power"}, pformula{"power_formula"}, closed{"commutator_closed_form"},
	    filt{"commutator_filtration"}, inverse{"unit_inverse"}, assoc{"ring_associative"},
	    distrib{"ring_distributive"}, compat{"bracket_compatible"};

	for (std::size_t trial = 0; trial < opt.trials; ++trial)
	{
		RingElement const u = random_element(R, rng, 1);
		RingElement const v = random_element(R, rng, 1);
		std::int64_t const n = power(rng);
		Unit const a(add(R, R.one(), u));
		Unit const b(add(R, R.one(), v));

		pformula.record(power_formula_check(R, u, v, n));
		cpow.record(commutator_power_check(R, a, b, n));
		closed.record(commutator_direct(R, a, b) == commutator_closed(R, a, b));

		int const k = filtration(rng), l = filtration(rng);
		Unit const ak(add(R, R.one(), random_element(R, rng, k)));
		Unit const bl(add(R, R.one(), random_element(R, rng, l)));
		RingElement const c = sub(R, commutator_direct(R, ak, bl), R.one());
		filt.record(c.min_degree() >= std::min(k + l, 3));

		Unit const ai = unit_inverse(R, a);
		inverse.record(unit_mul(R, a, ai).element() == R.one() &&
		               unit_mul(R, ai, a).element() == R.one());

		RingElement const x = random_element(R, rng, 0);
		RingElement const y = random_element(R, rng, 0);
		RingElement const z = random_element(R, rng, 0);
		assoc.record(mul(R, mul(R, x, y), z) == mul(R, x, mul(R, y, z)));
		distrib.record(mul(R, x, add(R, y, z)) == add(R, mul(R, x, y), mul(R, x, z)) &&
		               mul(R, add(R, x, y), z) == add(R, mul(R, x, z), mul(R, y, z)));

		if (L)
		{
			LieElement const la = random_lie(*L, rng, 3);
			LieElement const lb = random_lie(*L, rng, 3);
			Unit const ia(add(R, R.one(), lie_image(R, *L, la)));
			Unit const ib(add(R, R.one(), lie_image(R, *L, lb)));
			RingElement const lhs = lie_image(R, *L, bracket(*L, la, lb));
			RingElement const rhs = sub(R, commutator_direct(R, ia, ib), R.one());
			compat.record(lhs == rhs);
		}
	}

	Report rep;
	std::string const tag = " (seed " + std::to_string(opt.seed) + ")";
	for (Tally const *t : {&cpow, &pformula, &closed, &filt, &inverse, &assoc, &distrib, &compat})
	{
		if (t->total == 0)
			continue;
		rep.add(t->name, t->pass == t->total,
		        std::to_string(t->pass) + "/" + std::to_string(t->total) + tag);
	}
	return rep;
}

} // namespace artin
