#include "artin/lie.hpp"
#include "artin/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace artin {

std::string to_string(Modulus const &m) { return m ? "mod " + std::to_string(*m) : "free"; }

// -- L[M] ---------------------------------------------------------------------

LieAlgebra::LieAlgebra(CoxeterMatrix m) : matrix_(std::move(m))
{
	if (!is_even(matrix_))
		throw DomainError("L[M] requires an even Coxeter matrix, got " + matrix_.to_string());
	std::size_t const n = matrix_.size();
	slot_table_.assign(n * n, std::nullopt);
	for (Index s = 0; s < n; ++s)
		for (Index t = s + 1; t < n; ++t)
		{
			Entry const e = matrix_(s, t);
			if (e == Entry(2))
				continue;
			Modulus mod = e.is_infinite() ? Modulus{} : Modulus{e.value() / 2};
			slot_table_[s * n + t] = slot_table_[t * n + s] = slots_.size();
			slots_.push_back(Slot{s, t, mod});
		}
}

std::optional<std::size_t> LieAlgebra::slot_of(Index s, Index t) const
{
	if (s >= rank() || t >= rank())
		throw DomainError("slot_of: index out of range");
	return slot_table_[s * rank() + t];
}

LieElement LieAlgebra::zero() const
{
	LieElement e;
	e.deg1_.assign(rank(), 0);
	e.deg2_.assign(slots_.size(), 0);
	return e;
}

LieElement LieAlgebra::u(Index s) const
{
	if (s >= rank())
		throw DomainError("u: index out of range");
	LieElement e = zero();
	e.deg1_[s] = 1;
	return e;
}

LieElement LieAlgebra::v(std::size_t slot) const
{
	if (slot >= slots_.size())
		throw DomainError("v: slot out of range");
	LieElement e = zero();
	e.deg2_[slot] = 1;
	return e;
}

LieElement LieAlgebra::element(std::vector<BigInt> deg1, std::vector<BigInt> deg2) const
{
	if (deg1.size() != rank() || deg2.size() != slots_.size())
		throw DomainError("element: coordinate vector sizes do not match the algebra");
	LieElement e;
	e.deg1_ = std::move(deg1);
	e.deg2_ = std::move(deg2);
	for (std::size_t i = 0; i < slots_.size(); ++i)
		if (slots_[i].modulus)
			e.deg2_[i] = mod_floor(e.deg2_[i], BigInt(*slots_[i].modulus));
	return e;
}

bool LieElement::is_zero() const
{
	auto nz = [](BigInt const &x) { return x != 0; };
	return std::none_of(deg1_.begin(), deg1_.end(), nz) &&
	       std::none_of(deg2_.begin(), deg2_.end(), nz);
}

LieAlgebra build_lie(CoxeterMatrix const &m) { return LieAlgebra(m); }

namespace {

void check_member(LieAlgebra const &L, LieElement const &a)
{
	if (a.deg1().size() != L.rank() || a.deg2().size() != L.slots().size())
		throw DomainError("element does not belong to this algebra");
}

} // namespace

LieElement bracket(LieAlgebra const &L, LieElement const &a, LieElement const &b)
{
	check_member(L, a);
	check_member(L, b);
	std::vector<BigInt> deg2(L.slots().size());
	for (std::size_t i = 0; i < L.slots().size(); ++i)
	{
		Slot const &sl = L.slots()[i];
		deg2[i] = a.deg1()[sl.s] * b.deg1()[sl.t] - a.deg1()[sl.t] * b.deg1()[sl.s];
	}
	return L.element(std::vector<BigInt>(L.rank(), 0), std::move(deg2));
}

LieElement add(LieAlgebra const &L, LieElement const &a, LieElement const &b)
{
	check_member(L, a);
	check_member(L, b);
	std::vector<BigInt> d1(L.rank()), d2(L.slots().size());
	for (std::size_t i = 0; i < d1.size(); ++i)
		d1[i] = a.deg1()[i] + b.deg1()[i];
	for (std::size_t i = 0; i < d2.size(); ++i)
		d2[i] = a.deg2()[i] + b.deg2()[i];
	return L.element(std::move(d1), std::move(d2));
}

LieElement scale(LieAlgebra const &L, BigInt const &k, LieElement const &a)
{
	check_member(L, a);
	std::vector<BigInt> d1(a.deg1()), d2(a.deg2());
	for (auto &x : d1)
		x *= k;
	for (auto &x : d2)
		x *= k;
	return L.element(std::move(d1), std::move(d2));
}

IndexSet support(LieElement const &a)
{
	IndexSet out;
	for (Index s = 0; s < a.deg1().size(); ++s)
		if (a.deg1()[s] != 0)
			out.push_back(s);
	return out;
}

IndexSet p_support(LieElement const &a, std::uint64_t p)
{
	if (!is_prime(p))
		throw DomainError("p_support: " + std::to_string(p) + " is not prime");
	IndexSet out;
	BigInt const bp(p);
	for (Index s = 0; s < a.deg1().size(); ++s)
		if (a.deg1()[s] % bp != 0)
			out.push_back(s);
	return out;
}

// -- L_{F_p}[M] ---------------------------------------------------------------

FieldLieAlgebra::FieldLieAlgebra(CoxeterMatrix m, std::uint32_t p) : matrix_(std::move(m)), p_(p)
{
	if (!is_right_angled(matrix_))
		throw DomainError("L_K[M] requires a right-angled matrix, got " + matrix_.to_string());
	if (!is_prime(p) || p >= (1u << 16))
		throw DomainError("field characteristic must be a prime below 2^16");
	std::size_t const n = matrix_.size();
	slot_table_.assign(n * n, std::nullopt);
	for (Index s = 0; s < n; ++s)
		for (Index t = s + 1; t < n; ++t)
			if (matrix_(s, t).is_infinite())
			{
				slot_table_[s * n + t] = slot_table_[t * n + s] = slots_.size();
				slots_.push_back(Slot{s, t, Modulus{p}});
			}
}

std::optional<std::size_t> FieldLieAlgebra::slot_of(Index s, Index t) const
{
	if (s >= rank() || t >= rank())
		throw DomainError("slot_of: index out of range");
	return slot_table_[s * rank() + t];
}

FieldVector FieldLieAlgebra::bracket(FieldVector const &a, FieldVector const &b) const
{
	if (a.size() != rank() || b.size() != rank())
		throw DomainError("bracket: degree-1 vector size mismatch");
	FieldVector out(slots_.size());
	for (std::size_t i = 0; i < slots_.size(); ++i)
	{
		Slot const &sl = slots_[i];
		std::uint64_t const x = std::uint64_t(a[sl.s]) * b[sl.t] % p_;
		std::uint64_t const y = std::uint64_t(a[sl.t]) * b[sl.s] % p_;
		out[i] = std::uint32_t((x + p_ - y) % p_);
	}
	return out;
}

std::vector<FieldVector> centralizer(FieldLieAlgebra const &L, FieldVector const &a)
{
	std::size_t const n = L.rank();
	if (a.size() != n)
		throw DomainError("centralizer: vector size mismatch");
	CoxeterMatrix const &m = L.matrix();

	IndexSet X;
	for (Index s = 0; s < n; ++s)
		if (a[s] % L.prime() != 0)
			X.push_back(s);

	// connected components of the inf-graph restricted to X
	std::vector<std::size_t> comp(n, n);
	std::size_t ncomp = 0;
	for (Index root : X)
	{
		if (comp[root] != n)
			continue;
		std::vector<Index> stack{root};
		comp[root] = ncomp;
		while (!stack.empty())
		{
			Index const s = stack.back();
			stack.pop_back();
			for (Index t : X)
				if (comp[t] == n && m(s, t).is_infinite())
				{
					comp[t] = ncomp;
					stack.push_back(t);
				}
		}
		++ncomp;
	}

	std::vector<FieldVector> basis(ncomp, FieldVector(n, 0));
	for (Index s : X)
		basis[comp[s]][s] = a[s] % L.prime();

	for (Index s = 0; s < n; ++s)
	{
		bool in_link = true;
		for (Index x : X)
			if (x == s || m(s, x) != Entry(2))
			{
				in_link = false;
				break;
			}
		if (in_link)
		{
			FieldVector e(n, 0);
			e[s] = 1;
			basis.push_back(std::move(e));
		}
	}
	return basis;
}

// -- derived matrices -----------------------------------------------------------

namespace {

void require_family(CoxeterMatrix const &m, Family f, char const *op)
{
	if (!in_family(m, f))
		throw DomainError(std::string(op) + ": matrix " + m.to_string() + " is not in E(" +
		                  std::to_string(f.c) + "," + std::to_string(f.d) + ")");
}

template <class Fn> CoxeterMatrix map_entries(CoxeterMatrix const &m, Fn fn)
{
	auto rows = m.rows();
	for (Index s = 0; s < m.size(); ++s)
		for (Index t = 0; t < m.size(); ++t)
			if (s != t)
				rows[s][t] = fn(rows[s][t]);
	return CoxeterMatrix(rows);
}

} // namespace

CoxeterMatrix dilate(CoxeterMatrix const &m, std::uint64_t d)
{
	require_family(m, Family{1, d}, "dilate");
	return map_entries(m, [d](Entry e) {
		if (e.is_infinite())
			return e;
		std::uint64_t const v = e.value();
		if (v == 2 || v == 2 * d)
			return Entry(2);
		return Entry(v / d); // 2d^r -> 2d^(r-1)
	});
}

CoxeterMatrix collapse_p(CoxeterMatrix const &m, std::uint64_t d)
{
	require_family(m, Family{1, d}, "collapse_p");
	return map_entries(m, [](Entry e) { return e == Entry(2) ? e : kInfinity; });
}

CoxeterMatrix contract_c(CoxeterMatrix const &m, Family f)
{
	require_family(m, f, "contract_c");
	return map_entries(m, [c = f.c](Entry e) { return e == Entry(2 * c) ? Entry(2) : e; });
}

std::vector<std::optional<std::size_t>> tensor_slot_map(LieAlgebra const &L, std::uint32_t p)
{
	if (!is_prime(p))
		throw DomainError("tensor: " + std::to_string(p) + " is not prime");
	std::vector<std::optional<std::size_t>> out;
	std::size_t next = 0;
	for (Slot const &sl : L.slots())
	{
		if (!sl.modulus || *sl.modulus % p == 0)
			out.push_back(next++);
		else
			out.push_back(std::nullopt);
	}
	return out;
}

FieldLieAlgebra tensor_field(LieAlgebra const &L, std::uint32_t p, std::uint64_t d)
{
	if (!is_prime(p))
		throw DomainError("tensor_field: " + std::to_string(p) + " is not prime");
	if (d % p != 0)
		throw DomainError("tensor_field: p = " + std::to_string(p) + " does not divide d = " +
		                  std::to_string(d));
	FieldLieAlgebra out(collapse_p(L.matrix(), d), p);
	auto const map = tensor_slot_map(L, p);
	std::size_t const survivors =
	    std::count_if(map.begin(), map.end(), [](auto const &x) { return x.has_value(); });
	if (survivors != out.slots().size())
		throw InternalError("tensor_field: " + std::to_string(survivors) +
		                    " surviving slots but M_(p) has " + std::to_string(out.slots().size()));
	for (std::size_t i = 0; i < map.size(); ++i)
		if (map[i])
		{
			Slot const &a = L.slots()[i];
			Slot const &b = out.slots()[*map[i]];
			if (a.s != b.s || a.t != b.t)
				throw InternalError("tensor_field: slot order mismatch");
		}
	return out;
}

// -- bracket tables ---------------------------------------------------------------

namespace {

template <class Alg, class Coord>
BracketTable table_from(Alg const &L, std::vector<Slot> slots, Coord coord)
{
	BracketTable tab;
	tab.rank = L.rank();
	tab.slots = std::move(slots);
	for (Index s = 0; s < L.rank(); ++s)
		for (Index t = s + 1; t < L.rank(); ++t)
			tab.constants.push_back(coord(s, t));
	return tab;
}

} // namespace

BracketTable bracket_table(LieAlgebra const &L)
{
	return table_from(L, L.slots(), [&](Index s, Index t) {
		return bracket(L, L.u(s), L.u(t)).deg2();
	});
}

BracketTable bracket_table(FieldLieAlgebra const &L)
{
	return table_from(L, L.slots(), [&](Index s, Index t) {
		FieldVector a(L.rank(), 0), b(L.rank(), 0);
		a[s] = 1;
		b[t] = 1;
		FieldVector const c = L.bracket(a, b);
		return std::vector<BigInt>(c.begin(), c.end());
	});
}

BracketTable scaled_bracket_table(LieAlgebra const &L, std::uint64_t d)
{
	if (d < 1)
		throw DomainError("scaled_bracket_table: d must be positive");
	// d L2 has generators d v; d (Z/n) = Z/(n / gcd(n,d)), d Z = Z.
	std::vector<Slot> slots;
	std::vector<std::optional<std::size_t>> keep;
	for (Slot const &sl : L.slots())
	{
		Modulus mod = sl.modulus;
		if (mod)
			mod = *mod / std::gcd(*mod, d);
		if (mod == 1u)
		{
			keep.push_back(std::nullopt);
			continue;
		}
		keep.push_back(slots.size());
		slots.push_back(Slot{sl.s, sl.t, mod});
	}
	return table_from(L, slots, [&](Index s, Index t) {
		// [u_s,u_t]^(d) = d [u_s,u_t]: coefficient k on v becomes k on d v
		LieElement const br = bracket(L, L.u(s), L.u(t));
		std::vector<BigInt> out(slots.size(), 0);
		for (std::size_t i = 0; i < keep.size(); ++i)
		{
			if (!keep[i])
				continue;
			Modulus const &mod = slots[*keep[i]].modulus;
			out[*keep[i]] = mod ? mod_floor(br.deg2()[i], BigInt(*mod)) : br.deg2()[i];
		}
		return out;
	});
}

BracketTable tensor_bracket_table(LieAlgebra const &L, std::uint32_t p)
{
	auto const map = tensor_slot_map(L, p);
	std::vector<Slot> slots;
	for (std::size_t i = 0; i < map.size(); ++i)
		if (map[i])
			slots.push_back(Slot{L.slots()[i].s, L.slots()[i].t, Modulus{p}});
	BigInt const bp(p);
	return table_from(L, slots, [&](Index s, Index t) {
		LieElement const br = bracket(L, L.u(s), L.u(t));
		std::vector<BigInt> out(slots.size(), 0);
		for (std::size_t i = 0; i < map.size(); ++i)
			if (map[i])
				out[*map[i]] = mod_floor(br.deg2()[i], bp);
		return out;
	});
}

// -- morphisms ------------------------------------------------------------------

namespace {

bool congruent(BigInt const &a, BigInt const &b, Modulus const &m)
{
	if (!m)
		return a == b;
	return mod_floor(a - b, BigInt(*m)) == 0;
}

std::string pair_str(Index a, Index b)
{
	return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// Checks P*Q == I with row i compared modulo mods[i].
std::optional<std::string> identity_mod(IntMatrix const &prod, std::vector<Slot> const &slots)
{
	for (std::size_t i = 0; i < prod.rows(); ++i)
		for (std::size_t j = 0; j < prod.cols(); ++j)
			if (!congruent(prod(i, j), i == j ? 1 : 0, slots[i].modulus))
				return "entry " + pair_str(i, j) + " = " + to_string(prod(i, j)) + " (" +
				       to_string(slots[i].modulus) + ")";
	return std::nullopt;
}

std::optional<std::string> well_defined(IntMatrix const &map, std::vector<Slot> const &from,
                                        std::vector<Slot> const &to, char const *name)
{
	for (std::size_t j = 0; j < from.size(); ++j)
	{
		if (!from[j].modulus)
			continue;
		BigInt const n(*from[j].modulus);
		for (std::size_t i = 0; i < to.size(); ++i)
			if (!congruent(n * map(i, j), 0, to[i].modulus))
				return std::string(name) + ": source slot " + pair_str(from[j].s, from[j].t) + " (" +
				       to_string(from[j].modulus) + ") maps to non-torsion-compatible coordinate on " +
				       pair_str(to[i].s, to[i].t);
	}
	return std::nullopt;
}

} // namespace

Report verify_morphism(LieAlgebra const &src, LieAlgebra const &dst, MorphismWitness const &w)
{
	std::size_t const n = src.rank();
	std::size_t const ks = src.slots().size();
	std::size_t const kd = dst.slots().size();
	auto shape = [](IntMatrix const &m, std::size_t r, std::size_t c) {
		return m.rows() == r && m.cols() == c;
	};
	if (dst.rank() != n || !shape(w.F, n, n) || !shape(w.G, n, n) || !shape(w.f2, kd, ks) ||
	    !shape(w.g2, ks, kd))
		throw DomainError("verify_morphism: witness shape does not match the algebras");

	Report rep;

	IntMatrix const id = IntMatrix::identity(n);
	bool const inv1 = w.F * w.G == id && w.G * w.F == id;
	rep.add("degree1_inverse", inv1, inv1 ? "F G = G F = I" : "F and G are not mutually inverse");

	{
		auto const a = identity_mod(w.f2 * w.g2, dst.slots());
		auto const b = identity_mod(w.g2 * w.f2, src.slots());
		std::string detail = "f2 g2 = id, g2 f2 = id";
		if (a)
			detail = "f2 g2: " + *a;
		else if (b)
			detail = "g2 f2: " + *b;
		rep.add("degree2_inverse", !a && !b, detail);
	}

	{
		auto const a = well_defined(w.f2, src.slots(), dst.slots(), "f2");
		auto const b = well_defined(w.g2, dst.slots(), src.slots(), "g2");
		rep.add("well_defined", !a && !b, a ? *a : b ? *b : "f2 and g2 respect torsion");
	}

	{
		std::string failure;
		for (Index i = 0; i < n && failure.empty(); ++i)
			for (Index j = i + 1; j < n && failure.empty(); ++j)
			{
				LieElement const fi = dst.element(w.F.column(i), std::vector<BigInt>(kd, 0));
				LieElement const fj = dst.element(w.F.column(j), std::vector<BigInt>(kd, 0));
				LieElement const lhs = bracket(dst, fi, fj);
				std::vector<BigInt> img(kd, 0);
				if (auto sl = src.slot_of(i, j))
				{
					LieElement const b = bracket(src, src.u(i), src.u(j));
					for (std::size_t r = 0; r < kd; ++r)
						img[r] = w.f2(r, *sl) * b.deg2()[*sl];
				}
				LieElement const rhs = dst.element(std::vector<BigInt>(n, 0), std::move(img));
				if (!(lhs == rhs))
					failure = "pair " + pair_str(i, j);
			}
		rep.add("bracket_preserved", failure.empty(),
		        failure.empty() ? "[F u_i, F u_j] = f2([u_i, u_j]) for all i < j" : failure);
	}
	return rep;
}

MorphismWitness permutation_morphism(LieAlgebra const &src, LieAlgebra const &dst,
                                     IsoWitness const &perm)
{
	if (!verify_iso(src.matrix(), dst.matrix(), perm))
		throw DomainError("permutation_morphism: permutation is not a matrix isomorphism");
	std::size_t const n = src.rank();
	std::size_t const ks = src.slots().size();
	std::size_t const kd = dst.slots().size();
	MorphismWitness w{IntMatrix(n, n), IntMatrix(n, n), IntMatrix(kd, ks), IntMatrix(ks, kd)};
	for (Index s = 0; s < n; ++s)
	{
		w.F(perm.permutation[s], s) = 1;
		w.G(s, perm.permutation[s]) = 1;
	}
	for (std::size_t j = 0; j < ks; ++j)
	{
		Slot const &sl = src.slots()[j];
		Index const a = perm.permutation[sl.s];
		Index const b = perm.permutation[sl.t];
		auto const target = dst.slot_of(a, b);
		if (!target)
			throw InternalError("permutation_morphism: slot has no image");
		int const sign = a < b ? 1 : -1;
		w.f2(*target, j) = sign;
		w.g2(j, *target) = sign;
	}
	return w;
}

bool correspondence(LieAlgebra const &src, LieAlgebra const &dst, MorphismWitness const &w,
                    Index s, Index x, std::optional<std::uint64_t> p)
{
	if (!verify_morphism(src, dst, w).all_pass())
		throw DomainError("correspondence: witness does not verify");
	if (s >= src.rank() || x >= dst.rank())
		throw DomainError("correspondence: index out of range");
	LieElement const image = dst.element(w.F.column(s), std::vector<BigInt>(dst.slots().size(), 0));
	LieElement const preimage =
	    src.element(w.G.column(x), std::vector<BigInt>(src.slots().size(), 0));
	auto supp = [&](LieElement const &e) { return p ? p_support(e, *p) : support(e); };
	auto contains = [](IndexSet const &set, Index i) {
		return std::binary_search(set.begin(), set.end(), i);
	};
	return contains(supp(preimage), s) && contains(supp(image), x);
}

// -- invariants -----------------------------------------------------------------

TorsionInvariant torsion_invariant(LieAlgebra const &L)
{
	TorsionInvariant inv;
	for (Slot const &sl : L.slots())
	{
		if (!sl.modulus)
		{
			++inv.free_rank;
			continue;
		}
		for (auto [q, e] : factorize(*sl.modulus))
		{
			std::uint64_t pp = 1;
			for (unsigned i = 0; i < e; ++i)
				pp *= q;
			inv.prime_powers.push_back(pp);
		}
	}
	std::sort(inv.prime_powers.begin(), inv.prime_powers.end());
	return inv;
}

std::string to_string(TorsionInvariant const &t)
{
	std::ostringstream os;
	os << "torsion {";
	for (std::size_t i = 0; i < t.prime_powers.size(); ++i)
		os << (i ? "," : "") << t.prime_powers[i];
	os << "} free rank " << t.free_rank;
	return os.str();
}

namespace {

// class count and multiset of (size, label), compared between M and N
std::string reduced_summary(CoxeterMatrix const &m)
{
	ReducedMatrix const r = reduce(m);
	std::vector<std::pair<std::size_t, Entry>> cls;
	for (std::size_t i = 0; i < r.sizes.size(); ++i)
		cls.emplace_back(r.sizes[i], r.labels[i]);
	std::sort(cls.begin(), cls.end());
	std::ostringstream os;
	os << r.sizes.size() << " classes {";
	for (std::size_t i = 0; i < cls.size(); ++i)
		os << (i ? "," : "") << cls[i].first << ":" << cls[i].second.to_string();
	os << "}";
	return os.str();
}

} // namespace

FamilyIsoResult lie_iso_family(CoxeterMatrix const &m, CoxeterMatrix const &n, Family f)
{
	check_family(f);
	require_family(m, f, "lie_iso_family");
	require_family(n, f, "lie_iso_family");
	LieAlgebra const Lm(m), Ln(n);

	FamilyIsoResult res;
	if (auto perm = matrices_isomorphic(m, n))
	{
		MorphismWitness w = permutation_morphism(Lm, Ln, *perm);
		Report const rep = verify_morphism(Lm, Ln, w);
		if (!rep.all_pass())
			throw InternalError("lie_iso_family: permutation-induced witness failed to verify");
		res.isomorphic = true;
		res.basis = FamilyIsoResult::Basis::Witness;
		res.witness = std::move(w);
		res.permutation = std::move(perm);
		res.detail = "permutation-induced isomorphism verified";
		return res;
	}

	res.isomorphic = false;
	if (Lm.rank() != Ln.rank())
	{
		res.basis = FamilyIsoResult::Basis::Invariant;
		res.invariant = "degree1_rank";
		res.detail = std::to_string(Lm.rank()) + " vs " + std::to_string(Ln.rank());
		return res;
	}
	TorsionInvariant const tm = torsion_invariant(Lm), tn = torsion_invariant(Ln);
	if (!(tm == tn))
	{
		res.basis = FamilyIsoResult::Basis::Invariant;
		res.invariant = "torsion_invariant";
		res.detail = to_string(tm) + " vs " + to_string(tn);
		return res;
	}
	std::string const rm = reduced_summary(m), rn = reduced_summary(n);
	if (rm != rn)
	{
		res.basis = FamilyIsoResult::Basis::Invariant;
		res.invariant = "reduced_matrix";
		res.detail = rm + " vs " + rn;
		return res;
	}
	res.basis = FamilyIsoResult::Basis::Theorem;
	res.detail = "matrices are not isomorphic; within E(" + std::to_string(f.c) + "," +
	             std::to_string(f.d) +
	             ") isomorphic Lie rings force isomorphic matrices";
	return res;
}

} // namespace artin
