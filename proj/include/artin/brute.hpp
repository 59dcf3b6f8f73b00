#pragma once

#include "artin/coxeter.hpp"
#include "artin/lie.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace artin {

/// Small dense matrix over F_p, row-major.
struct FieldMatrix
{
	std::size_t rows = 0;
	std::size_t cols = 0;
	std::uint32_t p = 2;
	std::vector<std::uint32_t> data;

	std::uint32_t operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
	std::uint32_t &operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
	FieldVector column(std::size_t c) const;
	bool operator==(FieldMatrix const &) const = default;
};

std::size_t field_rank(FieldMatrix m);

inline constexpr std::size_t kMaxEnumerationDim = 4;

/// Calls `visit` on every invertible n x n matrix over F_p, in row-major
/// lexicographic order of entries, until it returns false. Returns the
/// number of matrices visited. Requires p in {2,3,5} and 1 <= n <= 4.
std::uint64_t enumerate_invertible(std::size_t n, std::uint32_t p,
                                   std::function<bool(FieldMatrix const &)> const &visit);

/// |GL_n(F_p)|.
std::uint64_t general_linear_order(std::size_t n, std::uint32_t p);

struct FieldIsoWitness
{
	FieldMatrix F1; // columns: images of u_s
	FieldMatrix F2; // columns: images of source slots
};

/// Images of source brackets under F1 satisfy the target relations and
/// the forced degree-2 map is invertible.
bool verify_field_iso(FieldLieAlgebra const &src, FieldLieAlgebra const &dst,
                      FieldIsoWitness const &w);

/// First F1 in enumeration order inducing an isomorphism
/// L_{F_p}[M] -> L_{F_p}[N]. Both matrices must be right-angled.
std::optional<FieldIsoWitness> brute_lie_iso_field(CoxeterMatrix const &m,
                                                   CoxeterMatrix const &n, std::uint32_t p);

} // namespace artin
