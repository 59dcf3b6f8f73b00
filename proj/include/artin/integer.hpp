#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace artin {

using BigInt = boost::multiprecision::cpp_int;

/// Least non-negative residue of a modulo m (m > 0).
BigInt mod_floor(BigInt const &a, BigInt const &m);

bool is_prime(std::uint64_t n);

/// Prime factorisation by trial division, as (prime, exponent) pairs in
/// increasing prime order. n = 1 yields an empty list; n = 0 is rejected.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::string to_string(BigInt const &v);

/// Dense row-major integer matrix.
class IntMatrix
{
public:
	IntMatrix() = default;
	IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

	static IntMatrix identity(std::size_t n);
	static IntMatrix from_rows(std::vector<std::vector<BigInt>> const &rows);

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }

	BigInt &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
	BigInt const &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

	std::vector<BigInt> column(std::size_t c) const;

	/// Throws DomainError on shape mismatch.
	IntMatrix operator*(IntMatrix const &o) const;
	bool operator==(IntMatrix const &) const = default;

private:
	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	std::vector<BigInt> data_;
};

/// Rank over the rationals (fraction-free elimination).
std::size_t rational_rank(IntMatrix m);

} // namespace artin
