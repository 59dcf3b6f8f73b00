#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace artin {

class Error : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

/// Malformed input document or an invariant violation in parsed data.
/// Matrix validation failures carry the offending coordinates.
class ParseError : public Error
{
public:
	explicit ParseError(std::string const &what) : Error(what) {}
	ParseError(std::string const &what, std::size_t row, std::size_t col);

	std::optional<std::size_t> row() const { return row_; }
	std::optional<std::size_t> col() const { return col_; }

private:
	std::optional<std::size_t> row_;
	std::optional<std::size_t> col_;
};

/// A precondition of an operation does not hold (wrong family, bad prime,
/// out-of-range index, enumeration guard, shape mismatch).
class DomainError : public Error
{
public:
	using Error::Error;
};

/// A consistency check that the mathematics guarantees has failed.
/// Always a bug, never a property of the input.
class InternalError : public Error
{
public:
	using Error::Error;
};

} // namespace artin
