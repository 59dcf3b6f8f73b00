#include "artin/entry.hpp"
#include "artin/error.hpp"

#include <stdexcept>

namespace artin {

std::uint64_t Entry::value() const
{
	if (infinite_)
		throw std::logic_error("Entry::value() on infinity");
	return value_;
}

bool Entry::divides(Entry m) const
{
	if (infinite_ || m.infinite_ || value_ == 0)
		return false;
	return m.value_ % value_ == 0;
}

std::string Entry::to_string() const
{
	return infinite_ ? std::string("inf") : std::to_string(value_);
}

ParseError::ParseError(std::string const &what, std::size_t row, std::size_t col)
    : Error(what + " at (" + std::to_string(row) + "," + std::to_string(col) + ")"), row_(row),
      col_(col)
{
}

} // namespace artin
