#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace artin {

/// A Coxeter matrix coefficient: a non-negative integer or infinity.
///
/// Infinity is a separate state, never a sentinel value, so divisibility
/// and ordering code cannot treat it as a number by accident.
class Entry
{
public:
	constexpr Entry() = default;
	constexpr explicit Entry(std::uint64_t value) : value_(value) {}

	static constexpr Entry infinity()
	{
		Entry e;
		e.infinite_ = true;
		return e;
	}

	constexpr bool is_infinite() const { return infinite_; }
	constexpr bool is_finite() const { return !infinite_; }

	/// Throws std::logic_error when infinite.
	std::uint64_t value() const;

	/// True iff both are finite and *this divides m.
	bool divides(Entry m) const;

	std::string to_string() const;

	constexpr bool operator==(Entry const &) const = default;

	// Finite values in numeric order, infinity last.
	constexpr std::strong_ordering operator<=>(Entry const &o) const
	{
		if (infinite_ != o.infinite_)
			return infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
		if (infinite_)
			return std::strong_ordering::equal;
		return value_ <=> o.value_;
	}

private:
	std::uint64_t value_ = 0;
	bool infinite_ = false;
};

inline constexpr Entry kInfinity = Entry::infinity();

} // namespace artin
