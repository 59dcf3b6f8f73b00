#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace artin {

struct Check
{
	std::string name;
	bool pass = false;
	std::string detail;
};

/// Ordered list of named pass/fail checks.
struct Report
{
	std::vector<Check> checks;

	void add(std::string name, bool pass, std::string detail = {})
	{
		checks.push_back({std::move(name), pass, std::move(detail)});
	}

	void append(Report const &other)
	{
		checks.insert(checks.end(), other.checks.begin(), other.checks.end());
	}

	bool all_pass() const
	{
		return std::all_of(checks.begin(), checks.end(), [](Check const &c) { return c.pass; });
	}

	Check const *find(std::string const &name) const
	{
		for (auto const &c : checks)
			if (c.name == name)
				return &c;
		return nullptr;
	}
};

} // namespace artin
