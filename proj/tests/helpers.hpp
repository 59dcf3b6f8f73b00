#pragma once

#include "artin/coxeter.hpp"
#include "artin/io.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace testing_helpers {

inline constexpr int INF = -1;

/// Matrix from integer rows, INF standing for infinity.
inline artin::CoxeterMatrix mat(std::initializer_list<std::initializer_list<int>> rows)
{
	std::vector<std::vector<artin::Entry>> out;
	for (auto const &r : rows)
	{
		std::vector<artin::Entry> row;
		for (int v : r)
			row.push_back(v == INF ? artin::kInfinity : artin::Entry(std::uint64_t(v)));
		out.push_back(std::move(row));
	}
	return artin::CoxeterMatrix(out);
}

inline std::string data_path(std::string const &name) { return std::string(ARTIN_TEST_DATA) + "/" + name; }

inline artin::CoxeterMatrix load(std::string const &name)
{
	return artin::parse_matrix(artin::read_file(data_path(name)));
}

inline artin::CoxeterMatrix m0() { return mat({{1, 6, 2}, {6, 1, 10}, {2, 10, 1}}); }
inline artin::CoxeterMatrix n0() { return mat({{1, 2, 2}, {2, 1, 30}, {2, 30, 1}}); }

} // namespace testing_helpers
