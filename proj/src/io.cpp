#include "artin/io.hpp"
#include "artin/error.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

namespace artin {

using nlohmann::json;

namespace {

json parse_json(std::string_view text)
{
	try
	{
		return json::parse(text.begin(), text.end());
	}
	catch (json::parse_error const &e)
	{
		throw ParseError(std::string("malformed JSON: ") + e.what());
	}
}

Entry entry_from_json(json const &v, std::size_t r, std::size_t c)
{
	if (v.is_string())
	{
		if (v.get<std::string>() == "inf")
			return kInfinity;
		throw ParseError("entry must be an integer or \"inf\"", r, c);
	}
	if (v.is_number_unsigned())
		return Entry(v.get<std::uint64_t>());
	if (v.is_number_integer())
		throw ParseError("entry must be >= 1", r, c);
	throw ParseError("entry must be an integer or \"inf\"", r, c);
}

BigInt bigint_from_json(json const &v, std::string const &where)
{
	if (v.is_number_unsigned())
		return BigInt(v.get<std::uint64_t>());
	if (v.is_number_integer())
		return BigInt(v.get<std::int64_t>());
	if (v.is_string())
	{
		std::string const s = v.get<std::string>();
		bool ok = !s.empty();
		for (std::size_t i = 0; i < s.size() && ok; ++i)
			ok = std::isdigit(static_cast<unsigned char>(s[i])) || (i == 0 && s[i] == '-' && s.size() > 1);
		if (ok)
			return BigInt(s);
	}
	throw ParseError(where + ": expected an integer");
}

IntMatrix int_matrix_from_json(json const &doc, char const *key, std::size_t rows, std::size_t cols)
{
	if (!doc.contains(key))
		throw ParseError(std::string("morphism: missing \"") + key + "\"");
	json const &m = doc.at(key);
	if (!m.is_array() || m.size() != rows)
		throw ParseError(std::string("morphism: \"") + key + "\" must have " + std::to_string(rows) +
		                 " rows");
	IntMatrix out(rows, cols);
	for (std::size_t r = 0; r < rows; ++r)
	{
		if (!m[r].is_array() || m[r].size() != cols)
			throw ParseError(std::string("morphism: \"") + key + "\" row " + std::to_string(r) +
			                 " must have " + std::to_string(cols) + " entries");
		for (std::size_t c = 0; c < cols; ++c)
			out(r, c) = bigint_from_json(m[r][c], std::string(key) + "[" + std::to_string(r) + "][" +
			                                          std::to_string(c) + "]");
	}
	return out;
}

void check_slots(json const &doc, char const *key, LieAlgebra const &L)
{
	if (!doc.contains(key))
		throw ParseError(std::string("morphism: missing \"") + key + "\"");
	json const &s = doc.at(key);
	bool ok = s.is_array() && s.size() == L.slots().size();
	for (std::size_t i = 0; ok && i < s.size(); ++i)
		ok = s[i].is_array() && s[i].size() == 2 && s[i][0].is_number_unsigned() &&
		     s[i][1].is_number_unsigned() && s[i][0].get<std::uint64_t>() == L.slots()[i].s &&
		     s[i][1].get<std::uint64_t>() == L.slots()[i].t;
	if (!ok)
		throw ParseError(std::string("morphism: \"") + key +
		                 "\" does not match the algebra's slot order");
}

json slots_json(LieAlgebra const &L)
{
	json out = json::array();
	for (Slot const &sl : L.slots())
		out.push_back({sl.s, sl.t});
	return out;
}

} // namespace

CoxeterMatrix matrix_from_json(json const &doc)
{
	if (!doc.is_object() || !doc.contains("entries"))
		throw ParseError("matrix document must be an object with \"entries\"");
	json const &e = doc.at("entries");
	if (!e.is_array() || e.empty())
		throw ParseError("\"entries\" must be a non-empty array of rows");
	std::vector<std::vector<Entry>> rows;
	for (std::size_t r = 0; r < e.size(); ++r)
	{
		if (!e[r].is_array())
			throw ParseError("row " + std::to_string(r) + " is not an array");
		if (e[r].size() != e.size())
			throw ParseError("row " + std::to_string(r) + " has " + std::to_string(e[r].size()) +
			                 " entries, expected " + std::to_string(e.size()));
		std::vector<Entry> row;
		for (std::size_t c = 0; c < e[r].size(); ++c)
			row.push_back(entry_from_json(e[r][c], r, c));
		rows.push_back(std::move(row));
	}
	return CoxeterMatrix(rows);
}

CoxeterMatrix parse_matrix(std::string_view text) { return matrix_from_json(parse_json(text)); }

json to_json(Entry e)
{
	if (e.is_infinite())
		return "inf";
	return e.value();
}

json matrix_to_json(CoxeterMatrix const &m)
{
	json rows = json::array();
	for (auto const &row : m.rows())
	{
		json r = json::array();
		for (Entry e : row)
			r.push_back(to_json(e));
		rows.push_back(std::move(r));
	}
	return json{{"entries", std::move(rows)}};
}

json to_json(BigInt const &v)
{
	if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
		return v.convert_to<std::int64_t>();
	return v.str();
}

json to_json(IntMatrix const &m)
{
	json out = json::array();
	for (std::size_t r = 0; r < m.rows(); ++r)
	{
		json row = json::array();
		for (std::size_t c = 0; c < m.cols(); ++c)
			row.push_back(to_json(m(r, c)));
		out.push_back(std::move(row));
	}
	return out;
}

MorphismWitness morphism_from_json(json const &doc, LieAlgebra const &src, LieAlgebra const &dst)
{
	if (!doc.is_object())
		throw ParseError("morphism document must be an object");
	if (src.rank() != dst.rank())
		throw DomainError("morphism: source and target have different rank");
	check_slots(doc, "src_slots", src);
	check_slots(doc, "dst_slots", dst);
	std::size_t const n = src.rank();
	std::size_t const ks = src.slots().size();
	std::size_t const kd = dst.slots().size();
	return MorphismWitness{int_matrix_from_json(doc, "F", n, n), int_matrix_from_json(doc, "G", n, n),
	                       int_matrix_from_json(doc, "f2", kd, ks),
	                       int_matrix_from_json(doc, "g2", ks, kd)};
}

MorphismWitness parse_morphism(std::string_view text, LieAlgebra const &src, LieAlgebra const &dst)
{
	return morphism_from_json(parse_json(text), src, dst);
}

json morphism_to_json(MorphismWitness const &w, LieAlgebra const &src, LieAlgebra const &dst)
{
	return json{{"F", to_json(w.F)},          {"G", to_json(w.G)},
	            {"f2", to_json(w.f2)},        {"g2", to_json(w.g2)},
	            {"src_slots", slots_json(src)}, {"dst_slots", slots_json(dst)}};
}

std::string read_file(std::string const &path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw ParseError("cannot open " + path);
	std::ostringstream os;
	os << in.rdbuf();
	return os.str();
}

} // namespace artin
