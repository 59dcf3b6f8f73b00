#include "cli.hpp"

#include "artin/io.hpp"
#include "artin/lie.hpp"

#include "helpers.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <sstream>

using testing_helpers::data_path;

namespace {

struct Result
{
	int code;
	std::string out;
	std::string err;
};

Result run(std::vector<std::string> args)
{
	std::ostringstream out, err;
	int const code = artin::cli::run(args, out, err);
	return {code, out.str(), err.str()};
}

bool has_line(std::string const &text, std::string const &line)
{
	std::istringstream is(text);
	for (std::string l; std::getline(is, l);)
		if (l == line)
			return true;
	return false;
}

std::string d(char const *name) { return data_path(name); }

} // namespace

TEST(Cli, ValidateM0)
{
	Result const r = run({"validate", d("m0.json"), "--family", "1,2"});
	EXPECT_EQ(r.code, 0);
	EXPECT_TRUE(has_line(r.out, "even true"));
	EXPECT_TRUE(has_line(r.out, "family E(1,2) false"));
}

TEST(Cli, ValidateN0)
{
	Result const r = run({"validate", d("n0.json")});
	EXPECT_EQ(r.code, 0);
	EXPECT_TRUE(has_line(r.out, "even true"));
	EXPECT_TRUE(has_line(r.out, "right_angled false"));
}

TEST(Cli, ValidateBadFile)
{
	Result const r = run({"validate", d("bad.json")});
	EXPECT_EQ(r.code, 1);
	EXPECT_NE(r.err.find("not symmetric at (0,1)"), std::string::npos);
	EXPECT_EQ(run({"validate", d("missing.json")}).code, 1);
	EXPECT_EQ(run({"validate", d("m0.json"), "--family", "2,4"}).code, 1);
	EXPECT_EQ(run({"validate", d("m0.json"), "--family", "x"}).code, 1);
}

TEST(Cli, Reduce)
{
	Result const r = run({"reduce", d("n0.json")});
	EXPECT_EQ(r.code, 0);
	EXPECT_TRUE(has_line(r.out, "classes [[0],[1,2]]"));
	EXPECT_TRUE(has_line(r.out, "labels [0,30]"));
	Result const m = run({"reduce", d("m0.json")});
	EXPECT_TRUE(has_line(m.out, "reduced [[1,6,2],[6,1,10],[2,10,1]]"));
	EXPECT_TRUE(has_line(m.out, "labels [0,0,0]"));
	Result const one = run({"reduce", d("one.json")});
	EXPECT_TRUE(has_line(one.out, "classes [[0]]"));
	EXPECT_TRUE(has_line(one.out, "sizes [1]"));
}

TEST(Cli, Iso)
{
	Result const r = run({"iso", d("m0.json"), d("n0.json")});
	EXPECT_EQ(r.code, 2);
	EXPECT_TRUE(has_line(r.out, "NON-ISOMORPHIC"));
	Result const p = run({"iso", d("path.json"), d("path_permuted.json"), "--brute"});
	EXPECT_EQ(p.code, 0);
	EXPECT_TRUE(has_line(p.out, "ISOMORPHIC"));
	EXPECT_TRUE(has_line(p.out, "witness [2,0,1]"));
	EXPECT_TRUE(has_line(p.out, "CHECK brute_agrees PASS reduced: iso, brute: iso"));
}

TEST(Cli, LieInfo)
{
	Result const r = run({"lie", "info", d("m0.json")});
	EXPECT_EQ(r.code, 0);
	EXPECT_TRUE(has_line(r.out, "slot (0,1) mod 3"));
	EXPECT_TRUE(has_line(r.out, "slot (1,2) mod 5"));
	EXPECT_TRUE(has_line(r.out, "torsion {3,5} free rank 0"));
}

TEST(Cli, LieVerifyMorphism)
{
	Result const r = run({"lie", "verify-morphism", d("m0.json"), d("n0.json"), d("witness.json")});
	EXPECT_EQ(r.code, 0);
	for (char const *name : {"degree1_inverse", "degree2_inverse", "well_defined", "bracket_preserved"})
		EXPECT_NE(r.out.find(std::string("CHECK ") + name + " PASS"), std::string::npos) << name;
	Result const bad = run({"lie", "verify-morphism", d("m0.json"), d("n0.json"), d("witness_bad.json")});
	EXPECT_EQ(bad.code, 1);
	EXPECT_TRUE(has_line(bad.out, "CHECK bracket_preserved FAIL pair (0,1)"));
}

TEST(Cli, LieIso)
{
	Result const iso = run({"lie", "iso", d("e12.json"), d("e12_permuted.json"), "--family", "1,2"});
	EXPECT_EQ(iso.code, 0);
	EXPECT_TRUE(has_line(iso.out, "ISOMORPHIC"));
	Result const non = run({"lie", "iso", d("e12.json"), d("all2.json"), "--family", "1,2"});
	EXPECT_EQ(non.code, 2);
	EXPECT_NE(non.out.find("separated_by invariant torsion_invariant"), std::string::npos);
	Result const out = run({"lie", "iso", d("m0.json"), d("n0.json"), "--family", "1,15"});
	EXPECT_EQ(out.code, 1);
	EXPECT_NE(out.err.find("not in E(1,15)"), std::string::npos);
	EXPECT_EQ(run({"lie", "iso", d("m0.json"), d("n0.json")}).code, 1);
}

TEST(Cli, LieIsoTheoremLine)
{
	Result const r = run({"lie", "iso", d("theorem_a.json"), d("theorem_b.json"), "--family", "1,2"});
	EXPECT_EQ(r.code, 2);
	EXPECT_NE(r.out.find("separated_by theorem: "), std::string::npos) << r.out;
}

TEST(Cli, Magnus)
{
	Result const r = run({"magnus", d("m0.json")});
	EXPECT_EQ(r.code, 0);
	EXPECT_TRUE(has_line(r.out, "seed 0 trials 100"));
	for (char const *name : {"relations", "degree1_independent", "commutator_orders", "bracket_image"})
		EXPECT_NE(r.out.find(std::string("CHECK ") + name + " PASS"), std::string::npos) << name;
	EXPECT_TRUE(has_line(r.out, "CHECK commutator_orders PASS orders (3,5)"));
	EXPECT_EQ(run({"magnus", d("all2.json")}).code, 0);
	Result const a = run({"magnus", d("m0.json"), "--trials", "1000", "--seed", "7"});
	Result const b = run({"magnus", d("m0.json"), "--trials", "1000", "--seed", "7"});
	EXPECT_EQ(a.code, 0);
	EXPECT_EQ(a.out, b.out);
	EXPECT_TRUE(has_line(a.out, "CHECK power_formula PASS 1000/1000 (seed 7)"));
}

TEST(Cli, BruteLie)
{
	Result const iso = run({"brute-lie", d("path.json"), d("path_permuted.json"), "--prime", "2"});
	EXPECT_EQ(iso.code, 0);
	EXPECT_TRUE(has_line(iso.out, "ISOMORPHIC"));
	Result const non = run({"brute-lie", d("path.json"), d("triangle.json")});
	EXPECT_EQ(non.code, 2);
	Result const bad = run({"brute-lie", d("m0.json"), d("n0.json")});
	EXPECT_EQ(bad.code, 1);
	EXPECT_EQ(run({"brute-lie", d("path.json"), d("path.json"), "--prime", "7"}).code, 1);
}

TEST(Cli, UsageErrors)
{
	EXPECT_EQ(run({}).code, 1);
	EXPECT_EQ(run({"frobnicate"}).code, 1);
	EXPECT_EQ(run({"iso", d("m0.json")}).code, 1);
	EXPECT_EQ(run({"lie"}).code, 1);
	EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, JsonDocumentsAreSingleAndReverify)
{
	Result const r = run({"lie", "iso", d("e12.json"), d("e12_permuted.json"), "--family", "1,2", "--json"});
	ASSERT_EQ(r.code, 0);
	auto const doc = nlohmann::json::parse(r.out);
	EXPECT_EQ(doc["exit"], 0);
	EXPECT_EQ(doc["isomorphic"], true);
	artin::LieAlgebra const Lm(testing_helpers::load("e12.json"));
	artin::LieAlgebra const Ln(testing_helpers::load("e12_permuted.json"));
	auto const w = artin::morphism_from_json(doc["morphism"], Lm, Ln);
	EXPECT_TRUE(artin::verify_morphism(Lm, Ln, w).all_pass());

	Result const iso = run({"iso", d("path.json"), d("path_permuted.json"), "--json"});
	auto const idoc = nlohmann::json::parse(iso.out);
	artin::IsoWitness const perm{idoc["witness"]["permutation"].get<std::vector<artin::Index>>()};
	EXPECT_TRUE(artin::verify_iso(testing_helpers::load("path.json"), testing_helpers::load("path_permuted.json"), perm));

	for (std::vector<std::string> args :
	     {std::vector<std::string>{"validate", d("m0.json"), "--json"},
	      {"reduce", d("n0.json"), "--json"},
	      {"lie", "info", d("m0.json"), "--json"},
	      {"lie", "verify-morphism", d("m0.json"), d("n0.json"), d("witness.json"), "--json"},
	      {"magnus", d("m0.json"), "--trials", "10", "--json"},
	      {"brute-lie", d("path.json"), d("triangle.json"), "--json"},
	      {"validate", d("bad.json"), "--json"}})
	{
		Result const x = run(args);
		auto const doc = nlohmann::json::parse(x.out, nullptr, false);
		ASSERT_FALSE(doc.is_discarded()) << x.out;
		EXPECT_EQ(doc["exit"], x.code);
	}
}
