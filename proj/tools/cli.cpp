#include "cli.hpp"

#include "artin/brute.hpp"
#include "artin/coxeter.hpp"
#include "artin/error.hpp"
#include "artin/io.hpp"
#include "artin/lie.hpp"
#include "artin/magnus.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <sstream>

namespace artin::cli {

using nlohmann::json;

namespace {

Family parse_family(std::string const &text)
{
	std::istringstream is(text);
	Family f;
	char comma = 0;
	if (!(is >> f.c >> comma >> f.d) || comma != ',' || !is.eof())
		throw DomainError("--family expects c,d, got '" + text + "'");
	check_family(f);
	return f;
}

CoxeterMatrix load_matrix(std::string const &path) { return parse_matrix(read_file(path)); }

std::string join(std::vector<Index> const &v)
{
	std::string s = "[";
	for (std::size_t i = 0; i < v.size(); ++i)
		s += (i ? "," : "") + std::to_string(v[i]);
	return s + "]";
}

std::string entries_str(std::vector<Entry> const &v)
{
	std::string s = "[";
	for (std::size_t i = 0; i < v.size(); ++i)
		s += (i ? "," : "") + v[i].to_string();
	return s + "]";
}

json field_matrix_json(FieldMatrix const &m)
{
	json out = json::array();
	for (std::size_t r = 0; r < m.rows; ++r)
	{
		json row = json::array();
		for (std::size_t c = 0; c < m.cols; ++c)
			row.push_back(m(r, c));
		out.push_back(std::move(row));
	}
	return out;
}

json checks_json(Report const &rep)
{
	json out = json::array();
	for (Check const &c : rep.checks)
		out.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
	return out;
}

/// Collects human-readable lines and a JSON document for one command.
class Output
{
public:
	Output(std::string command, bool as_json) : as_json_(as_json)
	{
		doc_["command"] = command;
		lines_.push_back("COMMAND " + command);
	}

	void line(std::string s) { lines_.push_back(std::move(s)); }
	json &doc() { return doc_; }

	void checks(Report const &rep)
	{
		for (Check const &c : rep.checks)
			lines_.push_back("CHECK " + c.name + (c.pass ? " PASS " : " FAIL ") + c.detail);
		json &arr = doc_["checks"];
		if (arr.is_null())
			arr = json::array();
		for (auto &c : checks_json(rep))
			arr.push_back(std::move(c));
	}

	int finish(std::ostream &out, int code)
	{
		doc_["exit"] = code;
		if (as_json_)
			out << doc_.dump(2) << '\n';
		else
			for (auto const &l : lines_)
				out << l << '\n';
		return code;
	}

private:
	bool as_json_;
	json doc_;
	std::vector<std::string> lines_;
};

std::string echo(std::vector<std::string> const &args)
{
	std::string s;
	for (auto const &a : args)
		s += (s.empty() ? "" : " ") + a;
	return s;
}

// -- commands -------------------------------------------------------------------

int cmd_validate(Output &o, std::ostream &out, std::string const &path,
                 std::vector<std::string> const &families)
{
	std::vector<Family> qs;
	for (auto const &f : families)
		qs.push_back(parse_family(f));
	CoxeterMatrix const m = load_matrix(path);
	Classification const c = classify(m, qs);
	o.line("n " + std::to_string(m.size()));
	o.line(std::string("even ") + (c.is_even ? "true" : "false"));
	o.line(std::string("right_angled ") + (c.is_right_angled ? "true" : "false"));
	json fam = json::array();
	for (auto const &[f, in] : c.family_memberships)
	{
		std::string const tag = std::to_string(f.c) + "," + std::to_string(f.d);
		o.line("family E(" + tag + ") " + (in ? "true" : "false"));
		fam.push_back({{"c", f.c}, {"d", f.d}, {"member", in}});
	}
	o.doc()["matrix"] = matrix_to_json(m);
	o.doc()["n"] = m.size();
	o.doc()["even"] = c.is_even;
	o.doc()["right_angled"] = c.is_right_angled;
	o.doc()["families"] = std::move(fam);
	return o.finish(out, kExitOk);
}

int cmd_reduce(Output &o, std::ostream &out, std::string const &path)
{
	CoxeterMatrix const m = load_matrix(path);
	ReducedMatrix const r = reduce(m);
	std::string classes = "[";
	json jc = json::array();
	for (std::size_t i = 0; i < r.classes.size(); ++i)
	{
		classes += (i ? "," : "") + join(r.classes[i]);
		jc.push_back(r.classes[i]);
	}
	classes += "]";
	o.line("classes " + classes);
	o.line("reduced " + r.entries.to_string());
	o.line("sizes " + join(r.sizes));
	o.line("labels " + entries_str(r.labels));
	json labels = json::array();
	for (Entry e : r.labels)
		labels.push_back(to_json(e));
	o.doc()["classes"] = std::move(jc);
	o.doc()["reduced"] = matrix_to_json(r.entries);
	o.doc()["sizes"] = r.sizes;
	o.doc()["labels"] = std::move(labels);
	return o.finish(out, kExitOk);
}

int cmd_iso(Output &o, std::ostream &out, std::string const &pm, std::string const &pn,
            bool brute)
{
	CoxeterMatrix const m = load_matrix(pm);
	CoxeterMatrix const n = load_matrix(pn);
	auto const w = matrices_isomorphic(m, n);
	if (brute)
	{
		auto const b = brute_matrix_iso(m, n);
		bool const agree = w.has_value() == b.has_value();
		Report rep;
		rep.add("brute_agrees", agree,
		        std::string("reduced: ") + (w ? "iso" : "non-iso") + ", brute: " + (b ? "iso" : "non-iso"));
		o.checks(rep);
		if (b)
			o.doc()["brute_witness"] = {{"permutation", b->permutation}};
		if (!agree)
			return o.finish(out, kExitError);
	}
	if (!w)
	{
		o.line("NON-ISOMORPHIC");
		o.doc()["isomorphic"] = false;
		return o.finish(out, kExitNonIsomorphic);
	}
	o.line("ISOMORPHIC");
	o.line("witness " + join(w->permutation));
	o.doc()["isomorphic"] = true;
	o.doc()["witness"] = {{"permutation", w->permutation}};
	return o.finish(out, kExitOk);
}

int cmd_lie_info(Output &o, std::ostream &out, std::string const &path)
{
	LieAlgebra const L(load_matrix(path));
	TorsionInvariant const t = torsion_invariant(L);
	o.line("rank " + std::to_string(L.rank()));
	json slots = json::array();
	for (Slot const &sl : L.slots())
	{
		o.line("slot (" + std::to_string(sl.s) + "," + std::to_string(sl.t) + ") " +
		       to_string(sl.modulus));
		json js = {{"s", sl.s}, {"t", sl.t}};
		js["modulus"] = sl.modulus ? json(*sl.modulus) : json("free");
		slots.push_back(std::move(js));
	}
	o.line(to_string(t));
	o.doc()["rank"] = L.rank();
	o.doc()["slots"] = std::move(slots);
	o.doc()["torsion"] = t.prime_powers;
	o.doc()["free_rank"] = t.free_rank;
	return o.finish(out, kExitOk);
}

int cmd_lie_iso(Output &o, std::ostream &out, std::string const &pm, std::string const &pn,
                std::string const &family)
{
	Family const f = parse_family(family);
	CoxeterMatrix const m = load_matrix(pm);
	CoxeterMatrix const n = load_matrix(pn);
	FamilyIsoResult const r = lie_iso_family(m, n, f);
	if (r.isomorphic)
	{
		LieAlgebra const Lm(m), Ln(n);
		o.checks(verify_morphism(Lm, Ln, *r.witness));
		o.line("ISOMORPHIC");
		o.line("permutation " + join(r.permutation->permutation));
		o.doc()["isomorphic"] = true;
		o.doc()["permutation"] = r.permutation->permutation;
		o.doc()["morphism"] = morphism_to_json(*r.witness, Lm, Ln);
		return o.finish(out, kExitOk);
	}
	o.line("NON-ISOMORPHIC");
	o.doc()["isomorphic"] = false;
	if (r.basis == FamilyIsoResult::Basis::Invariant)
	{
		o.line("separated_by invariant " + r.invariant + ": " + r.detail);
		o.doc()["separated_by"] = "invariant";
		o.doc()["invariant"] = r.invariant;
	}
	else
	{
		o.line("separated_by theorem: " + r.detail);
		o.doc()["separated_by"] = "theorem";
	}
	o.doc()["detail"] = r.detail;
	return o.finish(out, kExitNonIsomorphic);
}

int cmd_lie_verify(Output &o, std::ostream &out, std::string const &pm, std::string const &pn,
                   std::string const &pw)
{
	LieAlgebra const Lm(load_matrix(pm));
	LieAlgebra const Ln(load_matrix(pn));
	MorphismWitness const w = parse_morphism(read_file(pw), Lm, Ln);
	Report const rep = verify_morphism(Lm, Ln, w);
	o.checks(rep);
	o.doc()["pass"] = rep.all_pass();
	return o.finish(out, rep.all_pass() ? kExitOk : kExitError);
}

int cmd_magnus(Output &o, std::ostream &out, std::string const &path, std::size_t trials,
               std::uint64_t seed)
{
	CoxeterMatrix const m = load_matrix(path);
	o.line("seed " + std::to_string(seed) + " trials " + std::to_string(trials));
	o.doc()["seed"] = seed;
	o.doc()["trials"] = trials;
	Report rep = verify_presentation(m);
	if (trials > 0)
		rep.append(run_property_suite(TruncatedRing(m), PropertySuiteOptions{trials, seed, 8}));
	o.checks(rep);
	o.doc()["pass"] = rep.all_pass();
	return o.finish(out, rep.all_pass() ? kExitOk : kExitError);
}

int cmd_brute_lie(Output &o, std::ostream &out, std::string const &pm, std::string const &pn,
                  std::uint32_t p)
{
	CoxeterMatrix const m = load_matrix(pm);
	CoxeterMatrix const n = load_matrix(pn);
	auto const w = brute_lie_iso_field(m, n, p);
	o.doc()["prime"] = p;
	if (!w)
	{
		o.line("NON-ISOMORPHIC");
		o.doc()["isomorphic"] = false;
		return o.finish(out, kExitNonIsomorphic);
	}
	auto mat_str = [](FieldMatrix const &f) { return field_matrix_json(f).dump(); };
	o.line("ISOMORPHIC");
	o.line("F1 " + mat_str(w->F1));
	o.line("F2 " + mat_str(w->F2));
	o.doc()["isomorphic"] = true;
	o.doc()["F1"] = field_matrix_json(w->F1);
	o.doc()["F2"] = field_matrix_json(w->F2);
	return o.finish(out, kExitOk);
}

} // namespace

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Even Artin groups: Coxeter matrices, truncated Lie rings and their oracles",
	             "artinlie"};
	app.require_subcommand(1);
	bool as_json = false;
	auto json_flag = [&](CLI::App *sub) { sub->add_flag("--json", as_json, "Emit a JSON document"); };

	std::string path, path2, path3, family;
	std::vector<std::string> families;
	bool brute = false;
	std::size_t trials = 100;
	std::uint64_t seed = 0;
	std::uint32_t prime = 2;

	auto *validate = app.add_subcommand("validate", "Parse and classify a matrix file");
	validate->add_option("matrix", path, "Matrix JSON")->required();
	validate->add_option("--family", families, "Family query c,d (repeatable)");
	json_flag(validate);

	auto *reduce_cmd = app.add_subcommand("reduce", "Print the reduced matrix, sizes and labels");
	reduce_cmd->add_option("matrix", path, "Matrix JSON")->required();
	json_flag(reduce_cmd);

	auto *iso = app.add_subcommand("iso", "Decide matrix isomorphism");
	iso->add_option("M", path, "First matrix")->required();
	iso->add_option("N", path2, "Second matrix")->required();
	iso->add_flag("--brute", brute, "Cross-check with exhaustive permutation search");
	json_flag(iso);

	auto *lie = app.add_subcommand("lie", "Truncated Lie ring L[M]");
	lie->require_subcommand(1);
	auto *lie_info = lie->add_subcommand("info", "Slot table and torsion invariant");
	lie_info->add_option("matrix", path, "Matrix JSON")->required();
	json_flag(lie_info);
	auto *lie_iso = lie->add_subcommand("iso", "Decide L[M] ~ L[N] inside E(c,d)");
	lie_iso->add_option("M", path, "First matrix")->required();
	lie_iso->add_option("N", path2, "Second matrix")->required();
	lie_iso->add_option("--family", family, "Family c,d")->required();
	json_flag(lie_iso);
	auto *lie_verify = lie->add_subcommand("verify-morphism", "Check a morphism witness");
	lie_verify->add_option("M", path, "Source matrix")->required();
	lie_verify->add_option("N", path2, "Target matrix")->required();
	lie_verify->add_option("morphism", path3, "Morphism JSON")->required();
	json_flag(lie_verify);

	auto *magnus = app.add_subcommand("magnus", "Truncated Magnus ring checks");
	magnus->add_option("matrix", path, "Matrix JSON")->required();
	magnus->add_option("--trials", trials, "Random trials per property")->capture_default_str();
	magnus->add_option("--seed", seed, "Random seed")->capture_default_str();
	json_flag(magnus);

	auto *brute_lie = app.add_subcommand("brute-lie", "Exhaustive L_{F_p} isomorphism search");
	brute_lie->add_option("M", path, "First right-angled matrix")->required();
	brute_lie->add_option("N", path2, "Second right-angled matrix")->required();
	brute_lie->add_option("--prime", prime, "Field characteristic (2, 3 or 5)")->capture_default_str();
	json_flag(brute_lie);

	std::vector<char const *> argv{"artinlie"};
	for (auto const &a : args)
		argv.push_back(a.c_str());
	try
	{
		app.parse(static_cast<int>(argv.size()), argv.data());
	}
	catch (CLI::ParseError const &e)
	{
		int const code = app.exit(e, out, err);
		return code == 0 ? kExitOk : kExitError;
	}

	Output o(echo(args), as_json);
	try
	{
		if (validate->parsed())
			return cmd_validate(o, out, path, families);
		if (reduce_cmd->parsed())
			return cmd_reduce(o, out, path);
		if (iso->parsed())
			return cmd_iso(o, out, path, path2, brute);
		if (lie_info->parsed())
			return cmd_lie_info(o, out, path);
		if (lie_iso->parsed())
			return cmd_lie_iso(o, out, path, path2, family);
		if (lie_verify->parsed())
			return cmd_lie_verify(o, out, path, path2, path3);
		if (magnus->parsed())
			return cmd_magnus(o, out, path, trials, seed);
		if (brute_lie->parsed())
			return cmd_brute_lie(o, out, path, path2, prime);
	}
	catch (Error const &e)
	{
		err << "error: " << e.what() << '\n';
		if (as_json)
		{
			o.doc()["error"] = e.what();
			return o.finish(out, kExitError);
		}
		return kExitError;
	}
	return kExitError;
}

} // namespace artin::cli
