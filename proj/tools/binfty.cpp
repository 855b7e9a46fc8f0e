// binfty: construct and machine-check A-infinity / multibrace / B-infinity
// structures on truncated tensor coalgebras, over exact rationals.
//
// Subcommands: validate, derive, check, primitives, examples.
// Exit codes: 0 = all requested laws pass, 1 = a law fails or an
// inconsistency is detected, 2 = input or feasibility error.

#include <CLI11.hpp>

#include "binfty/algebra_file.hpp"
#include "binfty/report.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace binfty;

namespace {

std::string slurp(const std::string &path) {
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw ParseError("cannot read file '" + path + "'");
	std::ostringstream os;
	os << in.rdbuf();
	return os.str();
}

struct Output {
	std::string path;
	std::string format = "text";

	void emit(const Report &report) const {
		emit_raw(format == "json" ? report.render_json() : report.render_text());
	}
	void emit_raw(const std::string &body) const {
		std::cout << body;
		if (!path.empty()) {
			std::ofstream file(path, std::ios::binary);
			file << body;
		}
	}
};

Report make_report(const std::string &name, const std::string &bytes) {
	Report r;
	r.input_name = name;
	r.input_digest = fnv1a_hex(bytes);
	return r;
}

// Deterministic perturbation for negative testing: adds one basis vector to
// the first degree-compatible entry of the named structure map.
void perturb_structure(BInfinity &s, const std::string &id) {
	const GradedSpace &V = s.a.space;
	auto bump = [&V](MultiMap &m) {
		for (const Word &w : basis_words(V, m.in_arity)) {
			int target = V.degree_of(w) + m.degree;
			for (int g = 0; g < V.dim(); ++g) {
				if (V.degree(g) != target)
					continue;
				Tensor row = m.defined_on(w) ? m.row(w) : Tensor{};
				tensor_add(row, Word{g}, Rational(1));
				auto table = m.table;
				table[w] = std::move(row);
				m = MultiMap::make(V, m.in_arity, m.out_arity, m.degree, std::move(table),
				                   m.total);
				return true;
			}
		}
		return false;
	};
	if (id.size() == 3 && id[0] == 'm' && std::isdigit(static_cast<unsigned char>(id[1])) &&
	    std::isdigit(static_cast<unsigned char>(id[2]))) {
		int i = id[1] - '0', j = id[2] - '0';
		if (i < 1 || j < 1 || i + j > s.b.arity_cap)
			throw CapError("--perturb: arity of '" + id + "' outside the structure caps");
		MultiMap m = s.b.at(i, j) ? *s.b.at(i, j) : MultiMap::zero(i + j, 1, 0);
		if (!bump(m))
			throw CapError("--perturb: no degree-compatible entry for '" + id + "'");
		s.b.m.insert_or_assign({i, j}, std::move(m));
		return;
	}
	if (id.size() >= 2 && id[0] == 'd') {
		int n = std::atoi(id.c_str() + 1);
		if (n < 1 || n > s.a.arity_cap)
			throw CapError("--perturb: arity of '" + id + "' outside the structure caps");
		MultiMap m = s.a.at(n) ? *s.a.at(n) : MultiMap::zero(n, 1, -1);
		if (!bump(m))
			throw CapError("--perturb: no degree-compatible entry for '" + id + "'");
		s.a.m.insert_or_assign(n, std::move(m));
		return;
	}
	throw ParseError("--perturb: unknown map id '" + id + "' (use mIJ or dN)");
}

int run_validate(const std::string &path, const Output &out) {
	std::string bytes = slurp(path);
	AlgebraFile f = parse_algebra_file(bytes);
	Report report = make_report(f.name, bytes);
	LawReport r = f.is_bialgebra() ? validate_das_bialgebra(f.bialgebra())
	                               : validate(f.algebra());
	report.add_law_report(r);
	report.section("result").lines.push_back(r.all_pass() ? "all laws pass"
	                                                      : "law violation");
	out.emit(report);
	return r.all_pass() ? 0 : 1;
}

int run_derive(const std::string &path, int max_arity, int word_cap, const Output &out) {
	std::string bytes = slurp(path);
	AlgebraFile f = parse_algebra_file(bytes);
	if (f.is_bialgebra())
		throw ParseError("derive expects a plain algebra file (no delta table)");
	if (max_arity < 1)
		throw CapError("--max-arity must be >= 1");
	TruncationPolicy::make(word_cap, max_arity); // feasibility
	TwoAssocDiffAlgebra alg = f.algebra();
	BInfinity s = underlying_b_infinity(alg, max_arity);

	Report report = make_report(f.name, bytes);
	auto &amaps = report.section("derived A-infinity maps m_n");
	for (int n = 1; n <= max_arity; ++n) {
		MultiMap m = s.a.at(n) ? *s.a.at(n) : MultiMap::zero(n, 1, -1);
		for (auto &line : format_multimap(alg.space, "m_" + std::to_string(n), m))
			amaps.lines.push_back(line);
	}
	auto &bmaps = report.section("derived multibrace maps m_{i,j}");
	for (int i = 1; i < max_arity; ++i) {
		for (int j = 1; i + j <= max_arity; ++j) {
			MultiMap m = s.b.at(i, j) ? *s.b.at(i, j) : MultiMap::zero(i + j, 1, 0);
			std::string label = "m_{" + std::to_string(i) + "," + std::to_string(j) + "}";
			for (auto &line : format_multimap(alg.space, label, m))
				bmaps.lines.push_back(line);
		}
	}
	LawReport ids = check_defining_identities(alg, s, max_arity);
	report.add_law_report(ids);
	report.section("result").lines.push_back(ids.all_pass() ? "all laws pass"
	                                                        : "law violation");
	out.emit(report);
	return ids.all_pass() ? 0 : 1;
}

int run_check(const std::string &path, std::string laws_csv, int max_arity, int word_cap,
              const std::string &perturb, const Output &out) {
	std::string bytes = slurp(path);
	AlgebraFile f = parse_algebra_file(bytes);
	if (laws_csv.empty())
		laws_csv = f.is_bialgebra() ? "uib" : "ainf,mb,compat";
	std::vector<std::string> laws;
	{
		std::stringstream ss(laws_csv);
		std::string item;
		while (std::getline(ss, item, ','))
			laws.push_back(item);
	}
	for (const auto &l : laws)
		if (l != "ainf" && l != "mb" && l != "compat" && l != "uib")
			throw ParseError("unknown law name '" + l + "' (use ainf, mb, compat, uib)");

	Report report = make_report(f.name, bytes);
	bool pass = true;

	bool needs_structure = false;
	for (const auto &l : laws)
		needs_structure = needs_structure || l != "uib";
	if (needs_structure) {
		if (f.is_bialgebra())
			throw ParseError("laws ainf/mb/compat expect a plain algebra file; bialgebra "
			                 "files support uib");
		int ainf_cap = max_arity > 0 ? max_arity : 5;
		int other_cap = max_arity > 0 ? max_arity : 6;
		int derive_cap = std::max(ainf_cap, other_cap);
		TruncationPolicy::make(word_cap, derive_cap); // feasibility
		BInfinity s = underlying_b_infinity(f.algebra(), derive_cap);
		if (!perturb.empty())
			perturb_structure(s, perturb);
		for (const auto &l : laws) {
			if (l == "ainf") {
				LawReport r = check_a_infinity(s.a, ainf_cap);
				report.add_law_report(r);
				pass = pass && r.all_pass();
			} else if (l == "mb") {
				LawReport r = check_multibrace(s.b, other_cap);
				report.add_law_report(r);
				pass = pass && r.all_pass();
			} else if (l == "compat") {
				LawReport r = check_compatibility(s, other_cap);
				report.add_law_report(r);
				pass = pass && r.all_pass();
			}
		}
	}
	for (const auto &l : laws) {
		if (l != "uib")
			continue;
		if (!f.is_bialgebra())
			throw ParseError("law uib expects a bialgebra file (with a delta table)");
		if (!perturb.empty())
			throw ParseError("--perturb applies to derived-structure laws only");
		TwoAssocDiffBialgebra w = f.bialgebra();
		InfBialgebra ib;
		ib.space = w.alg.space;
		ib.product = w.alg.circ;
		ib.coproduct = w.coproduct;
		LawReport r = check_unital_infinitesimal(ib);
		report.add_law_report(r);
		pass = pass && r.all_pass();
	}
	report.section("result").lines.push_back(pass ? "all laws pass" : "law violation");
	out.emit(report);
	return pass ? 0 : 1;
}

int run_primitives(const std::string &path, int arity_cap, const Output &out) {
	std::string bytes = slurp(path);
	AlgebraFile f = parse_algebra_file(bytes);
	if (!f.is_bialgebra())
		throw ParseError("primitives expects a bialgebra file (with a delta table)");
	TwoAssocDiffBialgebra w = f.bialgebra();
	Report report = make_report(f.name, bytes);
	PrimResult res = prim_b_infinity(w, arity_cap);
	report.add_law_report(res.report);
	if (!res.conilpotent) {
		report.section("result").lines.push_back("not conilpotent at truncation");
		out.emit(report);
		return 1;
	}
	auto &basis = report.section("primitive basis");
	for (size_t p = 0; p < res.prim_basis.size(); ++p) {
		Tensor t;
		for (int g = 0; g < w.alg.space.dim(); ++g)
			if (!res.prim_basis[p][g].is_zero())
				t[{g}] = res.prim_basis[p][g];
		basis.lines.push_back(res.prim_space.gens[p].name + " = " + w.alg.space.show(t));
	}
	bool pass = res.report.all_pass() && res.structure.has_value();
	if (res.structure) {
		auto &amaps = report.section("restricted A-infinity maps m_n");
		for (int n = 1; n <= arity_cap; ++n) {
			MultiMap m = res.structure->a.at(n) ? *res.structure->a.at(n)
			                                    : MultiMap::zero(n, 1, -1);
			for (auto &line : format_multimap(res.prim_space, "m_" + std::to_string(n), m))
				amaps.lines.push_back(line);
		}
		auto &bmaps = report.section("restricted multibrace maps m_{i,j}");
		for (int i = 1; i < arity_cap; ++i) {
			for (int j = 1; i + j <= arity_cap; ++j) {
				MultiMap m = res.structure->b.at(i, j) ? *res.structure->b.at(i, j)
				                                       : MultiMap::zero(i + j, 1, 0);
				std::string label = "m_{" + std::to_string(i) + "," + std::to_string(j) + "}";
				for (auto &line : format_multimap(res.prim_space, label, m))
					bmaps.lines.push_back(line);
			}
		}
	}
	report.section("result").lines.push_back(pass ? "all laws pass" : "law violation");
	out.emit(report);
	return pass ? 0 : 1;
}

int run_examples(const std::string &action, const std::string &name, bool env, int cap,
                 const Output &out) {
	if (action == "list") {
		std::string body;
		for (const auto &n : corpus_names())
			body += n + "\n";
		out.emit_raw(body);
		return 0;
	}
	if (action == "emit") {
		if (name.empty())
			throw ParseError("examples emit: missing corpus name");
		AlgebraFile f = corpus_algebra(name);
		if (env) {
			if (cap < 1)
				throw CapError("--cap must be >= 1");
			f = enveloping_file(f, cap);
		}
		out.emit_raw(serialize_algebra_file(f));
		return 0;
	}
	throw ParseError("examples: action must be 'list' or 'emit <name>'");
}

} // namespace

int main(int argc, char **argv) {
	CLI::App app{"exact constructor and checker for homotopy-algebraic structures on "
	             "truncated tensor coalgebras"};
	app.require_subcommand(1);
	app.fallthrough(); // parent options (--output, --format) usable after a subcommand

	Output out;
	app.add_option("--output", out.path, "also write the report to this path");
	app.add_option("--format", out.format, "report format: text or json")
	    ->check(CLI::IsMember({"text", "json"}));

	std::string file;
	int max_arity = 4;
	int word_cap = 6;
	int prim_cap = 3;
	std::string laws, perturb;

	auto *validate_cmd = app.add_subcommand("validate", "check the axioms of an algebra file");
	validate_cmd->add_option("file", file, "algebra definition file")->required();

	auto *derive_cmd =
	    app.add_subcommand("derive", "derive the underlying structure maps of an algebra");
	derive_cmd->add_option("file", file, "algebra definition file")->required();
	derive_cmd->add_option("--max-arity", max_arity, "largest arity to derive (default 4)");
	derive_cmd->add_option("--cap", word_cap, "word-length cap (default 6)");

	auto *check_cmd = app.add_subcommand("check", "run law suites on the derived structure");
	check_cmd->add_option("file", file, "algebra definition file")->required();
	check_cmd->add_option("--laws", laws, "comma-separated: ainf, mb, compat, uib");
	check_cmd->add_option("--max-arity", max_arity,
	                      "override per-law arity caps (defaults 5/6/6)");
	check_cmd->add_option("--cap", word_cap, "word-length cap (default 6)");
	check_cmd->add_option("--perturb", perturb,
	                      "deliberately break a structure map (mIJ or dN) before checking");

	auto *prim_cmd = app.add_subcommand(
	    "primitives", "primitive basis and restricted structure of a bialgebra file");
	prim_cmd->add_option("file", file, "bialgebra definition file")->required();
	prim_cmd->add_option("--cap", prim_cap, "arity cap of the restricted maps (default 3)");

	auto *ex_cmd = app.add_subcommand("examples", "list or emit the built-in corpus");
	std::string action, ex_name;
	bool env = false;
	int env_cap = 3;
	ex_cmd->add_option("action", action, "'list' or 'emit'")->required();
	ex_cmd->add_option("name", ex_name, "corpus member for 'emit'");
	ex_cmd->add_flag("--enveloping", env, "emit the enveloping bialgebra U(A) instead");
	ex_cmd->add_option("--cap", env_cap, "word cap of the enveloping carrier (default 3)");

	CLI11_PARSE(app, argc, argv);

	try {
		if (app.got_subcommand(validate_cmd))
			return run_validate(file, out);
		if (app.got_subcommand(derive_cmd))
			return run_derive(file, max_arity, word_cap, out);
		if (app.got_subcommand(check_cmd)) {
			int cap = check_cmd->count("--max-arity") ? max_arity : 0;
			return run_check(file, laws, cap, word_cap, perturb, out);
		}
		if (app.got_subcommand(prim_cmd))
			return run_primitives(file, prim_cap, out);
		if (app.got_subcommand(ex_cmd))
			return run_examples(action, ex_name, env, env_cap, out);
	} catch (const ValidationError &e) {
		std::cout << "law violation: " << e.what() << "\n";
		return 1;
	} catch (const Error &e) {
		std::cout << "input error: " << e.what() << "\n";
		return 2;
	}
	return 2;
}
