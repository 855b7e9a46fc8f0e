#include "binfty/algebra_file.hpp"

#include <json.hpp>

#include <set>

namespace binfty {

using json = nlohmann::ordered_json;

TwoAssocDiffAlgebra AlgebraFile::algebra() const {
	return TwoAssocDiffAlgebra{space, bullet, circ, diff};
}

TwoAssocDiffBialgebra AlgebraFile::bialgebra() const {
	if (!delta)
		throw ParseError("algebra file '" + name + "' carries no coproduct table");
	TwoAssocDiffBialgebra w;
	w.alg = algebra();
	w.coproduct = *delta;
	return w;
}

namespace {

void reject_unknown(const json &obj, const std::set<std::string> &known,
                    const std::string &where) {
	for (const auto &[key, value] : obj.items())
		if (!known.count(key))
			throw ParseError("unknown field '" + key + "' in " + where);
}

Rational parse_coeff(const json &j, const std::string &where) {
	if (!j.is_string())
		throw ParseError("coefficient in " + where +
		                 " must be an exact rational string \"p/q\" (floating point and bare "
		                 "numbers are rejected)");
	auto r = Rational::parse(j.get<std::string>());
	if (!r)
		throw ParseError("malformed rational '" + j.get<std::string>() + "' in " + where);
	return *r;
}

Word parse_word(const json &j, const GradedSpace &space, const std::string &where) {
	if (!j.is_array())
		throw ParseError("word in " + where + " must be an array of generator names");
	Word w;
	for (const auto &item : j) {
		if (!item.is_string())
			throw ParseError("generator name in " + where + " must be a string");
		int g = space.find(item.get<std::string>());
		if (g < 0)
			throw ParseError("unknown generator '" + item.get<std::string>() + "' in " + where);
		w.push_back(g);
	}
	return w;
}

MultiMap parse_table(const json &j, const GradedSpace &space, int in_arity, int out_arity,
                     int degree, bool total, const std::string &where) {
	if (!j.is_array())
		throw ParseError("table '" + where + "' must be an array of rows");
	std::map<Word, Tensor, WordLess> table;
	for (const auto &row : j) {
		if (!row.is_object())
			throw ParseError("row in " + where + " must be an object");
		reject_unknown(row, {"in", "out"}, where + " row");
		if (!row.contains("in") || !row.contains("out"))
			throw ParseError("row in " + where + " needs 'in' and 'out'");
		Word in = parse_word(row["in"], space, where);
		if (static_cast<int>(in.size()) != in_arity)
			throw ParseError("row in " + where + " has " + std::to_string(in.size()) +
			                 " inputs, expected " + std::to_string(in_arity));
		if (table.count(in))
			throw ParseError("duplicate row in " + where + " at " + space.word_name(in));
		Tensor value;
		if (!row["out"].is_array())
			throw ParseError("'out' in " + where + " must be an array of [coeff, word] pairs");
		for (const auto &term : row["out"]) {
			if (!term.is_array() || term.size() != 2)
				throw ParseError("term in " + where + " must be a [coeff, word] pair");
			Rational c = parse_coeff(term[0], where);
			Word out = parse_word(term[1], space, where);
			if (static_cast<int>(out.size()) != out_arity)
				throw ParseError("output word length mismatch in " + where);
			tensor_add(value, out, c);
		}
		table.emplace(std::move(in), std::move(value));
	}
	try {
		return MultiMap::make(space, in_arity, out_arity, degree, std::move(table), total);
	} catch (const Error &e) {
		throw ParseError(where + ": " + e.what());
	}
}

json word_json(const GradedSpace &space, const Word &w) {
	json arr = json::array();
	for (int g : w)
		arr.push_back(space.gens[g].name);
	return arr;
}

json table_json(const GradedSpace &space, const MultiMap &m) {
	json rows = json::array();
	for (const auto &[in, value] : m.table) {
		json row;
		row["in"] = word_json(space, in);
		json out = json::array();
		for (const auto &[w, c] : value)
			out.push_back(json::array({c.str(), word_json(space, w)}));
		row["out"] = std::move(out);
		rows.push_back(std::move(row));
	}
	return rows;
}

} // namespace

AlgebraFile parse_algebra_file(const std::string &text) {
	json root;
	try {
		root = json::parse(text);
	} catch (const std::exception &e) {
		throw ParseError(std::string("not valid JSON: ") + e.what());
	}
	if (!root.is_object())
		throw ParseError("top level must be an object");
	reject_unknown(root, {"name", "generators", "unit", "bullet", "circ", "diff", "delta",
	                      "truncated"},
	               "top level");
	for (const char *field : {"name", "generators", "unit", "bullet", "circ", "diff"})
		if (!root.contains(field))
			throw ParseError(std::string("missing field '") + field + "'");

	AlgebraFile f;
	if (!root["name"].is_string())
		throw ParseError("'name' must be a string");
	f.name = root["name"].get<std::string>();

	std::vector<GradedSpace::Generator> gens;
	if (!root["generators"].is_array())
		throw ParseError("'generators' must be an array of [name, degree] pairs");
	for (const auto &g : root["generators"]) {
		if (!g.is_array() || g.size() != 2 || !g[0].is_string() || !g[1].is_number_integer())
			throw ParseError("generator entries must be [name, integer degree]");
		gens.push_back({g[0].get<std::string>(), g[1].get<int>()});
	}
	if (!root["unit"].is_string())
		throw ParseError("'unit' must name a generator");
	std::string unit_name = root["unit"].get<std::string>();
	int unit = -1;
	for (size_t i = 0; i < gens.size(); ++i)
		if (gens[i].name == unit_name)
			unit = static_cast<int>(i);
	if (unit < 0)
		throw ParseError("unit designation '" + unit_name + "' names no generator");
	try {
		f.space = GradedSpace::make(std::move(gens), unit);
	} catch (const Error &e) {
		throw ParseError(e.what());
	}

	if (root.contains("truncated")) {
		if (!root["truncated"].is_boolean())
			throw ParseError("'truncated' must be a boolean");
		f.truncated = root["truncated"].get<bool>();
	}
	bool total = !f.truncated;
	f.bullet = parse_table(root["bullet"], f.space, 2, 1, 0, total, "bullet");
	f.circ = parse_table(root["circ"], f.space, 2, 1, 0, total, "circ");
	f.diff = parse_table(root["diff"], f.space, 1, 1, -1, true, "diff");
	if (root.contains("delta"))
		f.delta = parse_table(root["delta"], f.space, 1, 2, 0, true, "delta");
	return f;
}

std::string serialize_algebra_file(const AlgebraFile &f) {
	json root;
	root["name"] = f.name;
	json gens = json::array();
	for (const auto &g : f.space.gens)
		gens.push_back(json::array({g.name, g.degree}));
	root["generators"] = std::move(gens);
	root["unit"] = f.space.gens[*f.space.unit].name;
	root["bullet"] = table_json(f.space, f.bullet);
	root["circ"] = table_json(f.space, f.circ);
	root["diff"] = table_json(f.space, f.diff);
	if (f.delta)
		root["delta"] = table_json(f.space, *f.delta);
	if (f.truncated)
		root["truncated"] = true;
	return root.dump(2) + "\n";
}

std::vector<std::string> corpus_names() {
	return {"dual2", "ext1", "poly3", "upper2"};
}

namespace {

MultiMap table_of(const GradedSpace &V, int in_arity, int out_arity, int degree,
                  std::vector<std::pair<Word, Tensor>> rows) {
	std::map<Word, Tensor, WordLess> table;
	for (auto &[in, value] : rows)
		table.emplace(std::move(in), std::move(value));
	return MultiMap::make(V, in_arity, out_arity, degree, std::move(table));
}

// unit rows 1*x = x*1 = x for every generator
std::vector<std::pair<Word, Tensor>> unit_rows(const GradedSpace &V) {
	int u = *V.unit;
	std::vector<std::pair<Word, Tensor>> rows;
	for (int g = 0; g < V.dim(); ++g) {
		rows.push_back({Word{u, g}, Tensor{{Word{g}, Rational(1)}}});
		if (g != u)
			rows.push_back({Word{g, u}, Tensor{{Word{g}, Rational(1)}}});
	}
	return rows;
}

} // namespace

AlgebraFile corpus_algebra(const std::string &name) {
	AlgebraFile f;
	f.name = name;
	if (name == "poly3") {
		// K[t]/t^3 as circ; the dga product is the square-zero one, and the
		// differential sends t^2 to t, so diff is a bullet-derivation but
		// not a circ-derivation.
		f.space = GradedSpace::make({{"1", 0}, {"t", 1}, {"t2", 2}}, 0);
		int t = 1, t2 = 2;
		f.bullet = table_of(f.space, 2, 1, 0, unit_rows(f.space));
		auto circ_rows = unit_rows(f.space);
		circ_rows.push_back({Word{t, t}, Tensor{{Word{t2}, Rational(1)}}});
		f.circ = table_of(f.space, 2, 1, 0, std::move(circ_rows));
		f.diff = table_of(f.space, 1, 1, -1, {{Word{t2}, Tensor{{Word{t}, Rational(1)}}}});
	} else if (name == "ext1") {
		// exterior algebra on one degree-1 generator with de Rham-style diff
		f.space = GradedSpace::make({{"1", 0}, {"e", 1}}, 0);
		int e = 1;
		f.bullet = table_of(f.space, 2, 1, 0, unit_rows(f.space));
		f.circ = f.bullet;
		f.diff = table_of(f.space, 1, 1, -1, {{Word{e}, Tensor{{Word{0}, Rational(1)}}}});
	} else if (name == "dual2") {
		// dual numbers: eps*eps = 0 for bullet, eps*eps = eps for circ
		f.space = GradedSpace::make({{"1", 0}, {"eps", 0}}, 0);
		int eps = 1;
		f.bullet = table_of(f.space, 2, 1, 0, unit_rows(f.space));
		auto circ_rows = unit_rows(f.space);
		circ_rows.push_back({Word{eps, eps}, Tensor{{Word{eps}, Rational(1)}}});
		f.circ = table_of(f.space, 2, 1, 0, std::move(circ_rows));
		f.diff = MultiMap::zero(1, 1, -1);
	} else if (name == "upper2") {
		// upper-triangular 2x2 matrices: a = E11, b = E12, unit = identity
		f.space = GradedSpace::make({{"1", 0}, {"a", 0}, {"b", 0}}, 0);
		int a = 1, b = 2;
		auto rows = unit_rows(f.space);
		rows.push_back({Word{a, a}, Tensor{{Word{a}, Rational(1)}}});
		rows.push_back({Word{a, b}, Tensor{{Word{b}, Rational(1)}}});
		rows.push_back({Word{b, a}, Tensor{}});
		rows.push_back({Word{b, b}, Tensor{}});
		f.bullet = table_of(f.space, 2, 1, 0, std::move(rows));
		f.circ = f.bullet;
		f.diff = MultiMap::zero(1, 1, -1);
	} else {
		throw ParseError("unknown example '" + name + "'");
	}
	return f;
}

AlgebraFile enveloping_file(const AlgebraFile &base, int cap) {
	BInfinity s = underlying_b_infinity(base.algebra(), cap);
	TwoAssocDiffBialgebra u = enveloping(s, cap);
	AlgebraFile f;
	f.name = base.name + "-env";
	f.space = u.alg.space;
	f.bullet = u.alg.bullet;
	f.circ = u.alg.circ;
	f.diff = u.alg.diff;
	f.delta = u.coproduct;
	f.truncated = true;
	return f;
}

} // namespace binfty
