#include "binfty/tensor_coalgebra.hpp"

#include <algorithm>

namespace binfty {

TruncationPolicy TruncationPolicy::make(int word_cap, int arity_cap) {
	if (word_cap < 1)
		throw Error("TruncationPolicy: word cap must be >= 1");
	if (arity_cap > word_cap)
		throw Error("TruncationPolicy: arity cap exceeds word cap");
	return {word_cap, arity_cap};
}

TupleTensor deconcatenate(const Tensor &x) {
	TupleTensor out;
	for (const auto &[w, c] : x) {
		for (size_t i = 0; i <= w.size(); ++i) {
			WordTuple t{Word(w.begin(), w.begin() + i), Word(w.begin() + i, w.end())};
			auto it = out.find(t);
			if (it == out.end())
				out.emplace(std::move(t), c);
			else {
				it->second += c;
				if (it->second.is_zero())
					out.erase(it);
			}
		}
	}
	return out;
}

namespace {

void tuple_add(TupleTensor &into, WordTuple t, const Rational &c) {
	if (c.is_zero())
		return;
	auto it = into.find(t);
	if (it == into.end())
		into.emplace(std::move(t), c);
	else {
		it->second += c;
		if (it->second.is_zero())
			into.erase(it);
	}
}

// Reduced deconcatenation of the first word of each tuple.
TupleTensor reduced_step(const TupleTensor &x) {
	TupleTensor out;
	for (const auto &[t, c] : x) {
		const Word &w = t.front();
		for (size_t i = 1; i + 1 <= w.size(); ++i) {
			WordTuple nt;
			nt.reserve(t.size() + 1);
			nt.emplace_back(w.begin(), w.begin() + i);
			nt.emplace_back(w.begin() + i, w.end());
			nt.insert(nt.end(), t.begin() + 1, t.end());
			tuple_add(out, std::move(nt), c);
		}
	}
	return out;
}

} // namespace

TupleTensor reduced_coproduct(const Tensor &x, int r) {
	if (r < 0)
		throw Error("reduced_coproduct: negative iteration count");
	TupleTensor cur;
	for (const auto &[w, c] : x) {
		if (r >= 1 && w.empty())
			throw Error("reduced_coproduct: input is not reduced");
		cur[{w}] = c;
	}
	for (int step = 0; step < r; ++step)
		cur = reduced_step(cur);
	return cur;
}

int filtration_level(const Tensor &x) {
	Tensor reduced = x;
	reduced.erase(Word{});
	if (reduced.empty())
		return 0;
	TupleTensor cur;
	for (const auto &[w, c] : reduced)
		cur[{w}] = c;
	int r = 0;
	while (!cur.empty()) {
		cur = reduced_step(cur);
		++r;
	}
	return r;
}

CoalgebraMapFamily CoalgebraMapFamily::make(const GradedSpace &source, const GradedSpace &target,
                                            std::map<int, MultiMap> components) {
	std::optional<int> degree;
	for (const auto &[k, m] : components) {
		if (k < 1)
			throw Error("CoalgebraMapFamily: component index must be >= 1");
		if (m.in_arity != k || m.out_arity != 1)
			throw Error("CoalgebraMapFamily: component arity mismatch");
		if (!m.is_zero()) {
			if (degree && *degree != m.degree)
				throw Error("CoalgebraMapFamily: components of mixed degree");
			degree = m.degree;
		}
	}
	CoalgebraMapFamily f;
	f.source = &source;
	f.target = &target;
	f.degree = degree.value_or(0);
	f.components = std::move(components);
	return f;
}

const MultiMap *CoalgebraMapFamily::at(int k) const {
	auto it = components.find(k);
	return it == components.end() ? nullptr : &it->second;
}

Tensor extend_coalgebra_map_word(const CoalgebraMapFamily &f, const Word &w) {
	int n = static_cast<int>(w.size());
	if (n == 0)
		return Tensor{{Word{}, Rational(1)}};
	Tensor out;
	for (int r = 1; r <= n; ++r) {
		for (const auto &comp : compositions(n, r, true)) {
			std::vector<AppliedFactor> factors;
			factors.reserve(r);
			int pos = 0;
			bool dead = false;
			for (int a = 0; a < r && !dead; ++a) {
				Word block(w.begin() + pos, w.begin() + pos + comp[a]);
				pos += comp[a];
				const MultiMap *m = f.at(comp[a]);
				if (!m) {
					dead = true;
					break;
				}
				factors.push_back({m->degree, f.source->degree_of(block), m->row(block)});
			}
			if (!dead)
				tensor_add(out, combine_factors(factors));
		}
	}
	return out;
}

Tensor extend_coalgebra_map(const CoalgebraMapFamily &f, const Tensor &x) {
	Tensor out;
	for (const auto &[w, c] : x)
		tensor_add(out, extend_coalgebra_map_word(f, w), c);
	return out;
}

CoderivationFamily CoderivationFamily::make(const GradedSpace &space,
                                            std::map<int, MultiMap> components) {
	std::optional<int> degree;
	for (const auto &[k, m] : components) {
		if (k < 1)
			throw Error("CoderivationFamily: component index must be >= 1");
		if (m.in_arity != k || m.out_arity != 1)
			throw Error("CoderivationFamily: component arity mismatch");
		if (!m.is_zero()) {
			if (degree && *degree != m.degree)
				throw Error("CoderivationFamily: components of mixed degree");
			degree = m.degree;
		}
	}
	CoderivationFamily d;
	d.space = &space;
	d.degree = degree.value_or(0);
	d.components = std::move(components);
	return d;
}

const MultiMap *CoderivationFamily::at(int k) const {
	auto it = components.find(k);
	return it == components.end() ? nullptr : &it->second;
}

Tensor extend_coderivation_word(const CoderivationFamily &d, const Word &w) {
	int n = static_cast<int>(w.size());
	Tensor out;
	for (int i = 0; i < n; ++i) {
		for (int len = 1; len + i <= n; ++len) {
			const MultiMap *m = d.at(len);
			if (!m)
				continue;
			std::vector<AppliedFactor> factors;
			factors.reserve(n - len + 1);
			for (int p = 0; p < i; ++p)
				factors.push_back({0, d.space->degree(w[p]),
				                   Tensor{{Word{w[p]}, Rational(1)}}});
			Word block(w.begin() + i, w.begin() + i + len);
			factors.push_back({m->degree, d.space->degree_of(block), m->row(block)});
			for (int p = i + len; p < n; ++p)
				factors.push_back({0, d.space->degree(w[p]),
				                   Tensor{{Word{w[p]}, Rational(1)}}});
			tensor_add(out, combine_factors(factors));
		}
	}
	return out;
}

Tensor extend_coderivation(const CoderivationFamily &d, const Tensor &x) {
	Tensor out;
	for (const auto &[w, c] : x)
		tensor_add(out, extend_coderivation_word(d, w), c);
	return out;
}

FiniteCoalgebra FiniteCoalgebra::make(GradedSpace space, MultiMap coproduct) {
	if (!space.unit)
		throw Error("FiniteCoalgebra: basis must designate a unit");
	if (coproduct.in_arity != 1 || coproduct.out_arity != 2 || coproduct.degree != 0)
		throw Error("FiniteCoalgebra: coproduct must be a degree-0 map with arities 1 -> 2");
	FiniteCoalgebra c;
	c.space = std::move(space);
	c.coproduct = std::move(coproduct);
	return c;
}

void FiniteCoalgebra::validate() const {
	int u = *space.unit;
	// unit grouplike
	Tensor du = coproduct.row({u});
	if (du != Tensor{{Word{u, u}, Rational(1)}})
		throw Error("FiniteCoalgebra: unit is not grouplike");
	const MultiMap id = MultiMap::identity(space);
	for (int g = 0; g < space.dim(); ++g) {
		const Tensor &dg = coproduct.row({g});
		// counit laws with counit = indicator of the unit
		Tensor left, right;
		for (const auto &[pair, c] : dg) {
			if (pair[0] == u)
				tensor_add(left, Word{pair[1]}, c);
			if (pair[1] == u)
				tensor_add(right, Word{pair[0]}, c);
		}
		Tensor expect{{Word{g}, Rational(1)}};
		if (left != expect || right != expect)
			throw Error("FiniteCoalgebra: counit law fails at " + space.gens[g].name);
		// coassociativity
		std::vector<const MultiMap *> dl{&coproduct, &id}, dr{&id, &coproduct};
		Tensor lhs, rhs;
		for (const auto &[pair, c] : dg) {
			tensor_add(lhs, apply_map_tensor(space, dl, pair), c);
			tensor_add(rhs, apply_map_tensor(space, dr, pair), c);
		}
		if (lhs != rhs)
			throw Error("FiniteCoalgebra: coassociativity fails at " + space.gens[g].name);
	}
}

Tensor FiniteCoalgebra::reduced_delta(const Tensor &x) const {
	int u = *space.unit;
	Tensor out;
	for (const auto &[w, c] : x) {
		int g = w.at(0);
		if (g == u)
			continue; // J kills the unit
		for (const auto &[pair, cc] : coproduct.row({g})) {
			if (pair[0] == u || pair[1] == u)
				continue;
			tensor_add(out, pair, c * cc);
		}
	}
	return out;
}

Tensor FiniteCoalgebra::reduced_delta_step(const Tensor &tuples) const {
	int u = *space.unit;
	Tensor out;
	for (const auto &[t, c] : tuples) {
		int g = t.at(0);
		for (const auto &[pair, cc] : coproduct.row({g})) {
			if (pair[0] == u || pair[1] == u)
				continue;
			Word nt;
			nt.reserve(t.size() + 1);
			nt.push_back(pair[0]);
			nt.push_back(pair[1]);
			nt.insert(nt.end(), t.begin() + 1, t.end());
			tensor_add(out, nt, c * cc);
		}
	}
	return out;
}

namespace {

// Kernel of the r-fold reduced coproduct as vectors over the full basis.
// images[g] holds the tuple expansion of the reduced generator g.
std::vector<std::vector<Rational>> kernel_of_tuples(const FiniteCoalgebra &c,
                                                    const std::map<int, Tensor> &images) {
	std::vector<int> reduced;
	for (int g = 0; g < c.space.dim(); ++g)
		if (g != *c.space.unit)
			reduced.push_back(g);

	std::map<Word, int, WordLess> row_of;
	for (const auto &[g, img] : images)
		for (const auto &[t, cc] : img)
			if (!row_of.count(t))
				row_of.emplace(t, static_cast<int>(row_of.size()));

	SparseMatrix m;
	m.rows = static_cast<int>(row_of.size());
	m.cols = static_cast<int>(reduced.size());
	for (size_t j = 0; j < reduced.size(); ++j) {
		auto it = images.find(reduced[j]);
		if (it == images.end())
			continue;
		for (const auto &[t, cc] : it->second)
			m.set(row_of.at(t), static_cast<int>(j), cc);
	}

	std::vector<std::vector<Rational>> out;
	for (const auto &v : kernel_basis(m)) {
		std::vector<Rational> full(c.space.dim());
		for (size_t j = 0; j < reduced.size(); ++j)
			full[reduced[j]] = v[j];
		out.push_back(std::move(full));
	}
	return out;
}

} // namespace

std::vector<std::vector<Rational>> primitives(const FiniteCoalgebra &c) {
	c.validate();
	std::map<int, Tensor> images;
	for (int g = 0; g < c.space.dim(); ++g) {
		if (g == *c.space.unit)
			continue;
		images[g] = c.reduced_delta(Tensor{{Word{g}, Rational(1)}});
	}
	return homogeneous_rref(c.space, kernel_of_tuples(c, images));
}

RadicalResult conilpotent_radical(const FiniteCoalgebra &c) {
	c.validate();
	int u = *c.space.unit;
	std::map<int, Tensor> images;
	for (int g = 0; g < c.space.dim(); ++g) {
		if (g == u)
			continue;
		images[g] = c.reduced_delta(Tensor{{Word{g}, Rational(1)}});
	}
	auto kernel = kernel_of_tuples(c, images);
	int r = 1;
	while (true) {
		std::map<int, Tensor> next;
		for (auto &[g, img] : images)
			next[g] = c.reduced_delta_step(img);
		auto kernel2 = kernel_of_tuples(c, next);
		if (kernel2.size() == kernel.size())
			break;
		images = std::move(next);
		kernel = std::move(kernel2);
		++r;
	}

	RadicalResult res;
	res.stabilized_at = r;
	std::vector<Rational> unit_vec(c.space.dim());
	unit_vec[u] = Rational(1);
	res.basis.push_back(std::move(unit_vec));
	for (auto &v : kernel)
		res.basis.push_back(std::move(v));
	res.whole_space = static_cast<int>(res.basis.size()) == c.space.dim();
	if (!res.whole_space) {
		auto rows = rref_rows(res.basis);
		for (int g = 0; g < c.space.dim(); ++g) {
			std::vector<Rational> e(c.space.dim());
			e[g] = Rational(1);
			auto residue = reduce_against(rows, e);
			bool inside = std::all_of(residue.begin(), residue.end(),
			                          [](const Rational &x) { return x.is_zero(); });
			if (!inside) {
				res.witness_generator = g;
				break;
			}
		}
	}
	return res;
}

int WordSpaceInfo::gen_of(const Word &w) const {
	auto it = index.find(w);
	if (it == index.end())
		throw CapError("word space: word exceeds the truncation cap");
	return it->second;
}

Tensor WordSpaceInfo::inject(const Tensor &x) const {
	Tensor out;
	for (const auto &[w, c] : x)
		tensor_add(out, Word{gen_of(w)}, c);
	return out;
}

WordSpaceInfo word_space(const GradedSpace &V, int cap) {
	if (cap < 1)
		throw Error("word_space: cap must be >= 1");
	WordSpaceInfo ws;
	ws.cap = cap;
	for (int len = 0; len <= cap; ++len)
		for (const Word &w : basis_words(V, len))
			ws.words.push_back(w);
	std::vector<GradedSpace::Generator> gens;
	gens.reserve(ws.words.size());
	for (size_t i = 0; i < ws.words.size(); ++i) {
		ws.index.emplace(ws.words[i], static_cast<int>(i));
		gens.push_back({V.word_name(ws.words[i]), V.degree_of(ws.words[i])});
	}
	ws.space = GradedSpace::make(std::move(gens), 0);
	return ws;
}

MultiMap deconcatenation_map(const WordSpaceInfo &ws) {
	std::map<Word, Tensor, WordLess> table;
	for (size_t g = 0; g < ws.words.size(); ++g) {
		const Word &w = ws.words[g];
		Tensor row;
		for (size_t i = 0; i <= w.size(); ++i) {
			int left = ws.gen_of(Word(w.begin(), w.begin() + i));
			int right = ws.gen_of(Word(w.begin() + i, w.end()));
			tensor_add(row, Word{left, right}, Rational(1));
		}
		table[{static_cast<int>(g)}] = std::move(row);
	}
	return MultiMap::make(ws.space, 1, 2, 0, std::move(table));
}

MultiMap concatenation_map(const WordSpaceInfo &ws) {
	std::map<Word, Tensor, WordLess> table;
	for (size_t a = 0; a < ws.words.size(); ++a) {
		for (size_t b = 0; b < ws.words.size(); ++b) {
			if (static_cast<int>(ws.words[a].size() + ws.words[b].size()) > ws.cap)
				continue;
			Word cat = ws.words[a];
			cat.insert(cat.end(), ws.words[b].begin(), ws.words[b].end());
			table[{static_cast<int>(a), static_cast<int>(b)}] =
			    Tensor{{Word{ws.gen_of(cat)}, Rational(1)}};
		}
	}
	return MultiMap::make(ws.space, 2, 1, 0, std::move(table), /*total=*/false);
}

FiniteCoalgebra truncated_tensor_coalgebra(const WordSpaceInfo &ws) {
	return FiniteCoalgebra::make(ws.space, deconcatenation_map(ws));
}

std::vector<std::vector<Rational>> homogeneous_rref(const GradedSpace &V,
                                                    std::vector<std::vector<Rational>> rows) {
	std::vector<std::vector<Rational>> split;
	for (const auto &row : rows) {
		std::map<int, std::vector<Rational>> by_degree;
		for (int g = 0; g < V.dim(); ++g) {
			if (row[g].is_zero())
				continue;
			auto &part = by_degree.try_emplace(V.degree(g), V.dim()).first->second;
			part[g] = row[g];
		}
		for (auto &[d, part] : by_degree)
			split.push_back(std::move(part));
	}
	return rref_rows(std::move(split));
}

} // namespace binfty
