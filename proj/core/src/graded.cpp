#include "binfty/graded.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace binfty {

void tensor_add(Tensor &into, const Word &w, const Rational &c) {
	if (c.is_zero())
		return;
	auto it = into.find(w);
	if (it == into.end()) {
		into.emplace(w, c);
		return;
	}
	it->second += c;
	if (it->second.is_zero())
		into.erase(it);
}

void tensor_add(Tensor &into, const Tensor &t, const Rational &scale) {
	if (scale.is_zero())
		return;
	for (const auto &[w, c] : t)
		tensor_add(into, w, c * scale);
}

bool tensor_is_zero(const Tensor &t) {
	return t.empty();
}

Tensor tensor_scaled(const Tensor &t, const Rational &c) {
	Tensor out;
	tensor_add(out, t, c);
	return out;
}

GradedSpace GradedSpace::make(std::vector<Generator> gens, std::optional<int> unit) {
	std::set<std::string> names;
	for (const auto &g : gens)
		if (!names.insert(g.name).second)
			throw Error("GradedSpace: duplicate generator name '" + g.name + "'");
	if (unit) {
		if (*unit < 0 || *unit >= static_cast<int>(gens.size()))
			throw Error("GradedSpace: unit index out of range");
		if (gens[*unit].degree != 0)
			throw Error("GradedSpace: unit generator must have degree 0");
	}
	GradedSpace s;
	s.gens = std::move(gens);
	s.unit = unit;
	return s;
}

int GradedSpace::degree_of(const Word &w) const {
	int d = 0;
	for (int g : w)
		d += degree(g);
	return d;
}

int GradedSpace::find(const std::string &name) const {
	for (size_t i = 0; i < gens.size(); ++i)
		if (gens[i].name == name)
			return static_cast<int>(i);
	return -1;
}

std::string GradedSpace::word_name(const Word &w) const {
	if (w.empty())
		return "[]";
	std::string out = "[";
	for (size_t i = 0; i < w.size(); ++i) {
		if (i)
			out += ".";
		out += gens.at(w[i]).name;
	}
	return out + "]";
}

std::string GradedSpace::show(const Tensor &t) const {
	if (t.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto &[w, c] : t) {
		if (!first)
			os << " + ";
		first = false;
		os << c.str() << "*" << word_name(w);
	}
	return os.str();
}

bool GradedSpace::operator==(const GradedSpace &o) const {
	if (unit != o.unit || gens.size() != o.gens.size())
		return false;
	for (size_t i = 0; i < gens.size(); ++i)
		if (gens[i].name != o.gens[i].name || gens[i].degree != o.gens[i].degree)
			return false;
	return true;
}

Permutation Permutation::identity(int n) {
	Permutation p;
	p.images.resize(n);
	for (int i = 0; i < n; ++i)
		p.images[i] = i;
	return p;
}

Permutation Permutation::make(std::vector<int> images) {
	std::vector<bool> seen(images.size(), false);
	for (int v : images) {
		if (v < 0 || v >= static_cast<int>(images.size()) || seen[v])
			throw Error("Permutation: images are not a bijection");
		seen[v] = true;
	}
	Permutation p;
	p.images = std::move(images);
	return p;
}

Permutation Permutation::compose(const Permutation &inner) const {
	if (size() != inner.size())
		throw Error("Permutation: size mismatch in compose");
	std::vector<int> im(images.size());
	for (int i = 0; i < size(); ++i)
		im[i] = images[inner.images[i]];
	return make(std::move(im));
}

Permutation Permutation::inverse() const {
	std::vector<int> im(images.size());
	for (int i = 0; i < size(); ++i)
		im[images[i]] = i;
	return make(std::move(im));
}

int koszul_sign(const std::vector<int> &degrees, const Permutation &sigma) {
	if (static_cast<int>(degrees.size()) != sigma.size())
		throw Error("koszul_sign: degree list and permutation size mismatch");
	int parity = 0;
	for (size_t p = 0; p < degrees.size(); ++p)
		for (size_t q = p + 1; q < degrees.size(); ++q)
			if (sigma.images[p] > sigma.images[q])
				parity += (degrees[p] & 1) * (degrees[q] & 1);
	return (parity & 1) ? -1 : 1;
}

std::pair<int, Word> permute_tensor(const GradedSpace &V, const Permutation &sigma,
                                    const Word &word) {
	if (static_cast<int>(word.size()) != sigma.size())
		throw Error("permute_tensor: word length and permutation size mismatch");
	std::vector<int> degrees(word.size());
	for (size_t i = 0; i < word.size(); ++i)
		degrees[i] = V.degree(word[i]);
	int sign = koszul_sign(degrees, sigma);
	Word out(word.size());
	for (size_t i = 0; i < word.size(); ++i)
		out[sigma.images[i]] = word[i];
	return {sign, out};
}

int arrangement_sign(const GradedSpace &V, const Word &word,
                     const std::vector<int> &arrangement) {
	// arrangement[p] = source position of the letter at output position p;
	// this is sigma^{-1} as an array.
	std::vector<int> images(arrangement.size());
	for (size_t p = 0; p < arrangement.size(); ++p)
		images[arrangement[p]] = static_cast<int>(p);
	std::vector<int> degrees(word.size());
	for (size_t i = 0; i < word.size(); ++i)
		degrees[i] = V.degree(word[i]);
	return koszul_sign(degrees, Permutation::make(std::move(images)));
}

MultiMap MultiMap::make(const GradedSpace &V, int in_arity, int out_arity, int degree,
                        std::map<Word, Tensor, WordLess> table, bool total) {
	if (in_arity < 0 || out_arity < 0)
		throw Error("MultiMap: negative arity");
	for (auto it = table.begin(); it != table.end();) {
		const Word &in = it->first;
		if (static_cast<int>(in.size()) != in_arity)
			throw Error("MultiMap: input word length != in_arity");
		int in_deg = V.degree_of(in);
		for (const auto &[out, c] : it->second) {
			if (c.is_zero())
				throw Error("MultiMap: stored zero coefficient");
			if (static_cast<int>(out.size()) != out_arity)
				throw Error("MultiMap: output word length != out_arity");
			if (V.degree_of(out) != in_deg + degree)
				throw Error("MultiMap: inhomogeneous entry at " + V.word_name(in));
		}
		if (total && it->second.empty())
			it = table.erase(it);
		else
			++it;
	}
	MultiMap m;
	m.in_arity = in_arity;
	m.out_arity = out_arity;
	m.degree = degree;
	m.total = total;
	m.table = std::move(table);
	return m;
}

MultiMap MultiMap::zero(int in_arity, int out_arity, int degree) {
	MultiMap m;
	m.in_arity = in_arity;
	m.out_arity = out_arity;
	m.degree = degree;
	return m;
}

MultiMap MultiMap::identity(const GradedSpace &V) {
	MultiMap m;
	m.in_arity = 1;
	m.out_arity = 1;
	m.degree = 0;
	for (int g = 0; g < V.dim(); ++g)
		m.table[{g}] = Tensor{{{g}, Rational(1)}};
	return m;
}

const Tensor &MultiMap::row(const Word &w) const {
	static const Tensor empty;
	auto it = table.find(w);
	if (it != table.end())
		return it->second;
	if (!total)
		throw CapError("MultiMap: value undefined (beyond truncation cap)");
	return empty;
}

Tensor MultiMap::apply(const Tensor &x) const {
	Tensor out;
	for (const auto &[w, c] : x) {
		if (static_cast<int>(w.size()) != in_arity)
			throw Error("MultiMap::apply: arity mismatch");
		tensor_add(out, row(w), c);
	}
	return out;
}

bool MultiMap::is_zero() const {
	for (const auto &[w, t] : table)
		if (!t.empty())
			return false;
	return true;
}

bool multimap_equal(const MultiMap &a, const MultiMap &b) {
	if (a.in_arity != b.in_arity || a.out_arity != b.out_arity)
		return false;
	auto normalized = [](const MultiMap &m) {
		std::map<Word, Tensor, WordLess> t;
		for (const auto &[w, v] : m.table)
			if (!v.empty())
				t.emplace(w, v);
		return t;
	};
	auto ta = normalized(a), tb = normalized(b);
	if (ta != tb)
		return false;
	if (!ta.empty() && a.degree != b.degree)
		return false;
	return true;
}

Tensor combine_factors(const std::vector<AppliedFactor> &factors) {
	int parity = 0;
	for (size_t a = 0; a < factors.size(); ++a)
		for (size_t b = a + 1; b < factors.size(); ++b)
			parity += (factors[b].map_degree & 1) * (factors[a].block_degree & 1);
	Rational sign((parity & 1) ? -1 : 1);

	Tensor acc;
	acc[{}] = sign;
	for (const auto &f : factors) {
		if (tensor_is_zero(f.value))
			return {};
		Tensor next;
		for (const auto &[wa, ca] : acc) {
			for (const auto &[wb, cb] : f.value) {
				Word w = wa;
				w.insert(w.end(), wb.begin(), wb.end());
				tensor_add(next, w, ca * cb);
			}
		}
		acc = std::move(next);
	}
	return acc;
}

Tensor apply_map_tensor(const GradedSpace &V, const std::vector<const MultiMap *> &maps,
                        const Word &word) {
	int need = 0;
	for (const auto *m : maps)
		need += m->in_arity;
	if (need != static_cast<int>(word.size()))
		throw Error("apply_map_tensor: blocks do not partition the word");
	std::vector<AppliedFactor> factors;
	factors.reserve(maps.size());
	int pos = 0;
	for (const auto *m : maps) {
		Word block(word.begin() + pos, word.begin() + pos + m->in_arity);
		pos += m->in_arity;
		factors.push_back({m->degree, V.degree_of(block), m->row(block)});
	}
	return combine_factors(factors);
}

MultiMap compose_multimap(const GradedSpace &V, const MultiMap &outer,
                          const std::vector<const MultiMap *> &inners) {
	int mid = 0, in = 0, deg = outer.degree;
	for (const auto *m : inners) {
		mid += m->out_arity;
		in += m->in_arity;
		deg += m->degree;
	}
	if (mid != outer.in_arity)
		throw Error("compose_multimap: inner out-arities do not match outer in-arity");
	std::map<Word, Tensor, WordLess> table;
	for (const Word &w : basis_words(V, in)) {
		Tensor middle = apply_map_tensor(V, inners, w);
		Tensor value = outer.apply(middle);
		if (!value.empty())
			table.emplace(w, std::move(value));
	}
	return MultiMap::make(V, in, outer.out_arity, deg, std::move(table));
}

std::vector<Word> basis_words(const GradedSpace &V, int length) {
	std::vector<Word> out;
	Word w(length, 0);
	if (length == 0) {
		out.push_back(w);
		return out;
	}
	if (V.dim() == 0)
		return out;
	while (true) {
		out.push_back(w);
		int i = length - 1;
		while (i >= 0 && w[i] == V.dim() - 1) {
			w[i] = 0;
			--i;
		}
		if (i < 0)
			break;
		++w[i];
	}
	return out;
}

std::vector<std::vector<int>> compositions(int total, int parts, bool positive) {
	std::vector<std::vector<int>> out;
	if (parts == 0) {
		if (total == 0)
			out.push_back({});
		return out;
	}
	std::vector<int> cur(parts, 0);
	std::function<void(int, int)> rec = [&](int idx, int remaining) {
		if (idx == parts - 1) {
			if (!positive || remaining >= 1) {
				cur[idx] = remaining;
				out.push_back(cur);
			}
			return;
		}
		int lo = positive ? 1 : 0;
		int hi = positive ? remaining - (parts - 1 - idx) : remaining;
		for (int v = lo; v <= hi; ++v) {
			cur[idx] = v;
			rec(idx + 1, remaining - v);
		}
	};
	if (!positive || total >= parts)
		rec(0, total);
	return out;
}

} // namespace binfty
