#include "binfty/structures.hpp"

#include <sstream>

namespace binfty {

std::string LawReport::summary() const {
	std::ostringstream os;
	os << law << ": " << (all_pass() ? "pass" : "FAIL");
	if (first_failure) {
		os << " at " << first_failure->arity << " on " << first_failure->input
		   << "; lhs = " << first_failure->lhs << ", rhs = " << first_failure->rhs;
	}
	return os.str();
}

AInfinity AInfinity::make(GradedSpace space, int arity_cap, std::map<int, MultiMap> maps) {
	if (arity_cap < 1)
		throw Error("AInfinity: arity cap must be >= 1");
	for (const auto &[n, mm] : maps) {
		if (n < 1 || n > arity_cap)
			throw Error("AInfinity: map index outside 1..cap");
		if (mm.in_arity != n || mm.out_arity != 1)
			throw Error("AInfinity: m_n arity mismatch");
		if (!mm.is_zero() && mm.degree != -1)
			throw Error("AInfinity: m_n must have degree -1");
	}
	AInfinity a;
	a.space = std::move(space);
	a.arity_cap = arity_cap;
	a.m = std::move(maps);
	return a;
}

const MultiMap *AInfinity::at(int n) const {
	auto it = m.find(n);
	return it == m.end() ? nullptr : &it->second;
}

Tensor AInfinity::eval(int n, const Word &w) const {
	if (n < 1 || n > arity_cap)
		throw CapError("AInfinity: arity outside the structure cap");
	const MultiMap *mm = at(n);
	return mm ? mm->row(w) : Tensor{};
}

Multibrace Multibrace::make(GradedSpace space, int arity_cap,
                            std::map<std::pair<int, int>, MultiMap> maps) {
	if (arity_cap < 2)
		throw Error("Multibrace: arity cap must be >= 2");
	for (const auto &[ij, mm] : maps) {
		auto [i, j] = ij;
		if (i < 1 || j < 1 || i + j > arity_cap)
			throw Error("Multibrace: map index outside range");
		if (mm.in_arity != i + j || mm.out_arity != 1)
			throw Error("Multibrace: m_{i,j} arity mismatch");
		if (!mm.is_zero() && mm.degree != 0)
			throw Error("Multibrace: m_{i,j} must have degree 0");
	}
	Multibrace b;
	b.space = std::move(space);
	b.arity_cap = arity_cap;
	b.m = std::move(maps);
	return b;
}

const MultiMap *Multibrace::at(int i, int j) const {
	auto it = m.find({i, j});
	return it == m.end() ? nullptr : &it->second;
}

Tensor Multibrace::eval(int i, int j, const Word &w) const {
	if (i < 0 || j < 0)
		throw Error("Multibrace: negative arity");
	if ((i == 0 && j == 1) || (i == 1 && j == 0))
		return Tensor{{w, Rational(1)}};
	if (i == 0 || j == 0)
		return {};
	if (i + j > arity_cap)
		throw CapError("Multibrace: arity outside the structure cap");
	const MultiMap *mm = at(i, j);
	return mm ? mm->row(w) : Tensor{};
}

BInfinity BInfinity::make(AInfinity a, Multibrace b) {
	if (!(a.space == b.space))
		throw Error("BInfinity: A-infinity and multibrace parts live on different spaces");
	return BInfinity{std::move(a), std::move(b)};
}

Tensor multibrace_expansion(const GradedSpace &V, const BraceEval &eval, int i, int j, int r,
                            const Word &w) {
	if (static_cast<int>(w.size()) != i + j)
		throw Error("multibrace_expansion: word length != i+j");
	Tensor out;
	for (const auto &is : compositions(i, r, false)) {
		for (const auto &js : compositions(j, r, false)) {
			bool dead = false;
			for (int a = 0; a < r; ++a) {
				int ia = is[a], ja = js[a];
				bool unit_part = (ia == 0 && ja == 1) || (ia == 1 && ja == 0);
				if (!unit_part && (ia == 0 || ja == 0)) {
					dead = true;
					break;
				}
			}
			if (dead)
				continue;

			// Interleave the blocks: I_1 J_1 I_2 J_2 ... I_r J_r.
			std::vector<int> arrangement;
			arrangement.reserve(i + j);
			int ipos = 0, jpos = i;
			std::vector<std::pair<int, int>> block_spans; // (start, len) in arrangement
			for (int a = 0; a < r; ++a) {
				block_spans.emplace_back(static_cast<int>(arrangement.size()), is[a] + js[a]);
				for (int p = 0; p < is[a]; ++p)
					arrangement.push_back(ipos++);
				for (int p = 0; p < js[a]; ++p)
					arrangement.push_back(jpos++);
			}
			int sign = arrangement_sign(V, w, arrangement);
			Word perm(w.size());
			for (size_t p = 0; p < arrangement.size(); ++p)
				perm[p] = w[arrangement[p]];

			std::vector<AppliedFactor> factors;
			factors.reserve(r);
			for (int a = 0; a < r; ++a) {
				Word block(perm.begin() + block_spans[a].first,
				           perm.begin() + block_spans[a].first + block_spans[a].second);
				int bdeg = V.degree_of(block);
				bool unit_part = (is[a] == 0 && js[a] == 1) || (is[a] == 1 && js[a] == 0);
				Tensor value = unit_part ? Tensor{{block, Rational(1)}}
				                         : eval(is[a], js[a], block);
				factors.push_back({0, bdeg, std::move(value)});
			}
			tensor_add(out, combine_factors(factors), Rational(sign));
		}
	}
	return out;
}

Tensor coderivation_expansion(const GradedSpace &V, const ArityEval &eval, int map_degree,
                              int n, int k, const Word &w) {
	if (static_cast<int>(w.size()) != n)
		throw Error("coderivation_expansion: word length != n");
	Tensor out;
	for (int i = 0; i + 1 <= k; ++i) {
		int j = k - 1 - i;
		int len = n - i - j;
		if (len < 1)
			continue;
		std::vector<AppliedFactor> factors;
		factors.reserve(k);
		for (int p = 0; p < i; ++p)
			factors.push_back({0, V.degree(w[p]), Tensor{{Word{w[p]}, Rational(1)}}});
		Word block(w.begin() + i, w.begin() + i + len);
		factors.push_back({map_degree, V.degree_of(block), eval(len, block)});
		for (int p = i + len; p < n; ++p)
			factors.push_back({0, V.degree(w[p]), Tensor{{Word{w[p]}, Rational(1)}}});
		tensor_add(out, combine_factors(factors));
	}
	return out;
}

MultiMap coderivation_components(const AInfinity &a, int n, int k) {
	if (n < 0 || k < 0 || n > a.arity_cap)
		throw CapError("coderivation_components: arity outside caps");
	ArityEval eval = [&a](int l, const Word &block) { return a.eval(l, block); };
	std::map<Word, Tensor, WordLess> table;
	for (const Word &w : basis_words(a.space, n)) {
		Tensor v = coderivation_expansion(a.space, eval, -1, n, k, w);
		if (!v.empty())
			table.emplace(w, std::move(v));
	}
	return MultiMap::make(a.space, n, k, -1, std::move(table));
}

MultiMap coalgebra_map_components(const Multibrace &b, int i, int j, int r) {
	if (i < 0 || j < 0 || r < 0 || i + j > b.arity_cap)
		throw CapError("coalgebra_map_components: arity outside caps");
	BraceEval eval = [&b](int ii, int jj, const Word &block) { return b.eval(ii, jj, block); };
	std::map<Word, Tensor, WordLess> table;
	for (const Word &w : basis_words(b.space, i + j)) {
		Tensor v = multibrace_expansion(b.space, eval, i, j, r, w);
		if (!v.empty())
			table.emplace(w, std::move(v));
	}
	return MultiMap::make(b.space, i + j, r, 0, std::move(table));
}

Tensor multibrace_product_words(const Multibrace &b, const Word &w1, const Word &w2) {
	if (w1.empty())
		return Tensor{{w2, Rational(1)}};
	if (w2.empty())
		return Tensor{{w1, Rational(1)}};
	int i = static_cast<int>(w1.size()), j = static_cast<int>(w2.size());
	if (i + j > b.arity_cap)
		throw CapError("multibrace_product_words: combined length exceeds arity cap");
	Word w = w1;
	w.insert(w.end(), w2.begin(), w2.end());
	BraceEval eval = [&b](int ii, int jj, const Word &block) { return b.eval(ii, jj, block); };
	Tensor out;
	for (int r = 1; r <= i + j; ++r)
		tensor_add(out, multibrace_expansion(b.space, eval, i, j, r, w));
	return out;
}

Tensor multibrace_product(const Multibrace &b, const Tensor &x, const Tensor &y) {
	Tensor out;
	for (const auto &[w1, c1] : x)
		for (const auto &[w2, c2] : y)
			tensor_add(out, multibrace_product_words(b, w1, w2), c1 * c2);
	return out;
}

Tensor coderivation_apply_word(const AInfinity &a, const Word &w) {
	int n = static_cast<int>(w.size());
	if (n > a.arity_cap)
		throw CapError("coderivation_apply_word: word length exceeds arity cap");
	ArityEval eval = [&a](int l, const Word &block) { return a.eval(l, block); };
	Tensor out;
	for (int k = 1; k <= n; ++k)
		tensor_add(out, coderivation_expansion(a.space, eval, -1, n, k, w));
	return out;
}

Tensor coderivation_apply(const AInfinity &a, const Tensor &x) {
	Tensor out;
	for (const auto &[w, c] : x)
		tensor_add(out, coderivation_apply_word(a, w), c);
	return out;
}

namespace {

std::string tuple_label(const char *fmt, const std::vector<int> &vals) {
	std::ostringstream os;
	os << fmt;
	if (vals.size() == 1) {
		os << vals[0];
	} else {
		os << "(";
		for (size_t i = 0; i < vals.size(); ++i)
			os << (i ? "," : "") << vals[i];
		os << ")";
	}
	return os.str();
}

} // namespace

LawReport check_a_infinity(const AInfinity &a, int cap) {
	if (cap > a.arity_cap)
		throw CapError("check_a_infinity: cap exceeds structure arity cap");
	LawReport report;
	report.law = "a-infinity (d^2 = 0)";
	ArityEval eval = [&a](int l, const Word &block) { return a.eval(l, block); };
	for (int n = 1; n <= cap; ++n) {
		bool ok = true;
		for (const Word &w : basis_words(a.space, n)) {
			Tensor acc;
			for (int k = 1; k <= n; ++k) {
				Tensor inner = coderivation_expansion(a.space, eval, -1, n, k, w);
				for (const auto &[u, c] : inner)
					tensor_add(acc, a.eval(k, u), c);
			}
			if (!acc.empty()) {
				report.fail(tuple_label("n=", {n}), a.space.word_name(w), a.space.show(acc),
				            "0");
				ok = false;
				break;
			}
		}
		if (ok)
			report.record(tuple_label("n=", {n}), true);
	}
	return report;
}

LawReport check_multibrace(const Multibrace &b, int cap) {
	if (cap > b.arity_cap)
		throw CapError("check_multibrace: cap exceeds structure arity cap");
	LawReport report;
	report.law = "multibrace associativity";
	BraceEval eval = [&b](int ii, int jj, const Word &block) { return b.eval(ii, jj, block); };
	const GradedSpace &V = b.space;
	for (int i = 1; i + 2 <= cap; ++i) {
		for (int j = 1; i + j + 1 <= cap; ++j) {
			for (int k = 1; i + j + k <= cap; ++k) {
				bool ok = true;
				for (const Word &w : basis_words(V, i + j + k)) {
					Word wij(w.begin(), w.begin() + i + j);
					Word wk(w.begin() + i + j, w.end());
					Word wi(w.begin(), w.begin() + i);
					Word wjk(w.begin() + i, w.end());

					Tensor lhs;
					for (int r = 1; r <= i + j; ++r) {
						Tensor inner = multibrace_expansion(V, eval, i, j, r, wij);
						std::vector<AppliedFactor> fs{
						    {0, V.degree_of(wij), std::move(inner)},
						    {0, V.degree_of(wk), Tensor{{wk, Rational(1)}}}};
						for (const auto &[u, c] : combine_factors(fs))
							tensor_add(lhs, b.eval(r, k, u), c);
					}
					Tensor rhs;
					for (int s = 1; s <= j + k; ++s) {
						Tensor inner = multibrace_expansion(V, eval, j, k, s, wjk);
						std::vector<AppliedFactor> fs{
						    {0, V.degree_of(wi), Tensor{{wi, Rational(1)}}},
						    {0, V.degree_of(wjk), std::move(inner)}};
						for (const auto &[u, c] : combine_factors(fs))
							tensor_add(rhs, b.eval(i, s, u), c);
					}
					if (lhs != rhs) {
						report.fail(tuple_label("(i,j,k)=", {i, j, k}), V.word_name(w),
						            V.show(lhs), V.show(rhs));
						ok = false;
						break;
					}
				}
				if (ok)
					report.record(tuple_label("(i,j,k)=", {i, j, k}), true);
			}
		}
	}
	return report;
}

LawReport check_compatibility(const BInfinity &s, int cap) {
	if (cap > s.b.arity_cap || cap > s.a.arity_cap)
		throw CapError("check_compatibility: cap exceeds structure arity cap");
	LawReport report;
	report.law = "b-infinity compatibility (d derivation of mu)";
	const GradedSpace &V = s.a.space;
	BraceEval beval = [&s](int ii, int jj, const Word &block) { return s.b.eval(ii, jj, block); };
	for (int i = 1; i + 1 <= cap; ++i) {
		for (int j = 1; i + j <= cap; ++j) {
			bool ok = true;
			for (const Word &w : basis_words(V, i + j)) {
				Tensor lhs;
				for (int r = 1; r <= i + j; ++r) {
					Tensor inner = multibrace_expansion(V, beval, i, j, r, w);
					for (const auto &[u, c] : inner)
						tensor_add(lhs, s.a.eval(r, u), c);
				}

				Tensor rhs;
				for (int p = 0; p < i; ++p) {
					for (int q = 0; p + q < i; ++q) {
						int len = i - p - q;
						std::vector<AppliedFactor> fs;
						for (int t = 0; t < p; ++t)
							fs.push_back({0, V.degree(w[t]), Tensor{{Word{w[t]}, Rational(1)}}});
						Word block(w.begin() + p, w.begin() + p + len);
						fs.push_back({-1, V.degree_of(block), s.a.eval(len, block)});
						for (int t = p + len; t < i + j; ++t)
							fs.push_back({0, V.degree(w[t]), Tensor{{Word{w[t]}, Rational(1)}}});
						for (const auto &[u, c] : combine_factors(fs))
							tensor_add(rhs, s.b.eval(p + 1 + q, j, u), c);
					}
				}
				for (int p = 0; p < j; ++p) {
					for (int q = 0; p + q < j; ++q) {
						int len = j - p - q;
						std::vector<AppliedFactor> fs;
						for (int t = 0; t < i + p; ++t)
							fs.push_back({0, V.degree(w[t]), Tensor{{Word{w[t]}, Rational(1)}}});
						Word block(w.begin() + i + p, w.begin() + i + p + len);
						fs.push_back({-1, V.degree_of(block), s.a.eval(len, block)});
						for (int t = i + p + len; t < i + j; ++t)
							fs.push_back({0, V.degree(w[t]), Tensor{{Word{w[t]}, Rational(1)}}});
						for (const auto &[u, c] : combine_factors(fs))
							tensor_add(rhs, s.b.eval(i, p + 1 + q, u), c);
					}
				}
				if (lhs != rhs) {
					report.fail(tuple_label("(i,j)=", {i, j}), V.word_name(w), V.show(lhs),
					            V.show(rhs));
					ok = false;
					break;
				}
			}
			if (ok)
				report.record(tuple_label("(i,j)=", {i, j}), true);
		}
	}
	return report;
}

Tensor shuffle_product(const GradedSpace &V, const Tensor &x, const Tensor &y, int word_cap) {
	Tensor out;
	for (const auto &[w1, c1] : x) {
		for (const auto &[w2, c2] : y) {
			int i = static_cast<int>(w1.size()), j = static_cast<int>(w2.size());
			if (i + j > word_cap)
				throw CapError("shuffle_product: combined length exceeds word cap");
			Word w = w1;
			w.insert(w.end(), w2.begin(), w2.end());
			// choose output slots for the first block, in order
			std::vector<int> pick(i);
			for (int p = 0; p < i; ++p)
				pick[p] = p;
			while (true) {
				std::vector<int> arrangement(i + j);
				{
					int a = 0, bpos = 0;
					std::vector<bool> used(i + j, false);
					for (int p : pick)
						used[p] = true;
					for (int pos = 0; pos < i + j; ++pos)
						arrangement[pos] = used[pos] ? a++ : i + bpos++;
				}
				int sign = arrangement_sign(V, w, arrangement);
				Word perm(w.size());
				for (size_t p = 0; p < arrangement.size(); ++p)
					perm[p] = w[arrangement[p]];
				tensor_add(out, perm, c1 * c2 * Rational(sign));

				// next i-subset of {0..i+j-1}
				if (i == 0)
					break;
				int t = i - 1;
				while (t >= 0 && pick[t] == j + t)
					--t;
				if (t < 0)
					break;
				++pick[t];
				for (int p = t + 1; p < i; ++p)
					pick[p] = pick[p - 1] + 1;
			}
		}
	}
	return out;
}

Multibrace quasi_shuffle_multibrace(const GradedSpace &V, const MultiMap &bullet, int arity_cap) {
	if (bullet.in_arity != 2 || bullet.out_arity != 1)
		throw Error("quasi_shuffle_multibrace: bullet must have arity 2 -> 1");
	if (!bullet.is_zero() && bullet.degree != 0)
		throw Error("quasi_shuffle_multibrace: bullet must have degree 0");
	std::map<std::pair<int, int>, MultiMap> maps;
	if (!bullet.is_zero())
		maps.emplace(std::make_pair(1, 1), bullet);
	return Multibrace::make(V, arity_cap, std::move(maps));
}

BInfinity quasi_trivial_b_infinity(const GradedSpace &V, const MultiMap &bullet,
                                   const MultiMap &diff, int arity_cap) {
	LawReport report;
	report.law = "differential graded algebra axioms";
	probe_associative(V, bullet, "bullet", report);
	if (V.unit)
		probe_unit_laws(V, bullet, *V.unit, "bullet", report);
	probe_square_zero(V, diff, "diff", report);
	probe_leibniz(V, bullet, diff, "(bullet, diff)", report);
	if (!report.all_pass())
		throw ValidationError("quasi_trivial_b_infinity: input is not a dga; " +
		                          report.summary(),
		                      report);
	std::map<int, MultiMap> am;
	if (!diff.is_zero())
		am.emplace(1, diff);
	std::map<std::pair<int, int>, MultiMap> bm;
	if (!bullet.is_zero())
		bm.emplace(std::make_pair(1, 1), bullet);
	return BInfinity::make(AInfinity::make(V, arity_cap, std::move(am)),
	                       Multibrace::make(V, arity_cap, std::move(bm)));
}

void probe_associative(const GradedSpace &V, const MultiMap &op, const std::string &name,
                       LawReport &report) {
	for (const Word &w : basis_words(V, 3)) {
		if (!op.defined_on({w[0], w[1]}) || !op.defined_on({w[1], w[2]}))
			continue;
		try {
			Tensor ab = op.row({w[0], w[1]});
			Tensor lhs;
			for (const auto &[u, c] : ab)
				tensor_add(lhs, op.row({u[0], w[2]}), c);
			Tensor bc = op.row({w[1], w[2]});
			Tensor rhs;
			for (const auto &[u, c] : bc)
				tensor_add(rhs, op.row({w[0], u[0]}), c);
			if (lhs != rhs) {
				report.fail(name + " associative", V.word_name(w), V.show(lhs), V.show(rhs));
				return;
			}
		} catch (const CapError &) {
			// tuple outside the truncation domain
		}
	}
	report.record(name + " associative", true);
}

void probe_unit_laws(const GradedSpace &V, const MultiMap &op, int unit, const std::string &name,
                     LawReport &report) {
	for (int g = 0; g < V.dim(); ++g) {
		if (!op.defined_on({unit, g}) || !op.defined_on({g, unit}))
			continue;
		Tensor expect{{Word{g}, Rational(1)}};
		try {
			if (op.row({unit, g}) != expect || op.row({g, unit}) != expect) {
				report.fail(name + " unit laws", V.gens[g].name,
				            V.show(op.row({unit, g})) + " | " + V.show(op.row({g, unit})),
				            V.show(expect));
				return;
			}
		} catch (const CapError &) {
		}
	}
	report.record(name + " unit laws", true);
}

void probe_square_zero(const GradedSpace &V, const MultiMap &d, const std::string &name,
                       LawReport &report) {
	for (int g = 0; g < V.dim(); ++g) {
		try {
			Tensor sq = d.apply(d.row({g}));
			if (!sq.empty()) {
				report.fail(name + " square zero", V.gens[g].name, V.show(sq), "0");
				return;
			}
		} catch (const CapError &) {
		}
	}
	report.record(name + " square zero", true);
}

void probe_leibniz(const GradedSpace &V, const MultiMap &op, const MultiMap &d,
                   const std::string &name, LawReport &report) {
	for (const Word &w : basis_words(V, 2)) {
		if (!op.defined_on(w))
			continue;
		try {
			Tensor lhs = d.apply(op.row(w));
			std::vector<AppliedFactor> f1{{d.degree, V.degree(w[0]), d.row({w[0]})},
			                              {0, V.degree(w[1]), Tensor{{Word{w[1]}, Rational(1)}}}};
			std::vector<AppliedFactor> f2{{0, V.degree(w[0]), Tensor{{Word{w[0]}, Rational(1)}}},
			                              {d.degree, V.degree(w[1]), d.row({w[1]})}};
			Tensor rhs = op.apply(combine_factors(f1));
			tensor_add(rhs, op.apply(combine_factors(f2)));
			if (lhs != rhs) {
				report.fail(name + " Leibniz", V.word_name(w), V.show(lhs), V.show(rhs));
				return;
			}
		} catch (const CapError &) {
		}
	}
	report.record(name + " Leibniz", true);
}

} // namespace binfty
