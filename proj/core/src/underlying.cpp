#include "binfty/underlying.hpp"

#include <sstream>

namespace binfty {

LawReport validate(const TwoAssocDiffAlgebra &alg) {
	LawReport report;
	report.law = "2-associative differential algebra axioms";
	if (!alg.space.unit) {
		report.fail("unit designated", "-", "no unit generator", "a degree-0 unit");
		return report;
	}
	probe_associative(alg.space, alg.bullet, "bullet", report);
	probe_associative(alg.space, alg.circ, "circ", report);
	probe_unit_laws(alg.space, alg.bullet, *alg.space.unit, "bullet", report);
	probe_unit_laws(alg.space, alg.circ, *alg.space.unit, "circ", report);
	probe_square_zero(alg.space, alg.diff, "diff", report);
	probe_leibniz(alg.space, alg.bullet, alg.diff, "(bullet, diff)", report);
	return report;
}

void require_valid(const TwoAssocDiffAlgebra &alg) {
	LawReport report = validate(alg);
	if (!report.all_pass())
		throw ValidationError("not a 2-associative differential algebra; " + report.summary(),
		                      report);
}

Tensor UnderlyingEvaluator::circ_mul(const Tensor &x, const Tensor &y) const {
	Tensor out;
	for (const auto &[wx, cx] : x)
		for (const auto &[wy, cy] : y)
			tensor_add(out, alg_.circ.row({wx[0], wy[0]}), cx * cy);
	return out;
}

Tensor UnderlyingEvaluator::bullet_mul(const Tensor &x, const Tensor &y) const {
	Tensor out;
	for (const auto &[wx, cx] : x)
		for (const auto &[wy, cy] : y)
			tensor_add(out, alg_.bullet.row({wx[0], wy[0]}), cx * cy);
	return out;
}

Tensor UnderlyingEvaluator::circ_fold(const Word &w) const {
	if (w.empty())
		return Tensor{{Word{*alg_.space.unit}, Rational(1)}};
	Tensor acc{{Word{w[0]}, Rational(1)}};
	for (size_t p = 1; p < w.size(); ++p)
		acc = circ_mul(acc, Tensor{{Word{w[p]}, Rational(1)}});
	return acc;
}

Tensor UnderlyingEvaluator::circ_fold_elem(const Tensor &x) const {
	Tensor out;
	for (const auto &[w, c] : x)
		tensor_add(out, circ_fold(w), c);
	return out;
}

Tensor UnderlyingEvaluator::mb(int i, int j, const Word &w) {
	auto key = std::make_tuple(i, j, w);
	auto it = memo_mb_.find(key);
	if (it != memo_mb_.end())
		return it->second;

	Word wi(w.begin(), w.begin() + i);
	Word wj(w.begin() + i, w.end());
	Tensor value = bullet_mul(circ_fold(wi), circ_fold(wj));
	BraceEval eval = [this](int a, int b, const Word &block) { return mb(a, b, block); };
	for (int r = 2; r <= i + j; ++r) {
		Tensor inner = multibrace_expansion(alg_.space, eval, i, j, r, w);
		tensor_add(value, circ_fold_elem(inner), Rational(-1));
	}
	memo_mb_.emplace(std::move(key), value);
	return value;
}

Tensor UnderlyingEvaluator::ainf(int n, const Word &w) {
	auto key = std::make_pair(n, w);
	auto it = memo_a_.find(key);
	if (it != memo_a_.end())
		return it->second;

	Tensor value = alg_.diff.apply(circ_fold(w));
	ArityEval eval = [this](int l, const Word &block) { return ainf(l, block); };
	for (int k = 2; k <= n; ++k) {
		Tensor inner = coderivation_expansion(alg_.space, eval, -1, n, k, w);
		tensor_add(value, circ_fold_elem(inner), Rational(-1));
	}
	memo_a_.emplace(std::move(key), value);
	return value;
}

Multibrace derive_multibrace(const TwoAssocDiffAlgebra &alg, int arity_cap) {
	require_valid(alg);
	UnderlyingEvaluator ev(alg);
	std::map<std::pair<int, int>, MultiMap> maps;
	for (int i = 1; i < arity_cap; ++i) {
		for (int j = 1; i + j <= arity_cap; ++j) {
			std::map<Word, Tensor, WordLess> table;
			for (const Word &w : basis_words(alg.space, i + j)) {
				Tensor v = ev.mb(i, j, w);
				if (!v.empty())
					table.emplace(w, std::move(v));
			}
			MultiMap mm = MultiMap::make(alg.space, i + j, 1, 0, std::move(table));
			if (!mm.is_zero())
				maps.emplace(std::make_pair(i, j), std::move(mm));
		}
	}
	return Multibrace::make(alg.space, arity_cap, std::move(maps));
}

AInfinity derive_a_infinity(const TwoAssocDiffAlgebra &alg, int arity_cap) {
	require_valid(alg);
	UnderlyingEvaluator ev(alg);
	std::map<int, MultiMap> maps;
	for (int n = 1; n <= arity_cap; ++n) {
		std::map<Word, Tensor, WordLess> table;
		for (const Word &w : basis_words(alg.space, n)) {
			Tensor v = ev.ainf(n, w);
			if (!v.empty())
				table.emplace(w, std::move(v));
		}
		MultiMap mm = MultiMap::make(alg.space, n, 1, -1, std::move(table));
		if (!mm.is_zero())
			maps.emplace(n, std::move(mm));
	}
	return AInfinity::make(alg.space, arity_cap, std::move(maps));
}

MultiMap borjeson_closed_form(const TwoAssocDiffAlgebra &alg, int n) {
	if (n < 1)
		throw CapError("borjeson_closed_form: n must be >= 1");
	require_valid(alg);
	if (n == 1)
		return alg.diff;
	UnderlyingEvaluator ev(alg);
	const GradedSpace &V = alg.space;
	std::map<Word, Tensor, WordLess> table;
	for (const Word &w : basis_words(V, n)) {
		Word head(w.begin(), w.end() - 1);
		Word tail(w.begin() + 1, w.end());
		Word mid(w.begin() + 1, w.end() - 1);
		Tensor v = alg.diff.apply(ev.circ_fold(w));

		// diff(v_1 ... v_{n-1}) circ v_n
		std::vector<AppliedFactor> f2{
		    {-1, V.degree_of(head), alg.diff.apply(ev.circ_fold(head))},
		    {0, V.degree(w.back()), Tensor{{Word{w.back()}, Rational(1)}}}};
		for (const auto &[u, c] : combine_factors(f2))
			tensor_add(v, alg.circ.row(u), -c);

		// v_1 circ diff(v_2 ... v_n)
		std::vector<AppliedFactor> f3{
		    {0, V.degree(w.front()), Tensor{{Word{w.front()}, Rational(1)}}},
		    {-1, V.degree_of(tail), alg.diff.apply(ev.circ_fold(tail))}};
		for (const auto &[u, c] : combine_factors(f3))
			tensor_add(v, alg.circ.row(u), -c);

		if (n >= 3) {
			// v_1 circ diff(v_2 ... v_{n-1}) circ v_n
			std::vector<AppliedFactor> f4{
			    {0, V.degree(w.front()), Tensor{{Word{w.front()}, Rational(1)}}},
			    {-1, V.degree_of(mid), alg.diff.apply(ev.circ_fold(mid))},
			    {0, V.degree(w.back()), Tensor{{Word{w.back()}, Rational(1)}}}};
			for (const auto &[u, c] : combine_factors(f4))
				tensor_add(v, ev.circ_fold(u), c);
		}
		if (!v.empty())
			table.emplace(w, std::move(v));
	}
	return MultiMap::make(V, n, 1, -1, std::move(table));
}

BInfinity underlying_b_infinity(const TwoAssocDiffAlgebra &alg, int arity_cap) {
	return BInfinity::make(derive_a_infinity(alg, arity_cap),
	                       derive_multibrace(alg, arity_cap));
}

Tensor counit_epsilon(const TwoAssocDiffAlgebra &alg, const Tensor &x) {
	UnderlyingEvaluator ev(alg);
	return ev.circ_fold_elem(x);
}

LawReport check_epsilon_hom(const TwoAssocDiffAlgebra &alg, const BInfinity &s, int word_cap) {
	LawReport report;
	report.law = "epsilon_V is a 2-associative differential algebra homomorphism";
	UnderlyingEvaluator ev(alg);
	const GradedSpace &V = alg.space;

	for (int l1 = 0; l1 <= word_cap; ++l1) {
		for (int l2 = 0; l1 + l2 <= word_cap; ++l2) {
			bool mu_ok = true, circ_ok = true;
			for (const Word &w1 : basis_words(V, l1)) {
				for (const Word &w2 : basis_words(V, l2)) {
					Tensor e1 = ev.circ_fold(w1), e2 = ev.circ_fold(w2);
					Tensor lhs_mu = ev.circ_fold_elem(multibrace_product_words(s.b, w1, w2));
					Tensor rhs_mu = ev.bullet_mul(e1, e2);
					if (lhs_mu != rhs_mu) {
						report.fail("bullet (l1,l2)=(" + std::to_string(l1) + "," +
						                std::to_string(l2) + ")",
						            V.word_name(w1) + " , " + V.word_name(w2), V.show(lhs_mu),
						            V.show(rhs_mu));
						mu_ok = false;
						break;
					}
					Word cat = w1;
					cat.insert(cat.end(), w2.begin(), w2.end());
					Tensor lhs_c = ev.circ_fold(cat);
					Tensor rhs_c = ev.circ_mul(e1, e2);
					if (lhs_c != rhs_c) {
						report.fail("circ (l1,l2)=(" + std::to_string(l1) + "," +
						                std::to_string(l2) + ")",
						            V.word_name(w1) + " , " + V.word_name(w2), V.show(lhs_c),
						            V.show(rhs_c));
						circ_ok = false;
						break;
					}
				}
				if (!mu_ok || !circ_ok)
					break;
			}
			if (mu_ok)
				report.record("bullet (l1,l2)=(" + std::to_string(l1) + "," +
				                  std::to_string(l2) + ")",
				              true);
			if (circ_ok)
				report.record("circ (l1,l2)=(" + std::to_string(l1) + "," +
				                  std::to_string(l2) + ")",
				              true);
		}
	}

	for (int l = 0; l <= word_cap; ++l) {
		bool ok = true;
		for (const Word &w : basis_words(V, l)) {
			Tensor lhs = ev.circ_fold_elem(coderivation_apply_word(s.a, w));
			Tensor rhs = alg.diff.apply(ev.circ_fold(w));
			if (lhs != rhs) {
				report.fail("diff l=" + std::to_string(l), V.word_name(w), V.show(lhs),
				            V.show(rhs));
				ok = false;
				break;
			}
		}
		if (ok)
			report.record("diff l=" + std::to_string(l), true);
	}
	return report;
}

LawReport check_defining_identities(const TwoAssocDiffAlgebra &alg, const BInfinity &s,
                                    int cap) {
	LawReport report;
	report.law = "defining identities of the underlying structure";
	UnderlyingEvaluator ev(alg);
	const GradedSpace &V = alg.space;
	BraceEval beval = [&s](int a, int b, const Word &block) { return s.b.eval(a, b, block); };
	ArityEval aeval = [&s](int l, const Word &block) { return s.a.eval(l, block); };

	for (int i = 1; i < cap; ++i) {
		for (int j = 1; i + j <= cap; ++j) {
			bool ok = true;
			for (const Word &w : basis_words(V, i + j)) {
				Tensor lhs;
				for (int r = 1; r <= i + j; ++r)
					tensor_add(lhs, ev.circ_fold_elem(
					                    multibrace_expansion(V, beval, i, j, r, w)));
				Tensor rhs = ev.bullet_mul(ev.circ_fold(Word(w.begin(), w.begin() + i)),
				                           ev.circ_fold(Word(w.begin() + i, w.end())));
				if (lhs != rhs) {
					report.fail("(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")",
					            V.word_name(w), V.show(lhs), V.show(rhs));
					ok = false;
					break;
				}
			}
			if (ok)
				report.record("(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")",
				              true);
		}
	}
	for (int n = 1; n <= cap; ++n) {
		bool ok = true;
		for (const Word &w : basis_words(V, n)) {
			Tensor lhs;
			for (int k = 1; k <= n; ++k)
				tensor_add(lhs, ev.circ_fold_elem(
				                    coderivation_expansion(V, aeval, -1, n, k, w)));
			Tensor rhs = alg.diff.apply(ev.circ_fold(w));
			if (lhs != rhs) {
				report.fail("n=" + std::to_string(n), V.word_name(w), V.show(lhs), V.show(rhs));
				ok = false;
				break;
			}
		}
		if (ok)
			report.record("n=" + std::to_string(n), true);
	}
	return report;
}

WordDas word_das_algebra(const BInfinity &A, int cap) {
	if (cap > A.b.arity_cap || cap > A.a.arity_cap)
		throw CapError("word_das_algebra: cap exceeds the structure arity caps");
	WordDas das;
	das.ws = word_space(A.a.space, cap);
	const WordSpaceInfo &ws = das.ws;

	std::map<Word, Tensor, WordLess> bullet;
	for (size_t a = 0; a < ws.words.size(); ++a) {
		for (size_t b = 0; b < ws.words.size(); ++b) {
			if (static_cast<int>(ws.words[a].size() + ws.words[b].size()) > cap)
				continue;
			bullet[{static_cast<int>(a), static_cast<int>(b)}] =
			    ws.inject(multibrace_product_words(A.b, ws.words[a], ws.words[b]));
		}
	}

	std::map<Word, Tensor, WordLess> diff;
	for (size_t a = 0; a < ws.words.size(); ++a) {
		Tensor v = ws.inject(coderivation_apply_word(A.a, ws.words[a]));
		if (!v.empty())
			diff[{static_cast<int>(a)}] = std::move(v);
	}

	das.alg.space = ws.space;
	das.alg.bullet = MultiMap::make(ws.space, 2, 1, 0, std::move(bullet), /*total=*/false);
	das.alg.circ = concatenation_map(ws);
	das.alg.diff = MultiMap::make(ws.space, 1, 1, -1, std::move(diff));
	return das;
}

LawReport check_iota_hom(const BInfinity &A, int arity_cap, int inner_cap) {
	if (arity_cap > inner_cap)
		throw CapError("check_iota_hom: requested arity exceeds the inner word cap");
	LawReport report;
	report.law = "iota_1 is a homomorphism into the word algebra";
	WordDas das = word_das_algebra(A, inner_cap);
	UnderlyingEvaluator ev(das.alg);
	const GradedSpace &V = A.a.space;

	auto iota_word = [&](const Word &tuple) {
		Word wg(tuple.size());
		for (size_t p = 0; p < tuple.size(); ++p)
			wg[p] = das.ws.gen_of(Word{tuple[p]});
		return wg;
	};

	// concatenation of generators recovers the word itself
	for (int n = 1; n <= arity_cap; ++n) {
		bool ok = true;
		for (const Word &tuple : basis_words(V, n)) {
			Tensor folded = ev.circ_fold(iota_word(tuple));
			Tensor expect{{Word{das.ws.gen_of(tuple)}, Rational(1)}};
			if (folded != expect) {
				report.fail("concat n=" + std::to_string(n), V.word_name(tuple),
				            das.ws.space.show(folded), das.ws.space.show(expect));
				ok = false;
				break;
			}
		}
		if (ok)
			report.record("concat n=" + std::to_string(n), true);
	}

	for (int i = 1; i < arity_cap; ++i) {
		for (int j = 1; i + j <= arity_cap; ++j) {
			bool ok = true;
			for (const Word &tuple : basis_words(V, i + j)) {
				Tensor derived = ev.mb(i, j, iota_word(tuple));
				Tensor expect = das.ws.inject(A.b.eval(i, j, tuple));
				if (derived != expect) {
					report.fail("R(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")",
					            V.word_name(tuple), das.ws.space.show(derived),
					            das.ws.space.show(expect));
					ok = false;
					break;
				}
			}
			if (ok)
				report.record("R(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")",
				              true);
		}
	}

	for (int n = 1; n <= arity_cap; ++n) {
		bool ok = true;
		for (const Word &tuple : basis_words(V, n)) {
			Tensor derived = ev.ainf(n, iota_word(tuple));
			Tensor expect = das.ws.inject(A.a.eval(n, tuple));
			if (derived != expect) {
				report.fail("S n=" + std::to_string(n), V.word_name(tuple),
				            das.ws.space.show(derived), das.ws.space.show(expect));
				ok = false;
				break;
			}
		}
		if (ok)
			report.record("S n=" + std::to_string(n), true);
	}
	return report;
}

} // namespace binfty
