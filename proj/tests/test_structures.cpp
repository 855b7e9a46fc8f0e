#include <doctest.h>

#include "binfty/algebra_file.hpp"
#include "binfty/structures.hpp"

using namespace binfty;

namespace {

Tensor one(const Word &w) {
	return Tensor{{w, Rational(1)}};
}

GradedSpace mixed_space() {
	return GradedSpace::make({{"a", 1}, {"b", 2}});
}

MultiMap diff_on(const GradedSpace &V, std::map<Word, Tensor, WordLess> rows) {
	return MultiMap::make(V, 1, 1, -1, std::move(rows));
}

} // namespace

TEST_CASE("trivial A-infinity structure from a square-zero endomorphism") {
	GradedSpace V = GradedSpace::make({{"1", 0}, {"e", 1}}, 0);
	std::map<Word, Tensor, WordLess> drows;
	drows[{1}] = one({0});
	std::map<int, MultiMap> maps;
	maps.emplace(1, diff_on(V, std::move(drows)));
	AInfinity a = AInfinity::make(V, 5, std::move(maps));
	CHECK(check_a_infinity(a, 5).all_pass());

	// m_k^k = sum id^i (x) diff (x) id^{k-1-i}; m_n^k = 0 otherwise
	MultiMap m22 = coderivation_components(a, 2, 2);
	Tensor expect = one({0, 1});
	tensor_add(expect, Word{1, 0}, Rational(-1));
	CHECK(m22.row({1, 1}) == expect);
	CHECK(coderivation_components(a, 2, 1).is_zero());
	CHECK(coderivation_components(a, 3, 2).is_zero());
	CHECK(coderivation_components(a, 2, 3).is_zero()); // k > n always vanishes
	CHECK(multimap_equal(coderivation_components(a, 1, 1), *a.at(1)));
}

TEST_CASE("a-infinity checker fails at n=1 when the square is nonzero") {
	std::map<int, MultiMap> maps;
	GradedSpace W = GradedSpace::make({{"u", 0}, {"v", 1}, {"w", 2}});
	std::map<Word, Tensor, WordLess> rows;
	rows[{1}] = one({0});
	rows[{2}] = one({1}); // d(w) = v, d(v) = u: d^2(w) = u != 0
	maps.emplace(1, MultiMap::make(W, 1, 1, -1, std::move(rows)));
	AInfinity a = AInfinity::make(W, 3, std::move(maps));
	LawReport r = check_a_infinity(a, 3);
	CHECK_FALSE(r.all_pass());
	REQUIRE(r.first_failure.has_value());
	CHECK(r.first_failure->arity == "n=1");
}

TEST_CASE("shuffle product: unit, two letters, (2,1)-shuffle") {
	GradedSpace V = mixed_space();
	// v sh 1 = v
	CHECK(shuffle_product(V, one({0}), one({}), 5) == one({0}));
	// a sh b = ab + (-1)^{|a||b|} ba
	Tensor r = shuffle_product(V, one({0}), one({1}), 5);
	Tensor expect = one({0, 1});
	tensor_add(expect, Word{1, 0}, Rational(1)); // |a||b| = 2 even
	CHECK(r == expect);
	// both odd: a sh a' with degrees 1,1
	GradedSpace W = GradedSpace::make({{"x", 1}, {"y", 1}});
	Tensor r2 = shuffle_product(W, one({0}), one({1}), 5);
	Tensor e2 = one({0, 1});
	tensor_add(e2, Word{1, 0}, Rational(-1));
	CHECK(r2 == e2);
	// (v1 v2) sh w with all degrees odd: v1v2w - v1wv2 + wv1v2
	GradedSpace U = GradedSpace::make({{"v1", 1}, {"v2", 1}, {"w", 1}});
	Tensor r3 = shuffle_product(U, one({0, 1}), one({2}), 5);
	Tensor e3 = one({0, 1, 2});
	tensor_add(e3, Word{0, 2, 1}, Rational(-1));
	tensor_add(e3, Word{2, 0, 1}, Rational(1));
	CHECK(r3 == e3);
	CHECK_THROWS_AS(shuffle_product(U, one({0, 1}), one({2}), 2), CapError);
}

TEST_CASE("shuffle product is graded commutative and associative up to length 5") {
	GradedSpace V = mixed_space();
	for (int l1 = 0; l1 <= 3; ++l1) {
		for (int l2 = 0; l1 + l2 <= 5 && l2 <= 3; ++l2) {
			for (const Word &w1 : basis_words(V, l1)) {
				for (const Word &w2 : basis_words(V, l2)) {
					Tensor xy = shuffle_product(V, one(w1), one(w2), 5);
					int parity = (V.degree_of(w1) & 1) * (V.degree_of(w2) & 1);
					Tensor yx = tensor_scaled(shuffle_product(V, one(w2), one(w1), 5),
					                          Rational(parity ? -1 : 1));
					CHECK(xy == yx);
				}
			}
		}
	}
	for (int l1 = 1; l1 <= 2; ++l1)
		for (int l2 = 1; l2 <= 2; ++l2)
			for (int l3 = 1; l1 + l2 + l3 <= 5 && l3 <= 2; ++l3)
				for (const Word &w1 : basis_words(V, l1))
					for (const Word &w2 : basis_words(V, l2))
						for (const Word &w3 : basis_words(V, l3)) {
							Tensor lhs = shuffle_product(
							    V, shuffle_product(V, one(w1), one(w2), 5), one(w3), 5);
							Tensor rhs = shuffle_product(
							    V, one(w1), shuffle_product(V, one(w2), one(w3), 5), 5);
							CHECK(lhs == rhs);
						}
}

TEST_CASE("trivial multibrace components reproduce the shuffle product") {
	GradedSpace V = mixed_space();
	Multibrace b = Multibrace::make(V, 5, {});
	for (int i = 1; i <= 3; ++i) {
		for (int j = 1; i + j <= 5 && j <= 3; ++j) {
			// top component r = i+j equals the shuffle; lower components vanish
			for (const Word &w : basis_words(V, i + j)) {
				Word w1(w.begin(), w.begin() + i), w2(w.begin() + i, w.end());
				BraceEval eval = [&b](int a, int c, const Word &block) {
					return b.eval(a, c, block);
				};
				Tensor top = multibrace_expansion(V, eval, i, j, i + j, w);
				CHECK(top == shuffle_product(V, one(w1), one(w2), 5));
				for (int r = 1; r < i + j; ++r)
					CHECK(multibrace_expansion(V, eval, i, j, r, w).empty());
			}
		}
	}
	CHECK(check_multibrace(b, 5).all_pass());
}

TEST_CASE("multibrace top component is the shuffle for any structure") {
	auto alg = corpus_algebra("upper2").algebra();
	Multibrace b;
	{
		std::map<std::pair<int, int>, MultiMap> maps;
		maps.emplace(std::make_pair(1, 1), alg.bullet);
		b = Multibrace::make(alg.space, 5, std::move(maps));
	}
	for (int i = 1; i <= 2; ++i)
		for (int j = 1; j <= 2; ++j) {
			MultiMap top = coalgebra_map_components(b, i, j, i + j);
			for (const Word &w : basis_words(alg.space, i + j)) {
				Word w1(w.begin(), w.begin() + i), w2(w.begin() + i, w.end());
				CHECK(top.row(w) ==
				      shuffle_product(alg.space, one(w1), one(w2), 5));
			}
		}
}

TEST_CASE("components vanish above the top arity and r=1 recovers the map") {
	auto alg = corpus_algebra("dual2").algebra();
	std::map<std::pair<int, int>, MultiMap> maps;
	maps.emplace(std::make_pair(1, 1), alg.bullet);
	Multibrace b = Multibrace::make(alg.space, 6, std::move(maps));
	CHECK(coalgebra_map_components(b, 1, 1, 3).is_zero());
	CHECK(coalgebra_map_components(b, 2, 1, 4).is_zero());
	CHECK(multimap_equal(coalgebra_map_components(b, 1, 1, 1), alg.bullet));
}

TEST_CASE("quasi-shuffle multibrace: associative bullet passes, trivial recovered") {
	// associative non-unital product on span{u, v}: u*u = v, rest zero
	GradedSpace V = GradedSpace::make({{"u", 0}, {"v", 0}});
	std::map<Word, Tensor, WordLess> rows;
	rows[{0, 0}] = one({1});
	MultiMap bullet = MultiMap::make(V, 2, 1, 0, std::move(rows));
	Multibrace qs = quasi_shuffle_multibrace(V, bullet, 6);
	CHECK(check_multibrace(qs, 6).all_pass());

	Multibrace trivial = quasi_shuffle_multibrace(V, MultiMap::zero(2, 1, 0), 6);
	CHECK(trivial.m.empty());
}

TEST_CASE("unital quasi-shuffle: unit components agree with the unital projection") {
	// with a unital bullet, the linear part of the extension is the
	// restriction of (unit-extended p_1) * (unit-extended p_1): the stored
	// (1,1) component is bullet and the zero-indexed components reduce to
	// the unit laws of bullet
	auto alg = corpus_algebra("dual2").algebra();
	Multibrace qs = quasi_shuffle_multibrace(alg.space, alg.circ, 4);
	int u = *alg.space.unit;
	for (int g = 0; g < alg.space.dim(); ++g) {
		CHECK(qs.eval(0, 1, {g}) == alg.circ.row({u, g}));
		CHECK(qs.eval(1, 0, {g}) == alg.circ.row({g, u}));
	}
	for (const Word &w : basis_words(alg.space, 2))
		CHECK(qs.eval(1, 1, w) == alg.circ.row(w));
}

TEST_CASE("quasi-shuffle multibrace with non-associative bullet fails at (1,1,1)") {
	GradedSpace V = GradedSpace::make({{"x", 0}, {"y", 0}});
	std::map<Word, Tensor, WordLess> rows;
	rows[{0, 0}] = one({1}); // x*x = y
	rows[{1, 0}] = one({0}); // y*x = x   => (xx)x = x, x(xx) = x*y = 0
	MultiMap bullet = MultiMap::make(V, 2, 1, 0, std::move(rows));
	Multibrace qs = quasi_shuffle_multibrace(V, bullet, 6);
	LawReport r = check_multibrace(qs, 6);
	CHECK_FALSE(r.all_pass());
	REQUIRE(r.first_failure.has_value());
	CHECK(r.first_failure->arity == "(i,j,k)=(1,1,1)");
}

TEST_CASE("quasi-trivial B-infinity from a dga passes all checkers") {
	auto ext1 = corpus_algebra("ext1").algebra();
	BInfinity s = quasi_trivial_b_infinity(ext1.space, ext1.bullet, ext1.diff, 5);
	CHECK(check_a_infinity(s.a, 5).all_pass());
	CHECK(check_multibrace(s.b, 5).all_pass());
	CHECK(check_compatibility(s, 5).all_pass());

	// all-zero input gives the all-zero structure
	GradedSpace V = GradedSpace::make({{"x", 0}});
	BInfinity z = quasi_trivial_b_infinity(V, MultiMap::zero(2, 1, 0),
	                                       MultiMap::zero(1, 1, -1), 4);
	CHECK(z.a.m.empty());
	CHECK(z.b.m.empty());
	CHECK(check_compatibility(z, 4).all_pass());
}

TEST_CASE("quasi-trivial constructor rejects a non-derivation diff") {
	auto p3 = corpus_algebra("poly3").algebra();
	CHECK_THROWS_AS(quasi_trivial_b_infinity(p3.space, p3.circ, p3.diff, 4),
	                ValidationError);
}

TEST_CASE("multibrace product on words satisfies the unit law") {
	auto alg = corpus_algebra("dual2").algebra();
	std::map<std::pair<int, int>, MultiMap> maps;
	maps.emplace(std::make_pair(1, 1), alg.circ);
	Multibrace b = Multibrace::make(alg.space, 6, std::move(maps));
	CHECK(multibrace_product_words(b, {}, {1, 1}) == one({1, 1}));
	CHECK(multibrace_product_words(b, {1}, {}) == one({1}));
	CHECK(multibrace_product_words(b, {}, {}) == one({}));
	CHECK_THROWS_AS(multibrace_product_words(b, {1, 1, 1, 1}, {1, 1, 1}), CapError);
}

TEST_CASE("top component is the shuffle for random map families") {
	// (2.7)-style expansion property: the r = i+j component never sees the
	// stored maps, so it equals the shuffle for arbitrary (even lawless) data
	GradedSpace V = GradedSpace::make({{"p", 1}, {"q", 2}});
	uint64_t seed = 0x2545f4914f6cdd1dull;
	auto next = [&seed] {
		seed ^= seed << 13;
		seed ^= seed >> 7;
		seed ^= seed << 17;
		return seed;
	};
	for (int trial = 0; trial < 5; ++trial) {
		std::map<std::pair<int, int>, MultiMap> maps;
		for (auto [i, j] : {std::pair{1, 1}, {1, 2}, {2, 1}}) {
			std::map<Word, Tensor, WordLess> rows;
			for (const Word &w : basis_words(V, i + j)) {
				Tensor val;
				for (int g = 0; g < V.dim(); ++g) {
					if (V.degree(g) != V.degree_of(w))
						continue;
					long c = static_cast<long>(next() % 5) - 2;
					if (c)
						tensor_add(val, Word{g}, Rational(c));
				}
				if (!val.empty())
					rows.emplace(w, std::move(val));
			}
			MultiMap m = MultiMap::make(V, i + j, 1, 0, std::move(rows));
			if (!m.is_zero())
				maps.emplace(std::make_pair(i, j), std::move(m));
		}
		Multibrace b = Multibrace::make(V, 5, std::move(maps));
		for (int i = 1; i <= 2; ++i) {
			for (int j = 1; j <= 2; ++j) {
				MultiMap top = coalgebra_map_components(b, i, j, i + j);
				for (const Word &w : basis_words(V, i + j)) {
					Word w1(w.begin(), w.begin() + i), w2(w.begin() + i, w.end());
					CHECK(top.row(w) == shuffle_product(V, one(w1), one(w2), 5));
				}
				CHECK(coalgebra_map_components(b, i, j, i + j + 1).is_zero());
			}
		}
	}
}

TEST_CASE("law reports are deterministic") {
	GradedSpace V = GradedSpace::make({{"x", 0}, {"y", 0}});
	std::map<Word, Tensor, WordLess> rows;
	rows[{0, 0}] = one({1});
	rows[{1, 0}] = one({0});
	MultiMap bullet = MultiMap::make(V, 2, 1, 0, std::move(rows));
	Multibrace qs = quasi_shuffle_multibrace(V, bullet, 5);
	LawReport r1 = check_multibrace(qs, 5);
	LawReport r2 = check_multibrace(qs, 5);
	CHECK(r1.summary() == r2.summary());
	REQUIRE(r1.first_failure.has_value());
	CHECK(r1.first_failure->input == r2.first_failure->input);
	CHECK(r1.first_failure->lhs == r2.first_failure->lhs);
}
