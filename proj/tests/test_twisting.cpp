#include <doctest.h>

#include "binfty/algebra_file.hpp"
#include "binfty/twisting.hpp"
#include "binfty/underlying.hpp"

using namespace binfty;

namespace {

Tensor one(const Word &w) {
	return Tensor{{w, Rational(1)}};
}

Twisting identity_twisting(const GradedSpace &V, int cap) {
	std::map<int, MultiMap> t;
	t.emplace(1, MultiMap::identity(V));
	return Twisting::make(V, cap, std::move(t));
}

bool structures_equal(const BInfinity &x, const BInfinity &y, int cap) {
	for (int n = 1; n <= cap; ++n) {
		MultiMap a = x.a.at(n) ? *x.a.at(n) : MultiMap::zero(n, 1, -1);
		MultiMap b = y.a.at(n) ? *y.a.at(n) : MultiMap::zero(n, 1, -1);
		if (!multimap_equal(a, b))
			return false;
	}
	for (int i = 1; i < cap; ++i)
		for (int j = 1; i + j <= cap; ++j) {
			MultiMap a = x.b.at(i, j) ? *x.b.at(i, j) : MultiMap::zero(i + j, 1, 0);
			MultiMap b = y.b.at(i, j) ? *y.b.at(i, j) : MultiMap::zero(i + j, 1, 0);
			if (!multimap_equal(a, b))
				return false;
		}
	return true;
}

} // namespace

TEST_CASE("twisting requires t_1 = id") {
	GradedSpace V = GradedSpace::make({{"x", 0}});
	CHECK_THROWS_AS(Twisting::make(V, 2, {}), Error);
	CHECK_NOTHROW(identity_twisting(V, 2));
}

TEST_CASE("identity twisting inverts to itself") {
	GradedSpace V = GradedSpace::make({{"x", 0}, {"y", 1}});
	Twisting tau = identity_twisting(V, 3);
	Twisting inv = invert_twisting(tau);
	for (int n = 2; n <= 3; ++n)
		CHECK(inv.at(n)->is_zero());
	for (const Word &w : basis_words(V, 3))
		CHECK(tau.apply_word(w) == one(w));
}

TEST_CASE("twisting_from_product gives iterated multiplications") {
	auto alg = corpus_algebra("poly3").algebra();
	Twisting tau = twisting_from_product(alg.space, alg.circ, 4);
	// p_1 tau on a word multiplies its letters
	UnderlyingEvaluator ev(alg);
	for (int len = 1; len <= 4; ++len) {
		for (const Word &w : basis_words(alg.space, len)) {
			Tensor full = tau.apply_word(w);
			Tensor p1;
			for (const auto &[u, c] : full)
				if (u.size() == 1)
					tensor_add(p1, u, c);
			CHECK(p1 == ev.circ_fold(w));
		}
	}
	CHECK(multimap_equal(*tau.at(2), alg.circ));
}

TEST_CASE("twisting_from_product rejects non-associative input") {
	GradedSpace V = GradedSpace::make({{"x", 0}, {"y", 0}});
	std::map<Word, Tensor, WordLess> rows;
	rows[{0, 0}] = one({1});
	rows[{1, 0}] = one({0});
	MultiMap bad = MultiMap::make(V, 2, 1, 0, std::move(rows));
	CHECK_THROWS_AS(twisting_from_product(V, bad, 3), ValidationError);
}

TEST_CASE("inverse of the multiplication twisting is (-1)^{n-1} circ^{(n-1)}") {
	for (const auto &name : corpus_names()) {
		auto alg = corpus_algebra(name).algebra();
		Twisting tau = twisting_from_product(alg.space, alg.circ, 6);
		Twisting inv = invert_twisting(tau);
		for (int n = 1; n <= 6; ++n) {
			MultiMap expect = iterated_product(alg.space, alg.circ, n);
			if (n % 2 == 0) {
				for (auto &[w, v] : expect.table)
					v = tensor_scaled(v, Rational(-1));
			}
			INFO(name, " n=", n);
			CHECK(multimap_equal(*inv.at(n), expect));
		}
	}
}

TEST_CASE("extended twisting and its inverse compose to the identity") {
	// multiplication twisting on every corpus algebra
	for (const auto &name : corpus_names()) {
		auto alg = corpus_algebra(name).algebra();
		Twisting tau = twisting_from_product(alg.space, alg.circ, 6);
		Twisting inv = invert_twisting(tau);
		for (int len = 0; len <= 6; ++len) {
			for (const Word &w : basis_words(alg.space, len)) {
				CHECK(inv.apply(tau.apply_word(w)) == one(w));
				CHECK(tau.apply(inv.apply_word(w)) == one(w));
			}
		}
	}
}

TEST_CASE("random small twisting composes with its inverse to the identity") {
	// graded space, nontrivial t_2 and t_3 components
	GradedSpace V = GradedSpace::make({{"x", 0}, {"y", 1}, {"z", 1}});
	std::map<Word, Tensor, WordLess> t2;
	t2[{0, 0}] = one({0});
	t2[{0, 1}] = tensor_scaled(one({2}), Rational(2, 3));
	t2[{2, 0}] = tensor_scaled(one({1}), Rational(7, 5));
	std::map<Word, Tensor, WordLess> t3;
	t3[{0, 0, 1}] = tensor_scaled(one({2}), Rational(-3));
	t3[{1, 0, 0}] = tensor_scaled(one({1}), Rational(1, 2));
	std::map<int, MultiMap> comps;
	comps.emplace(1, MultiMap::identity(V));
	comps.emplace(2, MultiMap::make(V, 2, 1, 0, std::move(t2)));
	comps.emplace(3, MultiMap::make(V, 3, 1, 0, std::move(t3)));
	Twisting tau = Twisting::make(V, 4, std::move(comps));
	Twisting inv = invert_twisting(tau);
	for (int len = 0; len <= 4; ++len)
		for (const Word &w : basis_words(V, len))
			CHECK(inv.apply(tau.apply_word(w)) == one(w));
}

TEST_CASE("twisting by the identity preserves the structure") {
	auto alg = corpus_algebra("poly3").algebra();
	BInfinity s = underlying_b_infinity(alg, 4);
	BInfinity t = twist_b_infinity(s, identity_twisting(alg.space, 4), 4);
	CHECK(structures_equal(s, t, 4));
}

TEST_CASE("underlying structure equals the twisted quasi-trivial structure") {
	for (const auto &name : corpus_names()) {
		auto alg = corpus_algebra(name).algebra();
		BInfinity direct = underlying_b_infinity(alg, 5);
		BInfinity quasi = quasi_trivial_b_infinity(alg.space, alg.bullet, alg.diff, 5);
		Twisting tau = twisting_from_product(alg.space, alg.circ, 5);
		BInfinity twisted = twist_b_infinity(quasi, tau, 5);
		INFO(name);
		CHECK(structures_equal(direct, twisted, 5));
	}
}

TEST_CASE("twisting preserves validity of the structure") {
	auto alg = corpus_algebra("upper2").algebra();
	BInfinity quasi = quasi_trivial_b_infinity(alg.space, alg.bullet, alg.diff, 5);
	Twisting tau = twisting_from_product(alg.space, alg.circ, 5);
	BInfinity twisted = twist_b_infinity(quasi, tau, 5);
	CHECK(check_a_infinity(twisted.a, 5).all_pass());
	CHECK(check_multibrace(twisted.b, 5).all_pass());
	CHECK(check_compatibility(twisted, 5).all_pass());
}

TEST_CASE("a generic twisting transports validity") {
	auto ext1 = corpus_algebra("ext1").algebra();
	BInfinity quasi = quasi_trivial_b_infinity(ext1.space, ext1.bullet, ext1.diff, 4);
	std::map<Word, Tensor, WordLess> t2;
	t2[{0, 0}] = one({0});
	t2[{0, 1}] = tensor_scaled(one({1}), Rational(3, 7));
	std::map<Word, Tensor, WordLess> t3;
	t3[{1, 0, 0}] = tensor_scaled(one({1}), Rational(-2));
	std::map<int, MultiMap> comps;
	comps.emplace(1, MultiMap::identity(ext1.space));
	comps.emplace(2, MultiMap::make(ext1.space, 2, 1, 0, std::move(t2)));
	comps.emplace(3, MultiMap::make(ext1.space, 3, 1, 0, std::move(t3)));
	Twisting tau = Twisting::make(ext1.space, 4, std::move(comps));
	BInfinity twisted = twist_b_infinity(quasi, tau, 4);
	CHECK(check_a_infinity(twisted.a, 4).all_pass());
	CHECK(check_multibrace(twisted.b, 4).all_pass());
	CHECK(check_compatibility(twisted, 4).all_pass());
	// and the twist is genuinely nontrivial
	bool changed = false;
	for (int n = 2; n <= 4 && !changed; ++n)
		changed = twisted.a.at(n) != nullptr;
	for (int i = 1; i < 4 && !changed; ++i)
		for (int j = 1; i + j <= 4 && !changed; ++j)
			changed = twisted.b.at(i, j) != nullptr &&
			          !multimap_equal(*twisted.b.at(i, j),
			                          quasi.b.at(i, j) ? *quasi.b.at(i, j)
			                                           : MultiMap::zero(i + j, 1, 0));
	CHECK(changed);
}

TEST_CASE("twist by tau then by its inverse restores the structure") {
	auto alg = corpus_algebra("dual2").algebra();
	BInfinity s = underlying_b_infinity(alg, 4);
	Twisting tau = twisting_from_product(alg.space, alg.circ, 4);
	BInfinity there = twist_b_infinity(s, tau, 4);
	BInfinity back = twist_b_infinity(there, invert_twisting(tau), 4);
	CHECK(structures_equal(s, back, 4));
}
