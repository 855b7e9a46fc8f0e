#include <doctest.h>

#include "binfty/graded.hpp"

#include <algorithm>

using namespace binfty;

namespace {

Tensor one(const Word &w) {
	return Tensor{{w, Rational(1)}};
}

// all permutations of {0..n-1}
std::vector<Permutation> all_perms(int n) {
	std::vector<int> im(n);
	for (int i = 0; i < n; ++i)
		im[i] = i;
	std::vector<Permutation> out;
	do {
		out.push_back(Permutation::make(im));
	} while (std::next_permutation(im.begin(), im.end()));
	return out;
}

// independent sign oracle: bubble the word into permuted order, flipping the
// sign whenever two odd letters swap
int bubble_sign(const std::vector<int> &degrees, const Permutation &sigma) {
	int n = sigma.size();
	std::vector<int> pos(n); // pos[p] = source index at output slot p
	for (int i = 0; i < n; ++i)
		pos[sigma.images[i]] = i;
	int sign = 1;
	for (int i = 0; i < n; ++i)
		for (int j = 0; j + 1 < n; ++j)
			if (pos[j] > pos[j + 1]) {
				if ((degrees[pos[j]] & 1) && (degrees[pos[j + 1]] & 1))
					sign = -sign;
				std::swap(pos[j], pos[j + 1]);
			}
	return sign;
}

} // namespace

TEST_CASE("koszul sign: identity, transposition, 3-cycle") {
	CHECK(koszul_sign({5, 7, 2}, Permutation::identity(3)) == 1);
	CHECK(koszul_sign({1, 1}, Permutation::make({1, 0})) == -1);
	CHECK(koszul_sign({1, 2}, Permutation::make({1, 0})) == 1);
	// 3-cycle sending positions (1,2,3) -> (2,3,1) on degrees (1,2,1)
	Permutation c = Permutation::make({1, 2, 0});
	CHECK(koszul_sign({1, 2, 1}, c) == bubble_sign({1, 2, 1}, c));
}

TEST_CASE("koszul sign matches the bubble oracle for n <= 4") {
	for (int n = 1; n <= 4; ++n) {
		for (int mask = 0; mask < (1 << n); ++mask) {
			std::vector<int> degrees(n);
			for (int i = 0; i < n; ++i)
				degrees[i] = (mask >> i) & 1 ? 1 : 2;
			for (const auto &sigma : all_perms(n))
				CHECK(koszul_sign(degrees, sigma) == bubble_sign(degrees, sigma));
		}
	}
}

TEST_CASE("koszul sign cocycle property for n <= 4") {
	for (int n = 2; n <= 4; ++n) {
		for (int mask = 0; mask < (1 << n); ++mask) {
			std::vector<int> degrees(n);
			for (int i = 0; i < n; ++i)
				degrees[i] = (mask >> i) & 1;
			for (const auto &sigma : all_perms(n)) {
				for (const auto &tau : all_perms(n)) {
					std::vector<int> permuted(n);
					for (int i = 0; i < n; ++i)
						permuted[tau.images[i]] = degrees[i];
					CHECK(koszul_sign(degrees, sigma.compose(tau)) ==
					      koszul_sign(degrees, tau) * koszul_sign(permuted, sigma));
				}
			}
		}
	}
}

TEST_CASE("all-even degrees give sign +1") {
	for (const auto &sigma : all_perms(4))
		CHECK(koszul_sign({2, 0, 4, 6}, sigma) == 1);
}

TEST_CASE("permute_tensor moves letter i to position sigma(i)") {
	GradedSpace V = GradedSpace::make({{"a", 1}, {"b", 1}, {"c", 2}});
	auto [sign, word] = permute_tensor(V, Permutation::make({1, 0}), {0, 1});
	CHECK(sign == -1);
	CHECK(word == Word{1, 0});
	auto [s2, w2] = permute_tensor(V, Permutation::make({2, 0, 1}), {0, 1, 2});
	// letter 0 -> slot 2, letter 1 -> slot 0, letter 2 -> slot 1
	CHECK(w2 == Word{1, 2, 0});
	CHECK(s2 == bubble_sign({1, 1, 2}, Permutation::make({2, 0, 1})));
	CHECK_THROWS_AS(permute_tensor(V, Permutation::identity(2), Word{0}), Error);
}

TEST_CASE("block interleave sign equals the koszul sign on block degrees") {
	// moving the block (v1 v2) past v3 costs (-1)^{(|v1|+|v2|)|v3|}
	GradedSpace V = GradedSpace::make({{"v1", 1}, {"v2", 2}, {"v3", 1}});
	std::vector<int> arrangement{2, 0, 1}; // output = v3 v1 v2
	int letter_sign = arrangement_sign(V, {0, 1, 2}, arrangement);
	int block_parity = ((1 + 2) & 1) * (1 & 1);
	CHECK(letter_sign == (block_parity ? -1 : 1));
	// odd x odd block pair
	GradedSpace W = GradedSpace::make({{"a", 1}, {"b", 2}, {"c", 1}, {"d", 2}});
	// blocks (a b | c d) -> (c d | a b)
	int s = arrangement_sign(W, {0, 1, 2, 3}, {2, 3, 0, 1});
	CHECK(s == -1); // (|a|+|b|)(|c|+|d|) = 3*3 odd
}

TEST_CASE("multimap validates homogeneity") {
	GradedSpace V = GradedSpace::make({{"x", 0}, {"y", 1}});
	std::map<Word, Tensor, WordLess> bad;
	bad[{0}] = one({1}); // degree 0 -> degree 1 under a degree-0 map
	CHECK_THROWS_AS(MultiMap::make(V, 1, 1, 0, bad), Error);
	std::map<Word, Tensor, WordLess> good;
	good[{1}] = one({0});
	CHECK_NOTHROW(MultiMap::make(V, 1, 1, -1, good));
}

TEST_CASE("apply_map_tensor signs: (id (x) g) on (a (x) b) with |g| = -1") {
	GradedSpace W = GradedSpace::make({{"a", 1}, {"b", 1}, {"c", 0}});
	std::map<Word, Tensor, WordLess> grows;
	grows[{1}] = one({2}); // g(b) = c, degree -1
	MultiMap g = MultiMap::make(W, 1, 1, -1, grows);
	MultiMap id = MultiMap::identity(W);
	Tensor r = apply_map_tensor(W, {&id, &g}, {0, 1});
	// (id (x) g)(a (x) b) = (-1)^{|g||a|} a (x) g(b) = -(a (x) c)
	CHECK(r == Tensor{{Word{0, 2}, Rational(-1)}});
}

TEST_CASE("interchange: (f (x) g)(h (x) k) carries (-1)^{|g||h|}") {
	GradedSpace V = GradedSpace::make({{"x0", 0}, {"x1", 1}, {"x2", 2}});
	std::map<Word, Tensor, WordLess> frows;
	frows[{1}] = one({0}); // f: x1 -> x0
	MultiMap f = MultiMap::make(V, 1, 1, -1, frows);
	std::map<Word, Tensor, WordLess> hrows;
	hrows[{2}] = one({1}); // h: x2 -> x1
	MultiMap h = MultiMap::make(V, 1, 1, -1, hrows);

	// route A: apply (h (x) h), then (f (x) f)
	Tensor inner = apply_map_tensor(V, {&h, &h}, {2, 2});
	CHECK(inner == Tensor{{Word{1, 1}, Rational(1)}}); // |h||x2| even
	Tensor lhs;
	for (const auto &[w, c] : inner)
		tensor_add(lhs, apply_map_tensor(V, {&f, &f}, w), c);
	CHECK(lhs == Tensor{{Word{0, 0}, Rational(-1)}}); // |f||x1| odd

	// route B: ((fh) (x) (fh)) with the interchange sign (-1)^{|f||h|}
	MultiMap fh = compose_multimap(V, f, {&h});
	Tensor rhs = tensor_scaled(apply_map_tensor(V, {&fh, &fh}, {2, 2}), Rational(-1));
	CHECK(lhs == rhs);
}

TEST_CASE("compose_multimap: identity outer recovers the map") {
	GradedSpace V = GradedSpace::make({{"x", 0}, {"y", 1}});
	std::map<Word, Tensor, WordLess> rows;
	rows[{1}] = one({0});
	MultiMap f = MultiMap::make(V, 1, 1, -1, rows);
	MultiMap id = MultiMap::identity(V);
	CHECK(multimap_equal(compose_multimap(V, id, {&f}), f));
}

TEST_CASE("compose_multimap: square of a square-zero map vanishes") {
	GradedSpace V = GradedSpace::make({{"x", 0}, {"y", 1}});
	std::map<Word, Tensor, WordLess> rows;
	rows[{1}] = one({0}); // d(y) = x, d(x) = 0
	MultiMap d = MultiMap::make(V, 1, 1, -1, rows);
	CHECK(compose_multimap(V, d, {&d}).is_zero());
}

TEST_CASE("compose_multimap: bullet(id (x) d) on (a (x) b) carries (-1)^{|a|}") {
	GradedSpace V = GradedSpace::make({{"1", 0}, {"e", 1}}, 0);
	std::map<Word, Tensor, WordLess> prod;
	for (int g = 0; g < 2; ++g) {
		prod[{0, g}] = one({g});
		if (g != 0)
			prod[{g, 0}] = one({g});
	}
	MultiMap bullet = MultiMap::make(V, 2, 1, 0, prod);
	std::map<Word, Tensor, WordLess> drows;
	drows[{1}] = one({0});
	MultiMap d = MultiMap::make(V, 1, 1, -1, drows);
	MultiMap id = MultiMap::identity(V);
	MultiMap composite = compose_multimap(V, bullet, {&id, &d});
	// on (e (x) e): (-1)^{|e|} e * d(e) = -(e * 1) = -e
	CHECK(composite.row({1, 1}) == Tensor{{Word{1}, Rational(-1)}});
	CHECK(composite.degree == -1);
}

TEST_CASE("multimap homogeneity is preserved by composition") {
	GradedSpace V = GradedSpace::make({{"x", 2}, {"y", 3}});
	std::map<Word, Tensor, WordLess> rows;
	rows[{1}] = one({0}); // degree -1
	MultiMap f = MultiMap::make(V, 1, 1, -1, rows);
	MultiMap id = MultiMap::identity(V);
	// compose validates on construction; a throw here would mean inhomogeneity
	CHECK_NOTHROW(compose_multimap(V, f, {&id}));
}

TEST_CASE("compositions enumerator") {
	CHECK(compositions(3, 2, false).size() == 4); // (0,3),(1,2),(2,1),(3,0)
	CHECK(compositions(3, 2, true).size() == 2);  // (1,2),(2,1)
	CHECK(compositions(0, 0, false).size() == 1);
	CHECK(compositions(2, 3, true).empty());
	auto c = compositions(4, 2, true);
	CHECK(c.front() == std::vector<int>{1, 3});
	CHECK(c.back() == std::vector<int>{3, 1});
}

TEST_CASE("basis_words order is length-then-lex") {
	GradedSpace V = GradedSpace::make({{"x", 0}, {"y", 0}});
	auto ws = basis_words(V, 2);
	REQUIRE(ws.size() == 4);
	CHECK(ws[0] == Word{0, 0});
	CHECK(ws[3] == Word{1, 1});
}
