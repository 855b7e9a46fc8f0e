#pragma once

#include "binfty/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace binfty {

/// A basis word: sequence of generator indices. Length 0 is the empty word
/// (the unit of a tensor coalgebra, or the scalar component of a map to K).
using Word = std::vector<int>;

/// Length-then-lexicographic order; fixes all iteration and print order.
struct WordLess {
	bool operator()(const Word &a, const Word &b) const {
		if (a.size() != b.size())
			return a.size() < b.size();
		return a < b;
	}
};

/// Sparse rational combination of words. Words of a common length k
/// represent an element of V^{(x)k}; mixed lengths an element of T^c(V).
using Tensor = std::map<Word, Rational, WordLess>;

void tensor_add(Tensor &into, const Word &w, const Rational &c);
void tensor_add(Tensor &into, const Tensor &t, const Rational &scale = Rational(1));
bool tensor_is_zero(const Tensor &t);
Tensor tensor_scaled(const Tensor &t, const Rational &c);

/// Finite graded basis. Generator names are unique; the optional unit is a
/// designated degree-0 generator.
struct GradedSpace {
	struct Generator {
		std::string name;
		int degree = 0;
	};
	std::vector<Generator> gens;
	std::optional<int> unit;

	static GradedSpace make(std::vector<Generator> gens, std::optional<int> unit = std::nullopt);

	int dim() const { return static_cast<int>(gens.size()); }
	int degree(int g) const { return gens.at(g).degree; }
	int degree_of(const Word &w) const;
	int find(const std::string &name) const; // -1 if absent
	std::string word_name(const Word &w) const;
	std::string show(const Tensor &t) const;

	bool operator==(const GradedSpace &o) const;
};

/// Bijection of {0..n-1}; images[i] is where position i is sent.
struct Permutation {
	std::vector<int> images;

	static Permutation identity(int n);
	static Permutation make(std::vector<int> images);
	int size() const { return static_cast<int>(images.size()); }
	Permutation compose(const Permutation &inner) const; // this after inner
	Permutation inverse() const;
};

/// Sign (-1)^kappa with kappa the sum of |v_p||v_q| over inversions of sigma.
int koszul_sign(const std::vector<int> &degrees, const Permutation &sigma);

/// Reorders word so the i-th letter lands in position sigma(i); returns the
/// Koszul sign together with the permuted word.
std::pair<int, Word> permute_tensor(const GradedSpace &V, const Permutation &sigma,
                                    const Word &word);

/// Sign of rearranging a word into the order given by `arrangement`, a list
/// of source positions (output position p takes the letter arrangement[p]).
int arrangement_sign(const GradedSpace &V, const Word &word, const std::vector<int> &arrangement);

/// Homogeneous multilinear map V^{(x)a} -> V^{(x)b} stored by structure
/// constants. A missing row of a total map is the zero value; for a partial
/// map (tensor-word carriers truncated at a cap) a missing row is undefined
/// and reading it throws CapError.
struct MultiMap {
	int in_arity = 0;
	int out_arity = 0;
	int degree = 0;
	bool total = true;
	std::map<Word, Tensor, WordLess> table;

	/// Validates word lengths and homogeneity of every entry.
	static MultiMap make(const GradedSpace &V, int in_arity, int out_arity, int degree,
	                     std::map<Word, Tensor, WordLess> table, bool total = true);
	static MultiMap zero(int in_arity, int out_arity, int degree);
	static MultiMap identity(const GradedSpace &V);

	bool defined_on(const Word &w) const { return total || table.count(w) != 0; }
	const Tensor &row(const Word &w) const;
	Tensor apply(const Tensor &x) const;
	bool is_zero() const;
};

/// Zero-row-normalized structural equality; the degree of two zero maps is
/// not compared.
bool multimap_equal(const MultiMap &a, const MultiMap &b);

/// One factor of a tensor product of maps, already evaluated on its block.
struct AppliedFactor {
	int map_degree = 0;
	int block_degree = 0; // total degree of the input block
	Tensor value;
};

/// (f_1 (x) ... (x) f_r)(x_1 (x) ... (x) x_r) =
///   (-1)^{sum_{a<b} |f_b||x_a|} f_1(x_1) (x) ... (x) f_r(x_r).
Tensor combine_factors(const std::vector<AppliedFactor> &factors);

/// Signed application of a tensor product of maps to a word split into
/// consecutive blocks matching the maps' in-arities.
Tensor apply_map_tensor(const GradedSpace &V, const std::vector<const MultiMap *> &maps,
                        const Word &word);

/// Structure constants of outer
/// (f_1 (x) ... (x) f_r); degrees add, Koszul signs via apply_map_tensor.
MultiMap compose_multimap(const GradedSpace &V, const MultiMap &outer,
                          const std::vector<const MultiMap *> &inners);

/// All words of the given length over the basis of V, in WordLess order.
std::vector<Word> basis_words(const GradedSpace &V, int length);

/// Sequences of `parts` nonnegative (or strictly positive) integers with the
/// given sum, in lexicographic order.
std::vector<std::vector<int>> compositions(int total, int parts, bool positive);

} // namespace binfty
