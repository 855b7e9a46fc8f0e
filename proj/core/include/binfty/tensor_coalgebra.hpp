#pragma once

#include "binfty/graded.hpp"
#include "binfty/sparse_matrix.hpp"

#include <map>

namespace binfty {

/// Finite stand-in for T^c(V): words of length <= word_cap are stored, and
/// any operation that would produce a longer word throws CapError.
struct TruncationPolicy {
	int word_cap = 6;
	int arity_cap = 6;

	static TruncationPolicy make(int word_cap, int arity_cap);
};

/// Elements of the truncated tensor coalgebra are Tensor values whose words
/// have length 0..cap; the empty word is the unit 1.

/// Element of T^c(V)^{(x)(r+1)}: combination of (r+1)-tuples of words.
using WordTuple = std::vector<Word>;
struct WordTupleLess {
	bool operator()(const WordTuple &a, const WordTuple &b) const {
		if (a.size() != b.size())
			return a.size() < b.size();
		WordLess less;
		for (size_t i = 0; i < a.size(); ++i) {
			if (less(a[i], b[i]))
				return true;
			if (less(b[i], a[i]))
				return false;
		}
		return false;
	}
};
using TupleTensor = std::map<WordTuple, Rational, WordTupleLess>;

/// Deconcatenation coproduct of the tensor coalgebra, extended linearly.
TupleTensor deconcatenate(const Tensor &x);

/// r-fold iterate of the reduced coproduct; r = 0 returns x (as 1-tuples).
/// Requires x reduced (no empty-word term) when r >= 1.
TupleTensor reduced_coproduct(const Tensor &x, int r);

/// Smallest r with reduced_coproduct(J x, r) = 0; equals the maximal word
/// length occurring in x.
int filtration_level(const Tensor &x);

/// Family of components f_k: V^{(x)k} -> W of a unital coalgebra map
/// T^c(V) -> T^c(W). Each component has out_arity 1 over W.
struct CoalgebraMapFamily {
	const GradedSpace *source = nullptr;
	const GradedSpace *target = nullptr;
	int degree = 0;
	std::map<int, MultiMap> components; // by word length k >= 1

	static CoalgebraMapFamily make(const GradedSpace &source, const GradedSpace &target,
	                               std::map<int, MultiMap> components);
	const MultiMap *at(int k) const;
};

/// f = sum_k f_1^{(x)k} Delta^{(k-1)}; the empty word maps to the empty word.
Tensor extend_coalgebra_map(const CoalgebraMapFamily &f, const Tensor &x);
Tensor extend_coalgebra_map_word(const CoalgebraMapFamily &f, const Word &w);

/// Family of components d_k: V^{(x)k} -> V of a coderivation on T^c(V),
/// all homogeneous of a common degree.
struct CoderivationFamily {
	const GradedSpace *space = nullptr;
	int degree = 0;
	std::map<int, MultiMap> components; // by word length k >= 1

	static CoderivationFamily make(const GradedSpace &space, std::map<int, MultiMap> components);
	const MultiMap *at(int k) const;
};

/// d = sum (p_i (x) d_1 (x) p_j) Delta^{(2)}; d(1) = 0.
Tensor extend_coderivation(const CoderivationFamily &d, const Tensor &x);
Tensor extend_coderivation_word(const CoderivationFamily &d, const Word &w);

/// Finite counital coalgebra presented on a named basis. The basis is
/// unit-split: the counit is the indicator of the designated unit generator.
struct FiniteCoalgebra {
	GradedSpace space;  // unit designated
	MultiMap coproduct; // 1 -> 2, degree 0, total

	static FiniteCoalgebra make(GradedSpace space, MultiMap coproduct);

	/// Coassociativity, counit laws and grouplikeness of the unit; throws on
	/// violation.
	void validate() const;

	/// Reduced coproduct of an element given in basis coordinates (unit
	/// coordinate allowed; J is applied first). Tuples are words of reduced
	/// generators.
	Tensor reduced_delta(const Tensor &x) const; // words len 1 -> len 2
	/// One more application of the reduced coproduct to the first factor.
	Tensor reduced_delta_step(const Tensor &tuples) const;
};

/// Basis of Prim(C) = ker of the reduced coproduct; vectors over the full
/// generator list (unit coordinate zero), homogeneous, in reduced echelon
/// form. Validates the coalgebra first.
std::vector<std::vector<Rational>> primitives(const FiniteCoalgebra &c);

struct RadicalResult {
	std::vector<std::vector<Rational>> basis; // includes the unit vector
	int stabilized_at = 0;                    // r with ker(D^(r)) = ker(D^(r+1))
	bool whole_space = false;                 // conilpotent (= connected)
	std::optional<int> witness_generator;     // a reduced generator outside the radical
};

/// Largest conilpotent subcoalgebra K1 (+) union ker(reduced Delta^(r)),
/// computed by kernel stabilization.
RadicalResult conilpotent_radical(const FiniteCoalgebra &c);

/// The truncated tensor coalgebra T^c(V) materialized on a word basis.
struct WordSpaceInfo {
	GradedSpace space;
	std::vector<Word> words; // words[i] spells generator i over V
	std::map<Word, int, WordLess> index;
	int cap = 0;

	int gen_of(const Word &w) const;
	/// Re-expresses an element of T^c(V) (words over V) in word-generator
	/// coordinates (length-1 words over the word space).
	Tensor inject(const Tensor &x) const;
};

WordSpaceInfo word_space(const GradedSpace &V, int cap);

/// Deconcatenation as a total MultiMap 1 -> 2 over the word space.
MultiMap deconcatenation_map(const WordSpaceInfo &ws);

/// Concatenation as a partial MultiMap 2 -> 1 over the word space (defined
/// while the combined length fits the cap).
MultiMap concatenation_map(const WordSpaceInfo &ws);

FiniteCoalgebra truncated_tensor_coalgebra(const WordSpaceInfo &ws);

/// Split vectors into homogeneous components and re-echelonize; every output
/// row is homogeneous (components of a graded subspace stay inside it).
std::vector<std::vector<Rational>> homogeneous_rref(const GradedSpace &V,
                                                    std::vector<std::vector<Rational>> rows);

} // namespace binfty
