#pragma once

#include "binfty/law_report.hpp"
#include "binfty/tensor_coalgebra.hpp"

#include <functional>

namespace binfty {

/// A_infinity structure: degree -1 maps m_n: V^{(x)n} -> V for 1 <= n <= cap,
/// the components of a square-zero degree -1 coderivation on T^c(V).
struct AInfinity {
	GradedSpace space;
	int arity_cap = 0;
	std::map<int, MultiMap> m; // absent entry = zero map

	static AInfinity make(GradedSpace space, int arity_cap, std::map<int, MultiMap> maps);
	const MultiMap *at(int n) const;
	Tensor eval(int n, const Word &w) const;
};

/// Multibrace structure: degree 0 maps m_{i,j}: V^{(x)i} (x) V^{(x)j} -> V
/// for i, j >= 1, i+j <= cap. Components with i or j zero are the fixed unit
/// conventions and are never stored.
struct Multibrace {
	GradedSpace space;
	int arity_cap = 0;
	std::map<std::pair<int, int>, MultiMap> m;

	static Multibrace make(GradedSpace space, int arity_cap,
	                       std::map<std::pair<int, int>, MultiMap> maps);
	const MultiMap *at(int i, int j) const;
	/// Includes the unit conventions: m_{0,1} = m_{1,0} = id, other
	/// zero-indexed components vanish.
	Tensor eval(int i, int j, const Word &w) const;
};

struct BInfinity {
	AInfinity a;
	Multibrace b;

	static BInfinity make(AInfinity a, Multibrace b);
};

/// Callback evaluating m_{i,j} (i, j >= 1 only) on a basis word of length
/// i+j; lets the expansion helpers run over lazily derived structures.
using BraceEval = std::function<Tensor(int i, int j, const Word &block)>;
/// Callback evaluating m_n (n >= 1) on a basis word of length n.
using ArityEval = std::function<Tensor(int n, const Word &block)>;

/// Component m_{i,j}^r of the coalgebra map extension, evaluated on a word
/// of length i+j: sum over C_r^i x C_r^j of the block-interleaved tensor
/// products, with unit conventions for zero parts. Returns r-letter words.
Tensor multibrace_expansion(const GradedSpace &V, const BraceEval &eval, int i, int j, int r,
                            const Word &w);

/// Component m_n^k of the coderivation extension, evaluated on a word of
/// length n: sum over i+1+j = k of id^i (x) m_{n-i-j} (x) id^j. map_degree
/// is the common degree of the m's (-1 for differentials).
Tensor coderivation_expansion(const GradedSpace &V, const ArityEval &eval, int map_degree,
                              int n, int k, const Word &w);

/// m_n^k as a structure-constant table.
MultiMap coderivation_components(const AInfinity &a, int n, int k);

/// m_{i,j}^r as a structure-constant table.
MultiMap coalgebra_map_components(const Multibrace &b, int i, int j, int r);

/// The extended product mu: T^c(V) (x) T^c(V) -> T^c(V) on word arguments;
/// output mixes word lengths (all <= |w1| + |w2|).
Tensor multibrace_product_words(const Multibrace &b, const Word &w1, const Word &w2);
Tensor multibrace_product(const Multibrace &b, const Tensor &x, const Tensor &y);

/// The extended coderivation d on a word argument.
Tensor coderivation_apply_word(const AInfinity &a, const Word &w);
Tensor coderivation_apply(const AInfinity &a, const Tensor &x);

/// d^2 = 0 componentwise: relations (2.4)-style for n <= cap.
LawReport check_a_infinity(const AInfinity &a, int cap = 5);

/// Associativity of the extended product: per (i,j,k) with i+j+k <= cap.
LawReport check_multibrace(const Multibrace &b, int cap = 6);

/// d is a derivation of mu: per (i,j) with i+j <= cap.
LawReport check_compatibility(const BInfinity &s, int cap = 6);

/// Signed shuffle sum of two tensor words; combined length must fit the cap.
Tensor shuffle_product(const GradedSpace &V, const Tensor &x, const Tensor &y, int word_cap);

/// Multibrace with m_{1,1} = bullet and all other components zero.
Multibrace quasi_shuffle_multibrace(const GradedSpace &V, const MultiMap &bullet, int arity_cap);

/// B_infinity with m_1 = diff, m_{1,1} = bullet, everything else zero.
/// Validates that (V, bullet, diff) is a differential graded algebra and
/// throws ValidationError naming the violated law otherwise.
BInfinity quasi_trivial_b_infinity(const GradedSpace &V, const MultiMap &bullet,
                                   const MultiMap &diff, int arity_cap);

// Algebra-law probes shared by the validators. Each returns true and fills
// the report entry, quantifying over basis tuples on which the (possibly
// partial) maps are defined.
void probe_associative(const GradedSpace &V, const MultiMap &op, const std::string &name,
                       LawReport &report);
void probe_unit_laws(const GradedSpace &V, const MultiMap &op, int unit, const std::string &name,
                     LawReport &report);
void probe_square_zero(const GradedSpace &V, const MultiMap &d, const std::string &name,
                       LawReport &report);
void probe_leibniz(const GradedSpace &V, const MultiMap &op, const MultiMap &d,
                   const std::string &name, LawReport &report);

} // namespace binfty
