#pragma once

#include "binfty/structures.hpp"
#include "binfty/twisting.hpp"

namespace binfty {

/// (V, bullet, circ, 1, diff): a differential graded algebra (V, bullet, 1,
/// diff) with a second associative product circ sharing the unit. circ is
/// not required to interact with diff or bullet in any way.
struct TwoAssocDiffAlgebra {
	GradedSpace space; // unit designated
	MultiMap bullet;   // 2 -> 1, degree 0
	MultiMap circ;     // 2 -> 1, degree 0
	MultiMap diff;     // 1 -> 1, degree -1
};

/// Checks bullet/circ associativity, shared unit laws, diff^2 = 0 and the
/// Leibniz rule for (bullet, diff). The Leibniz rule for circ is NOT
/// required. Partial tables are quantified over their domain.
LawReport validate(const TwoAssocDiffAlgebra &alg);

/// Throws ValidationError when validate() fails.
void require_valid(const TwoAssocDiffAlgebra &alg);

/// Lazy evaluator for the derived structure maps: m_{i,j} by the recursion
/// m_{i,j} = bullet(circ^{(i-1)} (x) circ^{(j-1)}) - sum_{r>=2} circ^{(r-1)} m_{i,j}^r
/// and m_n by
/// m_n = diff circ^{(n-1)} - sum_{k=2}^n circ^{(k-1)} m_n^k,
/// memoized per basis tuple so it also runs on large tensor-word carriers.
class UnderlyingEvaluator {
  public:
	explicit UnderlyingEvaluator(const TwoAssocDiffAlgebra &alg) : alg_(alg) {}

	Tensor mb(int i, int j, const Word &w);
	Tensor ainf(int n, const Word &w);

	/// circ-product of two elements given in basis coordinates.
	Tensor circ_mul(const Tensor &x, const Tensor &y) const;
	Tensor bullet_mul(const Tensor &x, const Tensor &y) const;
	/// Iterated circ over the letters of w; the empty word gives the unit.
	Tensor circ_fold(const Word &w) const;
	/// Applies circ^{(len-1)} to every word of a tensor and sums.
	Tensor circ_fold_elem(const Tensor &x) const;

  private:
	const TwoAssocDiffAlgebra &alg_;
	std::map<std::tuple<int, int, Word>, Tensor> memo_mb_;
	std::map<std::pair<int, Word>, Tensor> memo_a_;
};

/// The multibrace part of the underlying structure, as full tables.
Multibrace derive_multibrace(const TwoAssocDiffAlgebra &alg, int arity_cap);

/// The A-infinity part of the underlying structure, as full tables.
AInfinity derive_a_infinity(const TwoAssocDiffAlgebra &alg, int arity_cap);

/// The explicit solution of the A-infinity recursion:
///   m_1 = diff,
///   m_n = diff c^{(n-1)} - c(diff c^{(n-2)} (x) id) - c(id (x) diff c^{(n-2)})
///         [+ c^{(2)}(id (x) diff c^{(n-3)} (x) id) for n >= 3],
/// written with c = circ and Koszul signs carried by the tensor calculus.
/// The four-term pattern already applies at n = 3 (with a one-letter middle
/// block); dropping it there breaks the defining identity on words that
/// contain the unit.
MultiMap borjeson_closed_form(const TwoAssocDiffAlgebra &alg, int n);

/// Theorem functor: combines derive_multibrace and derive_a_infinity.
BInfinity underlying_b_infinity(const TwoAssocDiffAlgebra &alg, int arity_cap);

/// epsilon_V: T^c(V) -> V, multiplication of letters by circ; the empty word
/// goes to the unit.
Tensor counit_epsilon(const TwoAssocDiffAlgebra &alg, const Tensor &x);

/// epsilon_V intertwines the extended structure maps on T^c(V) with
/// (bullet, circ, diff): checked on words of combined length <= word_cap.
LawReport check_epsilon_hom(const TwoAssocDiffAlgebra &alg, const BInfinity &s, int word_cap);

/// The defining identities
///   sum_r circ^{(r-1)} m_{i,j}^r = bullet(circ^{(i-1)} (x) circ^{(j-1)}),
///   sum_k circ^{(k-1)} m_n^k = diff circ^{(n-1)},
/// for i+j <= cap and n <= cap.
LawReport check_defining_identities(const TwoAssocDiffAlgebra &alg, const BInfinity &s, int cap);

/// The 2-associative differential algebra on the truncated T^c(A) of a
/// B-infinity algebra A: bullet = extended multibrace product, circ =
/// concatenation, diff = extended coderivation.
struct WordDas {
	WordSpaceInfo ws;
	TwoAssocDiffAlgebra alg;
};

WordDas word_das_algebra(const BInfinity &A, int cap);

/// Theorem check: the inclusion of generators A -> T^c(A) intertwines the
/// structure maps of A with the derived maps of the word algebra, i.e.
/// m_{i,j}(i_1^{(x)i+j}) = i_1 m-bar_{i,j} and m_n i_1^{(x)n} = i_1 m-bar_n
/// for i+j <= arity_cap and n <= arity_cap, with words capped at inner_cap.
LawReport check_iota_hom(const BInfinity &A, int arity_cap, int inner_cap);

} // namespace binfty
