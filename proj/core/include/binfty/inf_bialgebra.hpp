#pragma once

#include "binfty/underlying.hpp"

namespace binfty {

/// Unital counital algebra + coalgebra on a finite basis; the counit is the
/// indicator of the unit generator. The product may be partial (tensor-word
/// carriers truncated at a cap).
struct InfBialgebra {
	GradedSpace space;  // unit designated
	MultiMap product;   // 2 -> 1, degree 0
	MultiMap coproduct; // 1 -> 2, degree 0, total

	/// Validates coalgebra laws, product unit laws and associativity (on the
	/// product's domain). The unital infinitesimal relation itself is NOT
	/// required here; run check_unital_infinitesimal for a verdict.
	static InfBialgebra make(GradedSpace space, MultiMap product, MultiMap coproduct);

	FiniteCoalgebra coalgebra() const;
};

/// Delta(xy) = x_(1) (x) x_(2)y + xy_(1) (x) y_(2) - x (x) y on all basis
/// pairs in the product's domain, plus the iterated identity for the reduced
/// coproduct of a product, checked for n = 2, 3.
LawReport check_unital_infinitesimal(const InfBialgebra &w);

/// The induced coalgebra structure Delta' on B (x) B and algebra structure
/// circ' on B (x) B, with their law report (coassociativity, counit laws,
/// grouplikeness of 1 (x) 1, associativity, unit laws) and the three-way
/// equivalence: (1) unital infinitesimal relation, (2) the product is a
/// coalgebra map (B (x) B, Delta') -> (B, Delta), (3) the coproduct is an
/// algebra map (B, circ) -> (B (x) B, circ'). The verdicts must agree.
struct PrimeStructures {
	MultiMap delta_prime; // 2 -> 4, total
	MultiMap circ_prime;  // 4 -> 2, partial when the product is
	LawReport report;
	bool ui_holds = false;
	bool product_coalgebra_map = false;
	bool coproduct_algebra_map = false;
	bool equivalence_agrees = false;
};

PrimeStructures derived_structures_prime(const InfBialgebra &b);

/// T^{fc}(V) truncated: concatenation product, deconcatenation coproduct.
InfBialgebra fundamental_bialgebra(const GradedSpace &V, int cap);

/// The canonical homomorphism from the fundamental bialgebra on the
/// primitives: words of primitives map to their iterated product. Verdicts:
/// injectivity (exact rank) and image = conilpotent radical.
struct CounitFResult {
	int domain_dim = 0;
	int rank = 0;
	int radical_dim = 0;
	bool injective = false;
	bool image_is_radical = false;
	LawReport report;
};

CounitFResult counit_F(const InfBialgebra &w, int word_cap);

/// 2-associative differential algebra with a compatible comultiplication:
/// (V, diff, bullet, Delta, 1) a differential graded bialgebra and
/// (V, circ, Delta, 1) a unital infinitesimal bialgebra.
struct TwoAssocDiffBialgebra {
	TwoAssocDiffAlgebra alg;
	MultiMap coproduct; // 1 -> 2, total
	std::optional<WordSpaceInfo> words; // set when the carrier is a truncated T^c
};

/// All axiom families of a 2-associative differential bialgebra, quantified
/// over the tables' domain.
LawReport validate_das_bialgebra(const TwoAssocDiffBialgebra &w);

/// U(A): the truncated T^c(A) with the extended multibrace product, the
/// extended coderivation, concatenation and deconcatenation. Validated
/// within caps.
TwoAssocDiffBialgebra enveloping(const BInfinity &A, int cap);

/// Triangle identity of the adjunction on U(A): multiplying the letters of
/// a word of generators by concatenation returns the word, for lengths
/// <= cap.
LawReport enveloping_triangle(const BInfinity &A, int cap);

/// The underlying structure maps of a conilpotent 2-associative differential
/// bialgebra restricted to Prim = ker of the reduced coproduct.
struct PrimResult {
	bool conilpotent = false;
	RadicalResult radical;
	GradedSpace prim_space;
	std::vector<std::vector<Rational>> prim_basis; // vectors over w's basis
	std::optional<BInfinity> structure;            // set when closure holds
	LawReport report;
};

PrimResult prim_b_infinity(const TwoAssocDiffBialgebra &w, int arity_cap);

} // namespace binfty
