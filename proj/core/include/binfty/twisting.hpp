#pragma once

#include "binfty/structures.hpp"

namespace binfty {

/// Coalgebra automorphism of T^c(V) with identity linear part, stored by its
/// components t_n: V^{(x)n} -> V (degree 0, t_1 = id).
struct Twisting {
	GradedSpace space;
	int cap = 0;
	std::map<int, MultiMap> t;

	static Twisting make(GradedSpace space, int cap, std::map<int, MultiMap> components);
	const MultiMap *at(int n) const;

	/// The coalgebra-map extension applied to a word / element of T^c(V).
	Tensor apply_word(const Word &w) const;
	Tensor apply(const Tensor &x) const;
};

/// op^{(n-1)}: V^{(x)n} -> V, left-iterated; op^{(0)} = id.
MultiMap iterated_product(const GradedSpace &V, const MultiMap &op, int n);

/// The twisting with t_n = circ^{(n-1)}. Validates associativity of circ.
Twisting twisting_from_product(const GradedSpace &V, const MultiMap &circ, int cap);

/// Inverse twisting: u_1 = id, u_n = -sum u_r (t_{i_1} (x) ... (x) t_{i_r})
/// over strictly positive compositions with r < n.
Twisting invert_twisting(const Twisting &tau);

/// Twisted structure maps of mu^tau = tau^{-1} mu tau^{(x)2} and
/// d^tau = tau^{-1} d tau, extracted arity by arity.
BInfinity twist_b_infinity(const BInfinity &s, const Twisting &tau, int arity_cap);

} // namespace binfty
