#pragma once

#include "binfty/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace binfty {

/// Sparse matrix over the rationals. No zero entries are stored.
struct SparseMatrix {
	int rows = 0;
	int cols = 0;
	std::map<std::pair<int, int>, Rational> entries;

	void set(int r, int c, const Rational &v);
	Rational get(int r, int c) const;
};

/// Basis of the right null space, in reduced echelon form: each vector has
/// leading entry 1, vectors ordered by pivot column. Deterministic.
std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix &m);

/// Rank over the rationals. rank + |kernel_basis| = cols.
int rank(const SparseMatrix &m);

/// Row-reduces a list of dense row vectors in place; returns the reduced
/// nonzero rows (leading entry 1, pivots strictly increasing).
std::vector<std::vector<Rational>> rref_rows(std::vector<std::vector<Rational>> rows);

/// Residue of v modulo the span of rows (rows must be in rref form).
std::vector<Rational> reduce_against(const std::vector<std::vector<Rational>> &rows,
                                     std::vector<Rational> v);

} // namespace binfty
