#include "binfty/sparse_matrix.hpp"

namespace binfty {

void SparseMatrix::set(int r, int c, const Rational &v) {
	if (r < 0 || r >= rows || c < 0 || c >= cols)
		throw Error("SparseMatrix: index out of bounds");
	if (v.is_zero())
		entries.erase({r, c});
	else
		entries[{r, c}] = v;
}

Rational SparseMatrix::get(int r, int c) const {
	auto it = entries.find({r, c});
	return it == entries.end() ? Rational() : it->second;
}

namespace {

// Gaussian elimination with first-nonzero-column, lowest-row pivoting.
// Returns the echelon rows and the pivot column of each.
std::pair<std::vector<std::vector<Rational>>, std::vector<int>>
echelon(const SparseMatrix &m) {
	std::vector<std::vector<Rational>> a(m.rows, std::vector<Rational>(m.cols));
	for (const auto &[rc, v] : m.entries)
		a[rc.first][rc.second] = v;

	std::vector<int> pivots;
	int row = 0;
	for (int col = 0; col < m.cols && row < m.rows; ++col) {
		int pr = -1;
		for (int r = row; r < m.rows; ++r) {
			if (!a[r][col].is_zero()) {
				pr = r;
				break;
			}
		}
		if (pr < 0)
			continue;
		std::swap(a[row], a[pr]);
		Rational inv = Rational(1) / a[row][col];
		for (int c = col; c < m.cols; ++c)
			a[row][c] *= inv;
		for (int r = 0; r < m.rows; ++r) {
			if (r == row || a[r][col].is_zero())
				continue;
			Rational f = a[r][col];
			for (int c = col; c < m.cols; ++c)
				a[r][c] -= f * a[row][c];
		}
		pivots.push_back(col);
		++row;
	}
	std::vector<std::vector<Rational>> out(a.begin(), a.begin() + row);
	return {out, pivots};
}

} // namespace

std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix &m) {
	auto [rowsE, pivots] = echelon(m);
	std::vector<bool> is_pivot(m.cols, false);
	for (int p : pivots)
		is_pivot[p] = true;

	std::vector<std::vector<Rational>> basis;
	for (int free = 0; free < m.cols; ++free) {
		if (is_pivot[free])
			continue;
		std::vector<Rational> v(m.cols);
		v[free] = Rational(1);
		for (size_t r = 0; r < rowsE.size(); ++r)
			v[pivots[r]] = -rowsE[r][free];
		basis.push_back(std::move(v));
	}
	return rref_rows(std::move(basis));
}

int rank(const SparseMatrix &m) {
	return static_cast<int>(echelon(m).second.size());
}

std::vector<std::vector<Rational>> rref_rows(std::vector<std::vector<Rational>> rows) {
	if (rows.empty())
		return rows;
	SparseMatrix m;
	m.rows = static_cast<int>(rows.size());
	m.cols = static_cast<int>(rows[0].size());
	for (int r = 0; r < m.rows; ++r)
		for (int c = 0; c < m.cols; ++c)
			if (!rows[r][c].is_zero())
				m.entries[{r, c}] = rows[r][c];
	return echelon(m).first;
}

std::vector<Rational> reduce_against(const std::vector<std::vector<Rational>> &rows,
                                     std::vector<Rational> v) {
	for (const auto &row : rows) {
		int pivot = -1;
		for (size_t c = 0; c < row.size(); ++c) {
			if (!row[c].is_zero()) {
				pivot = static_cast<int>(c);
				break;
			}
		}
		if (pivot < 0 || v[pivot].is_zero())
			continue;
		Rational f = v[pivot];
		for (size_t c = 0; c < v.size(); ++c)
			v[c] -= f * row[c];
	}
	return v;
}

} // namespace binfty
