#pragma once

#include "binfty/inf_bialgebra.hpp"

#include <string>
#include <vector>

namespace binfty {

class ParseError : public Error {
  public:
	explicit ParseError(const std::string &what) : Error(what) {}
};

/// Algebra definition file: named basis with degrees, unit designation and
/// structure-constant tables for bullet, circ, diff, plus an optional
/// coproduct table for bialgebra inputs. Coefficients are exact "p/q"
/// strings; floating point is rejected at parse time; unknown fields are
/// rejected.
struct AlgebraFile {
	std::string name;
	GradedSpace space;
	MultiMap bullet;
	MultiMap circ;
	MultiMap diff;
	std::optional<MultiMap> delta;
	bool truncated = false; // product tables are partial (tensor-word carrier)

	bool is_bialgebra() const { return delta.has_value(); }
	TwoAssocDiffAlgebra algebra() const;
	TwoAssocDiffBialgebra bialgebra() const; // requires delta
};

AlgebraFile parse_algebra_file(const std::string &text);
std::string serialize_algebra_file(const AlgebraFile &f);

/// Built-in corpus: poly3, ext1, dual2, upper2.
std::vector<std::string> corpus_names();
AlgebraFile corpus_algebra(const std::string &name);

/// U(A) of the underlying B-infinity structure of a corpus-style algebra, as
/// a bialgebra file on the truncated word basis.
AlgebraFile enveloping_file(const AlgebraFile &base, int cap);

} // namespace binfty
