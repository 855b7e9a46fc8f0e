#pragma once

#include "binfty/graded.hpp"

#include <optional>
#include <string>
#include <vector>

namespace binfty {

/// Outcome of checking one axiom family: a verdict per arity within the
/// requested caps, plus the first counterexample when something fails.
struct LawReport {
	struct Verdict {
		std::string arity; // e.g. "n=3", "(i,j,k)=(1,2,1)", "pairs"
		bool pass = true;
	};
	struct Counterexample {
		std::string arity;
		std::string input; // basis tuple, printed
		std::string lhs;
		std::string rhs;
	};

	std::string law;
	std::vector<Verdict> verdicts;
	std::optional<Counterexample> first_failure;

	bool all_pass() const {
		for (const auto &v : verdicts)
			if (!v.pass)
				return false;
		return true;
	}

	void record(const std::string &arity, bool pass) { verdicts.push_back({arity, pass}); }

	void fail(const std::string &arity, const std::string &input, const std::string &lhs,
	          const std::string &rhs) {
		verdicts.push_back({arity, false});
		if (!first_failure)
			first_failure = Counterexample{arity, input, lhs, rhs};
	}

	std::string summary() const;
};

/// Raised when an operation requires validated input and the laws fail.
class ValidationError : public Error {
  public:
	ValidationError(const std::string &what, LawReport report)
	    : Error(what), report(std::move(report)) {}
	LawReport report;
};

} // namespace binfty
