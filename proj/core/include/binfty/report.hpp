#pragma once

#include "binfty/law_report.hpp"

#include <string>
#include <vector>

namespace binfty {

inline constexpr const char *tool_version = "binfty 0.1.0";

/// Deterministic plain-text / JSON report: tool version, input digest and a
/// fixed-order list of sections.
struct Report {
	std::string input_name;
	std::string input_digest;
	struct Section {
		std::string title;
		std::vector<std::string> lines;
	};
	std::vector<Section> sections;

	Section &section(const std::string &title);
	void add_law_report(const LawReport &r);
	std::string render_text() const;
	std::string render_json() const;
};

std::string fnv1a_hex(const std::string &bytes);

/// Structure-map table: one line per input word, words in length-then-lex
/// order, coefficients as reduced "p/q".
std::vector<std::string> format_multimap(const GradedSpace &V, const std::string &label,
                                         const MultiMap &m);

std::vector<std::string> format_law_report(const LawReport &r);

} // namespace binfty
