#include "binfty/report.hpp"

#include <json.hpp>

#include <sstream>

namespace binfty {

Report::Section &Report::section(const std::string &title) {
	for (auto &s : sections)
		if (s.title == title)
			return s;
	sections.push_back({title, {}});
	return sections.back();
}

void Report::add_law_report(const LawReport &r) {
	auto &s = section(r.law);
	for (const auto &line : format_law_report(r))
		s.lines.push_back(line);
}

std::string Report::render_text() const {
	std::ostringstream os;
	os << tool_version << "\n";
	os << "input: " << input_name << " digest " << input_digest << "\n";
	for (const auto &s : sections) {
		os << "== " << s.title << " ==\n";
		for (const auto &line : s.lines)
			os << line << "\n";
	}
	return os.str();
}

std::string Report::render_json() const {
	nlohmann::ordered_json root;
	root["tool"] = tool_version;
	root["input"] = input_name;
	root["digest"] = input_digest;
	nlohmann::ordered_json secs = nlohmann::ordered_json::array();
	for (const auto &s : sections) {
		nlohmann::ordered_json sec;
		sec["title"] = s.title;
		sec["lines"] = s.lines;
		secs.push_back(std::move(sec));
	}
	root["sections"] = std::move(secs);
	return root.dump(2) + "\n";
}

std::string fnv1a_hex(const std::string &bytes) {
	uint64_t h = 1469598103934665603ull;
	for (unsigned char c : bytes) {
		h ^= c;
		h *= 1099511628211ull;
	}
	std::ostringstream os;
	os << std::hex << h;
	return os.str();
}

std::vector<std::string> format_multimap(const GradedSpace &V, const std::string &label,
                                         const MultiMap &m) {
	std::vector<std::string> out;
	bool any = false;
	for (const auto &[in, value] : m.table) {
		if (value.empty())
			continue;
		any = true;
		out.push_back(label + V.word_name(in) + " = " + V.show(value));
	}
	if (!any)
		out.push_back(label + "* = 0");
	return out;
}

std::vector<std::string> format_law_report(const LawReport &r) {
	std::vector<std::string> out;
	for (const auto &v : r.verdicts)
		out.push_back(std::string(v.pass ? "pass " : "FAIL ") + v.arity);
	if (r.first_failure) {
		out.push_back("counterexample at " + r.first_failure->arity + " on " +
		              r.first_failure->input);
		out.push_back("  lhs = " + r.first_failure->lhs);
		out.push_back("  rhs = " + r.first_failure->rhs);
	}
	return out;
}

} // namespace binfty
