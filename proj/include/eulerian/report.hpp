#pragma once

#include "audit.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace eulerian {

inline constexpr const char* kToolVersion = "1.0.0";

struct AuditSummary {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t deviations = 0;
};

inline AuditSummary summarize(const std::vector<IdentityVerdict>& verdicts) {
    AuditSummary s;
    for (const auto& v : verdicts) {
        (v.status == Status::pass ? s.pass : s.fail)++;
        if (!v.as_expected()) ++s.deviations;
    }
    return s;
}

/// Timing lives in "header" only; everything else is a pure function of the
/// audit inputs.
struct ReportHeader {
    std::string started;  // ISO-8601 UTC
    std::int64_t elapsed_ms = 0;
};

inline nlohmann::ordered_json registry_json(const std::vector<IdentityDescriptor>& registry) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& d : registry) {
        nlohmann::ordered_json forms = nlohmann::ordered_json::array();
        nlohmann::ordered_json expected = nlohmann::ordered_json::object();
        nlohmann::ordered_json formulas = nlohmann::ordered_json::object();
        nlohmann::ordered_json notes = nlohmann::ordered_json::object();
        for (const auto& f : d.forms) {
            const auto name = to_string(f.form);
            forms.push_back(name);
            expected[name] = to_string(f.expected);
            formulas[name] = f.formula;
            notes[name] = f.note;
        }
        out.push_back({{"id", d.id},
                       {"locus", d.locus},
                       {"quote", d.forms.front().formula},
                       {"forms", forms},
                       {"n_min", d.n_min},
                       {"n_default", d.n_default},
                       {"expected", expected},
                       {"formulas", formulas},
                       {"notes", notes}});
    }
    return out;
}

inline nlohmann::ordered_json verdict_json(const IdentityVerdict& v) {
    return {{"id", v.id},
            {"form", to_string(v.form)},
            {"n", v.n},
            {"status", to_string(v.status)},
            {"expected", to_string(v.expected)},
            {"lhs_grade", v.detail.lhs_grade},
            {"rhs_grade", v.detail.rhs_grade},
            {"coeff_match", v.detail.coeff_match},
            {"lhs", v.detail.lhs},
            {"rhs", v.detail.rhs},
            {"diff", v.detail.diff}};
}

inline nlohmann::ordered_json report_json(const std::vector<IdentityDescriptor>& registry,
                                          const std::vector<IdentityVerdict>& verdicts, unsigned n_max,
                                          const ReportHeader& header) {
    const auto s = summarize(verdicts);
    nlohmann::ordered_json vs = nlohmann::ordered_json::array();
    for (const auto& v : verdicts) vs.push_back(verdict_json(v));
    return {{"version", kToolVersion},
            {"header", {{"started", header.started}, {"elapsed_ms", header.elapsed_ms}}},
            {"n_max", n_max},
            {"registry", registry_json(registry)},
            {"verdicts", vs},
            {"summary", {{"pass", s.pass}, {"fail", s.fail}, {"deviations", s.deviations}}}};
}

/// RFC 4180 field: quoted when it holds a comma, quote, CR or LF.
inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline const std::vector<std::string>& csv_columns() {
    static const std::vector<std::string> cols{"id",        "form",      "n",           "status", "expected", "lhs_grade",
                                               "rhs_grade", "coeff_match", "lhs",        "rhs",    "diff"};
    return cols;
}

inline std::string report_csv(const std::vector<IdentityVerdict>& verdicts) {
    std::string out;
    const auto& cols = csv_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
    out += "\r\n";
    for (const auto& v : verdicts) {
        const auto j = verdict_json(v);
        for (std::size_t i = 0; i < cols.size(); ++i) {
            const auto& cell = j[cols[i]];
            std::string text = cell.is_string() ? cell.get<std::string>() : cell.dump();
            out += (i ? "," : "") + csv_field(text);
        }
        out += "\r\n";
    }
    return out;
}

}  // namespace eulerian
