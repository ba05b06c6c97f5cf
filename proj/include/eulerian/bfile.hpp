#pragma once

#include "classical.hpp"
#include "rational.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace eulerian {

/// Integer sequence in "index value" lines; '#' lines and blank lines are skipped.
struct BFile {
    struct Entry {
        long index;
        BigInt value;
    };
    std::vector<Entry> entries;  // indices strictly increasing
};

class BFileParseError : public std::runtime_error {
public:
    BFileParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class BFileIoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline bool is_integer_token(const std::string& s) {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace detail

inline BFile parse_bfile(std::istream& in) {
    BFile out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::string idx, val, extra;
        fields >> idx >> val;
        if (val.empty()) throw BFileParseError(lineno, "expected 'index value', got '" + line + "'");
        if (fields >> extra) throw BFileParseError(lineno, "trailing field '" + extra + "'");
        if (!detail::is_integer_token(idx)) throw BFileParseError(lineno, "malformed index '" + idx + "'");
        if (!detail::is_integer_token(val)) throw BFileParseError(lineno, "malformed value '" + val + "'");
        long index = 0;
        try {
            index = std::stol(idx);
        } catch (const std::out_of_range&) {
            throw BFileParseError(lineno, "index '" + idx + "' out of range");
        }
        if (!out.entries.empty() && index <= out.entries.back().index)
            throw BFileParseError(lineno, "index " + idx + " does not increase");
        out.entries.push_back({index, BigInt(val, 10)});
    }
    if (in.bad()) throw BFileIoError("read failure");
    return out;
}

inline BFile load_bfile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BFileIoError("cannot open b-file '" + path + "'");
    return parse_bfile(in);
}

/// Integer-valued families available for cross-checking, by name:
///   eulerian-triangle  A(n,k) for n >= 1, k = 1..n, row-major
///   stirling2          S(n,k) for n >= 1, k = 1..n, row-major
///   genocchi           G_n for n >= 0
///   eulerian-row-sums  sum_k A(n,k) for n >= 1 (= n!)
inline const std::vector<std::string>& integer_sequence_names() {
    static const std::vector<std::string> names{"eulerian-row-sums", "eulerian-triangle", "genocchi", "stirling2"};
    return names;
}

/// First `count` terms of a named family.
inline std::vector<BigInt> integer_sequence(const std::string& name, std::size_t count) {
    std::vector<BigInt> out;
    out.reserve(count);
    auto push_rat = [&](const Rat& r) {
        if (!r.is_integer()) throw std::logic_error(name + " produced the non-integer " + r.to_string());
        out.push_back(r.num());
    };
    if (name == "eulerian-triangle" || name == "stirling2") {
        for (unsigned n = 1; out.size() < count; ++n)
            for (unsigned k = 1; k <= n && out.size() < count; ++k)
                push_rat(name == "stirling2" ? Rat(stirling2(n, k)) : eulerian_number(n, k));
    } else if (name == "genocchi") {
        for (unsigned n = 0; out.size() < count; ++n) push_rat(genocchi_number(n));
    } else if (name == "eulerian-row-sums") {
        for (unsigned n = 1; out.size() < count; ++n) {
            Rat s;
            for (unsigned k = 1; k <= n; ++k) s += eulerian_number(n, k);
            push_rat(s);
        }
    } else {
        throw std::invalid_argument("unknown integer sequence '" + name + "'");
    }
    return out;
}

struct CrossCheckResult {
    std::size_t compared = 0;
    long first_index = 0;
    long last_index = 0;
    struct Mismatch {
        long index;
        BigInt expected;  // b-file value
        BigInt computed;
    };
    std::optional<Mismatch> mismatch;
};

/// Artifact term i is compared with the b-file entry whose index is i + offset.
inline CrossCheckResult cross_check(const std::string& name, const BFile& bfile, long offset) {
    CrossCheckResult r;
    long max_term = -1;
    for (const auto& e : bfile.entries) max_term = std::max(max_term, e.index - offset);
    if (max_term < 0) return r;
    const auto terms = integer_sequence(name, static_cast<std::size_t>(max_term) + 1);
    for (const auto& e : bfile.entries) {
        const long i = e.index - offset;
        if (i < 0) continue;
        if (r.compared == 0) r.first_index = e.index;
        r.last_index = e.index;
        ++r.compared;
        if (terms[static_cast<std::size_t>(i)] != e.value) {
            r.mismatch = CrossCheckResult::Mismatch{e.index, e.value, terms[static_cast<std::size_t>(i)]};
            return r;
        }
    }
    return r;
}

}  // namespace eulerian
