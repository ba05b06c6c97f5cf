// eulerian-audit: exact tables and identity audits for Eulerian-type families.

#include <eulerian/eulerian.hpp>

#include "CLI11.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace eulerian;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitDeviation = 2;

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::string iso_now() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

// ---------------------------------------------------------------- families

enum class Shape { scalar, row, expr };

struct Family {
    std::string name;
    Shape shape;
};

const std::vector<Family>& families() {
    static const std::vector<Family> f{
        {"bernoulli", Shape::scalar},         {"bernstein", Shape::expr},      {"euler", Shape::scalar},
        {"eulerian-G", Shape::expr},          {"eulerian-S", Shape::expr},     {"eulerian-fraction", Shape::expr},
        {"eulerian-triangle", Shape::row},    {"gen-eulerian", Shape::expr},   {"genocchi", Shape::scalar},
        {"minus-one", Shape::scalar},         {"polylog-neg", Shape::expr},    {"stirling2", Shape::row},
    };
    return f;
}

const Family& find_family(const std::string& name) {
    for (const auto& f : families())
        if (f.name == name) return f;
    std::vector<std::string> names;
    for (const auto& f : families()) names.push_back(f.name);
    throw std::invalid_argument("unknown family '" + name + "'; available: " + join(names, ", "));
}

struct RenderOptions {
    std::optional<Rat> point;
    Convention convention = Convention::S;
};

std::string render_poly(const Poly& p, char var, const RenderOptions& opt) {
    return opt.point ? p.eval(*opt.point).to_string() : p.to_string(var);
}

std::string render_ratfunc(const RatFunc& f, const RenderOptions& opt) {
    return opt.point ? f.eval(*opt.point).to_string() : f.to_string('x');
}

/// One member of a family, as printed by `seq` and `poly`.
std::string render(const Family& fam, unsigned n, const RenderOptions& opt) {
    const auto& name = fam.name;
    if (name == "bernoulli") return bernoulli_number(n).to_string();
    if (name == "euler") return euler_number(n).to_string();
    if (name == "genocchi") return genocchi_number(n).to_string();
    if (name == "minus-one") return gen_eulerian_minus_one(n).coeff.to_string();
    if (name == "eulerian-triangle") {
        std::vector<std::string> cells;
        for (const auto& c : eulerian_row(n).entries) cells.push_back(c.to_string());
        return join(cells, " ");
    }
    if (name == "stirling2") {
        std::vector<std::string> cells;
        for (unsigned k = 0; k <= n; ++k) cells.push_back(stirling2(n, k).get_str());
        return join(cells, " ");
    }
    if (name == "eulerian-S") return render_poly(eulerian_poly_S(n), 'x', opt);
    if (name == "eulerian-G") return render_poly(eulerian_poly_G(n), 'x', opt);
    if (name == "eulerian-fraction") return render_ratfunc(eulerian_fraction(n, opt.convention), opt);
    if (name == "polylog-neg") return render_ratfunc(polylog_neg(n), opt);
    if (name == "bernstein") {
        std::vector<std::string> parts;
        for (unsigned k = 0; k <= n; ++k) parts.push_back("k=" + std::to_string(k) + ": " + render_poly(bernstein_poly(k, n), 'x', opt));
        return join(parts, "; ");
    }
    if (name == "gen-eulerian") {
        const LGraded g = gen_eulerian(n);
        if (opt.point) return to_string(specialize(g, *opt.point));
        return to_string(g, 'a');
    }
    throw std::logic_error("no renderer for family " + name);
}

int cmd_seq(const std::string& name, unsigned n_max, const RenderOptions& opt) {
    const Family& fam = find_family(name);
    std::vector<std::string> items;
    for (unsigned n = 0; n <= n_max; ++n) {
        std::string item = render(fam, n, opt);
        items.push_back(fam.shape == Shape::expr ? "n=" + std::to_string(n) + ": " + item : item);
    }
    const char* sep = fam.shape == Shape::scalar ? ", " : fam.shape == Shape::row ? " / " : "\n";
    std::cout << join(items, sep) << '\n';
    return kExitOk;
}

int cmd_poly(const std::string& name, unsigned n, const RenderOptions& opt) {
    const Family& fam = find_family(name);
    if (name == "gen-eulerian" && !opt.point) {
        const LGraded g = gen_eulerian(n);
        std::cout << "q = " << g.coeff.to_string('a') << '\n' << "grade = " << g.grade << '\n';
        return kExitOk;
    }
    std::cout << render(fam, n, opt) << '\n';
    return kExitOk;
}

int cmd_series(const std::string& name, unsigned n_max, unsigned k, const std::optional<Rat>& point) {
    static const std::vector<std::pair<std::string, GfKind>> kinds{
        {"bernoulli", GfKind::bernoulli},     {"bernstein", GfKind::bernstein}, {"classical-eulerian", GfKind::classical_eulerian},
        {"euler", GfKind::euler},             {"generalized", GfKind::generalized}, {"genocchi", GfKind::genocchi},
        {"minus-one", GfKind::minus_one},
    };
    std::optional<GfKind> kind;
    std::vector<std::string> names;
    for (const auto& [n, g] : kinds) {
        names.push_back(n);
        if (n == name) kind = g;
    }
    if (!kind) throw std::invalid_argument("unknown generating function '" + name + "'; available: " + join(names, ", "));
    const char var = *kind == GfKind::generalized ? 'a' : 'x';
    std::vector<std::string> out;
    if (point) {
        for (const auto& c : gf_coefficients_at({*kind, k}, n_max, *point)) out.push_back(c.to_string());
    } else {
        for (const auto& c : gf_coefficients({*kind, k}, n_max)) out.push_back(c.to_string(var));
    }
    std::cout << join(out, ", ") << '\n';
    return kExitOk;
}

int cmd_padic(unsigned long p, unsigned n, unsigned levels, unsigned long cap) {
    const auto rows = witt_table(n, p, levels, cap);
    std::cout << "p=" << p << " n=" << n << " E_n=" << euler_number(n).to_string() << '\n';
    std::cout << "N\tS_N\tv_p(S_N-E_n)\tv_p(residual)\n";
    for (const auto& r : rows) {
        const auto fe = check_functional_equation(n, p, r.level, cap);
        std::cout << r.level << '\t' << r.partial_sum.to_string() << '\t' << r.valuation_of_gap.to_string() << '\t'
                  << fe.valuation.to_string() << '\n';
    }
    return kExitOk;
}

int cmd_audit(const std::string& identity, unsigned n_max, const std::string& format, const std::string& out_path,
              bool strict) {
    const auto started = std::chrono::steady_clock::now();
    ReportHeader header{iso_now(), 0};
    std::vector<IdentityVerdict> verdicts;
    try {
        verdicts = run_audit(identity, n_max);
    } catch (const UnknownIdentity& e) {
        std::cerr << e.what() << "; available: all, " << join(identity_ids(), ", ") << '\n';
        return kExitError;
    }
    if (strict)
        for (auto& v : verdicts) v.expected = Status::pass;
    header.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();

    std::vector<IdentityDescriptor> registry;
    for (const auto& d : identity_registry())
        if (identity == "all" || d.id == identity) registry.push_back(d);

    const std::string body = format == "csv" ? report_csv(verdicts) : report_json(registry, verdicts, n_max, header).dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write '" << out_path << "'\n";
            return kExitError;
        }
        out << body;
    }
    const auto s = summarize(verdicts);
    for (const auto& v : verdicts)
        if (!v.as_expected())
            std::cerr << "deviation: " << v.id << " " << to_string(v.form) << " n=" << v.n << " got "
                      << to_string(v.status) << ", expected " << to_string(v.expected) << '\n';
    std::cerr << "audit: " << s.pass << " pass, " << s.fail << " fail, " << s.deviations << " deviations\n";
    return s.deviations == 0 ? kExitOk : kExitDeviation;
}

int cmd_crosscheck(const std::string& name, const std::string& path, long offset) {
    const BFile bfile = load_bfile(path);
    const auto r = cross_check(name, bfile, offset);
    if (r.mismatch) {
        std::cout << "mismatch at b-file index " << r.mismatch->index << ": b-file has " << r.mismatch->expected.get_str()
                  << ", computed " << r.mismatch->computed.get_str() << '\n';
        return kExitDeviation;
    }
    std::cout << "match: " << r.compared << " terms";
    if (r.compared) std::cout << ", b-file indices " << r.first_index << ".." << r.last_index;
    std::cout << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tables and identity audits for Eulerian-type polynomial families"};
    app.require_subcommand(1);

    std::string identity = "all", format = "json", out_path, name, bfile_path, point_text, convention = "S";
    unsigned n_max = 10, n = 0, k = 0, levels = 4;
    unsigned long p = 3, cap = kDefaultLevelCap;
    long offset = 0;
    bool strict = false;

    auto* audit = app.add_subcommand("audit", "Audit identities and write a JSON or CSV report");
    audit->add_option("--identity", identity, "Identity id or 'all'");
    audit->add_option("--n-max", n_max, "Largest n audited");
    audit->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    audit->add_option("--out", out_path, "Report path (stdout when omitted)");
    audit->add_flag("--strict", strict, "Expect every form to pass for every n");

    auto* seq = app.add_subcommand("seq", "Print a family for n = 0..n-max");
    seq->add_option("--name", name, "Family name")->required();
    seq->add_option("--n-max", n_max, "Largest n");
    seq->add_option("--a", point_text, "Rational point at which polynomial families are evaluated");
    seq->add_option("--convention", convention, "Eulerian convention for eulerian-fraction")->check(CLI::IsMember({"S", "G"}));

    auto* poly = app.add_subcommand("poly", "Print one member of a family");
    poly->add_option("--family", name, "Family name")->required();
    poly->add_option("--n", n, "Index")->required();
    poly->add_option("--a", point_text, "Rational evaluation point");
    poly->add_option("--convention", convention, "Eulerian convention for eulerian-fraction")->check(CLI::IsMember({"S", "G"}));

    auto* series = app.add_subcommand("series", "Factorial-normalized generating-function coefficients");
    series->add_option("--family", name, "Generating function")->required();
    series->add_option("--n-max", n_max, "Largest coefficient index");
    series->add_option("--k", k, "Bernstein index");
    series->add_option("--a", point_text, "Rational value of the variable");

    auto* padic = app.add_subcommand("padic", "Fermionic partial sums and their p-adic gaps");
    padic->add_option("--p", p, "Odd prime")->required();
    padic->add_option("--n", n, "Power n");
    padic->add_option("--levels", levels, "Levels N = 1..levels");
    padic->add_option("--cap", cap, "Largest p^N enumerated");

    auto* cross = app.add_subcommand("crosscheck", "Compare an integer family with a b-file");
    cross->add_option("--name", name, "Sequence name")->required();
    cross->add_option("--bfile", bfile_path, "b-file path")->required();
    cross->add_option("--offset", offset, "b-file index of the first term");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitError;
    }

    try {
        RenderOptions opt;
        if (!point_text.empty()) opt.point = Rat::parse(point_text);
        opt.convention = convention == "G" ? Convention::G : Convention::S;
        if (*audit) return cmd_audit(identity, n_max, format, out_path, strict);
        if (*seq) return cmd_seq(name, n_max, opt);
        if (*poly) return cmd_poly(name, n, opt);
        if (*series) return cmd_series(name, n_max, k, opt.point);
        if (*padic) return cmd_padic(p, n, levels, cap);
        if (*cross) return cmd_crosscheck(name, bfile_path, offset);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
