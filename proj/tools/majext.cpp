// majext command-line tool: extremal sequences, index bounds, oracle
// verification and graph realization.

#include "majext/majext.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace majext;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitCap = 3;

/// Inclusive range "a..b" or a single integer.
std::vector<int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos)
            return {std::stoi(text)};
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        if (hi < lo)
            throw DomainError("empty range " + text);
        std::vector<int> out;
        for (int v = lo; v <= hi; ++v)
            out.push_back(v);
        return out;
    } catch (const std::logic_error&) {
        throw DomainError("cannot parse range '" + text + "'");
    }
}

/// "p", "p/q" or a finite decimal such as "-0.5", converted exactly.
Rational parse_rational(const std::string& text) {
    try {
        const auto slash = text.find('/');
        if (slash != std::string::npos)
            return Rational(Integer(text.substr(0, slash))) / Rational(Integer(text.substr(slash + 1)));
        const auto dot = text.find('.');
        if (dot == std::string::npos)
            return Rational(Integer(text));
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        Integer den = 1;
        for (std::size_t i = dot + 1; i < text.size(); ++i)
            den *= 10;
        if (digits == "-" || digits.empty())
            throw DomainError("bad number");
        return Rational(Integer(digits)) / Rational(den);
    } catch (const std::exception&) {
        throw DomainError("cannot parse number '" + text + "'");
    }
}

std::vector<int> parse_sequence(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw DomainError("cannot parse degree '" + item + "'");
        }
    }
    if (out.empty())
        throw DomainError("empty degree sequence");
    return out;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(path);
    if (!file)
        throw DomainError("cannot open output file " + path);
    file << text;
}

struct Common {
    std::string format = "text";
    std::string output;
};

void add_format(CLI::App* cmd, Common& common) {
    cmd->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("--output", common.output, "Write to this file instead of stdout");
}

// --- extremal ----------------------------------------------------------------

struct ExtremalArgs {
    Common common;
    int n = 0;
    std::string c;
};

int run_extremal(const ExtremalArgs& args) {
    std::vector<ExtremalFamily> fams;
    for (int c : parse_range(args.c))
        fams.push_back(extremal_family(CyclomaticClass::make(args.n, c)));

    std::string out;
    if (args.common.format == "csv") {
        out = render_csv(fams);
    } else if (args.common.format == "json") {
        json j = json::array();
        for (const auto& f : fams)
            j.push_back(to_json(f));
        out = (fams.size() == 1 ? j.front() : j).dump(2) + "\n";
    } else {
        for (std::size_t i = 0; i < fams.size(); ++i)
            out += (i ? "\n" : "") + render_text(fams[i]);
    }
    emit(out, args.common.output);
    return kExitOk;
}

// --- bounds ------------------------------------------------------------------

struct BoundsArgs {
    Common common;
    int n = 0;
    std::string c;
    std::string index;
    std::string alpha;
    bool verify = false;
    bool refined = false;
    bool table = false;
    int cap = kDefaultEnumerationCap;
};

IndexSpec make_index(const std::string& name, const std::string& alpha) {
    const std::string kind = name.empty() ? (alpha.empty() ? "" : "general-zagreb") : name;
    if (kind == "general-zagreb") {
        if (alpha.empty())
            throw DomainError("--index general-zagreb needs --alpha");
        return IndexSpec::general_zagreb(parse_rational(alpha));
    }
    if (!alpha.empty())
        throw DomainError("--alpha applies only to general-zagreb");
    if (kind == "inverse-degree")
        return IndexSpec::inverse_degree();
    if (kind == "mult-zagreb-log")
        return IndexSpec::mult_zagreb_log();
    throw DomainError("give --index or --alpha");
}

int run_bounds(const BoundsArgs& args) {
    const IndexSpec index = make_index(args.index, args.alpha);
    std::vector<BoundsReport> reports;
    if (args.table) {
        if (index.kind() != IndexKind::GeneralFirstZagreb && index.kind() != IndexKind::InverseDegree)
            throw DomainError("--table needs a power-sum index");
        reports = zagreb_bounds_table(args.n, index.alpha());
    } else {
        if (args.c.empty())
            throw DomainError("--c is required unless --table is given");
        for (int c : parse_range(args.c))
            reports.push_back(bounds(CyclomaticClass::make(args.n, c), index));
    }

    int exit_code = kExitOk;
    std::vector<std::string> diagnostics;
    for (auto& r : reports) {
        if (args.refined) {
            if (index.kind() != IndexKind::InverseDegree)
                throw DomainError("--refined applies to the inverse-degree index");
            r.refined_upper = refined_upper_bound(r.cls);
        }
        if (args.verify) {
            const auto v = verify_bounds(r.cls, index, args.cap);
            r.verified = v.verdict;
            if (v.verdict == Verdict::Mismatch)
                exit_code = kExitMismatch;
            else if (v.verdict == Verdict::Skipped && exit_code == kExitOk)
                exit_code = kExitCap;
            if (!v.detail.empty())
                diagnostics.push_back("n=" + std::to_string(r.cls.n) + " c=" + std::to_string(r.cls.c) + " " +
                                      to_string(v.verdict) + ": " + v.detail);
        }
    }
    const auto notes = orientation_notes(reports);

    std::string out;
    if (args.common.format == "csv") {
        out = render_csv(reports);
        for (const auto& note : notes)
            std::cerr << "note: " << note << "\n";
    } else if (args.common.format == "json") {
        out = to_json(reports, notes).dump(2) + "\n";
    } else {
        out = render_text(reports, notes);
    }
    emit(out, args.common.output);
    for (const auto& d : diagnostics)
        std::cerr << d << "\n";
    return exit_code;
}

// --- verify ------------------------------------------------------------------

struct VerifyArgs {
    int n = 0;
    int n_max = 0;
    std::string c = "0..6";
    bool equivalence_only = false;
    bool conjecture = false;
    std::optional<int> cap;
};

std::string join(const std::vector<DegreeSequence>& seqs) {
    std::string out;
    for (const auto& s : seqs)
        out += (out.empty() ? "" : " ") + format_compact(s);
    return out;
}

int run_conjecture(const VerifyArgs& args) {
    if (args.n == 0)
        throw DomainError("--conjecture needs --n");
    const int cap = args.cap.value_or(20);
    for (int c : parse_range(args.c)) {
        const auto r = conjecture_check(args.n, c, cap);
        std::cout << "CONJECTURE (exploratory, not a theorem) n=" << args.n << " c=" << c << ": "
                  << r.sequences << " connected graphical sequences\n";
        if (r.patterns.maximals.empty())
            std::cout << "  no pattern applies (needs n >= c + 2)\n";
        for (std::size_t i = 0; i < r.patterns.maximals.size(); ++i)
            std::cout << "  pattern " << format_compact(r.patterns.maximals[i]) << ": "
                      << (r.pattern_is_maximal[i] ? "maximal" : "NOT maximal") << "\n";
        if (r.minimal_matches)
            std::cout << "  minimal pattern " << format_compact(*r.patterns.minimal) << ": "
                      << (*r.minimal_matches ? "equals the unique minimal" : "does NOT equal the minimal")
                      << "\n";
        std::cout << "  enumerated maximals: " << join(r.oracle.maximals) << "\n";
        std::cout << "  enumerated minimal: "
                  << (r.oracle.minima.size() == 1 ? format_compact(r.oracle.minima.front()) : std::string("none"))
                  << "\n";
        std::cout << "  patterns cover all maximals: "
                  << (r.unmatched_maximals.empty() ? std::string("yes")
                                                   : "no, also " + join(r.unmatched_maximals))
                  << "\n";
        std::cout << "  CONJECTURE " << (r.holds() ? "consistent with enumeration" : "CONTRADICTED by enumeration")
                  << " (patterns maximal and minimal pattern least)\n";
    }
    return kExitOk;
}

int run_verify(const VerifyArgs& args) {
    if (args.conjecture)
        return run_conjecture(args);
    if ((args.n == 0) == (args.n_max == 0))
        throw DomainError("give exactly one of --n and --n-max");
    const int cap = args.cap.value_or(kDefaultEnumerationCap);
    const std::vector<int> cs = parse_range(args.c);
    for (int c : cs)
        if (c < 0 || c > kMaxCyclomatic)
            throw DomainError("c=" + std::to_string(c) + " outside [0, 6]");
    const int n_lo = args.n ? args.n : 2;
    const int n_hi = args.n ? args.n : args.n_max;

    std::size_t mismatches = 0, skipped = 0, candidates = 0, counterexamples = 0;
    const std::vector<IndexSpec> indices = {IndexSpec::inverse_degree(), IndexSpec::general_zagreb(2),
                                            IndexSpec::general_zagreb(3), IndexSpec::mult_zagreb_log()};
    for (int c : cs) {
        for (int n = n_lo; n <= n_hi; ++n) {
            if (n > cap) {
                ++skipped;
                std::cout << "n=" << n << " c=" << c << ": skipped, n exceeds the enumeration cap " << cap << "\n";
                continue;
            }
            const auto eq = check_equivalence(n, c, cap);
            candidates += eq.candidates;
            counterexamples += eq.counterexamples.size() + eq.not_graphical.size();
            if (!eq.ok()) {
                std::cout << "n=" << n << " c=" << c << ": equivalence MISMATCH on " << join(eq.counterexamples)
                          << " " << join(eq.not_graphical) << "\n";
            }
            if (args.equivalence_only || n < min_order(c))
                continue;

            const auto cls = CyclomaticClass::make(n, c);
            const auto ext = check_extremality(cls, cap);
            std::string line = "n=" + std::to_string(n) + " c=" + std::to_string(c) + ": " +
                               std::to_string(ext.sequences) + " sequences, extremality " +
                               (ext.ok() ? "ok" : "MISMATCH");
            if (!ext.ok())
                ++mismatches;
            for (const auto& index : indices) {
                const auto v = verify_bounds(cls, index, cap);
                line += ", " + index.symbol() + " " + to_string(v.verdict);
                if (v.verdict == Verdict::Mismatch)
                    ++mismatches;
            }
            std::cout << line << "\n";
        }
    }
    std::cout << "equivalence: " << counterexamples << " counterexamples over " << candidates << " candidates\n";
    mismatches += counterexamples;
    if (mismatches) {
        std::cout << "MISMATCH: " << mismatches << " failing checks\n";
        return kExitMismatch;
    }
    if (skipped) {
        std::cout << skipped << " grid points skipped at the enumeration cap\n";
        return kExitCap;
    }
    std::cout << "all exact-match\n";
    return kExitOk;
}

// --- realize -----------------------------------------------------------------

struct RealizeArgs {
    std::string seq;
    std::optional<int> check_c;
    std::string label = "G";
    std::string output;
};

int run_realize(const RealizeArgs& args) {
    const auto seq = parse_sequence(args.seq);
    const SimpleGraph g = realize(seq);
    if (args.check_c) {
        const int c = cyclomatic_number(g);
        if (c != *args.check_c) {
            std::cerr << "cyclomatic number " << c << ", expected " << *args.check_c << "\n";
            return kExitMismatch;
        }
    }
    emit(export_dot(g, args.label), args.output);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Majorization-based extremal degree sequences and index bounds"};
    app.require_subcommand(1);

    ExtremalArgs ex;
    auto* extremal = app.add_subcommand("extremal", "Maximal and minimal degree sequences of a class");
    extremal->add_option("--n", ex.n, "Order")->required();
    extremal->add_option("--c", ex.c, "Cyclomatic number or range a..b")->required();
    add_format(extremal, ex.common);

    BoundsArgs bo;
    auto* bnd = app.add_subcommand("bounds", "Lower and upper bounds of an index over a class");
    bnd->add_option("--n", bo.n, "Order")->required();
    bnd->add_option("--c", bo.c, "Cyclomatic number or range a..b");
    bnd->add_option("--index", bo.index, "Index")
        ->check(CLI::IsMember({"general-zagreb", "inverse-degree", "mult-zagreb-log"}));
    bnd->add_option("--alpha", bo.alpha, "Exponent of the general Zagreb index (p, p/q or decimal)");
    bnd->add_flag("--verify", bo.verify, "Compare with exhaustive enumeration");
    bnd->add_flag("--refined", bo.refined, "Add the inverse-degree bound under d_{c+2} >= 2");
    bnd->add_flag("--table", bo.table, "Rows c = 1..6 for the given exponent");
    bnd->add_option("--cap", bo.cap, "Largest n that may be enumerated");
    add_format(bnd, bo.common);

    VerifyArgs ve;
    auto* ver = app.add_subcommand("verify", "Exhaustive oracle checks over an (n, c) grid");
    auto* n_opt = ver->add_option("--n", ve.n, "Single order");
    auto* n_max_opt = ver->add_option("--n-max", ve.n_max, "Check all orders up to this one");
    n_opt->excludes(n_max_opt);
    ver->add_option("--c", ve.c, "Cyclomatic number or range a..b");
    ver->add_flag("--equivalence-only", ve.equivalence_only, "Only compare the two characterizations");
    ver->add_flag("--conjecture", ve.conjecture, "Test the parametric patterns against enumeration");
    ver->add_option("--cap", ve.cap, "Largest n that may be enumerated");

    RealizeArgs re;
    auto* rea = app.add_subcommand("realize", "Connected graph with a given degree sequence (DOT)");
    rea->add_option("--seq", re.seq, "Comma-separated degrees")->required();
    rea->add_option("--check-c", re.check_c, "Required cyclomatic number");
    rea->add_option("--label", re.label, "Graph name");
    rea->add_option("--output", re.output, "Write to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*extremal)
            return run_extremal(ex);
        if (*bnd)
            return run_bounds(bo);
        if (*ver)
            return run_verify(ve);
        return run_realize(re);
    } catch (const ResourceLimit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
