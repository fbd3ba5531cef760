// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "majext/majext.hpp"
#include "test_support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace majext;
using namespace testing_support;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass)
            detail = why;
        pass = false;
    }
};

std::set<std::vector<int>> as_set(const std::vector<DegreeSequence>& v) {
    std::set<std::vector<int>> out;
    for (const auto& s : v)
        out.insert(s.degrees());
    return out;
}

std::string where(int n, int c) { return "n=" + std::to_string(n) + " c=" + std::to_string(c); }

Outcome ac1_families() {
    Outcome o;
    for (int c = 0; c <= kMaxCyclomatic; ++c)
        for (int n = c + 2; n <= 12; ++n) {
            const auto fam = extremal_family(CyclomaticClass::make(n, c));
            const auto ref = reference_family(n, c);
            if (as_set(fam.maximals) != std::set<std::vector<int>>(ref.maximals.begin(), ref.maximals.end()))
                o.fail("maximals differ at " + where(n, c));
            if (fam.minimal.degrees() != ref.minimal)
                o.fail("minimal differs at " + where(n, c));
        }
    return o;
}

Outcome ac2_small_orders() {
    struct Case {
        int n, c;
        std::vector<std::vector<int>> maximals;
        std::vector<int> minimal;
    };
    const std::vector<Case> cases = {
        {4, 3, {{3, 3, 3, 3}}, {3, 3, 3, 3}},
        {5, 4, {{4, 4, 3, 3, 2}}, {4, 3, 3, 3, 3}},
        {5, 5, {{4, 4, 4, 3, 3}}, {4, 4, 4, 3, 3}},
        {6, 5, {{5, 5, 3, 3, 2, 2}, {5, 4, 4, 3, 3, 1}}, {4, 4, 3, 3, 3, 3}},
        {7, 5, {{6, 6, 2, 2, 2, 2, 2}, {6, 5, 3, 3, 2, 2, 1}, {6, 4, 4, 3, 3, 1, 1}}, {4, 3, 3, 3, 3, 3, 3}},
        {5, 6, {{4, 4, 4, 4, 4}}, {4, 4, 4, 4, 4}},
        {6, 6, {{5, 5, 4, 3, 3, 2}, {5, 4, 4, 4, 4, 1}}, {4, 4, 4, 4, 3, 3}},
        {7, 6, {{6, 6, 3, 3, 2, 2, 2}, {6, 5, 4, 3, 3, 2, 1}, {6, 4, 4, 4, 4, 1, 1}}, {4, 4, 4, 3, 3, 3, 3}},
        {8, 6,
         {{7, 7, 2, 2, 2, 2, 2, 2}, {7, 6, 3, 3, 2, 2, 2, 1}, {7, 5, 4, 3, 3, 2, 1, 1}, {7, 4, 4, 4, 4, 1, 1, 1}},
         {4, 4, 3, 3, 3, 3, 3, 3}},
        {9, 6,
         {{8, 7, 2, 2, 2, 2, 2, 2, 1},
          {8, 6, 3, 3, 2, 2, 2, 1, 1},
          {8, 5, 4, 3, 3, 2, 1, 1, 1},
          {8, 4, 4, 4, 4, 1, 1, 1, 1}},
         {4, 3, 3, 3, 3, 3, 3, 3, 3}},
    };
    Outcome o;
    for (const auto& k : cases) {
        const auto fam = extremal_family(CyclomaticClass::make(k.n, k.c));
        if (as_set(fam.maximals) != std::set<std::vector<int>>(k.maximals.begin(), k.maximals.end()))
            o.fail("maximals differ at " + where(k.n, k.c));
        if (fam.minimal.degrees() != k.minimal)
            o.fail("minimal differs at " + where(k.n, k.c));
    }
    return o;
}

Outcome ac3_closed_forms() {
    Outcome o;
    for (int c = 0; c <= kMaxCyclomatic; ++c)
        for (int n = c + 2; n <= 50; ++n) {
            const auto cls = CyclomaticClass::make(n, c);
            const auto cf = closed_form_inverse_degree(cls);
            const auto en = bounds(cls, IndexSpec::inverse_degree());
            if (cf.lower.exact_value() != en.lower.exact_value() || cf.upper.exact_value() != en.upper.exact_value())
                o.fail("closed form differs at " + where(n, c));
        }
    const Rational example = bounds(CyclomaticClass::make(8, 4), IndexSpec::inverse_degree()).upper.exact_value();
    if (example != Rational(3) + Rational(1, 7) + Rational(17, 12))
        o.fail("c=4 n=8 upper is " + to_exact_string(example));
    return o;
}

Outcome ac4_refined_identity() {
    Outcome o;
    for (int c = 3; c <= kMaxCyclomatic; ++c)
        for (int n = c + 2; n <= 50; ++n) {
            const Rational gap = refined_upper_bound(CyclomaticClass::make(n, c)).exact_value() - (n - c) -
                                 Rational(1, n - 1);
            if (gap != Rational(c * c - 3 * c - 2, 2 * (c + 1)))
                o.fail("identity fails at " + where(n, c));
        }
    return o;
}

Outcome ac5_oracle_sharpness() {
    Outcome o;
    const std::vector<IndexSpec> indices = {IndexSpec::general_zagreb(-1), IndexSpec::general_zagreb(2),
                                            IndexSpec::general_zagreb(3), IndexSpec::mult_zagreb_log()};
    for (int c = 0; c <= kMaxCyclomatic; ++c)
        for (int n = c + 2; n <= 9; ++n)
            for (const auto& idx : indices) {
                const auto v = verify_bounds(CyclomaticClass::make(n, c), idx);
                if (v.verdict != Verdict::ExactMatch)
                    o.fail(idx.symbol() + " " + to_string(v.verdict) + " at " + where(n, c) + ": " + v.detail);
            }
    return o;
}

Outcome ac6_equivalence() {
    Outcome o;
    std::size_t candidates = 0;
    for (int c = 0; c <= kMaxCyclomatic; ++c)
        for (int n = 2; n <= 12; ++n) {
            const auto r = check_equivalence(n, c);
            candidates += r.candidates;
            if (!r.counterexamples.empty())
                o.fail("counterexample " + format_plain(r.counterexamples.front()) + " at " + where(n, c));
            if (!r.not_graphical.empty())
                o.fail("accepted non-graphical " + format_plain(r.not_graphical.front()));
        }
    if (o.pass)
        o.detail = std::to_string(candidates) + " candidates";
    return o;
}

Outcome ac7_extremality() {
    Outcome o;
    for (int c = 0; c <= kMaxCyclomatic; ++c)
        for (int n = min_order(c); n <= 10; ++n) {
            const auto r = check_extremality(CyclomaticClass::make(n, c));
            if (!r.uncovered.empty())
                o.fail(format_plain(r.uncovered.front()) + " below no maximal at " + where(n, c));
            if (!r.below_minimal.empty())
                o.fail(format_plain(r.below_minimal.front()) + " not above the minimal at " + where(n, c));
            if (!r.maximals_incomparable)
                o.fail("comparable maximals at " + where(n, c));
        }
    return o;
}

Outcome ac8_realization() {
    Outcome o;
    std::size_t graphs = 0;
    for (int c = 0; c <= kMaxCyclomatic; ++c)
        for (int n = min_order(c); n <= 12; ++n) {
            const auto fam = extremal_family(CyclomaticClass::make(n, c));
            auto seqs = fam.maximals;
            seqs.push_back(fam.minimal);
            for (const auto& s : seqs) {
                const auto g = realize(s);
                ++graphs;
                if (!g.connected() || g.degree_list() != s.degrees() || cyclomatic_number(g) != c)
                    o.fail("bad realization of " + format_plain(s));
            }
        }
    if (o.pass)
        o.detail = std::to_string(graphs) + " graphs";
    return o;
}

Outcome ac9_orientation() {
    Outcome o;
    const auto rows = zagreb_bounds_table(10, 2);
    auto check = [&](int c, long lo, long hi) {
        const auto& r = rows[static_cast<std::size_t>(c - 1)];
        if (r.lower.exact_value() != lo || r.upper.exact_value() != hi)
            o.fail("c=" + std::to_string(c) + " gives [" + r.lower.exact_string() + ", " + r.upper.exact_string() + "]");
        if (verify_bounds(r.cls, r.index).verdict != Verdict::ExactMatch)
            o.fail("oracle disagrees at c=" + std::to_string(c));
    };
    check(1, 40, 96);
    check(2, 50, 104);
    const auto text = render_text(rows, orientation_notes(rows));
    for (const char* needle : {"note: c=1, n=10", "note: c=2, n=10", "UPPER bound 96", "UPPER bound 104"})
        if (text.find(needle) == std::string::npos)
            o.fail(std::string("report lacks '") + needle + "'");
    return o;
}

Outcome ac10_properties() {
    Outcome o;
    std::mt19937 rng(1234);
    auto random_sorted = [&](int n, int total) {
        std::vector<int> v(static_cast<std::size_t>(n), 0);
        for (int u = 0; u < total; ++u)
            ++v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
        std::sort(v.begin(), v.end(), std::greater<>());
        return v;
    };
    for (int t = 0; t < 10000; ++t) {
        const int n = std::uniform_int_distribution<int>(1, 8)(rng);
        const int total = std::uniform_int_distribution<int>(0, 14)(rng);
        const auto x = random_sorted(n, total), y = random_sorted(n, total), z = random_sorted(n, total);
        const std::span<const int> xs(x), ys(y), zs(z);
        if (compare(xs, xs) != Relation::Equal)
            o.fail("not reflexive");
        if (majorized_by(xs, ys) && majorized_by(ys, xs) && x != y)
            o.fail("not antisymmetric");
        if (majorized_by(xs, ys) && majorized_by(ys, zs) && !majorized_by(xs, zs))
            o.fail("not transitive");
    }
    int pairs = 0;
    while (pairs < 10000) {
        const int n = std::uniform_int_distribution<int>(3, 12)(rng);
        auto z = random_sorted(n, std::uniform_int_distribution<int>(2 * n, 4 * n)(rng));
        if (z.back() == 0)
            continue;
        auto y = z;
        if (!robin_hood(y, rng))
            continue;
        ++pairs;
        for (const auto& idx : {IndexSpec::general_zagreb(-1), IndexSpec::general_zagreb(2)})
            if (evaluate(idx, std::span<const int>(y)).exact_value() > evaluate(idx, std::span<const int>(z)).exact_value())
                o.fail("Schur order violated for " + idx.symbol());
    }
    for (int t = 0; t < 1000; ++t) {
        const auto inner = random_int_box(rng, 8, 8, 60);
        IntBox outer = inner;
        for (auto& v : outer.lower)
            v = std::max(0L, v - std::uniform_int_distribution<long>(0, 2)(rng));
        for (auto& v : outer.upper)
            v += std::uniform_int_distribution<long>(0, 2)(rng);
        std::sort(outer.lower.begin(), outer.lower.end(), std::greater<>());
        std::sort(outer.upper.begin(), outer.upper.end(), std::greater<>());
        const BoxSet S = inner.box(), T = outer.box();
        if (!majorized_by(maximal_box(S), maximal_box(T)) || !majorized_by(minimal_box(T), minimal_box(S)))
            o.fail("inclusion monotonicity violated");
    }
    return o;
}

struct Criterion {
    const char* id;
    const char* title;
    double limit_seconds; // 0: no limit
    std::function<Outcome()> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"AC1", "extremal families match the closed-form sequences, c+2 <= n <= 12", 1.0, ac1_families},
        {"AC2", "small-order exceptional families", 0, ac2_small_orders},
        {"AC3", "inverse-degree closed forms equal engine bounds, n <= 50", 0, ac3_closed_forms},
        {"AC4", "refined bound identity, n <= 50", 0, ac4_refined_identity},
        {"AC5", "oracle sharpness for alpha in {-1,2,3} and ln PI1, n <= 9", 30.0, ac5_oracle_sharpness},
        {"AC6", "prefix and counting characterizations agree, n <= 12", 0, ac6_equivalence},
        {"AC7", "majorization extremality against enumeration, n <= 10", 0, ac7_extremality},
        {"AC8", "realizations of extremal sequences, n <= 12", 0, ac8_realization},
        {"AC9", "low-cyclomatic orientation finding at alpha = 2, n = 10", 0, ac9_orientation},
        {"AC10", "order, Schur and inclusion properties on random samples", 0, ac10_properties},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && secs >= c.limit_seconds)
            o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s");
        failures += !o.pass;
        std::printf("[%s] %-4s %s (%.3f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs,
                    o.detail.empty() ? "" : ": ", o.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
