#pragma once

#include "majext/degree_sequences.hpp"
#include "majext/errors.hpp"
#include "majext/indices.hpp"
#include "majext/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace majext {

enum class Verdict { ExactMatch, Mismatch, Skipped };

inline const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::ExactMatch: return "exact-match";
    case Verdict::Mismatch: return "mismatch";
    case Verdict::Skipped: return "skipped";
    }
    return "?";
}

/// Index value at one maximal sequence; binding marks the one that sets the bound.
struct Candidate {
    DegreeSequence seq;
    IndexValue value;
    bool binding = false;
};

/// Bounds of an index over a class, with the sequences that attain them.
struct BoundsReport {
    CyclomaticClass cls;
    IndexSpec index = IndexSpec::inverse_degree();
    IndexValue lower;
    IndexValue upper;
    DegreeSequence lower_attainer;
    DegreeSequence upper_attainer;
    std::vector<Candidate> candidates;
    std::optional<Verdict> verified;
    std::optional<IndexValue> refined_upper;
};

/**
 * Lower and upper bound of the index over the class. A Schur-convex index is
 * smallest at the minimal sequence and largest at one of the maximal
 * sequences; a Schur-concave index the other way round. Among equal
 * candidate values the lexicographically largest sequence is reported.
 */
inline BoundsReport bounds(const CyclomaticClass& cls, const IndexSpec& index) {
    const auto fam = extremal_family(cls);
    const SchurClass orientation = schur_class(index);

    BoundsReport r;
    r.cls = fam.cls;
    r.index = index;

    std::size_t best = 0;
    for (std::size_t i = 0; i < fam.maximals.size(); ++i) {
        r.candidates.push_back(Candidate{fam.maximals[i], evaluate(index, fam.maximals[i]), false});
        if (i == 0)
            continue;
        const int cmp = compare_values(r.candidates[i].value, r.candidates[best].value);
        const bool better = orientation == SchurClass::Convex ? cmp > 0 : cmp < 0;
        if (better || (cmp == 0 && r.candidates[best].seq < r.candidates[i].seq))
            best = i;
    }
    r.candidates[best].binding = true;

    const IndexValue at_minimal = evaluate(index, fam.minimal);
    if (orientation == SchurClass::Convex) {
        r.lower = at_minimal;
        r.lower_attainer = fam.minimal;
        r.upper = r.candidates[best].value;
        r.upper_attainer = r.candidates[best].seq;
    } else {
        r.lower = r.candidates[best].value;
        r.lower_attainer = r.candidates[best].seq;
        r.upper = at_minimal;
        r.upper_attainer = fam.minimal;
    }
    return r;
}

namespace detail {

inline void require_regular_regime(const CyclomaticClass& cls, const char* what) {
    if (cls.c < 0 || cls.c > kMaxCyclomatic || cls.n < cls.c + 2)
        throw DomainError(std::string(what) + ": needs 0 <= c <= 6 and n >= c + 2");
}

inline Rational q(long num, long den = 1) { return Rational(num) / Rational(den); }

} // namespace detail

/**
 * Inverse-degree bounds written in closed form in n for each c. The lower
 * bound for c = 5 (n = 7) and c = 6 (n = 8, 9) uses the order-specific
 * minimal sequences; elsewhere it is linear in n.
 */
inline BoundsReport closed_form_inverse_degree(const CyclomaticClass& cls) {
    detail::require_regular_regime(cls, "closed_form_inverse_degree");
    using detail::q;
    using detail::runs;
    const long n = cls.n;
    const Rational tail = q(1, n - 1); // 1/(n-1), the hub of every maximal sequence

    Rational lower, upper;
    std::vector<int> low_seq, high_seq;
    const int ni = cls.n;
    switch (cls.c) {
    case 0:
        lower = q(n + 2, 2);
        upper = q(n - 1) + tail;
        low_seq = runs({{2, ni - 2}, {1, 2}});
        high_seq = runs({{ni - 1, 1}, {1, ni - 1}});
        break;
    case 1:
        lower = q(n, 2);
        upper = q(n - 2) + tail;
        low_seq = runs({{2, ni}});
        high_seq = runs({{ni - 1, 1}, {2, 2}, {1, ni - 3}});
        break;
    case 2:
        lower = q(n - 2, 2) + q(2, 3);
        upper = q(n - 3) + tail + q(1, 3);
        low_seq = runs({{3, 2}, {2, ni - 2}});
        high_seq = runs({{ni - 1, 1}, {3, 1}, {2, 2}, {1, ni - 4}});
        break;
    case 3:
        lower = q(n - 4, 2) + q(4, 3);
        upper = q(n - 3) + tail;
        low_seq = runs({{3, 4}, {2, ni - 4}});
        high_seq = runs({{ni - 1, 1}, {3, 3}, {1, ni - 4}});
        break;
    case 4:
        lower = q(n - 2, 2);
        upper = q(n - 5) + tail + q(17, 12);
        low_seq = runs({{3, 6}, {2, ni - 6}});
        high_seq = runs({{ni - 1, 1}, {4, 1}, {3, 2}, {2, 1}, {1, ni - 5}});
        break;
    case 5:
        if (n == 7) {
            lower = q(1, 4) + q(6, 3);
            low_seq = runs({{4, 1}, {3, 6}});
        } else {
            lower = q(n - 8, 2) + q(8, 3);
            low_seq = runs({{3, 8}, {2, ni - 8}});
        }
        upper = q(n - 5) + tail + q(7, 6);
        high_seq = runs({{ni - 1, 1}, {4, 2}, {3, 2}, {1, ni - 5}});
        break;
    case 6:
        if (n == 8) {
            lower = q(2, 4) + q(6, 3);
            low_seq = runs({{4, 2}, {3, 6}});
        } else if (n == 9) {
            lower = q(1, 4) + q(8, 3);
            low_seq = runs({{4, 1}, {3, 8}});
        } else {
            lower = q(n - 10, 2) + q(10, 3);
            low_seq = runs({{3, 10}, {2, ni - 10}});
        }
        upper = q(n - 4) + tail;
        high_seq = runs({{ni - 1, 1}, {4, 4}, {1, ni - 5}});
        break;
    default: throw DomainError("closed_form_inverse_degree: c outside [0, 6]");
    }

    BoundsReport r;
    r.cls = cls;
    r.index = IndexSpec::inverse_degree();
    r.lower = IndexValue::exact(std::move(lower));
    r.upper = IndexValue::exact(std::move(upper));
    r.lower_attainer = DegreeSequence(std::move(low_seq));
    r.upper_attainer = DegreeSequence(std::move(high_seq));
    return r;
}

/**
 * Inverse-degree upper bound when d_{c+2} >= 2 is known (c >= 3):
 * (n - c) + 1/(n-1) + (c^2 - 3c - 2) / (2(c+1)), the value at
 * [(n-1), c+1, 2^c, 1^{n-c-2}].
 */
inline IndexValue refined_upper_bound(const CyclomaticClass& cls) {
    if (cls.c < 3)
        throw DomainError("refined_upper_bound: needs c >= 3");
    if (cls.n < cls.c + 2)
        throw DomainError("refined_upper_bound: needs n >= c + 2");
    const DegreeSequence attainer(
        detail::runs({{cls.n - 1, 1}, {cls.c + 1, 1}, {2, cls.c}, {1, cls.n - cls.c - 2}}));
    return evaluate(IndexSpec::inverse_degree(), attainer);
}

/// Brute-force extremes of an index over the whole class.
struct OracleVerdict {
    Verdict verdict = Verdict::Skipped;
    IndexValue oracle_min;
    IndexValue oracle_max;
    std::vector<DegreeSequence> argmin;
    std::vector<DegreeSequence> argmax;
    std::size_t sequences = 0;
    std::string detail;
};

/// Enumerates the class and compares its exact extremes with bounds(). Never throws on the cap.
inline OracleVerdict verify_bounds(const CyclomaticClass& cls, const IndexSpec& index,
                                   int cap = kDefaultEnumerationCap) {
    OracleVerdict out;
    if (cls.n > cap) {
        out.detail = "n=" + std::to_string(cls.n) + " exceeds the enumeration cap " + std::to_string(cap);
        return out;
    }
    const auto report = bounds(cls, index);
    const auto all = enumerate_sequences(cls, cap);
    out.sequences = all.size();
    if (all.empty()) {
        out.verdict = Verdict::Mismatch;
        out.detail = "class is empty";
        return out;
    }
    std::vector<IndexValue> values;
    values.reserve(all.size());
    for (const auto& s : all)
        values.push_back(evaluate(index, s));
    out.oracle_min = values.front();
    out.oracle_max = values.front();
    for (const auto& v : values) {
        if (compare_values(v, out.oracle_min) < 0)
            out.oracle_min = v;
        if (compare_values(v, out.oracle_max) > 0)
            out.oracle_max = v;
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (same_value(values[i], out.oracle_min))
            out.argmin.push_back(all[i]);
        if (same_value(values[i], out.oracle_max))
            out.argmax.push_back(all[i]);
    }
    auto contains = [](const std::vector<DegreeSequence>& v, const DegreeSequence& s) {
        return std::find(v.begin(), v.end(), s) != v.end();
    };
    const bool ok = same_value(out.oracle_min, report.lower) && same_value(out.oracle_max, report.upper) &&
                    contains(out.argmin, report.lower_attainer) &&
                    contains(out.argmax, report.upper_attainer);
    out.verdict = ok ? Verdict::ExactMatch : Verdict::Mismatch;
    if (!ok)
        out.detail = "oracle [" + out.oracle_min.decimal_string() + ", " + out.oracle_max.decimal_string() +
                     "] vs engine [" + report.lower.decimal_string() + ", " +
                     report.upper.decimal_string() + "]";
    return out;
}

/// One report per c = 1..6 for M1^alpha (alpha < 0 or alpha > 1) at order n >= 8.
inline std::vector<BoundsReport> zagreb_bounds_table(int n, const Rational& alpha) {
    if (!(alpha < 0 || alpha > 1))
        throw DomainError("zagreb_bounds_table: alpha must satisfy alpha < 0 or alpha > 1");
    if (n < kMaxCyclomatic + 2)
        throw DomainError("zagreb_bounds_table: every row needs n >= c + 2, so n >= 8");
    std::vector<BoundsReport> rows;
    for (int c = 1; c <= kMaxCyclomatic; ++c)
        rows.push_back(bounds(CyclomaticClass::make(n, c), IndexSpec::general_zagreb(alpha)));
    return rows;
}

/**
 * Orientation notes for convex-index rows with c = 1 or c = 2: there the
 * maximal-sequence value is the upper bound, which some published tables list
 * in the lower-bound column.
 */
inline std::vector<std::string> orientation_notes(const std::vector<BoundsReport>& reports) {
    std::vector<std::string> notes;
    for (const auto& r : reports) {
        if ((r.cls.c != 1 && r.cls.c != 2) || schur_class(r.index) != SchurClass::Convex)
            continue;
        notes.push_back(
            "c=" + std::to_string(r.cls.c) + ", n=" + std::to_string(r.cls.n) + ", " + r.index.symbol() +
            ": the maximal sequence " + format_compact(r.upper_attainer) + " gives the UPPER bound " +
            r.upper.decimal_string() + " and the minimal sequence " + format_compact(r.lower_attainer) +
            " the LOWER bound " + r.lower.decimal_string() +
            " (Schur-convex orientation); a table that prints the maximal-sequence "
            "expression under 'Lower bounds' for this row has the columns inverted.");
    }
    return notes;
}

} // namespace majext
