#pragma once

// Exhaustive checks of the characterizations, the extremal families and the
// parametric patterns against brute-force enumeration.

#include "majext/degree_sequences.hpp"
#include "majext/majorization.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace majext {

/// Extremes of an explicit list under majorization.
struct OracleExtremes {
    std::vector<DegreeSequence> maximals; ///< not majorized by any other member
    std::vector<DegreeSequence> minima;   ///< majorized by every member (at most one)
};

inline OracleExtremes oracle_extremes(const std::vector<DegreeSequence>& seqs) {
    OracleExtremes out;
    for (const auto& s : seqs) {
        bool dominated = false;
        bool below_all = true;
        for (const auto& t : seqs) {
            if (t == s)
                continue;
            const Relation r = compare(s, t);
            if (r == Relation::LessOrEqual)
                dominated = true;
            if (r != Relation::LessOrEqual)
                below_all = false;
        }
        if (!dominated)
            out.maximals.push_back(s);
        if (below_all)
            out.minima.push_back(s);
    }
    return out;
}

struct EquivalenceResult {
    int n = 0;
    int c = 0;
    std::size_t candidates = 0;
    std::size_t accepted = 0;
    std::vector<DegreeSequence> counterexamples; ///< schocker_check != ccyclic_check
    std::vector<DegreeSequence> not_graphical;   ///< accepted but failing Erdős–Gallai
    bool ok() const { return counterexamples.empty() && not_graphical.empty(); }
};

/// Compares both characterizations on every candidate of order n (throws ResourceLimit past cap).
inline EquivalenceResult check_equivalence(int n, int c, int cap = kDefaultEnumerationCap) {
    EquivalenceResult out{n, c, 0, 0, {}, {}};
    const CyclomaticClass cls{n, c};
    for (const auto& seq : enumerate_candidates(n, c, cap)) {
        ++out.candidates;
        const bool by_prefix = schocker_check(seq, cls);
        const bool by_count = ccyclic_check(seq, cls);
        if (by_prefix != by_count)
            out.counterexamples.push_back(seq);
        if (by_count) {
            ++out.accepted;
            if (!erdos_gallai(seq))
                out.not_graphical.push_back(seq);
        }
    }
    return out;
}

struct ExtremalityResult {
    CyclomaticClass cls;
    std::size_t sequences = 0;
    std::vector<DegreeSequence> uncovered;    ///< not below any family maximal
    std::vector<DegreeSequence> below_minimal; ///< not above the family minimal
    bool maximals_incomparable = true;
    bool matches_oracle = true; ///< family maximals/minimal equal the brute-force extremes
    bool ok() const {
        return uncovered.empty() && below_minimal.empty() && maximals_incomparable && matches_oracle;
    }
};

inline ExtremalityResult check_extremality(const CyclomaticClass& cls, int cap = kDefaultEnumerationCap) {
    ExtremalityResult out;
    out.cls = cls;
    const auto fam = extremal_family(cls);
    const auto all = enumerate_sequences(cls, cap);
    out.sequences = all.size();
    for (const auto& s : all) {
        const bool covered = std::any_of(fam.maximals.begin(), fam.maximals.end(),
                                         [&](const DegreeSequence& m) { return majorized_by(s, m); });
        if (!covered)
            out.uncovered.push_back(s);
        if (!majorized_by(fam.minimal, s))
            out.below_minimal.push_back(s);
    }
    for (std::size_t i = 0; i < fam.maximals.size(); ++i)
        for (std::size_t j = i + 1; j < fam.maximals.size(); ++j)
            if (compare(fam.maximals[i], fam.maximals[j]) != Relation::Incomparable)
                out.maximals_incomparable = false;

    auto oracle = oracle_extremes(all);
    auto mine = fam.maximals;
    std::sort(mine.begin(), mine.end());
    std::sort(oracle.maximals.begin(), oracle.maximals.end());
    out.matches_oracle = mine == oracle.maximals && oracle.minima.size() == 1 &&
                         oracle.minima.front() == fam.minimal;
    return out;
}

/// Whether the parametric patterns are extremal among connected graphs with n + c - 1 edges.
struct ConjectureResult {
    int n = 0;
    int c = 0;
    std::size_t sequences = 0;
    PatternSet patterns;
    OracleExtremes oracle;
    std::vector<bool> pattern_is_maximal;
    std::vector<bool> patterns_pairwise_incomparable;
    std::optional<bool> minimal_matches; ///< empty when the minimal pattern does not apply
    std::vector<DegreeSequence> unmatched_maximals; ///< enumerated maximals that are not patterns
    /// Patterns are maximal, pairwise incomparable, and the minimal pattern (if any) is the minimum.
    bool holds() const {
        bool ok = std::all_of(pattern_is_maximal.begin(), pattern_is_maximal.end(), [](bool b) { return b; }) &&
                  std::all_of(patterns_pairwise_incomparable.begin(), patterns_pairwise_incomparable.end(),
                              [](bool b) { return b; });
        return ok && minimal_matches.value_or(true);
    }
};

inline ConjectureResult conjecture_check(int n, int c, int cap) {
    ConjectureResult out;
    out.n = n;
    out.c = c;
    out.patterns = parametric_patterns(n, c);
    const auto all = enumerate_connected_graphical(n, c, cap);
    out.sequences = all.size();
    out.oracle = oracle_extremes(all);
    for (const auto& p : out.patterns.maximals)
        out.pattern_is_maximal.push_back(
            std::find(out.oracle.maximals.begin(), out.oracle.maximals.end(), p) != out.oracle.maximals.end());
    const auto& pm = out.patterns.maximals;
    for (std::size_t i = 0; i < pm.size(); ++i)
        for (std::size_t j = i + 1; j < pm.size(); ++j)
            out.patterns_pairwise_incomparable.push_back(compare(pm[i], pm[j]) == Relation::Incomparable);
    for (const auto& m : out.oracle.maximals)
        if (std::find(pm.begin(), pm.end(), m) == pm.end())
            out.unmatched_maximals.push_back(m);
    if (out.patterns.minimal)
        out.minimal_matches = out.oracle.minima.size() == 1 && out.oracle.minima.front() == *out.patterns.minimal;
    return out;
}

} // namespace majext
