#pragma once

#include "majext/errors.hpp"
#include "majext/extremal_solver.hpp"
#include "majext/majorization.hpp"
#include "majext/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace majext {

/**
 * Degree sequence of a simple graph on n >= 2 vertices: nonincreasing, every
 * entry in [1, n-1]. A default-constructed sequence is empty and only serves
 * as a placeholder.
 */
class DegreeSequence {
public:
    DegreeSequence() = default;

    explicit DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
        const auto n = static_cast<int>(degrees_.size());
        if (n < 2)
            throw DomainError("DegreeSequence: need at least two vertices");
        for (int i = 0; i < n; ++i) {
            if (degrees_[i] < 1 || degrees_[i] > n - 1)
                throw DomainError("DegreeSequence: degree " + std::to_string(degrees_[i]) +
                                  " outside [1, " + std::to_string(n - 1) + "]");
            if (i + 1 < n && degrees_[i] < degrees_[i + 1])
                throw DomainError("DegreeSequence: not nonincreasing at index " + std::to_string(i));
        }
    }

    DegreeSequence(std::initializer_list<int> degrees)
        : DegreeSequence(std::vector<int>(degrees)) {}

    int n() const noexcept { return static_cast<int>(degrees_.size()); }
    bool empty() const noexcept { return degrees_.empty(); }
    std::span<const int> values() const noexcept { return degrees_; }
    const std::vector<int>& degrees() const noexcept { return degrees_; }
    int operator[](std::size_t i) const { return degrees_[i]; }
    auto begin() const noexcept { return degrees_.begin(); }
    auto end() const noexcept { return degrees_.end(); }

    int sum() const {
        int total = 0;
        for (int d : degrees_)
            total += d;
        return total;
    }

    /// Number of entries >= t.
    int count_at_least(int t) const {
        return static_cast<int>(std::count_if(degrees_.begin(), degrees_.end(),
                                              [t](int d) { return d >= t; }));
    }

    /// d_1 + ... + d_k, with d_i = 0 past the end.
    int prefix(int k) const {
        int total = 0;
        for (int i = 0; i < k && i < n(); ++i)
            total += degrees_[i];
        return total;
    }

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
    friend auto operator<=>(const DegreeSequence& a, const DegreeSequence& b) {
        return a.degrees_ <=> b.degrees_;
    }

private:
    std::vector<int> degrees_;
};

inline Relation compare(const DegreeSequence& y, const DegreeSequence& z) {
    return compare(y.values(), z.values());
}

inline bool majorized_by(const DegreeSequence& y, const DegreeSequence& z) {
    return majorized_by(y.values(), z.values());
}

inline std::string format_plain(const DegreeSequence& s) { return format_plain(s.values()); }
inline std::string format_compact(const DegreeSequence& s) { return format_compact(s.values()); }

inline constexpr int kMaxCyclomatic = 6;
inline constexpr int kDefaultEnumerationCap = 12;

/// Smallest order of a connected simple graph with cyclomatic number c (0 <= c <= 6).
inline int min_order(int c) {
    static constexpr int table[] = {2, 3, 4, 4, 5, 5, 5};
    if (c < 0 || c > kMaxCyclomatic)
        throw DomainError("cyclomatic number " + std::to_string(c) + " outside [0, 6]");
    return table[c];
}

/// Connected graphs of order n with m = n + c - 1 edges.
struct CyclomaticClass {
    int n = 0;
    int c = 0;

    static CyclomaticClass make(int n, int c) {
        if (n < min_order(c))
            throw DomainError("order n=" + std::to_string(n) + " below the minimum " +
                              std::to_string(min_order(c)) + " for c=" + std::to_string(c));
        return CyclomaticClass{n, c};
    }

    /// Degree sum 2(n + c - 1).
    int degree_sum() const noexcept { return 2 * (n + c - 1); }

    friend bool operator==(const CyclomaticClass&, const CyclomaticClass&) = default;
};

/**
 * Prefix-inequality characterization (Schocker). Besides the degree sum this
 * checks the edge-count threshold and the listed linear inequalities on the
 * largest degrees.
 */
inline bool schocker_check(const DegreeSequence& seq, const CyclomaticClass& cls) {
    const int n = seq.n();
    if (n != cls.n || seq.sum() % 2 != 0)
        return false;
    const int m = seq.sum() / 2;
    auto P = [&](int k) { return seq.prefix(k); };
    auto d = [&](int i) { return i <= n ? seq[static_cast<std::size_t>(i - 1)] : 0; };
    switch (cls.c) {
    case 0: return m >= 1 && n == m + 1;
    case 1: return m >= 3 && n == m && P(2) <= n + 1;
    case 2: return m >= 5 && n == m - 1 && P(2) <= n + 2 && P(3) <= n + 4;
    case 3: return m >= 6 && n == m - 2 && P(2) <= n + 3 && P(3) <= n + 5;
    case 4:
        return m >= 8 && n == m - 3 && P(2) <= n + 4 && P(3) <= n + 6 && P(4) <= n + 9;
    case 5:
        return m >= 9 && n == m - 4 && P(2) <= n + 5 && P(3) <= n + 7 && P(4) <= n + 10 &&
               2 * P(2) + d(3) + d(4) + d(5) <= 2 * n + 16;
    case 6:
        return m >= 10 && n == m - 5 && P(2) <= n + 6 && P(3) <= n + 8 && P(4) <= n + 11 &&
               2 * P(2) + d(3) + d(4) + d(5) <= 2 * n + 18 &&
               2 * P(2) + d(3) + d(4) + d(5) + d(6) <= 2 * n + 20;
    default: return false;
    }
}

/**
 * Counting characterization: the degree sum is 2(n + c - 1) and one of the
 * "at least k entries >= t" conditions holds, each with its own order gate.
 */
inline bool ccyclic_check(const DegreeSequence& seq, const CyclomaticClass& cls) {
    const int n = seq.n();
    if (n != cls.n || seq.sum() != cls.degree_sum())
        return false;
    auto at_least = [&](int count, int t) { return seq.count_at_least(t) >= count; };
    switch (cls.c) {
    case 0: return n >= 2;
    case 1: return n >= 3 && at_least(3, 2);
    case 2: return n >= 4 && at_least(4, 2);
    case 3: return n >= 4 && ((n >= 5 && at_least(5, 2)) || at_least(4, 3));
    case 4: return n >= 5 && ((n >= 6 && at_least(6, 2)) || (at_least(4, 3) && at_least(5, 2)));
    case 5:
        return n >= 5 && ((n >= 7 && at_least(7, 2)) ||
                          (n >= 6 && at_least(6, 2) && at_least(4, 3)) ||
                          (at_least(5, 3) && at_least(3, 4)));
    case 6:
        return n >= 5 && ((n >= 8 && at_least(8, 2)) ||
                          (n >= 7 && at_least(7, 2) && at_least(4, 3)) ||
                          (n >= 6 && at_least(6, 2) && at_least(5, 3) && at_least(3, 4)) ||
                          (n >= 6 && at_least(6, 3)) || at_least(5, 4));
    default: return false;
    }
}

/// Erdős–Gallai graphicality test. Entries are sorted internally; negatives are rejected.
inline bool erdos_gallai(std::span<const int> degrees) {
    std::vector<int> d(degrees.begin(), degrees.end());
    std::sort(d.begin(), d.end(), std::greater<>());
    long total = 0;
    for (int x : d) {
        if (x < 0)
            return false;
        total += x;
    }
    if (total % 2 != 0)
        return false;
    const auto n = static_cast<long>(d.size());
    long lhs = 0;
    for (long k = 1; k <= n; ++k) {
        lhs += d[static_cast<std::size_t>(k - 1)];
        long rhs = k * (k - 1);
        for (long i = k; i < n; ++i)
            rhs += std::min<long>(d[static_cast<std::size_t>(i)], k);
        if (lhs > rhs)
            return false;
    }
    return true;
}

inline bool erdos_gallai(const DegreeSequence& seq) { return erdos_gallai(seq.values()); }

/**
 * Visits every nonincreasing sequence of n parts in [1, max_part] summing to
 * total, in lexicographically descending order.
 */
template <typename Visitor>
void for_each_partition(int n, int total, int max_part, Visitor&& visit) {
    std::vector<int> parts(static_cast<std::size_t>(std::max(n, 0)));
    std::function<void(int, int, int)> rec = [&](int slot, int remaining, int cap) {
        const int slots_left = n - slot;
        if (slots_left == 0) {
            if (remaining == 0)
                visit(std::as_const(parts));
            return;
        }
        const int hi = std::min(cap, remaining - (slots_left - 1));
        for (int v = hi; v >= 1; --v) {
            if (static_cast<long>(v) * slots_left < remaining)
                break;
            parts[static_cast<std::size_t>(slot)] = v;
            rec(slot + 1, remaining - v, v);
        }
    };
    if (n > 0)
        rec(0, total, max_part);
}

inline void check_cap(int n, int cap) {
    if (n > cap)
        throw ResourceLimit("enumeration at n=" + std::to_string(n) + " exceeds the cap " +
                            std::to_string(cap));
}

/// All nonincreasing positive sequences with d_1 <= n - 1 and degree sum 2(n + c - 1).
inline std::vector<DegreeSequence> enumerate_candidates(int n, int c,
                                                        int cap = kDefaultEnumerationCap) {
    check_cap(n, cap);
    std::vector<DegreeSequence> out;
    if (n < 2 || c < 0)
        return out;
    for_each_partition(n, 2 * (n + c - 1), n - 1,
                       [&](const std::vector<int>& p) { out.emplace_back(p); });
    return out;
}

/// Degree sequences of connected c-cyclic graphs, lexicographically descending.
inline std::vector<DegreeSequence> enumerate_sequences(const CyclomaticClass& cls,
                                                       int cap = kDefaultEnumerationCap) {
    std::vector<DegreeSequence> out;
    for (auto& seq : enumerate_candidates(cls.n, cls.c, cap))
        if (ccyclic_check(seq, cls))
            out.push_back(std::move(seq));
    return out;
}

/**
 * Degree sequences of connected graphs with n vertices and n + c - 1 edges for
 * any c >= 0: graphical with every degree >= 1 (the degree sum is then at
 * least 2(n - 1), so a connected realization exists).
 */
inline std::vector<DegreeSequence> enumerate_connected_graphical(int n, int c, int cap) {
    std::vector<DegreeSequence> out;
    for (auto& seq : enumerate_candidates(n, c, cap))
        if (erdos_gallai(seq))
            out.push_back(std::move(seq));
    return out;
}

/// One constraint set S_c^j: its label and its box in the degree-sum slice.
struct ClassSet {
    std::string label;
    BoxSet box;
};

namespace detail {

struct CountCondition {
    int count;
    int threshold;
};

struct SetRule {
    int min_n;
    std::vector<CountCondition> conditions;
};

inline const std::vector<SetRule>& set_rules(int c) {
    static const std::vector<std::vector<SetRule>> rules = {
        {{2, {}}},
        {{3, {{3, 2}}}},
        {{4, {{4, 2}}}},
        {{5, {{5, 2}}}, {4, {{4, 3}}}},
        {{6, {{6, 2}}}, {5, {{4, 3}, {5, 2}}}},
        {{7, {{7, 2}}}, {6, {{6, 2}, {4, 3}}}, {5, {{5, 3}, {3, 4}}}},
        {{8, {{8, 2}}},
         {7, {{7, 2}, {4, 3}}},
         {6, {{6, 2}, {5, 3}, {3, 4}}},
         {6, {{6, 3}}},
         {5, {{5, 4}}}},
    };
    return rules.at(static_cast<std::size_t>(c));
}

} // namespace detail

/**
 * The boxes whose integer points are exactly the class's degree sequences:
 * one per counting condition that applies at this order. Lower bounds come
 * from the condition (first k entries >= t), upper bounds are n - 1.
 */
inline std::vector<ClassSet> class_sets(const CyclomaticClass& cls) {
    const auto& rules = detail::set_rules(cls.c);
    std::vector<ClassSet> out;
    for (std::size_t j = 0; j < rules.size(); ++j) {
        if (cls.n < rules[j].min_n)
            continue;
        std::vector<Rational> lower(static_cast<std::size_t>(cls.n), Rational(1));
        for (const auto& cond : rules[j].conditions)
            for (int i = 0; i < cond.count; ++i)
                if (lower[static_cast<std::size_t>(i)] < cond.threshold)
                    lower[static_cast<std::size_t>(i)] = cond.threshold;
        std::vector<Rational> upper(static_cast<std::size_t>(cls.n), Rational(cls.n - 1));
        std::string label = "S_" + std::to_string(cls.c);
        if (rules.size() > 1)
            label += "^" + std::to_string(j + 1);
        out.push_back(ClassSet{std::move(label),
                               BoxSet{Rational(cls.degree_sum()), RationalVector(std::move(lower)),
                                      RationalVector(std::move(upper))}});
    }
    return out;
}

/// True iff seq is an integer point of some class set.
inline bool in_class_sets(const DegreeSequence& seq, const CyclomaticClass& cls) {
    if (seq.n() != cls.n || seq.sum() != cls.degree_sum())
        return false;
    for (const auto& set : class_sets(cls)) {
        bool inside = true;
        for (int i = 0; i < cls.n && inside; ++i) {
            const Rational di(seq[static_cast<std::size_t>(i)]);
            inside = set.box.lower[static_cast<std::size_t>(i)] <= di &&
                     di <= set.box.upper[static_cast<std::size_t>(i)];
        }
        if (inside)
            return true;
    }
    return false;
}

inline DegreeSequence to_degree_sequence(const RationalVector& v) {
    std::vector<int> out;
    out.reserve(v.size());
    for (const auto& x : v) {
        if (!is_integer(x))
            throw std::logic_error("to_degree_sequence: fractional component " + to_exact_string(x));
        out.push_back(boost::multiprecision::numerator(x).convert_to<int>());
    }
    return DegreeSequence(std::move(out));
}

/// Extremal elements of a single class set.
struct SetExtremes {
    std::string label;
    DegreeSequence maximal;
    DegreeSequence minimal;
};

/// Majorization-extremal degree sequences of a class.
struct ExtremalFamily {
    CyclomaticClass cls;
    std::vector<DegreeSequence> maximals; ///< pairwise incomparable
    DegreeSequence minimal;
    std::vector<SetExtremes> per_set;
    bool tabulated = false; ///< small-order case served from the fixed table
};

/// Keeps the candidates not majorized by a different candidate; order and first occurrence kept.
inline std::vector<DegreeSequence> undominated(const std::vector<DegreeSequence>& candidates) {
    std::vector<DegreeSequence> out;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < candidates.size() && keep; ++j) {
            if (candidates[j] == candidates[i])
                keep = j >= i; // drop later duplicates
            else if (majorized_by(candidates[i], candidates[j]))
                keep = false;
        }
        if (keep)
            out.push_back(candidates[i]);
    }
    return out;
}

/// Extremal family obtained by solving every class set and merging the results.
inline ExtremalFamily derive_family(const CyclomaticClass& cls) {
    ExtremalFamily fam{cls, {}, {}, {}, false};
    std::vector<DegreeSequence> maxima, minima;
    for (const auto& set : class_sets(cls)) {
        const auto hi = to_degree_sequence(maximal_box(set.box));
        const auto lo = to_degree_sequence(integerize_minimal(minimal_box(set.box), set.box));
        fam.per_set.push_back(SetExtremes{set.label, hi, lo});
        maxima.push_back(hi);
        minima.push_back(lo);
    }
    fam.maximals = undominated(maxima);
    for (const auto& candidate : minima) {
        if (std::all_of(minima.begin(), minima.end(),
                        [&](const DegreeSequence& other) { return majorized_by(candidate, other); })) {
            fam.minimal = candidate;
            break;
        }
    }
    if (fam.minimal.empty())
        throw std::logic_error("derive_family: set minima have no common lower element");
    return fam;
}

namespace detail {

struct TabulatedFamily {
    int n, c;
    std::vector<std::vector<int>> maximals;
    std::vector<int> minimal;
};

inline const std::vector<TabulatedFamily>& small_order_table() {
    static const std::vector<TabulatedFamily> table = {
        {4, 3, {{3, 3, 3, 3}}, {3, 3, 3, 3}},
        {5, 4, {{4, 4, 3, 3, 2}}, {4, 3, 3, 3, 3}},
        {5, 5, {{4, 4, 4, 3, 3}}, {4, 4, 4, 3, 3}},
        {6, 5, {{5, 5, 3, 3, 2, 2}, {5, 4, 4, 3, 3, 1}}, {4, 4, 3, 3, 3, 3}},
        {5, 6, {{4, 4, 4, 4, 4}}, {4, 4, 4, 4, 4}},
        {6, 6, {{5, 5, 4, 3, 3, 2}, {5, 4, 4, 4, 4, 1}}, {4, 4, 4, 4, 3, 3}},
        {7, 6, {{6, 6, 3, 3, 2, 2, 2}, {6, 5, 4, 3, 3, 2, 1}, {6, 4, 4, 4, 4, 1, 1}},
         {4, 4, 4, 3, 3, 3, 3}},
    };
    return table;
}

} // namespace detail

/// True for the orders below c + 2 whose extremal sequences are tabulated.
inline bool is_small_order_case(const CyclomaticClass& cls) {
    const auto& table = detail::small_order_table();
    return std::any_of(table.begin(), table.end(),
                       [&](const auto& row) { return row.n == cls.n && row.c == cls.c; });
}

/// Extremal family of a class; small-order exceptions come from a fixed table.
inline ExtremalFamily extremal_family(const CyclomaticClass& cls) {
    const auto valid = CyclomaticClass::make(cls.n, cls.c);
    ExtremalFamily fam = derive_family(valid);
    for (const auto& row : detail::small_order_table()) {
        if (row.n != cls.n || row.c != cls.c)
            continue;
        fam.maximals.clear();
        for (const auto& m : row.maximals)
            fam.maximals.emplace_back(m);
        fam.minimal = DegreeSequence(row.minimal);
        fam.tabulated = true;
    }
    return fam;
}

/// Parametric extremal candidates in c; usable for any c >= 0 (c > 6 is conjecture territory).
struct PatternSet {
    int n = 0;
    int c = 0;
    std::vector<DegreeSequence> maximals;
    std::optional<DegreeSequence> minimal;
};

namespace detail {

inline std::vector<int> runs(std::initializer_list<std::pair<int, int>> blocks) {
    std::vector<int> out;
    for (auto [value, count] : blocks)
        out.insert(out.end(), static_cast<std::size_t>(std::max(count, 0)), value);
    return out;
}

} // namespace detail

/**
 * Sequences expressed in c:
 *   [(n-1), c+1, 2^c, 1^{n-c-2}]                     every c
 *   [(n-1), c, 3^2, 2^{c-3}, 1^{n-c-1}]              c >= 3
 *   [(n-1), c-1, 4, 3^2, 2^{c-5}, 1^{n-c}]           c >= 5
 *   minimal [3^{2c-2}, 2^{n-2c+2}]                   c >= 1, 2c - 2 <= n
 * Every pattern requires n >= c + 2; patterns that do not apply are omitted.
 */
inline PatternSet parametric_patterns(int n, int c) {
    if (c < 0)
        throw DomainError("parametric_patterns: negative cyclomatic number");
    PatternSet out{n, c, {}, std::nullopt};
    if (n < c + 2 || n < 2)
        return out;
    using detail::runs;
    out.maximals.emplace_back(runs({{n - 1, 1}, {c + 1, 1}, {2, c}, {1, n - c - 2}}));
    if (c >= 3)
        out.maximals.emplace_back(runs({{n - 1, 1}, {c, 1}, {3, 2}, {2, c - 3}, {1, n - c - 1}}));
    if (c >= 5)
        out.maximals.emplace_back(
            runs({{n - 1, 1}, {c - 1, 1}, {4, 1}, {3, 2}, {2, c - 5}, {1, n - c}}));
    if (c >= 1 && 2 * c - 2 <= n)
        out.minimal = DegreeSequence(runs({{3, 2 * c - 2}, {2, n - 2 * c + 2}}));
    return out;
}

} // namespace majext
