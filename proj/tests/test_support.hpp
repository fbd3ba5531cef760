#pragma once

// Independent reference implementations used as test oracles. None of these
// call into the library's solver or enumeration code.

#include "majext/majext.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <vector>

namespace testing_support {

using majext::Rational;
using majext::RationalVector;

inline RationalVector rv(std::initializer_list<long> values) {
    std::vector<Rational> out;
    for (long v : values)
        out.emplace_back(v);
    return RationalVector(std::move(out));
}

inline RationalVector rv(const std::vector<long>& values) {
    std::vector<Rational> out;
    for (long v : values)
        out.emplace_back(v);
    return RationalVector(std::move(out));
}

inline RationalVector rv_const(std::size_t n, const Rational& value) {
    return RationalVector(std::vector<Rational>(n, value));
}

/// [v1^c1, v2^c2, ...] as a plain vector.
inline std::vector<int> blocks(std::initializer_list<std::pair<int, int>> parts) {
    std::vector<int> out;
    for (auto [v, c] : parts)
        for (int i = 0; i < c; ++i)
            out.push_back(v);
    return out;
}

/// Prefix-sum dominance written out directly.
inline bool dominated(const std::vector<long>& y, const std::vector<long>& z) {
    long sy = 0, sz = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        sy += y[i];
        sz += z[i];
        if (sy > sz)
            return false;
    }
    return sy == sz;
}

/// Greedy maximal element: raise coordinates to their upper bound left to right.
inline std::vector<Rational> greedy_maximal(const majext::BoxSet& s) {
    std::vector<Rational> x(s.lower.begin(), s.lower.end());
    Rational left = s.a - s.lower.sum();
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Rational room = s.upper[i] - s.lower[i];
        const Rational add = left < room ? left : room;
        x[i] += add;
        left -= add;
    }
    return x;
}

/// Water-filling minimal element: clamp(lambda, m_i, M_i) with the level solved exactly.
inline std::vector<Rational> water_filling(const majext::BoxSet& s) {
    const std::size_t n = s.n();
    auto filled = [&](const Rational& level) {
        std::vector<Rational> x(n);
        for (std::size_t i = 0; i < n; ++i)
            x[i] = std::min(std::max(level, s.lower[i]), s.upper[i]);
        return x;
    };
    auto total = [&](const Rational& level) {
        Rational t = 0;
        for (const auto& v : filled(level))
            t += v;
        return t;
    };
    std::vector<Rational> knots;
    for (std::size_t i = 0; i < n; ++i) {
        knots.push_back(s.lower[i]);
        knots.push_back(s.upper[i]);
    }
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
    for (std::size_t j = 0; j < knots.size(); ++j) {
        const Rational t = total(knots[j]);
        if (t == s.a)
            return filled(knots[j]);
        if (t > s.a) {
            // total is linear on [knots[j-1], knots[j]]
            const Rational lo = knots[j - 1];
            const Rational t_lo = total(lo);
            const Rational level = lo + (s.a - t_lo) * (knots[j] - lo) / (t - t_lo);
            return filled(level);
        }
    }
    return filled(knots.back());
}

/// Every integer nonincreasing point of an integer box slice.
inline std::vector<std::vector<long>> integer_points(const std::vector<long>& lower, const std::vector<long>& upper,
                                                     long a) {
    std::vector<std::vector<long>> out;
    std::vector<long> x(lower.size());
    std::function<void(std::size_t, long, long)> rec = [&](std::size_t i, long left, long cap) {
        if (i == x.size()) {
            if (left == 0)
                out.push_back(x);
            return;
        }
        for (long v = std::min(cap, upper[i]); v >= lower[i]; --v) {
            x[i] = v;
            rec(i + 1, left - v, v);
        }
    };
    rec(0, a, upper.empty() ? 0 : upper[0]);
    return out;
}

/// Random integer box with nonincreasing bounds and a feasible sum target.
struct IntBox {
    std::vector<long> lower, upper;
    long a = 0;
    majext::BoxSet box() const { return majext::BoxSet{Rational(a), rv(lower), rv(upper)}; }
};

inline IntBox random_int_box(std::mt19937& rng, std::size_t n_max, long bound_max, long a_max) {
    std::uniform_int_distribution<std::size_t> n_dist(1, n_max);
    for (;;) {
        const std::size_t n = n_dist(rng);
        IntBox b;
        b.upper.resize(n);
        b.lower.resize(n);
        std::uniform_int_distribution<long> up(1, bound_max);
        for (std::size_t i = 0; i < n; ++i) {
            b.upper[i] = up(rng);
            b.lower[i] = std::uniform_int_distribution<long>(0, b.upper[i])(rng);
        }
        std::sort(b.upper.begin(), b.upper.end(), std::greater<>());
        std::sort(b.lower.begin(), b.lower.end(), std::greater<>());
        long lo = 0, hi = 0;
        for (std::size_t i = 0; i < n; ++i) {
            lo += b.lower[i];
            hi += b.upper[i];
        }
        lo = std::max(lo, 1L);
        hi = std::min(hi, a_max);
        if (lo > hi)
            continue;
        b.a = std::uniform_int_distribution<long>(lo, hi)(rng);
        return b;
    }
}

/// Closed-form extremal sequences in n for 0 <= c <= 6, n >= c + 2, written independently of the library.
struct ReferenceRow {
    std::vector<std::vector<int>> maximals;
    std::vector<int> minimal;
};

inline ReferenceRow reference_family(int n, int c) {
    ReferenceRow r;
    switch (c) {
    case 0:
        r.maximals = {blocks({{n - 1, 1}, {1, n - 1}})};
        r.minimal = blocks({{2, n - 2}, {1, 2}});
        break;
    case 1:
        r.maximals = {blocks({{n - 1, 1}, {2, 2}, {1, n - 3}})};
        r.minimal = blocks({{2, n}});
        break;
    case 2:
        r.maximals = {blocks({{n - 1, 1}, {3, 1}, {2, 2}, {1, n - 4}})};
        r.minimal = blocks({{3, 2}, {2, n - 2}});
        break;
    case 3:
        r.maximals = {blocks({{n - 1, 1}, {4, 1}, {2, 3}, {1, n - 5}}), blocks({{n - 1, 1}, {3, 3}, {1, n - 4}})};
        r.minimal = blocks({{3, 4}, {2, n - 4}});
        break;
    case 4:
        r.maximals = {blocks({{n - 1, 1}, {5, 1}, {2, 4}, {1, n - 6}}),
                      blocks({{n - 1, 1}, {4, 1}, {3, 2}, {2, 1}, {1, n - 5}})};
        r.minimal = blocks({{3, 6}, {2, n - 6}});
        break;
    case 5:
        r.maximals = {blocks({{n - 1, 1}, {6, 1}, {2, 5}, {1, n - 7}}),
                      blocks({{n - 1, 1}, {5, 1}, {3, 2}, {2, 2}, {1, n - 6}}),
                      blocks({{n - 1, 1}, {4, 2}, {3, 2}, {1, n - 5}})};
        r.minimal = n == 7 ? blocks({{4, 1}, {3, 6}}) : blocks({{3, 8}, {2, n - 8}});
        break;
    case 6:
        r.maximals = {blocks({{n - 1, 1}, {7, 1}, {2, 6}, {1, n - 8}}),
                      blocks({{n - 1, 1}, {6, 1}, {3, 2}, {2, 3}, {1, n - 7}}),
                      blocks({{n - 1, 1}, {5, 1}, {4, 1}, {3, 2}, {2, 1}, {1, n - 6}}),
                      blocks({{n - 1, 1}, {4, 4}, {1, n - 5}})};
        r.minimal = n == 8   ? blocks({{4, 2}, {3, 6}})
                    : n == 9 ? blocks({{4, 1}, {3, 8}})
                             : blocks({{3, 10}, {2, n - 10}});
        break;
    }
    return r;
}

/// Robin Hood transfer: move one unit from a larger to a smaller entry, keeping the order.
/// The result is majorized by the input.
inline bool robin_hood(std::vector<int>& d, std::mt19937& rng) {
    std::vector<std::pair<std::size_t, std::size_t>> moves;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j)
            if (d[i] - d[j] >= 2)
                moves.emplace_back(i, j);
    if (moves.empty())
        return false;
    auto [i, j] = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
    --d[i];
    ++d[j];
    std::sort(d.begin(), d.end(), std::greater<>());
    return true;
}

} // namespace testing_support
