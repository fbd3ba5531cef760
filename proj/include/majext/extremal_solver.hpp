#pragma once

// Maximal and minimal elements, in the majorization order, of box-constrained
// slices { x nonincreasing : sum(x) = a, m_i <= x_i <= M_i } and of their
// two-block special case.

#include "majext/errors.hpp"
#include "majext/majorization.hpp"
#include "majext/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace majext {

/// Sum target a with per-coordinate bounds lower <= x <= upper.
struct BoxSet {
    Rational a;
    RationalVector lower;
    RationalVector upper;

    std::size_t n() const noexcept { return lower.size(); }
};

/// First h coordinates in [m1, M1], the remaining n - h in [m2, M2].
struct TwoBlockSet {
    std::size_t n = 0;
    std::size_t h = 0;
    Rational a;
    Rational m1, M1;
    Rational m2, M2;
};

inline void validate(const BoxSet& s) {
    if (s.lower.size() != s.upper.size())
        throw DimensionError("BoxSet: bound vectors differ in length");
    if (s.n() == 0)
        throw DomainError("BoxSet: empty");
    if (s.a <= 0)
        throw DomainError("BoxSet: sum target must be positive");
    for (std::size_t i = 0; i < s.n(); ++i)
        if (s.lower[i] > s.upper[i])
            throw FeasibilityError("BoxSet: lower bound exceeds upper bound at index " +
                                   std::to_string(i));
    if (s.a < s.lower.sum() || s.a > s.upper.sum())
        throw FeasibilityError("BoxSet: sum target " + to_exact_string(s.a) + " outside [" +
                               to_exact_string(s.lower.sum()) + ", " +
                               to_exact_string(s.upper.sum()) + "]");
}

inline void validate(const TwoBlockSet& s) {
    if (s.n == 0 || s.h < 1 || s.h > s.n)
        throw DomainError("TwoBlockSet: need 1 <= h <= n");
    if (s.m2 < 0 || s.m2 > s.m1 || s.M2 < 0 || s.M2 > s.M1)
        throw DomainError("TwoBlockSet: need 0 <= m2 <= m1 and 0 <= M2 <= M1");
    if (!(s.m1 < s.M1) || !(s.m2 < s.M2))
        throw DomainError("TwoBlockSet: need m_i < M_i");
    if (s.a <= 0)
        throw DomainError("TwoBlockSet: sum target must be positive");
    const Rational h(static_cast<long>(s.h));
    const Rational rest(static_cast<long>(s.n - s.h));
    if (s.a < h * s.m1 + rest * s.m2 || s.a > h * s.M1 + rest * s.M2)
        throw FeasibilityError("TwoBlockSet: sum target outside the attainable range");
}

/// Expands the two blocks into per-coordinate bounds.
inline BoxSet to_box(const TwoBlockSet& s) {
    std::vector<Rational> lower(s.n, s.m2), upper(s.n, s.M2);
    for (std::size_t i = 0; i < s.h && i < s.n; ++i) {
        lower[i] = s.m1;
        upper[i] = s.M1;
    }
    return BoxSet{s.a, RationalVector(std::move(lower)), RationalVector(std::move(upper))};
}

namespace detail {

inline Rational range_sum(std::span<const Rational> v, std::size_t from, std::size_t to) {
    Rational acc = 0;
    for (std::size_t i = from; i < to; ++i)
        acc += v[i];
    return acc;
}

inline bool inside(const BoxSet& s, const std::vector<Rational>& x) {
    Rational total = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < s.lower[i] || x[i] > s.upper[i])
            return false;
        if (i + 1 < x.size() && x[i] < x[i + 1])
            return false;
        total += x[i];
    }
    return total == s.a;
}

} // namespace detail

/// Maximal element together with the split index k and the pivot value theta.
struct MaximalSolution {
    RationalVector x;
    std::size_t k = 0;
    Rational theta;
    bool upper_corner = false; ///< a equals the upper bound total; x is the upper vector
};

/**
 * Maximal element of a box slice: [M_1..M_k, theta, m_{k+2}..m_n], with k the
 * smallest index such that
 *   <M, s^k> + <m, v^k> <= a < <M, s^{k+1}> + <m, v^{k+1}>.
 * A tie at the left end of the bracket resolves to the smaller k.
 */
inline MaximalSolution solve_maximal(const BoxSet& s) {
    validate(s);
    const std::size_t n = s.n();
    auto M = s.upper.values();
    auto m = s.lower.values();

    // head = <M, s^k>, tail = <m, v^k>
    Rational head = 0;
    Rational tail = s.lower.sum();
    for (std::size_t k = 0; k < n; ++k) {
        const Rational left = head + tail;
        const Rational right = head + M[k] + (tail - m[k]);
        if (left <= s.a && s.a < right) {
            const Rational theta = s.a - head - (tail - m[k]);
            std::vector<Rational> x(M.begin(), M.begin() + static_cast<std::ptrdiff_t>(k));
            x.push_back(theta);
            x.insert(x.end(), m.begin() + static_cast<std::ptrdiff_t>(k + 1), m.end());
            if (!detail::inside(s, x))
                throw std::logic_error("solve_maximal: result left the box");
            return MaximalSolution{RationalVector(std::move(x)), k, theta, false};
        }
        head += M[k];
        tail -= m[k];
    }
    return MaximalSolution{s.upper, n, M[n - 1], true};
}

inline RationalVector maximal_box(const BoxSet& s) { return solve_maximal(s).x; }

/// Minimal element; when the constant vector a/n is infeasible, the split (k, d) and level rho.
struct MinimalSolution {
    RationalVector x;
    bool constant = false; ///< x = [(a/n)^n]
    std::size_t k = 0;
    std::size_t d = 0;
    Rational rho;
};

/**
 * Minimal element of a box slice. Returns [(a/n)^n] when it lies in the box,
 * otherwise [m_1..m_k, rho^{n-k-d}, M_{n-d+1}..M_n] with
 *   rho = (a - <m, s^k> - <M, v^{n-d}>) / (n - k - d),   m_{k+1} <= rho <= M_{n-d},
 * for the smallest such (k, d), k scanned first.
 */
inline MinimalSolution solve_minimal(const BoxSet& s) {
    validate(s);
    const std::size_t n = s.n();
    auto m = s.lower.values();
    auto M = s.upper.values();
    const Rational level = s.a / Rational(static_cast<long>(n));

    bool constant_fits = true;
    for (std::size_t i = 0; i < n; ++i)
        if (level < m[i] || level > M[i])
            constant_fits = false;
    if (constant_fits)
        return MinimalSolution{RationalVector(std::vector<Rational>(n, level)), true, 0, 0, level};

    Rational lower_head = 0; // <m, s^k>
    for (std::size_t k = 0; k < n; ++k) {
        Rational upper_tail = 0; // <M, v^{n-d}>
        for (std::size_t d = 0; k + d < n; ++d) {
            const std::size_t middle = n - k - d;
            const Rational rho = (s.a - lower_head - upper_tail) / Rational(static_cast<long>(middle));
            if (m[k] <= rho && rho <= M[n - d - 1]) {
                std::vector<Rational> x(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(k));
                x.insert(x.end(), middle, rho);
                x.insert(x.end(), M.begin() + static_cast<std::ptrdiff_t>(n - d), M.end());
                if (detail::inside(s, x))
                    return MinimalSolution{RationalVector(std::move(x)), false, k, d, rho};
            }
            upper_tail += M[n - d - 1];
        }
        lower_head += m[k];
    }
    throw std::logic_error("solve_minimal: no admissible (k, d) for a feasible box");
}

inline RationalVector minimal_box(const BoxSet& s) { return solve_minimal(s).x; }

/**
 * Maximal element of a two-block set via the closed-form split index
 *   k = floor((a - h(m1 - m2) - n m2) / (M1 - m1))   if a <  a* = h M1 + (n - h) m2
 *   k = floor((a - h(M1 - M2) - n m2) / (M2 - m2))   if a >= a*
 * Cross-checked against the general box scan.
 */
inline RationalVector maximal_two_block(const TwoBlockSet& s) {
    validate(s);
    const Rational n(static_cast<long>(s.n));
    const Rational h(static_cast<long>(s.h));
    const Rational a_star = h * s.M1 + (n - h) * s.m2;

    std::vector<Rational> x;
    x.reserve(s.n);
    if (s.a < a_star) {
        const auto k = floor((s.a - h * (s.m1 - s.m2) - n * s.m2) / (s.M1 - s.m1))
                           .convert_to<std::size_t>();
        const Rational kq(static_cast<long>(k));
        const Rational theta =
            s.a - kq * s.M1 - (h - kq - 1) * s.m1 - (n - h) * s.m2;
        x.insert(x.end(), k, s.M1);
        x.push_back(theta);
        x.insert(x.end(), s.h - k - 1, s.m1);
        x.insert(x.end(), s.n - s.h, s.m2);
    } else {
        const auto k = floor((s.a - h * (s.M1 - s.M2) - n * s.m2) / (s.M2 - s.m2))
                           .convert_to<std::size_t>();
        if (k >= s.n) {
            x.insert(x.end(), s.h, s.M1);
            x.insert(x.end(), s.n - s.h, s.M2);
        } else {
            const Rational kq(static_cast<long>(k));
            const Rational theta =
                s.a - h * s.M1 - (kq - h) * s.M2 - (n - kq - 1) * s.m2;
            x.insert(x.end(), s.h, s.M1);
            x.insert(x.end(), k - s.h, s.M2);
            x.push_back(theta);
            x.insert(x.end(), s.n - k - 1, s.m2);
        }
    }
    RationalVector result(std::move(x));
    if (!(result == maximal_box(to_box(s))))
        throw std::logic_error("maximal_two_block: closed form disagrees with the box scan");
    return result;
}

/// Minimal element of a two-block set; only the m1 <= M2 branch is supported.
inline RationalVector minimal_two_block(const TwoBlockSet& s) {
    validate(s);
    if (s.m1 > s.M2)
        throw UnsupportedCase("minimal_two_block: m1 > M2 is not supported");
    const Rational n(static_cast<long>(s.n));
    const Rational h(static_cast<long>(s.h));
    const Rational level = s.a / n;

    std::vector<Rational> x;
    x.reserve(s.n);
    if (s.m1 <= level && level <= s.M2) {
        x.assign(s.n, level);
    } else if (level < s.m1) {
        x.insert(x.end(), s.h, s.m1);
        if (s.n > s.h)
            x.insert(x.end(), s.n - s.h, (s.a - h * s.m1) / (n - h));
    } else {
        x.insert(x.end(), s.h, (s.a - s.M2 * (n - h)) / h);
        x.insert(x.end(), s.n - s.h, s.M2);
    }
    return RationalVector(std::move(x));
}

/**
 * Smallest (in the majorization order) integer point of the set, obtained from
 * its rational minimal element v. Each maximal run of equal fractional
 * components q of length L becomes (floor(q)+1)^r, floor(q)^{L-r} with r
 * chosen so that the run keeps its sum.
 */
inline RationalVector integerize_minimal(const RationalVector& v, const BoxSet& s) {
    validate(s);
    if (v.size() != s.n())
        throw DimensionError("integerize_minimal: vector and set differ in length");
    if (!is_integer(s.a))
        throw DomainError("integerize_minimal: sum target must be an integer");
    for (std::size_t i = 0; i < s.n(); ++i)
        if (!is_integer(s.lower[i]) || !is_integer(s.upper[i]))
            throw DomainError("integerize_minimal: bounds must be integers");
    if (v.sum() != s.a)
        throw FeasibilityError("integerize_minimal: vector does not sum to the target");

    std::vector<Rational> x(v.begin(), v.end());
    std::size_t i = 0;
    while (i < x.size()) {
        std::size_t j = i;
        while (j < x.size() && x[j] == x[i])
            ++j;
        if (!is_integer(x[i])) {
            const Rational length(static_cast<long>(j - i));
            const Rational block_sum = x[i] * length;
            if (!is_integer(block_sum))
                throw FeasibilityError("integerize_minimal: run sum " +
                                       to_exact_string(block_sum) + " is not an integer");
            const Rational base(floor(x[i]));
            const auto r = (block_sum - base * length).convert_to<std::size_t>();
            for (std::size_t t = i; t < j; ++t) {
                x[t] = (t - i < r) ? base + 1 : base;
                if (x[t] < s.lower[t] || x[t] > s.upper[t])
                    throw FeasibilityError("integerize_minimal: rounded run leaves the box");
            }
        }
        i = j;
    }
    if (!detail::inside(s, x))
        throw FeasibilityError("integerize_minimal: rounded vector is not in the set");
    return RationalVector(std::move(x));
}

inline RationalVector integerize_minimal(const RationalVector& v, const TwoBlockSet& s) {
    validate(s);
    return integerize_minimal(v, to_box(s));
}

} // namespace majext
