#pragma once

#include "majext/errors.hpp"
#include "majext/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace majext {

/// Outcome of comparing two vectors in the majorization order.
enum class Relation { LessOrEqual, GreaterOrEqual, Equal, Incomparable };

inline const char* to_string(Relation r) {
    switch (r) {
    case Relation::LessOrEqual: return "LessOrEqual";
    case Relation::GreaterOrEqual: return "GreaterOrEqual";
    case Relation::Equal: return "Equal";
    case Relation::Incomparable: return "Incomparable";
    }
    return "?";
}

/**
 * A nonincreasing vector of nonnegative components.
 *
 * Construction rejects unsorted or negative input instead of sorting it, so a
 * caller that produced the wrong order finds out here.
 */
template <typename T>
class DegreeVector {
public:
    using value_type = T;

    DegreeVector() = default;

    explicit DegreeVector(std::vector<T> components) : components_(std::move(components)) {
        for (std::size_t i = 0; i < components_.size(); ++i) {
            if (components_[i] < T(0))
                throw DomainError("DegreeVector: negative component at index " + std::to_string(i));
            if (i + 1 < components_.size() && components_[i] < components_[i + 1])
                throw DomainError("DegreeVector: components not nonincreasing at index " +
                                  std::to_string(i));
        }
    }

    DegreeVector(std::initializer_list<T> components)
        : DegreeVector(std::vector<T>(components)) {}

    std::size_t size() const noexcept { return components_.size(); }
    const T& operator[](std::size_t i) const { return components_[i]; }
    std::span<const T> values() const noexcept { return components_; }
    const std::vector<T>& components() const noexcept { return components_; }
    auto begin() const noexcept { return components_.begin(); }
    auto end() const noexcept { return components_.end(); }

    T sum() const {
        T total(0);
        for (const auto& x : components_)
            total += x;
        return total;
    }

    friend bool operator==(const DegreeVector& a, const DegreeVector& b) {
        return a.components_ == b.components_;
    }

private:
    std::vector<T> components_;
};

/// Prefix sums <v, s^1>, ..., <v, s^n>.
template <typename T>
std::vector<T> partial_sums(std::span<const T> v) {
    std::vector<T> out;
    out.reserve(v.size());
    T acc(0);
    for (const auto& x : v) {
        acc += x;
        out.push_back(acc);
    }
    return out;
}

template <typename T>
std::vector<T> partial_sums(const DegreeVector<T>& v) {
    return partial_sums(v.values());
}

/// Compares two nonincreasing vectors. Unequal totals are Incomparable.
template <typename T>
Relation compare(std::span<const T> y, std::span<const T> z) {
    if (y.size() != z.size())
        throw DimensionError("compare: length " + std::to_string(y.size()) + " vs " +
                             std::to_string(z.size()));
    bool le = true;
    bool ge = true;
    T sy(0), sz(0);
    for (std::size_t i = 0; i < y.size(); ++i) {
        sy += y[i];
        sz += z[i];
        if (sy > sz)
            le = false;
        if (sy < sz)
            ge = false;
    }
    if (sy != sz)
        return Relation::Incomparable;
    if (le && ge)
        return Relation::Equal;
    if (le)
        return Relation::LessOrEqual;
    if (ge)
        return Relation::GreaterOrEqual;
    return Relation::Incomparable;
}

template <typename T>
Relation compare(const DegreeVector<T>& y, const DegreeVector<T>& z) {
    return compare(y.values(), z.values());
}

/// y ⊴ z (includes equality).
template <typename T>
bool majorized_by(std::span<const T> y, std::span<const T> z) {
    Relation r = compare(y, z);
    return r == Relation::LessOrEqual || r == Relation::Equal;
}

template <typename T>
bool majorized_by(const DegreeVector<T>& y, const DegreeVector<T>& z) {
    return majorized_by(y.values(), z.values());
}

namespace detail {

template <typename T>
std::string component_string(const T& x) {
    if constexpr (std::is_same_v<T, Rational>) {
        return to_exact_string(x);
    } else {
        std::ostringstream os;
        os << x;
        return os.str();
    }
}

} // namespace detail

/// "[7,4,2,2,2,1,1,1]"
template <typename T>
std::string format_plain(std::span<const T> v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ',';
        out += detail::component_string(v[i]);
    }
    return out + "]";
}

/// Run-length form, "[7,4,2^3,1^3]".
template <typename T>
std::string format_compact(std::span<const T> v) {
    std::string out = "[";
    std::size_t i = 0;
    bool first = true;
    while (i < v.size()) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i])
            ++j;
        if (!first)
            out += ',';
        first = false;
        out += detail::component_string(v[i]);
        if (j - i > 1)
            out += "^" + std::to_string(j - i);
        i = j;
    }
    return out + "]";
}

template <typename T>
std::string format_plain(const DegreeVector<T>& v) {
    return format_plain(v.values());
}

template <typename T>
std::string format_compact(const DegreeVector<T>& v) {
    return format_compact(v.values());
}

using RationalVector = DegreeVector<Rational>;

} // namespace majext
