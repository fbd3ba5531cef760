#pragma once

#include "majext/degree_sequences.hpp"
#include "majext/errors.hpp"
#include "majext/rational.hpp"

#include <cmath>
#include <span>
#include <string>
#include <variant>

namespace majext {

enum class IndexKind { GeneralFirstZagreb, InverseDegree, FirstMultiplicativeZagrebLog };
enum class SchurClass { Convex, Concave };

inline const char* to_string(SchurClass s) {
    return s == SchurClass::Convex ? "convex" : "concave";
}

/// A degree-sequence index: sum d^alpha, sum 1/d, or 2 sum ln d.
class IndexSpec {
public:
    /// alpha must differ from 0 and 1.
    static IndexSpec general_zagreb(const Rational& alpha) {
        if (alpha == 0 || alpha == 1)
            throw DomainError("general Zagreb index needs alpha outside {0, 1}");
        return IndexSpec(IndexKind::GeneralFirstZagreb, alpha);
    }
    static IndexSpec inverse_degree() { return IndexSpec(IndexKind::InverseDegree, Rational(-1)); }
    static IndexSpec mult_zagreb_log() {
        return IndexSpec(IndexKind::FirstMultiplicativeZagrebLog, Rational(0));
    }

    IndexKind kind() const noexcept { return kind_; }

    /// Exponent of the power-sum form; -1 for the inverse degree, 0 (unused) for the log form.
    const Rational& alpha() const noexcept { return alpha_; }

    bool integer_exponent() const {
        return kind_ != IndexKind::FirstMultiplicativeZagrebLog && is_integer(alpha_);
    }

    /// CLI spelling: general-zagreb, inverse-degree, mult-zagreb-log.
    std::string name() const {
        switch (kind_) {
        case IndexKind::GeneralFirstZagreb: return "general-zagreb";
        case IndexKind::InverseDegree: return "inverse-degree";
        case IndexKind::FirstMultiplicativeZagrebLog: return "mult-zagreb-log";
        }
        return "?";
    }

    /// Short mathematical label, e.g. "M1^2", "rho", "ln PI1".
    std::string symbol() const {
        switch (kind_) {
        case IndexKind::GeneralFirstZagreb: return "M1^" + to_exact_string(alpha_);
        case IndexKind::InverseDegree: return "rho";
        case IndexKind::FirstMultiplicativeZagrebLog: return "ln PI1";
        }
        return "?";
    }

    friend bool operator==(const IndexSpec&, const IndexSpec&) = default;

private:
    IndexSpec(IndexKind kind, Rational alpha) : kind_(kind), alpha_(std::move(alpha)) {}

    IndexKind kind_;
    Rational alpha_;
};

inline SchurClass schur_class(const IndexSpec& index) {
    switch (index.kind()) {
    case IndexKind::InverseDegree: return SchurClass::Convex;
    case IndexKind::FirstMultiplicativeZagrebLog: return SchurClass::Concave;
    case IndexKind::GeneralFirstZagreb:
        if (index.alpha() == 0 || index.alpha() == 1)
            throw DomainError("schur_class: alpha in {0, 1}");
        return (index.alpha() < 0 || index.alpha() > 1) ? SchurClass::Convex : SchurClass::Concave;
    }
    throw DomainError("schur_class: unknown index");
}

inline constexpr double kApproxTolerance = 1e-12;

/// Exact rational, or a floating-point value with an absolute error bound.
class IndexValue {
public:
    IndexValue() : value_(Rational(0)) {}
    static IndexValue exact(Rational q) { return IndexValue(std::move(q)); }
    static IndexValue approx(double v, double error_bound = kApproxTolerance) {
        IndexValue out;
        out.value_ = v;
        out.error_bound_ = error_bound;
        return out;
    }

    bool is_exact() const noexcept { return std::holds_alternative<Rational>(value_); }
    const Rational& exact_value() const { return std::get<Rational>(value_); }
    double error_bound() const noexcept { return is_exact() ? 0.0 : error_bound_; }

    double to_double() const {
        return is_exact() ? std::get<Rational>(value_).convert_to<double>() : std::get<double>(value_);
    }

    /// "p/q" for exact values, empty otherwise.
    std::string exact_string() const { return is_exact() ? to_exact_string(exact_value()) : std::string(); }
    std::string decimal_string() const { return to_decimal_string(to_double()); }

private:
    explicit IndexValue(Rational q) : value_(std::move(q)) {}

    std::variant<Rational, double> value_;
    double error_bound_ = 0.0;
};

/// Three-way comparison; exact when both sides are exact, otherwise within tol.
inline int compare_values(const IndexValue& a, const IndexValue& b, double tol = kApproxTolerance) {
    if (a.is_exact() && b.is_exact())
        return a.exact_value() < b.exact_value() ? -1 : (b.exact_value() < a.exact_value() ? 1 : 0);
    const double x = a.to_double(), y = b.to_double();
    if (std::fabs(x - y) <= tol)
        return 0;
    return x < y ? -1 : 1;
}

inline bool same_value(const IndexValue& a, const IndexValue& b, double tol = kApproxTolerance) {
    return compare_values(a, b, tol) == 0;
}

/// Evaluates the index on a degree list. Zero degrees are rejected for alpha < 0 and the log form.
inline IndexValue evaluate(const IndexSpec& index, std::span<const int> degrees) {
    const bool needs_positive = index.kind() == IndexKind::FirstMultiplicativeZagrebLog ||
                                index.alpha() < 0;
    for (int d : degrees) {
        if (d < 0)
            throw DomainError("evaluate: negative degree");
        if (d == 0 && needs_positive)
            throw DomainError("evaluate: zero degree with a negative exponent or logarithm");
    }
    if (index.kind() == IndexKind::FirstMultiplicativeZagrebLog) {
        long double acc = 0;
        for (int d : degrees)
            acc += std::log(static_cast<long double>(d));
        return IndexValue::approx(static_cast<double>(2 * acc));
    }
    if (index.integer_exponent()) {
        const long e = boost::multiprecision::numerator(index.alpha()).convert_to<long>();
        Rational acc = 0;
        for (int d : degrees)
            acc += pow(Rational(d), e);
        return IndexValue::exact(std::move(acc));
    }
    const auto e = static_cast<long double>(index.alpha().convert_to<double>());
    long double acc = 0;
    for (int d : degrees)
        acc += std::pow(static_cast<long double>(d), e);
    return IndexValue::approx(static_cast<double>(acc));
}

inline IndexValue evaluate(const IndexSpec& index, const DegreeSequence& seq) {
    return evaluate(index, seq.values());
}

} // namespace majext
