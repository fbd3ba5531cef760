#pragma once

// Rendering of extremal families and bounds reports as text, CSV and JSON.

#include "majext/bounds.hpp"
#include "majext/degree_sequences.hpp"

#include "json.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace majext {

using json = nlohmann::ordered_json;

namespace detail {

inline std::string space_separated(const DegreeSequence& s) {
    std::string out;
    for (std::size_t i = 0; i < s.degrees().size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(s[i]);
    }
    return out;
}

inline json exact_or_null(const IndexValue& v) {
    return v.is_exact() ? json(v.exact_string()) : json(nullptr);
}

inline json alpha_field(const IndexSpec& index) {
    if (index.kind() == IndexKind::FirstMultiplicativeZagrebLog)
        return nullptr;
    return to_exact_string(index.alpha());
}

} // namespace detail

// --- extremal families -----------------------------------------------------

inline std::string render_text(const ExtremalFamily& fam) {
    std::ostringstream os;
    os << "c=" << fam.cls.c << " n=" << fam.cls.n << " degree-sum=" << fam.cls.degree_sum()
       << (fam.tabulated ? " (small-order case)" : "") << "\n";
    os << "maximal:\n";
    for (const auto& m : fam.maximals)
        os << "  " << format_compact(m) << "  " << format_plain(m) << "\n";
    for (std::size_t i = 0; i < fam.maximals.size(); ++i)
        for (std::size_t j = i + 1; j < fam.maximals.size(); ++j)
            os << "  " << format_compact(fam.maximals[i]) << " vs " << format_compact(fam.maximals[j]) << ": "
               << (compare(fam.maximals[i], fam.maximals[j]) == Relation::Incomparable ? "incomparable"
                                                                                          : "COMPARABLE")
               << "\n";
    os << "minimal:\n  " << format_compact(fam.minimal) << "  " << format_plain(fam.minimal) << "\n";
    if (!fam.per_set.empty()) {
        os << "sets:\n";
        for (const auto& s : fam.per_set)
            os << "  " << s.label << ": max " << format_compact(s.maximal) << ", min "
               << format_compact(s.minimal) << "\n";
    }
    return os.str();
}

inline std::string render_csv(const std::vector<ExtremalFamily>& fams) {
    std::string out = "n,c,kind,sequence\n";
    for (const auto& f : fams) {
        for (const auto& m : f.maximals)
            out += std::to_string(f.cls.n) + "," + std::to_string(f.cls.c) + ",maximal," +
                   detail::space_separated(m) + "\n";
        out += std::to_string(f.cls.n) + "," + std::to_string(f.cls.c) + ",minimal," +
               detail::space_separated(f.minimal) + "\n";
    }
    return out;
}

inline json to_json(const ExtremalFamily& fam) {
    json j;
    j["n"] = fam.cls.n;
    j["c"] = fam.cls.c;
    j["maximals"] = json::array();
    for (const auto& m : fam.maximals)
        j["maximals"].push_back(m.degrees());
    j["minimal"] = fam.minimal.degrees();
    j["tabulated"] = fam.tabulated;
    j["sets"] = json::array();
    for (const auto& s : fam.per_set)
        j["sets"].push_back({{"label", s.label}, {"maximal", s.maximal.degrees()}, {"minimal", s.minimal.degrees()}});
    return j;
}

// --- bounds reports ----------------------------------------------------------

inline const char* kBoundsCsvHeader =
    "n,c,index,alpha,lower_exact,lower_decimal,upper_exact,upper_decimal,lower_attainer,upper_attainer,verified";

inline std::string render_csv_row(const BoundsReport& r) {
    const auto alpha = detail::alpha_field(r.index);
    std::string out = std::to_string(r.cls.n) + "," + std::to_string(r.cls.c) + "," + r.index.name() + "," +
                      (alpha.is_null() ? std::string() : alpha.get<std::string>()) + "," +
                      r.lower.exact_string() + "," + r.lower.decimal_string() + "," + r.upper.exact_string() +
                      "," + r.upper.decimal_string() + "," + detail::space_separated(r.lower_attainer) + "," +
                      detail::space_separated(r.upper_attainer) + "," +
                      (r.verified ? to_string(*r.verified) : "");
    return out;
}

inline std::string render_csv(const std::vector<BoundsReport>& reports) {
    std::string out = std::string(kBoundsCsvHeader) + "\n";
    for (const auto& r : reports)
        out += render_csv_row(r) + "\n";
    return out;
}

inline json to_json(const BoundsReport& r) {
    json j;
    j["n"] = r.cls.n;
    j["c"] = r.cls.c;
    j["index"] = r.index.name();
    j["alpha"] = detail::alpha_field(r.index);
    j["lower_exact"] = detail::exact_or_null(r.lower);
    j["lower_decimal"] = r.lower.decimal_string();
    j["upper_exact"] = detail::exact_or_null(r.upper);
    j["upper_decimal"] = r.upper.decimal_string();
    j["lower_attainer"] = r.lower_attainer.degrees();
    j["upper_attainer"] = r.upper_attainer.degrees();
    j["verified"] = r.verified ? json(to_string(*r.verified)) : json(nullptr);
    j["schur"] = to_string(schur_class(r.index));
    if (!r.candidates.empty()) {
        j["candidates"] = json::array();
        for (const auto& c : r.candidates)
            j["candidates"].push_back({{"sequence", c.seq.degrees()},
                                       {"exact", detail::exact_or_null(c.value)},
                                       {"decimal", c.value.decimal_string()},
                                       {"binding", c.binding}});
    }
    if (r.refined_upper) {
        j["refined_upper_exact"] = detail::exact_or_null(*r.refined_upper);
        j["refined_upper_decimal"] = r.refined_upper->decimal_string();
    }
    return j;
}

inline json to_json(const std::vector<BoundsReport>& reports, const std::vector<std::string>& notes = {}) {
    json j;
    j["reports"] = json::array();
    for (const auto& r : reports)
        j["reports"].push_back(to_json(r));
    j["notes"] = notes;
    return j;
}

inline std::string value_text(const IndexValue& v) {
    if (v.is_exact())
        return v.exact_string() + " (" + v.decimal_string() + ")";
    return v.decimal_string();
}

/// Power-sum expression of a sequence, e.g. "7^a + 4^a + 3*2^a + 3".
inline std::string power_sum_expression(const DegreeSequence& s, const IndexSpec& index) {
    std::string out;
    std::size_t i = 0;
    const auto& d = s.degrees();
    const bool log_form = index.kind() == IndexKind::FirstMultiplicativeZagrebLog;
    while (i < d.size()) {
        std::size_t j = i;
        while (j < d.size() && d[j] == d[i])
            ++j;
        const std::size_t count = j - i;
        if (!out.empty())
            out += " + ";
        std::string term;
        if (log_form)
            term = "2ln" + std::to_string(d[i]);
        else if (d[i] == 1)
            term = "1";
        else
            term = std::to_string(d[i]) + "^a";
        if (d[i] == 1 && !log_form)
            out += std::to_string(count);
        else
            out += (count > 1 ? std::to_string(count) + "*" : std::string()) + term;
        i = j;
    }
    return out;
}

inline std::string render_text(const BoundsReport& r) {
    std::ostringstream os;
    os << "n=" << r.cls.n << " c=" << r.cls.c << " index=" << r.index.symbol() << " (" << r.index.name()
       << ", Schur-" << to_string(schur_class(r.index)) << ")\n";
    os << "  lower = " << value_text(r.lower) << " at " << format_compact(r.lower_attainer) << "\n";
    os << "  upper = " << value_text(r.upper) << " at " << format_compact(r.upper_attainer) << "\n";
    if (r.candidates.size() > 1) {
        os << "  maximal-sequence candidates:\n";
        for (const auto& c : r.candidates)
            os << "    " << format_compact(c.seq) << "  " << power_sum_expression(c.seq, r.index) << " = "
               << value_text(c.value) << (c.binding ? "  <- binding" : "") << "\n";
    }
    if (r.refined_upper)
        os << "  refined upper (d_{c+2} >= 2) = " << value_text(*r.refined_upper) << "\n";
    if (r.verified)
        os << "  verified: " << to_string(*r.verified) << "\n";
    return os.str();
}

inline std::string render_text(const std::vector<BoundsReport>& reports, const std::vector<std::string>& notes) {
    std::string out;
    for (const auto& r : reports)
        out += render_text(r);
    for (const auto& note : notes)
        out += "note: " + note + "\n";
    return out;
}

} // namespace majext
