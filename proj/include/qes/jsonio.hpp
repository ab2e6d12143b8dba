// qes: band-edge spectra of quasi-exactly solvable elliptic potentials.
// SPDX-License-Identifier: MIT
//
// Result serialization. Output files are regression-diffed, so the JSON
// writer is deterministic by construction: object keys are kept sorted,
// reals are printed with 17 significant digits, and exact rationals are
// printed as "p/q" strings. A general-purpose JSON library is avoided
// here only because none pins this exact number formatting.

#ifndef QES_JSONIO_HPP
#define QES_JSONIO_HPP

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <functional>
#include <iterator>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qes/errors.hpp"
#include "qes/rational.hpp"
#include "qes/spectra.hpp"

namespace qes {

// One node of a JSON document. Objects use an ordered map so that a
// rendered document depends only on its content.
struct JsonValue {
    enum class Kind { Null, Bool, Int, Real, Str, Arr, Obj };
    Kind kind = Kind::Null;
    bool boolean = false;
    long long integer = 0;
    double real = 0.0;
    std::string text;
    std::vector<JsonValue> items;
    std::map<std::string, JsonValue> fields;

    JsonValue() = default;
    static JsonValue of(bool v) {
        JsonValue j;
        j.kind = Kind::Bool;
        j.boolean = v;
        return j;
    }
    static JsonValue of(long long v) {
        JsonValue j;
        j.kind = Kind::Int;
        j.integer = v;
        return j;
    }
    static JsonValue of(int v) { return of(static_cast<long long>(v)); }
    static JsonValue of(double v) {
        JsonValue j;
        j.kind = Kind::Real;
        j.real = v;
        return j;
    }
    static JsonValue of(std::string v) {
        JsonValue j;
        j.kind = Kind::Str;
        j.text = std::move(v);
        return j;
    }
    static JsonValue array() {
        JsonValue j;
        j.kind = Kind::Arr;
        return j;
    }
    static JsonValue object() {
        JsonValue j;
        j.kind = Kind::Obj;
        return j;
    }
};

namespace detail {

inline std::string format_real(double v) {
    if (!std::isfinite(v)) throw Error("json: non-finite number cannot be serialized");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline void escape_into(const std::string& s, std::string& out) {
    out += '"';
    for (unsigned char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\b': out += "\\b"; break;
        case '\f': out += "\\f"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (c < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += static_cast<char>(c);
            }
        }
    }
    out += '"';
}

inline void render_into(const JsonValue& v, std::string& out, int depth) {
    const auto pad = [&out](int d) { out.append(static_cast<std::size_t>(2 * d), ' '); };
    switch (v.kind) {
    case JsonValue::Kind::Null: out += "null"; break;
    case JsonValue::Kind::Bool: out += v.boolean ? "true" : "false"; break;
    case JsonValue::Kind::Int: out += std::to_string(v.integer); break;
    case JsonValue::Kind::Real: out += format_real(v.real); break;
    case JsonValue::Kind::Str: escape_into(v.text, out); break;
    case JsonValue::Kind::Arr:
        if (v.items.empty()) {
            out += "[]";
            break;
        }
        out += "[\n";
        for (std::size_t i = 0; i < v.items.size(); ++i) {
            pad(depth + 1);
            render_into(v.items[i], out, depth + 1);
            if (i + 1 < v.items.size()) out += ',';
            out += '\n';
        }
        pad(depth);
        out += ']';
        break;
    case JsonValue::Kind::Obj:
        if (v.fields.empty()) {
            out += "{}";
            break;
        }
        out += "{\n";
        for (auto it = v.fields.begin(); it != v.fields.end(); ++it) {
            pad(depth + 1);
            escape_into(it->first, out);
            out += ": ";
            render_into(it->second, out, depth + 1);
            if (std::next(it) != v.fields.end()) out += ',';
            out += '\n';
        }
        pad(depth);
        out += '}';
        break;
    }
}

} // namespace detail

inline std::string render_json(const JsonValue& v) {
    std::string out;
    detail::render_into(v, out, 0);
    out += '\n';
    return out;
}

// Verification block of a result document: one residual per realized
// state, the numeric spectrum it was checked against, and the largest
// distance between an algebraic level and its nearest numeric partner.
struct VerificationReport {
    std::vector<double> residuals;
    std::vector<double> oracle_levels;
    double max_mismatch = 0.0;
};

inline JsonValue spec_to_json(const PotentialSpec& spec) {
    JsonValue j = JsonValue::object();
    switch (spec.family) {
    case Family::AssociatedLame:
        j.fields["family"] = JsonValue::of(std::string("associated-lame"));
        j.fields["m"] = JsonValue::of(to_string(spec.m));
        j.fields["l"] = JsonValue::of(to_string(spec.l));
        break;
    case Family::Tan:
        j.fields["family"] = JsonValue::of(std::string("tan"));
        j.fields["n"] = JsonValue::of(spec.n);
        break;
    case Family::Cot:
        j.fields["family"] = JsonValue::of(std::string("cot"));
        j.fields["n"] = JsonValue::of(spec.n);
        break;
    }
    if (spec.modulus.has_exact())
        j.fields["k2"] = JsonValue::of(to_string(spec.modulus.exact_k_sq()));
    else
        j.fields["k2"] = JsonValue::of(spec.modulus.k_sq());
    return j;
}

// Full result document for one solved specification. Omitting the
// verification pointer omits the block, matching runs that skip it.
inline JsonValue solution_document(const PotentialSpec& spec, const BandEdgeSpectrum& spectrum,
                                   const VerificationReport* verification,
                                   std::vector<std::string> warnings = {}) {
    JsonValue doc = JsonValue::object();
    doc.fields["spec"] = spec_to_json(spec);

    JsonValue cases = JsonValue::array();
    for (const auto& cs : spectrum.cases) {
        JsonValue c = JsonValue::object();
        c.fields["case_id"] = JsonValue::of(cs.case_id);
        c.fields["n"] = JsonValue::of(cs.n);
        const auto rational_list = [](const std::vector<Rational>& v) {
            JsonValue a = JsonValue::array();
            for (const auto& r : v) a.items.push_back(JsonValue::of(to_string(r)));
            return a;
        };
        c.fields["lambda"] = rational_list(cs.bundle.lambda);
        c.fields["rho"] = rational_list(cs.bundle.rho);
        c.fields["critical_poly"] = rational_list(cs.bundle.monic);
        cases.items.push_back(std::move(c));
    }
    doc.fields["cases"] = std::move(cases);

    JsonValue energies = JsonValue::array();
    for (const auto& e : spectrum.energies) {
        JsonValue level = JsonValue::object();
        level.fields["value"] = JsonValue::of(e.value);
        if (e.exact) level.fields["exact"] = JsonValue::of(to_string(*e.exact));
        level.fields["degeneracy"] = JsonValue::of(e.degeneracy);
        JsonValue sources = JsonValue::array();
        for (int id : e.source_cases) sources.items.push_back(JsonValue::of(id));
        level.fields["sources"] = std::move(sources);
        energies.items.push_back(std::move(level));
    }
    doc.fields["energies"] = std::move(energies);

    if (verification) {
        JsonValue v = JsonValue::object();
        JsonValue residuals = JsonValue::array();
        for (double r : verification->residuals) residuals.items.push_back(JsonValue::of(r));
        v.fields["residuals"] = std::move(residuals);
        JsonValue levels = JsonValue::array();
        for (double r : verification->oracle_levels) levels.items.push_back(JsonValue::of(r));
        v.fields["oracle_levels"] = std::move(levels);
        v.fields["max_mismatch"] = JsonValue::of(verification->max_mismatch);
        doc.fields["verification"] = std::move(v);
    }

    JsonValue warn = JsonValue::array();
    for (const auto& w : spectrum.warnings) warn.items.push_back(JsonValue::of(w));
    for (auto& w : warnings) warn.items.push_back(JsonValue::of(std::move(w)));
    doc.fields["warnings"] = std::move(warn);
    return doc;
}

// Plot-ready sampling of the potential and a set of states on a uniform
// grid: columns x, V(x), then one column per state labeled by energy.
inline std::string sample_csv(const PotentialSpec& spec,
                              const std::vector<std::function<double(double)>>& states,
                              const std::vector<double>& energies, double a, double b,
                              int count) {
    if (states.size() != energies.size())
        throw Error("sample_csv: one energy label per state required");
    if (count < 2) throw Error("sample_csv: need at least two sample points");
    if (!(b > a)) throw Error("sample_csv: empty domain");
    std::string out = "x,V(x)";
    for (double e : energies) out += ",E=" + detail::format_real(e);
    out += '\n';
    const double h = (b - a) / (count - 1);
    for (int i = 0; i < count; ++i) {
        const double x = a + h * i;
        out += detail::format_real(x);
        out += ',';
        out += detail::format_real(eval_potential(spec, x));
        for (const auto& f : states) {
            out += ',';
            out += detail::format_real(f(x));
        }
        out += '\n';
    }
    return out;
}

} // namespace qes

#endif // QES_JSONIO_HPP
