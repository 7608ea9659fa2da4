#pragma once

#include <json.hpp>

#include "banded.hpp"
#include "zeros.hpp"

namespace dekpoly {

using json = nlohmann::json;

inline std::string bigint_str(const BigInt& v) { return v.str(); }

inline json rational_parts(const Rational& q) {
    return json{{"num", bigint_str(numerator(q))}, {"den", bigint_str(denominator(q))}};
}

// ---- scalar -> JSON, tagged by kind ---------------------------------------

inline json scalar_json(const Rational& q) {
    json j = rational_parts(q);
    j["kind"] = "rational";
    return j;
}

inline json scalar_json(const QuadExt& v) {
    return json{{"kind", "quadext"},
                {"a", rational_parts(v.a())},
                {"b", rational_parts(v.b())},
                {"d", v.d()}};
}

inline json scalar_json(const BigFloat& v) {
    return json{{"kind", "bigfloat"},
                {"decimal", v.to_string()},
                {"precision_bits", v.prec()}};
}

template <class F>
json scalar_json(const ComplexOf<F>& z) {
    return json{{"kind", "complex"}, {"re", scalar_json(z.re)}, {"im", scalar_json(z.im)}};
}

// ---- field labels ----------------------------------------------------------

template <class F>
struct field_label;
template <>
struct field_label<Rational> { static constexpr const char* value = "rational"; };
template <>
struct field_label<QuadExt> { static constexpr const char* value = "quadext"; };
template <>
struct field_label<BigFloat> { static constexpr const char* value = "bigfloat"; };
template <class F>
struct field_label<ComplexOf<F>> { static constexpr const char* value = "complex"; };

// ---- polynomial ------------------------------------------------------------

template <class F>
json poly_json(const Polynomial<F>& p) {
    json coeffs = json::array();
    for (const F& c : p.coeffs()) coeffs.push_back(scalar_json(c));
    return json{{"field", field_label<F>::value}, {"coeffs", coeffs}};
}

// ---- family descriptor -----------------------------------------------------

template <class F>
json family_json(const ClassicalFamily<F>& fam, int upto_a = 0) {
    json j;
    j["kind"] = family_name(fam.kind());
    switch (fam.kind()) {
        case FamilyKind::hermite:
            j["measure"] = json{{"name", "gauss"}, {"weight", "exp(-x^2/2) dx on R"}};
            break;
        case FamilyKind::chebyshev1:
            j["measure"] = json{{"name", "chebyshev1"},
                                {"weight", "dx / sqrt(1-x^2) on (-1,1)"}};
            break;
        case FamilyKind::custom:
            j["measure"] = json{{"name", "custom"}, {"weight", "implied by a_n"}};
            break;
    }
    json a = json::array();
    for (int n = 1; n <= upto_a; ++n) a.push_back(scalar_json(fam.a(n)));
    j["a"] = a;
    return j;
}

// ---- banded operator: sparse triplets ---------------------------------------

template <class F>
json operator_json(const BandedOperator<F>& op) {
    json trips = json::array();
    for (const auto& [r, c, v] : op.triplets())
        trips.push_back(json::array({r, c, scalar_json(v)}));
    return json{{"size", op.size()},
                {"low", op.low()},
                {"high", op.high()},
                {"triplets", trips}};
}

// ---- zero sets: CSV rows for plotting ---------------------------------------

// Decimal places used in CSV exports; fixed so reruns are byte-identical.
inline constexpr size_t csv_digits = 32;

inline std::string zeros_csv_header() { return "poly_kind,n,re,im,multiplicity"; }

inline std::string zeros_csv(const ZeroSet& zs) {
    std::string out = zeros_csv_header() + "\n";
    for (size_t k = 0; k < zs.roots.size(); ++k) {
        out += zs.kind;
        out += "," + std::to_string(zs.n);
        out += "," + zs.roots[k].re.to_string(csv_digits);
        out += "," + zs.roots[k].im.to_string(csv_digits);
        out += "," + std::to_string(zs.multiplicities[k]);
        out += "\n";
    }
    return out;
}

inline json zeros_json(const ZeroSet& zs) {
    json roots = json::array();
    for (size_t k = 0; k < zs.roots.size(); ++k)
        roots.push_back(json{{"root", scalar_json(zs.roots[k])},
                             {"multiplicity", zs.multiplicities[k]}});
    return json{{"family", zs.family},
                {"poly_kind", std::string(1, zs.kind)},
                {"n", zs.n},
                {"method", root_method_name(zs.method)},
                {"precision_bits", zs.precision_bits},
                {"cluster_fallback", zs.cluster_fallback},
                {"roots", roots}};
}

// ---- custom family descriptor parsing ---------------------------------------

inline Rational parse_rational(const json& v) {
    if (v.is_number_integer()) return Rational(static_cast<long long>(v.get<long long>()));
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(BigInt(s));
            return Rational(BigInt(s.substr(0, slash))) / Rational(BigInt(s.substr(slash + 1)));
        } catch (const std::exception&) {
            throw ConfigError("cannot parse rational '" + s + "'");
        }
    }
    if (v.is_object() && v.contains("num") && v.contains("den"))
        return Rational(BigInt(v["num"].get<std::string>())) /
               Rational(BigInt(v["den"].get<std::string>()));
    throw ConfigError("rational must be an integer, a \"p/q\" string, or {num, den}");
}

// Reads {"kind": "custom", "a": [...]} (entries per parse_rational); the list
// gives a_1, a_2, ... of the source three-term recurrence.
inline std::vector<Rational> parse_custom_family(const json& j) {
    if (!j.contains("a") || !j["a"].is_array() || j["a"].empty())
        throw ConfigError("custom family descriptor needs a nonempty \"a\" array");
    std::vector<Rational> a;
    a.reserve(j["a"].size());
    for (const auto& v : j["a"]) a.push_back(parse_rational(v));
    return a;
}

} // namespace dekpoly
