#pragma once

#include <cctype>
#include <string>
#include <vector>

#include <json.hpp>

#include "torfol/forms.hpp"
#include "torfol/poly.hpp"
#include "torfol/toric.hpp"

namespace torfol {

namespace parser_detail {

class PolyParser {
public:
    PolyParser(const std::string& text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool starts_atom(char c) const {
        return std::isdigit(static_cast<unsigned char>(c)) ||
               std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '(';
    }

    Polynomial expr() {
        bool neg = false;
        char c = peek();
        if (c == '+' || c == '-') {
            neg = c == '-';
            ++pos_;
        }
        Polynomial acc = term();
        if (neg) acc = -acc;
        for (;;) {
            c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                Polynomial t = term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (starts_atom(c)) {
                acc = acc * factor(); // juxtaposition
            } else {
                return acc;
            }
        }
    }

    Polynomial factor() {
        Polynomial base = atom();
        while (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t start = pos_;
            unsigned long e = natural();
            if (pos_ == start) throw ParseError("expected exponent after '^'", pos_);
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Polynomial atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return p;
        }
        if (c == '-') { // unary minus inside a factor, e.g. "2*-3"
            ++pos_;
            return -atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
        throw ParseError("expected a number, variable or '('", pos_);
    }

    unsigned long natural() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected a number", pos_);
        return std::stoul(text_.substr(start, pos_ - start));
    }

    Polynomial number() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        Integer num(text_.substr(start, pos_ - start));
        Integer den(1);
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            // a fraction only when followed by digits
            std::size_t save = pos_;
            ++pos_;
            skip_ws();
            std::size_t dstart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == dstart) {
                pos_ = save;
            } else {
                den = Integer(text_.substr(dstart, pos_ - dstart));
                if (den == 0) throw ParseError("zero denominator", dstart);
            }
        }
        Rational r(num, den);
        r.canonicalize();
        return Polynomial::constant(ring_, r);
    }

    Polynomial variable() {
        skip_ws();
        // longest match over the ring's names
        std::size_t best = 0;
        std::size_t var = ring_->nvars();
        for (std::size_t i = 0; i < ring_->nvars(); ++i) {
            const std::string& name = ring_->name(i);
            if (name.size() > best && text_.compare(pos_, name.size(), name) == 0) {
                best = name.size();
                var = i;
            }
        }
        if (var == ring_->nvars()) {
            std::size_t end = pos_;
            while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) ||
                                          text_[end] == '_'))
                ++end;
            throw ParseError("unknown variable '" + text_.substr(pos_, end - pos_) + "'", pos_);
        }
        pos_ += best;
        return Polynomial::variable(ring_, var);
    }

    const std::string& text_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

} // namespace parser_detail

inline Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
    return parser_detail::PolyParser(text, ring).parse();
}

/// Canonical generator form for printing: integer coefficients with content
/// one and a positive leading coefficient.
inline Polynomial canonical_generator(const Polynomial& p) {
    if (p.is_zero()) return p;
    Integer den = 1;
    for (const auto& [m, c] : p.terms())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    Integer num = 0;
    for (const auto& [m, c] : p.terms()) {
        Integer scaled = c.get_num() * (den / c.get_den());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), scaled.get_mpz_t());
    }
    Rational scale = Rational(den) / Rational(num);
    Polynomial out = p * scale;
    if (sgn(out.leading_coefficient()) < 0) out = -out;
    return out;
}

/// Ideal generators printed canonically: normalized, deduplicated, sorted.
inline std::vector<std::string> ideal_strings(const Ideal& ideal) {
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(canonical_generator(g));
    GrevlexLess less;
    std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
        if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
        return less(a.leading_monomial(), b.leading_monomial());
    });
    std::vector<std::string> out;
    for (const auto& g : gens) {
        std::string s = g.str();
        if (out.empty() || out.back() != s) out.push_back(std::move(s));
    }
    return out;
}

// ---- JSON schemas ----

using Json = nlohmann::ordered_json;

inline Fan fan_from_json(const Json& j) {
    Fan fan;
    if (!j.contains("rays")) throw ParseError("fan file: missing \"rays\"", 0);
    for (const auto& row : j.at("rays")) {
        IVec ray;
        for (const auto& x : row) ray.push_back(Integer(x.get<long>()));
        fan.rays.push_back(std::move(ray));
    }
    if (j.contains("max_cones"))
        for (const auto& cone : j.at("max_cones"))
            fan.max_cones.push_back(cone.get<std::vector<int>>());
    if (j.contains("names")) fan.names = j.at("names").get<std::vector<std::string>>();
    return normalize_fan(std::move(fan));
}

inline Json fan_to_json(const Fan& fan) {
    Json j;
    Json rays = Json::array();
    for (const auto& ray : fan.rays) {
        Json row = Json::array();
        for (const auto& x : ray) row.push_back(x.get_si());
        rays.push_back(row);
    }
    j["rays"] = rays;
    j["max_cones"] = fan.max_cones;
    j["names"] = fan.names.empty() ? fan.ring()->names() : fan.names;
    return j;
}

/// Form files: {"k": 1, "coeffs": {"1": "<poly>", ...}} with 1-based,
/// comma-separated variable indices as keys.
inline KForm form_from_json(const Json& j, const RingPtr& ring) {
    unsigned k = j.at("k").get<unsigned>();
    KForm f(ring, k);
    for (const auto& [key, value] : j.at("coeffs").items()) {
        IndexSet idx;
        std::size_t pos = 0;
        while (pos < key.size()) {
            std::size_t comma = key.find(',', pos);
            std::string part = key.substr(pos, comma == std::string::npos ? comma : comma - pos);
            int one_based = std::stoi(part);
            if (one_based < 1 || static_cast<std::size_t>(one_based) > ring->nvars())
                throw ParseError("form file: index out of range: " + part, 0);
            idx.push_back(static_cast<unsigned>(one_based - 1));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (idx.size() != k) throw ParseError("form file: key arity mismatch: " + key, 0);
        f.add_term(std::move(idx), parse_polynomial(value.get<std::string>(), ring));
    }
    return f;
}

inline Json form_to_json(const KForm& f) {
    Json j;
    j["k"] = f.k();
    Json coeffs = Json::object();
    for (const auto& [idx, c] : f.coefficients()) {
        std::string key;
        for (std::size_t i = 0; i < idx.size(); ++i)
            key += (i ? "," : "") + std::to_string(idx[i] + 1);
        coeffs[key] = c.str();
    }
    j["coeffs"] = coeffs;
    return j;
}

/// Rational map files: components in the source variables plus the degree
/// vector; flags are user assertions recorded into reports.
struct MapFile {
    std::vector<std::string> source_vars;
    std::vector<Polynomial> components;
    std::vector<long> degrees;
    bool flat_pullback = false;
    bool complete = false;
};

inline MapFile map_from_json(const Json& j) {
    MapFile mf;
    mf.source_vars = j.at("source_vars").get<std::vector<std::string>>();
    RingPtr src = Ring::make(mf.source_vars);
    for (const auto& comp : j.at("components"))
        mf.components.push_back(parse_polynomial(comp.get<std::string>(), src));
    if (j.contains("degrees")) mf.degrees = j.at("degrees").get<std::vector<long>>();
    if (j.contains("flags")) {
        const auto& flags = j.at("flags");
        if (flags.contains("flat_pullback")) mf.flat_pullback = flags.at("flat_pullback").get<bool>();
        if (flags.contains("complete")) mf.complete = flags.at("complete").get<bool>();
    }
    return mf;
}

} // namespace torfol
