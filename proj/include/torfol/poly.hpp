#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "torfol/errors.hpp"
#include "torfol/rational.hpp"

namespace torfol {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Variable names are metadata; identity of variables is positional.
class Ring {
public:
    static RingPtr make(std::vector<std::string> names) {
        return std::make_shared<const Ring>(std::move(names));
    }
    static RingPtr make(std::size_t n, const std::string& prefix = "z", int base = 1) {
        std::vector<std::string> names;
        names.reserve(n);
        for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(base + i));
        return make(std::move(names));
    }

    explicit Ring(std::vector<std::string> names) : names_(std::move(names)) {}

    std::size_t nvars() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

private:
    std::vector<std::string> names_;
};

/// Exponent vector; length fixed by the ring context.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<unsigned> exps) : e_(std::move(exps)) {}

    static Monomial var(std::size_t nvars, std::size_t i, unsigned k = 1) {
        Monomial m(nvars);
        m.e_[i] = k;
        return m;
    }

    std::size_t nvars() const { return e_.size(); }
    unsigned operator[](std::size_t i) const { return e_[i]; }
    const std::vector<unsigned>& exponents() const { return e_; }

    unsigned degree() const { return std::accumulate(e_.begin(), e_.end(), 0u); }
    bool is_one() const {
        return std::all_of(e_.begin(), e_.end(), [](unsigned x) { return x == 0; });
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }
    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }
    /// Exact quotient o.divided_by(*this); caller guarantees divisibility.
    Monomial divided_by(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
        return r;
    }
    static bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.e_.size(); ++i)
            if (a.e_[i] > 0 && b.e_[i] > 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

    std::string str(const Ring& ring) const {
        std::string s;
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (e_[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += ring.name(i);
            if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
        }
        return s.empty() ? "1" : s;
    }

private:
    std::vector<unsigned> e_;
};

/// Graded reverse lexicographic "less than": the canonical storage order.
struct GrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        unsigned da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        for (std::size_t i = a.nvars(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] > b[i];
        }
        return false;
    }
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept canonical: no zero coefficients, grevlex-sorted storage.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrevlexLess>;

    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const Rational& c) {
        Polynomial p(ring);
        if (!torfol::is_zero(c)) p.terms_.emplace(Monomial(ring->nvars()), c);
        return p;
    }
    static Polynomial variable(RingPtr ring, std::size_t i) {
        if (i >= ring->nvars()) throw ArgumentError("variable index out of range");
        Polynomial p(ring);
        p.terms_.emplace(Monomial::var(ring->nvars(), i), Rational(1));
        return p;
    }
    static Polynomial term(RingPtr ring, const Monomial& m, const Rational& c) {
        Polynomial p(ring);
        if (!torfol::is_zero(c)) p.terms_.emplace(m, c);
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    std::size_t nvars() const { return ring_ ? ring_->nvars() : 0; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw ArgumentError("polynomial is not constant");
        return terms_.begin()->second;
    }

    /// Total degree; -1 for the zero polynomial.
    int total_degree() const {
        return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree());
    }

    /// Leading term in the canonical (grevlex) order.
    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw ArgumentError("zero polynomial has no leading term");
        return terms_.rbegin()->first;
    }
    const Rational& leading_coefficient() const {
        if (terms_.empty()) throw ArgumentError("zero polynomial has no leading term");
        return terms_.rbegin()->second;
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    Polynomial operator+(const Polynomial& o) const {
        check_context(o);
        Polynomial r(*this);
        r.ring_ = ring_ ? ring_ : o.ring_;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    Polynomial operator-(const Polynomial& o) const {
        check_context(o);
        Polynomial r(*this);
        r.ring_ = ring_ ? ring_ : o.ring_;
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }
    Polynomial operator*(const Polynomial& o) const {
        check_context(o);
        Polynomial r(ring_ ? ring_ : o.ring_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Polynomial operator*(const Rational& c) const {
        Polynomial r(ring_);
        if (torfol::is_zero(c)) return r;
        r.terms_ = terms_;
        for (auto& [m, v] : r.terms_) v *= c;
        return r;
    }
    friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial pow(unsigned k) const {
        Polynomial r = constant(ring_, Rational(1));
        Polynomial base(*this);
        while (k > 0) {
            if (k & 1u) r = r * base;
            k >>= 1u;
            if (k) base = base * base;
        }
        return r;
    }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Ring homomorphism z_i -> images[i]; images live in a common target ring.
    Polynomial substitute(const std::vector<Polynomial>& images) const {
        if (images.size() != nvars())
            throw ContextError("substitute: expected " + std::to_string(nvars()) +
                               " images, got " + std::to_string(images.size()));
        RingPtr target = images.empty() ? ring_ : images.front().ring();
        for (const auto& im : images)
            if (im.nvars() != target->nvars())
                throw ContextError("substitute: images in mismatched rings");
        // Power cache per variable.
        std::vector<std::vector<Polynomial>> powers(images.size());
        auto power = [&](std::size_t i, unsigned k) -> const Polynomial& {
            auto& cache = powers[i];
            if (cache.empty()) cache.push_back(Polynomial::constant(target, Rational(1)));
            while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
            return cache[k];
        };
        Polynomial out(target);
        for (const auto& [m, c] : terms_) {
            Polynomial t = Polynomial::constant(target, c);
            for (std::size_t i = 0; i < images.size(); ++i)
                if (m[i] > 0) t = t * power(i, m[i]);
            out += t;
        }
        return out;
    }

    /// Partial derivative with respect to variable i.
    Polynomial partial(std::size_t i) const {
        if (i >= nvars()) throw ArgumentError("partial: variable index out of range");
        Polynomial r(ring_);
        for (const auto& [m, c] : terms_) {
            unsigned e = m[i];
            if (e == 0) continue;
            std::vector<unsigned> exps = m.exponents();
            exps[i] -= 1;
            r.add_term(Monomial(std::move(exps)), c * Rational(static_cast<long>(e)));
        }
        return r;
    }

    /// Exact quotient by f, or nullopt when f does not divide *this.
    std::optional<Polynomial> divided_by(const Polynomial& f) const {
        check_context(f);
        if (f.is_zero()) throw ArgumentError("division by zero polynomial");
        Polynomial q(ring_), r(*this);
        const Monomial& lmf = f.leading_monomial();
        const Rational& lcf = f.leading_coefficient();
        while (!r.is_zero()) {
            const Monomial& lmr = r.leading_monomial();
            if (!lmf.divides(lmr)) return std::nullopt;
            Monomial m = lmr.divided_by(lmf);
            Rational c = r.leading_coefficient() / lcf;
            q.add_term(m, c);
            r -= Polynomial::term(ring_, m, c) * f;
        }
        return q;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // Canonical printing: grevlex descending.
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            Rational c = it->second;
            bool neg = sgn(c) < 0;
            if (first) {
                if (neg) os << "-";
            } else {
                os << (neg ? " - " : " + ");
            }
            if (neg) c = -c;
            std::string ms = it->first.str(*ring_);
            if (ms == "1") {
                os << to_string(c);
            } else {
                if (c != 1) os << to_string(c) << "*";
                os << ms;
            }
            first = false;
        }
        return os.str();
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (torfol::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (torfol::is_zero(it->second)) terms_.erase(it);
        }
    }

private:
    void check_context(const Polynomial& o) const {
        if (ring_ && o.ring_ && ring_->nvars() != o.ring_->nvars())
            throw ContextError("polynomials from different ring contexts");
    }

    RingPtr ring_;
    TermMap terms_;
};

/// Largest k with f^k | p. Empty result encodes +infinity (p = 0).
inline std::optional<unsigned> mult_along(const Polynomial& p, const Polynomial& f) {
    if (f.is_zero() || f.is_constant())
        throw ArgumentError("mult_along: divisor must be nonzero and non-constant");
    if (p.is_zero()) return std::nullopt;
    unsigned k = 0;
    Polynomial r = p;
    for (;;) {
        auto q = r.divided_by(f);
        if (!q) return k;
        r = *q;
        ++k;
    }
}

/// Homogeneous w.r.t. the standard (total-degree) grading.
inline bool is_homogeneous_std(const Polynomial& p) {
    if (p.is_zero()) return true;
    unsigned d = p.terms().begin()->first.degree();
    for (const auto& [m, c] : p.terms())
        if (m.degree() != d) return false;
    return true;
}

/// First-order extension S[eps]/(eps^2): body + eps * epsilon_part.
class FirstOrderPolynomial {
public:
    FirstOrderPolynomial() = default;
    explicit FirstOrderPolynomial(Polynomial body)
        : body_(std::move(body)), eps_(Polynomial::zero(body_.ring())) {}
    FirstOrderPolynomial(Polynomial body, Polynomial eps)
        : body_(std::move(body)), eps_(std::move(eps)) {}

    const Polynomial& body() const { return body_; }
    const Polynomial& epsilon_part() const { return eps_; }

    FirstOrderPolynomial operator+(const FirstOrderPolynomial& o) const {
        return {body_ + o.body_, eps_ + o.eps_};
    }
    FirstOrderPolynomial operator-(const FirstOrderPolynomial& o) const {
        return {body_ - o.body_, eps_ - o.eps_};
    }
    FirstOrderPolynomial operator-() const { return {-body_, -eps_}; }
    // (a + eps b)(c + eps d) = ac + eps(ad + bc)
    FirstOrderPolynomial operator*(const FirstOrderPolynomial& o) const {
        return {body_ * o.body_, body_ * o.eps_ + eps_ * o.body_};
    }
    FirstOrderPolynomial pow(unsigned k) const {
        FirstOrderPolynomial r(Polynomial::constant(body_.ring(), Rational(1)));
        FirstOrderPolynomial base(*this);
        while (k > 0) {
            if (k & 1u) r = r * base;
            k >>= 1u;
            if (k) base = base * base;
        }
        return r;
    }
    bool operator==(const FirstOrderPolynomial& o) const {
        return body_ == o.body_ && eps_ == o.eps_;
    }

private:
    Polynomial body_, eps_;
};

/// Evaluate p at first-order images (the dual-number substitution).
inline FirstOrderPolynomial substitute_first_order(const Polynomial& p,
                                                   const std::vector<FirstOrderPolynomial>& images) {
    if (images.size() != p.nvars()) throw ContextError("substitute_first_order: arity mismatch");
    RingPtr target = images.empty() ? p.ring() : images.front().body().ring();
    std::vector<std::vector<FirstOrderPolynomial>> powers(images.size());
    auto power = [&](std::size_t i, unsigned k) -> const FirstOrderPolynomial& {
        auto& cache = powers[i];
        if (cache.empty())
            cache.emplace_back(Polynomial::constant(target, Rational(1)));
        while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
        return cache[k];
    };
    FirstOrderPolynomial out(Polynomial::zero(target));
    for (const auto& [m, c] : p.terms()) {
        FirstOrderPolynomial t(Polynomial::constant(target, c));
        for (std::size_t i = 0; i < images.size(); ++i)
            if (m[i] > 0) t = t * power(i, m[i]);
        out = out + t;
    }
    return out;
}

} // namespace torfol
