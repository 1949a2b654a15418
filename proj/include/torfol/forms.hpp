#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "torfol/groebner.hpp"
#include "torfol/poly.hpp"

namespace torfol {

using IndexSet = std::vector<unsigned>; // strictly increasing variable indices

namespace detail {

/// Sorts an index tuple in place; returns the permutation sign, or 0 when
/// an index repeats (the wedge vanishes).
inline int sort_sign(IndexSet& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        unsigned v = idx[i];
        std::size_t j = i;
        while (j > 0 && idx[j - 1] > v) {
            idx[j] = idx[j - 1];
            --j;
            sign = -sign;
        }
        idx[j] = v;
    }
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i] == idx[i - 1]) return 0;
    return sign;
}

} // namespace detail

/// Polynomial vector field sum_i B_i d/dz_i.
class VectorField {
public:
    VectorField() = default;
    VectorField(RingPtr ring, std::vector<Polynomial> coeffs)
        : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != ring_->nvars())
            throw ContextError("vector field needs one coefficient per variable");
    }
    static VectorField zero(const RingPtr& ring) {
        return VectorField(ring, std::vector<Polynomial>(ring->nvars(), Polynomial::zero(ring)));
    }
    static VectorField coordinate(const RingPtr& ring, std::size_t i) {
        VectorField v = zero(ring);
        v.coeffs_[i] = Polynomial::constant(ring, Rational(1));
        return v;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& coefficients() const { return coeffs_; }
    const Polynomial& coefficient(std::size_t i) const { return coeffs_.at(i); }
    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(),
                           [](const Polynomial& p) { return p.is_zero(); });
    }

    VectorField operator+(const VectorField& o) const {
        std::vector<Polynomial> c;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c.push_back(coeffs_[i] + o.coeffs_[i]);
        return VectorField(ring_, std::move(c));
    }
    VectorField operator-(const VectorField& o) const {
        std::vector<Polynomial> c;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c.push_back(coeffs_[i] - o.coeffs_[i]);
        return VectorField(ring_, std::move(c));
    }
    VectorField operator*(const Polynomial& p) const {
        std::vector<Polynomial> c;
        for (const auto& b : coeffs_) c.push_back(b * p);
        return VectorField(ring_, std::move(c));
    }
    VectorField operator*(const Rational& r) const {
        std::vector<Polynomial> c;
        for (const auto& b : coeffs_) c.push_back(b * r);
        return VectorField(ring_, std::move(c));
    }
    bool operator==(const VectorField& o) const { return coeffs_ == o.coeffs_; }

private:
    RingPtr ring_;
    std::vector<Polynomial> coeffs_;
};

/// Graded exterior form with polynomial coefficients, stored sparsely on
/// sorted index sets; antisymmetry is realized by sign bookkeeping.
class KForm {
public:
    KForm() = default;
    KForm(RingPtr ring, unsigned k) : ring_(std::move(ring)), k_(k) {}

    static KForm from_polynomial(const Polynomial& p) {
        KForm f(p.ring(), 0);
        if (!p.is_zero()) f.coeffs_.emplace(IndexSet{}, p);
        return f;
    }
    /// dz_{i1} ^ ... ^ dz_{ik} scaled by a polynomial.
    static KForm monomial_form(const RingPtr& ring, IndexSet idx, const Polynomial& coeff) {
        KForm f(ring, static_cast<unsigned>(idx.size()));
        f.add_term(std::move(idx), coeff);
        return f;
    }
    /// 1-form from a coefficient list: sum_i coeffs[i] dz_i.
    static KForm one_form(const RingPtr& ring, const std::vector<Polynomial>& coeffs) {
        if (coeffs.size() != ring->nvars())
            throw ContextError("one_form needs one coefficient per variable");
        KForm f(ring, 1);
        for (unsigned i = 0; i < coeffs.size(); ++i) f.add_term({i}, coeffs[i]);
        return f;
    }
    /// dz_1 ^ ... ^ dz_m.
    static KForm top_form(const RingPtr& ring) {
        IndexSet all(ring->nvars());
        for (unsigned i = 0; i < all.size(); ++i) all[i] = i;
        return monomial_form(ring, std::move(all), Polynomial::constant(ring, Rational(1)));
    }

    const RingPtr& ring() const { return ring_; }
    unsigned k() const { return k_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<IndexSet, Polynomial>& coefficients() const { return coeffs_; }

    Polynomial coefficient(const IndexSet& idx) const {
        IndexSet sorted = idx;
        int sign = detail::sort_sign(sorted);
        if (sign == 0) return Polynomial::zero(ring_);
        auto it = coeffs_.find(sorted);
        if (it == coeffs_.end()) return Polynomial::zero(ring_);
        return sign > 0 ? it->second : -it->second;
    }

    /// Adds coeff * dz_idx, sorting the tuple and tracking the sign.
    void add_term(IndexSet idx, const Polynomial& coeff) {
        if (idx.size() != k_) throw ArgumentError("index set size does not match form degree");
        for (auto v : idx)
            if (v >= ring_->nvars()) throw ArgumentError("form index out of range");
        if (coeff.is_zero()) return;
        int sign = detail::sort_sign(idx);
        if (sign == 0) return;
        Polynomial value = sign > 0 ? coeff : -coeff;
        auto [it, inserted] = coeffs_.try_emplace(std::move(idx), value);
        if (!inserted) {
            it->second += value;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    KForm operator+(const KForm& o) const {
        check_compat(o);
        KForm r(*this);
        for (const auto& [idx, c] : o.coeffs_) r.add_term(idx, c);
        return r;
    }
    KForm operator-(const KForm& o) const {
        check_compat(o);
        KForm r(*this);
        for (const auto& [idx, c] : o.coeffs_) r.add_term(idx, -c);
        return r;
    }
    KForm operator-() const {
        KForm r(*this);
        for (auto& [idx, c] : r.coeffs_) c = -c;
        return r;
    }
    KForm operator*(const Polynomial& p) const {
        KForm r(ring_, k_);
        for (const auto& [idx, c] : coeffs_) r.add_term(idx, c * p);
        return r;
    }
    KForm operator*(const Rational& c) const {
        return *this * Polynomial::constant(ring_, c);
    }
    bool operator==(const KForm& o) const { return k_ == o.k_ && coeffs_ == o.coeffs_; }
    bool operator!=(const KForm& o) const { return !(*this == o); }

private:
    void check_compat(const KForm& o) const {
        if (k_ != o.k_) throw ArgumentError("form degrees differ");
        if (ring_->nvars() != o.ring_->nvars()) throw ContextError("forms from different rings");
    }

    RingPtr ring_;
    unsigned k_ = 0;
    std::map<IndexSet, Polynomial> coeffs_;
};

inline KForm wedge(const KForm& a, const KForm& b) {
    if (a.ring()->nvars() != b.ring()->nvars()) throw ContextError("wedge: mismatched rings");
    KForm r(a.ring(), a.k() + b.k());
    for (const auto& [ia, ca] : a.coefficients())
        for (const auto& [ib, cb] : b.coefficients()) {
            IndexSet idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            r.add_term(std::move(idx), ca * cb);
        }
    return r;
}

/// Exterior derivative.
inline KForm d(const KForm& a) {
    KForm r(a.ring(), a.k() + 1);
    std::size_t n = a.ring()->nvars();
    for (const auto& [idx, c] : a.coefficients())
        for (unsigned v = 0; v < n; ++v) {
            Polynomial dc = c.partial(v);
            if (dc.is_zero()) continue;
            IndexSet widx;
            widx.reserve(idx.size() + 1);
            widx.push_back(v);
            widx.insert(widx.end(), idx.begin(), idx.end());
            r.add_term(std::move(widx), dc);
        }
    return r;
}

/// Contraction i_Y, an antiderivation of degree -1.
inline KForm contract(const KForm& a, const VectorField& y) {
    if (a.k() == 0) throw ArgumentError("contract: form degree must be at least 1");
    if (a.ring()->nvars() != y.ring()->nvars()) throw ContextError("contract: mismatched rings");
    KForm r(a.ring(), a.k() - 1);
    for (const auto& [idx, c] : a.coefficients())
        for (std::size_t t = 0; t < idx.size(); ++t) {
            const Polynomial& b = y.coefficient(idx[t]);
            if (b.is_zero()) continue;
            IndexSet rest;
            rest.reserve(idx.size() - 1);
            for (std::size_t s = 0; s < idx.size(); ++s)
                if (s != t) rest.push_back(idx[s]);
            Polynomial val = c * b;
            if (t % 2 == 1) val = -val;
            r.add_term(std::move(rest), val);
        }
    return r;
}

/// Cartan's magic formula L_Y = i_Y d + d i_Y.
inline KForm lie_derivative(const KForm& a, const VectorField& y) {
    KForm first = contract(d(a), y);
    if (a.k() == 0) return first;
    return first + d(contract(a, y));
}

/// Ideal of polynomial coefficients of a form.
inline Ideal coefficient_ideal(const KForm& a) {
    std::vector<Polynomial> gens;
    for (const auto& [idx, c] : a.coefficients()) gens.push_back(c);
    return Ideal(a.ring(), std::move(gens));
}

inline Polynomial divergence(const VectorField& y) {
    Polynomial r(y.ring());
    for (std::size_t i = 0; i < y.ring()->nvars(); ++i) r += y.coefficient(i).partial(i);
    return r;
}

} // namespace torfol
