#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "torfol/poly.hpp"

namespace torfol {

/// Total degree of a monomial restricted to positions [lo, hi) of a permutation.
namespace detail {
inline unsigned perm_degree(const Monomial& m, const std::vector<std::size_t>& perm,
                            std::size_t lo, std::size_t hi) {
    unsigned d = 0;
    for (std::size_t i = lo; i < hi; ++i) d += m[perm[i]];
    return d;
}

/// grevlex comparison on positions [lo, hi) of perm; returns -1, 0 or 1.
inline int grevlex_cmp_range(const Monomial& a, const Monomial& b,
                             const std::vector<std::size_t>& perm, std::size_t lo,
                             std::size_t hi) {
    unsigned da = perm_degree(a, perm, lo, hi), db = perm_degree(b, perm, lo, hi);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;) {
        unsigned ea = a[perm[i]], eb = b[perm[i]];
        if (ea != eb) return ea > eb ? -1 : 1;
    }
    return 0;
}
} // namespace detail

/// Monomial order: grevlex, lex, or a two-block elimination order whose
/// first block (the variables to eliminate) is compared first, grevlex
/// within each block. `perm` relabels variables before comparison, so any
/// subset can be moved into the elimination block.
class MonomialOrder {
public:
    enum class Kind { Grevlex, Lex, Block };

    static MonomialOrder grevlex(std::size_t nvars) {
        return MonomialOrder(Kind::Grevlex, nvars, 0);
    }
    static MonomialOrder lex(std::size_t nvars) { return MonomialOrder(Kind::Lex, nvars, 0); }
    /// Eliminates the given variables (they become the leading block).
    static MonomialOrder elimination(std::size_t nvars, const std::vector<std::size_t>& eliminate) {
        MonomialOrder o(Kind::Block, nvars, eliminate.size());
        std::vector<bool> in_first(nvars, false);
        for (auto v : eliminate) in_first[v] = true;
        o.perm_.clear();
        for (std::size_t v = 0; v < nvars; ++v)
            if (in_first[v]) o.perm_.push_back(v);
        for (std::size_t v = 0; v < nvars; ++v)
            if (!in_first[v]) o.perm_.push_back(v);
        return o;
    }

    Kind kind() const { return kind_; }
    std::size_t nvars() const { return perm_.size(); }
    std::size_t split() const { return split_; }

    /// -1 if a < b, 0 if equal, 1 if a > b.
    int cmp(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
        case Kind::Grevlex:
            return detail::grevlex_cmp_range(a, b, perm_, 0, perm_.size());
        case Kind::Lex:
            for (std::size_t i = 0; i < perm_.size(); ++i) {
                unsigned ea = a[perm_[i]], eb = b[perm_[i]];
                if (ea != eb) return ea < eb ? -1 : 1;
            }
            return 0;
        case Kind::Block: {
            int c = detail::grevlex_cmp_range(a, b, perm_, 0, split_);
            if (c != 0) return c;
            return detail::grevlex_cmp_range(a, b, perm_, split_, perm_.size());
        }
        }
        return 0;
    }
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

    std::string key() const {
        std::string k;
        switch (kind_) {
        case Kind::Grevlex: k = "grevlex"; break;
        case Kind::Lex: k = "lex"; break;
        case Kind::Block: k = "block" + std::to_string(split_); break;
        }
        for (auto v : perm_) k += "." + std::to_string(v);
        return k;
    }

private:
    MonomialOrder(Kind kind, std::size_t nvars, std::size_t split)
        : kind_(kind), split_(split), perm_(nvars) {
        std::iota(perm_.begin(), perm_.end(), std::size_t{0});
    }

    Kind kind_;
    std::size_t split_;
    std::vector<std::size_t> perm_;
};

} // namespace torfol
