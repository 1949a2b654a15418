#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "torfol/errors.hpp"
#include "torfol/order.hpp"
#include "torfol/poly.hpp"

namespace torfol {

struct GroebnerOptions {
    unsigned long long step_budget = 10'000'000ULL;
    // Optional speed heuristic: reductions predicted to vanish modulo this
    // prime are deferred in the pair queue. Never affects results; every
    // pair is still reduced exactly. 0 disables.
    unsigned long modp_prime = 0;
};

inline GroebnerOptions& default_groebner_options() {
    static GroebnerOptions opts;
    return opts;
}

namespace gb {

struct Term {
    Monomial m;
    Integer c;
};

struct GPoly {
    std::vector<Term> t; // sorted descending in the active order
    unsigned sugar = 0;
    bool alive = true;
    bool empty() const { return t.empty(); }
    const Monomial& lm() const { return t.front().m; }
    const Integer& lc() const { return t.front().c; }
};

inline void make_primitive(GPoly& p) {
    if (p.t.empty()) return;
    Integer g = 0;
    for (const auto& term : p.t) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), term.c.get_mpz_t());
        if (g == 1) break;
    }
    if (sgn(p.t.front().c) < 0) g = -g;
    if (g != 1)
        for (auto& term : p.t) term.c /= g;
}

inline GPoly to_gpoly(const Polynomial& p, const MonomialOrder& order) {
    GPoly g;
    Integer den = 1;
    for (const auto& [m, c] : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    g.t.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) {
        Rational scaled = c * Rational(den);
        g.t.push_back({m, scaled.get_num()});
    }
    std::sort(g.t.begin(), g.t.end(),
              [&order](const Term& a, const Term& b) { return order.cmp(a.m, b.m) > 0; });
    make_primitive(g);
    g.sugar = p.is_zero() ? 0 : static_cast<unsigned>(p.total_degree());
    return g;
}

/// Monic rational polynomial from an engine polynomial.
inline Polynomial to_polynomial(const GPoly& g, const RingPtr& ring) {
    Polynomial p(ring);
    if (g.empty()) return p;
    Rational inv = Rational(1) / Rational(g.lc());
    for (const auto& term : g.t) p.add_term(term.m, Rational(term.c) * inv);
    return p;
}

/// Polynomials with coefficients mod p, mirroring GPoly term layout; used
/// only by the optional pair-deferral heuristic.
struct FpPoly {
    std::vector<std::pair<Monomial, unsigned long>> t;
    bool valid = true;
};

class Engine {
public:
    Engine(MonomialOrder order, GroebnerOptions opts)
        : order_(std::move(order)), opts_(opts) {}

    const MonomialOrder& order() const { return order_; }

    void tick(unsigned long long n = 1) {
        steps_ += n;
        if (steps_ > opts_.step_budget)
            throw ResourceError("groebner step budget exceeded (" +
                                std::to_string(opts_.step_budget) + " reduction steps)");
    }

    /// result = ca * a - cb * (m * b); both inputs sorted descending.
    GPoly sub_mul(const GPoly& a, const Integer& ca, const GPoly& b, const Integer& cb,
                  const Monomial& m) {
        GPoly r;
        r.t.reserve(a.t.size() + b.t.size());
        std::size_t i = 0, j = 0;
        while (i < a.t.size() || j < b.t.size()) {
            if (j == b.t.size()) {
                r.t.push_back({a.t[i].m, ca * a.t[i].c});
                ++i;
                continue;
            }
            Monomial mb = b.t[j].m * m;
            if (i == a.t.size()) {
                r.t.push_back({std::move(mb), -cb * b.t[j].c});
                ++j;
                continue;
            }
            int c = order_.cmp(a.t[i].m, mb);
            if (c > 0) {
                r.t.push_back({a.t[i].m, ca * a.t[i].c});
                ++i;
            } else if (c < 0) {
                r.t.push_back({std::move(mb), -cb * b.t[j].c});
                ++j;
            } else {
                Integer v = ca * a.t[i].c - cb * b.t[j].c;
                if (v != 0) r.t.push_back({a.t[i].m, std::move(v)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    /// Full normal form of f against the alive members of basis.
    GPoly normal_form(GPoly f, const std::vector<GPoly>& basis) {
        GPoly done;
        done.sugar = f.sugar;
        unsigned since_strip = 0;
        while (!f.empty()) {
            const Monomial& lm = f.lm();
            const GPoly* red = nullptr;
            for (const auto& g : basis) {
                if (!g.alive || g.empty()) continue;
                if (g.lm().divides(lm)) {
                    red = &g;
                    break;
                }
            }
            if (!red) {
                done.t.push_back(f.t.front());
                f.t.erase(f.t.begin());
                continue;
            }
            tick();
            Integer d;
            mpz_gcd(d.get_mpz_t(), f.lc().get_mpz_t(), red->lc().get_mpz_t());
            Integer ca = red->lc() / d;
            Integer cb = f.lc() / d;
            if (sgn(ca) < 0) {
                ca = -ca;
                cb = -cb;
            }
            Monomial shift = lm.divided_by(red->lm());
            done.sugar = std::max(done.sugar, red->sugar + shift.degree());
            if (ca != 1)
                for (auto& term : done.t) term.c *= ca;
            f = sub_mul(f, ca, *red, cb, shift);
            if (++since_strip >= 64) {
                strip_content(done, f);
                since_strip = 0;
            }
        }
        f.t = std::move(done.t);
        f.sugar = done.sugar;
        make_primitive(f);
        return f;
    }

    std::vector<GPoly> buchberger(std::vector<GPoly> input) {
        polys_.clear();
        pairs_.clear();
        fp_.clear();
        for (auto& g : input) {
            if (g.empty()) continue;
            make_primitive(g);
            GPoly nf = normal_form(std::move(g), polys_);
            if (!nf.empty()) add_poly(std::move(nf));
        }
        // A pair whose S-polynomial is predicted to vanish mod p is pushed
        // here and processed only once the main queue drains.
        std::vector<std::pair<std::size_t, std::size_t>> deferred;
        while (!pairs_.empty() || !deferred.empty()) {
            Pair pr;
            if (!pairs_.empty()) {
                pr = *pairs_.begin();
                pairs_.erase(pairs_.begin());
                if (opts_.modp_prime != 0 && !pairs_.empty() && predicted_zero(pr)) {
                    deferred.emplace_back(pr.i, pr.j);
                    continue;
                }
            } else {
                auto [i, j] = deferred.back();
                deferred.pop_back();
                pr = make_pair(i, j);
            }
            GPoly s = spoly(polys_[pr.i], polys_[pr.j], pr);
            s = normal_form(std::move(s), polys_);
            if (!s.empty()) add_poly(std::move(s));
        }
        return reduced_basis();
    }

private:
    struct Pair {
        std::size_t i = 0, j = 0;
        Monomial lcm;
        unsigned deg = 0;
        unsigned sugar = 0;
    };
    struct PairLess {
        const MonomialOrder* order;
        bool operator()(const Pair& a, const Pair& b) const {
            if (a.deg != b.deg) return a.deg < b.deg;
            if (a.sugar != b.sugar) return a.sugar < b.sugar;
            int c = order->cmp(a.lcm, b.lcm);
            if (c != 0) return c < 0;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        }
    };

    static void strip_content(GPoly& done, GPoly& rest) {
        Integer g = 0;
        for (const auto& t : done.t) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
            if (g == 1) return;
        }
        for (const auto& t : rest.t) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
            if (g == 1) return;
        }
        if (g <= 1) return;
        for (auto& t : done.t) t.c /= g;
        for (auto& t : rest.t) t.c /= g;
    }

    GPoly spoly(const GPoly& f, const GPoly& g, const Pair& pr) {
        tick();
        Integer d;
        mpz_gcd(d.get_mpz_t(), f.lc().get_mpz_t(), g.lc().get_mpz_t());
        Integer cf = g.lc() / d;
        Integer cg = f.lc() / d;
        GPoly mf;
        mf.t.reserve(f.t.size());
        Monomial shf = pr.lcm.divided_by(f.lm());
        for (const auto& term : f.t) mf.t.push_back({term.m * shf, term.c});
        GPoly s = sub_mul(mf, cf, g, cg, pr.lcm.divided_by(g.lm()));
        s.sugar = pr.sugar;
        return s;
    }

    Pair make_pair(std::size_t i, std::size_t j) {
        Pair p;
        p.i = std::min(i, j);
        p.j = std::max(i, j);
        p.lcm = Monomial::lcm(polys_[i].lm(), polys_[j].lm());
        p.deg = p.lcm.degree();
        p.sugar = std::max(polys_[p.i].sugar + p.lcm.divided_by(polys_[p.i].lm()).degree(),
                           polys_[p.j].sugar + p.lcm.divided_by(polys_[p.j].lm()).degree());
        return p;
    }

    /// Gebauer-Moller pair update on arrival of polys_[h].
    void add_poly(GPoly g) {
        polys_.push_back(std::move(g));
        std::size_t h = polys_.size() - 1;
        if (opts_.modp_prime != 0) push_fp(polys_[h]);

        // Stage 1: filter the new pairs among themselves. A pair survives if
        // its leads are coprime (it then still serves as a dominator) or no
        // other surviving/undecided pair's lcm divides its lcm.
        std::vector<Pair> cpairs;
        for (std::size_t i = 0; i < h; ++i)
            if (polys_[i].alive) cpairs.push_back(make_pair(i, h));
        std::vector<bool> dropped(cpairs.size(), false);
        for (std::size_t a = 0; a < cpairs.size(); ++a) {
            bool coprime_a = Monomial::coprime(polys_[cpairs[a].i].lm(), polys_[h].lm());
            if (coprime_a) continue;
            for (std::size_t b = 0; b < cpairs.size(); ++b) {
                if (b == a || (b < a && dropped[b])) continue;
                if (cpairs[b].lcm.divides(cpairs[a].lcm)) {
                    dropped[a] = true;
                    break;
                }
            }
        }
        // Stage 2: product criterion.
        std::vector<Pair> fresh;
        for (std::size_t a = 0; a < cpairs.size(); ++a) {
            if (dropped[a]) continue;
            if (!Monomial::coprime(polys_[cpairs[a].i].lm(), polys_[h].lm()))
                fresh.push_back(cpairs[a]);
        }
        // Stage 3: prune old pairs via the chain criterion.
        for (auto it = pairs_.begin(); it != pairs_.end();) {
            const Pair& p = *it;
            if (polys_[h].lm().divides(p.lcm) &&
                Monomial::lcm(polys_[p.i].lm(), polys_[h].lm()) != p.lcm &&
                Monomial::lcm(polys_[p.j].lm(), polys_[h].lm()) != p.lcm)
                it = pairs_.erase(it);
            else
                ++it;
        }
        for (auto& p : fresh) pairs_.insert(p);
        // Stage 4: retire basis members whose lead became divisible.
        for (std::size_t i = 0; i < h; ++i)
            if (polys_[i].alive && polys_[h].lm().divides(polys_[i].lm())) polys_[i].alive = false;
    }

    std::vector<GPoly> reduced_basis() {
        // Minimalize: drop members whose lead is divisible by another's.
        std::vector<std::size_t> alive;
        for (std::size_t i = 0; i < polys_.size(); ++i)
            if (polys_[i].alive && !polys_[i].empty()) alive.push_back(i);
        for (auto i : alive)
            for (auto j : alive) {
                if (i == j || !polys_[i].alive || !polys_[j].alive) continue;
                if (polys_[j].lm().divides(polys_[i].lm()) &&
                    (polys_[j].lm() != polys_[i].lm() || j < i))
                    polys_[i].alive = false;
            }
        std::vector<std::size_t> minimal;
        for (auto i : alive)
            if (polys_[i].alive) minimal.push_back(i);
        // Leads now pairwise non-divisible; one tail-reduction pass suffices.
        std::vector<GPoly> out;
        for (auto idx : minimal) {
            GPoly f = polys_[idx];
            polys_[idx].alive = false;
            f = normal_form(std::move(f), polys_);
            polys_[idx].alive = true;
            out.push_back(std::move(f));
        }
        std::sort(out.begin(), out.end(),
                  [this](const GPoly& a, const GPoly& b) { return order_.cmp(a.lm(), b.lm()) < 0; });
        return out;
    }

    // ---- mod-p shadow arithmetic (heuristic only) ----

    void push_fp(const GPoly& g) {
        unsigned long p = opts_.modp_prime;
        FpPoly f;
        for (const auto& term : g.t) {
            Integer r = term.c % p;
            if (r < 0) r += p;
            unsigned long v = mpz_get_ui(r.get_mpz_t());
            if (v != 0) f.t.emplace_back(term.m, v);
        }
        if (f.t.empty() || order_.cmp(f.t.front().first, g.lm()) != 0) f.valid = false;
        fp_.push_back(std::move(f));
    }

    bool predicted_zero(const Pair& pr) {
        unsigned long p = opts_.modp_prime;
        if (!fp_[pr.i].valid || !fp_[pr.j].valid) return false;
        auto mulmod = [p](unsigned long a, unsigned long b) {
            return static_cast<unsigned long>((__uint128_t)a * b % p);
        };
        auto inv = [&](unsigned long a) {
            long long t = 0, newt = 1;
            long long r = static_cast<long long>(p), newr = static_cast<long long>(a);
            while (newr != 0) {
                long long q = r / newr;
                std::swap(t -= q * newt, newt);
                std::swap(r -= q * newr, newr);
            }
            if (t < 0) t += static_cast<long long>(p);
            return static_cast<unsigned long>(t);
        };
        // S-polynomial mod p.
        const FpPoly& f = fp_[pr.i];
        const FpPoly& g = fp_[pr.j];
        Monomial shf = pr.lcm.divided_by(polys_[pr.i].lm());
        Monomial shg = pr.lcm.divided_by(polys_[pr.j].lm());
        unsigned long cf = g.t.front().second, cg = f.t.front().second;
        std::map<Monomial, unsigned long, GrevlexLess> acc;
        auto add = [&](const Monomial& m, unsigned long v) {
            auto [it, ins] = acc.try_emplace(m, v);
            if (!ins) {
                it->second = (it->second + v) % p;
                if (it->second == 0) acc.erase(it);
            }
        };
        for (const auto& [m, c] : f.t) add(m * shf, mulmod(c, cf));
        for (const auto& [m, c] : g.t) add(m * shg, mulmod(c, p - cg));
        // Reduce mod p against valid shadows (budget applies here too).
        std::vector<std::pair<Monomial, unsigned long>> work(acc.begin(), acc.end());
        auto topcmp = [this](const std::pair<Monomial, unsigned long>& a,
                             const std::pair<Monomial, unsigned long>& b) {
            return order_.cmp(a.first, b.first) > 0;
        };
        std::sort(work.begin(), work.end(), topcmp);
        unsigned guard = 0;
        while (!work.empty()) {
            if (++guard > 4096) return false;
            const Monomial& lm = work.front().first;
            const FpPoly* red = nullptr;
            std::size_t ri = 0;
            for (std::size_t i = 0; i < polys_.size(); ++i) {
                if (!polys_[i].alive || !fp_[i].valid || fp_[i].t.empty()) continue;
                if (fp_[i].t.front().first.divides(lm)) {
                    red = &fp_[i];
                    ri = i;
                    break;
                }
            }
            if (!red) return false; // leading term irreducible: nonzero
            (void)ri;
            unsigned long c = mulmod(work.front().second, inv(red->t.front().second));
            Monomial shift = lm.divided_by(red->t.front().first);
            std::map<Monomial, unsigned long, GrevlexLess> acc2;
            for (auto& [m, v] : work) acc2[m] = v;
            for (const auto& [m, v] : red->t) {
                Monomial mm = m * shift;
                auto [it, ins] = acc2.try_emplace(mm, (p - mulmod(c, v)) % p);
                if (!ins) {
                    it->second = (it->second + p - mulmod(c, v)) % p;
                }
                if (it->second == 0) acc2.erase(mm);
            }
            work.assign(acc2.begin(), acc2.end());
            std::sort(work.begin(), work.end(), topcmp);
        }
        return true;
    }

    MonomialOrder order_;
    GroebnerOptions opts_;
    unsigned long long steps_ = 0;
    std::vector<GPoly> polys_;
    std::set<Pair, PairLess> pairs_{PairLess{&order_}};
    std::vector<FpPoly> fp_;
};

} // namespace gb

/// Ideal with generator list and a cache of reduced Groebner bases.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> gens)
        : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
        for (auto& g : gens)
            if (!g.is_zero()) gens_.push_back(std::move(g));
    }
    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    /// Reduced Groebner basis (monic generators), cached per order.
    const std::vector<Polynomial>& basis(const MonomialOrder& order) const {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto key = order.key();
        auto it = cache_->bases.find(key);
        if (it != cache_->bases.end()) return it->second;
        gb::Engine engine(order, default_groebner_options());
        std::vector<gb::GPoly> input;
        for (const auto& g : gens_) input.push_back(gb::to_gpoly(g, order));
        std::vector<gb::GPoly> reduced = engine.buchberger(std::move(input));
        std::vector<Polynomial> out;
        for (const auto& g : reduced) out.push_back(gb::to_polynomial(g, ring_));
        return cache_->bases.emplace(key, std::move(out)).first->second;
    }
    const std::vector<Polynomial>& basis() const { return basis(MonomialOrder::grevlex(ring_->nvars())); }

private:
    struct Cache {
        std::mutex mu;
        std::map<std::string, std::vector<Polynomial>> bases;
    };
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

inline Ideal groebner_basis(const Ideal& ideal, const MonomialOrder& order) {
    return Ideal(ideal.ring(), ideal.basis(order));
}

/// Normal form of f against the reduced basis of I.
inline Polynomial normal_form(const Polynomial& f, const Ideal& ideal, const MonomialOrder& order) {
    gb::Engine engine(order, default_groebner_options());
    std::vector<gb::GPoly> basis;
    for (const auto& g : ideal.basis(order)) basis.push_back(gb::to_gpoly(g, order));
    gb::GPoly nf = engine.normal_form(gb::to_gpoly(f, order), basis);
    return gb::to_polynomial(nf, f.ring());
}

inline bool member(const Polynomial& f, const Ideal& ideal) {
    if (f.is_zero()) return true;
    if (ideal.is_zero_ideal()) return false;
    MonomialOrder order = MonomialOrder::grevlex(ideal.ring()->nvars());
    return normal_form(f, ideal, order).is_zero();
}

inline bool contained_in(const Ideal& a, const Ideal& b) {
    for (const auto& g : a.generators())
        if (!member(g, b)) return false;
    return true;
}

inline bool ideal_equal(const Ideal& a, const Ideal& b) {
    return contained_in(a, b) && contained_in(b, a);
}

inline bool contains_one(const Ideal& ideal) {
    if (ideal.is_zero_ideal()) return false;
    return member(Polynomial::constant(ideal.ring(), Rational(1)), ideal);
}

namespace detail {

inline RingPtr extended_ring(const RingPtr& ring, const std::string& extra) {
    std::vector<std::string> names = ring->names();
    names.push_back(extra);
    return Ring::make(std::move(names));
}

inline Polynomial lift_to(const Polynomial& p, const RingPtr& big) {
    Polynomial out(big);
    for (const auto& [m, c] : p.terms()) {
        std::vector<unsigned> e = m.exponents();
        e.resize(big->nvars(), 0);
        out.add_term(Monomial(std::move(e)), c);
    }
    return out;
}

inline Polynomial restrict_to(const Polynomial& p, const RingPtr& small) {
    Polynomial out(small);
    for (const auto& [m, c] : p.terms()) {
        std::vector<unsigned> e = m.exponents();
        for (std::size_t i = small->nvars(); i < e.size(); ++i)
            if (e[i] != 0) throw ArgumentError("restrict_to: polynomial uses auxiliary variable");
        e.resize(small->nvars());
        out.add_term(Monomial(std::move(e)), c);
    }
    return out;
}

} // namespace detail

/// I cap J via the auxiliary-variable trick: eliminate t from t*I + (1-t)*J.
inline Ideal intersect(const Ideal& a, const Ideal& b) {
    if (a.is_zero_ideal() || b.is_zero_ideal()) return Ideal::zero(a.ring());
    RingPtr ring = a.ring();
    RingPtr big = detail::extended_ring(ring, "@t");
    std::size_t tvar = big->nvars() - 1;
    Polynomial t = Polynomial::variable(big, tvar);
    Polynomial one = Polynomial::constant(big, Rational(1));
    std::vector<Polynomial> gens;
    for (const auto& g : a.generators()) gens.push_back(t * detail::lift_to(g, big));
    for (const auto& g : b.generators()) gens.push_back((one - t) * detail::lift_to(g, big));
    Ideal extended(big, std::move(gens));
    MonomialOrder order = MonomialOrder::elimination(big->nvars(), {tvar});
    std::vector<Polynomial> kept;
    for (const auto& g : extended.basis(order)) {
        bool uses_t = false;
        for (const auto& [m, c] : g.terms())
            if (m[tvar] != 0) uses_t = true;
        if (!uses_t) kept.push_back(detail::restrict_to(g, ring));
    }
    return Ideal(ring, std::move(kept));
}

/// (I : f) = (I cap <f>) / f for a single nonzero f.
inline Ideal quotient_single(const Ideal& ideal, const Polynomial& f) {
    if (f.is_zero()) throw ArgumentError("quotient by the zero polynomial");
    if (ideal.is_zero_ideal()) return Ideal::zero(ideal.ring());
    Ideal inter = intersect(ideal, Ideal(ideal.ring(), {f}));
    std::vector<Polynomial> gens;
    for (const auto& g : inter.generators()) {
        auto q = g.divided_by(f);
        if (!q)
            throw Error("internal: intersection with principal ideal not divisible by generator");
        gens.push_back(std::move(*q));
    }
    return Ideal(ideal.ring(), std::move(gens));
}

/// Ideal quotient (I : J), intersected over the generators of J.
inline Ideal quotient(const Ideal& ideal, const Ideal& j) {
    if (j.is_zero_ideal()) throw ArgumentError("quotient by the zero ideal");
    bool first = true;
    Ideal acc;
    for (const auto& f : j.generators()) {
        Ideal q = quotient_single(ideal, f);
        if (first) {
            acc = std::move(q);
            first = false;
        } else {
            acc = intersect(acc, q);
        }
    }
    return acc;
}

/// Saturation (I : J^infinity) by iterated quotient until stabilization.
inline Ideal saturate(const Ideal& ideal, const Ideal& j) {
    Ideal current = ideal;
    for (;;) {
        Ideal next = quotient(current, j);
        if (ideal_equal(next, current)) return current;
        current = std::move(next);
    }
}

/// I cap k[keep] computed with a block elimination order.
inline Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& keep) {
    if (keep.empty()) throw ArgumentError("eliminate: keep set must be nonempty");
    std::size_t n = ideal.ring()->nvars();
    std::vector<bool> kept(n, false);
    for (auto v : keep) kept.at(v) = true;
    std::vector<std::size_t> drop;
    for (std::size_t v = 0; v < n; ++v)
        if (!kept[v]) drop.push_back(v);
    if (drop.empty()) return ideal;
    MonomialOrder order = MonomialOrder::elimination(n, drop);
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.basis(order)) {
        bool ok = true;
        for (const auto& [m, c] : g.terms())
            for (auto v : drop)
                if (m[v] != 0) ok = false;
        if (ok) gens.push_back(g);
    }
    return Ideal(ideal.ring(), std::move(gens));
}

/// True iff f^k lies in I for some k (Rabinowitsch trick).
inline bool radical_member(const Polynomial& f, const Ideal& ideal) {
    if (f.is_zero()) return true;
    RingPtr big = detail::extended_ring(ideal.ring(), "@t");
    std::size_t tvar = big->nvars() - 1;
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(detail::lift_to(g, big));
    gens.push_back(Polynomial::constant(big, Rational(1)) -
                   Polynomial::variable(big, tvar) * detail::lift_to(f, big));
    return contains_one(Ideal(big, std::move(gens)));
}

/// Krull dimension of the affine vanishing set, computed combinatorially
/// from the leading-term ideal (maximal independent variable sets).
inline int dimension(const Ideal& ideal) {
    std::size_t n = ideal.ring()->nvars();
    if (ideal.is_zero_ideal()) return static_cast<int>(n);
    if (contains_one(ideal)) return -1;
    std::vector<unsigned long> supports;
    for (const auto& g : ideal.basis()) {
        unsigned long mask = 0;
        const Monomial& lm = g.leading_monomial();
        for (std::size_t v = 0; v < n; ++v)
            if (lm[v] > 0) mask |= 1ul << v;
        supports.push_back(mask);
    }
    int best = 0;
    for (unsigned long s = 0; s < (1ul << n); ++s) {
        bool independent = true;
        for (auto m : supports)
            if ((m & ~s) == 0) {
                independent = false;
                break;
            }
        if (independent) best = std::max(best, __builtin_popcountl(s));
    }
    return best;
}

inline int codimension(const Ideal& ideal) {
    return static_cast<int>(ideal.ring()->nvars()) - dimension(ideal);
}

/// Fast containment in the monomial prime generated by the given variables.
inline bool contained_in_monomial_prime(const Ideal& ideal, const std::vector<std::size_t>& vars) {
    for (const auto& g : ideal.generators()) {
        for (const auto& [m, c] : g.terms()) {
            bool divisible = false;
            for (auto v : vars)
                if (m[v] > 0) {
                    divisible = true;
                    break;
                }
            if (!divisible) return false;
        }
    }
    return true;
}

} // namespace torfol
