#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "torfol/forms.hpp"
#include "torfol/groebner.hpp"
#include "torfol/intmat.hpp"
#include "torfol/linalg.hpp"

namespace torfol {

/// Fan of a simplicial complete toric variety: primitive-by-convention ray
/// generators and maximal cones as ray-index sets. Non-primitive rays are
/// tolerated (stacky presentations of fake weighted projective spaces use
/// them) and reported by validate().
struct Fan {
    IMat rays;                              // m rows in Z^q
    std::vector<std::vector<int>> max_cones; // 0-based ray indices
    std::vector<std::string> names;          // variable names, z1..zm when empty
    std::optional<std::vector<int>> surface_order; // counter-clockwise ray order (q = 2)

    std::size_t ray_count() const { return rays.size(); }
    std::size_t dim() const { return rays.empty() ? 0 : rays[0].size(); }

    RingPtr ring() const {
        if (!names.empty()) return Ring::make(names);
        return Ring::make(ray_count(), "z", 1);
    }
};

struct FanReport {
    bool ok = true;
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
};

namespace detail {

inline Integer ivec_gcd(const IVec& v) {
    Integer g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

/// Counter-clockwise order of 2d rays by angle, starting from the positive
/// x-axis. Exact integer comparisons, no floating point.
inline std::vector<int> ccw_order(const IMat& rays) {
    auto half = [](const IVec& v) {
        // 0: angle in [0, pi), 1: [pi, 2 pi)
        if (v[1] > 0 || (v[1] == 0 && v[0] > 0)) return 0;
        return 1;
    };
    std::vector<int> idx(rays.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        int ha = half(rays[a]), hb = half(rays[b]);
        if (ha != hb) return ha < hb;
        Integer cross = rays[a][0] * rays[b][1] - rays[a][1] * rays[b][0];
        return cross > 0;
    });
    return idx;
}

} // namespace detail

/// Structural validation; primitivity violations are warnings, not errors.
inline FanReport validate_fan(const Fan& fan) {
    FanReport rep;
    std::size_t q = fan.dim(), m = fan.ray_count();
    if (m == 0 || q == 0) {
        rep.ok = false;
        rep.errors.push_back("fan has no rays");
        return rep;
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (fan.rays[i].size() != q) {
            rep.ok = false;
            rep.errors.push_back("ray " + std::to_string(i + 1) + " has wrong dimension");
        }
        Integer g = detail::ivec_gcd(fan.rays[i]);
        if (g == 0) {
            rep.ok = false;
            rep.errors.push_back("ray " + std::to_string(i + 1) + " is zero");
        } else if (g != 1) {
            rep.warnings.push_back("ray " + std::to_string(i + 1) +
                                   " is non-primitive (stacky presentation)");
        }
    }
    if (!rep.ok) return rep;
    if (smith_normal_form(fan.rays).rank != q) {
        rep.ok = false;
        rep.errors.push_back("rays do not span the ambient lattice");
    }
    for (const auto& cone : fan.max_cones) {
        if (cone.size() != q) {
            rep.ok = false;
            rep.errors.push_back("maximal cone with wrong number of rays (non-simplicial?)");
            continue;
        }
        IMat sub;
        for (int i : cone) sub.push_back(fan.rays.at(i));
        if (smith_normal_form(sub).rank != q) {
            rep.ok = false;
            rep.errors.push_back("maximal cone has linearly dependent rays");
        }
    }
    return rep;
}

/// Fills in surface_order (q = 2) and, when max_cones is empty, the
/// consecutive cones of a complete surface fan.
inline Fan normalize_fan(Fan fan) {
    if (fan.dim() == 2) {
        if (!fan.surface_order) fan.surface_order = detail::ccw_order(fan.rays);
        if (fan.max_cones.empty()) {
            const auto& ord = *fan.surface_order;
            for (std::size_t i = 0; i < ord.size(); ++i)
                fan.max_cones.push_back({ord[i], ord[(i + 1) % ord.size()]});
        }
    }
    if (fan.dim() == 1 && fan.max_cones.empty())
        for (std::size_t i = 0; i < fan.ray_count(); ++i)
            fan.max_cones.push_back({static_cast<int>(i)});
    FanReport rep = validate_fan(fan);
    if (!rep.ok) throw FanError("invalid fan: " + rep.errors.front());
    return fan;
}

/// Degree in Cl(X) under a fixed isomorphism: a free part in Z^s plus
/// residues modulo the torsion orders.
struct DegreeVector {
    std::vector<Integer> free;
    std::vector<long> torsion;

    bool operator==(const DegreeVector& o) const { return free == o.free && torsion == o.torsion; }
    bool operator!=(const DegreeVector& o) const { return !(*this == o); }

    std::string str() const {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < free.size(); ++i) os << (i ? "," : "") << free[i].get_str();
        for (std::size_t i = 0; i < torsion.size(); ++i) os << "," << torsion[i];
        os << ")";
        return os.str();
    }
};

struct GradingData {
    std::size_t m = 0, q = 0, s = 0;
    std::vector<long> torsion_orders;    // one entry per torsion coordinate
    IMat relation_basis;                 // s x m, rows a^j with sum_i a^j_i v_i = 0
    std::vector<DegreeVector> degrees;   // deg(z_i)
    RingPtr ring;                        // Cox ring
    IVec theta;                          // positive functional on free degrees

    DegreeVector zero() const {
        return DegreeVector{IVec(s, Integer(0)), std::vector<long>(torsion_orders.size(), 0)};
    }
    DegreeVector add(const DegreeVector& a, const DegreeVector& b) const {
        DegreeVector r = a;
        for (std::size_t i = 0; i < s; ++i) r.free[i] += b.free[i];
        for (std::size_t i = 0; i < torsion_orders.size(); ++i)
            r.torsion[i] = (r.torsion[i] + b.torsion[i]) % torsion_orders[i];
        return r;
    }
    DegreeVector sub(const DegreeVector& a, const DegreeVector& b) const {
        DegreeVector r = a;
        for (std::size_t i = 0; i < s; ++i) r.free[i] -= b.free[i];
        for (std::size_t i = 0; i < torsion_orders.size(); ++i)
            r.torsion[i] =
                ((r.torsion[i] - b.torsion[i]) % torsion_orders[i] + torsion_orders[i]) %
                torsion_orders[i];
        return r;
    }
    DegreeVector scale(const DegreeVector& a, long k) const {
        DegreeVector r = a;
        for (std::size_t i = 0; i < s; ++i) r.free[i] *= k;
        for (std::size_t i = 0; i < torsion_orders.size(); ++i) {
            long o = torsion_orders[i];
            r.torsion[i] = ((a.torsion[i] * (k % o)) % o + o) % o;
        }
        return r;
    }
    DegreeVector monomial_degree(const Monomial& mono) const {
        DegreeVector r = zero();
        for (std::size_t i = 0; i < m; ++i) {
            if (mono[i] == 0) continue;
            r = add(r, scale(degrees[i], static_cast<long>(mono[i])));
        }
        return r;
    }
    /// -K_X = sum of the variable degrees.
    DegreeVector anticanonical() const {
        DegreeVector r = zero();
        for (const auto& d : degrees) r = add(r, d);
        return r;
    }
    Integer theta_value(const DegreeVector& d) const {
        Integer v = 0;
        for (std::size_t i = 0; i < s; ++i) v += theta[i] * d.free[i];
        return v;
    }
};

namespace detail {

inline long mod_inverse(long a, long n) {
    long t = 0, newt = 1, r = n, newr = ((a % n) + n) % n;
    while (newr != 0) {
        long quot = r / newr;
        std::swap(t -= quot * newt, newt);
        std::swap(r -= quot * newr, newr);
    }
    if (r != 1) throw ArgumentError("element not invertible");
    return ((t % n) + n) % n;
}

/// Positive functional theta with theta . f_i > 0 for all free degree
/// columns; exists because the degrees span a pointed cone. Found by a
/// deterministic expanding search.
inline IVec find_positive_functional(const IMat& relation_basis) {
    std::size_t s = relation_basis.size();
    std::size_t m = s ? relation_basis[0].size() : 0;
    auto works = [&](const IVec& theta) {
        for (std::size_t i = 0; i < m; ++i) {
            Integer v = 0;
            for (std::size_t j = 0; j < s; ++j) v += theta[j] * relation_basis[j][i];
            if (v <= 0) return false;
        }
        return true;
    };
    for (long bound = 1; bound <= 64; bound *= 2) {
        IVec theta(s, Integer(-bound));
        for (;;) {
            if (works(theta)) return theta;
            std::size_t pos = 0;
            while (pos < s) {
                theta[pos] += 1;
                if (theta[pos] <= bound) break;
                theta[pos] = -bound;
                ++pos;
            }
            if (pos == s) break;
        }
    }
    throw FanError("no positive grading functional found; degree cone not pointed");
}

struct TorsionFactor {
    long order;
    std::vector<long> coords; // one residue per variable
};

/// Normalizes the torsion presentation deterministically: shear the factor
/// so the variable of largest free degree gets coordinate zero, then scale
/// by a unit so the first nonzero coordinate equals its gcd with the order.
inline void gauge_fix(TorsionFactor& f, const IMat& relation_basis, const IVec& theta) {
    long c = f.order;
    std::size_t m = f.coords.size();
    std::size_t s = relation_basis.size();
    // shear target: variable with maximal theta-degree, ties to the later one
    std::size_t target = 0;
    Integer best = -1;
    for (std::size_t i = 0; i < m; ++i) {
        Integer v = 0;
        for (std::size_t j = 0; j < s; ++j) v += theta[j] * relation_basis[j][i];
        if (v >= best) {
            best = v;
            target = i;
        }
    }
    if (f.coords[target] != 0) {
        for (std::size_t j = 0; j < s; ++j) {
            long k = static_cast<long>(mpz_fdiv_ui(relation_basis[j][target].get_mpz_t(),
                                                   static_cast<unsigned long>(c)));
            long g = std::gcd(k == 0 ? c : k, c);
            if (f.coords[target] % g != 0) continue;
            if (k == 0) continue;
            long lambda =
                (f.coords[target] / g) * mod_inverse(k / g, c / g) % (c / g);
            for (std::size_t i = 0; i < m; ++i) {
                long ki = static_cast<long>(mpz_fdiv_ui(relation_basis[j][i].get_mpz_t(),
                                                        static_cast<unsigned long>(c)));
                f.coords[i] = ((f.coords[i] - lambda * ki) % c + c) % c;
            }
            break;
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (f.coords[i] == 0) continue;
        long g = std::gcd(f.coords[i], c);
        long v = f.coords[i] / g;
        long u = (c / g == 1) ? 1 : mod_inverse(v % (c / g), c / g);
        while (std::gcd(u, c) != 1) u += c / g;
        for (std::size_t t = 0; t < m; ++t) f.coords[t] = (f.coords[t] * u) % c;
        break;
    }
}

} // namespace detail

/// Class group of the fan via the Smith normal form of the ray matrix,
/// with the relation basis Hermite-normalized and the torsion coordinates
/// gauge-fixed so that the output is deterministic.
inline GradingData class_group(const Fan& fan) {
    std::size_t m = fan.ray_count(), q = fan.dim();
    SmithResult snf = smith_normal_form(fan.rays);
    if (snf.rank != q) throw FanError("rays do not span the ambient lattice");
    GradingData g;
    g.m = m;
    g.q = q;
    g.s = m - q;
    g.ring = fan.ring();

    IMat kernel_rows;
    for (std::size_t i = q; i < m; ++i) kernel_rows.push_back(snf.L[i]);
    g.relation_basis = hermite_row_basis(std::move(kernel_rows));
    if (g.relation_basis.size() != g.s)
        throw FanError("relation lattice has unexpected rank");
    g.theta = detail::find_positive_functional(g.relation_basis);

    // Torsion: CRT-split each nontrivial invariant factor into prime powers.
    std::vector<detail::TorsionFactor> factors;
    for (std::size_t j = 0; j < q; ++j) {
        Integer dj = snf.D[j][j];
        if (dj <= 1) continue;
        if (!dj.fits_slong_p()) throw FanError("torsion order out of range");
        long d = dj.get_si();
        long rest = d;
        for (long p = 2; p * p <= rest; ++p) {
            if (rest % p != 0) continue;
            long pk = 1;
            while (rest % p == 0) {
                pk *= p;
                rest /= p;
            }
            factors.push_back({pk, {}});
            factors.back().coords.resize(m);
            for (std::size_t i = 0; i < m; ++i)
                factors.back().coords[i] = static_cast<long>(
                    mpz_fdiv_ui(snf.L[j][i].get_mpz_t(), static_cast<unsigned long>(pk)));
        }
        if (rest > 1) {
            factors.push_back({rest, {}});
            factors.back().coords.resize(m);
            for (std::size_t i = 0; i < m; ++i)
                factors.back().coords[i] = static_cast<long>(
                    mpz_fdiv_ui(snf.L[j][i].get_mpz_t(), static_cast<unsigned long>(rest)));
        }
    }
    std::stable_sort(factors.begin(), factors.end(),
                     [](const auto& a, const auto& b) { return a.order < b.order; });
    for (auto& f : factors) detail::gauge_fix(f, g.relation_basis, g.theta);

    for (auto& f : factors) g.torsion_orders.push_back(f.order);
    for (std::size_t i = 0; i < m; ++i) {
        DegreeVector d;
        for (std::size_t j = 0; j < g.s; ++j) d.free.push_back(g.relation_basis[j][i]);
        for (const auto& f : factors) d.torsion.push_back(f.coords[i]);
        g.degrees.push_back(std::move(d));
    }

    // Self-consistency: the relation rows annihilate the rays, and the
    // lattice relations among divisor classes map to zero degrees.
    for (std::size_t j = 0; j < g.s; ++j)
        for (std::size_t c = 0; c < q; ++c) {
            Integer acc = 0;
            for (std::size_t i = 0; i < m; ++i) acc += g.relation_basis[j][i] * fan.rays[i][c];
            if (acc != 0) throw FanError("internal: relation basis fails to annihilate rays");
        }
    for (std::size_t c = 0; c < q; ++c) {
        DegreeVector acc = g.zero();
        for (std::size_t i = 0; i < m; ++i) {
            if (!fan.rays[i][c].fits_slong_p()) throw FanError("ray entry out of range");
            acc = g.add(acc, g.scale(g.degrees[i], fan.rays[i][c].get_si()));
        }
        if (acc != g.zero()) throw FanError("internal: degree map violates lattice relations");
    }
    return g;
}

inline DegreeVector degree_of(const Polynomial& p, const GradingData& g) {
    if (p.is_zero()) throw ArgumentError("degree_of: zero polynomial has no degree");
    auto it = p.terms().begin();
    DegreeVector deg = g.monomial_degree(it->first);
    for (++it; it != p.terms().end(); ++it) {
        DegreeVector other = g.monomial_degree(it->first);
        if (other != deg)
            throw HomogeneityError("polynomial is not homogeneous: " +
                                       p.terms().begin()->first.str(*g.ring) + " has degree " +
                                       deg.str() + " but " + it->first.str(*g.ring) +
                                       " has degree " + other.str(),
                                   p.terms().begin()->first.str(*g.ring),
                                   it->first.str(*g.ring));
    }
    return deg;
}

inline bool is_homogeneous(const Polynomial& p, const GradingData& g) {
    if (p.is_zero()) return true;
    try {
        degree_of(p, g);
        return true;
    } catch (const HomogeneityError&) {
        return false;
    }
}

/// Degree of a homogeneous vector field: deg(B_i) = deg(Y) + deg(z_i).
inline DegreeVector field_degree(const VectorField& y, const GradingData& g) {
    std::optional<DegreeVector> deg;
    for (std::size_t i = 0; i < g.m; ++i) {
        const Polynomial& b = y.coefficient(i);
        if (b.is_zero()) continue;
        DegreeVector d = g.sub(degree_of(b, g), g.degrees[i]);
        if (!deg)
            deg = d;
        else if (*deg != d)
            throw HomogeneityError("vector field is not homogeneous", "", "");
    }
    if (!deg) throw ArgumentError("zero vector field has no degree");
    return *deg;
}

/// Degree of a homogeneous twisted form: deg(A_I) + sum_{i in I} deg(z_i).
inline DegreeVector form_degree(const KForm& a, const GradingData& g) {
    std::optional<DegreeVector> deg;
    for (const auto& [idx, c] : a.coefficients()) {
        std::string slot = "dz";
        for (auto v : idx) slot += "_" + g.ring->name(v);
        DegreeVector d = degree_of(c, g); // may throw naming the monomials
        for (auto v : idx) d = g.add(d, g.degrees[v]);
        if (!deg) {
            deg = d;
        } else if (*deg != d) {
            throw HomogeneityError("form is not homogeneous: the coefficient of " + slot +
                                       " has degree " + d.str() + ", expected " + deg->str(),
                                   slot, "");
        }
    }
    if (!deg) throw ArgumentError("zero form has no degree");
    return *deg;
}

inline bool is_homogeneous_form(const KForm& a, const GradingData& g) {
    if (a.is_zero()) return true;
    try {
        form_degree(a, g);
        return true;
    } catch (const HomogeneityError&) {
        return false;
    }
}

/// Radial fields R_j = sum_i a^j_i z_i d/dz_i, one per relation row.
inline std::vector<VectorField> radial_fields(const GradingData& g) {
    std::vector<VectorField> out;
    for (std::size_t j = 0; j < g.s; ++j) {
        std::vector<Polynomial> coeffs;
        for (std::size_t i = 0; i < g.m; ++i) {
            Rational c(g.relation_basis[j][i]);
            coeffs.push_back(Polynomial::variable(g.ring, i) * c);
        }
        out.emplace_back(g.ring, std::move(coeffs));
    }
    return out;
}

/// Irrelevant ideal: one generator prod_{i not in cone} z_i per maximal cone.
inline Ideal irrelevant_ideal(const Fan& fan) {
    RingPtr ring = fan.ring();
    std::vector<Polynomial> gens;
    for (const auto& cone : fan.max_cones) {
        std::vector<bool> in(fan.ray_count(), false);
        for (int i : cone) in[i] = true;
        Polynomial p = Polynomial::constant(ring, Rational(1));
        for (std::size_t i = 0; i < fan.ray_count(); ++i)
            if (!in[i]) p = p * Polynomial::variable(ring, i);
        gens.push_back(std::move(p));
    }
    return Ideal(ring, std::move(gens));
}

/// Non-consecutive ray pairs of a complete surface fan (1-based pairs).
inline std::vector<std::pair<int, int>> nonconsecutive_pairs(const Fan& fan) {
    if (fan.dim() != 2) throw ArgumentError("nonconsecutive_pairs needs a surface fan");
    std::size_t mrays = fan.ray_count();
    std::vector<std::pair<int, int>> out;
    if (mrays <= 3) return out;
    const auto& ord = *fan.surface_order;
    std::vector<int> pos(mrays);
    for (std::size_t p = 0; p < mrays; ++p) pos[ord[p]] = static_cast<int>(p);
    for (std::size_t i = 0; i < mrays; ++i)
        for (std::size_t j = i + 1; j < mrays; ++j) {
            int dist = std::abs(pos[i] - pos[j]);
            bool consecutive = dist == 1 || dist == static_cast<int>(mrays) - 1;
            if (!consecutive) out.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
        }
    return out;
}

/// Volume form i_{R_1} ... i_{R_s} dz_1 ^ ... ^ dz_m.
inline KForm volume_form(const GradingData& g) {
    KForm omega = KForm::top_form(g.ring);
    for (const auto& r : radial_fields(g)) omega = contract(omega, r);
    return omega;
}

/// The integer coefficients b_I with Omega = sum b_I zhat_I dz_I.
inline std::map<IndexSet, Rational> volume_coefficients(const KForm& omega,
                                                        const GradingData& g) {
    std::map<IndexSet, Rational> out;
    for (const auto& [idx, c] : omega.coefficients()) {
        Polynomial zhat = Polynomial::constant(g.ring, Rational(1));
        std::vector<bool> in(g.m, false);
        for (auto v : idx) in[v] = true;
        for (std::size_t i = 0; i < g.m; ++i)
            if (!in[i]) zhat = zhat * Polynomial::variable(g.ring, i);
        auto q = c.divided_by(zhat);
        if (!q || !q->is_constant())
            throw Error("internal: volume form coefficient is not a multiple of zhat_I");
        out[idx] = q->constant_value();
    }
    return out;
}

/// Grassmann-Pluecker exchange relations for an antisymmetric coefficient
/// family on q-subsets of {0..m-1}.
inline bool pluecker_relations_hold(const std::map<IndexSet, Rational>& b, std::size_t m,
                                    unsigned qdeg) {
    auto value = [&](IndexSet idx) -> Rational {
        int sign = detail::sort_sign(idx);
        if (sign == 0) return Rational(0);
        auto it = b.find(idx);
        if (it == b.end()) return Rational(0);
        return sign > 0 ? it->second : -it->second;
    };
    if (qdeg == 0) return true;
    // Enumerate (q-1)-subsets A and (q+1)-subsets B.
    std::vector<IndexSet> smaller, larger;
    std::vector<unsigned> scratch;
    std::function<void(unsigned, unsigned, std::vector<IndexSet>&)> rec =
        [&](unsigned start, unsigned need, std::vector<IndexSet>& out) {
            if (need == 0) {
                out.push_back(scratch);
                return;
            }
            for (unsigned v = start; v + need <= m; ++v) {
                scratch.push_back(v);
                rec(v + 1, need - 1, out);
                scratch.pop_back();
            }
        };
    rec(0, qdeg - 1, smaller);
    rec(0, qdeg + 1, larger);
    for (const auto& a : smaller)
        for (const auto& bb : larger) {
            Rational acc(0);
            for (std::size_t t = 0; t < bb.size(); ++t) {
                IndexSet left = a;
                left.push_back(bb[t]);
                IndexSet right;
                for (std::size_t s2 = 0; s2 < bb.size(); ++s2)
                    if (s2 != t) right.push_back(bb[s2]);
                Rational prod = value(left) * value(right);
                if (t % 2 == 1) prod = -prod;
                acc += prod;
            }
            if (!is_zero(acc)) return false;
        }
    return true;
}

/// Admissibility of a twist degree on a weighted projective plane.
inline bool admissible(long ell, const std::array<long, 3>& weights) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (std::gcd(weights[i], weights[j]) != 1)
                throw ArgumentError("weights must be pairwise coprime");
    for (int i = 0; i < 3; ++i) {
        bool hit = false;
        for (int j = 0; j < 3; ++j)
            if ((ell + weights[j]) % weights[i] == 0) hit = true;
        if (!hit) return false;
    }
    return true;
}

/// De-torsion: replaces the nontrivial invariant factors by ones through
/// the Smith normal form factorization, yielding a fan with the same
/// relation lattice and torsion-free class group.
inline Fan detorsion(const Fan& fan) {
    std::size_t m = fan.ray_count(), q = fan.dim();
    SmithResult snf = smith_normal_form(fan.rays);
    if (snf.rank != q) throw FanError("rays do not span the ambient lattice");
    IMat d1 = imat(m, q);
    for (std::size_t j = 0; j < q; ++j) d1[j][j] = 1;
    IMat vt = matmul(matmul(snf.Linv, d1), snf.Rinv);
    Fan out = fan;
    out.rays = std::move(vt);
    out.surface_order.reset();
    out = normalize_fan(std::move(out));
    GradingData g = class_group(out);
    if (!g.torsion_orders.empty())
        throw FanError("internal: detorsion left a torsion class group");
    GradingData before = class_group(fan);
    if (g.relation_basis != before.relation_basis)
        throw FanError("internal: detorsion changed the relation lattice");
    return out;
}

/// One step of the polynomial-lifting completion: divides out f along the
/// minimal cone containing sum_i mult_f(F_i) v_i. Throws an obstruction
/// error naming the cone when the supported exponent vector is fractional.
inline std::vector<Polynomial> completeness_step(const std::vector<Polynomial>& components,
                                                 const Polynomial& f, const Fan& fan) {
    std::size_t m = fan.ray_count(), q = fan.dim();
    if (components.size() != m) throw ContextError("one component per ray expected");
    std::vector<unsigned> u(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        auto mult = mult_along(components[i], f);
        if (!mult) throw ArgumentError("completeness_step: zero component");
        u[i] = *mult;
    }
    if (std::all_of(u.begin(), u.end(), [](unsigned x) { return x == 0; })) return components;

    IVec w(q, Integer(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t c = 0; c < q; ++c) w[c] += Integer(u[i]) * fan.rays[i][c];

    // Locate the minimal face of a maximal cone containing w: solve the
    // simplicial coordinates exactly and keep the support.
    std::vector<int> tau;
    std::vector<Rational> tau_coords;
    bool found = false;
    bool wzero = std::all_of(w.begin(), w.end(), [](const Integer& x) { return x == 0; });
    if (wzero) found = true; // tau is the zero cone
    for (const auto& cone : fan.max_cones) {
        if (found) break;
        QMat a = qmat(q, cone.size());
        QVec rhs;
        for (std::size_t r = 0; r < q; ++r) {
            for (std::size_t c = 0; c < cone.size(); ++c) a[r][c] = Rational(fan.rays[cone[c]][r]);
            rhs.push_back(Rational(w[r]));
        }
        auto sol = solve(a, rhs);
        if (!sol) continue;
        bool nonneg = std::all_of(sol->begin(), sol->end(),
                                  [](const Rational& x) { return sgn(x) >= 0; });
        if (!nonneg) continue;
        found = true;
        for (std::size_t c = 0; c < cone.size(); ++c)
            if (sgn((*sol)[c]) > 0) {
                tau.push_back(cone[c]);
                tau_coords.push_back((*sol)[c]);
            }
    }
    if (!found) throw FanError("no cone contains the multiplicity vector; fan not complete?");

    std::vector<long> uprime(m, 0);
    for (std::size_t t = 0; t < tau.size(); ++t) {
        if (tau_coords[t].get_den() != 1) {
            std::vector<int> cone_names;
            for (int i : tau) cone_names.push_back(i + 1);
            throw ObstructionError(
                "lifting obstruction: the supported exponent vector is fractional on the "
                "cone spanned by rays " +
                    [&] {
                        std::string sids;
                        for (std::size_t k = 0; k < cone_names.size(); ++k)
                            sids += (k ? "," : "") + std::to_string(cone_names[k]);
                        return sids;
                    }(),
                cone_names);
        }
        uprime[tau[t]] = tau_coords[t].get_num().get_si();
    }

    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < m; ++i) {
        long delta = uprime[i] - static_cast<long>(u[i]);
        Polynomial next = components[i];
        if (delta > 0) {
            next = next * f.pow(static_cast<unsigned>(delta));
        } else if (delta < 0) {
            for (long t = 0; t < -delta; ++t) {
                auto qt = next.divided_by(f);
                if (!qt) throw Error("internal: completeness_step division failed");
                next = *qt;
            }
        }
        out.push_back(std::move(next));
    }
    return out;
}

/// Replaces Y by Y - div(Y)/(ell + a0 + a1 + a2) R on a weighted projective
/// plane; the result has zero divergence and contracts Omega identically.
inline VectorField divergence_normalize(const VectorField& y, const GradingData& g) {
    if (g.s != 1 || g.m != 3)
        throw ContextError("divergence normalization needs a weighted projective plane");
    DegreeVector deg = field_degree(y, g);
    Integer ell = deg.free[0];
    Integer total = ell;
    for (const auto& d : g.degrees) total += d.free[0];
    if (total == 0)
        throw DegenerateDegreeError("ell + a0 + a1 + a2 = 0: normalization undefined");
    Polynomial div = divergence(y);
    VectorField r = radial_fields(g)[0];
    Rational c = Rational(1) / Rational(total);
    return y - r * (div * c);
}

struct DivergenceIdentityResult {
    bool holds = false;
    KForm difference;
};

/// Checks d(i_Y Omega) = div(Y) Omega - (ell + a0 + a1 + a2) i_Y (dz0^dz1^dz2)
/// on a weighted projective plane, returning the difference on failure.
/// In particular div(Y) = 0 forces Sing(d alpha) = {B0 = B1 = B2 = 0}.
inline DivergenceIdentityResult dform_divergence_identity(const VectorField& y,
                                                          const GradingData& g) {
    if (g.s != 1 || g.m != 3)
        throw ContextError("divergence identity needs a weighted projective plane");
    DegreeVector deg = field_degree(y, g);
    Integer total = deg.free[0];
    for (const auto& dv : g.degrees) total += dv.free[0];
    KForm omega = volume_form(g);
    KForm alpha = contract(omega, y);
    KForm lhs = d(alpha);
    KForm rhs = omega * divergence(y) - contract(KForm::top_form(g.ring), y) * Rational(total);
    DivergenceIdentityResult res;
    res.difference = lhs - rhs;
    res.holds = res.difference.is_zero();
    return res;
}

/// Grading of standard projective space on an existing ring: free rank one,
/// every variable of degree 1 (the Cox grading of P^(nvars-1)).
inline GradingData standard_projective_grading(RingPtr ring) {
    GradingData g;
    g.m = ring->nvars();
    g.q = g.m - 1;
    g.s = 1;
    g.ring = std::move(ring);
    g.relation_basis = IMat{IVec(g.m, Integer(1))};
    for (std::size_t i = 0; i < g.m; ++i)
        g.degrees.push_back(DegreeVector{{Integer(1)}, {}});
    g.theta = IVec{Integer(1)};
    return g;
}

/// All monomials of a given degree; finite because theta is positive.
inline std::vector<Monomial> monomials_of_degree(const GradingData& g, const DegreeVector& target) {
    std::vector<Monomial> out;
    std::vector<unsigned> exps(g.m, 0);
    std::vector<Integer> theta_deg(g.m);
    for (std::size_t i = 0; i < g.m; ++i) theta_deg[i] = g.theta_value(g.degrees[i]);
    std::function<void(std::size_t, DegreeVector, Integer)> rec =
        [&](std::size_t var, DegreeVector rest, Integer theta_rest) {
            if (var == g.m) {
                if (rest == g.zero()) out.emplace_back(exps);
                return;
            }
            Integer bound = theta_rest / theta_deg[var];
            for (Integer e = 0; e <= bound; ++e) {
                unsigned ei = static_cast<unsigned>(e.get_ui());
                exps[var] = ei;
                DegreeVector next = g.sub(rest, g.scale(g.degrees[var], static_cast<long>(ei)));
                rec(var + 1, next, theta_rest - e * theta_deg[var]);
            }
            exps[var] = 0;
        };
    Integer t0 = g.theta_value(target);
    if (t0 >= 0) rec(0, target, t0);
    return out;
}

} // namespace torfol
