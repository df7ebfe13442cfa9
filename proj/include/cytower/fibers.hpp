#ifndef CYTOWER_FIBERS_HPP
#define CYTOWER_FIBERS_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cytower/moduli.hpp"
#include "cytower/multipoly.hpp"
#include "cytower/rational.hpp"
#include "cytower/sylvester.hpp"
#include "cytower/unipoly.hpp"

namespace cytower {

/// A family over a curve: f = sum_{k<n} x_k^{s_k} + sum_i t_i(x_n) x^i
/// with coefficient polynomials keyed by tuples (i_0,...,i_{n-1}) in the
/// wide box 0 <= i_k <= s_k-1.  The x_n^{s_n} term of a family built from
/// a moduli point lives inside the (0,...,0) coefficient.
struct CurveFamily {
    long n = 0;
    std::map<Expo, UniPoly> coeffs;
};

inline void validate_family(const SylvesterContext& ctx, const CurveFamily& fam) {
    if (fam.n != ctx.n) throw std::invalid_argument("family level does not match context");
    bool nonzero = false;
    for (const auto& [i, t] : fam.coeffs) {
        if (static_cast<long>(i.size()) != ctx.n)
            throw std::invalid_argument("family tuple length must be n");
        for (long k = 0; k < ctx.n; ++k)
            if (i[static_cast<size_t>(k)] < 0 || Int(i[static_cast<size_t>(k)]) > ctx.s[k] - 1)
                throw std::invalid_argument("family tuple outside the wide box");
        if (!t.is_zero()) nonzero = true;
    }
    if (!nonzero) throw std::invalid_argument("family must have a nonzero coefficient");
}

/// Regroup the affine equation of a point by powers of x_n.
inline CurveFamily family_from_point(const SylvesterContext& ctx, const ModuliPoint& p) {
    if (ctx.n < 1) throw std::invalid_argument("family_from_point: n >= 1 required");
    MultiPoly f = assemble(ctx, p, /*homogeneous=*/false);
    CurveFamily fam;
    fam.n = ctx.n;
    for (const auto& [e, a] : f.terms()) {
        // the Fermat terms x_k^{s_k}, k < n, stay outside the coefficient map
        bool fermat = false;
        for (long k = 0; k < ctx.n; ++k)
            if (Int(e[static_cast<size_t>(k)]) == ctx.s[k]) fermat = true;
        if (fermat) continue;
        Expo i(e.begin(), e.end() - 1);
        long pw = e.back();
        auto& t = fam.coeffs[i];
        t = t + UniPoly::monomial(static_cast<size_t>(pw), a);
    }
    validate_family(ctx, fam);
    return fam;
}

/// Expand a family back into the affine polynomial (test/reporting helper).
inline MultiPoly family_expand(const SylvesterContext& ctx, const CurveFamily& fam) {
    MultiPoly f(ctx.n + 1);
    for (long k = 0; k < ctx.n; ++k) {
        Expo e(static_cast<size_t>(ctx.n + 1), 0);
        e[static_cast<size_t>(k)] = ctx.s[k].get_si();
        f.add_term(e, Rat(1));
    }
    for (const auto& [i, t] : fam.coeffs) {
        for (size_t pw = 0; pw < t.coeffs().size(); ++pw) {
            if (t[pw] == 0) continue;
            Expo e(i.begin(), i.end());
            e.push_back(static_cast<long>(pw));
            f.add_term(e, t[pw]);
        }
    }
    return f;
}

/// Coprime basis of squarefree factors of the gcd of all coefficients,
/// refined until every coefficient has constant multiplicity on each
/// element.  vbar > 0 exactly at roots of elements of the basis.
inline std::vector<UniPoly> place_basis(const CurveFamily& fam) {
    std::vector<const UniPoly*> nz;
    for (const auto& [i, t] : fam.coeffs)
        if (!t.is_zero()) nz.push_back(&t);
    if (nz.empty()) throw std::invalid_argument("place_basis: all-zero family");
    UniPoly g;
    for (const UniPoly* t : nz) g = gcd(g, *t);
    if (g.degree() < 1) return {};
    std::vector<UniPoly> basis{squarefree_part(g)};
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t bi = 0; bi < basis.size() && !changed; ++bi) {
            for (const UniPoly* t : nz) {
                UniPoly rest = *t;
                while (rest.divisible_by(basis[bi])) rest = rest.divexact(basis[bi]);
                UniPoly h = gcd(basis[bi], rest);
                if (h.degree() >= 1 && h.degree() < basis[bi].degree()) {
                    UniPoly other = basis[bi].divexact(h).monic();
                    basis[bi] = h.monic();
                    basis.push_back(other);
                    changed = true;
                    break;
                }
            }
        }
    }
    // deterministic order: by degree, then by coefficient sequence
    std::sort(basis.begin(), basis.end(), [](const UniPoly& a, const UniPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (long k = 0; k <= a.degree(); ++k) {
            if (a[static_cast<size_t>(k)] != b[static_cast<size_t>(k)])
                return a[static_cast<size_t>(k)] < b[static_cast<size_t>(k)];
        }
        return false;
    });
    return basis;
}

/// Per-place valuations of all coefficients, normalized by the level-(n-1)
/// weight, and their minimum vbar.
struct PlaceValuation {
    UniPoly place;
    std::map<Expo, long> vals;     // only for nonzero coefficients
    std::map<Expo, Rat> ovval;     // val / w^{(n-1)}(i)
    Rat vbar;
};

inline PlaceValuation vbar_at(const SylvesterContext& ctx, const CurveFamily& fam,
                              const UniPoly& place) {
    validate_family(ctx, fam);
    if (place.degree() < 1) throw std::invalid_argument("vbar_at: constant place");
    SylvesterContext prev = make_context(ctx.n - 1);
    PlaceValuation pv;
    pv.place = place.monic();
    bool first = true;
    for (const auto& [i, t] : fam.coeffs) {
        if (t.is_zero()) continue;
        long v = valuation(t, pv.place);
        Int w = weight(prev, i);
        if (w == 0) throw std::logic_error("vbar_at: weight 0 inside the legal box");
        Rat ov = Rat(Int(v)) / Rat(w);
        pv.vals[i] = v;
        pv.ovval[i] = ov;
        if (first || ov < pv.vbar) pv.vbar = ov;
        first = false;
    }
    return pv;
}

inline PlaceValuation vbar_at(const SylvesterContext& ctx, const CurveFamily& fam, const Rat& c) {
    return vbar_at(ctx, fam, UniPoly::linear_root(c));
}

/// lct(X, F) = 1 - vbar for 0 <= vbar <= 1; canonical fibers (vbar <= 0)
/// report 1.
inline Rat fiber_lct(const PlaceValuation& pv) {
    if (pv.vbar > 1)
        throw std::domain_error("fiber_lct: vbar > 1, outside theorem hypotheses");
    if (pv.vbar <= 0) return Rat(1);
    return 1 - pv.vbar;
}

struct BoundaryResult {
    enum class Kind { boundary, interior, irrational_place };
    Kind kind = Kind::interior;
    std::optional<ModuliPoint> preimage;
    Rat place_root;  // c with ell = x_n - c, boundary case only
};

/// Invert the embedding at a rational place with vbar = 1 and the boundary
/// coefficient pattern t_i = t_i' ell^{w(i)} (plus ell^{s_n} on the zero
/// tuple).
inline BoundaryResult boundary_preimage(const SylvesterContext& ctx, const ModuliPoint& p) {
    if (ctx.n < 1) throw std::invalid_argument("boundary_preimage: n >= 1 required");
    CurveFamily fam = family_from_point(ctx, p);
    SylvesterContext prev = make_context(ctx.n - 1);
    bool sawIrrational = false;
    for (const UniPoly& b : place_basis(fam)) {
        PlaceValuation pv = vbar_at(ctx, fam, b);
        if (pv.vbar != 1) continue;
        if (b.degree() > 1) {
            sawIrrational = true;
            continue;
        }
        Rat c = -b[0];
        UniPoly ell = UniPoly::linear_root(c);
        Expo zero(static_cast<size_t>(ctx.n), 0);
        ModuliPoint pre;
        pre.n = ctx.n - 1;
        bool ok = true;
        for (const auto& [i, t] : fam.coeffs) {
            if (t.is_zero()) continue;
            Int w = weight(prev, i);
            UniPoly expect = t;
            if (i == zero) {
                // t_0 = t_0' ell^{d_{n-1}} + ell^{s_n}
                UniPoly lp = UniPoly::constant(Rat(1));
                for (long k = 0; k < ctx.s[ctx.n].get_si(); ++k) lp = lp * ell;
                expect = t - lp;
            }
            Rat tp;
            if (expect.is_zero()) {
                tp = 0;
            } else {
                if (valuation(expect, ell) < w.get_si()) { ok = false; break; }
                UniPoly q = expect;
                for (long k = 0; k < w.get_si(); ++k) q = q.divexact(ell);
                if (q.degree() != 0) { ok = false; break; }
                tp = q[0];
            }
            if (tp != 0) pre.coords[i] = tp;
        }
        if (!ok) continue;
        // the shift used by the embedding is t_0'/s_n
        Rat t0 = pre.coords.count(zero) ? pre.coords[zero] : Rat(0);
        if (t0 != Rat(ctx.s[ctx.n]) * c) continue;
        validate_point(prev, pre);
        BoundaryResult r;
        r.kind = BoundaryResult::Kind::boundary;
        r.preimage = pre;
        r.place_root = c;
        return r;
    }
    BoundaryResult r;
    r.kind = sawIrrational ? BoundaryResult::Kind::irrational_place
                           : BoundaryResult::Kind::interior;
    return r;
}

/// Number of successful boundary descents.
inline long level(const SylvesterContext& ctx, const ModuliPoint& p) {
    long lv = 0;
    SylvesterContext cur = ctx;
    ModuliPoint pt = p;
    while (cur.n >= 1) {
        BoundaryResult r = boundary_preimage(cur, pt);
        if (r.kind == BoundaryResult::Kind::irrational_place)
            throw std::runtime_error("level: irrational boundary place");
        if (r.kind == BoundaryResult::Kind::interior) break;
        pt = *r.preimage;
        cur = make_context(cur.n - 1);
        ++lv;
    }
    return lv;
}

/// Limit fiber at a rational place with vbar > 0: coordinate i receives the
/// leading ell-adic coefficient when val = vbar * w(i) exactly, else 0.
inline ModuliPoint limit_fiber(const SylvesterContext& ctx, const CurveFamily& fam,
                               const Rat& c) {
    SylvesterContext prev = make_context(ctx.n - 1);
    UniPoly ell = UniPoly::linear_root(c);
    PlaceValuation pv = vbar_at(ctx, fam, ell);
    if (pv.vbar <= 0)
        throw std::invalid_argument("limit_fiber: fiber already in the lower moduli space; evaluate directly");
    ModuliPoint out;
    out.n = ctx.n - 1;
    for (const auto& [i, t] : fam.coeffs) {
        if (t.is_zero()) continue;
        Rat target = pv.vbar * Rat(weight(prev, i));
        if (target.get_den() != 1 || target < 0) continue;
        if (Int(pv.vals.at(i)) != target.get_num()) continue;
        UniPoly q = t;
        for (long k = 0; k < pv.vals.at(i); ++k) q = q.divexact(ell);
        Rat v = q.eval(c);
        if (v != 0) out.coords[i] = v;
    }
    validate_point(prev, out);
    return out;
}

/// (vbar, level of the fiber over the place, discriminant valuation).
/// The discriminant is implemented for n = 2 only (Weierstrass form).
struct FiberType {
    Rat vbar;
    std::optional<long> lvl;       // absent when the place is irrational
    std::optional<long> disc_val;  // absent unless n = 2
    Rat lct;
};

inline FiberType fiber_type(const SylvesterContext& ctx, const CurveFamily& fam,
                            const UniPoly& place) {
    PlaceValuation pv = vbar_at(ctx, fam, place);
    FiberType ft;
    ft.vbar = pv.vbar;
    ft.lct = fiber_lct(pv);
    SylvesterContext prev = make_context(ctx.n - 1);
    if (place.degree() == 1) {
        Rat c = -place.monic()[0];
        ModuliPoint fiber;
        if (pv.vbar > 0) {
            fiber = limit_fiber(ctx, fam, c);
        } else {
            fiber.n = ctx.n - 1;
            for (const auto& [i, t] : fam.coeffs) {
                Rat v = t.eval(c);
                if (v != 0) fiber.coords[i] = v;
            }
        }
        ft.lvl = level(prev, fiber);
    }
    if (ctx.n == 2) {
        Expo e00 = {0, 0}, e01 = {0, 1};
        UniPoly t0 = fam.coeffs.count(e00) ? fam.coeffs.at(e00) : UniPoly();
        UniPoly t1 = fam.coeffs.count(e01) ? fam.coeffs.at(e01) : UniPoly();
        UniPoly disc = Rat(4) * (t1 * t1 * t1) + Rat(27) * (t0 * t0);
        if (!disc.is_zero()) ft.disc_val = valuation(disc, place.monic());
    }
    return ft;
}

}  // namespace cytower

#endif
