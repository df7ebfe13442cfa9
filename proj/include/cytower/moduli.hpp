#ifndef CYTOWER_MODULI_HPP
#define CYTOWER_MODULI_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "cytower/multipoly.hpp"
#include "cytower/rational.hpp"
#include "cytower/sylvester.hpp"

namespace cytower {

/// A coordinate vector (t_{i_0...i_n}) of a point of M_n.  Keys are full
/// (n+1)-tuples; absent entries are zero.  Points are representatives of a
/// weighted-projective class, see projectively_equal.
struct ModuliPoint {
    long n = 0;
    std::map<Expo, Rat> coords;

    bool is_zero() const {
        for (const auto& [e, a] : coords)
            if (a != 0) return false;
        return true;
    }
};

/// Checks the box 0 <= i_k <= s_k-2, positive weight, and t != 0.
inline void validate_point(const SylvesterContext& ctx, const ModuliPoint& p) {
    if (p.n != ctx.n) throw std::invalid_argument("point level does not match context");
    bool nonzero = false;
    for (const auto& [e, a] : p.coords) {
        if (static_cast<long>(e.size()) != ctx.n + 1)
            throw std::invalid_argument("coordinate tuple length must be n+1");
        for (long k = 0; k <= ctx.n; ++k)
            if (e[static_cast<size_t>(k)] < 0 || Int(e[static_cast<size_t>(k)]) > ctx.s[k] - 2)
                throw std::invalid_argument("coordinate tuple outside the deformation box");
        if (weight(ctx, e) <= 0)
            throw std::invalid_argument("coordinate tuple of non-positive weight");
        if (a != 0) nonzero = true;
    }
    if (!nonzero) throw std::invalid_argument("moduli point must not be the origin");
}

/// f_t = x_0^{s_0} + ... + x_n^{s_n} + sum t_i x^i, affine in x_0..x_n, or
/// its homogenization with x_{n+1}^{w(i)} factors (then quasi-homogeneous
/// of degree d_n under weights (d_{n,0},...,d_{n,n},1)).
inline MultiPoly assemble(const SylvesterContext& ctx, const ModuliPoint& p, bool homogeneous) {
    validate_point(ctx, p);
    long nv = homogeneous ? ctx.n + 2 : ctx.n + 1;
    MultiPoly f(nv);
    for (long k = 0; k <= ctx.n; ++k) {
        Expo e(static_cast<size_t>(nv), 0);
        e[static_cast<size_t>(k)] = ctx.s[k].get_si();
        f.add_term(e, Rat(1));
    }
    for (const auto& [i, t] : p.coords) {
        if (t == 0) continue;
        Expo e(i.begin(), i.end());
        e.resize(static_cast<size_t>(nv), 0);
        if (homogeneous) e.back() = weight(ctx, i).get_si();
        f.add_term(e, t);
    }
    return f;
}

/// t |-> lambda.t = (lambda^{w(i)} t_i).
inline ModuliPoint rescale(const SylvesterContext& ctx, const ModuliPoint& p, const Rat& lambda) {
    if (lambda == 0) throw std::invalid_argument("rescale: lambda must be nonzero");
    validate_point(ctx, p);
    ModuliPoint r;
    r.n = p.n;
    for (const auto& [i, t] : p.coords)
        r.coords[i] = rat_pow(lambda, weight(ctx, i).get_si()) * t;
    return r;
}

/// Projective equality in P(w(i)): p equals q iff q = lambda.p for some
/// scalar.  With rational coordinates this is decided through rho =
/// lambda^g, g = gcd of the support weights, obtained from an integer
/// combination of the weights and verified on every coordinate.
inline bool projectively_equal(const SylvesterContext& ctx, const ModuliPoint& p,
                               const ModuliPoint& q) {
    validate_point(ctx, p);
    validate_point(ctx, q);
    std::map<Expo, Rat> a, b;
    for (const auto& [e, t] : p.coords)
        if (t != 0) a[e] = t;
    for (const auto& [e, t] : q.coords)
        if (t != 0) b[e] = t;
    if (a.size() != b.size()) return false;
    for (const auto& [e, t] : a)
        if (!b.count(e)) return false;
    // gcd of support weights with Bezout coefficients
    Int g = 0;
    std::map<Expo, Int> bez;
    for (const auto& [e, t] : a) {
        Int w = weight(ctx, e);
        if (g == 0) {
            g = w;
            bez[e] = 1;
        } else {
            Int gg, u, v;
            mpz_gcdext(gg.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t(), w.get_mpz_t());
            for (auto& [ee, c] : bez) c *= u;
            bez[e] = v;
            g = gg;
        }
    }
    // rho = lambda^g from the Bezout combination of coordinate ratios
    Rat rho(1);
    for (const auto& [e, c] : bez) {
        Rat ratio = b[e] / a[e];
        rho *= rat_pow(ratio, c.get_si());
    }
    for (const auto& [e, t] : a) {
        Int w = weight(ctx, e);
        Int k = w / g;
        if (b[e] != rat_pow(rho, k.get_si()) * t) return false;
    }
    return true;
}

/// Result of completing the s-th power in one variable.
struct PowerCompletion {
    MultiPoly poly;
    MultiPoly shift;  // the polynomial added to `var` (does not involve var)
};

/// Substitute var |-> var - (coeff of var^{s-1})/s so the var^{s-1} term
/// vanishes.  The var^s coefficient must be exactly 1.
inline PowerCompletion complete_power(const MultiPoly& p, long var, long s) {
    Expo lead(static_cast<size_t>(p.nvars()), 0);
    lead[static_cast<size_t>(var)] = s;
    if (p.coeff(lead) != 1)
        throw std::invalid_argument("complete_power: leading coefficient must be 1");
    if (p.degree_in(var) > s)
        throw std::invalid_argument("complete_power: degree in var exceeds s");
    MultiPoly sub = p.coeff_of(var, s - 1);
    if (sub.is_zero())
        return {p, MultiPoly(p.nvars())};
    if (sub.degree_in(var) > 0)
        throw std::invalid_argument("complete_power: var^{s-1} coefficient involves var");
    MultiPoly shift = Rat(-1, s) * sub;
    MultiPoly image = MultiPoly::monomial(p.nvars(),
                                          [&] {
                                              Expo e(static_cast<size_t>(p.nvars()), 0);
                                              e[static_cast<size_t>(var)] = 1;
                                              return e;
                                          }()) +
                      shift;
    MultiPoly out = p.substitute(var, image);
    // the targeted term is now gone by construction
    MultiPoly check = out.coeff_of(var, s - 1);
    if (!check.is_zero()) throw std::logic_error("complete_power: shift failed to cancel");
    return {out, shift};
}

/// The embedding M_{n-1} -> M_n: cone, add x_n^{s_n}, complete the s_n-th
/// power, and read the coordinates off the normalized affine equation.
inline ModuliPoint embed(const SylvesterContext& prev, const ModuliPoint& p) {
    validate_point(prev, p);
    const long n = prev.n + 1;
    SylvesterContext ctx = make_context(n);
    // homogeneous equation of level n-1 uses variables x_0..x_n, with x_n
    // the homogenizer; reinterpreted as an affine polynomial in x_0..x_n.
    MultiPoly g = assemble(prev, p, /*homogeneous=*/true);
    Expo cone(static_cast<size_t>(n + 1), 0);
    cone[static_cast<size_t>(n)] = ctx.s[n].get_si();
    MultiPoly f0 = g + MultiPoly::monomial(n + 1, cone);
    PowerCompletion pc = complete_power(f0, n, ctx.s[n].get_si());

    ModuliPoint out;
    out.n = n;
    for (const auto& [e, a] : pc.poly.terms()) {
        bool fermat = false;
        for (long k = 0; k <= n; ++k) {
            if (Int(e[static_cast<size_t>(k)]) == ctx.s[k]) {
                bool pure = true;
                for (long j = 0; j <= n; ++j)
                    if (j != k && e[static_cast<size_t>(j)] != 0) pure = false;
                if (pure) {
                    if (a != 1) throw std::logic_error("embed: Fermat coefficient drifted");
                    fermat = true;
                }
                break;
            }
        }
        if (fermat) continue;
        out.coords[e] = a;
    }
    validate_point(ctx, out);
    return out;
}

struct NormalForm {
    ModuliPoint point;
    std::vector<Rat> var_scale;  // x_k |-> var_scale[k] * x_k applied first
};

/// Rescale variables to make each x_k^{s_k} coefficient 1, then kill every
/// x_k^{s_k-1} term by completing the power, x_n first.  Input must be
/// quasi-homogeneous of degree d_n in x_0..x_{n+1}.
inline NormalForm normalize_equation(const SylvesterContext& ctx, const MultiPoly& p) {
    if (p.nvars() != ctx.n + 2)
        throw std::invalid_argument("normalize_equation: expected n+2 variables");
    std::vector<Int> w;
    for (const auto& dk : ctx.d_row) w.push_back(dk);
    w.push_back(1);
    auto deg = p.quasi_degree(w);
    if (!deg || *deg != ctx.d)
        throw std::invalid_argument("normalize_equation: not quasi-homogeneous of degree d_n");

    MultiPoly q = p;
    std::vector<Rat> scale;
    for (long k = 0; k <= ctx.n; ++k) {
        Expo lead(static_cast<size_t>(ctx.n + 2), 0);
        lead[static_cast<size_t>(k)] = ctx.s[k].get_si();
        Rat c = q.coeff(lead);
        if (c == 0)
            throw std::invalid_argument("normalize_equation: missing x_" + std::to_string(k) +
                                        "^{s_k} monomial");
        Rat r;
        if (!rat_root(1 / c, ctx.s[k].get_ui(), r))
            throw std::invalid_argument("normalize_equation: coefficient of x_" +
                                        std::to_string(k) + "^{s_k} has no rational root");
        scale.push_back(r);
        if (r != 1) {
            MultiPoly next(q.nvars());
            for (const auto& [e, a] : q.terms())
                next.add_term(e, a * rat_pow(r, e[static_cast<size_t>(k)]));
            q = next;
        }
    }
    for (long k = ctx.n; k >= 0; --k)
        q = complete_power(q, k, ctx.s[k].get_si()).poly;

    ModuliPoint out;
    out.n = ctx.n;
    for (const auto& [e, a] : q.terms()) {
        if (e.back() == 0) {
            // must be one of the Fermat terms x_k^{s_k}
            bool fermat = false;
            for (long k = 0; k <= ctx.n; ++k)
                if (Int(e[static_cast<size_t>(k)]) == ctx.s[k]) fermat = true;
            if (!fermat || a != 1)
                throw std::invalid_argument("normalize_equation: unexpected weight-d_n term");
            continue;
        }
        Expo i(e.begin(), e.end() - 1);
        out.coords[i] = a;
    }
    validate_point(ctx, out);
    return {out, scale};
}

}  // namespace cytower

#endif
