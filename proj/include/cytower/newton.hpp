#ifndef CYTOWER_NEWTON_HPP
#define CYTOWER_NEWTON_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "cytower/multipoly.hpp"
#include "cytower/rational.hpp"
#include "cytower/simplex.hpp"
#include "cytower/sylvester.hpp"

namespace cytower {

/// Monomial support of f at the origin.
struct NewtonSupport {
    long nvars = 0;
    std::vector<Expo> points;

    static NewtonSupport of(const MultiPoly& f) {
        NewtonSupport s;
        s.nvars = f.nvars();
        for (const auto& [e, a] : f.terms()) s.points.push_back(e);
        return s;
    }
};

/// The diagonal parameter c with (c,...,c) on the boundary of the Newton
/// polyhedron conv(points) + R_{>=0}^n, with primal (convex combination)
/// and dual (facet covector) certificates, both verified by substitution.
struct DiagonalExit {
    Rat c;
    std::vector<Rat> lambda;  // per support point, >= 0, sums to 1
    std::vector<Rat> omega;   // facet covector, >= 0; omega(P_j) >= 1 for all j
    Rat omega_f;              // normalized min_j omega(P_j); 1 unless c = 0
};

inline DiagonalExit diagonal_exit(const NewtonSupport& support) {
    if (support.points.empty()) throw std::invalid_argument("diagonal_exit: empty support");
    const size_t m = support.points.size();
    const size_t nv = static_cast<size_t>(support.nvars);
    for (const auto& p : support.points) {
        if (p.size() != nv) throw std::invalid_argument("diagonal_exit: mixed arities");
        for (long e : p)
            if (e < 0) throw std::invalid_argument("diagonal_exit: negative exponent");
    }
    // origin in the support: the ray exits at 0 immediately
    for (size_t j = 0; j < m; ++j) {
        if (std::all_of(support.points[j].begin(), support.points[j].end(),
                        [](long e) { return e == 0; })) {
            DiagonalExit d;
            d.c = 0;
            d.lambda.assign(m, Rat(0));
            d.lambda[j] = 1;
            d.omega.assign(nv, Rat(0));
            d.omega_f = 0;
            return d;
        }
    }
    // packing LP: max sum y_j  s.t.  sum_j P_{jk} y_j <= 1,  y >= 0.
    // At the optimum, sum y = 1/c; lambda = y/(sum y); the row duals are
    // the facet covector normalized to omega(f) = 1.
    std::vector<std::vector<Rat>> a(nv, std::vector<Rat>(m));
    for (size_t k = 0; k < nv; ++k)
        for (size_t j = 0; j < m; ++j) a[k][j] = support.points[j][k];
    SimplexResult r = simplex_max(a, std::vector<Rat>(nv, Rat(1)), std::vector<Rat>(m, Rat(1)));
    if (r.status != SimplexResult::Status::optimal || r.objective <= 0)
        throw std::logic_error("diagonal_exit: LP degenerate for non-empty support");

    DiagonalExit d;
    d.c = 1 / r.objective;
    d.lambda.resize(m);
    for (size_t j = 0; j < m; ++j) d.lambda[j] = r.x[j] / r.objective;
    d.omega = r.dual;
    d.omega_f = 1;

    // re-verify both certificates by substitution
    Rat lsum = 0;
    std::vector<Rat> comb(nv, Rat(0));
    for (size_t j = 0; j < m; ++j) {
        if (d.lambda[j] < 0) throw std::logic_error("diagonal_exit: negative lambda");
        lsum += d.lambda[j];
        for (size_t k = 0; k < nv; ++k) comb[k] += d.lambda[j] * support.points[j][k];
    }
    if (lsum != 1) throw std::logic_error("diagonal_exit: lambda does not sum to 1");
    for (size_t k = 0; k < nv; ++k)
        if (comb[k] > d.c) throw std::logic_error("diagonal_exit: primal certificate infeasible");
    Rat osum = 0;
    for (size_t k = 0; k < nv; ++k) {
        if (d.omega[k] < 0) throw std::logic_error("diagonal_exit: negative omega");
        osum += d.omega[k];
    }
    for (size_t j = 0; j < m; ++j) {
        Rat dot = 0;
        for (size_t k = 0; k < nv; ++k) dot += d.omega[k] * support.points[j][k];
        if (dot < d.omega_f) throw std::logic_error("diagonal_exit: dual certificate infeasible");
    }
    if (osum * d.c != d.omega_f) throw std::logic_error("diagonal_exit: duality gap");
    return d;
}

/// lct at the origin from the Newton polyhedron: min(1, 1/c).
inline Rat lct_at_origin(const NewtonSupport& support) {
    DiagonalExit d = diagonal_exit(support);
    if (d.c == 0 || d.c <= 1) return Rat(1);
    return 1 / d.c;
}

enum class ToricClass { strictly_below_1, equal_1, above_1 };

struct ToricClassification {
    ToricClass cls;
    DiagonalExit exit;
};

/// Classify c against 1.  c < 1: torically canonical; c = 1: log canonical
/// boundary case; c > 1: not torically log canonical at threshold 1.
inline ToricClassification toric_classify(const NewtonSupport& support) {
    DiagonalExit d = diagonal_exit(support);
    ToricClass cls = d.c < 1   ? ToricClass::strictly_below_1
                     : d.c == 1 ? ToricClass::equal_1
                                : ToricClass::above_1;
    return {cls, d};
}

/// Discrepancy bookkeeping of the weighted blowup with weights omega and
/// weighted degree omega(f).
struct BlowupDiscrepancy {
    Rat ratio;        // (sum omega_k) / omega(f)
    Int numerator;    // sum omega_k - omega(f)
    int sign;         // -1, 0, +1 of the numerator
};

inline BlowupDiscrepancy blowup_discrepancy(const std::vector<Int>& omega, const Int& omega_f) {
    if (omega_f <= 0) throw std::invalid_argument("blowup_discrepancy: omega(f) must be positive");
    Int sum = 0;
    for (const Int& w : omega) {
        if (w <= 0) throw std::invalid_argument("blowup_discrepancy: weights must be positive");
        sum += w;
    }
    BlowupDiscrepancy b;
    b.ratio = Rat(sum) / Rat(omega_f);
    b.numerator = sum - omega_f;
    b.sign = b.numerator < 0 ? -1 : b.numerator > 0 ? 1 : 0;
    return b;
}

/// Brute-force scan of the key lattice inequality: for every Q in the box
/// 0 <= i_k <= s_k-1 with sum i_k d_{n,k} < d_n and every j with i_j != 0,
/// the covector fixed by w(Q) = w(P_k) = d_n (k != j) satisfies
/// sum w_k >= d_n, with the stated identity in the equality case.
struct NewtonLemmaReport {
    Int tuples_scanned = 0;
    Int cases_checked = 0;
    Int equality_cases = 0;
};

inline NewtonLemmaReport verify_newton_lemma(const SylvesterContext& ctx) {
    if (ctx.n > 4) throw std::invalid_argument("verify_newton_lemma: n <= 4 required");
    SylvesterContext prev = ctx.n >= 1 ? make_context(ctx.n - 1) : ctx;
    NewtonLemmaReport rep;
    std::vector<long> i(static_cast<size_t>(ctx.n + 1), 0);
    std::vector<long> caps(i.size());
    for (long k = 0; k <= ctx.n; ++k) caps[k] = static_cast<long>(ctx.s[k].get_si()) - 1;
    while (true) {
        Int total = 0;
        for (long k = 0; k <= ctx.n; ++k) total += i[static_cast<size_t>(k)] * ctx.d_row[k];
        if (total < ctx.d) {
            ++rep.tuples_scanned;
            for (long j = 0; j <= ctx.n; ++j) {
                if (i[static_cast<size_t>(j)] == 0) continue;
                ++rep.cases_checked;
                Rat wj = Rat(ctx.d - (total - i[static_cast<size_t>(j)] * ctx.d_row[j]),
                             Int(i[static_cast<size_t>(j)]));
                Rat sum = wj;
                for (long k = 0; k <= ctx.n; ++k)
                    if (k != j) sum += Rat(ctx.d_row[k]);
                if (sum < Rat(ctx.d))
                    throw std::logic_error("newton lemma violated at Q=" + join_tuple(i) +
                                           " j=" + std::to_string(j));
                if (sum == Rat(ctx.d)) {
                    ++rep.equality_cases;
                    if (ctx.n >= 1) {
                        Int lhs = 0;
                        for (long k = 0; k < ctx.n; ++k)
                            lhs += i[static_cast<size_t>(k)] * prev.d_row[k];
                        lhs += i[static_cast<size_t>(ctx.n)];
                        if (lhs != prev.d)
                            throw std::logic_error("newton lemma equality identity failed at Q=" +
                                                   join_tuple(i) + " j=" + std::to_string(j));
                    }
                }
            }
        }
        long pos = ctx.n;
        while (pos >= 0) {
            if (i[static_cast<size_t>(pos)] < caps[static_cast<size_t>(pos)]) {
                ++i[static_cast<size_t>(pos)];
                std::fill(i.begin() + pos + 1, i.end(), 0);
                break;
            }
            --pos;
        }
        if (pos < 0) break;
    }
    return rep;
}

}  // namespace cytower

#endif
