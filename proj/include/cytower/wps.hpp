#ifndef CYTOWER_WPS_HPP
#define CYTOWER_WPS_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cytower/rational.hpp"
#include "cytower/sylvester.hpp"

namespace cytower {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;  // row-major

/// Fan data of P_{n+1} = P(d_{n,0},...,d_{n,n},1) in the fixed basis
/// v_k = e_k for k <= n, v_{n+1} = -(d_{n,0},...,d_{n,n}).
struct FanoSimplex {
    long dim = 0;          // n+1
    std::vector<IntVec> vertices;  // n+2 vertices in Z^{n+1}
};

/// Cyclic quotient chart C^{n+1}/mu_{d_{n,j}} of the ambient space.
struct QuotientChart {
    long j = 0;
    Int order;
    IntVec weights;  // residues (1, d_{n,k} mod d_{n,j} for k != j)
};

inline FanoSimplex build_simplex(const SylvesterContext& ctx) {
    FanoSimplex fs;
    fs.dim = ctx.n + 1;
    for (long k = 0; k <= ctx.n; ++k) {
        IntVec e(static_cast<size_t>(ctx.n + 1), 0);
        e[k] = 1;
        fs.vertices.push_back(e);
    }
    IntVec last;
    for (long k = 0; k <= ctx.n; ++k) last.push_back(-ctx.d_row[k]);
    fs.vertices.push_back(last);
    return fs;
}

inline std::vector<QuotientChart> charts(const SylvesterContext& ctx) {
    std::vector<QuotientChart> out;
    for (long j = 0; j <= ctx.n; ++j) {
        QuotientChart ch;
        ch.j = j;
        ch.order = ctx.d_row[j];
        ch.weights.push_back(Int(1) % ch.order);
        Int sum = 1;
        for (long k = 0; k <= ctx.n; ++k) {
            if (k == j) continue;
            ch.weights.push_back(ctx.d_row[k] % ch.order);
            sum += ctx.d_row[k];
        }
        if (sum % ch.order != 0)
            throw std::logic_error("charts: Reid sum congruence failed at j=" + std::to_string(j));
        out.push_back(ch);
    }
    return out;
}

/// The subdivision ray v_n' = (d_{n,n} v_n + v_{n+1}) / s_n.  Integrality
/// and the relation sum_{k<n} d_{n-1,k} v_k + v_n' = 0 are asserted.
inline IntVec crepant_ray(const SylvesterContext& ctx) {
    if (ctx.n < 1) throw std::invalid_argument("crepant_ray: n >= 1 required");
    FanoSimplex fs = build_simplex(ctx);
    SylvesterContext prev = make_context(ctx.n - 1);
    if (prev.d + 1 != ctx.s[ctx.n])
        throw std::logic_error("crepant_ray: d_{n-1} + 1 != s_n");
    IntVec v(static_cast<size_t>(ctx.n + 1));
    for (long k = 0; k <= ctx.n; ++k) {
        Int num = ctx.d_row[ctx.n] * fs.vertices[ctx.n][k] + fs.vertices[ctx.n + 1][k];
        if (num % ctx.s[ctx.n] != 0)
            throw std::logic_error("crepant_ray: non-integral coordinate");
        v[k] = num / ctx.s[ctx.n];
    }
    // sum_{k<n} d_{n-1,k} e_k + v_n' = 0
    for (long k = 0; k <= ctx.n; ++k) {
        Int expect = (k < ctx.n) ? -prev.d_row[k] : Int(0);
        if (v[k] != expect) throw std::logic_error("crepant_ray: relation (v_n') failed");
    }
    return v;
}

// --- small exact linear algebra -------------------------------------------

inline Int det(IntMat m) {
    // Bareiss fraction-free elimination
    const size_t k = m.size();
    Int prev = 1;
    int sign = 1;
    for (size_t i = 0; i < k; ++i) {
        if (m[i][i] == 0) {
            size_t p = i + 1;
            while (p < k && m[p][i] == 0) ++p;
            if (p == k) return 0;
            std::swap(m[i], m[p]);
            sign = -sign;
        }
        for (size_t r = i + 1; r < k; ++r)
            for (size_t c = i + 1; c < k; ++c)
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) / prev;
        prev = m[i][i];
    }
    return sign * m[k - 1][k - 1];
}

/// Solve a square rational system by Gaussian elimination.
inline std::optional<std::vector<Rat>> solve_rational(std::vector<std::vector<Rat>> a,
                                                      std::vector<Rat> b) {
    const size_t k = a.size();
    for (size_t i = 0; i < k; ++i) {
        size_t p = i;
        while (p < k && a[p][i] == 0) ++p;
        if (p == k) return std::nullopt;
        std::swap(a[i], a[p]);
        std::swap(b[i], b[p]);
        for (size_t r = 0; r < k; ++r) {
            if (r == i || a[r][i] == 0) continue;
            Rat f = a[r][i] / a[i][i];
            for (size_t c = i; c < k; ++c) a[r][c] -= f * a[i][c];
            b[r] -= f * b[i];
        }
    }
    std::vector<Rat> x(k);
    for (size_t i = 0; i < k; ++i) x[i] = b[i] / a[i][i];
    return x;
}

// --------------------------------------------------------------------------

struct SelfDualityWitness {
    IntMat map;                  // unimodular T with T v_k = u_{sigma(k)}
    std::vector<long> sigma;     // vertex permutation
    std::vector<IntVec> dual_vertices;
};

/// Polar-dual vertices: u_j solves <u_j, v_k> = -1 for all k != j.
/// Throws if the dual simplex is not a lattice polytope.
inline std::vector<IntVec> polar_dual_vertices(const FanoSimplex& fs) {
    const long m = fs.dim;  // number of coordinates
    std::vector<IntVec> dual;
    for (size_t j = 0; j < fs.vertices.size(); ++j) {
        std::vector<std::vector<Rat>> a;
        std::vector<Rat> b;
        for (size_t k = 0; k < fs.vertices.size(); ++k) {
            if (k == j) continue;
            std::vector<Rat> row;
            for (long c = 0; c < m; ++c) row.emplace_back(fs.vertices[k][c]);
            a.push_back(row);
            b.emplace_back(-1);
        }
        auto x = solve_rational(a, b);
        if (!x) throw std::logic_error("polar dual: singular system");
        IntVec u;
        for (const Rat& q : *x) {
            if (q.get_den() != 1) throw std::runtime_error("not reflexive: non-integral dual vertex");
            u.push_back(q.get_num());
        }
        // verify by substitution
        for (size_t k = 0; k < fs.vertices.size(); ++k) {
            if (k == j) continue;
            Int dot = 0;
            for (long c = 0; c < m; ++c) dot += u[c] * fs.vertices[k][c];
            if (dot != -1) throw std::logic_error("polar dual: verification failed");
        }
        dual.push_back(u);
    }
    return dual;
}

/// Brute-force search for a unimodular map T and vertex permutation sigma
/// with T v_k = u_{sigma(k)}.  Deterministic first witness in scan order.
inline SelfDualityWitness self_duality_witness(const SylvesterContext& ctx) {
    if (ctx.n > 5) throw std::invalid_argument("self_duality_witness: n <= 5 required");
    FanoSimplex fs = build_simplex(ctx);
    std::vector<IntVec> dual = polar_dual_vertices(fs);
    const long m = fs.dim;
    const size_t nv = fs.vertices.size();
    std::vector<long> sigma(nv);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        // v_k = e_k for k < m, so the columns of T are u_{sigma(0..m-1)}
        IntMat t(static_cast<size_t>(m), IntVec(static_cast<size_t>(m)));
        for (long c = 0; c < m; ++c)
            for (long r = 0; r < m; ++r) t[r][c] = dual[sigma[c]][r];
        Int dt = det(t);
        if (dt != 1 && dt != -1) continue;
        // check the last vertex
        bool ok = true;
        for (long r = 0; r < m && ok; ++r) {
            Int acc = 0;
            for (long c = 0; c < m; ++c) acc += t[r][c] * fs.vertices[nv - 1][c];
            if (acc != dual[sigma[nv - 1]][r]) ok = false;
        }
        if (ok) return {t, sigma, dual};
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    throw std::runtime_error("no witness: permutation scan exhausted");
}

}  // namespace cytower

#endif
