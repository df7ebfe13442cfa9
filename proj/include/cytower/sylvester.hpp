#ifndef CYTOWER_SYLVESTER_HPP
#define CYTOWER_SYLVESTER_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "cytower/rational.hpp"

namespace cytower {

/// Exponent vector of a deformation monomial together with its weight.
struct ExponentTuple {
    std::vector<long> i;  // i_0 .. i_n
    Int weight;

    bool operator==(const ExponentTuple&) const = default;
};

/// The integers s_0..s_n, d_n, d_{n,j} and the Milnor number for a fixed
/// dimension n.  All derived data is computed once in the constructor and
/// immutable afterwards.
struct SylvesterContext {
    long n = 0;
    std::vector<Int> s;      // s_0 = 2, s_{k+1} = 1 + prod_{i<=k} s_i
    Int d;                   // d_n = prod s_k
    std::vector<Int> d_row;  // d_{n,j} = d_n / s_j
    Int mu;                  // prod (s_k - 1)
};

inline SylvesterContext make_context(long n) {
    if (n < 0) throw std::invalid_argument("make_context: n must be >= 0");
    SylvesterContext ctx;
    ctx.n = n;
    Int prod = 1;
    for (long k = 0; k <= n; ++k) {
        Int sk = (k == 0) ? Int(2) : Int(1 + prod);
        ctx.s.push_back(sk);
        prod *= sk;
    }
    ctx.d = prod;
    ctx.mu = 1;
    for (long k = 0; k <= n; ++k) {
        ctx.d_row.push_back(ctx.d / ctx.s[k]);
        ctx.mu *= ctx.s[k] - 1;
    }
    return ctx;
}

/// w(i_0,...,i_n) = d_n - sum i_k d_{n,k}.  May be negative.
inline Int weight(const SylvesterContext& ctx, const std::vector<long>& i) {
    if (static_cast<long>(i.size()) != ctx.n + 1)
        throw std::invalid_argument("weight: exponent list must have length n+1");
    Int w = ctx.d;
    for (long k = 0; k <= ctx.n; ++k) w -= i[k] * ctx.d_row[k];
    return w;
}

/// Number of tuples 0 <= i_k <= s_k-2 with positive weight, without
/// materializing them.  Iterates the prefixes (i_1,...,i_{n-1}) and counts
/// the admissible last coordinate in closed form.
inline Int count_positive(const SylvesterContext& ctx) {
    const long n = ctx.n;
    if (n == 0) return 1;  // the single tuple (0), weight d_0 = 2
    // i_0 = 0 always (s_0 - 2 = 0).  Walk prefixes (i_1,...,i_{n-1}).
    std::vector<long> prefix(static_cast<size_t>(n - 1), 0);
    std::vector<long> caps(prefix.size());
    for (long k = 1; k < n; ++k) caps[k - 1] = static_cast<long>(ctx.s[k].get_si()) - 2;
    Int total = 0;
    const Int& dn = ctx.d;
    const Int& dlast = ctx.d_row[n];
    const Int last_cap = ctx.s[n] - 2;
    while (true) {
        Int partial = 0;
        for (long k = 1; k < n; ++k) partial += prefix[k - 1] * ctx.d_row[k];
        // count i_n in [0, s_n - 2] with partial + i_n * d_{n,n} < d_n
        Int room = dn - partial - 1;
        if (room >= 0) {
            Int hi = floor_div(room, dlast);
            if (hi > last_cap) hi = last_cap;
            if (hi >= 0) total += hi + 1;
        }
        // advance the prefix, rightmost fastest (lexicographic order)
        long pos = n - 2;
        while (pos >= 0) {
            if (prefix[pos] < caps[pos]) {
                ++prefix[pos];
                std::fill(prefix.begin() + pos + 1, prefix.end(), 0);
                break;
            }
            --pos;
        }
        if (pos < 0) break;
    }
    return total;
}

/// All tuples 0 <= i_k <= s_k-2 of positive weight, lexicographic order.
/// Refuses to materialize more than `cap` tuples.
inline std::vector<ExponentTuple> enumerate_positive(const SylvesterContext& ctx,
                                                     const Int& cap = Int(10000000)) {
    Int expect = count_positive(ctx);
    if (expect > cap)
        throw std::runtime_error(
            "enumerate_positive: count " + expect.get_str() +
            " exceeds cap; use count_positive");
    std::vector<ExponentTuple> out;
    std::vector<long> i(static_cast<size_t>(ctx.n + 1), 0);
    std::vector<long> caps(i.size());
    for (long k = 0; k <= ctx.n; ++k) caps[k] = static_cast<long>(ctx.s[k].get_si()) - 2;
    while (true) {
        Int w = weight(ctx, i);
        if (w > 0) out.push_back({i, w});
        long pos = ctx.n;
        while (pos >= 0) {
            if (i[pos] < caps[pos]) {
                ++i[pos];
                std::fill(i.begin() + pos + 1, i.end(), 0);
                break;
            }
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

/// Weight multiset of the positive monomials, sorted ascending.
inline std::vector<Int> positive_weights(const SylvesterContext& ctx,
                                         const Int& cap = Int(10000000)) {
    std::vector<Int> w;
    for (const auto& t : enumerate_positive(ctx, cap)) w.push_back(t.weight);
    std::sort(w.begin(), w.end());
    return w;
}

/// Growth constants of the tower: c with s_m ~ c^{2^{m+1}}, and the
/// prefactor a with dim+1 ~ a c^{2^{m+2}} / (m-1)!.  c is extracted by
/// repeated square roots at 256-bit precision; both estimates are monotone
/// in depth, which bounds the error well below the returned digits.
inline std::pair<double, double> asymptotic_constants(long depth) {
    if (depth < 5) throw std::invalid_argument("asymptotic_constants: depth >= 5 required");
    SylvesterContext ctx = make_context(depth);
    mpf_class c(ctx.s[depth], 256);
    for (long k = 0; k <= depth; ++k) c = sqrt(c);  // s_depth ^ (1 / 2^{depth+1})
    // a at the largest m with computable dim (prefix counting caps at m = 5):
    long m = std::min<long>(depth, 5);
    SylvesterContext cm = make_context(m);
    Int count = count_positive(cm);  // dim M_m + 1
    Int fact = 1;
    for (long k = 2; k <= m - 1; ++k) fact *= k;
    // c^{2^{m+2}} = s_depth ^ (2^{m+2} / 2^{depth+1}), exact when m+1 >= depth
    mpf_class cpow = c;
    for (long k = 0; k < m + 2; ++k) cpow = cpow * cpow;
    mpf_class a = mpf_class(count, 256) * mpf_class(fact, 256) / cpow;
    return {c.get_d(), a.get_d()};
}

}  // namespace cytower

#endif
