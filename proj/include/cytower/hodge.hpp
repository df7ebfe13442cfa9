#ifndef CYTOWER_HODGE_HPP
#define CYTOWER_HODGE_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "cytower/rational.hpp"
#include "cytower/sylvester.hpp"

namespace cytower {

/// Fractional-part profile of one index ell in [0, d): theta_i = {ell/s_i}
/// for i <= n and theta_{n+1} = ell/d, split into T0 (theta = 0) and T1.
struct ThetaProfile {
    long ell = 0;
    std::vector<Rat> theta;   // size n+2
    std::vector<long> T0, T1;
};

inline ThetaProfile profile(const SylvesterContext& ctx, const Int& ell) {
    if (ell < 0 || ell >= ctx.d) throw std::out_of_range("profile: ell outside [0, d)");
    ThetaProfile pr;
    pr.ell = ell.get_si();
    for (long i = 0; i <= ctx.n; ++i) {
        Rat th = frac_part(Rat(ell) / Rat(ctx.s[i]));
        pr.theta.push_back(th);
        (th == 0 ? pr.T0 : pr.T1).push_back(i);
    }
    Rat last = Rat(ell) / Rat(ctx.d);
    pr.theta.push_back(last);
    (last == 0 ? pr.T0 : pr.T1).push_back(ctx.n + 1);
    return pr;
}

/// Count solutions of sum k_j a_j = target with 0 <= k_j <= cap_j.
/// Items are taken in decreasing a_j order; the last coordinate is decided
/// by divisibility instead of a loop.
inline Int knapsack_count(const std::vector<std::pair<Int, Int>>& items, size_t idx,
                          const Int& target) {
    if (target < 0) return 0;
    if (idx == items.size()) return target == 0 ? Int(1) : Int(0);
    const auto& [a, cap] = items[idx];
    if (idx + 1 == items.size()) {
        if (target % a != 0) return 0;
        return (target / a) <= cap ? Int(1) : Int(0);
    }
    Int total = 0;
    for (Int k = 0; k <= cap; ++k) {
        Int rest = target - k * a;
        if (rest < 0) break;
        total += knapsack_count(items, idx + 1, rest);
    }
    return total;
}

/// One ell-summand of Q(z,w): the exponents A, B, the integer S, and the
/// number N of lattice solutions of A + sum_{i in T0} k_i a_i = d (with
/// B = 0; otherwise N = 0).
struct HodgeSummand {
    ThetaProfile prof;
    Rat A, B;
    Int S;
    Int N;
};

inline HodgeSummand summand(const SylvesterContext& ctx, const Int& ell) {
    HodgeSummand hs;
    hs.prof = profile(ctx, ell);
    Rat half_d = Rat(ctx.d) / 2;
    std::vector<Int> a;  // a_i = d/s_i for i <= n, a_{n+1} = 1
    for (long i = 0; i <= ctx.n; ++i) a.push_back(ctx.d / ctx.s[i]);
    a.push_back(1);
    hs.A = 0;
    hs.B = 0;
    for (long i : hs.prof.T1) {
        hs.A += half_d - Rat(a[static_cast<size_t>(i)]);
        hs.B += Rat(ctx.d) * hs.prof.theta[static_cast<size_t>(i)] - half_d;
    }
    hs.S = ell;
    for (long i = 0; i <= ctx.n; ++i) hs.S -= ell / ctx.s[i];  // mpz floor division

    // the S identity and the B criterion, checked on every evaluation
    Rat srat = Rat(ell) / Rat(ctx.d);
    for (long i = 0; i <= ctx.n; ++i) srat += hs.prof.theta[static_cast<size_t>(i)];
    if (srat != Rat(hs.S)) throw std::logic_error("summand: S identity failed");
    bool bzero = hs.B == 0;
    if (bzero != (Rat(hs.S) * 2 == Rat(static_cast<long>(hs.prof.T1.size()))))
        throw std::logic_error("summand: B criterion failed");

    if (!bzero) {
        hs.N = 0;
        return hs;
    }
    Rat target_r = Rat(ctx.d) - hs.A;
    if (target_r.get_den() != 1 || target_r < 0) {
        hs.N = 0;
        return hs;
    }
    std::vector<std::pair<Int, Int>> items;
    for (long i : hs.prof.T0) {
        Int cap = i <= ctx.n ? ctx.s[i] - 2 : ctx.d - 2;
        items.emplace_back(a[static_cast<size_t>(i)], cap);
    }
    std::sort(items.begin(), items.end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });
    hs.N = knapsack_count(items, 0, Int(target_r.get_num()));
    return hs;
}

/// int64 fast path for one N(ell); valid whenever d fits in int64 (n <= 4).
inline std::int64_t n_of_ell_fast(const std::vector<std::int64_t>& s, std::int64_t d,
                                  std::int64_t ell) {
    const size_t n1 = s.size();  // indices 0..n
    std::int64_t S = ell, p = 0, sumA = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> items;  // (a_i, cap) for T0
    for (size_t i = 0; i < n1; ++i) {
        S -= ell / s[i];
        if (ell % s[i] == 0) {
            items.emplace_back(d / s[i], s[i] - 2);
        } else {
            ++p;
            sumA += d / s[i];
        }
    }
    if (ell == 0) {
        items.emplace_back(1, d - 2);
    } else {
        ++p;
        sumA += 1;  // a_{n+1} = 1, and n+1 is in T1 for ell > 0
    }
    if (2 * S != p) return 0;  // B != 0
    std::int64_t A2 = p * d - 2 * sumA;  // 2A
    if (A2 % 2 != 0) return 0;
    std::int64_t target = d - A2 / 2;
    if (target < 0) return 0;
    std::sort(items.begin(), items.end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });
    // same recursion as knapsack_count, in machine words
    struct Rec {
        const std::vector<std::pair<std::int64_t, std::int64_t>>& it;
        std::int64_t run(size_t idx, std::int64_t t) const {
            if (t < 0) return 0;
            if (idx == it.size()) return t == 0 ? 1 : 0;
            auto [a, cap] = it[idx];
            if (idx + 1 == it.size()) return (t % a == 0 && t / a <= cap) ? 1 : 0;
            std::int64_t total = 0;
            for (std::int64_t k = 0; k <= cap && k * a <= t; ++k)
                total += run(idx + 1, t - k * a);
            return total;
        }
    };
    return Rec{items}.run(0, target);
}

/// Full scan h11 = sum_{ell=0}^{d-1} N(ell); n <= 4 only.
inline Int h11_brute(const SylvesterContext& ctx, unsigned threads = 0) {
    if (ctx.n > 4)
        throw std::invalid_argument("h11_brute: scan bound exceeded, use h11_fast");
    std::vector<std::int64_t> s;
    for (const Int& si : ctx.s) s.push_back(si.get_si());
    const std::int64_t d = ctx.d.get_si();
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, 64);
    std::vector<std::int64_t> partial(threads, 0);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            std::int64_t acc = 0;
            for (std::int64_t ell = w; ell < d; ell += threads)
                acc += n_of_ell_fast(s, d, ell);
            partial[w] = acc;
        });
    }
    for (auto& t : pool) t.join();
    Int total = 0;
    for (std::int64_t x : partial) total += x;
    return total;
}

/// Shortcut: h11 = N(0), by the direct lattice count and by
/// count_positive - 1; the two routes must agree.
inline Int h11_fast(const SylvesterContext& ctx) {
    if (ctx.n < 3) throw std::invalid_argument("h11_fast: requires n >= 3");
    // route 1: tuples (k_1..k_n), 0 <= k_i <= s_i-2, sum k_i/s_i <= 1,
    // minus the zero tuple.  Iterate the first n-1 coordinates, close the
    // last one in closed form: k_n <= (1 - partial) * s_n.
    Int count = 0;
    std::vector<long> k(static_cast<size_t>(ctx.n - 1), 0);  // k_1..k_{n-1}
    while (true) {
        // partial = sum k_i d/s_i over i = 1..n-1, compare with d
        Int partial = 0;
        for (long i = 1; i < ctx.n; ++i) partial += k[static_cast<size_t>(i - 1)] * (ctx.d / ctx.s[i]);
        if (partial <= ctx.d) {
            Int hi = (ctx.d - partial) / (ctx.d / ctx.s[ctx.n]);
            Int cap = ctx.s[ctx.n] - 2;
            if (hi > cap) hi = cap;
            count += hi + 1;
        }
        long pos = ctx.n - 2;
        while (pos >= 0) {
            if (Int(k[static_cast<size_t>(pos)]) < ctx.s[pos + 1] - 2) {
                ++k[static_cast<size_t>(pos)];
                std::fill(k.begin() + pos + 1, k.end(), 0);
                break;
            }
            --pos;
        }
        if (pos < 0) break;
    }
    Int route1 = count - 1;
    Int route2 = count_positive(ctx) - 1;
    if (route1 != route2) throw std::logic_error("h11_fast: lattice-count routes disagree");
    return route1;
}

/// Which necessary condition of the vanishing argument eliminates ell.
struct AuditReport {
    long ell = 0;
    std::string gate;  // "m>=n-1", "parity", "residue"
    Int N;
};

inline AuditReport structure_audit(const SylvesterContext& ctx, const Int& ell) {
    if (ctx.n < 3 || ell <= 0)
        throw std::invalid_argument("structure_audit: requires n >= 3 and ell > 0");
    HodgeSummand hs = summand(ctx, ell);
    AuditReport rep;
    rep.ell = ell.get_si();
    rep.N = hs.N;
    const long m = static_cast<long>(hs.prof.T0.size());
    const long p = static_cast<long>(hs.prof.T1.size());
    // ell > 0 puts n+1 in T1
    if (std::find(hs.prof.T1.begin(), hs.prof.T1.end(), ctx.n + 1) == hs.prof.T1.end())
        throw std::logic_error("structure_audit: n+1 not in T1 at ell > 0");
    if (m < ctx.n - 1) {
        rep.gate = "m>=n-1";
    } else if (p % 2 != 0 || Rat(hs.S) * 2 != Rat(p)) {
        rep.gate = "parity";
    } else {
        // survivors of the first two gates have p = 2, m = n, and
        // T1 = {j, n+1} for a unique j in 0..n
        if (p != 2 || m != ctx.n)
            throw std::logic_error("structure_audit: T-shape failed at ell=" + std::to_string(rep.ell));
        long j = hs.prof.T1[0] == ctx.n + 1 ? hs.prof.T1[1] : hs.prof.T1[0];
        if (j < 0 || j > ctx.n)
            throw std::logic_error("structure_audit: bad T1 at ell=" + std::to_string(rep.ell));
        // the z-equation reads sum_{i in T0} k_i a_i = a_j + 1
        Int aj = ctx.d / ctx.s[j];
        if (Rat(ctx.d) - hs.A != Rat(aj + 1))
            throw std::logic_error("structure_audit: z-equation target mismatch at ell=" +
                                   std::to_string(rep.ell));
        // modulo s_i, i in T0: a_j + 1 = 1 and a_r = 0 for r != i, so any
        // solution forces k_i = -1 (mod s_i), impossible in [0, s_i-2]
        for (long i : hs.prof.T0) {
            if (aj % ctx.s[i] != 0 || (ctx.d / ctx.s[i]) % ctx.s[i] != ctx.s[i] - 1)
                throw std::logic_error("structure_audit: residue pattern failed at ell=" +
                                       std::to_string(rep.ell));
        }
        rep.gate = "residue";
    }
    if (hs.N != 0)
        throw std::logic_error("structure_audit: gate passed with N > 0 at ell=" +
                               std::to_string(rep.ell));
    return rep;
}

}  // namespace cytower

#endif
