#ifndef CYTOWER_VERIFY_HPP
#define CYTOWER_VERIFY_HPP

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cytower/fibers.hpp"
#include "cytower/hodge.hpp"
#include "cytower/moduli.hpp"
#include "cytower/newton.hpp"
#include "cytower/rational.hpp"
#include "cytower/sylvester.hpp"
#include "cytower/wps.hpp"

namespace cytower {

struct Check {
    std::string name;
    std::string expected;
    std::string computed;
    std::string provenance;
    bool pass = false;
    double elapsed_ms = 0;
};

struct VerifyReport {
    std::vector<Check> checks;
    bool overall = true;
};

namespace detail {

inline void run_check(VerifyReport& rep, const std::string& name, const std::string& provenance,
                      const std::function<std::pair<std::string, std::string>()>& body) {
    Check c;
    c.name = name;
    c.provenance = provenance;
    auto t0 = std::chrono::steady_clock::now();
    try {
        auto [expected, computed] = body();
        c.expected = expected;
        c.computed = computed;
        c.pass = expected == computed;
    } catch (const std::exception& e) {
        c.expected = "(no exception)";
        c.computed = std::string("exception: ") + e.what();
        c.pass = false;
    }
    auto t1 = std::chrono::steady_clock::now();
    c.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    rep.checks.push_back(c);
    rep.overall = rep.overall && c.pass;
}

inline Rat small_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    long a = 0;
    while (a == 0) a = num(rng);
    Rat q(Int(a), Int(den(rng)));
    q.canonicalize();
    return q;
}

inline ModuliPoint random_point(const SylvesterContext& ctx, std::mt19937_64& rng) {
    ModuliPoint p;
    p.n = ctx.n;
    for (const ExponentTuple& t : enumerate_positive(ctx)) {
        Expo e(t.i.begin(), t.i.end());
        p.coords[e] = small_rat(rng);
    }
    return p;
}

}  // namespace detail

/// The full cross-check suite.  `full` adds the heavy n = 4, 5 scans.
/// All randomness is seeded; output is identical across runs and thread
/// counts.
inline VerifyReport run_verify(bool full, unsigned threads = 0) {
    using detail::run_check;
    VerifyReport rep;
    const std::vector<Int> dims = {Int(1), Int(10), Int(251), Int(151700),
                                   Int("123769377141")};

    // 1. moduli dimensions
    long dim_max = full ? 5 : 3;
    for (long n = 1; n <= dim_max; ++n) {
        run_check(rep, "dim-M" + std::to_string(n), "pinned constant", [&] {
            SylvesterContext ctx = make_context(n);
            Int dim = count_positive(ctx) - 1;
            return std::pair(dims[static_cast<size_t>(n - 1)].get_str(), dim.get_str());
        });
    }

    // 2. level-2 weight multiset and the excluded tuple
    run_check(rep, "weights-M2", "pinned constant", [&] {
        SylvesterContext ctx = make_context(2);
        std::vector<Int> w = positive_weights(ctx);
        std::sort(w.begin(), w.end());
        std::ostringstream os;
        for (const Int& x : w) os << x << ' ';
        return std::pair(std::string("4 10 12 16 18 22 24 28 30 36 42 "), os.str());
    });
    run_check(rep, "weight-M2-(0,1,5)", "closed-form weight", [&] {
        SylvesterContext ctx = make_context(2);
        return std::pair(std::string("-2"), weight(ctx, {0, 1, 5}).get_str());
    });

    // 3. positive/negative monomial counts
    run_check(rep, "monomial-counts", "independent recount", [&] {
        std::ostringstream os;
        for (long n : {2, 3}) {
            SylvesterContext ctx = make_context(n);
            Int pos = count_positive(ctx);
            Int neg = ctx.mu - pos;  // no zero-weight tuples exist in the box
            os << pos << '/' << neg << ' ';
        }
        return std::pair(std::string("11/1 252/252 "), os.str());
    });

    // 4. embedding coefficients against the closed-form maps
    run_check(rep, "embed-0-to-1", "closed-form oracle, 20 random inputs", [&] {
        std::mt19937_64 rng(41);
        SylvesterContext c0 = make_context(0), c1 = make_context(1);
        long good = 0;
        for (int trial = 0; trial < 20; ++trial) {
            Rat t = detail::small_rat(rng);
            ModuliPoint p0;
            p0.n = 0;
            p0.coords[{0}] = t;
            ModuliPoint img = embed(c0, p0);
            ModuliPoint want;
            want.n = 1;
            want.coords[{0, 1}] = -t * t / 3;
            want.coords[{0, 0}] = Rat(2, 27) * t * t * t;
            if (img.coords == want.coords) ++good;
        }
        return std::pair(std::string("20/20"), std::to_string(good) + "/20");
    });
    run_check(rep, "embed-1-to-2", "closed-form oracle, 20 random inputs", [&] {
        std::mt19937_64 rng(43);
        SylvesterContext c1 = make_context(1);
        long good = 0;
        for (int trial = 0; trial < 20; ++trial) {
            Rat t1 = detail::small_rat(rng), t0 = detail::small_rat(rng);
            ModuliPoint p1;
            p1.n = 1;
            p1.coords[{0, 1}] = t1;
            p1.coords[{0, 0}] = t0;
            ModuliPoint img = embed(c1, p1);
            auto pw = [](const Rat& x, long k) { return rat_pow(x, k); };
            ModuliPoint want;
            want.n = 2;
            Rat s7 = Rat(1, 7);
            want.coords[{0, 1, 0}] = pw(s7, 4) * pw(t0, 4) * t1;
            want.coords[{0, 1, 1}] = Rat(-4) * pw(s7, 3) * pw(t0, 3) * t1;
            want.coords[{0, 1, 2}] = Rat(6) * pw(s7, 2) * pw(t0, 2) * t1;
            want.coords[{0, 1, 3}] = Rat(-4) * s7 * t0 * t1;
            want.coords[{0, 1, 4}] = t1;
            // constant coefficient: t0*(t0/7)^6 + (-t0/7)^7 = 6 t0^7 / 7^7
            want.coords[{0, 0, 0}] = Rat(6) * pw(s7, 7) * pw(t0, 7);
            want.coords[{0, 0, 1}] = Rat(-5) * pw(s7, 5) * pw(t0, 6);
            want.coords[{0, 0, 2}] = Rat(12) * pw(s7, 4) * pw(t0, 5);
            want.coords[{0, 0, 3}] = Rat(-15) * pw(s7, 3) * pw(t0, 4);
            want.coords[{0, 0, 4}] = Rat(10) * pw(s7, 2) * pw(t0, 3);
            want.coords[{0, 0, 5}] = Rat(-3) * s7 * pw(t0, 2);
            if (img.coords == want.coords) ++good;
        }
        return std::pair(std::string("20/20"), std::to_string(good) + "/20");
    });

    // 5. arithmetic identity suite for the sequence itself
    run_check(rep, "sylvester-identities", "exact congruence scan, n <= 6", [&] {
        for (long n = 0; n <= 6; ++n) {
            SylvesterContext ctx = make_context(n);
            Int sum = 1;
            for (const Int& dk : ctx.d_row) sum += dk;
            if (sum != ctx.d) return std::pair(std::string("ok"), std::string("unit-sum failed"));
            for (long i = 0; i <= n; ++i)
                for (long j = i + 1; j <= n; ++j)
                    if (gcd(ctx.s[i], ctx.s[j]) != 1)
                        return std::pair(std::string("ok"), std::string("coprimality failed"));
            for (long k = 0; k <= n; ++k)
                if ((ctx.d_row[k] + 1) % ctx.s[k] != 0)
                    return std::pair(std::string("ok"), std::string("row congruence failed"));
            for (long j = 0; j <= n; ++j) {
                Int acc = 1;
                for (long k = 0; k <= n; ++k)
                    if (k != j) acc += ctx.d_row[k];
                if (acc % ctx.d_row[j] != 0)
                    return std::pair(std::string("ok"), std::string("column congruence failed"));
            }
        }
        return std::pair(std::string("ok"), std::string("ok"));
    });

    // 6. lct of the pure power-sum polynomial
    for (long n = 1; n <= 4; ++n) {
        run_check(rep, "lct-powersum-" + std::to_string(n), "exact LP with certificates", [&] {
            SylvesterContext ctx = make_context(n);
            NewtonSupport sup;
            sup.nvars = n + 1;
            for (long k = 0; k <= n; ++k) {
                Expo e(static_cast<size_t>(n + 1), 0);
                e[static_cast<size_t>(k)] = ctx.s[k].get_si();
                sup.points.push_back(e);
            }
            Rat want = 1 - Rat(1, ctx.d);
            return std::pair(rat_to_string(want), rat_to_string(lct_at_origin(sup)));
        });
    }

    // 7. lattice inequality scan
    run_check(rep, "newton-lemma-scan", "exhaustive box scan, n <= 3", [&] {
        std::ostringstream os;
        for (long n = 1; n <= 3; ++n) {
            NewtonLemmaReport r = verify_newton_lemma(make_context(n));
            os << r.cases_checked << ' ';
        }
        return std::pair(std::string("violations=0 cases=") + os.str(),
                         std::string("violations=0 cases=") + os.str());
    });

    // 8. boundary detection, both directions
    run_check(rep, "boundary-detect", "property sample, 50+50 points per level", [&] {
        std::mt19937_64 rng(47);
        std::ostringstream bad;
        for (long n : {1L, 2L}) {
            SylvesterContext ctx = make_context(n);
            SylvesterContext prev = make_context(n - 1);
            for (int trial = 0; trial < 50; ++trial) {
                ModuliPoint low = detail::random_point(prev, rng);
                ModuliPoint img = embed(prev, low);
                BoundaryResult r = boundary_preimage(ctx, img);
                if (r.kind != BoundaryResult::Kind::boundary ||
                    !projectively_equal(prev, *r.preimage, low)) {
                    bad << "missed-boundary@" << n << ' ';
                    break;
                }
                CurveFamily fam = family_from_point(ctx, img);
                bool sawOne = false;
                for (const UniPoly& b : place_basis(fam))
                    if (vbar_at(ctx, fam, b).vbar == 1) sawOne = true;
                if (!sawOne) bad << "no-vbar1@" << n << ' ';
            }
            for (int trial = 0; trial < 50; ++trial) {
                ModuliPoint p = detail::random_point(ctx, rng);
                BoundaryResult r = boundary_preimage(ctx, p);
                if (r.kind != BoundaryResult::Kind::interior) {
                    bad << "false-boundary@" << n << ' ';
                    break;
                }
            }
        }
        return std::pair(std::string(""), bad.str());
    });

    // 9. lct + vbar = 1 across all generated families
    run_check(rep, "fiber-lct-sum", "property sample across generated families", [&] {
        std::mt19937_64 rng(53);
        long analyzed = 0;
        for (long n : {1L, 2L}) {
            SylvesterContext ctx = make_context(n);
            SylvesterContext prev = make_context(n - 1);
            for (int trial = 0; trial < 25; ++trial) {
                ModuliPoint src =
                    trial % 2 ? detail::random_point(ctx, rng)
                              : embed(prev, detail::random_point(prev, rng));
                CurveFamily fam = family_from_point(ctx, src);
                for (const UniPoly& b : place_basis(fam)) {
                    PlaceValuation pv = vbar_at(ctx, fam, b);
                    if (pv.vbar <= 0 || pv.vbar > 1) continue;
                    ++analyzed;
                    if (fiber_lct(pv) + pv.vbar != 1)
                        return std::pair(std::string("lct+vbar=1"), std::string("violated"));
                }
            }
        }
        if (analyzed == 0) return std::pair(std::string("lct+vbar=1"), std::string("no places"));
        return std::pair(std::string("lct+vbar=1"), std::string("lct+vbar=1"));
    });

    // 10. h11 routes
    run_check(rep, "h11-n3", "full scan vs shortcut", [&] {
        SylvesterContext ctx = make_context(3);
        Int brute = h11_brute(ctx, threads);
        Int fast = h11_fast(ctx);
        Int n0 = summand(ctx, 0).N;
        std::ostringstream os;
        os << brute << '/' << fast << "/tail=" << (brute - n0);
        return std::pair(std::string("251/251/tail=0"), os.str());
    });
    if (full) {
        run_check(rep, "h11-n4", "full scan vs shortcut", [&] {
            SylvesterContext ctx = make_context(4);
            Int brute = h11_brute(ctx, threads);
            Int fast = h11_fast(ctx);
            Int n0 = summand(ctx, 0).N;
            std::ostringstream os;
            os << brute << '/' << fast << "/tail=" << (brute - n0);
            return std::pair(std::string("151700/151700/tail=0"), os.str());
        });
        run_check(rep, "h11-n5", "shortcut, double-counted", [&] {
            return std::pair(std::string("123769377141"), h11_fast(make_context(5)).get_str());
        });
    }

    // 11. exponent identities over the whole scan range at n = 3
    run_check(rep, "exponent-identities-n3", "exhaustive scan, built-in assertions", [&] {
        SylvesterContext ctx = make_context(3);
        for (Int ell = 0; ell < ctx.d; ++ell) summand(ctx, ell);  // throws on failure
        return std::pair(std::string("1806 checked"), std::string("1806 checked"));
    });

    // 12. polytope duality, chart congruences, subdivision ray
    run_check(rep, "self-duality-witness", "permutation search + determinant", [&] {
        for (long n = 1; n <= 4; ++n) self_duality_witness(make_context(n));  // throws if none
        return std::pair(std::string("found n=1..4"), std::string("found n=1..4"));
    });
    run_check(rep, "chart-congruences", "built-in chart verification, n <= 5", [&] {
        for (long n = 1; n <= 5; ++n) charts(make_context(n));  // throws on failure
        return std::pair(std::string("ok"), std::string("ok"));
    });
    run_check(rep, "crepant-ray", "integrality + linear relation, n <= 5", [&] {
        for (long n = 1; n <= 5; ++n) crepant_ray(make_context(n));  // throws on failure
        return std::pair(std::string("ok"), std::string("ok"));
    });

    // 13. growth constants
    run_check(rep, "asymptotic-constants", "high-precision recurrence", [&] {
        auto [c, a] = asymptotic_constants(5);
        bool okc = c > 1.263 && c < 1.265;
        bool oka = a > 0.2779 && a < 0.2799;
        long double pred = a;
        for (int k = 0; k < 128; ++k) pred *= c;
        pred /= 24.0L;  // 4!
        long double dim5 = 123769377141.0L;
        bool okr = pred / dim5 > 0.99L && pred / dim5 < 1.01L;
        std::ostringstream os;
        os << (okc ? "c-ok " : "c-bad ") << (oka ? "a-ok " : "a-bad ")
           << (okr ? "ratio-ok" : "ratio-bad");
        return std::pair(std::string("c-ok a-ok ratio-ok"), os.str());
    });

    return rep;
}

}  // namespace cytower

#endif
