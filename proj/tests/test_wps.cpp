#include <catch2/catch_amalgamated.hpp>

#include "cytower/wps.hpp"

using namespace cytower;

TEST_CASE("simplex vertices", "[wps]") {
    SylvesterContext c = make_context(2);
    FanoSimplex fs = build_simplex(c);
    REQUIRE(fs.dim == 3);
    REQUIRE(fs.vertices.size() == 4);
    REQUIRE(fs.vertices[0] == IntVec{1, 0, 0});
    REQUIRE(fs.vertices[3] == IntVec{-21, -14, -6});
}

TEST_CASE("quotient charts satisfy the sum congruence", "[wps]") {
    for (long n = 1; n <= 5; ++n) {
        auto chs = charts(make_context(n));  // throws internally on failure
        REQUIRE(chs.size() == static_cast<size_t>(n + 1));
        for (const auto& ch : chs) {
            REQUIRE(ch.weights.size() == static_cast<size_t>(n + 1));
            Int sum = 0;
            for (const Int& w : ch.weights) sum += w;
            REQUIRE(sum % ch.order == 0);
        }
    }
}

TEST_CASE("chart weights at n = 2", "[wps]") {
    auto chs = charts(make_context(2));
    REQUIRE(chs[2].order == 6);
    REQUIRE(chs[2].weights == IntVec{1, 21 % 6, 14 % 6});  // 1, 3, 2
}

TEST_CASE("crepant subdivision ray", "[wps]") {
    for (long n = 1; n <= 5; ++n) {
        SylvesterContext c = make_context(n);
        SylvesterContext prev = make_context(n - 1);
        IntVec v = crepant_ray(c);
        for (long k = 0; k < n; ++k) REQUIRE(v[k] == -prev.d_row[k]);
        REQUIRE(v[n] == 0);
    }
}

TEST_CASE("Bareiss determinant", "[wps]") {
    REQUIRE(det({{2, 0}, {0, 3}}) == 6);
    REQUIRE(det({{0, 1}, {1, 0}}) == -1);
    REQUIRE(det({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
    REQUIRE(det({{3, 1, 4}, {1, 5, 9}, {2, 6, 5}}) == -90);
}

TEST_CASE("rational solve", "[wps]") {
    auto x = solve_rational({{Rat(2), Rat(1)}, {Rat(1), Rat(3)}}, {Rat(5), Rat(10)});
    REQUIRE(x);
    REQUIRE((*x)[0] == 1);
    REQUIRE((*x)[1] == 3);
    REQUIRE_FALSE(solve_rational({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}, {Rat(1), Rat(2)}));
}

TEST_CASE("polar dual has the closed form", "[wps]") {
    for (long n = 1; n <= 4; ++n) {
        SylvesterContext c = make_context(n);
        FanoSimplex fs = build_simplex(c);
        auto dual = polar_dual_vertices(fs);
        REQUIRE(dual.size() == static_cast<size_t>(n + 2));
        for (long j = 0; j <= n; ++j)
            for (long k = 0; k <= n; ++k)
                REQUIRE(dual[static_cast<size_t>(j)][static_cast<size_t>(k)] ==
                        (j == k ? c.s[j] - 1 : Int(-1)));
        for (long k = 0; k <= n; ++k) REQUIRE(dual.back()[static_cast<size_t>(k)] == -1);
    }
}

TEST_CASE("self-duality witness", "[wps]") {
    for (long n = 1; n <= 4; ++n) {
        SylvesterContext c = make_context(n);
        FanoSimplex fs = build_simplex(c);
        SelfDualityWitness w = self_duality_witness(c);
        Int dt = det(w.map);
        REQUIRE((dt == 1 || dt == -1));
        // T maps every primal vertex to the permuted dual vertex
        for (size_t k = 0; k < fs.vertices.size(); ++k) {
            for (long r = 0; r <= n; ++r) {
                Int acc = 0;
                for (long col = 0; col <= n; ++col)
                    acc += w.map[static_cast<size_t>(r)][static_cast<size_t>(col)] *
                           fs.vertices[k][static_cast<size_t>(col)];
                REQUIRE(acc == w.dual_vertices[static_cast<size_t>(w.sigma[k])]
                                              [static_cast<size_t>(r)]);
            }
        }
    }
}
