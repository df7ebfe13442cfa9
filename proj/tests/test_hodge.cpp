#include <catch2/catch_amalgamated.hpp>

#include "cytower/hodge.hpp"

using namespace cytower;

TEST_CASE("theta profiles", "[hodge]") {
    SylvesterContext c = make_context(3);

    ThetaProfile p0 = profile(c, 0);
    REQUIRE(p0.T0 == std::vector<long>{0, 1, 2, 3, 4});
    REQUIRE(p0.T1.empty());

    ThetaProfile p1 = profile(c, 1);
    REQUIRE(p1.T0.empty());
    REQUIRE(p1.theta == std::vector<Rat>{Rat(1, 2), Rat(1, 3), Rat(1, 7), Rat(1, 43),
                                         Rat(1, 1806)});

    ThetaProfile p903 = profile(c, 903);  // 903 = 3 * 301
    REQUIRE(p903.theta[0] == Rat(1, 2));
    REQUIRE(p903.theta[1] == 0);
    REQUIRE(std::find(p903.T0.begin(), p903.T0.end(), 1) != p903.T0.end());

    REQUIRE_THROWS_AS(profile(c, 1806), std::out_of_range);
    REQUIRE_THROWS_AS(profile(c, -1), std::out_of_range);
}

TEST_CASE("summand at ell = 0", "[hodge]") {
    SylvesterContext c = make_context(3);
    HodgeSummand hs = summand(c, 0);
    REQUIRE(hs.A == 0);
    REQUIRE(hs.B == 0);
    REQUIRE(hs.S == 0);
    REQUIRE(hs.N == 251);
}

TEST_CASE("summand vanishes for positive ell", "[hodge]") {
    SylvesterContext c = make_context(3);
    for (Int ell : {Int(1), Int(2), Int(903), Int(1805)}) REQUIRE(summand(c, ell).N == 0);
}

TEST_CASE("knapsack counter", "[hodge]") {
    // k0*3 + k1*2 = 6, caps 2 and 3: (0,3), (2,0)
    REQUIRE(knapsack_count({{Int(3), Int(2)}, {Int(2), Int(3)}}, 0, Int(6)) == 2);
    REQUIRE(knapsack_count({{Int(3), Int(2)}, {Int(2), Int(3)}}, 0, Int(1)) == 0);
    REQUIRE(knapsack_count({}, 0, Int(0)) == 1);
    REQUIRE(knapsack_count({}, 0, Int(2)) == 0);
}

TEST_CASE("brute force equals shortcut", "[hodge]") {
    SylvesterContext c3 = make_context(3);
    REQUIRE(h11_brute(c3) == 251);
    REQUIRE(h11_fast(c3) == 251);
    REQUIRE(h11_brute(c3, 1) == h11_brute(c3, 4));  // thread-count independent
    SylvesterContext c4 = make_context(4);
    REQUIRE(h11_brute(c4) == 151700);
    REQUIRE(h11_fast(c4) == 151700);
}

TEST_CASE("level-5 shortcut and guards", "[hodge]") {
    REQUIRE(h11_fast(make_context(5)) == Int("123769377141"));
    REQUIRE_THROWS_AS(h11_fast(make_context(2)), std::invalid_argument);
    REQUIRE_THROWS_AS(h11_brute(make_context(5)), std::invalid_argument);
}

TEST_CASE("K3 count is reported, not asserted against the tower dimension", "[hodge]") {
    // the level-2 scan gives the classical 20, which differs from dim = 10
    REQUIRE(h11_brute(make_context(2)) == 20);
}

TEST_CASE("exponent identities across the full level-3 range", "[hodge]") {
    SylvesterContext c = make_context(3);
    // summand() itself asserts the S identity and the B criterion
    for (Int ell = 0; ell < c.d; ++ell) REQUIRE_NOTHROW(summand(c, ell));
}

TEST_CASE("structure audit eliminates every positive ell", "[hodge]") {
    SylvesterContext c = make_context(3);
    long m_gate = 0, parity_gate = 0, residue_gate = 0;
    for (Int ell = 1; ell < c.d; ++ell) {
        AuditReport r = structure_audit(c, ell);
        REQUIRE(r.N == 0);
        if (r.gate == "m>=n-1") ++m_gate;
        else if (r.gate == "parity") ++parity_gate;
        else if (r.gate == "residue") ++residue_gate;
        else FAIL("unknown gate " + r.gate);
    }
    REQUIRE(m_gate + parity_gate + residue_gate == 1805);
    REQUIRE(residue_gate > 0);  // some ell only fall to the final contradiction
}

TEST_CASE("audit rejects out-of-hypothesis input", "[hodge]") {
    REQUIRE_THROWS_AS(structure_audit(make_context(3), 0), std::invalid_argument);
    REQUIRE_THROWS_AS(structure_audit(make_context(2), 5), std::invalid_argument);
}

TEST_CASE("int64 fast path matches exact summand", "[hodge]") {
    SylvesterContext c = make_context(3);
    std::vector<std::int64_t> s;
    for (const Int& x : c.s) s.push_back(x.get_si());
    for (Int ell = 0; ell < c.d; ++ell)
        REQUIRE(Int(n_of_ell_fast(s, c.d.get_si(), ell.get_si())) == summand(c, ell).N);
}
