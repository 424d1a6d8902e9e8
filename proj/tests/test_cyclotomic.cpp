#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ydn/cyclotomic.hpp"

using ydn::cyc;

TEST_CASE("rational collapse and basic arithmetic") {
    CHECK(cyc(0).is_zero());
    CHECK(cyc(1).is_one());
    CHECK(cyc::rational(-3, 6) == cyc::rational(1, -2));
    CHECK((cyc::rational(1, 3) + cyc::rational(2, 5)) == cyc::rational(11, 15));

    // zeta_2 = -1 collapses to a conductor-1 value.
    cyc m1 = cyc::root(2, 1);
    CHECK(m1 == cyc(-1));
    CHECK(m1.conductor() == 1);
    CHECK(m1.is_rational());
}

TEST_CASE("cyclotomic relations") {
    // 1 + zeta_5 + ... + zeta_5^4 = 0
    cyc s = cyc(0);
    for (long k = 0; k < 5; ++k) s += cyc::root(5, k);
    CHECK(s.is_zero());

    // Phi_6 = x^2 - x + 1
    cyc z6 = cyc::root(6, 1);
    CHECK((z6 * z6 - z6 + cyc(1)).is_zero());

    // zeta_6^2 = zeta_3 across conductors
    CHECK(cyc::root(3, 1) == cyc::root(6, 2));
    // -zeta_3^2 = zeta_6
    CHECK(-cyc::root(3, 2) == cyc::root(6, 1));

    // i^2 = -1
    CHECK(cyc::root(4, 1) * cyc::root(4, 1) == cyc(-1));
}

TEST_CASE("mixed conductor products") {
    // zeta_3 * zeta_4 = zeta_12^7
    CHECK(cyc::root(3, 1) * cyc::root(4, 1) == cyc::root(12, 7));
    cyc a = cyc::root(3, 1) + cyc::rational(1, 2);
    cyc b = cyc::root(4, 3) - cyc(2);
    cyc p = a * b;
    CHECK(p == b * a);
    CHECK((p - a * b).is_zero());
}

TEST_CASE("inverse and division") {
    cyc a = cyc::root(5, 2) + cyc(3);
    CHECK((a * a.inv()).is_one());
    cyc b = cyc::root(12, 7) - cyc::rational(1, 3);
    CHECK((b / b).is_one());
    CHECK_THROWS_AS(cyc(0).inv(), ydn::arithmetic_error);

    // (1 - zeta_n) * (1 + zeta_n + ... + zeta_n^{n-1}) telescopes; check a known inverse:
    // 1/(1 - zeta_3) = (1 - zeta_3^2)/((1-zeta_3)(1-zeta_3^2)) = (1 - zeta_3^2)/3.
    cyc z3 = cyc::root(3, 1);
    CHECK((cyc(1) - z3).inv() == (cyc(1) - z3 * z3) / cyc(3));
}

TEST_CASE("galois and conjugation") {
    cyc z5 = cyc::root(5, 1);
    CHECK(z5.conj() == cyc::root(5, 4));
    CHECK(z5.galois(2) == cyc::root(5, 2));
    cyc v = cyc(2) * z5 + cyc::rational(1, 7);
    CHECK(v.conj().conj() == v);
    CHECK_THROWS_AS(cyc::root(6, 1).galois(2), ydn::arithmetic_error);
}

TEST_CASE("root order detection") {
    CHECK(cyc(1).root_order() == 1);
    CHECK(cyc(-1).root_order() == 2);
    CHECK(cyc::root(12, 5).root_order() == 12);
    CHECK(cyc::root(12, 8).root_order() == 3);  // zeta_12^8 = zeta_3^2
    CHECK(cyc(2).root_order() == 0);
    CHECK((cyc::root(5, 1) + cyc(1)).root_order() == 0);
    CHECK((-cyc::root(3, 1)).root_order() == 6);
}

TEST_CASE("canonical strings") {
    CHECK(cyc(0).str() == "0");
    CHECK(cyc::rational(-3, 6).str() == "-1/2");
    CHECK(cyc::root(4, 1).str() == "z(4,1)");
    CHECK((cyc(1) + cyc(2) * cyc::root(4, 1)).str() == "1 + 2*z(4,1)");
    CHECK((-cyc::root(3, 1) - cyc(1)).str() == "-1 - z(3,1)");
}
