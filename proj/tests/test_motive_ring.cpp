#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "quotdt/tate_class.hpp"
#include "test_util.hpp"

using namespace quotdt;

TEST_CASE("ring arithmetic on Tate classes") {
    TateClass p1 = TateClass::projective(1); // 1 + L
    CHECK(p1 * p1 == TateClass::one() + TateClass::lefschetz(1).scale(Bigint(2)) + TateClass::lefschetz(2));

    // L^{3/2} = -u^3
    CHECK(TateClass::half_lefschetz(3) == TateClass::monomial(3, -1));
    // L^{1/2} * L^{-1/2} = 1
    CHECK(TateClass::half_lefschetz(1) * TateClass::half_lefschetz(-1) == TateClass::one());

    TateClass a = TateClass::monomial(2, 5) - TateClass::monomial(-1, 3);
    CHECK(a - a == TateClass::zero());
    CHECK((-a) + a == TateClass::zero());
    CHECK(a * TateClass::zero() == TateClass::zero());
}

TEST_CASE("canonical form drops zero coefficients") {
    TateClass a = TateClass::monomial(4) + TateClass::monomial(-2);
    TateClass b = TateClass::monomial(4);
    TateClass diff = a - b;
    CHECK(diff.terms().size() == 1);
    CHECK(diff.coeff(4) == 0);
    CHECK(diff.coeff(-2) == 1);
}

TEST_CASE("projective classes") {
    CHECK(TateClass::projective(0) == TateClass::one());
    CHECK(TateClass::projective(1) == TateClass::one() + TateClass::lefschetz(1));
    TateClass p3;
    for (long j = 0; j <= 3; ++j) p3 += TateClass::lefschetz(j);
    CHECK(TateClass::projective(3) == p3);
}

TEST_CASE("euler characteristic realization") {
    // chi(L^{-1/2}) = -1
    CHECK(TateClass::half_lefschetz(-1).euler_char() == -1);
    // chi(L^{3/2}) = -1 forced by multiplicativity
    CHECK(TateClass::half_lefschetz(3).euler_char() == -1);
    for (long r = 1; r <= 5; ++r) CHECK(TateClass::projective(r - 1).euler_char() == r);
}

TEST_CASE("weight specialization L^{1/2} -> q") {
    // [P^1] -> 1 + q^2
    CHECK(TateClass::projective(1).weight_specialize() ==
          WeightPolynomial::monomial(0) + WeightPolynomial::monomial(2));
    // u -> -q
    CHECK(TateClass::monomial(1).weight_specialize() == WeightPolynomial::monomial(1, -1));
    // L^{-3/2} -> q^{-3}
    CHECK(TateClass::half_lefschetz(-3).weight_specialize() == WeightPolynomial::monomial(-3));
}

TEST_CASE("effectivity is coefficient nonnegativity in u") {
    // u^{-rn-2} [P^{rn-1}] for (r,n) = (2,3) is effective
    CHECK((TateClass::monomial(-8) * TateClass::projective(5)).is_effective());
    // 1 - L is not
    CHECK_FALSE((TateClass::one() - TateClass::lefschetz(1)).is_effective());
    // the effective generator is -L^{1/2} = u
    CHECK_FALSE(TateClass::half_lefschetz(1).is_effective());
    CHECK((-TateClass::half_lefschetz(1)).is_effective());
}

TEST_CASE("realizations are ring homomorphisms") {
    testutil::Rng rng;
    for (int k = 0; k < 200; ++k) {
        TateClass a = rng.tate();
        TateClass b = rng.tate();
        CHECK((a * b).euler_char() == a.euler_char() * b.euler_char());
        CHECK((a + b).euler_char() == a.euler_char() + b.euler_char());
        CHECK((a * b).weight_specialize() == a.weight_specialize() * b.weight_specialize());
        // weight at q = 1 agrees with u -> -1
        Bigint at_minus_one = 0;
        for (const auto& [e, c] : a.terms()) at_minus_one += (e % 2 != 0) ? -c : c;
        CHECK(a.weight_specialize().evaluate_at_one() == at_minus_one);
    }
}

TEST_CASE("effectivity is closed under + and *") {
    testutil::Rng rng;
    for (int k = 0; k < 100; ++k) {
        TateClass a = rng.tate(true);
        TateClass b = rng.tate(true);
        CHECK((a + b).is_effective());
        CHECK((a * b).is_effective());
    }
}

TEST_CASE("pretty printers") {
    TateClass c = TateClass::half_lefschetz(3) - TateClass::integer(2) + TateClass::lefschetz(-1);
    CHECK(c.to_string_l() == "L^(3/2) - 2 + L^(-1)");
    TateClass d = TateClass::monomial(3) + TateClass::monomial(-2);
    CHECK(d.to_string_u() == "u^3 + u^(-2)");
    CHECK(TateClass::zero().to_string_l() == "0");
    CHECK(TateClass::integer(-1).to_string_u() == "-1");
}

TEST_CASE("JSON round trip is the identity") {
    testutil::Rng rng;
    for (int k = 0; k < 100; ++k) {
        TateClass a = rng.tate();
        CHECK(TateClass::from_json(a.to_json()) == a);
    }
    // exponents and coefficients serialize as decimal strings
    TateClass big = TateClass::monomial(-7, Bigint("123456789012345678901234567890"));
    auto j = big.to_json();
    CHECK(j["u"]["-7"] == "123456789012345678901234567890");
    CHECK(TateClass::from_json(j) == big);
}

TEST_CASE("L-integrality check") {
    CHECK(TateClass::lefschetz(3).is_l_integral());
    CHECK_FALSE(TateClass::half_lefschetz(3).is_l_integral());
    CHECK((TateClass::projective(1) * TateClass::projective(2)).is_l_integral());
}

TEST_CASE("weight polynomial exponent halving") {
    WeightPolynomial w = WeightPolynomial::monomial(4, 3) + WeightPolynomial::monomial(-2);
    WeightPolynomial h = w.halve_exponents();
    CHECK(h == WeightPolynomial::monomial(2, 3) + WeightPolynomial::monomial(-1));
    CHECK_THROWS(WeightPolynomial::monomial(3).halve_exponents());
}
