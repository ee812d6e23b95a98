#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "quotdt/gen_functions.hpp"
#include "quotdt/plane_partitions.hpp"

using namespace quotdt;

TEST_CASE("MacMahon coefficients against the plane-partition enumerator") {
    IntSeries m = macmahon(10);
    CHECK(m[0] == 1);
    CHECK(m[1] == 1);
    CHECK(m[2] == 3);
    CHECK(m[3] == 6);
    CHECK(m[4] == 13);
    for (int n = 0; n <= 10; ++n) CHECK(m[static_cast<size_t>(n)] == plane_partition_count(n));
}

TEST_CASE("dt_series signs and the quintic example") {
    // M(-q) = 1, -1, 3, -6, 13
    IntSeries modd = dt_series(1, 1, 4);
    CHECK(modd[0] == 1);
    CHECK(modd[1] == -1);
    CHECK(modd[2] == 3);
    CHECK(modd[3] == -6);
    CHECK(modd[4] == 13);

    // rank 2, chi = -200: M(q)^{-400}
    IntSeries quintic = dt_series(2, -200, 6);
    CHECK(quintic[1] == -400);
    // independent route: invert M(q)^{400}
    IntSeries m400(7, Bigint(0));
    m400[0] = 1;
    for (long m = 1; m <= 6; ++m) int_series_mul_factor(m400, +1, m, Bigint(m) * 400);
    CHECK(quintic == int_series_inverse(m400));
    CHECK(int_series_mul(quintic, m400) == IntSeries{1, 0, 0, 0, 0, 0, 0});

    // even rank, positive chi reduces to plain MacMahon powers
    IntSeries m2 = dt_series(2, 1, 6);
    IntSeries mm = macmahon(6);
    CHECK(m2 == int_series_mul(int_series_mul(mm, mm), IntSeries{1, 0, 0, 0, 0, 0, 0}));
}

TEST_CASE("z_affine low-order coefficients") {
    MotiveSeries z1 = z_affine(1, 3);
    CHECK(z1.coeff(0) == TateClass::one());
    CHECK(z1.coeff(1) == TateClass::half_lefschetz(3)); // L^{3/2}
    // [Hilb^2 A^3]_vir = L + L^2 + L^3
    CHECK(z1.coeff(2) == TateClass::lefschetz(1) + TateClass::lefschetz(2) + TateClass::lefschetz(3));

    MotiveSeries z2 = z_affine(2, 2);
    CHECK(z2.coeff(0) == TateClass::one());
    CHECK(z2.coeff(1) == TateClass::lefschetz(1) + TateClass::lefschetz(2));
    // n = 1 model is smooth of dimension r+2: coefficient L^{-(r+2)/2} L^3 [P^{r-1}]
    for (unsigned r = 1; r <= 4; ++r) {
        MotiveSeries z = z_affine(r, 1);
        TateClass expected = TateClass::half_lefschetz(-(static_cast<long>(r) + 2)) *
                             TateClass::lefschetz(3) * TateClass::projective(r - 1);
        CHECK(z.coeff(1) == expected);
    }
}

TEST_CASE("punctual series first coefficients") {
    // r=1: t-coefficient of P_1(-t) is -L^{-3/2} = u^{-3}
    MotiveSeries p1 = p_punctual(1, 2);
    CHECK(p1.coeff(0) == TateClass::one());
    CHECK(p1.coeff(1) == -TateClass::half_lefschetz(-3));
    CHECK(p1.coeff(1) == TateClass::monomial(-3));

    // r=2: t-coefficient of P_2(t) is L^{-2} [P^1]
    MotiveSeries p2 = p_punctual(2, 1);
    CHECK(p2.coeff(1) == TateClass::lefschetz(-2) * TateClass::projective(1));
}

TEST_CASE("omega classes") {
    CHECK(omega(1, 1) == TateClass::monomial(-3));
    CHECK(omega(1, 1) == -TateClass::half_lefschetz(-3));
    for (unsigned r = 1; r <= 4; ++r)
        for (unsigned n = 1; n <= 4; ++n) {
            CHECK(omega(r, n).is_effective());
            CHECK(omega(r, n).euler_char() == Bigint(r) * n);
        }
}

TEST_CASE("omega generates the punctual series under Exp") {
    for (unsigned r = 1; r <= 3; ++r) {
        const long N = 8;
        MotiveSeries arg(N);
        for (long n = 1; n <= N; ++n) arg.set_coeff(n, omega(r, static_cast<unsigned>(n)));
        CHECK(exp_series(arg) == p_punctual(r, N));
    }
}

TEST_CASE("local product formula matches the power of the punctual series") {
    for (unsigned r = 1; r <= 3; ++r) {
        const long N = 8;
        TateClass sign = TateClass::integer(r % 2 != 0 ? -1 : 1);
        CHECK(substitute(z_affine(r, N), sign, 1) ==
              power(p_punctual(r, N), TateClass::lefschetz(3)));
    }
}

TEST_CASE("threefold partition function") {
    auto p3 = ThreefoldInput::from_motive(TateClass::projective(3));
    CHECK(p3.euler == 4);

    // both modes agree
    for (unsigned r = 1; r <= 2; ++r)
        CHECK(z_threefold(p3, r, 6, ZMode::power) == z_threefold(p3, r, 6, ZMode::closed_form));

    // [Y] = L^3 recovers the affine series after the sign substitution
    auto affine = ThreefoldInput::from_motive(TateClass::lefschetz(3));
    for (unsigned r = 1; r <= 3; ++r) {
        TateClass sign = TateClass::integer(r % 2 != 0 ? -1 : 1);
        CHECK(z_threefold(affine, r, 6, ZMode::power) == substitute(z_affine(r, 6), sign, 1));
    }

    // r=1 first-order term is -[Y x P^0]_vir = -L^{-3/2} [P^3]
    MotiveSeries z = z_threefold(p3, 1, 3, ZMode::closed_form);
    CHECK(z.coeff(1) == -(TateClass::half_lefschetz(-3) * TateClass::projective(3)));

    // euler realization coefficient-wise gives MacMahon powers: the signed
    // series has chi-series M(t)^{r chi(Y)}
    for (unsigned r = 1; r <= 2; ++r) {
        MotiveSeries zz = z_threefold(p3, r, 6, ZMode::closed_form);
        IntSeries expected(7, Bigint(0));
        expected[0] = 1;
        for (long m = 1; m <= 6; ++m)
            int_series_mul_factor(expected, +1, m, Bigint(m) * 4 * r);
        for (long n = 0; n <= 6; ++n) CHECK(zz.coeff(n).euler_char() == expected[static_cast<size_t>(n)]);
        // equivalently, the unsigned series realizes to M((-1)^r t)^{4r}
        TateClass sign = TateClass::integer(r % 2 != 0 ? -1 : 1);
        MotiveSeries unsigned_z = substitute(zz, sign, 1);
        IntSeries alt = dt_series(r, 4, 6);
        for (long n = 0; n <= 6; ++n)
            CHECK(unsigned_z.coeff(n).euler_char() == alt[static_cast<size_t>(n)]);
    }

    // missing motive is rejected
    ThreefoldInput no_motive;
    no_motive.euler = 4;
    CHECK_THROWS_WITH(z_threefold(no_motive, 1, 4, ZMode::closed_form), "closed-form requires [Y]");
    // odd u-exponents (non-L-integral classes) are rejected
    ThreefoldInput odd;
    odd.motive = TateClass::half_lefschetz(3);
    odd.euler = -1;
    CHECK_THROWS(z_threefold(odd, 1, 4, ZMode::power));
    // inconsistent euler is rejected
    ThreefoldInput bad;
    bad.motive = TateClass::projective(3);
    bad.euler = 5;
    CHECK_THROWS(z_threefold(bad, 1, 4, ZMode::power));
}

TEST_CASE("chern exponent against the splitting-principle expansion") {
    // formal Chern roots x1, x2, x3, each twisted by -(x1+x2+x3)
    std::mt19937_64 gen(7);
    std::uniform_int_distribution<long long> dist(-6, 6);
    for (int k = 0; k < 500; ++k) {
        long long x1 = dist(gen), x2 = dist(gen), x3 = dist(gen);
        long long c1 = x1 + x2 + x3;
        long long c2 = x1 * x2 + x1 * x3 + x2 * x3;
        long long c3 = x1 * x2 * x3;
        long long twisted = (x1 - c1) * (x2 - c1) * (x3 - c1);
        CHECK(twisted == chern_exponent(c1 * c2, c3));
    }
    CHECK(chern_exponent(24, 4) == -20);   // P^3
    CHECK(chern_exponent(0, -200) == -200); // quintic 3-fold
    // c1 = 0 makes the twist trivial: exponent equals c3
    for (long long a = -3; a <= 3; ++a)
        for (long long b = -3; b <= 3; ++b) {
            long long x1 = a, x2 = b, x3 = -a - b;
            long long c2 = x1 * x2 + x1 * x3 + x2 * x3;
            long long c3 = x1 * x2 * x3;
            CHECK(chern_exponent(0 * c2, c3) == c3);
        }
}

TEST_CASE("dt_series chern-number route agrees with the Euler route for c1 = 0") {
    // Calabi-Yau input: c1 = 0 and c3 = chi(Y)
    ThreefoldInput y;
    y.euler = -200;
    y.chern = ChernNumbers{0, -200, true};
    y.validate();
    CHECK(dt_series(2, chern_exponent(y.chern->c1c2, y.chern->c3), 3) == dt_series(2, y.euler, 3));
}

TEST_CASE("vanishing-cycle weight series") {
    // r=1: coefficient of t^1 of the product is w
    WeightSeries v1 = vc_weight_series(1, 4);
    CHECK(v1.coeff(0) == WeightPolynomial::monomial(0));
    CHECK(v1.coeff(1) == WeightPolynomial::monomial(1));

    // r=2, m=1: exponents k+2-rm = 0 and 1, so the t-coefficient is 1 + w
    WeightSeries v2 = vc_weight_series(2, 3);
    CHECK(v2.coeff(1) == WeightPolynomial::monomial(0) + WeightPolynomial::monomial(1));

    // both sides agree identically
    for (unsigned r = 1; r <= 3; ++r) {
        auto [lhs, rhs] = vc_weight_sides(r, 6);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("threefold input validation of Chern data") {
    ThreefoldInput y;
    y.euler = 4;
    y.chern = ChernNumbers{24, 4, false};
    y.validate(); // P^3 data, no c1 = 0 claim

    ThreefoldInput bad;
    bad.euler = 4;
    bad.chern = ChernNumbers{24, 4, true}; // c1 = 0 declared but c1c2 != 0
    CHECK_THROWS(bad.validate());
}
