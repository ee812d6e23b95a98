#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "quotdt/motive_series.hpp"
#include "test_util.hpp"

using namespace quotdt;

namespace {

MotiveSeries geometric(long order) { // 1/(1-t)
    MotiveSeries s(order);
    for (long n = 0; n <= order; ++n) s.set_coeff(n, TateClass::one());
    return s;
}

} // namespace

TEST_CASE("series arithmetic") {
    const long N = 8;
    MotiveSeries one_minus_t = MotiveSeries::one(N);
    one_minus_t.set_coeff(1, -TateClass::one());
    CHECK(one_minus_t.inverse() == geometric(N));

    MotiveSeries f = MotiveSeries::one(N);
    f.set_coeff(1, TateClass::lefschetz(1));
    CHECK(f * f.inverse() == MotiveSeries::one(N));

    CHECK(geometric(N).truncated(3) == geometric(3));

    MotiveSeries not_unit(N);
    not_unit.set_coeff(0, TateClass::lefschetz(1));
    CHECK_THROWS_WITH(not_unit.inverse(), "not invertible");
}

TEST_CASE("substitution t -> s t^e") {
    const long N = 6;
    MotiveSeries a = MotiveSeries::one(N);
    a.set_coeff(1, TateClass::one());
    // (1+t)|_{t->-t} = 1 - t
    MotiveSeries b = substitute(a, TateClass::integer(-1), 1);
    CHECK(b.coeff(1) == -TateClass::one());

    // 1/(1-t)|_{t->ut} = 1/(1-ut)
    MotiveSeries g = substitute(geometric(N), TateClass::monomial(1), 1);
    for (long n = 0; n <= N; ++n) CHECK(g.coeff(n) == TateClass::monomial(n));

    // (1+Lt)|_{t->t^2} = 1 + Lt^2
    MotiveSeries c = MotiveSeries::one(N);
    c.set_coeff(1, TateClass::lefschetz(1));
    MotiveSeries d = substitute(c, TateClass::one(), 2);
    CHECK(d.coeff(1) == TateClass::zero());
    CHECK(d.coeff(2) == TateClass::lefschetz(1));

    CHECK_THROWS_WITH(substitute(a, TateClass::projective(1), 1), "substitution requires monomial");
    CHECK_THROWS(substitute(a, TateClass::monomial(0, 2), 1));
}

TEST_CASE("sigma operations") {
    // sigma^2(-L^{1/2}) = L
    CHECK(sigma(TateClass::monomial(1), 2) == TateClass::lefschetz(1));
    // monomial rule on L^3 = u^6
    for (unsigned n = 1; n <= 4; ++n)
        CHECK(sigma(TateClass::lefschetz(3), n) == TateClass::lefschetz(3 * n));
    // sigma^2([P^1]) = [P^2] = [Sym^2 P^1]
    CHECK(sigma(TateClass::projective(1), 2) == TateClass::projective(2));
    // sigma^n([P^1]) = [P^n]
    for (unsigned n = 1; n <= 5; ++n)
        CHECK(sigma(TateClass::projective(1), n) == TateClass::projective(n));
    CHECK(sigma(TateClass::projective(2), 0) == TateClass::one());
}

TEST_CASE("sigma additivity on random classes") {
    testutil::Rng rng;
    for (int k = 0; k < 25; ++k) {
        TateClass a = rng.tate();
        TateClass b = rng.tate();
        for (unsigned n = 0; n <= 6; ++n) {
            TateClass lhs;
            for (unsigned i = 0; i <= n; ++i) lhs += sigma(a, i) * sigma(b, n - i);
            CHECK(lhs == sigma(a + b, n));
        }
    }
}

TEST_CASE("exponential of simple arguments") {
    const long N = 8;
    MotiveSeries t_only(N);
    t_only.set_coeff(1, TateClass::one());
    CHECK(exp_series(t_only) == geometric(N));

    MotiveSeries ut(N);
    ut.set_coeff(1, TateClass::monomial(1));
    MotiveSeries e = exp_series(ut);
    for (long n = 0; n <= N; ++n) CHECK(e.coeff(n) == TateClass::monomial(n));

    // Exp((1+L)t) = 1/((1-t)(1-Lt)); coefficients are [P^n]
    MotiveSeries p1t(N);
    p1t.set_coeff(1, TateClass::projective(1));
    MotiveSeries ep = exp_series(p1t);
    MotiveSeries expected = geometric(N) * substitute(geometric(N), TateClass::monomial(2), 1);
    CHECK(ep == expected);
    for (long n = 0; n <= N; ++n) CHECK(ep.coeff(n) == TateClass::projective(n));

    MotiveSeries bad = MotiveSeries::one(N);
    CHECK_THROWS(exp_series(bad));
}

TEST_CASE("logarithm") {
    const long N = 8;
    MotiveSeries t_only(N);
    t_only.set_coeff(1, TateClass::one());
    CHECK(log_series(geometric(N)) == t_only);

    // Log(M(q)) has coefficients 1, 2, 3, ... (n by sigma of the m q^m terms)
    MotiveSeries mac = MotiveSeries::one(N);
    for (long m = 1; m <= N; ++m)
        mac *= power_factor(N, TateClass::one(), m, Bigint(m));
    MotiveSeries logm = log_series(mac);
    for (long n = 1; n <= N; ++n) CHECK(logm.coeff(n) == TateClass::integer(n));

    CHECK_THROWS(log_series(t_only));
}

TEST_CASE("Exp and Log are mutually inverse group isomorphisms") {
    testutil::Rng rng;
    const long N = 7;
    for (int k = 0; k < 40; ++k) {
        MotiveSeries a = rng.zero_const_series(N);
        MotiveSeries b = rng.zero_const_series(N);
        CHECK(log_series(exp_series(a)) == a);
        CHECK(exp_series(a + b) == exp_series(a) * exp_series(b));
        MotiveSeries u = rng.unit_series(N);
        MotiveSeries v = rng.unit_series(N);
        CHECK(exp_series(log_series(u)) == u);
        CHECK(log_series(u * v) == log_series(u) + log_series(v));
    }
}

TEST_CASE("Exp preserves effectivity") {
    testutil::Rng rng;
    const long N = 7;
    for (int k = 0; k < 40; ++k) {
        MotiveSeries a = rng.zero_const_series(N, /*effective=*/true);
        MotiveSeries e = exp_series(a);
        for (long n = 0; n <= N; ++n) CHECK(e.coeff(n).is_effective());
    }
}

TEST_CASE("power structure examples") {
    const long N = 8;
    CHECK(power(geometric(N), TateClass::zero()) == MotiveSeries::one(N));

    // (1/(1-t))^L = sum L^n t^n = sum [Sym^n A^1] t^n
    MotiveSeries pl = power(geometric(N), TateClass::lefschetz(1));
    for (long n = 0; n <= N; ++n) CHECK(pl.coeff(n) == TateClass::lefschetz(n));

    // (1/(1-t))^{[P^1]} = 1/((1-t)(1-Lt))
    MotiveSeries pp1 = power(geometric(N), TateClass::projective(1));
    CHECK(pp1 == geometric(N) * substitute(geometric(N), TateClass::monomial(2), 1));
}

TEST_CASE("power structure axioms on random data") {
    testutil::Rng rng;
    const long N = 6;
    for (int k = 0; k < 30; ++k) {
        MotiveSeries a = rng.unit_series(N);
        MotiveSeries b = rng.unit_series(N);
        TateClass m = rng.tate();
        TateClass m2 = rng.tate();
        CHECK(power(a, TateClass::one()) == a);
        CHECK(power(a * b, m) == power(a, m) * power(b, m));
        CHECK(power(a, m + m2) == power(a, m) * power(a, m2));
        CHECK(power(a, m * m2) == power(power(a, m), m2));
        long e = rng.pick(1, 3);
        CHECK(substitute(power(a, m), TateClass::one(), e) ==
              power(substitute(a, TateClass::one(), e), m));
    }
}

TEST_CASE("configuration classes of affine space") {
    CHECK(config_class(1, 1) == TateClass::lefschetz(1));
    CHECK(config_class(2, 1) == TateClass::lefschetz(2));
    CHECK(config_class(1, 2) == TateClass::lefschetz(2) - TateClass::lefschetz(1));
    CHECK(config_class(3, 2) == TateClass::lefschetz(6) - TateClass::lefschetz(3));

    // ordered configurations fiber one point at a time:
    // [F(A^d, k)] = prod_{i<k} (L^d - i)
    for (unsigned d = 1; d <= 3; ++d)
        for (unsigned k = 1; k <= 5; ++k) {
            TateClass expected = TateClass::one();
            for (unsigned i = 0; i < k; ++i)
                expected *= TateClass::lefschetz(d) - TateClass::integer(i);
            CHECK(config_class(d, k) == expected);
        }

    // Stirling recomposition: sum_j S(k,j) [F(A^d, j)] = L^{dk}
    for (unsigned d = 1; d <= 3; ++d)
        for (unsigned k = 1; k <= 6; ++k) {
            TateClass sum;
            for (unsigned j = 1; j <= k; ++j) {
                TateClass term = config_class(d, j);
                term.scale(stirling2(k, j));
                sum += term;
            }
            CHECK(sum == TateClass::lefschetz(static_cast<long>(d) * k));
        }
}

TEST_CASE("stirling numbers") {
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(5, 3) == 25);
    CHECK(stirling2(6, 1) == 1);
    CHECK(stirling2(3, 4) == 0);
}

TEST_CASE("series JSON round trip") {
    testutil::Rng rng;
    for (int k = 0; k < 20; ++k) {
        MotiveSeries s = rng.unit_series(5);
        CHECK(MotiveSeries::from_json(s.to_json()) == s);
    }
}
