#pragma once

#include <random>

#include "quotdt/motive_series.hpp"
#include "quotdt/tate_class.hpp"

namespace testutil {

// Deterministic generators for the property tests.
struct Rng {
    std::mt19937_64 gen{0xC0FFEEull};

    long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }

    quotdt::TateClass tate(bool effective = false) {
        quotdt::TateClass c;
        long terms = pick(1, 3);
        for (long i = 0; i < terms; ++i)
            c += quotdt::TateClass::monomial(pick(-3, 3), quotdt::Bigint(pick(effective ? 0 : -3, 3)));
        return c;
    }

    quotdt::MotiveSeries unit_series(long order) {
        auto s = quotdt::MotiveSeries::one(order);
        for (long n = 1; n <= order; ++n)
            if (pick(0, 3) != 0) s.set_coeff(n, tate());
        return s;
    }

    quotdt::MotiveSeries zero_const_series(long order, bool effective = false) {
        quotdt::MotiveSeries s(order);
        for (long n = 1; n <= order; ++n)
            if (pick(0, 3) != 0) s.set_coeff(n, tate(effective));
        return s;
    }
};

} // namespace testutil
