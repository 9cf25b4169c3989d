#include <cmath>

#include "doctest.h"
#include "kitaev/model.hpp"

using namespace kitaev;

TEST_CASE("from_eta endpoints and symmetry point") {
    auto c = from_eta({0.0, 0.0, 1.0}, 10);
    CHECK(c.t == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(c.delta == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(c.mu == 0.0);
    CHECK(c.L == 10);

    c = from_eta({0.5, 0.0, 1.0}, 10);
    CHECK(c.t == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(c.delta == doctest::Approx(0.5).epsilon(1e-14));

    c = from_eta({1.0, 0.3, 2.0}, 4);
    CHECK(c.t == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(c.delta == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(c.mu == doctest::Approx(0.6));
}

TEST_CASE("from_eta at eta=0.3") {
    auto c = from_eta({0.3, 0.1, 1.0}, 51);
    CHECK(c.t == doctest::Approx(0.793893).epsilon(1e-6));
    CHECK(c.delta == doctest::Approx(0.206107).epsilon(1e-6));
    CHECK(c.mu == doctest::Approx(0.1));
    CHECK(c.t + c.delta == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("pythagorean identity and monotonicity over eta") {
    double prev_t = 2.0, prev_d = -1.0;
    for (int i = 0; i <= 100; ++i) {
        const double eta = i / 100.0;
        auto c = from_eta({eta, 0.0, 1.0}, 5);
        CHECK(std::abs(c.t + c.delta - 1.0) <= 1e-15);
        CHECK(c.t <= prev_t + 1e-15);
        CHECK(c.delta >= prev_d - 1e-15);
        prev_t = c.t;
        prev_d = c.delta;
    }
}

TEST_CASE("to_eta inverts from_eta") {
    auto p = to_eta({5, 1.0, 0.0, 0.0});
    CHECK(p.eta == 0.0);
    CHECK(p.E0 == 1.0);
    CHECK(p.mu_tilde == 0.0);

    p = to_eta({5, 0.5, 0.5, 1.0});
    CHECK(p.eta == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(p.mu_tilde == doctest::Approx(1.0));

    // t = 0 edge
    p = to_eta({5, 0.0, 0.7, 0.0});
    CHECK(p.eta == 1.0);

    for (int i = 0; i <= 20; ++i) {
        for (double mu_tilde : {-1.3, 0.0, 0.4}) {
            for (double E0 : {0.5, 1.0, 3.0}) {
                const EtaPoint in{i / 20.0, mu_tilde, E0};
                const auto back = to_eta(from_eta(in, 7));
                CHECK(std::abs(back.eta - in.eta) <= 1e-12 * (1.0 + in.eta));
                CHECK(std::abs(back.mu_tilde - in.mu_tilde) <= 1e-12 * (1.0 + std::abs(mu_tilde)));
                CHECK(std::abs(back.E0 - in.E0) <= 1e-12 * in.E0);
            }
        }
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(from_eta({-0.1, 0.0, 1.0}, 5), std::invalid_argument);
    CHECK_THROWS_AS(from_eta({1.1, 0.0, 1.0}, 5), std::invalid_argument);
    CHECK_THROWS_AS(from_eta({0.5, 0.0, 0.0}, 5), std::invalid_argument);
    CHECK_THROWS_AS(from_eta({0.5, 0.0, 1.0}, 0), std::invalid_argument);
    CHECK_THROWS_AS(to_eta({5, 0.0, 0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS((ChainParams{0, 1.0, 0.0, 0.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((ChainParams{5, -1.0, 0.0, 0.0}.validate()), std::invalid_argument);
}

TEST_CASE("regime classification") {
    CHECK(classify_regime({0.0, 0.0, 1.0}) == Regime::free_fermions);
    CHECK(classify_regime({1.0, 0.0, 1.0}) == Regime::pairing_only);
    CHECK(classify_regime({0.42, 0.0, 1.0}) == Regime::dimerized);
    CHECK(classify_regime({0.1, 0.0, 1.0}) == Regime::weak_coupling);
    CHECK(classify_regime({0.15, 0.0, 1.0}) == Regime::weak_coupling);
    // the border is a knob, not a constant
    CHECK(classify_regime({0.2, 0.0, 1.0}, 0.25) == Regime::weak_coupling);
    CHECK(to_string(Regime::dimerized) == "dimerized");
}
