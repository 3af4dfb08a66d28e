#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "har/dft.hpp"
#include "har/median_filter.hpp"
#include "har/window.hpp"
#include "oracles.hpp"

using namespace har;

TEST_CASE("median filter width 1 is the identity") {
    const std::vector<double> in = {3.0, -1.0, 4.0, 1.0, 5.0};
    CHECK(median_filter(in, 1) == in);
}

TEST_CASE("median filter width 3 removes single-sample spikes") {
    const std::vector<double> in = {0, 10, 0, 10, 0};
    CHECK(median_filter(in, 3) == std::vector<double>{0, 0, 10, 0, 0});
}

TEST_CASE("median filter keeps constant input constant") {
    const std::vector<double> in(9, 2.5);
    CHECK(median_filter(in, 3) == in);
    CHECK(median_filter(in, 7) == in);
}

TEST_CASE("median filter rejects bad widths") {
    const std::vector<double> in = {1, 2, 3};
    CHECK_THROWS_AS(median_filter(in, 0), std::invalid_argument);
    CHECK_THROWS_AS(median_filter(in, 2), std::invalid_argument);
    CHECK_THROWS_AS(median_filter(in, -3), std::invalid_argument);
    CHECK_THROWS_AS(median_filter(in, 7), std::invalid_argument);  // > 2*len-1
    CHECK(median_filter(std::vector<double>{}, 3).empty());
}

TEST_CASE("median filter output is bounded by the input range") {
    std::mt19937_64 gen(99);
    std::uniform_real_distribution<double> dist(-10, 10);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> in(40);
        for (double& v : in) v = dist(gen);
        const double lo = *std::min_element(in.begin(), in.end());
        const double hi = *std::max_element(in.begin(), in.end());
        for (int width : {1, 3, 5, 9}) {
            const auto out = median_filter(in, width);
            REQUIRE(out.size() == in.size());
            for (double v : out) {
                CHECK(v >= lo);
                CHECK(v <= hi);
            }
        }
    }
}

TEST_CASE("median filter preserves monotone inputs") {
    std::vector<double> in;
    for (int i = 0; i < 30; ++i) in.push_back(i * 0.5);
    for (int width : {3, 5, 7}) {
        const auto out = median_filter(in, width);
        for (std::size_t i = 1; i < out.size(); ++i) CHECK(out[i] >= out[i - 1]);
    }
}

TEST_CASE("streaming median filter reproduces the batch filter") {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> dist(-5, 5);
    for (int width : {1, 3, 5, 9}) {
        for (std::size_t n : {static_cast<std::size_t>(width / 2 + 1), std::size_t(20), std::size_t(101)}) {
            std::vector<double> in(n);
            for (double& v : in) v = dist(gen);

            StreamingMedianFilter f(width);
            std::vector<double> streamed;
            for (double v : in)
                for (double o : f.push(v)) streamed.push_back(o);
            for (double o : f.finish()) streamed.push_back(o);

            if (static_cast<std::size_t>(width) <= 2 * n - 1)
                CHECK(streamed == median_filter(in, width));
            CHECK(streamed.size() == in.size());
        }
    }
}

TEST_CASE("window_triples counts and offsets") {
    auto make_series = [](std::size_t n) {
        LabeledSeries s;
        for (std::size_t i = 0; i < n; ++i)
            s.samples.push_back({static_cast<double>(i), 0.0, 0.0});
        return s;
    };

    const auto two = window_triples(make_series(16), 8);
    REQUIRE(two.size() == 2);
    CHECK(two[0].wx[0] == 0.0);
    CHECK(two[1].wx[0] == 8.0);

    CHECK(window_triples(make_series(15), 8).size() == 1);

    const auto five = window_triples(make_series(24), 4);
    REQUIRE(five.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(five[i].wx[0] == static_cast<double>(4 * i));

    CHECK(window_triples(make_series(7), 8).empty());
    CHECK_THROWS_AS(window_triples(make_series(16), 0), std::invalid_argument);
}

TEST_CASE("window label is the majority, ties to the smallest code") {
    LabeledSeries s;
    for (int i = 0; i < 8; ++i) s.samples.push_back({0, 0, 0});
    s.labels = {Activity::Running, Activity::Running, Activity::Running, Activity::Idle,
                Activity::Idle,    Activity::Running, Activity::Running, Activity::Idle};
    CHECK(window_triples(s, 8)[0].label == Activity::Running);

    s.labels = {Activity::Jumping, Activity::Jumping, Activity::Jumping, Activity::Jumping,
                Activity::Idle,    Activity::Idle,    Activity::Idle,    Activity::Idle};
    CHECK(window_triples(s, 8)[0].label == Activity::Idle);  // 4-4 tie

    s.labels.clear();
    CHECK(!window_triples(s, 8)[0].label.has_value());
}

TEST_CASE("dft of a constant window is DC only") {
    Window w;
    w.fill(3.5);
    const auto mags = dft_magnitudes(w);
    CHECK(mags[0] == doctest::Approx(8 * 3.5).epsilon(1e-12));
    for (int k = 1; k < 8; ++k) CHECK(mags[static_cast<std::size_t>(k)] == doctest::Approx(0.0).scale(1));
}

TEST_CASE("dft of cos(2*pi*n/8) concentrates in bins 1 and 7") {
    Window w;
    for (int n = 0; n < 8; ++n)
        w[static_cast<std::size_t>(n)] = std::cos(2.0 * std::numbers::pi * n / 8.0);
    const auto mags = dft_magnitudes(w);
    for (int k = 0; k < 8; ++k) {
        const double want = (k == 1 || k == 7) ? 4.0 : 0.0;
        CHECK(std::abs(mags[static_cast<std::size_t>(k)] - want) < 1e-9);
    }
}

TEST_CASE("dft of zeros is zero") {
    Window w{};
    for (double m : dft_magnitudes(w)) CHECK(m == 0.0);
}

TEST_CASE("dft matches the naive O(n^2) oracle") {
    std::mt19937_64 gen(2024);
    std::uniform_real_distribution<double> dist(-20, 20);
    for (int trial = 0; trial < 1000; ++trial) {
        Window w;
        for (double& v : w) v = dist(gen);
        const auto got = dft_magnitudes(w);
        const auto want = oracle::naive_dft_magnitudes(w);
        for (int k = 0; k < 8; ++k)
            CHECK(std::abs(got[static_cast<std::size_t>(k)] - want[static_cast<std::size_t>(k)]) < 1e-9);
    }
}

TEST_CASE("Parseval: sum of squared magnitudes is 8x the signal energy") {
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> dist(-10, 10);
    for (int trial = 0; trial < 200; ++trial) {
        Window w;
        double sumsq = 0.0;
        for (double& v : w) {
            v = dist(gen);
            sumsq += v * v;
        }
        const auto mags = dft_magnitudes(w);
        double spectral = 0.0;
        for (double m : mags) spectral += m * m;
        CHECK(oracle::rel_err(spectral, 8.0 * sumsq) < 1e-6);
    }
}
