#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "exmon/preprocess.hpp"

using namespace exmon;

namespace {

constexpr double kAlpha = 0.833;

std::vector<LinearAccelSample> run_filter(const std::vector<Vec3>& raw,
                                          GravityState state, double alpha) {
    std::vector<LinearAccelSample> out;
    int64_t t = 0;
    for (const Vec3& r : raw) {
        auto res = high_pass(t, r, state, alpha);
        state = res.state;
        out.push_back(res.sample);
        t += 200;
    }
    return out;
}

}  // namespace

TEST_CASE("constant input settles to zero linear output") {
    // start from a deliberately wrong state to exercise convergence
    GravityState state{{0.0, 0.0, 0.0}, true};
    const std::vector<Vec3> raw(200, Vec3{0.0, 0.0, 9.81});
    const auto out = run_filter(raw, state, kAlpha);
    const Vec3 last = out.back().a;
    CHECK(std::fabs(last.x) < 1e-3);
    CHECK(std::fabs(last.y) < 1e-3);
    CHECK(std::fabs(last.z) < 1e-3);
}

TEST_CASE("state initializes to the first raw sample") {
    GravityState state;
    auto first = high_pass(0, {0.0, 0.0, 10.0}, state, kAlpha);
    CHECK(first.sample.a.x == 0.0);
    CHECK(first.sample.a.y == 0.0);
    CHECK(first.sample.a.z == 0.0);

    auto second = high_pass(200, {0.0, 0.0, 10.0}, first.state, kAlpha);
    CHECK(second.sample.a.z == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("single step from a zeroed state matches hand-computed values") {
    // expected: gravity (0,0,1.67), linear (0,0,8.33)
    GravityState state{{0.0, 0.0, 0.0}, true};
    const auto res = high_pass(0, {0.0, 0.0, 10.0}, state, kAlpha);
    CHECK(res.state.gravity.z == doctest::Approx(1.67).epsilon(0.01));
    CHECK(res.sample.a.z == doctest::Approx(8.33).epsilon(0.01));
}

TEST_CASE("gravity estimate converges on constant input") {
    GravityState state{{5.0, -3.0, 2.0}, true};
    const Vec3 input{1.0, 2.0, 9.5};
    for (int i = 0; i < 50; ++i) {
        state = high_pass(i * 200, input, state, kAlpha).state;
    }
    CHECK((state.gravity - input).norm() < 1e-3 * input.norm());
}

TEST_CASE("high_pass is deterministic bit for bit") {
    std::mt19937 rng(11);
    std::vector<Vec3> raw;
    for (int i = 0; i < 500; ++i) {
        raw.push_back({rng() * 1e-9, rng() * 1e-9, 9.81 + rng() * 1e-9});
    }
    const auto a = run_filter(raw, GravityState{}, kAlpha);
    const auto b = run_filter(raw, GravityState{}, kAlpha);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].a.x == b[i].a.x);
        CHECK(a[i].a.y == b[i].a.y);
        CHECK(a[i].a.z == b[i].a.z);
    }
}

TEST_CASE("zero-mean sinusoid passes with long-run mean approaching zero") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const double amp = 0.5 + (rng() % 100) / 10.0;
        const double freq = 0.4 + 0.1 * (rng() % 9);  // below Nyquist at 5 Hz
        GravityState state;
        double mean_short = 0.0, mean_long = 0.0;
        const int short_n = 100, long_n = 4000;
        for (int i = 0; i < long_n; ++i) {
            const double t = i * 0.2;
            const Vec3 raw{amp * std::sin(2 * std::numbers::pi * freq * t), 0.0, 9.81};
            auto res = high_pass(i * 200, raw, state, kAlpha);
            state = res.state;
            if (i < short_n) mean_short += res.sample.a.x;
            mean_long += res.sample.a.x;
        }
        mean_short /= short_n;
        mean_long /= long_n;
        CHECK(std::fabs(mean_long) < 0.01 * amp);
        CHECK(std::fabs(mean_long) <= std::fabs(mean_short) + 1e-9);
    }
}

TEST_CASE("rejects non-finite input and bad alpha") {
    GravityState state;
    CHECK_THROWS_AS(high_pass(0, {0.0, NAN, 0.0}, state, kAlpha), Error);
    CHECK_THROWS_AS(high_pass(0, {0.0, 0.0, 9.81}, state, 1.5), Error);
}

namespace {

LinearAccelSample at(int64_t t) { return {t, {0.1, 0.2, 0.3}}; }

}  // namespace

TEST_CASE("50 samples at 200 ms make exactly two full windows") {
    WindowAssembler assembler{EngineConfig{}};
    std::vector<Window> windows;
    for (int i = 0; i < 50; ++i) {
        if (auto w = assembler.push(at(i * 200))) windows.push_back(std::move(*w));
    }
    REQUIRE(windows.size() == 2);
    CHECK(windows[0].index == 0);
    CHECK(windows[1].index == 1);
    CHECK(windows[0].samples.size() == 25);
    CHECK(windows[1].samples.size() == 25);
    CHECK(windows[0].start_ms == 0);
    CHECK(windows[0].end_ms == 5000);
    CHECK(windows[1].start_ms == 5000);
    CHECK(windows[1].end_ms == 10000);
    CHECK_FALSE(windows[0].degraded);
    CHECK_FALSE(windows[0].partial);
    CHECK_FALSE(assembler.flush().has_value());
}

TEST_CASE("exactly one window worth of samples leaves nothing to flush") {
    WindowAssembler assembler{EngineConfig{}};
    int full = 0;
    for (int i = 0; i < 25; ++i) {
        if (assembler.push(at(i * 200))) ++full;
    }
    CHECK(full == 1);
    CHECK_FALSE(assembler.flush().has_value());
}

TEST_CASE("trailing samples only come out of an explicit flush, marked partial") {
    WindowAssembler assembler{EngineConfig{}};
    int full = 0;
    for (int i = 0; i < 30; ++i) {
        if (assembler.push(at(i * 200))) ++full;
    }
    CHECK(full == 1);
    const auto tail = assembler.flush();
    REQUIRE(tail.has_value());
    CHECK(tail->partial);
    CHECK(tail->samples.size() == 5);
    CHECK(tail->index == 1);
}

TEST_CASE("oversized inter-sample gap degrades the window instead of dropping it") {
    WindowAssembler assembler{EngineConfig{}};
    std::vector<Window> windows;
    int64_t t = 0;
    for (int i = 0; i < 25; ++i) {
        if (auto w = assembler.push(at(t))) windows.push_back(std::move(*w));
        t += 200;
    }
    REQUIRE(windows.size() == 1);
    CHECK_FALSE(windows[0].degraded);

    t += 500;  // 700 ms gap > 3 * 200 ms
    for (int i = 0; i < 25; ++i) {
        if (auto w = assembler.push(at(t))) windows.push_back(std::move(*w));
        t += 200;
    }
    REQUIRE(windows.size() == 2);
    CHECK(windows[1].degraded);
    CHECK(windows[1].samples.size() == 25);
}

TEST_CASE("windows concatenate back to the input sequence") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        WindowAssembler assembler{EngineConfig{}};
        const int n = 1 + static_cast<int>(rng() % 200);
        std::vector<LinearAccelSample> input;
        std::vector<Window> windows;
        for (int i = 0; i < n; ++i) {
            LinearAccelSample s{i * 200, {i * 0.1, -i * 0.2, i * 0.3}};
            input.push_back(s);
            if (auto w = assembler.push(s)) windows.push_back(std::move(*w));
        }
        if (auto w = assembler.flush()) windows.push_back(std::move(*w));

        std::vector<LinearAccelSample> concat;
        for (const Window& w : windows) {
            concat.insert(concat.end(), w.samples.begin(), w.samples.end());
        }
        REQUIRE(concat.size() == input.size());
        for (size_t i = 0; i < input.size(); ++i) {
            CHECK(concat[i].t_ms == input[i].t_ms);
            CHECK(concat[i].a.x == input[i].a.x);
        }
    }
}

TEST_CASE("windows carry the latest ambient and tilt snapshots") {
    WindowAssembler assembler{EngineConfig{}};
    assembler.note_ambient({100, 72.0, 40.0});
    assembler.note_tilt({150, 12.5});
    std::optional<Window> w;
    for (int i = 0; i < 25; ++i) {
        w = assembler.push(at(i * 200));
    }
    REQUIRE(w.has_value());
    REQUIRE(w->ambient.has_value());
    CHECK(w->ambient->temp_f == 72.0);
    REQUIRE(w->tilt.has_value());
    CHECK(w->tilt->tilt_deg == 12.5);

    // next window still sees the held snapshot
    std::optional<Window> w2;
    for (int i = 25; i < 50; ++i) {
        w2 = assembler.push(at(i * 200));
    }
    REQUIRE(w2.has_value());
    CHECK(w2->ambient.has_value());
}
