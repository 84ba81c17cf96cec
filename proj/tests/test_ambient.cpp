#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "exmon/ambient.hpp"

using namespace exmon;

TEST_CASE("band membership is inclusive at all four bounds") {
    const AmbientBand band;
    CHECK(evaluate_ambient(0, 72.0, 40.0, band).in_band());
    CHECK(evaluate_ambient(0, 69.0, 35.0, band).in_band());
    CHECK(evaluate_ambient(0, 79.0, 50.0, band).in_band());
    CHECK(evaluate_ambient(0, 69.0, 50.0, band).in_band());
}

TEST_CASE("all violated bounds are reported") {
    const AmbientBand band;
    const auto v = evaluate_ambient(0, 85.0, 20.0, band);
    CHECK_FALSE(v.in_band());
    CHECK(v.violations == (kTempHigh | kRhLow));
    CHECK(violations_to_string(v.violations) == "TempHigh+RhLow");

    CHECK(evaluate_ambient(0, 68.9, 40.0, band).violations == kTempLow);
    CHECK(evaluate_ambient(0, 72.0, 50.1, band).violations == kRhHigh);
}

TEST_CASE("in_band and the violation set stay consistent") {
    const AmbientBand band;
    std::mt19937 rng(13);
    for (int i = 0; i < 2000; ++i) {
        const double temp = 40.0 + (rng() % 600) / 10.0;
        const double rh = (rng() % 1000) / 10.0;
        const auto v = evaluate_ambient(0, temp, rh, band);
        CHECK(v.in_band() == (v.violations == 0));
    }
}

TEST_CASE("widening the band never adds violations") {
    std::mt19937 rng(19);
    for (int i = 0; i < 2000; ++i) {
        const double temp = 40.0 + (rng() % 600) / 10.0;
        const double rh = (rng() % 1000) / 10.0;
        AmbientBand narrow;
        AmbientBand wide;
        wide.temp_low_f -= (rng() % 100) / 10.0;
        wide.temp_high_f += (rng() % 100) / 10.0;
        wide.rh_low_pct -= (rng() % 100) / 10.0;
        wide.rh_high_pct += (rng() % 100) / 10.0;
        const auto vn = evaluate_ambient(0, temp, rh, narrow);
        const auto vw = evaluate_ambient(0, temp, rh, wide);
        CHECK((vw.violations & ~vn.violations) == 0);
    }
}

TEST_CASE("band config rejects inverted bounds") {
    AmbientBand band;
    band.temp_low_f = 80.0;
    CHECK_THROWS_AS(band.validate(), Error);
}

namespace {

AmbientVerdict at(int64_t t, bool in_band, uint8_t violations = kTempHigh) {
    AmbientVerdict v;
    v.t_ms = t;
    v.violations = in_band ? 0 : violations;
    return v;
}

}  // namespace

TEST_CASE("all in-band verdicts make no episodes") {
    EpisodeTracker tracker;
    for (int i = 0; i < 10; ++i) tracker.push(at(i * 1000, true));
    tracker.finish();
    CHECK(tracker.episodes().empty());
}

TEST_CASE("in,out,out,in is one episode spanning the two out verdicts") {
    EpisodeTracker tracker;
    tracker.push(at(0, true));
    tracker.push(at(1000, false, kTempHigh));
    tracker.push(at(2000, false, kRhLow));
    tracker.push(at(3000, true));
    tracker.finish();
    REQUIRE(tracker.episodes().size() == 1);
    CHECK(tracker.episodes()[0].start_ms == 1000);
    CHECK(tracker.episodes()[0].end_ms == 2000);
    CHECK(tracker.episodes()[0].violations == (kTempHigh | kRhLow));
}

TEST_CASE("out,in,out makes two episodes") {
    EpisodeTracker tracker;
    tracker.push(at(0, false));
    tracker.push(at(1000, true));
    tracker.push(at(2000, false));
    tracker.finish();
    REQUIRE(tracker.episodes().size() == 2);
    CHECK(tracker.episodes()[0].start_ms == 0);
    CHECK(tracker.episodes()[0].end_ms == 0);
    CHECK(tracker.episodes()[1].start_ms == 2000);
}

TEST_CASE("episodes partition the out-of-band verdicts exactly") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        EpisodeTracker tracker;
        std::vector<AmbientVerdict> verdicts;
        const int n = static_cast<int>(rng() % 100);
        for (int i = 0; i < n; ++i) {
            verdicts.push_back(at(i * 1000, (rng() % 3) != 0));
            tracker.push(verdicts.back());
        }
        tracker.finish();
        const auto& episodes = tracker.episodes();

        // disjoint and ordered
        for (size_t e = 1; e < episodes.size(); ++e) {
            CHECK(episodes[e].start_ms > episodes[e - 1].end_ms);
        }
        // every out verdict inside exactly one episode, no in verdict inside any
        for (const auto& v : verdicts) {
            size_t containing = 0;
            for (const auto& e : episodes) {
                if (v.t_ms >= e.start_ms && v.t_ms <= e.end_ms) ++containing;
            }
            CHECK(containing == (v.in_band() ? 0u : 1u));
        }
    }
}
