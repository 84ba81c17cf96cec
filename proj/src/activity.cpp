#include "exmon/activity.hpp"

#include <cmath>
#include <cstdio>

namespace exmon {

double compute_sma(const Window& window) {
    if (window.partial) {
        fail(ErrorCode::PartialWindow,
             "window " + std::to_string(window.index) + " holds " +
                 std::to_string(window.samples.size()) + " samples");
    }
    double sum = 0.0;
    for (const auto& s : window.samples) {
        sum += std::fabs(s.a.x) + std::fabs(s.a.y) + std::fabs(s.a.z);
    }
    return sum / static_cast<double>(window.samples.size());
}

double extrapolate_ee(double sma) {
    if (sma < 0.0) {
        fail(ErrorCode::NegativeSma, "sma " + std::to_string(sma));
    }
    return 1.1 * sma + 5.7;
}

ActivityLevel classify_level(double sma) {
    if (sma < 0.0) {
        fail(ErrorCode::NegativeSma, "sma " + std::to_string(sma));
    }
    if (sma <= 1.5) return ActivityLevel::Sedentary;
    if (sma <= 9.0) return ActivityLevel::Low;
    if (sma <= 18.0) return ActivityLevel::Moderate;
    return ActivityLevel::Vigorous;
}

std::string format_duration(int64_t ms) {
    if (ms < 0) {
        fail(ErrorCode::OutOfRangeValue, "duration " + std::to_string(ms) + " ms");
    }
    const int64_t total_s = ms / 1000;
    const int64_t h = total_s / 3600;
    const int64_t m = (total_s / 60) % 60;
    const int64_t s = total_s % 60;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%02lld:%02lld:%02lld",
                  static_cast<long long>(h), static_cast<long long>(m),
                  static_cast<long long>(s));
    return buf;
}

WindowFeatures features_from(const Window& window) {
    WindowFeatures f;
    f.index = window.index;
    f.start_ms = window.start_ms;
    f.end_ms = window.end_ms;
    f.sma = compute_sma(window);
    f.ee_vo2 = extrapolate_ee(f.sma);
    f.level = classify_level(f.sma);
    f.degraded = window.degraded;
    return f;
}

void LevelLedger::update(const WindowFeatures& features) {
    counters_[static_cast<size_t>(features.level)] += 1;
    current_level_ = features.level;
    const int64_t hour = features.start_ms / 3600000;
    hourly_[hour][static_cast<size_t>(features.level)] += 1;
}

uint64_t LevelLedger::total_windows() const {
    uint64_t total = 0;
    for (uint64_t c : counters_) total += c;
    return total;
}

}  // namespace exmon
