// activity.hpp - Window-level movement intensity (SMA), energy-expenditure
// extrapolation, activity-level classification, and per-level accounting.
#pragma once

#include <array>
#include <map>
#include <string>

#include "exmon/preprocess.hpp"

namespace exmon {

// Per-window features. ee_vo2 = 1.1 * sma + 5.7, level follows the half-open
// SMA bands below.
struct WindowFeatures {
    uint64_t index = 0;
    int64_t start_ms = 0;
    int64_t end_ms = 0;
    double sma = 0.0;
    double ee_vo2 = 0.0;
    ActivityLevel level = ActivityLevel::Sedentary;
    bool degraded = false;
};

// Time-normalized mean of per-sample |x|+|y|+|z| over a full window, m/s^2.
double compute_sma(const Window& window);

// Oxygen-uptake extrapolation from SMA.
double extrapolate_ee(double sma);

// SMA bands: Sedentary [0, 1.5], Low (1.5, 9.0], Moderate (9.0, 18.0],
// Vigorous (18.0, inf). SMA exactly 0 maps to Sedentary (a motionless device
// is sedentary).
ActivityLevel classify_level(double sma);

// "HH:MM:SS", zero-padded, truncating sub-second remainder; hours widen past
// 99 without wrapping.
std::string format_duration(int64_t ms);

// Convenience: full feature row for a window.
WindowFeatures features_from(const Window& window);

// Running per-level window counters, durations, and hour-of-session
// aggregates. Single-writer streaming state, updated in window order.
class LevelLedger {
public:
    explicit LevelLedger(int64_t window_ms) : window_ms_(window_ms) {}

    void update(const WindowFeatures& features);

    uint64_t count(ActivityLevel level) const {
        return counters_[static_cast<size_t>(level)];
    }
    int64_t duration_ms(ActivityLevel level) const {
        return static_cast<int64_t>(count(level)) * window_ms_;
    }
    std::string duration_hms(ActivityLevel level) const {
        return format_duration(duration_ms(level));
    }

    uint64_t total_windows() const;
    std::optional<ActivityLevel> current_level() const { return current_level_; }
    int64_t window_ms() const { return window_ms_; }

    // hour-of-session -> per-level window counts
    const std::map<int64_t, std::array<uint64_t, 4>>& hourly() const {
        return hourly_;
    }

private:
    int64_t window_ms_;
    std::array<uint64_t, 4> counters_{};
    std::optional<ActivityLevel> current_level_;
    std::map<int64_t, std::array<uint64_t, 4>> hourly_;
};

}  // namespace exmon
