// synth.hpp - Labeled synthetic sensor sessions: activity bouts, posture
// transitions, and ambient drift, generated deterministically from a seed.
#pragma once

#include "exmon/pipeline.hpp"

namespace exmon {

// One bout of constant target intensity. Tilt, temperature, and humidity
// ramp linearly from their start to end values across the bout.
struct Bout {
    std::optional<ActivityLevel> level;   // midpoint target when target_sma unset
    std::optional<double> target_sma;
    int64_t duration_ms = 0;
    double tilt_start_deg = 0.0;
    double tilt_end_deg = 0.0;
    double temp_start_f = 72.0;
    double temp_end_f = 72.0;
    double rh_start_pct = 40.0;
    double rh_end_pct = 40.0;
    double noise_amp = 0.0;  // uniform noise amplitude, m/s^2 per axis

    // Explicit target, or the midpoint of the level's SMA band.
    double resolve_target() const;
};

struct ActivityProfile {
    uint64_t seed = 0;
    std::vector<Bout> bouts;

    void validate() const;
};

// Intended per-window labels. Windows that contain a bout start are marked
// `transition`: they straddle a regime change (the first window of every bout,
// including window 0, carries filter settling).
struct TruthRow {
    uint64_t window = 0;
    int64_t start_ms = 0;
    bool transition = false;
    ActivityLevel level = ActivityLevel::Sedentary;
    double target_sma = 0.0;
    double tilt_deg = 0.0;
    PostureClass posture = PostureClass::Upright;
    double temp_f = 0.0;
    double rh_pct = 0.0;
    bool in_band = true;
};

// Per-bout calibration the generator settled on.
struct BoutCalibration {
    double amplitude = 0.0;             // per-axis sine amplitude, m/s^2
    std::array<double, 3> freq_hz{};    // per-axis oscillation frequency
    std::array<int, 3> sign{};          // per-axis sign
    double unit_window_sma = 0.0;       // steady recovered SMA of the unit waveform
};

struct GeneratedSession {
    std::vector<SensorRecord> records;
    std::vector<TruthRow> truth;
    std::vector<BoutCalibration> calibration;
};

// Emits per-channel time-ordered records at the configured rates. The linear
// acceleration of each bout is a seeded multi-axis oscillation scaled so the
// pipeline-recovered SMA hits the bout target; gravity (per the tilt script)
// is re-added so the stream exercises the gravity-removal stage.
GeneratedSession generate(const ActivityProfile& profile, const RunConfig& config);

}  // namespace exmon
