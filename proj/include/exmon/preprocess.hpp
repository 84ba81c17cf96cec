// preprocess.hpp - Gravity removal (high-pass) and tumbling window assembly.
#pragma once

#include <optional>
#include <vector>

#include "exmon/sensor_model.hpp"

namespace exmon {

// Gravity-free acceleration sample, m/s^2 per axis.
struct LinearAccelSample {
    int64_t t_ms = 0;
    Vec3 a{};
};

// Running low-pass gravity estimate. Initialized to the first raw sample so
// window 0 is not contaminated by a startup transient.
struct GravityState {
    Vec3 gravity{};
    bool initialized = false;
};

struct HighPassResult {
    LinearAccelSample sample;
    GravityState state;
};

// One high-pass step: gravity <- alpha*gravity + (1-alpha)*raw, linear <-
// raw - gravity. Pure function of its inputs.
HighPassResult high_pass(int64_t t_ms, const Vec3& raw, GravityState state,
                         double alpha);

// Latest slow-channel values carried into a window when it closes.
struct AmbientReading {
    int64_t t_ms = 0;
    double temp_f = 0.0;
    double rh_pct = 0.0;
};

struct TiltSnapshot {
    int64_t t_ms = 0;
    double tilt_deg = 0.0;
};

// A fixed-duration ordered batch of linear-acceleration samples. `partial`
// windows arise only from an explicit flush; `degraded` marks sensor dropout
// (an inter-sample gap beyond gap_factor * nominal period).
struct Window {
    uint64_t index = 0;
    int64_t start_ms = 0;
    int64_t end_ms = 0;
    std::vector<LinearAccelSample> samples;
    std::optional<AmbientReading> ambient;
    std::optional<TiltSnapshot> tilt;
    bool degraded = false;
    bool partial = false;
};

// Groups a time-ordered linear-acceleration stream into non-overlapping
// consecutive windows of exactly samples_per_window samples. Never reorders,
// duplicates, or drops samples.
class WindowAssembler {
public:
    explicit WindowAssembler(const EngineConfig& config);

    void note_ambient(const AmbientReading& reading) { ambient_ = reading; }
    void note_tilt(const TiltSnapshot& snapshot) { tilt_ = snapshot; }

    std::optional<Window> push(const LinearAccelSample& sample);

    // Emits the trailing partial window, if any.
    std::optional<Window> flush();

private:
    Window close(bool partial);

    int64_t window_ms_;
    size_t samples_per_window_;
    int64_t max_gap_ms_;
    uint64_t next_index_ = 0;
    std::vector<LinearAccelSample> buffer_;
    std::optional<AmbientReading> ambient_;
    std::optional<TiltSnapshot> tilt_;
    std::optional<int64_t> last_t_ms_;
    bool gap_seen_ = false;
};

}  // namespace exmon
