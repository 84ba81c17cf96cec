// pipeline.hpp - Streaming engine: routes a merged sensor stream through
// gravity removal, windowing, feature extraction, posture fusion, ambient
// evaluation, and the monitor rules.
#pragma once

#include <functional>

#include "exmon/monitor.hpp"

namespace exmon {

struct RunConfig {
    EngineConfig engine;
    AmbientBand band;
    MonitorRules rules;
    int64_t origin_unix_ms = 0;

    void validate() const;
};

// One row of the per-window feature table: window features plus the posture
// and ambient snapshots current when the window closed.
struct FeatureRecord {
    WindowFeatures features;
    std::optional<double> tilt_deg;
    std::optional<PostureClass> posture;
    std::optional<double> temp_f;
    std::optional<double> rh_pct;
    std::optional<bool> in_band;
};

// Per-reading ambient series, for plot export.
struct AmbientSeriesRow {
    int64_t t_ms = 0;
    double temp_f = 0.0;
    double rh_pct = 0.0;
    bool in_band = true;
};

class Engine {
public:
    explicit Engine(RunConfig config);

    // Called for each alert as it fires, before feed() returns.
    void set_alert_sink(std::function<void(const Alert&)> sink);

    // Consumes one record. Records must arrive in merged timestamp order and
    // strictly increasing per channel.
    void feed(const SensorRecord& record);

    // Flushes the trailing partial window and closes open ambient episodes.
    void finish();

    const std::vector<FeatureRecord>& features() const { return features_; }
    const std::vector<AmbientSeriesRow>& ambient_series() const {
        return ambient_series_;
    }
    const SessionState& session() const { return session_; }
    const RunConfig& config() const { return config_; }

    SessionSummary summary() const;

private:
    void on_window(Window&& window);

    RunConfig config_;
    ChannelValidator validator_;

    GravityState gravity_;
    WindowAssembler assembler_;
    OrientationState orientation_;
    std::optional<int64_t> last_fuse_t_ms_;
    Vec3 last_gyro_{};
    Vec3 last_mag_{};

    SessionState session_;
    std::vector<FeatureRecord> features_;
    std::vector<AmbientSeriesRow> ambient_series_;
    std::function<void(const Alert&)> alert_sink_;
    bool finished_ = false;
};

}  // namespace exmon
