// monitor.hpp - Decision layer: combines activity level, posture transitions,
// and ambient verdicts into typed warnings, and summarizes a session.
#pragma once

#include <optional>
#include <vector>

#include "exmon/activity.hpp"
#include "exmon/ambient.hpp"
#include "exmon/posture.hpp"

namespace exmon {

struct MonitorRules {
    int64_t vigorous_cum_ms = 600000;  // 10 min
    ActivityLevel adverse_exertion_min_level = ActivityLevel::Moderate;
    int adverse_ambient_consecutive_windows = 2;
    int64_t post_exertion_lean_window_ms = 60000;

    void validate() const;
};

enum class AlertKind : uint8_t {
    VigorousDuration,
    AdverseAmbientExertion,
    PostExertionLean,
};

std::string_view to_string(AlertKind kind);

// A typed warning with its trigger context.
struct Alert {
    AlertKind kind = AlertKind::VigorousDuration;
    int64_t t_ms = 0;
    uint64_t window_index = 0;
    ActivityLevel level = ActivityLevel::Sedentary;
    std::optional<double> tilt_deg;       // PostExertionLean
    std::optional<AmbientVerdict> ambient;  // AdverseAmbientExertion
};

// Single-writer session state, updated once per closed window plus once per
// ambient reading.
struct SessionState {
    explicit SessionState(int64_t window_ms) : ledger(window_ms) {}

    LevelLedger ledger;

    int64_t vigorous_cum_ms = 0;
    bool vigorous_armed = true;

    int out_of_band_streak = 0;
    bool ambient_armed = true;

    std::optional<int64_t> last_vigorous_end_ms;
    std::optional<PostureClass> prev_posture;
    std::array<uint64_t, 4> posture_windows{};

    EpisodeTracker ambient_episodes;

    std::vector<Alert> alerts;

    std::optional<int64_t> first_t_ms;
    std::optional<int64_t> last_t_ms;
    uint64_t degraded_windows = 0;
    uint64_t partial_tail_samples = 0;
    uint64_t stale_ambient_windows = 0;

    void observe_record_time(int64_t t_ms);
    void observe_ambient(const AmbientVerdict& verdict);

    // Re-arms the VigorousDuration rule.
    void reset_vigorous_accumulator();
};

// Advances the session by one closed window and returns the alerts that
// fired. Edge-triggered: a sustained condition fires once until re-armed.
std::vector<Alert> monitor_step(SessionState& session,
                                const WindowFeatures& features,
                                const std::optional<PostureEstimate>& posture,
                                const std::optional<AmbientVerdict>& ambient,
                                const MonitorRules& rules);

struct LevelTotals {
    uint64_t windows = 0;
    int64_t duration_ms = 0;
    std::string duration_hms;
};

struct SessionSummary {
    EngineConfig config;
    AmbientBand band;
    MonitorRules rules;
    int64_t origin_unix_ms = 0;

    std::optional<int64_t> first_t_ms;
    std::optional<int64_t> last_t_ms;
    uint64_t total_windows = 0;
    uint64_t degraded_windows = 0;
    uint64_t partial_tail_samples = 0;
    uint64_t stale_ambient_windows = 0;

    std::array<LevelTotals, 4> levels{};
    std::optional<ActivityLevel> current_level;
    std::map<int64_t, std::array<uint64_t, 4>> hourly;
    std::array<uint64_t, 4> posture_windows{};
    std::vector<OutOfBandEpisode> ambient_episodes;
    std::vector<Alert> alerts;
};

SessionSummary session_summary(const SessionState& session,
                               const EngineConfig& config,
                               const AmbientBand& band,
                               const MonitorRules& rules,
                               int64_t origin_unix_ms = 0);

}  // namespace exmon
