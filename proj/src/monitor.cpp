#include "exmon/monitor.hpp"

namespace exmon {

void MonitorRules::validate() const {
    if (vigorous_cum_ms <= 0 || adverse_ambient_consecutive_windows <= 0 ||
        post_exertion_lean_window_ms <= 0) {
        fail(ErrorCode::ConfigError, "monitor rule thresholds must be positive");
    }
}

std::string_view to_string(AlertKind kind) {
    switch (kind) {
        case AlertKind::VigorousDuration: return "VigorousDuration";
        case AlertKind::AdverseAmbientExertion: return "AdverseAmbientExertion";
        case AlertKind::PostExertionLean: return "PostExertionLean";
    }
    return "?";
}

void SessionState::observe_record_time(int64_t t_ms) {
    if (!first_t_ms) first_t_ms = t_ms;
    last_t_ms = t_ms;
}

void SessionState::observe_ambient(const AmbientVerdict& verdict) {
    ambient_episodes.push(verdict);
}

void SessionState::reset_vigorous_accumulator() {
    vigorous_cum_ms = 0;
    vigorous_armed = true;
}

namespace {

bool is_leaning_or_lying(PostureClass p) {
    return p == PostureClass::Leaning || p == PostureClass::Lying;
}

}  // namespace

std::vector<Alert> monitor_step(SessionState& session,
                                const WindowFeatures& features,
                                const std::optional<PostureEstimate>& posture,
                                const std::optional<AmbientVerdict>& ambient,
                                const MonitorRules& rules) {
    std::vector<Alert> fired;
    const int64_t window_ms = features.end_ms - features.start_ms;

    // (a) cumulative vigorous duration, edge-triggered until explicit reset
    if (features.level == ActivityLevel::Vigorous) {
        session.vigorous_cum_ms += window_ms;
        session.last_vigorous_end_ms = features.end_ms;
        if (session.vigorous_armed &&
            session.vigorous_cum_ms >= rules.vigorous_cum_ms) {
            session.vigorous_armed = false;
            Alert a;
            a.kind = AlertKind::VigorousDuration;
            a.t_ms = features.end_ms;
            a.window_index = features.index;
            a.level = features.level;
            fired.push_back(a);
        }
    }

    // (b) exertion while the ambient condition stays out of band
    if (ambient) {
        if (ambient->in_band()) {
            session.out_of_band_streak = 0;
            session.ambient_armed = true;
        } else {
            session.out_of_band_streak += 1;
        }
    }
    if (session.ambient_armed && ambient && !ambient->in_band() &&
        session.out_of_band_streak >= rules.adverse_ambient_consecutive_windows &&
        features.level >= rules.adverse_exertion_min_level) {
        session.ambient_armed = false;
        Alert a;
        a.kind = AlertKind::AdverseAmbientExertion;
        a.t_ms = features.end_ms;
        a.window_index = features.index;
        a.level = features.level;
        a.ambient = ambient;
        fired.push_back(a);
    }

    // (c) leaning/lying entered shortly after vigorous exertion
    if (posture) {
        const bool entered = is_leaning_or_lying(posture->posture) &&
                             session.prev_posture &&
                             !is_leaning_or_lying(*session.prev_posture);
        if (entered && session.last_vigorous_end_ms &&
            features.end_ms - *session.last_vigorous_end_ms <=
                rules.post_exertion_lean_window_ms) {
            Alert a;
            a.kind = AlertKind::PostExertionLean;
            a.t_ms = features.end_ms;
            a.window_index = features.index;
            a.level = features.level;
            a.tilt_deg = posture->tilt_deg;
            fired.push_back(a);
        }
        session.prev_posture = posture->posture;
        session.posture_windows[static_cast<size_t>(posture->posture)] += 1;
    }

    for (const Alert& a : fired) session.alerts.push_back(a);
    return fired;
}

SessionSummary session_summary(const SessionState& session,
                               const EngineConfig& config,
                               const AmbientBand& band,
                               const MonitorRules& rules,
                               int64_t origin_unix_ms) {
    SessionSummary s;
    s.config = config;
    s.band = band;
    s.rules = rules;
    s.origin_unix_ms = origin_unix_ms;
    s.first_t_ms = session.first_t_ms;
    s.last_t_ms = session.last_t_ms;
    s.total_windows = session.ledger.total_windows();
    s.degraded_windows = session.degraded_windows;
    s.partial_tail_samples = session.partial_tail_samples;
    s.stale_ambient_windows = session.stale_ambient_windows;
    for (size_t i = 0; i < 4; ++i) {
        const auto level = static_cast<ActivityLevel>(i);
        s.levels[i].windows = session.ledger.count(level);
        s.levels[i].duration_ms = session.ledger.duration_ms(level);
        s.levels[i].duration_hms = session.ledger.duration_hms(level);
    }
    s.current_level = session.ledger.current_level();
    s.hourly = session.ledger.hourly();
    s.posture_windows = session.posture_windows;
    s.ambient_episodes = session.ambient_episodes.episodes();
    s.alerts = session.alerts;
    return s;
}

}  // namespace exmon
