#include "exmon/pipeline.hpp"

namespace exmon {

void RunConfig::validate() const {
    engine.validate();
    band.validate();
    rules.validate();
}

Engine::Engine(RunConfig config)
    : config_(std::move(config)),
      assembler_(config_.engine),
      session_(config_.engine.window_ms) {
    config_.validate();
    orientation_.gyro_weight = config_.engine.fusion_weight;
}

void Engine::set_alert_sink(std::function<void(const Alert&)> sink) {
    alert_sink_ = std::move(sink);
}

void Engine::feed(const SensorRecord& record) {
    validator_.validate(record);
    session_.observe_record_time(record.t_ms);

    switch (record.channel) {
        case Channel::Gyro:
            last_gyro_ = record.vec();
            break;
        case Channel::Mag:
            last_mag_ = record.vec();
            break;
        case Channel::Ambient: {
            const AmbientReading reading{record.t_ms, record.temp_f(), record.rh_pct()};
            const AmbientVerdict verdict = evaluate_ambient(
                reading.t_ms, reading.temp_f, reading.rh_pct, config_.band);
            session_.observe_ambient(verdict);
            ambient_series_.push_back(
                {reading.t_ms, reading.temp_f, reading.rh_pct, verdict.in_band()});
            assembler_.note_ambient(reading);
            break;
        }
        case Channel::Accel: {
            const Vec3 raw = record.vec();

            // Orientation runs at IMU rate, driven by accel arrivals with the
            // latest gyro/mag values held.
            double dt_s = static_cast<double>(config_.engine.period_ms()) / 1000.0;
            if (last_fuse_t_ms_ && record.t_ms > *last_fuse_t_ms_) {
                dt_s = static_cast<double>(record.t_ms - *last_fuse_t_ms_) / 1000.0;
            }
            orientation_ = fuse_step(orientation_, raw, last_gyro_, last_mag_, dt_s);
            orientation_.t_ms = record.t_ms;
            last_fuse_t_ms_ = record.t_ms;
            if (orientation_.initialized && !orientation_.last_accel_rejected) {
                const double tilt =
                    tilt_from_gravity(orientation_.up, config_.engine.vertical_axis);
                assembler_.note_tilt({record.t_ms, tilt});
            }

            auto hp = high_pass(record.t_ms, raw, gravity_, config_.engine.filter_alpha);
            gravity_ = hp.state;
            if (auto window = assembler_.push(hp.sample)) {
                on_window(std::move(*window));
            }
            break;
        }
    }
}

void Engine::finish() {
    if (finished_) return;
    finished_ = true;
    if (auto window = assembler_.flush()) {
        on_window(std::move(*window));
    }
    session_.ambient_episodes.finish();
}

void Engine::on_window(Window&& window) {
    if (window.partial) {
        session_.partial_tail_samples += window.samples.size();
        return;
    }

    const WindowFeatures f = features_from(window);

    std::optional<PostureEstimate> posture;
    if (window.tilt) {
        posture = PostureEstimate{
            window.tilt->t_ms, window.tilt->tilt_deg,
            classify_posture(window.tilt->tilt_deg,
                             config_.engine.posture_thresholds_deg)};
    }

    std::optional<AmbientVerdict> verdict;
    if (window.ambient) {
        verdict = evaluate_ambient(window.ambient->t_ms, window.ambient->temp_f,
                                   window.ambient->rh_pct, config_.band);
        if (window.end_ms - window.ambient->t_ms > config_.engine.ambient_stale_ms) {
            session_.stale_ambient_windows += 1;
        }
    }

    session_.ledger.update(f);
    if (f.degraded) session_.degraded_windows += 1;

    const auto fired = monitor_step(session_, f, posture, verdict, config_.rules);
    if (alert_sink_) {
        for (const Alert& a : fired) alert_sink_(a);
    }

    FeatureRecord row;
    row.features = f;
    if (posture) {
        row.tilt_deg = posture->tilt_deg;
        row.posture = posture->posture;
    }
    if (window.ambient) {
        row.temp_f = window.ambient->temp_f;
        row.rh_pct = window.ambient->rh_pct;
        row.in_band = verdict->in_band();
    }
    features_.push_back(std::move(row));
}

SessionSummary Engine::summary() const {
    return session_summary(session_, config_.engine, config_.band, config_.rules,
                           config_.origin_unix_ms);
}

}  // namespace exmon
