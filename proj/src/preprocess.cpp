#include "exmon/preprocess.hpp"

namespace exmon {

HighPassResult high_pass(int64_t t_ms, const Vec3& raw, GravityState state,
                         double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        fail(ErrorCode::ConfigError, "high_pass alpha must lie in (0, 1)");
    }
    if (!raw.finite()) {
        fail(ErrorCode::NonFiniteValue, "accel sample at t_ms " + std::to_string(t_ms));
    }
    if (!state.initialized) {
        state.gravity = raw;
        state.initialized = true;
    } else {
        state.gravity = state.gravity * alpha + raw * (1.0 - alpha);
    }
    return {{t_ms, raw - state.gravity}, state};
}

WindowAssembler::WindowAssembler(const EngineConfig& config)
    : window_ms_(config.window_ms),
      samples_per_window_(static_cast<size_t>(config.samples_per_window)),
      max_gap_ms_(config.gap_factor * config.period_ms()) {
    config.validate();
    buffer_.reserve(samples_per_window_);
}

std::optional<Window> WindowAssembler::push(const LinearAccelSample& sample) {
    if (last_t_ms_ && sample.t_ms - *last_t_ms_ > max_gap_ms_) {
        gap_seen_ = true;  // dropout: the window holding this sample is degraded
    }
    last_t_ms_ = sample.t_ms;
    buffer_.push_back(sample);
    if (buffer_.size() == samples_per_window_) {
        return close(false);
    }
    return std::nullopt;
}

std::optional<Window> WindowAssembler::flush() {
    if (buffer_.empty()) return std::nullopt;
    return close(true);
}

Window WindowAssembler::close(bool partial) {
    Window w;
    w.index = next_index_++;
    w.start_ms = buffer_.front().t_ms;
    w.end_ms = w.start_ms + window_ms_;
    w.samples = std::move(buffer_);
    w.ambient = ambient_;
    w.tilt = tilt_;
    w.degraded = gap_seen_;
    w.partial = partial;
    buffer_ = {};
    buffer_.reserve(samples_per_window_);
    gap_seen_ = false;
    return w;
}

}  // namespace exmon
