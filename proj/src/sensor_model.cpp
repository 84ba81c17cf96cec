#include "exmon/sensor_model.hpp"

namespace exmon {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonMonotonicTimestamp: return "NonMonotonicTimestamp";
        case ErrorCode::OutOfRangeValue: return "OutOfRangeValue";
        case ErrorCode::NonFiniteValue: return "NonFiniteValue";
        case ErrorCode::PartialWindow: return "PartialWindow";
        case ErrorCode::NegativeSma: return "NegativeSma";
        case ErrorCode::NonUnitVector: return "NonUnitVector";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::InfeasibleTarget: return "InfeasibleTarget";
        case ErrorCode::ConfigError: return "ConfigError";
    }
    return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      detail_(message) {}

void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

Vec3 rotate_about(const Vec3& v, const Vec3& axis, double angle_rad) {
    const double c = std::cos(angle_rad);
    const double s = std::sin(angle_rad);
    return v * c + axis.cross(v) * s + axis * (axis.dot(v) * (1.0 - c));
}

std::string_view to_string(Channel c) {
    switch (c) {
        case Channel::Accel: return "Accel";
        case Channel::Gyro: return "Gyro";
        case Channel::Mag: return "Mag";
        case Channel::Ambient: return "Ambient";
    }
    return "?";
}

std::string_view to_string(ActivityLevel level) {
    switch (level) {
        case ActivityLevel::Sedentary: return "Sedentary";
        case ActivityLevel::Low: return "Low";
        case ActivityLevel::Moderate: return "Moderate";
        case ActivityLevel::Vigorous: return "Vigorous";
    }
    return "?";
}

std::string_view to_string(PostureClass posture) {
    switch (posture) {
        case PostureClass::Upright: return "Upright";
        case PostureClass::Leaning: return "Leaning";
        case PostureClass::Lying: return "Lying";
        case PostureClass::Inverted: return "Inverted";
    }
    return "?";
}

std::string_view to_string(Axis axis) {
    switch (axis) {
        case Axis::X: return "x";
        case Axis::Y: return "y";
        case Axis::Z: return "z";
    }
    return "?";
}

std::optional<Channel> parse_channel(std::string_view s) {
    if (s == "Accel") return Channel::Accel;
    if (s == "Gyro") return Channel::Gyro;
    if (s == "Mag") return Channel::Mag;
    if (s == "Ambient") return Channel::Ambient;
    return std::nullopt;
}

std::optional<ActivityLevel> parse_activity_level(std::string_view s) {
    if (s == "Sedentary") return ActivityLevel::Sedentary;
    if (s == "Low") return ActivityLevel::Low;
    if (s == "Moderate") return ActivityLevel::Moderate;
    if (s == "Vigorous") return ActivityLevel::Vigorous;
    return std::nullopt;
}

std::optional<Axis> parse_axis(std::string_view s) {
    if (s == "x" || s == "X") return Axis::X;
    if (s == "y" || s == "Y") return Axis::Y;
    if (s == "z" || s == "Z") return Axis::Z;
    return std::nullopt;
}

SensorRecord SensorRecord::accel(int64_t t_ms, const Vec3& a) {
    return {t_ms, Channel::Accel, {a.x, a.y, a.z}};
}

SensorRecord SensorRecord::gyro(int64_t t_ms, const Vec3& w) {
    return {t_ms, Channel::Gyro, {w.x, w.y, w.z}};
}

SensorRecord SensorRecord::mag(int64_t t_ms, const Vec3& m) {
    return {t_ms, Channel::Mag, {m.x, m.y, m.z}};
}

SensorRecord SensorRecord::ambient(int64_t t_ms, double temp_f, double rh_pct) {
    return {t_ms, Channel::Ambient, {temp_f, rh_pct, 0.0}};
}

const SensorRecord& validate_record(const SensorRecord& rec,
                                    std::optional<int64_t> prev_t) {
    if (rec.t_ms < 0) {
        fail(ErrorCode::OutOfRangeValue,
             "timestamp " + std::to_string(rec.t_ms) + " is negative");
    }
    if (prev_t && rec.t_ms <= *prev_t) {
        fail(ErrorCode::NonMonotonicTimestamp,
             std::string(to_string(rec.channel)) + " t_ms " +
                 std::to_string(rec.t_ms) + " does not increase past " +
                 std::to_string(*prev_t));
    }
    const int n_values = rec.channel == Channel::Ambient ? 2 : 3;
    for (int i = 0; i < n_values; ++i) {
        if (!std::isfinite(rec.values[i])) {
            fail(ErrorCode::NonFiniteValue,
                 std::string(to_string(rec.channel)) + " value " +
                     std::to_string(i) + " at t_ms " + std::to_string(rec.t_ms));
        }
    }
    if (rec.channel == Channel::Ambient) {
        const double rh = rec.rh_pct();
        if (rh < 0.0 || rh > 100.0) {
            fail(ErrorCode::OutOfRangeValue,
                 "rh_pct " + std::to_string(rh) + " outside [0, 100]");
        }
    }
    return rec;
}

const SensorRecord& ChannelValidator::validate(const SensorRecord& rec) {
    auto& last = last_t_[static_cast<size_t>(rec.channel)];
    validate_record(rec, last);
    last = rec.t_ms;
    return rec;
}

void EngineConfig::validate() const {
    if (window_ms <= 0 || samples_per_window <= 0) {
        fail(ErrorCode::ConfigError, "window_ms and samples_per_window must be positive");
    }
    if (window_ms % samples_per_window != 0) {
        fail(ErrorCode::ConfigError,
             "window_ms " + std::to_string(window_ms) +
                 " is not an integral multiple of samples_per_window " +
                 std::to_string(samples_per_window));
    }
    if (!(filter_alpha > 0.0 && filter_alpha < 1.0)) {
        fail(ErrorCode::ConfigError, "filter_alpha must lie in (0, 1)");
    }
    if (!(fusion_weight >= 0.0 && fusion_weight <= 1.0)) {
        fail(ErrorCode::ConfigError, "fusion_weight must lie in [0, 1]");
    }
    double prev = 0.0;
    for (double t : posture_thresholds_deg) {
        if (!(t > prev && t < 180.0)) {
            fail(ErrorCode::ConfigError,
                 "posture thresholds must be strictly increasing within (0, 180)");
        }
        prev = t;
    }
    if (ambient_stale_ms <= 0 || gap_factor < 1) {
        fail(ErrorCode::ConfigError, "ambient_stale_ms and gap_factor must be positive");
    }
}

}  // namespace exmon
