// sensor_model.hpp - Domain types, units, and the ordered-stream contract
// shared by every pipeline stage.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace exmon {

// ----------------------------------------------------------------------------
// Errors
// ----------------------------------------------------------------------------

enum class ErrorCode {
    NonMonotonicTimestamp,
    OutOfRangeValue,
    NonFiniteValue,
    PartialWindow,
    NegativeSma,
    NonUnitVector,
    ParseError,
    IoError,
    InfeasibleTarget,
    ConfigError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);
    ErrorCode code() const { return code_; }
    const std::string& detail() const { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

// ----------------------------------------------------------------------------
// Small vector math
// ----------------------------------------------------------------------------

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double k) const { return {x * k, y * k, z * k}; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
    bool finite() const {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }
};

inline Vec3 operator*(double k, const Vec3& v) { return v * k; }

// Rotates v by `angle_rad` about `axis` (unit length) using the Rodrigues
// formula.
Vec3 rotate_about(const Vec3& v, const Vec3& axis, double angle_rad);

// ----------------------------------------------------------------------------
// Channels and records
// ----------------------------------------------------------------------------

// Channel order doubles as the merge tie-break order for equal timestamps.
enum class Channel : uint8_t { Accel = 0, Gyro = 1, Mag = 2, Ambient = 3 };

enum class ActivityLevel : uint8_t { Sedentary = 0, Low = 1, Moderate = 2, Vigorous = 3 };
enum class PostureClass : uint8_t { Upright = 0, Leaning = 1, Lying = 2, Inverted = 3 };
enum class Axis : uint8_t { X = 0, Y = 1, Z = 2 };

std::string_view to_string(Channel c);
std::string_view to_string(ActivityLevel level);
std::string_view to_string(PostureClass posture);
std::string_view to_string(Axis axis);

std::optional<Channel> parse_channel(std::string_view s);
std::optional<ActivityLevel> parse_activity_level(std::string_view s);
std::optional<Axis> parse_axis(std::string_view s);

// One timestamped reading from one sensor channel. Axis convention for the
// trunk mount: z forward, y vertical (up/down), x horizontal. Units per
// channel: Accel m/s^2, Gyro rad/s, Mag uT, Ambient degF + %RH.
struct SensorRecord {
    int64_t t_ms = 0;
    Channel channel = Channel::Accel;
    std::array<double, 3> values{};

    Vec3 vec() const { return {values[0], values[1], values[2]}; }
    double temp_f() const { return values[0]; }
    double rh_pct() const { return values[1]; }

    static SensorRecord accel(int64_t t_ms, const Vec3& a);
    static SensorRecord gyro(int64_t t_ms, const Vec3& w);
    static SensorRecord mag(int64_t t_ms, const Vec3& m);
    static SensorRecord ambient(int64_t t_ms, double temp_f, double rh_pct);
};

// Validates one record against the type invariants and, when `prev_t` is
// given, against strict per-channel timestamp ordering. Returns the record
// unchanged on success.
const SensorRecord& validate_record(const SensorRecord& rec,
                                    std::optional<int64_t> prev_t);

// Per-channel monotonicity tracker for record-by-record stream validation.
class ChannelValidator {
public:
    const SensorRecord& validate(const SensorRecord& rec);

private:
    std::array<std::optional<int64_t>, 4> last_t_{};
};

// ----------------------------------------------------------------------------
// Engine configuration
// ----------------------------------------------------------------------------

// Defaults reproduce the 5000 ms / 25 sample (5 Hz) window geometry.
struct EngineConfig {
    int64_t window_ms = 5000;
    int samples_per_window = 25;
    double filter_alpha = 0.833;     // gravity low-pass weight on history
    double fusion_weight = 0.98;     // gyro weight in the orientation blend
    Axis vertical_axis = Axis::Y;    // device axis aligned with gravity when upright
    std::array<double, 3> posture_thresholds_deg{20.0, 60.0, 120.0};
    int64_t ambient_stale_ms = 300000;
    int gap_factor = 3;              // inter-sample gap > gap_factor * period flags the window

    int64_t period_ms() const { return window_ms / samples_per_window; }
    void validate() const;
};

}  // namespace exmon
