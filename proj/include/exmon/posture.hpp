// posture.hpp - Accel/gyro/mag orientation fusion, trunk tilt in [0, 180]
// degrees, and posture classification.
#pragma once

#include <array>

#include "exmon/sensor_model.hpp"

namespace exmon {

// Complementary-filter orientation state. `up` is the gravity-direction
// estimate in the device frame (unit norm once initialized); heading is
// informational. gyro_weight blends the gyro-propagated estimate against the
// normalized accelerometer vector.
struct OrientationState {
    Vec3 up{};
    bool initialized = false;
    double heading_deg = 0.0;
    int64_t t_ms = 0;
    double gyro_weight = 0.98;
    bool last_accel_rejected = false;
};

struct PostureEstimate {
    int64_t t_ms = 0;
    double tilt_deg = 0.0;
    PostureClass posture = PostureClass::Upright;
};

// One fusion step: rotate the estimate by the gyro rotation over dt_s, blend
// toward the normalized accel vector with weight (1 - gyro_weight), then
// renormalize. A zero accel vector cannot be normalized: the state is
// returned unchanged with last_accel_rejected set.
OrientationState fuse_step(const OrientationState& state, const Vec3& accel,
                           const Vec3& gyro, const Vec3& mag, double dt_s);

// Tilt angle of the configured vertical device axis away from the gravity
// estimate, in [0, 180] degrees. Input must be unit norm (within 1e-6).
double tilt_from_gravity(const Vec3& gravity_unit, Axis vertical_axis = Axis::Y);

// Total monotone partition of [0, 180]: Upright below thresholds[0], Leaning
// below thresholds[1], Lying below thresholds[2], Inverted above.
PostureClass classify_posture(double tilt_deg,
                              const std::array<double, 3>& thresholds_deg);

}  // namespace exmon
