#include "exmon/posture.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace exmon {

namespace {

constexpr double kPi = std::numbers::pi;

Vec3 axis_unit(Axis axis) {
    switch (axis) {
        case Axis::X: return {1.0, 0.0, 0.0};
        case Axis::Y: return {0.0, 1.0, 0.0};
        case Axis::Z: return {0.0, 0.0, 1.0};
    }
    return {0.0, 1.0, 0.0};
}

}  // namespace

OrientationState fuse_step(const OrientationState& state, const Vec3& accel,
                           const Vec3& gyro, const Vec3& mag, double dt_s) {
    if (!(dt_s > 0.0)) {
        fail(ErrorCode::OutOfRangeValue, "fuse_step dt_s must be positive");
    }
    if (!accel.finite() || !gyro.finite() || !mag.finite()) {
        fail(ErrorCode::NonFiniteValue, "fuse_step input");
    }

    OrientationState next = state;
    next.last_accel_rejected = false;

    const double accel_norm = accel.norm();
    if (accel_norm < 1e-9) {
        next.last_accel_rejected = true;
        return next;
    }
    const Vec3 accel_dir = accel * (1.0 / accel_norm);

    if (!next.initialized) {
        next.up = accel_dir;
        next.initialized = true;
    } else {
        const double rate = gyro.norm();
        Vec3 propagated = next.up;
        if (rate * dt_s > 1e-12) {
            propagated = rotate_about(next.up, gyro * (1.0 / rate), rate * dt_s);
        }
        const double w = next.gyro_weight;
        Vec3 blended = propagated * w + accel_dir * (1.0 - w);
        const double blended_norm = blended.norm();
        // Antiparallel blend can collapse to zero; keep the propagated estimate.
        next.up = blended_norm < 1e-9 ? propagated : blended * (1.0 / blended_norm);
    }

    // Tilt-compensated heading, informational only.
    const Vec3 mag_h = mag - next.up * mag.dot(next.up);
    if (mag_h.norm() > 1e-9) {
        double heading = std::atan2(mag_h.x, mag_h.z) * 180.0 / kPi;
        if (heading < 0.0) heading += 360.0;
        next.heading_deg = heading;
    }
    return next;
}

double tilt_from_gravity(const Vec3& gravity_unit, Axis vertical_axis) {
    if (std::fabs(gravity_unit.norm() - 1.0) > 1e-6) {
        fail(ErrorCode::NonUnitVector,
             "gravity direction norm " + std::to_string(gravity_unit.norm()));
    }
    double c = gravity_unit.dot(axis_unit(vertical_axis));
    c = std::clamp(c, -1.0, 1.0);
    // acos(c)/pi*180 is exact at the canonical inputs 1, 0, -1.
    return std::acos(c) / kPi * 180.0;
}

PostureClass classify_posture(double tilt_deg,
                              const std::array<double, 3>& thresholds_deg) {
    if (tilt_deg < 0.0 || tilt_deg > 180.0) {
        fail(ErrorCode::OutOfRangeValue, "tilt " + std::to_string(tilt_deg));
    }
    if (tilt_deg < thresholds_deg[0]) return PostureClass::Upright;
    if (tilt_deg < thresholds_deg[1]) return PostureClass::Leaning;
    if (tilt_deg < thresholds_deg[2]) return PostureClass::Lying;
    return PostureClass::Inverted;
}

}  // namespace exmon
