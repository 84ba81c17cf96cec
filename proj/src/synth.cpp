#include "exmon/synth.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace exmon {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGravityMs2 = 9.80665;

// Midpoints of the SMA bands; Vigorous is open-ended, pinned at 1.5x its
// lower bound.
constexpr std::array<double, 4> kLevelTargetSma = {0.75, 5.25, 13.5, 27.0};

// Whole periods per 5 s window at each of these, so the sampled phase
// pattern repeats window to window and calibration holds for every steady
// window.
constexpr std::array<double, 4> kFreqPool = {0.6, 0.8, 1.0, 1.2};

double lerp(double a, double b, double frac) { return a + (b - a) * frac; }

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct BoutWaveform {
    std::array<double, 3> freq_hz{};
    std::array<int, 3> sign{};

    // sin(2*pi*f*t) starts at zero, so the gravity filter's init-to-first-
    // sample rule sees no signal offset at t = 0.
    Vec3 unit_at(double t_rel_s) const {
        Vec3 u;
        u.x = sign[0] * std::sin(2.0 * kPi * freq_hz[0] * t_rel_s);
        u.y = sign[1] * std::sin(2.0 * kPi * freq_hz[1] * t_rel_s);
        u.z = sign[2] * std::sin(2.0 * kPi * freq_hz[2] * t_rel_s);
        return u;
    }
};

BoutWaveform draw_waveform(std::mt19937_64& rng) {
    std::array<size_t, 4> idx = {0, 1, 2, 3};
    for (size_t i = 3; i > 0; --i) {
        std::swap(idx[i], idx[rng() % (i + 1)]);
    }
    BoutWaveform w;
    for (int a = 0; a < 3; ++a) {
        w.freq_hz[a] = kFreqPool[idx[a]];
        w.sign[a] = (rng() & 1) ? 1 : -1;
    }
    return w;
}

// Steady per-window SMA of the unit waveform after passing through the
// gravity high-pass. The filter state is simulated for three windows; the
// third is past the settling transient (alpha^(2*spw) is negligible at the
// default geometry).
double unit_recovered_sma(const BoutWaveform& wave, const EngineConfig& cfg) {
    const int spw = cfg.samples_per_window;
    const double dt_s = static_cast<double>(cfg.period_ms()) / 1000.0;
    Vec3 lowpass{};
    bool first = true;
    double sum = 0.0;
    for (int k = 0; k < 3 * spw; ++k) {
        const Vec3 u = wave.unit_at(k * dt_s);
        if (first) {
            lowpass = u;
            first = false;
        } else {
            lowpass = lowpass * cfg.filter_alpha + u * (1.0 - cfg.filter_alpha);
        }
        const Vec3 out = u - lowpass;
        if (k >= 2 * spw) {
            sum += std::fabs(out.x) + std::fabs(out.y) + std::fabs(out.z);
        }
    }
    return sum / spw;
}

struct BoutSpan {
    int64_t start_ms = 0;
    int64_t end_ms = 0;
    const Bout* bout = nullptr;
    double amplitude = 0.0;
    BoutWaveform wave;
};

double bout_frac(const BoutSpan& span, int64_t t_ms) {
    return static_cast<double>(t_ms - span.start_ms) /
           static_cast<double>(span.end_ms - span.start_ms);
}

}  // namespace

double Bout::resolve_target() const {
    if (target_sma) return *target_sma;
    const auto lvl = level.value_or(ActivityLevel::Sedentary);
    return kLevelTargetSma[static_cast<size_t>(lvl)];
}

void ActivityProfile::validate() const {
    if (bouts.empty()) {
        fail(ErrorCode::ConfigError, "profile has no bouts");
    }
    for (size_t i = 0; i < bouts.size(); ++i) {
        const Bout& b = bouts[i];
        const std::string where = "bout " + std::to_string(i);
        if (b.duration_ms <= 0) {
            fail(ErrorCode::OutOfRangeValue, where + ": duration_ms must be positive");
        }
        const double target = b.resolve_target();
        if (!(target >= 0.0) || !std::isfinite(target)) {
            fail(ErrorCode::OutOfRangeValue, where + ": target SMA must be >= 0");
        }
        if (b.noise_amp < 0.0) {
            fail(ErrorCode::OutOfRangeValue, where + ": noise_amp must be >= 0");
        }
        if (target == 0.0 && b.noise_amp > 0.0) {
            fail(ErrorCode::InfeasibleTarget,
                 where + ": target SMA 0 cannot be met with nonzero noise");
        }
        for (double tilt : {b.tilt_start_deg, b.tilt_end_deg}) {
            if (tilt < 0.0 || tilt > 180.0) {
                fail(ErrorCode::OutOfRangeValue, where + ": tilt outside [0, 180]");
            }
        }
        for (double rh : {b.rh_start_pct, b.rh_end_pct}) {
            if (rh < 0.0 || rh > 100.0) {
                fail(ErrorCode::OutOfRangeValue, where + ": rh outside [0, 100]");
            }
        }
    }
}

GeneratedSession generate(const ActivityProfile& profile, const RunConfig& config) {
    profile.validate();
    config.validate();
    const EngineConfig& eng = config.engine;
    const int64_t period_ms = eng.period_ms();
    constexpr int64_t kSlowPeriodMs = 1000;  // mag + ambient cadence

    std::mt19937_64 rng(profile.seed);

    GeneratedSession out;

    // Per-bout waveform draw and amplitude calibration. Scaling is exact:
    // the filter is linear and the abs-sum mean is absolutely homogeneous,
    // so amplitude k yields recovered SMA k * unit_window_sma.
    std::vector<BoutSpan> spans;
    spans.reserve(profile.bouts.size());
    int64_t cursor_ms = 0;
    for (const Bout& bout : profile.bouts) {
        BoutSpan span;
        span.start_ms = cursor_ms;
        span.end_ms = cursor_ms + bout.duration_ms;
        span.bout = &bout;
        span.wave = draw_waveform(rng);
        const double target = bout.resolve_target();
        const double unit_sma = unit_recovered_sma(span.wave, eng);
        span.amplitude = target > 0.0 ? target / unit_sma : 0.0;
        out.calibration.push_back(
            {span.amplitude, span.wave.freq_hz, span.wave.sign, unit_sma});
        spans.push_back(span);
        cursor_ms = span.end_ms;
    }
    const int64_t total_ms = cursor_ms;
    const Vec3 mag_world{20.0, -42.0, 11.0};

    size_t span_idx = 0;
    for (int64_t t = 0; t < total_ms; t += period_ms) {
        while (t >= spans[span_idx].end_ms) ++span_idx;
        const BoutSpan& span = spans[span_idx];
        const Bout& bout = *span.bout;
        const double frac = bout_frac(span, t);

        const double tilt_deg = lerp(bout.tilt_start_deg, bout.tilt_end_deg, frac);
        const double tilt_rad = tilt_deg * kPi / 180.0;
        const Vec3 gravity_dev{0.0, kGravityMs2 * std::cos(tilt_rad),
                               kGravityMs2 * std::sin(tilt_rad)};

        const double t_rel_s = static_cast<double>(t - span.start_ms) / 1000.0;
        Vec3 linear = span.wave.unit_at(t_rel_s) * span.amplitude;
        if (bout.noise_amp > 0.0) {
            linear.x += (2.0 * uniform01(rng) - 1.0) * bout.noise_amp;
            linear.y += (2.0 * uniform01(rng) - 1.0) * bout.noise_amp;
            linear.z += (2.0 * uniform01(rng) - 1.0) * bout.noise_amp;
        }
        out.records.push_back(SensorRecord::accel(t, gravity_dev + linear));

        const double tilt_rate_rad_s = (bout.tilt_end_deg - bout.tilt_start_deg) *
                                       (kPi / 180.0) * 1000.0 /
                                       static_cast<double>(bout.duration_ms);
        out.records.push_back(SensorRecord::gyro(t, {tilt_rate_rad_s, 0.0, 0.0}));

        if (t % kSlowPeriodMs == 0) {
            const Vec3 mag_dev = rotate_about(mag_world, {1.0, 0.0, 0.0}, tilt_rad);
            out.records.push_back(SensorRecord::mag(t, mag_dev));
            const double temp_f = lerp(bout.temp_start_f, bout.temp_end_f, frac);
            const double rh_pct = lerp(bout.rh_start_pct, bout.rh_end_pct, frac);
            out.records.push_back(SensorRecord::ambient(t, temp_f, rh_pct));
        }
    }

    // Ground truth per full window, evaluated at the window's last sample.
    const int64_t n_samples = total_ms / period_ms;
    const int64_t n_windows = n_samples / eng.samples_per_window;
    for (int64_t w = 0; w < n_windows; ++w) {
        const int64_t ws = w * eng.window_ms;
        const int64_t we = ws + eng.window_ms;
        const int64_t t_eval = we - period_ms;

        size_t idx = 0;
        while (t_eval >= spans[idx].end_ms) ++idx;
        const BoutSpan& span = spans[idx];
        const Bout& bout = *span.bout;
        const double frac = bout_frac(span, t_eval);

        TruthRow row;
        row.window = static_cast<uint64_t>(w);
        row.start_ms = ws;
        for (const BoutSpan& s : spans) {
            if (s.start_ms >= ws && s.start_ms < we) row.transition = true;
        }
        row.target_sma = bout.resolve_target();
        row.level = classify_level(row.target_sma);
        row.tilt_deg = lerp(bout.tilt_start_deg, bout.tilt_end_deg, frac);
        row.posture = classify_posture(row.tilt_deg, eng.posture_thresholds_deg);
        row.temp_f = lerp(bout.temp_start_f, bout.temp_end_f, frac);
        row.rh_pct = lerp(bout.rh_start_pct, bout.rh_end_pct, frac);
        row.in_band =
            evaluate_ambient(t_eval, row.temp_f, row.rh_pct, config.band).in_band();
        out.truth.push_back(row);
    }

    return out;
}

}  // namespace exmon
