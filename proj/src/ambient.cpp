#include "exmon/ambient.hpp"

namespace exmon {

void AmbientBand::validate() const {
    if (!(temp_low_f < temp_high_f && rh_low_pct < rh_high_pct)) {
        fail(ErrorCode::ConfigError, "ambient band bounds must satisfy low < high");
    }
}

std::string violations_to_string(uint8_t violations) {
    static constexpr std::pair<AmbientViolation, const char*> kNames[] = {
        {kTempLow, "TempLow"},
        {kTempHigh, "TempHigh"},
        {kRhLow, "RhLow"},
        {kRhHigh, "RhHigh"},
    };
    std::string out;
    for (const auto& [bit, name] : kNames) {
        if (violations & bit) {
            if (!out.empty()) out += '+';
            out += name;
        }
    }
    return out;
}

AmbientVerdict evaluate_ambient(int64_t t_ms, double temp_f, double rh_pct,
                                const AmbientBand& band) {
    AmbientVerdict v;
    v.t_ms = t_ms;
    if (temp_f < band.temp_low_f) v.violations |= kTempLow;
    if (temp_f > band.temp_high_f) v.violations |= kTempHigh;
    if (rh_pct < band.rh_low_pct) v.violations |= kRhLow;
    if (rh_pct > band.rh_high_pct) v.violations |= kRhHigh;
    return v;
}

void EpisodeTracker::push(const AmbientVerdict& verdict) {
    if (verdict.in_band()) {
        open_ = false;
        return;
    }
    if (!open_) {
        episodes_.push_back({verdict.t_ms, verdict.t_ms, verdict.violations});
        open_ = true;
    } else {
        episodes_.back().end_ms = verdict.t_ms;
        episodes_.back().violations |= verdict.violations;
    }
}

void EpisodeTracker::finish() { open_ = false; }

}  // namespace exmon
