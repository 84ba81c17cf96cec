// ambient.hpp - Comfort-band evaluation of temperature/humidity readings and
// out-of-band episode tracking.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exmon/sensor_model.hpp"

namespace exmon {

// Ideal ambient region for respiratory health; bounds inclusive.
struct AmbientBand {
    double temp_low_f = 69.0;
    double temp_high_f = 79.0;
    double rh_low_pct = 35.0;
    double rh_high_pct = 50.0;

    void validate() const;
};

// Bitmask of violated bounds. All violated bounds are reported, not just the
// first.
enum AmbientViolation : uint8_t {
    kTempLow = 1 << 0,
    kTempHigh = 1 << 1,
    kRhLow = 1 << 2,
    kRhHigh = 1 << 3,
};

struct AmbientVerdict {
    int64_t t_ms = 0;
    uint8_t violations = 0;

    bool in_band() const { return violations == 0; }
};

// Fixed-order text form of a violation mask, e.g. "TempHigh+RhLow".
std::string violations_to_string(uint8_t violations);

AmbientVerdict evaluate_ambient(int64_t t_ms, double temp_f, double rh_pct,
                                const AmbientBand& band);

// Maximal contiguous run of out-of-band verdicts; `violations` is the union
// over the run.
struct OutOfBandEpisode {
    int64_t start_ms = 0;
    int64_t end_ms = 0;
    uint8_t violations = 0;
};

// Splits a time-ordered verdict stream into out-of-band episodes. Adjacent
// episodes are separated by at least one in-band verdict.
class EpisodeTracker {
public:
    void push(const AmbientVerdict& verdict);

    // Closes a still-open episode. Safe to call when none is open.
    void finish();

    const std::vector<OutOfBandEpisode>& episodes() const { return episodes_; }

private:
    std::vector<OutOfBandEpisode> episodes_;
    bool open_ = false;
};

}  // namespace exmon
