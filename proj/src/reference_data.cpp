#include "exmon/reference_data.hpp"

#include <cmath>

#include "exmon/activity.hpp"

namespace exmon {

namespace {
constexpr ActivityLevel kSed = ActivityLevel::Sedentary;
constexpr ActivityLevel kLow = ActivityLevel::Low;
constexpr ActivityLevel kMod = ActivityLevel::Moderate;
constexpr ActivityLevel kVig = ActivityLevel::Vigorous;
}  // namespace

const std::array<ReferenceRow, 28> kReferenceRows = {{
    {0.986008, 6.784609, kSed},
    {1.94435, 7.838785, kSed},
    {0.879925, 6.667917, kSed},
    {15.5243, 22.77673, kMod},
    {40.58631, 50.34494, kVig},
    {26.91364, 35.305, kVig},
    {21.22344, 29.04579, kVig},
    {2.663409, 8.62975, kLow},
    {0.935883, 6.729471, kSed},
    {2.273131, 8.200444, kLow},
    {3.30391, 9.3343, kLow},
    {2.463069, 8.409376, kLow},
    {2.772076, 8.749284, kLow},
    {1.191858, 7.011044, kSed},
    {0.69416, 6.463576, kSed},
    {0.795958, 6.575553, kSed},
    {2.134268, 8.047695, kLow},
    {2.250499, 8.175549, kLow},
    {1.116092, 6.927701, kSed},
    {2.974935, 8.972429, kLow},
    {2.019332, 7.921265, kLow},
    {0.973806, 6.771186, kSed},
    {1.028279, 6.831107, kSed},
    {0.338428, 6.072271, kSed},
    {0.39571, 6.135281, kSed},
    {0.464635, 6.211099, kSed},
    {1.649994, 7.514993, kLow},
    {2.114025, 8.025427, kLow},
}};

bool ReferenceReport::pass() const {
    return ee_diffs.empty() && level_diffs.size() == 1 &&
           level_diffs[0].row == kKnownDivergentRow &&
           level_diffs[0].actual == ActivityLevel::Low;
}

ReferenceReport run_reference_check(
    const std::function<double(double)>& ee_fn,
    const std::function<ActivityLevel(double)>& classify_fn,
    double ee_tolerance) {
    ReferenceReport report;
    for (size_t i = 0; i < kReferenceRows.size(); ++i) {
        const ReferenceRow& row = kReferenceRows[i];
        const double ee = ee_fn(row.sma);
        if (std::fabs(ee - row.ee) > ee_tolerance) {
            report.ee_diffs.push_back({i, row.sma, row.ee, ee});
        }
        const ActivityLevel level = classify_fn(row.sma);
        if (level != row.level) {
            report.level_diffs.push_back({i, row.sma, row.level, level});
        }
    }
    return report;
}

ReferenceReport run_reference_check() {
    return run_reference_check([](double sma) { return extrapolate_ee(sma); },
                               [](double sma) { return classify_level(sma); });
}

}  // namespace exmon
