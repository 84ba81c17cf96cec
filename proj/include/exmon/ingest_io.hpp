// ingest_io.hpp - On-disk formats: record files, per-window feature tables,
// ground-truth sidecars, session summaries, profiles, and config files.
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "exmon/pipeline.hpp"
#include "exmon/synth.hpp"

namespace exmon {

// Record file: header `t_ms,channel,v1,v2,v3`, one record per line, LF
// endings, `.` decimal separator. Ambient rows leave v3 empty.
//
// Reads a whole session and merges the channels into global timestamp order;
// ties broken by channel order Accel < Gyro < Mag < Ambient. Malformed lines
// and per-channel timestamp regressions are reported with line numbers.
std::vector<SensorRecord> read_session(const std::filesystem::path& path);

void write_records(const std::vector<SensorRecord>& records,
                   const std::filesystem::path& path);

// Feature table columns:
// index,start_ms,sma,ee_vo2,level,tilt_deg,posture,temp_f,rh_pct,in_band,degraded
// Absent snapshots leave their fields empty; booleans are 0/1.
void write_features(const std::vector<FeatureRecord>& rows,
                    const std::filesystem::path& path);

// Ground-truth sidecar columns:
// window,start_ms,transition,level,target_sma,tilt_deg,posture,temp_f,rh_pct,in_band
void write_truth(const std::vector<TruthRow>& rows,
                 const std::filesystem::path& path);

// Session summary as a JSON document with fixed key order, so byte equality
// is a valid determinism check.
std::string summary_to_string(const SessionSummary& summary);
void write_summary(const SessionSummary& summary,
                   const std::filesystem::path& path);
SessionSummary read_summary(const std::filesystem::path& path);

// Plot-ready exports.
void write_plot_sma(const std::vector<FeatureRecord>& rows,
                    const std::filesystem::path& path);
void write_plot_ambient(const std::vector<AmbientSeriesRow>& rows,
                        const std::filesystem::path& path);
void write_plot_hourly(const SessionSummary& summary,
                       const std::filesystem::path& path);

// Profile file: `seed N` plus one `bout key=value ...` line per bout. Ramped
// quantities use `start:end` (e.g. `tilt_deg=10:45`). Keys: level,
// target_sma, duration_ms, tilt_deg, temp_f, rh_pct, noise_amp.
ActivityProfile load_profile(const std::filesystem::path& path);

// Config file: `key value...` lines overriding RunConfig defaults; `#` starts
// a comment. Unknown keys are rejected.
RunConfig load_run_config(const std::filesystem::path& path);

// One-line alert encodings.
std::string format_alert_line(const Alert& alert);
std::string format_alert_pretty(const Alert& alert);

uint8_t parse_violations(const std::string& text);

}  // namespace exmon
