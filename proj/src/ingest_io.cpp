#include "exmon/ingest_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace exmon {

namespace {

using ordered_json = nlohmann::ordered_json;

// Shortest representation that parses back to the same double, so the
// write -> read -> re-process path is bit-exact.
std::string fmt(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string fmt_opt(const std::optional<double>& v) {
    return v ? fmt(*v) : std::string();
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        const size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

[[noreturn]] void parse_fail(size_t line_no, const std::string& message) {
    fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + message);
}

double parse_double(const std::string& s, size_t line_no, const char* what) {
    if (s.empty()) parse_fail(line_no, std::string("empty ") + what);
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size()) {
        parse_fail(line_no, std::string("bad ") + what + " '" + s + "'");
    }
    return v;
}

int64_t parse_int64(const std::string& s, size_t line_no, const char* what) {
    if (s.empty()) parse_fail(line_no, std::string("empty ") + what);
    char* end = nullptr;
    const long long v = std::strtoll(s.c_str(), &end, 10);
    if (end != s.c_str() + s.size()) {
        parse_fail(line_no, std::string("bad ") + what + " '" + s + "'");
    }
    return static_cast<int64_t>(v);
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
    return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::IoError, "cannot open " + path.string());
    return in;
}

void chomp(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

constexpr const char* kRecordHeader = "t_ms,channel,v1,v2,v3";
constexpr const char* kFeatureHeader =
    "index,start_ms,sma,ee_vo2,level,tilt_deg,posture,temp_f,rh_pct,in_band,degraded";
constexpr const char* kTruthHeader =
    "window,start_ms,transition,level,target_sma,tilt_deg,posture,temp_f,rh_pct,in_band";

}  // namespace

std::vector<SensorRecord> read_session(const std::filesystem::path& path) {
    std::ifstream in = open_in(path);
    std::string line;
    size_t line_no = 1;
    if (!std::getline(in, line)) {
        fail(ErrorCode::ParseError, "line 1: missing header in " + path.string());
    }
    chomp(line);
    if (line != kRecordHeader) {
        parse_fail(1, "expected header '" + std::string(kRecordHeader) + "'");
    }

    std::vector<SensorRecord> records;
    std::array<std::optional<int64_t>, 4> last_t{};
    while (std::getline(in, line)) {
        ++line_no;
        chomp(line);
        const auto fields = split(line, ',');
        if (fields.size() != 5) {
            parse_fail(line_no, "expected 5 fields, got " + std::to_string(fields.size()));
        }
        SensorRecord rec;
        rec.t_ms = parse_int64(fields[0], line_no, "t_ms");
        const auto channel = parse_channel(fields[1]);
        if (!channel) parse_fail(line_no, "unknown channel '" + fields[1] + "'");
        rec.channel = *channel;
        if (rec.channel == Channel::Ambient) {
            rec.values[0] = parse_double(fields[2], line_no, "temp_f");
            rec.values[1] = parse_double(fields[3], line_no, "rh_pct");
            if (!fields[4].empty()) parse_fail(line_no, "Ambient v3 must be empty");
        } else {
            for (int i = 0; i < 3; ++i) {
                rec.values[i] = parse_double(fields[2 + i], line_no, "value");
            }
        }
        auto& last = last_t[static_cast<size_t>(rec.channel)];
        try {
            validate_record(rec, last);
        } catch (const Error& e) {
            fail(e.code(), "line " + std::to_string(line_no) + ": " + e.detail());
        }
        last = rec.t_ms;
        records.push_back(rec);
    }

    // Per-channel streams are ordered, so sorting by (t_ms, channel) is the
    // k-way merge with the Accel < Gyro < Mag < Ambient tie-break.
    std::stable_sort(records.begin(), records.end(),
                     [](const SensorRecord& a, const SensorRecord& b) {
                         if (a.t_ms != b.t_ms) return a.t_ms < b.t_ms;
                         return a.channel < b.channel;
                     });
    return records;
}

void write_records(const std::vector<SensorRecord>& records,
                   const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << kRecordHeader << '\n';
    for (const SensorRecord& r : records) {
        out << r.t_ms << ',' << to_string(r.channel) << ',';
        if (r.channel == Channel::Ambient) {
            out << fmt(r.values[0]) << ',' << fmt(r.values[1]) << ',';
        } else {
            out << fmt(r.values[0]) << ',' << fmt(r.values[1]) << ','
                << fmt(r.values[2]);
        }
        out << '\n';
    }
}

void write_features(const std::vector<FeatureRecord>& rows,
                    const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << kFeatureHeader << '\n';
    for (const FeatureRecord& r : rows) {
        out << r.features.index << ',' << r.features.start_ms << ','
            << fmt(r.features.sma) << ',' << fmt(r.features.ee_vo2) << ','
            << to_string(r.features.level) << ',' << fmt_opt(r.tilt_deg) << ','
            << (r.posture ? std::string(to_string(*r.posture)) : std::string()) << ','
            << fmt_opt(r.temp_f) << ',' << fmt_opt(r.rh_pct) << ','
            << (r.in_band ? (*r.in_band ? "1" : "0") : "") << ','
            << (r.features.degraded ? '1' : '0') << '\n';
    }
}

void write_truth(const std::vector<TruthRow>& rows,
                 const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << kTruthHeader << '\n';
    for (const TruthRow& r : rows) {
        out << r.window << ',' << r.start_ms << ',' << (r.transition ? '1' : '0')
            << ',' << to_string(r.level) << ',' << fmt(r.target_sma) << ','
            << fmt(r.tilt_deg) << ',' << to_string(r.posture) << ','
            << fmt(r.temp_f) << ',' << fmt(r.rh_pct) << ','
            << (r.in_band ? '1' : '0') << '\n';
    }
}

namespace {

ordered_json engine_to_json(const EngineConfig& e) {
    ordered_json j;
    j["window_ms"] = e.window_ms;
    j["samples_per_window"] = e.samples_per_window;
    j["filter_alpha"] = e.filter_alpha;
    j["fusion_weight"] = e.fusion_weight;
    j["vertical_axis"] = std::string(to_string(e.vertical_axis));
    j["posture_thresholds_deg"] = e.posture_thresholds_deg;
    j["ambient_stale_ms"] = e.ambient_stale_ms;
    j["gap_factor"] = e.gap_factor;
    return j;
}

ordered_json alert_to_json(const Alert& a) {
    ordered_json j;
    j["kind"] = std::string(to_string(a.kind));
    j["t_ms"] = a.t_ms;
    j["window"] = a.window_index;
    j["level"] = std::string(to_string(a.level));
    if (a.tilt_deg) j["tilt_deg"] = *a.tilt_deg;
    if (a.ambient) {
        ordered_json amb;
        amb["t_ms"] = a.ambient->t_ms;
        amb["violations"] = violations_to_string(a.ambient->violations);
        j["ambient"] = amb;
    }
    return j;
}

}  // namespace

std::string summary_to_string(const SessionSummary& s) {
    ordered_json j;
    j["schema"] = "exmon-summary/1";

    ordered_json session;
    session["origin_unix_ms"] = s.origin_unix_ms;
    session["first_t_ms"] = s.first_t_ms ? ordered_json(*s.first_t_ms) : ordered_json();
    session["last_t_ms"] = s.last_t_ms ? ordered_json(*s.last_t_ms) : ordered_json();
    session["total_windows"] = s.total_windows;
    session["degraded_windows"] = s.degraded_windows;
    session["partial_tail_samples"] = s.partial_tail_samples;
    session["stale_ambient_windows"] = s.stale_ambient_windows;
    j["session"] = session;

    ordered_json config;
    config["engine"] = engine_to_json(s.config);
    ordered_json band;
    band["temp_low_f"] = s.band.temp_low_f;
    band["temp_high_f"] = s.band.temp_high_f;
    band["rh_low_pct"] = s.band.rh_low_pct;
    band["rh_high_pct"] = s.band.rh_high_pct;
    config["band"] = band;
    ordered_json rules;
    rules["vigorous_cum_ms"] = s.rules.vigorous_cum_ms;
    rules["adverse_exertion_min_level"] =
        std::string(to_string(s.rules.adverse_exertion_min_level));
    rules["adverse_ambient_consecutive_windows"] =
        s.rules.adverse_ambient_consecutive_windows;
    rules["post_exertion_lean_window_ms"] = s.rules.post_exertion_lean_window_ms;
    config["rules"] = rules;
    j["config"] = config;

    ordered_json levels;
    for (size_t i = 0; i < 4; ++i) {
        ordered_json level;
        level["windows"] = s.levels[i].windows;
        level["duration_ms"] = s.levels[i].duration_ms;
        level["duration"] = s.levels[i].duration_hms;
        levels[std::string(to_string(static_cast<ActivityLevel>(i)))] = level;
    }
    j["levels"] = levels;
    j["current_activity_level"] =
        s.current_level ? ordered_json(std::string(to_string(*s.current_level)))
                        : ordered_json();

    ordered_json hourly = ordered_json::array();
    for (const auto& [hour, counts] : s.hourly) {
        ordered_json h;
        h["hour"] = hour;
        for (size_t i = 0; i < 4; ++i) {
            h[std::string(to_string(static_cast<ActivityLevel>(i)))] = counts[i];
        }
        hourly.push_back(h);
    }
    j["hourly"] = hourly;

    ordered_json posture;
    for (size_t i = 0; i < 4; ++i) {
        posture[std::string(to_string(static_cast<PostureClass>(i)))] =
            s.posture_windows[i];
    }
    j["posture_occupancy"] = posture;

    ordered_json episodes = ordered_json::array();
    for (const OutOfBandEpisode& e : s.ambient_episodes) {
        ordered_json ep;
        ep["start_ms"] = e.start_ms;
        ep["end_ms"] = e.end_ms;
        ep["violations"] = violations_to_string(e.violations);
        episodes.push_back(ep);
    }
    j["ambient_episodes"] = episodes;

    ordered_json alerts = ordered_json::array();
    for (const Alert& a : s.alerts) alerts.push_back(alert_to_json(a));
    j["alerts"] = alerts;

    return j.dump(2) + "\n";
}

void write_summary(const SessionSummary& summary,
                   const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << summary_to_string(summary);
}

uint8_t parse_violations(const std::string& text) {
    uint8_t mask = 0;
    if (text.empty()) return mask;
    for (const std::string& name : split(text, '+')) {
        if (name == "TempLow") mask |= kTempLow;
        else if (name == "TempHigh") mask |= kTempHigh;
        else if (name == "RhLow") mask |= kRhLow;
        else if (name == "RhHigh") mask |= kRhHigh;
        else fail(ErrorCode::ParseError, "unknown violation '" + name + "'");
    }
    return mask;
}

SessionSummary read_summary(const std::filesystem::path& path) {
    std::ifstream in = open_in(path);
    SessionSummary s;
    try {
        const ordered_json j = ordered_json::parse(in);

        const auto& session = j.at("session");
        s.origin_unix_ms = session.at("origin_unix_ms").get<int64_t>();
        if (!session.at("first_t_ms").is_null()) {
            s.first_t_ms = session.at("first_t_ms").get<int64_t>();
        }
        if (!session.at("last_t_ms").is_null()) {
            s.last_t_ms = session.at("last_t_ms").get<int64_t>();
        }
        s.total_windows = session.at("total_windows").get<uint64_t>();
        s.degraded_windows = session.at("degraded_windows").get<uint64_t>();
        s.partial_tail_samples = session.at("partial_tail_samples").get<uint64_t>();
        s.stale_ambient_windows = session.at("stale_ambient_windows").get<uint64_t>();

        const auto& engine = j.at("config").at("engine");
        s.config.window_ms = engine.at("window_ms").get<int64_t>();
        s.config.samples_per_window = engine.at("samples_per_window").get<int>();
        s.config.filter_alpha = engine.at("filter_alpha").get<double>();
        s.config.fusion_weight = engine.at("fusion_weight").get<double>();
        const auto axis = parse_axis(engine.at("vertical_axis").get<std::string>());
        if (!axis) fail(ErrorCode::ParseError, "bad vertical_axis");
        s.config.vertical_axis = *axis;
        const auto thresholds =
            engine.at("posture_thresholds_deg").get<std::vector<double>>();
        if (thresholds.size() != 3) fail(ErrorCode::ParseError, "bad thresholds");
        std::copy(thresholds.begin(), thresholds.end(),
                  s.config.posture_thresholds_deg.begin());
        s.config.ambient_stale_ms = engine.at("ambient_stale_ms").get<int64_t>();
        s.config.gap_factor = engine.at("gap_factor").get<int>();

        const auto& band = j.at("config").at("band");
        s.band.temp_low_f = band.at("temp_low_f").get<double>();
        s.band.temp_high_f = band.at("temp_high_f").get<double>();
        s.band.rh_low_pct = band.at("rh_low_pct").get<double>();
        s.band.rh_high_pct = band.at("rh_high_pct").get<double>();

        const auto& rules = j.at("config").at("rules");
        s.rules.vigorous_cum_ms = rules.at("vigorous_cum_ms").get<int64_t>();
        const auto min_level = parse_activity_level(
            rules.at("adverse_exertion_min_level").get<std::string>());
        if (!min_level) fail(ErrorCode::ParseError, "bad adverse_exertion_min_level");
        s.rules.adverse_exertion_min_level = *min_level;
        s.rules.adverse_ambient_consecutive_windows =
            rules.at("adverse_ambient_consecutive_windows").get<int>();
        s.rules.post_exertion_lean_window_ms =
            rules.at("post_exertion_lean_window_ms").get<int64_t>();

        const auto& levels = j.at("levels");
        for (size_t i = 0; i < 4; ++i) {
            const auto& level =
                levels.at(std::string(to_string(static_cast<ActivityLevel>(i))));
            s.levels[i].windows = level.at("windows").get<uint64_t>();
            s.levels[i].duration_ms = level.at("duration_ms").get<int64_t>();
            s.levels[i].duration_hms = level.at("duration").get<std::string>();
        }
        if (!j.at("current_activity_level").is_null()) {
            const auto level = parse_activity_level(
                j.at("current_activity_level").get<std::string>());
            if (!level) fail(ErrorCode::ParseError, "bad current_activity_level");
            s.current_level = level;
        }

        for (const auto& h : j.at("hourly")) {
            std::array<uint64_t, 4> counts{};
            for (size_t i = 0; i < 4; ++i) {
                counts[i] =
                    h.at(std::string(to_string(static_cast<ActivityLevel>(i))))
                        .get<uint64_t>();
            }
            s.hourly[h.at("hour").get<int64_t>()] = counts;
        }

        const auto& posture = j.at("posture_occupancy");
        for (size_t i = 0; i < 4; ++i) {
            s.posture_windows[i] =
                posture.at(std::string(to_string(static_cast<PostureClass>(i))))
                    .get<uint64_t>();
        }

        for (const auto& ep : j.at("ambient_episodes")) {
            OutOfBandEpisode e;
            e.start_ms = ep.at("start_ms").get<int64_t>();
            e.end_ms = ep.at("end_ms").get<int64_t>();
            e.violations = parse_violations(ep.at("violations").get<std::string>());
            s.ambient_episodes.push_back(e);
        }

        for (const auto& aj : j.at("alerts")) {
            Alert a;
            const auto kind = aj.at("kind").get<std::string>();
            if (kind == "VigorousDuration") a.kind = AlertKind::VigorousDuration;
            else if (kind == "AdverseAmbientExertion") a.kind = AlertKind::AdverseAmbientExertion;
            else if (kind == "PostExertionLean") a.kind = AlertKind::PostExertionLean;
            else fail(ErrorCode::ParseError, "unknown alert kind '" + kind + "'");
            a.t_ms = aj.at("t_ms").get<int64_t>();
            a.window_index = aj.at("window").get<uint64_t>();
            const auto level = parse_activity_level(aj.at("level").get<std::string>());
            if (!level) fail(ErrorCode::ParseError, "bad alert level");
            a.level = *level;
            if (aj.contains("tilt_deg")) a.tilt_deg = aj.at("tilt_deg").get<double>();
            if (aj.contains("ambient")) {
                AmbientVerdict v;
                v.t_ms = aj.at("ambient").at("t_ms").get<int64_t>();
                v.violations = parse_violations(
                    aj.at("ambient").at("violations").get<std::string>());
                a.ambient = v;
            }
            s.alerts.push_back(a);
        }
    } catch (const ordered_json::exception& e) {
        fail(ErrorCode::ParseError, path.string() + ": " + e.what());
    }
    return s;
}

void write_plot_sma(const std::vector<FeatureRecord>& rows,
                    const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << "index,start_ms,sma,ee_vo2,level\n";
    for (const FeatureRecord& r : rows) {
        out << r.features.index << ',' << r.features.start_ms << ','
            << fmt(r.features.sma) << ',' << fmt(r.features.ee_vo2) << ','
            << to_string(r.features.level) << '\n';
    }
}

void write_plot_ambient(const std::vector<AmbientSeriesRow>& rows,
                        const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << "t_ms,temp_f,rh_pct,in_band\n";
    for (const AmbientSeriesRow& r : rows) {
        out << r.t_ms << ',' << fmt(r.temp_f) << ',' << fmt(r.rh_pct) << ','
            << (r.in_band ? '1' : '0') << '\n';
    }
}

void write_plot_hourly(const SessionSummary& summary,
                       const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << "hour,level,windows\n";
    for (const auto& [hour, counts] : summary.hourly) {
        for (size_t i = 0; i < 4; ++i) {
            out << hour << ',' << to_string(static_cast<ActivityLevel>(i)) << ','
                << counts[i] << '\n';
        }
    }
}

namespace {

// `a` or `a:b` ramp values.
std::pair<double, double> parse_ramp(const std::string& s, size_t line_no,
                                     const char* what) {
    const size_t colon = s.find(':');
    if (colon == std::string::npos) {
        const double v = parse_double(s, line_no, what);
        return {v, v};
    }
    return {parse_double(s.substr(0, colon), line_no, what),
            parse_double(s.substr(colon + 1), line_no, what)};
}

}  // namespace

ActivityProfile load_profile(const std::filesystem::path& path) {
    std::ifstream in = open_in(path);
    ActivityProfile profile;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        chomp(line);
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto tokens = split_ws(line);
        if (tokens.empty()) continue;

        if (tokens[0] == "seed") {
            if (tokens.size() != 2) parse_fail(line_no, "seed takes one value");
            profile.seed = static_cast<uint64_t>(
                std::strtoull(tokens[1].c_str(), nullptr, 10));
            continue;
        }
        if (tokens[0] != "bout") {
            parse_fail(line_no, "expected 'seed' or 'bout', got '" + tokens[0] + "'");
        }

        Bout bout;
        for (size_t i = 1; i < tokens.size(); ++i) {
            const size_t eq = tokens[i].find('=');
            if (eq == std::string::npos) {
                parse_fail(line_no, "expected key=value, got '" + tokens[i] + "'");
            }
            const std::string key = tokens[i].substr(0, eq);
            const std::string value = tokens[i].substr(eq + 1);
            if (key == "level") {
                const auto level = parse_activity_level(value);
                if (!level) parse_fail(line_no, "unknown level '" + value + "'");
                bout.level = level;
            } else if (key == "target_sma") {
                bout.target_sma = parse_double(value, line_no, "target_sma");
            } else if (key == "duration_ms") {
                bout.duration_ms = parse_int64(value, line_no, "duration_ms");
            } else if (key == "tilt_deg") {
                std::tie(bout.tilt_start_deg, bout.tilt_end_deg) =
                    parse_ramp(value, line_no, "tilt_deg");
            } else if (key == "temp_f") {
                std::tie(bout.temp_start_f, bout.temp_end_f) =
                    parse_ramp(value, line_no, "temp_f");
            } else if (key == "rh_pct") {
                std::tie(bout.rh_start_pct, bout.rh_end_pct) =
                    parse_ramp(value, line_no, "rh_pct");
            } else if (key == "noise_amp") {
                bout.noise_amp = parse_double(value, line_no, "noise_amp");
            } else {
                parse_fail(line_no, "unknown bout key '" + key + "'");
            }
        }
        profile.bouts.push_back(bout);
    }
    profile.validate();
    return profile;
}

RunConfig load_run_config(const std::filesystem::path& path) {
    std::ifstream in = open_in(path);
    RunConfig config;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        chomp(line);
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        const std::string& key = tokens[0];
        const auto want = [&](size_t n) {
            if (tokens.size() != n + 1) {
                parse_fail(line_no, key + " takes " + std::to_string(n) + " value(s)");
            }
        };
        if (key == "window_ms") {
            want(1);
            config.engine.window_ms = parse_int64(tokens[1], line_no, key.c_str());
        } else if (key == "samples_per_window") {
            want(1);
            config.engine.samples_per_window =
                static_cast<int>(parse_int64(tokens[1], line_no, key.c_str()));
        } else if (key == "filter_alpha") {
            want(1);
            config.engine.filter_alpha = parse_double(tokens[1], line_no, key.c_str());
        } else if (key == "fusion_weight") {
            want(1);
            config.engine.fusion_weight = parse_double(tokens[1], line_no, key.c_str());
        } else if (key == "vertical_axis") {
            want(1);
            const auto axis = parse_axis(tokens[1]);
            if (!axis) parse_fail(line_no, "bad axis '" + tokens[1] + "'");
            config.engine.vertical_axis = *axis;
        } else if (key == "posture_thresholds") {
            want(3);
            for (int i = 0; i < 3; ++i) {
                config.engine.posture_thresholds_deg[i] =
                    parse_double(tokens[1 + i], line_no, key.c_str());
            }
        } else if (key == "ambient_stale_ms") {
            want(1);
            config.engine.ambient_stale_ms =
                parse_int64(tokens[1], line_no, key.c_str());
        } else if (key == "gap_factor") {
            want(1);
            config.engine.gap_factor =
                static_cast<int>(parse_int64(tokens[1], line_no, key.c_str()));
        } else if (key == "temp_low_f") {
            want(1);
            config.band.temp_low_f = parse_double(tokens[1], line_no, key.c_str());
        } else if (key == "temp_high_f") {
            want(1);
            config.band.temp_high_f = parse_double(tokens[1], line_no, key.c_str());
        } else if (key == "rh_low_pct") {
            want(1);
            config.band.rh_low_pct = parse_double(tokens[1], line_no, key.c_str());
        } else if (key == "rh_high_pct") {
            want(1);
            config.band.rh_high_pct = parse_double(tokens[1], line_no, key.c_str());
        } else if (key == "vigorous_cum_ms") {
            want(1);
            config.rules.vigorous_cum_ms = parse_int64(tokens[1], line_no, key.c_str());
        } else if (key == "adverse_exertion_min_level") {
            want(1);
            const auto level = parse_activity_level(tokens[1]);
            if (!level) parse_fail(line_no, "bad level '" + tokens[1] + "'");
            config.rules.adverse_exertion_min_level = *level;
        } else if (key == "adverse_ambient_consecutive_windows") {
            want(1);
            config.rules.adverse_ambient_consecutive_windows =
                static_cast<int>(parse_int64(tokens[1], line_no, key.c_str()));
        } else if (key == "post_exertion_lean_window_ms") {
            want(1);
            config.rules.post_exertion_lean_window_ms =
                parse_int64(tokens[1], line_no, key.c_str());
        } else if (key == "origin_unix_ms") {
            want(1);
            config.origin_unix_ms = parse_int64(tokens[1], line_no, key.c_str());
        } else {
            fail(ErrorCode::ConfigError,
                 "line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }
    config.validate();
    return config;
}

std::string format_alert_line(const Alert& alert) {
    std::string out = "ALERT t_ms=" + std::to_string(alert.t_ms) +
                      " kind=" + std::string(to_string(alert.kind)) +
                      " window=" + std::to_string(alert.window_index) +
                      " level=" + std::string(to_string(alert.level));
    if (alert.tilt_deg) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.1f", *alert.tilt_deg);
        out += " tilt_deg=" + std::string(buf);
    }
    if (alert.ambient) {
        out += " violations=" + violations_to_string(alert.ambient->violations);
    }
    return out;
}

std::string format_alert_pretty(const Alert& alert) {
    std::string out = "[" + format_duration(alert.t_ms) + "] ";
    switch (alert.kind) {
        case AlertKind::VigorousDuration:
            out += "vigorous-duration warning: cumulative vigorous activity reached "
                   "the configured limit";
            break;
        case AlertKind::AdverseAmbientExertion:
            out += "adverse-ambient warning: sustained exertion while conditions are "
                   "out of band";
            if (alert.ambient) {
                out += " (" + violations_to_string(alert.ambient->violations) + ")";
            }
            break;
        case AlertKind::PostExertionLean: {
            out += "post-exertion posture warning: leaning/lying right after "
                   "vigorous activity";
            if (alert.tilt_deg) {
                char buf[32];
                std::snprintf(buf, sizeof(buf), " (tilt %.1f deg)", *alert.tilt_deg);
                out += buf;
            }
            break;
        }
    }
    out += " [window " + std::to_string(alert.window_index) + "]";
    return out;
}

}  // namespace exmon
