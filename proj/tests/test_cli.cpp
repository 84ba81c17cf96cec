// End-to-end checks of the command line surface. The binary path and repo
// root come from EXMON_CLI / EXMON_ROOT (set by ctest).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using namespace std::string_literals;
namespace fs = std::filesystem;

namespace {

std::string env_or_fail(const char* name) {
    const char* v = std::getenv(name);
    REQUIRE_MESSAGE(v != nullptr, name << " must be set");
    return v;
}

std::string cli() { return env_or_fail("EXMON_CLI"); }
std::string root() { return env_or_fail("EXMON_ROOT"); }

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("exmon-cli-test-" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

int run(const std::string& command) {
    const int rc = std::system(command.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string read_text(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

uint64_t fnv1a(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;
    for (const unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// Pinned from the first run of `gen --profile profiles/mixed.example --seed 42`.
constexpr uint64_t kMixedExampleChecksum = 16861939320840170179ull;

}  // namespace

TEST_CASE("gen on the bundled profile is deterministic with a pinned checksum") {
    TempDir dir;
    const std::string profile = root() + "/profiles/mixed.example";
    const fs::path out = dir.path / "mixed.csv";
    const fs::path out2 = dir.path / "mixed2.csv";

    CHECK(run(cli() + " gen --profile " + profile + " --out " + out.string() +
              " --seed 42 > /dev/null") == 0);
    CHECK(run(cli() + " gen --profile " + profile + " --out " + out2.string() +
              " --seed 42 > /dev/null") == 0);

    const std::string bytes = read_text(out);
    CHECK(bytes == read_text(out2));
    CHECK(fnv1a(bytes) == kMixedExampleChecksum);

    // sidecar written next to the records
    CHECK(fs::exists(dir.path / "mixed.truth.csv"));
}

TEST_CASE("gen with a missing profile exits 2 and names the path") {
    TempDir dir;
    const fs::path err = dir.path / "err.txt";
    const int code = run(cli() + " gen --profile " + (dir.path / "nope.prof").string() +
                         " --out " + (dir.path / "x.csv").string() + " 2> " +
                         err.string());
    CHECK(code == 2);
    CHECK(read_text(err).find("nope.prof") != std::string::npos);
}

TEST_CASE("gen with an invalid profile exits 2") {
    TempDir dir;
    const fs::path profile = dir.path / "bad.prof";
    write_text(profile, "bout target_sma=0 duration_ms=10000 noise_amp=0.5\n");
    const fs::path err = dir.path / "err.txt";
    CHECK(run(cli() + " gen --profile " + profile.string() + " --out " +
              (dir.path / "x.csv").string() + " 2> " + err.string()) == 2);
    CHECK(read_text(err).find("InfeasibleTarget") != std::string::npos);
}

TEST_CASE("replay of an all-sedentary session reports zero alerts, exit 0") {
    TempDir dir;
    const fs::path profile = dir.path / "calm.prof";
    write_text(profile,
               "seed 5\n"
               "bout level=Sedentary duration_ms=60000 noise_amp=0.01 "
               "temp_f=72 rh_pct=40\n");
    const fs::path records = dir.path / "calm.csv";
    REQUIRE(run(cli() + " gen --profile " + profile.string() + " --out " +
                records.string() + " > /dev/null") == 0);

    const fs::path alerts = dir.path / "alerts.txt";
    const fs::path out = dir.path / "out";
    CHECK(run(cli() + " replay --in " + records.string() + " --out-dir " +
              out.string() + " > " + alerts.string()) == 0);
    CHECK(read_text(alerts).empty());
    const std::string summary = read_text(out / "summary.json");
    CHECK(summary.find("\"alerts\": []") != std::string::npos);
    CHECK(fs::exists(out / "features.csv"));
}

TEST_CASE("replay of a ten-minute vigorous session prints one alert, exit 0") {
    TempDir dir;
    const fs::path profile = dir.path / "hard.prof";
    write_text(profile,
               "seed 6\n"
               "bout level=Vigorous duration_ms=600000 noise_amp=0.2 "
               "temp_f=72 rh_pct=40\n");
    const fs::path records = dir.path / "hard.csv";
    REQUIRE(run(cli() + " gen --profile " + profile.string() + " --out " +
                records.string() + " > /dev/null") == 0);

    const fs::path alerts = dir.path / "alerts.txt";
    const int code = run(cli() + " replay --in " + records.string() +
                         " --out-dir " + (dir.path / "out").string() + " > " +
                         alerts.string());
    CHECK(code == 0);  // alerts are output, not errors
    const std::string text = read_text(alerts);
    CHECK(text.find("kind=VigorousDuration") != std::string::npos);
    // exactly one alert line
    CHECK(std::count(text.begin(), text.end(), '\n') == 1);
}

TEST_CASE("replay of a truncated file exits 1 naming the line") {
    TempDir dir;
    const fs::path records = dir.path / "broken.csv";
    write_text(records,
               "t_ms,channel,v1,v2,v3\n"
               "0,Accel,0,0,9.81\n"
               "200,Accel,0,0\n");  // cut off mid-line
    const fs::path err = dir.path / "err.txt";
    CHECK(run(cli() + " replay --in " + records.string() + " --out-dir " +
              (dir.path / "out").string() + " 2> " + err.string()) == 1);
    const std::string text = read_text(err);
    CHECK(text.find("line 3") != std::string::npos);
}

TEST_CASE("golden-check self-verifies and names the divergent row") {
    TempDir dir;
    const fs::path out = dir.path / "golden.txt";
    CHECK(run(cli() + " golden-check > " + out.string()) == 0);
    const std::string text = read_text(out);
    CHECK(text.find("28/28") != std::string::npos);
    CHECK(text.find("27/28") != std::string::npos);
    CHECK(text.find("1.94435") != std::string::npos);
    CHECK(text.find("PASS") != std::string::npos);
}

TEST_CASE("export-plot writes the three series, ambient with both columns") {
    TempDir dir;
    const std::string profile = root() + "/profiles/mixed.example";
    const fs::path records = dir.path / "mixed.csv";
    REQUIRE(run(cli() + " gen --profile " + profile + " --out " + records.string() +
                " --seed 42 > /dev/null") == 0);
    const fs::path out = dir.path / "plots";
    CHECK(run(cli() + " export-plot --in " + records.string() + " --out-dir " +
              out.string()) == 0);
    const std::string ambient = read_text(out / "plot_ambient.csv");
    CHECK(ambient.find("t_ms,temp_f,rh_pct,in_band") == 0);
    // temperature and humidity series over time, one row per reading
    CHECK(std::count(ambient.begin(), ambient.end(), '\n') == 360 + 1);
    CHECK(fs::exists(out / "plot_sma.csv"));
    CHECK(fs::exists(out / "plot_hourly.csv"));
}

TEST_CASE("summarize prints the summary document to stdout") {
    TempDir dir;
    const fs::path profile = dir.path / "p.prof";
    write_text(profile, "seed 8\nbout level=Low duration_ms=30000 noise_amp=0.05\n");
    const fs::path records = dir.path / "r.csv";
    REQUIRE(run(cli() + " gen --profile " + profile.string() + " --out " +
                records.string() + " > /dev/null") == 0);
    const fs::path out = dir.path / "summary.txt";
    CHECK(run(cli() + " summarize --in " + records.string() + " > " +
              out.string()) == 0);
    const std::string text = read_text(out);
    CHECK(text.find("\"schema\": \"exmon-summary/1\"") != std::string::npos);
    CHECK(text.find("\"current_activity_level\": \"Low\"") != std::string::npos);
}

TEST_CASE("config file overrides change the replay outcome") {
    TempDir dir;
    const fs::path profile = dir.path / "p.prof";
    // two minutes of vigorous work: silent at the default 10 min threshold
    write_text(profile,
               "seed 9\nbout level=Vigorous duration_ms=120000 noise_amp=0.2\n");
    const fs::path records = dir.path / "r.csv";
    REQUIRE(run(cli() + " gen --profile " + profile.string() + " --out " +
                records.string() + " > /dev/null") == 0);

    const fs::path alerts_default = dir.path / "alerts-default.txt";
    REQUIRE(run(cli() + " replay --in " + records.string() + " --out-dir " +
                (dir.path / "out1").string() + " > " +
                alerts_default.string()) == 0);
    CHECK(read_text(alerts_default).empty());

    const fs::path config = dir.path / "tight.conf";
    write_text(config, "vigorous_cum_ms 60000\n");
    const fs::path alerts_tight = dir.path / "alerts-tight.txt";
    REQUIRE(run(cli() + " replay --in " + records.string() + " --config " +
                config.string() + " --out-dir " + (dir.path / "out2").string() +
                " > " + alerts_tight.string()) == 0);
    CHECK(read_text(alerts_tight).find("kind=VigorousDuration") !=
          std::string::npos);
}
