// SPDX-License-Identifier: Apache-2.0
//
// End-to-end checks of the installed command surface; each case shells out
// to the built binary.
#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(RADMOM_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) r.output += buf.data();
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path temp_dir() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / "radmom_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::string kSimArgs =
    "--velocity 10 --width 1 --power 1 --snr 20 --pulses 64 --seed 7 "
    "--wavelength 0.1 --prt 1e-3";

}  // namespace

TEST_CASE("simulate writes the file and echoes the truth") {
    const auto out = temp_dir() / "cell.iq";
    const auto r = run("simulate " + kSimArgs + " --out " + out.string());
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(out));
    CHECK(r.output.find("velocity 10") != std::string::npos);
    CHECK(r.output.find("width 1") != std::string::npos);
}

TEST_CASE("simulate rejects a velocity beyond Nyquist") {
    const auto out = temp_dir() / "bad.iq";
    const auto r = run("simulate --velocity 30 --wavelength 0.1 --prt 1e-3 --out " +
                       out.string());
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("Nyquist") != std::string::npos);
}

TEST_CASE("simulate is deterministic: same flags, identical files") {
    const auto a = temp_dir() / "det_a.iq";
    const auto b = temp_dir() / "det_b.iq";
    CHECK(run("simulate " + kSimArgs + " --out " + a.string()).exit_code == 0);
    CHECK(run("simulate " + kSimArgs + " --out " + b.string()).exit_code == 0);
    CHECK(slurp(a) == slurp(b));
}

TEST_CASE("estimate --method all prints one row per method") {
    const auto iq = temp_dir() / "est.iq";
    REQUIRE(run("simulate " + kSimArgs + " --out " + iq.string()).exit_code == 0);
    const auto r = run("estimate --input " + iq.string() + " --method all");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("pp") != std::string::npos);
    CHECK(r.output.find("fft") != std::string::npos);
    CHECK(r.output.find("rft") != std::string::npos);
}

TEST_CASE("estimate pp on a near-tone file recovers the truth") {
    // on-grid truth: 7.8125 m/s = 156.25 Hz = bin 10 of a 64-pulse record
    const auto iq = temp_dir() / "tone.iq";
    REQUIRE(run("simulate --velocity 7.8125 --width 0.0025 --snr 60 --pulses 64 --seed 5 "
                "--wavelength 0.1 --prt 1e-3 --out " +
                iq.string())
                .exit_code == 0);
    const auto r = run("estimate --input " + iq.string() + " --method pp --json");
    CHECK(r.exit_code == 0);
    const auto pos = r.output.find("\"velocity_mps\":");
    REQUIRE(pos != std::string::npos);
    const double v = std::stod(r.output.substr(pos + 15));
    CHECK(std::abs(v - 7.8125) < 0.001 * 25.0);  // 0.1% of Nyquist
}

TEST_CASE("estimate --method rft --spectrum writes a q-indexed file") {
    const auto iq = temp_dir() / "spec.iq";
    const auto spec = temp_dir() / "spec.csv";
    REQUIRE(run("simulate " + kSimArgs + " --out " + iq.string()).exit_code == 0);
    const auto r = run("estimate --input " + iq.string() + " --method rft --spectrum " +
                       spec.string());
    CHECK(r.exit_code == 0);
    const auto text = slurp(spec);
    CHECK(text.find("# kind = rft_order") != std::string::npos);
    CHECK(text.find("frequency_hz,density") != std::string::npos);
}

TEST_CASE("estimate --spectrum with --method all is a usage error") {
    const auto iq = temp_dir() / "usage.iq";
    REQUIRE(run("simulate " + kSimArgs + " --out " + iq.string()).exit_code == 0);
    const auto r = run("estimate --input " + iq.string() + " --method all --spectrum " +
                       (temp_dir() / "x.csv").string());
    CHECK(r.exit_code == 1);
}

TEST_CASE("estimate reports data errors with exit code 2") {
    const auto bad = temp_dir() / "empty.iq";
    std::ofstream(bad) << "# wavelength_m = 0.1\n# prt_s = 1e-3\n0,1,0\n";  // one record
    const auto r = run("estimate --input " + bad.string() + " --method pp");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("line") != std::string::npos);
}

TEST_CASE("estimate honors the filter flag") {
    const auto iq = temp_dir() / "filt.iq";
    REQUIRE(run("simulate " + kSimArgs + " --out " + iq.string()).exit_code == 0);
    const std::string filt = std::string(RADMOM_DATA_DIR) + "/clutter_default.filt";
    const auto r = run("estimate --input " + iq.string() + " --method pp --filter " + filt);
    CHECK(r.exit_code == 0);
}

TEST_CASE("bench emits one row per method with positive timings") {
    const auto r = run("bench " + kSimArgs + " --trials 5 --json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"trials\": 5") != std::string::npos);
    CHECK(r.output.find("\"method\": \"pp\"") != std::string::npos);
    CHECK(r.output.find("\"method\": \"fft\"") != std::string::npos);
    CHECK(r.output.find("\"method\": \"rft\"") != std::string::npos);
    CHECK(r.output.find("\"elapsed_ms\": -") == std::string::npos);
    CHECK(r.output.find("\"elapsed_ms\": 0.0,") == std::string::npos);
}

TEST_CASE("bench with a single method gives a single row") {
    const auto r = run("bench " + kSimArgs + " --trials 3 --method pp");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("pp") != std::string::npos);
    CHECK(r.output.find("fft") == std::string::npos);
}

TEST_CASE("moments CSV lands on disk when --out is given") {
    const auto iq = temp_dir() / "csv.iq";
    const auto csv = temp_dir() / "moments.csv";
    REQUIRE(run("simulate " + kSimArgs + " --out " + iq.string()).exit_code == 0);
    const auto r = run("estimate --input " + iq.string() + " --method all --out " +
                       csv.string());
    CHECK(r.exit_code == 0);
    const auto text = slurp(csv);
    CHECK(text.find("method,power,velocity_mps,width_mps,elapsed_ms") == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 4);  // header + 3 rows
}
