// SPDX-License-Identifier: Apache-2.0
//
// radmom: simulate, filter, and estimate Doppler spectral moments of
// weather-radar I/Q series; bench the three estimators.
//
// Exit codes: 0 ok, 1 usage error, 2 data/degenerate-input error.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "radmom/errors.hpp"
#include "radmom/estimate.hpp"
#include "radmom/ingest.hpp"
#include "radmom/preprocess.hpp"
#include "radmom/simulate.hpp"

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct SimFlags {
    double velocity = 0.0;
    double width = 1.0;
    double power = 1.0;
    double snr = 20.0;
    std::size_t pulses = 64;
    std::uint64_t seed = 0;
    double wavelength = 0.1;
    double prt = 1e-3;

    radmom::SimSpec to_spec() const {
        radmom::SimSpec spec;
        spec.power = power;
        spec.mean_velocity_mps = velocity;
        spec.width_mps = width;
        spec.snr_db = snr;
        spec.n_pulses = pulses;
        spec.seed = seed;
        spec.params.wavelength_m = wavelength;
        spec.params.prt_s = prt;
        return spec;
    }
};

void add_sim_flags(CLI::App* cmd, SimFlags& f) {
    cmd->add_option("--velocity", f.velocity, "true mean radial velocity [m/s]");
    cmd->add_option("--width", f.width, "true spectrum width [m/s]");
    cmd->add_option("--power", f.power, "signal power, linear units");
    cmd->add_option("--snr", f.snr, "signal-to-noise ratio [dB]");
    cmd->add_option("--pulses", f.pulses, "number of pulses");
    cmd->add_option("--seed", f.seed, "RNG seed");
    cmd->add_option("--wavelength", f.wavelength, "radar wavelength [m]");
    cmd->add_option("--prt", f.prt, "pulse repetition time [s]");
}

json moments_json(const radmom::MomentsRecord& r) {
    return json{{"method", radmom::method_name(r.moments.method)},
                {"power", r.moments.power},
                {"velocity_mps", r.moments.mean_velocity_mps},
                {"width_mps", r.moments.width_mps},
                {"elapsed_ms", r.elapsed_ms}};
}

void print_moments_table(const std::vector<radmom::MomentsRecord>& rows) {
    std::printf("%-6s %14s %14s %14s %12s\n", "method", "power", "velocity[m/s]",
                "width[m/s]", "time[ms]");
    for (const auto& r : rows)
        std::printf("%-6s %14.6g %14.6g %14.6g %12.4g\n",
                    radmom::method_name(r.moments.method), r.moments.power,
                    r.moments.mean_velocity_mps, r.moments.width_mps, r.elapsed_ms);
}

std::vector<radmom::Method> parse_methods(const std::string& method) {
    if (method == "pp") return {radmom::Method::PulsePair};
    if (method == "fft") return {radmom::Method::Fft};
    if (method == "rft") return {radmom::Method::Rft};
    if (method == "all")
        return {radmom::Method::PulsePair, radmom::Method::Fft, radmom::Method::Rft};
    throw CLI::ValidationError("--method", "must be one of pp|fft|rft|all");
}

int cmd_simulate(const SimFlags& flags, const std::string& out_path, bool json_out) {
    const radmom::SimSpec spec = flags.to_spec();
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "usage: choose |velocity| < wavelength/(4 prt) and "
                     "width < wavelength/(8 prt)\n";
        return 1;
    }
    const radmom::IqSeries series = radmom::generate(spec);
    radmom::write_iq(series, out_path);

    if (json_out) {
        json j{{"out", out_path},
               {"pulses", spec.n_pulses},
               {"seed", spec.seed},
               {"truth",
                {{"power", spec.power},
                 {"velocity_mps", spec.mean_velocity_mps},
                 {"width_mps", spec.width_mps},
                 {"snr_db", spec.snr_db},
                 {"noise_power", spec.noise_power()}}}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("wrote %zu pulses to %s\n", series.samples.size(), out_path.c_str());
        std::printf("truth: power %g, velocity %g m/s, width %g m/s, snr %g dB "
                    "(noise power %g)\n",
                    spec.power, spec.mean_velocity_mps, spec.width_mps, spec.snr_db,
                    spec.noise_power());
    }
    return 0;
}

struct EstimateFlags {
    std::string input;
    std::string method = "all";
    std::string out;
    std::string spectrum;
    std::string filter = "none";
    std::size_t fft_size = 0;
    std::size_t rft_max_q = 0;
    std::string convention = "paper";
    bool json_out = false;
};

radmom::IqSeries load_and_filter(const std::string& input, const std::string& filter) {
    radmom::IqSeries series = radmom::read_iq(input);
    if (filter != "none")
        series = radmom::apply_filter(series, radmom::read_filter_spec(filter));
    return series;
}

int cmd_estimate(const EstimateFlags& f) {
    const auto methods = parse_methods(f.method);
    if (!f.spectrum.empty() && methods.size() != 1)
        throw CLI::ValidationError("--spectrum", "requires --method fft or --method rft");
    if (!f.spectrum.empty() && methods[0] == radmom::Method::PulsePair)
        throw CLI::ValidationError("--spectrum", "pulse-pair produces no spectrum");

    radmom::FftOptions fft_opt;
    fft_opt.fft_size = f.fft_size;
    fft_opt.convention = f.convention == "conventional" ? radmom::MomentConvention::Conventional
                                                        : radmom::MomentConvention::Paper;
    radmom::RftOptions rft_opt;
    rft_opt.max_order_q = f.rft_max_q;

    const radmom::IqSeries series = load_and_filter(f.input, f.filter);

    std::vector<radmom::MomentsRecord> rows;
    for (const auto method : methods) {
        const auto start = Clock::now();
        const radmom::DopplerMoments m = radmom::estimate(series, method, fft_opt, rft_opt);
        rows.push_back({m, ms_since(start)});
    }

    if (!f.spectrum.empty()) {
        const radmom::Spectrum s = methods[0] == radmom::Method::Fft
                                       ? radmom::fft_spectrum(series, fft_opt)
                                       : radmom::rft_spectrum(series, rft_opt);
        radmom::write_spectrum(s, f.spectrum);
    }
    if (!f.out.empty()) radmom::write_moments(rows, f.out);

    if (f.json_out) {
        json j = json::array();
        for (const auto& r : rows) j.push_back(moments_json(r));
        std::cout << j.dump(2) << "\n";
    } else {
        print_moments_table(rows);
    }
    return 0;
}

struct BenchFlags {
    std::string input;
    std::string method = "all";
    std::string filter = "none";
    std::size_t trials = 100;
    std::size_t fft_size = 0;
    std::size_t rft_max_q = 0;
    std::string convention = "paper";
    bool json_out = false;
    SimFlags sim;
    bool simulated = false;
};

int cmd_bench(const BenchFlags& f) {
    if (f.trials < 1) throw CLI::ValidationError("--trials", "must be >= 1");

    radmom::IqSeries series;
    std::string descriptor;
    if (!f.input.empty()) {
        series = load_and_filter(f.input, f.filter);
        descriptor = f.input;
    } else {
        const radmom::SimSpec spec = f.sim.to_spec();
        spec.validate();
        series = radmom::generate(spec);
        if (f.filter != "none")
            series = radmom::apply_filter(series, radmom::read_filter_spec(f.filter));
        descriptor = "simulated(" + std::to_string(spec.n_pulses) +
                     " pulses, seed " + std::to_string(spec.seed) + ")";
    }

    radmom::FftOptions fft_opt;
    fft_opt.fft_size = f.fft_size;
    fft_opt.convention = f.convention == "conventional" ? radmom::MomentConvention::Conventional
                                                        : radmom::MomentConvention::Paper;
    radmom::RftOptions rft_opt;
    rft_opt.max_order_q = f.rft_max_q;

    std::vector<radmom::MomentsRecord> rows;
    for (const auto method : parse_methods(f.method)) {
        radmom::DopplerMoments m{};
        std::vector<double> times;
        times.reserve(f.trials);
        // warm-up pass so plan setup and caches do not land in trial 0
        (void)radmom::estimate(series, method, fft_opt, rft_opt);
        for (std::size_t i = 0; i < f.trials; ++i) {
            const auto start = Clock::now();
            m = radmom::estimate(series, method, fft_opt, rft_opt);
            times.push_back(ms_since(start));
        }
        std::nth_element(times.begin(), times.begin() + times.size() / 2, times.end());
        rows.push_back({m, times[times.size() / 2]});
    }

    if (f.json_out) {
        json j{{"input", descriptor}, {"trials", f.trials}, {"rows", json::array()}};
        for (const auto& r : rows) j["rows"].push_back(moments_json(r));
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("input: %s, trials: %zu (median wall-clock per cell)\n",
                    descriptor.c_str(), f.trials);
        print_moments_table(rows);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Doppler spectral moments of weather-radar I/Q series by "
                 "pulse-pair, DFT periodogram, and Ramanujan-Fourier methods"};
    app.require_subcommand(1);

    // simulate
    auto* sim_cmd = app.add_subcommand("simulate", "generate a synthetic I/Q series");
    SimFlags sim_flags;
    add_sim_flags(sim_cmd, sim_flags);
    std::string sim_out;
    bool sim_json = false;
    sim_cmd->add_option("--out", sim_out, "output I/Q file")->required();
    sim_cmd->add_flag("--json", sim_json, "structured output");

    // estimate
    auto* est_cmd = app.add_subcommand("estimate", "estimate moments from an I/Q file");
    EstimateFlags est;
    est_cmd->add_option("--input", est.input, "input I/Q file")->required();
    est_cmd->add_option("--method", est.method, "pp|fft|rft|all");
    est_cmd->add_option("--out", est.out, "write moments CSV here");
    est_cmd->add_option("--spectrum", est.spectrum, "write the method's spectrum here");
    est_cmd->add_option("--filter", est.filter, "clutter filter spec file, or 'none'");
    est_cmd->add_option("--fft-size", est.fft_size, "transform size (power of two >= pulses)");
    est_cmd->add_option("--rft-max-q", est.rft_max_q, "RFT truncation order");
    est_cmd->add_option("--moment-convention", est.convention, "paper|conventional")
        ->check(CLI::IsMember({"paper", "conventional"}));
    est_cmd->add_flag("--json", est.json_out, "structured output");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "time the estimators on one cell");
    BenchFlags bench;
    bench_cmd->add_option("--input", bench.input, "input I/Q file (else simulation flags)");
    bench_cmd->add_option("--method", bench.method, "pp|fft|rft|all");
    bench_cmd->add_option("--trials", bench.trials, "timing repetitions");
    bench_cmd->add_option("--filter", bench.filter, "clutter filter spec file, or 'none'");
    bench_cmd->add_option("--fft-size", bench.fft_size, "transform size");
    bench_cmd->add_option("--rft-max-q", bench.rft_max_q, "RFT truncation order");
    bench_cmd->add_option("--moment-convention", bench.convention, "paper|conventional")
        ->check(CLI::IsMember({"paper", "conventional"}));
    bench_cmd->add_flag("--json", bench.json_out, "structured output");
    add_sim_flags(bench_cmd, bench.sim);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (sim_cmd->parsed()) return cmd_simulate(sim_flags, sim_out, sim_json);
        if (est_cmd->parsed()) return cmd_estimate(est);
        if (bench_cmd->parsed()) return cmd_bench(bench);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const radmom::DegenerateInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const radmom::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
