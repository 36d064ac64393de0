#include "windguide/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <locale>

#include "CLI11.hpp"
#include "windguide/config.hpp"
#include "windguide/error.hpp"
#include "windguide/output.hpp"
#include "windguide/scenario.hpp"

namespace windguide {

namespace {

namespace fs = std::filesystem;

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;

fs::path resolve_output_dir(const RunManifest& m) {
    if (!m.output_dir.empty()) return m.output_dir;
    if (const char* env = std::getenv("WINDGUIDE_OUT"); env && *env) return env;
    return ".";
}

std::ofstream open_artifact(const fs::path& path) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    require(static_cast<bool>(f), ErrorClass::io, "cannot write '" + path.string() + "'");
    f.imbue(std::locale::classic());
    return f;
}

void finish(std::ofstream& f, const fs::path& path) {
    f.flush();
    require(static_cast<bool>(f), ErrorClass::io, "failed writing '" + path.string() + "'");
}

RunConfig load(const RunManifest& m) {
    ConfigMap map;
    if (!m.config_path.empty()) map = load_config_file(m.config_path);
    for (const auto& o : m.overrides) apply_override(map, o);
    if (m.seed) apply_override(map, "wind.seed=" + std::to_string(*m.seed));
    return build_run_config(map);
}

void run_command(const RunConfig& cfg, const fs::path& dir, std::ostream& out) {
    ScenarioSpec reference = cfg.spec;
    reference.kind = ScenarioKind::reference;
    RunResult ref = run(reference, cfg.spec.kind == ScenarioKind::reference);
    std::vector<MetricsRow> rows{{"reference", ScenarioKind::reference, ref.metrics}};
    rows.front().metrics.benefit = 0.0;

    RunResult result = std::move(ref);
    if (cfg.spec.kind != ScenarioKind::reference) {
        result = run(cfg.spec, true);
        result.metrics.benefit = benefit(rows.front().metrics, result.metrics);
        rows.push_back({"candidate", cfg.spec.kind, result.metrics});
    }

    const fs::path traj = dir / "trajectory.csv";
    auto f = open_artifact(traj);
    write_trajectory_csv(f, result.trajectory);
    finish(f, traj);

    const fs::path met = dir / "metrics.csv";
    auto g = open_artifact(met);
    write_metrics_csv(g, rows);
    finish(g, met);
    out << "p_bar_avg reference=" << format_number(rows.front().metrics.p_bar_avg);
    if (rows.size() > 1) {
        out << " " << to_string(cfg.spec.kind) << "=" << format_number(rows.back().metrics.p_bar_avg)
            << " benefit=" << format_number(*rows.back().metrics.benefit);
    }
    out << '\n';
}

void heading_sweep_command(const RunConfig& cfg, const fs::path& dir, std::ostream& out) {
    ScenarioSpec reference = cfg.spec;
    reference.kind = ScenarioKind::reference;
    HeadingSweepResult ref = heading_sweep(reference, cfg.heading_step);
    ScenarioSpec cand_spec = cfg.spec;
    if (cand_spec.kind == ScenarioKind::reference) cand_spec.kind = ScenarioKind::adjusted;
    HeadingSweepResult cand = heading_sweep(cand_spec, cfg.heading_step);

    ref.metrics.benefit = 0.0;
    cand.metrics.benefit = benefit(ref.metrics, cand.metrics);

    const fs::path sweep = dir / "sweep.csv";
    auto f = open_artifact(sweep);
    write_heading_sweep_csv(f, ref, cand);
    finish(f, sweep);

    const fs::path met = dir / "metrics.csv";
    auto g = open_artifact(met);
    write_metrics_csv(g, {{"reference", ScenarioKind::reference, ref.metrics},
                          {"candidate", cand_spec.kind, cand.metrics}});
    finish(g, met);
    out << "heading-averaged p_bar reference=" << format_number(ref.metrics.p_bar_heading_avg) << " "
        << to_string(cand_spec.kind) << "=" << format_number(cand.metrics.p_bar_heading_avg)
        << " benefit=" << format_number(*cand.metrics.benefit) << '\n';
}

void frequency_sweep_command(const RunConfig& cfg, const fs::path& dir, std::ostream& out) {
    const auto rows = frequency_sweep(
        cfg.spec, cfg.frequencies,
        FrequencySweepOptions{.d_psi0 = cfg.heading_step, .airspeed_only = cfg.airspeed_only});

    const fs::path sweep = dir / "sweep.csv";
    auto f = open_artifact(sweep);
    write_frequency_sweep_csv(f, rows);
    finish(f, sweep);

    const fs::path plot = dir / "benefit_vs_frequency.svg";
    auto g = open_artifact(plot);
    write_benefit_plot_svg(g, rows);
    finish(g, plot);

    for (const auto& r : rows) {
        out << "omega_w=" << format_number(r.omega_w) << " benefit="
            << (r.benefit ? format_number(*r.benefit) : std::string("n/a"));
        if (!r.error.empty()) out << " error=" << r.error;
        out << '\n';
    }
}

}  // namespace

int execute(const RunManifest& m, std::ostream& out, std::ostream& err) {
    try {
        const RunConfig cfg = load(m);
        if (m.command == Command::validate_config) {
            out << "configuration ok\n";
            return 0;
        }
        set_sweep_threads(cfg.threads);

        const fs::path dir = resolve_output_dir(m);
        std::error_code ec;
        fs::create_directories(dir, ec);
        require(!ec && fs::is_directory(dir), ErrorClass::io,
                "output directory '" + dir.string() + "' is not writable");

        switch (m.command) {
            case Command::run: run_command(cfg, dir, out); break;
            case Command::heading_sweep: heading_sweep_command(cfg, dir, out); break;
            case Command::frequency_sweep: frequency_sweep_command(cfg, dir, out); break;
            case Command::validate_config: break;
        }
        return 0;
    } catch (const Error& e) {
        err << "error[" << to_string(e.error_class()) << "]: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error[internal]: " << e.what() << '\n';
    }
    return kExitError;
}

int cli_main(int argc, char** argv) {
    CLI::App app{"In-situ wind-energy harvesting guidance simulator"};
    app.require_subcommand(1);

    RunManifest m;
    std::uint64_t seed = 0;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", m.config_path, "Key-value configuration file")
            ->check(CLI::ExistingFile);
        sub->add_option("--out", m.output_dir, "Output directory (default: $WINDGUIDE_OUT or .)");
        sub->add_option("--set", m.overrides, "Override a config key, section.key=value")
            ->take_all()
            ->allow_extra_args(false);
        sub->add_option("--seed", seed, "Seed for the stochastic wind layer");
    };

    auto* run_cmd = app.add_subcommand("run", "Fly the configured scenario and the reference");
    auto* heading_cmd = app.add_subcommand("heading-sweep", "Average over initial headings");
    auto* freq_cmd = app.add_subcommand("frequency-sweep", "Benefit versus wind frequency");
    auto* validate_cmd = app.add_subcommand("validate-config", "Check a configuration and exit");
    for (auto* sub : {run_cmd, heading_cmd, freq_cmd, validate_cmd}) add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    if (run_cmd->parsed()) m.command = Command::run;
    if (heading_cmd->parsed()) m.command = Command::heading_sweep;
    if (freq_cmd->parsed()) m.command = Command::frequency_sweep;
    if (validate_cmd->parsed()) m.command = Command::validate_config;
    for (auto* sub : {run_cmd, heading_cmd, freq_cmd, validate_cmd}) {
        if (sub->parsed() && sub->count("--seed") > 0) m.seed = seed;
    }
    return execute(m, std::cout, std::cerr);
}

}  // namespace windguide
