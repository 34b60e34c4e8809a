#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "commands.hpp"

int main(int argc, char **argv)
{
    using namespace lowtemp::cli;

    CLI::App app{"Exact low-temperature series for the 2D square-lattice Ising model"};
    app.require_subcommand(1);

    RunConfig cfg;
    const std::map<std::string, OutputFormat> formats{
        {"csv", OutputFormat::csv}, {"json", OutputFormat::json}, {"plain", OutputFormat::plain}};

    auto add_output = [&](CLI::App *sub) {
        sub->add_option("--format", cfg.format, "Output format: csv, json or plain")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("-o,--output", cfg.output_path, "Write to this file instead of stdout");
    };

    auto *coeffs = app.add_subcommand("coeffs", "Free-energy coefficients a_n/n!");
    coeffs->add_option("--n-max", cfg.n_max, "Largest n")->capture_default_str();
    add_output(coeffs);

    auto *dos = app.add_subcommand("dos", "Density of states g(N) on the infinite lattice");
    dos->add_option("--n-max", cfg.n_max, "Largest N")->capture_default_str();
    add_output(dos);

    auto *finite = app.add_subcommand("finite", "Finite-lattice g(N, V) as polynomials in V");
    finite->add_option("--n-max", cfg.n_max, "Largest N")->capture_default_str();
    finite->add_option("--volume", cfg.volume, "Also evaluate at this V (p/q or decimal)");
    add_output(finite);

    auto *dist = app.add_subcommand("distribution", "Energy distribution P(N, x)");
    dist->add_option("--x", cfg.x, "Temperature variable x = exp(-2J/kT), as p/q or decimal")->capture_default_str();
    dist->add_option("--tol", cfg.tol, "Relative tail tolerance")->capture_default_str();
    dist->add_flag("--asymptotic", cfg.asymptotic, "Use the confluent hypergeometric approximation");
    dist->add_option("--n-max", cfg.n_max, "Largest N for --asymptotic")->capture_default_str();
    dist->add_option("--amplitude", cfg.amplitude, "Amplitude C for --asymptotic (default: normalization-refined)");
    dist->add_flag("!--exclude-ground", cfg.include_ground, "Drop the N = 0 term from the asymptotic normalization");
    add_output(dist);

    auto *fit = app.add_subcommand("fit", "Least-squares growth fit of log10(a_2n/(2n)!)");
    fit->add_option("--n-min", cfg.n_min, "Smallest 2n")->capture_default_str();
    fit->add_option("--n-max", cfg.n_max, "Largest 2n")->capture_default_str();
    add_output(fit);

    auto *oeis = app.add_subcommand("oeis-check", "Compare g(N) with an A002890 b-file");
    oeis->add_option("--bfile", cfg.bfile_path, "Local b-file (default: bundled snapshot)");
    bool fetch = false;
    oeis->add_flag("--fetch", fetch, "Download the b-file first, falling back to the local copy");
    oeis->add_option("--url", cfg.bfile_url, "Remote b-file URL")->capture_default_str();
    oeis->add_option("--terms", cfg.terms, "Compare only the first this-many terms (0 = all)");
    add_output(oeis);

    auto *selftest = app.add_subcommand("selftest", "Run the cross-check suites");
    selftest->add_option("--skip", cfg.skip, "Suite to skip (repeatable)");
    selftest->add_option("--inject-a8", cfg.inject_a8, "Replace a_8/8! on the series path (fault injection)");
    add_output(selftest);

    CLI11_PARSE(app, argc, argv);

    cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.command == "fit" && fit->count("--n-max") == 0) {
        cfg.n_max = 40;
    }
    cfg.bfile_source = fetch ? BFileSource::remote : BFileSource::local;
    return run_command(cfg, std::cout, std::cerr);
}
