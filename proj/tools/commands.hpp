#ifndef LOWTEMP_TOOLS_COMMANDS_HPP
#define LOWTEMP_TOOLS_COMMANDS_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "report.hpp"

namespace lowtemp::cli
{

inline constexpr const char *kDefaultBFileUrl = "https://oeis.org/A002890/b002890.txt";

enum class BFileSource { local, remote };

struct RunConfig {
    std::string command;
    std::size_t n_max = 20;
    std::size_t n_min = 8;
    std::string x = "9/25";
    double tol = 1e-8;
    OutputFormat format = OutputFormat::plain;
    std::optional<std::string> output_path;

    // finite: evaluate g(N, V) at this volume as well
    std::optional<std::string> volume;

    // distribution
    bool asymptotic = false;
    std::optional<double> amplitude;
    bool include_ground = true;

    // oeis-check
    BFileSource bfile_source = BFileSource::local;
    std::string bfile_path;
    std::string bfile_url = kDefaultBFileUrl;
    std::size_t terms = 0;

    // selftest
    std::vector<std::string> skip;
    std::optional<std::string> inject_a8;
};

// Fetches a URL, returning the body or nothing on any failure.
using Fetcher = std::function<std::optional<std::string>(const std::string &url)>;

// HTTPS fetch via cpp-httplib.
std::optional<std::string> http_fetch(const std::string &url);

// Rejects invalid flag combinations before any computation.
void validate(const RunConfig &cfg);

// Runs one command. The table goes to cfg.output_path (atomically) or to out;
// diagnostics go to err. Returns the process exit status.
int run_command(const RunConfig &cfg, std::ostream &out, std::ostream &err, const Fetcher &fetch = http_fetch);

Table cmd_coeffs(const RunConfig &cfg);
Table cmd_dos(const RunConfig &cfg);
Table cmd_finite(const RunConfig &cfg);
Table cmd_distribution(const RunConfig &cfg);
Table cmd_fit(const RunConfig &cfg);

struct OeisReport {
    Table table;
    bool passed = false;
    std::vector<std::string> messages;
};
OeisReport cmd_oeis_check(const RunConfig &cfg, const Fetcher &fetch);

struct SelftestReport {
    Table table;
    bool passed = false;
};
SelftestReport cmd_selftest(const RunConfig &cfg);

} // namespace lowtemp::cli

#endif
