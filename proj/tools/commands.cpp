#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <stdexcept>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"

#include <lowtemp/lowtemp.hpp>

#ifndef LOWTEMP_DATA_DIR
#define LOWTEMP_DATA_DIR "data"
#endif

namespace lowtemp::cli
{

namespace
{

std::string bfile_path_or_default(const RunConfig &cfg)
{
    return cfg.bfile_path.empty() ? std::string(LOWTEMP_DATA_DIR) + "/b002890.txt" : cfg.bfile_path;
}

std::string read_text_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string as_rational_text(const Rational &q) { return q.to_string(); }

} // namespace

std::optional<std::string> http_fetch(const std::string &url)
{
    try {
        const auto scheme_end = url.find("://");
        if (scheme_end == std::string::npos) {
            return std::nullopt;
        }
        const auto path_start = url.find('/', scheme_end + 3);
        const std::string origin = url.substr(0, path_start);
        const std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);
        httplib::Client client(origin);
        client.set_connection_timeout(5);
        client.set_read_timeout(10);
        client.set_follow_location(true);
        auto res = client.Get(path);
        if (!res || res->status != 200) {
            return std::nullopt;
        }
        return res->body;
    } catch (const std::exception &) {
        return std::nullopt;
    }
}

void validate(const RunConfig &cfg)
{
    static const std::vector<std::string> known{"coeffs", "dos",       "finite",  "distribution",
                                                "fit",    "oeis-check", "selftest"};
    if (std::find(known.begin(), known.end(), cfg.command) == known.end()) {
        throw std::invalid_argument("unknown command '" + cfg.command + "'");
    }
    if ((cfg.command == "coeffs" || cfg.command == "dos" || cfg.command == "finite") && cfg.n_max < 1) {
        throw std::invalid_argument("--n-max must be >= 1");
    }
    if (cfg.command == "fit" &&
        (cfg.n_min < 4 || cfg.n_min >= cfg.n_max || cfg.n_min % 2 != 0 || cfg.n_max % 2 != 0)) {
        throw std::invalid_argument("fit needs even --n-min >= 4 and even --n-max > --n-min");
    }
    if (cfg.command == "distribution") {
        if (!(cfg.tol > 0.0)) {
            throw std::invalid_argument("--tol must be positive");
        }
        if (cfg.amplitude && !cfg.asymptotic) {
            throw std::invalid_argument("--amplitude only applies with --asymptotic");
        }
        if (!cfg.include_ground && !cfg.asymptotic) {
            throw std::invalid_argument("--exclude-ground only applies with --asymptotic");
        }
        if (cfg.amplitude && !(*cfg.amplitude > 0.0)) {
            throw std::invalid_argument("--amplitude must be positive");
        }
        Rational::parse(cfg.x);
    }
    if (cfg.command == "finite" && cfg.volume) {
        Rational::parse(*cfg.volume);
    }
    if (cfg.command == "oeis-check" && cfg.bfile_source == BFileSource::remote && cfg.bfile_url.empty()) {
        throw std::invalid_argument("--url must not be empty");
    }
    if (cfg.command == "selftest") {
        for (const auto &s : cfg.skip) {
            const auto &names = selftest_suite_names();
            if (std::find(names.begin(), names.end(), s) == names.end()) {
                throw std::invalid_argument("unknown suite '" + s + "' in --skip");
            }
        }
        if (cfg.inject_a8) {
            Rational::parse(*cfg.inject_a8);
        }
    }
}

Table cmd_coeffs(const RunConfig &cfg)
{
    shared_coeffs().ensure(cfg.n_max);
    Table t;
    t.command = "coeffs";
    t.params["n_max"] = cfg.n_max;
    t.columns = {{"n", CellKind::integer}, {"a_n/n!", CellKind::rational}, {"decimal", CellKind::real}};
    for (std::size_t n = 1; n <= cfg.n_max; ++n) {
        const Rational a = shared_coeffs().scaled(n);
        t.rows.push_back({std::to_string(n), as_rational_text(a), format_real(a.to_double())});
    }
    return t;
}

Table cmd_dos(const RunConfig &cfg)
{
    const DensityOfStates dos = dos_infinite(cfg.n_max);
    Table t;
    t.command = "dos";
    t.params["n_max"] = cfg.n_max;
    t.columns = {{"N", CellKind::integer}, {"g", CellKind::rational}};
    for (std::size_t N = 0; N <= cfg.n_max; ++N) {
        t.rows.push_back({std::to_string(N), as_rational_text(dos[N])});
    }
    return t;
}

Table cmd_finite(const RunConfig &cfg)
{
    Table t;
    t.command = "finite";
    t.params["n_max"] = cfg.n_max;
    t.columns = {{"N", CellKind::integer}, {"g(N,V)", CellKind::text}};
    std::optional<Rational> V;
    if (cfg.volume) {
        V = Rational::parse(*cfg.volume);
        t.params["V"] = V->to_string();
        t.columns.push_back({"value", CellKind::rational});
        // Exact on an M x M torus only for N < M.
        t.columns.push_back({"exact_on_torus", CellKind::text});
    }
    for (std::size_t N = 0; N <= cfg.n_max; ++N) {
        const VPolynomial p = dos_finite_poly(N);
        std::vector<std::string> row{std::to_string(N), p.to_string()};
        if (V) {
            row.push_back(as_rational_text(p(*V)));
            const double M = std::sqrt(V->to_double());
            row.push_back(static_cast<double>(N) < M ? "yes" : "no");
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table cmd_distribution(const RunConfig &cfg)
{
    const Rational x = Rational::parse(cfg.x);
    const DistributionTable exact = energy_distribution_exact(x, cfg.tol);
    Table t;
    t.command = "distribution";
    t.params["x"] = x.to_string();
    t.params["tol"] = cfg.tol;
    t.columns = {{"N", CellKind::integer}, {"P", CellKind::real}};
    if (!cfg.asymptotic) {
        t.params["method"] = "exact";
        t.params["truncation_N"] = exact.truncation_N;
        t.params["tail_bound"] = exact.tail_bound;
        for (const auto &row : exact.rows) {
            t.rows.push_back({std::to_string(row.N), format_real(row.P)});
        }
        return t;
    }
    // P(0) = 1 / sum g(N) x^N.
    const double exact_sum = 1.0 / exact.rows.front().P;
    const AsymptoticFit fit = fit_asymptotic_growth(8, 40);
    const double C = cfg.amplitude ? *cfg.amplitude : refine_amplitude(x.to_double(), exact_sum);
    const DistributionTable approx =
        energy_distribution_asymptotic(x.to_double(), C, cfg.n_max, cfg.include_ground);
    t.params["method"] = "asymptotic";
    t.params["C_fit"] = fit.C_estimate;
    t.params["C"] = C;
    t.params["include_ground"] = cfg.include_ground;
    for (const auto &row : approx.rows) {
        t.rows.push_back({std::to_string(row.N), format_real(row.P)});
    }
    return t;
}

Table cmd_fit(const RunConfig &cfg)
{
    const AsymptoticFit fit = fit_asymptotic_growth(cfg.n_min, cfg.n_max);
    Table t;
    t.command = "fit";
    t.params["n_min"] = cfg.n_min;
    t.params["n_max"] = cfg.n_max;
    t.params["slope_log10"] = fit.slope_log10;
    t.params["intercept_log10"] = fit.intercept_log10;
    t.params["alpha_estimate"] = fit.alpha_estimate;
    t.params["C_estimate"] = fit.C_estimate;
    t.params["limit_slope_log10"] = std::log10(1.0 + std::numbers::sqrt2);
    t.columns = {{"2n", CellKind::integer}, {"log10(a_2n/(2n)!)", CellKind::real}};
    for (const auto &[n, y] : fit.samples) {
        t.rows.push_back({std::to_string(n), format_real(y)});
    }
    return t;
}

OeisReport cmd_oeis_check(const RunConfig &cfg, const Fetcher &fetch)
{
    OeisReport report;
    const std::string local_path = bfile_path_or_default(cfg);
    std::string text;
    std::string source = local_path;
    bool have = false;
    if (cfg.bfile_source == BFileSource::remote) {
        if (auto body = fetch(cfg.bfile_url)) {
            text = std::move(*body);
            source = cfg.bfile_url;
            have = true;
            try {
                parse_bfile(text);
                write_file_atomically(local_path, text);
                report.messages.push_back("cached " + cfg.bfile_url + " to " + local_path);
            } catch (const std::exception &e) {
                report.messages.push_back(std::string("warning: not caching remote b-file: ") + e.what());
            }
        } else {
            report.messages.push_back("warning: could not fetch " + cfg.bfile_url +
                                      "; falling back to local snapshot " + local_path);
        }
    }
    if (!have) {
        text = read_text_file(local_path);
    }
    const std::vector<BFileRecord> records = parse_bfile(text);
    if (records.empty()) {
        throw std::runtime_error("b-file " + source + " contains no terms");
    }
    const BFileComparison cmp = compare_with_bfile(records, cfg.terms);
    const std::size_t shown = cmp.compared;
    report.table.command = "oeis-check";
    report.table.params["source"] = source;
    report.table.params["compared"] = cmp.compared;
    report.table.columns = {{"index", CellKind::integer},
                            {"N", CellKind::integer},
                            {"b-file", CellKind::rational},
                            {"computed", CellKind::rational},
                            {"match", CellKind::text}};
    const DensityOfStates dos = dos_infinite(a002890_energy_offset(records[shown - 1].index), false);
    for (std::size_t i = 0; i < shown; ++i) {
        const auto &rec = records[i];
        const std::size_t N = a002890_energy_offset(rec.index);
        const bool match = dos[N] == Rational(rec.value);
        report.table.rows.push_back(
            {std::to_string(rec.index), std::to_string(N), rec.value.get_str(), dos[N].to_string(), match ? "yes" : "NO"});
    }
    report.passed = cmp.ok();
    if (cmp.first_mismatch_index) {
        report.messages.push_back("mismatch at b-file index " + std::to_string(*cmp.first_mismatch_index) +
                                  " (N = " + std::to_string(a002890_energy_offset(*cmp.first_mismatch_index)) +
                                  "): b-file " + cmp.expected.get_str() + ", computed " + cmp.computed.to_string());
    }
    return report;
}

SelftestReport cmd_selftest(const RunConfig &cfg)
{
    SelftestOptions opt;
    opt.skip.insert(cfg.skip.begin(), cfg.skip.end());
    if (cfg.inject_a8) {
        opt.inject_a8 = Rational::parse(*cfg.inject_a8);
    }
    SelftestReport report;
    report.table.command = "selftest";
    report.table.columns = {{"suite", CellKind::text},
                            {"result", CellKind::text},
                            {"seconds", CellKind::real},
                            {"detail", CellKind::text}};
    report.passed = true;
    for (const auto &r : run_selftest(opt)) {
        report.passed = report.passed && r.passed;
        std::ostringstream secs;
        secs << std::fixed << std::setprecision(3) << r.seconds;
        report.table.rows.push_back({r.name, r.passed ? "pass" : "FAIL", secs.str(), r.detail});
    }
    return report;
}

int run_command(const RunConfig &cfg, std::ostream &out, std::ostream &err, const Fetcher &fetch)
{
    try {
        validate(cfg);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    try {
        Table table;
        int status = 0;
        if (cfg.command == "coeffs") {
            table = cmd_coeffs(cfg);
        } else if (cfg.command == "dos") {
            table = cmd_dos(cfg);
        } else if (cfg.command == "finite") {
            table = cmd_finite(cfg);
        } else if (cfg.command == "distribution") {
            table = cmd_distribution(cfg);
        } else if (cfg.command == "fit") {
            table = cmd_fit(cfg);
        } else if (cfg.command == "oeis-check") {
            OeisReport report = cmd_oeis_check(cfg, fetch);
            for (const auto &m : report.messages) {
                err << m << "\n";
            }
            table = std::move(report.table);
            status = report.passed ? 0 : 1;
        } else {
            SelftestReport report = cmd_selftest(cfg);
            table = std::move(report.table);
            status = report.passed ? 0 : 1;
            if (!report.passed) {
                for (const auto &row : table.rows) {
                    if (row[1] != "pass") {
                        err << "suite " << row[0] << " failed: " << row[3] << "\n";
                    }
                }
            }
        }
        const std::string text = render(table, cfg.format);
        if (cfg.output_path) {
            write_file_atomically(*cfg.output_path, text);
        } else {
            out << text;
        }
        return status;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace lowtemp::cli
