// Command-line front end: single-curve reports, lambda sweeps, and basis /
// matrix dumps, in text, CSV, or JSON.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "gfc/closedform.hpp"
#include "gfc/report.hpp"

namespace {

using namespace gfc;

std::uint32_t default_workers() {
    if (const char* env = std::getenv("GFC_WORKERS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<std::uint32_t>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return std::min(hw, 8u);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) fail(errc::io_error, "cannot open '" + path + "' for writing");
    out << content;
}

struct CommonOptions {
    std::string field;
    std::uint32_t k = 0, n = 0;
    std::vector<std::string> lambdas;
    std::string format = "text";
    std::string out;
    std::string config_path;
    std::uint32_t workers = 0;
    bool divisors = false, characters = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--field", opts.field, "field description p^m[:modulus-coeffs]");
    cmd->add_option("--k", opts.k, "covering order k >= 2");
    cmd->add_option("--n", opts.n, "number of branch points minus one, n >= 2");
    cmd->add_option("--lambda", opts.lambdas,
                    "lambda values; element strings, ';' joins tuple entries")
        ->take_all();
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out, "output path (default stdout)");
    cmd->add_option("--config", opts.config_path, "key=value file mirroring these flags");
}

std::string trimmed(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// fill options from the config file; explicit command-line flags win
void merge_config(CLI::App* cmd, CommonOptions& o) {
    if (o.config_path.empty()) return;
    std::ifstream in(o.config_path);
    if (!in) fail(errc::io_error, "cannot read config '" + o.config_path + "'");
    std::string line;
    while (std::getline(in, line)) {
        line = trimmed(line);
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            fail(errc::parse_error, "config line without '=': " + line);
        std::string key = trimmed(line.substr(0, eq));
        std::string value = trimmed(line.substr(eq + 1));
        try {
            if (key == "field") {
                if (!cmd->count("--field")) o.field = value;
            } else if (key == "k") {
                if (!cmd->count("--k")) o.k = std::stoul(value);
            } else if (key == "n") {
                if (!cmd->count("--n")) o.n = std::stoul(value);
            } else if (key == "lambda") {
                if (!cmd->count("--lambda")) o.lambdas.push_back(value);
            } else if (key == "format") {
                if (!cmd->count("--format")) o.format = value;
            } else if (key == "out") {
                if (!cmd->count("--out")) o.out = value;
            } else if (key == "workers") {
                o.workers = std::stoul(value);
            } else if (key == "divisors") {
                o.divisors = (value == "true" || value == "1");
            } else if (key == "characters") {
                o.characters = (value == "true" || value == "1");
            } else {
                fail(errc::parse_error, "unknown config key '" + key + "'");
            }
        } catch (const std::invalid_argument&) {
            fail(errc::parse_error, "bad config value for '" + key + "'");
        }
    }
    if (o.format != "json" && o.format != "csv" && o.format != "text")
        fail(errc::parse_error, "unknown format '" + o.format + "'");
}

void require_curve_options(const CommonOptions& o) {
    if (o.field.empty()) fail(errc::parse_error, "--field is required");
    if (o.k < 2) fail(errc::parse_error, "--k is required and must be >= 2");
    if (o.n < 2) fail(errc::parse_error, "--n is required and must be >= 2");
}

JobSpec job_for_report(const CommonOptions& opts) {
    JobSpec job;
    job.field_text = opts.field;
    job.k = opts.k;
    job.n = opts.n;
    for (const auto& occurrence : opts.lambdas)
        for (auto& piece : split(occurrence, ';')) job.lambda_texts.push_back(piece);
    job.format = opts.format;
    job.out_path = opts.out;
    return job;
}

int run_report(const CommonOptions& opts) {
    JobSpec job = job_for_report(opts);
    Curve curve = curve_from_job(job);
    CurveReport report = build_report(curve);
    write_output(job.out_path, render_report(report, job.format));
    if (!report.oracles_ok()) {
        std::cerr << "oracle mismatch for " << report.curve_text << "\n";
        return 2;
    }
    return 0;
}

int run_sweep_cmd(const CommonOptions& opts) {
    JobSpec job;
    job.field_text = opts.field;
    job.k = opts.k;
    job.n = opts.n;
    job.format = opts.format;
    job.out_path = opts.out;
    job.workers = opts.workers ? opts.workers : default_workers();
    job.sweep_all = opts.lambdas.size() == 1 && opts.lambdas[0] == "all";
    if (!job.sweep_all)
        for (const auto& occurrence : opts.lambdas)
            job.sweep_tuples.push_back(split(occurrence, ';'));

    Field field = parse_field(job.field_text);
    auto tuples = sweep_tuples_for(job, field);
    if (tuples.empty())
        std::cerr << "warning: no valid lambda tuples over " << field_to_string(field) << "\n";

    // resume: skip keys already present in the output file
    std::set<std::string> done;
    bool fresh = true;
    if (!job.out_path.empty() && std::filesystem::exists(job.out_path)) {
        std::ifstream in(job.out_path);
        std::stringstream buf;
        buf << in.rdbuf();
        std::string existing = buf.str();
        if (!existing.empty()) {
            done = sweep_keys_in_file(existing, job.format);
            fresh = false;
        }
    }

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!job.out_path.empty()) {
        file.open(job.out_path, std::ios::app);
        if (!file) fail(errc::io_error, "cannot open '" + job.out_path + "' for writing");
        out = &file;
    }
    if (fresh) *out << sweep_header(job.format);

    run_sweep(field, job.k, job.n, tuples, done, job.workers, [&](const SweepRow& row) {
        *out << sweep_row_line(row, job.format) << std::flush;
    });
    return 0;
}

int run_basis_cmd(const CommonOptions& opts) {
    const bool divisors = opts.divisors;
    const bool characters = opts.characters;
    JobSpec job = job_for_report(opts);
    Curve curve = curve_from_job(job);
    auto basis = enumerate_basis(curve);

    auto divisor_text = [&](const BasisIndex& idx) {
        std::string s;
        for (auto c : theta_divisor(idx, curve)) s += (s.empty() ? "" : ",") + std::to_string(c);
        return s;
    };
    auto character_text = [&](const BasisIndex& idx) {
        std::string s;
        for (auto e : theta_character(idx, curve))
            s += (s.empty() ? "" : ",") + std::to_string(e);
        return s;
    };

    std::ostringstream body;
    if (opts.format == "json") {
        nlohmann::ordered_json j;
        j["curve"] = curve_to_string(curve);
        j["genus"] = curve->genus;
        auto arr = nlohmann::ordered_json::array();
        for (const auto& idx : basis) {
            nlohmann::ordered_json e;
            e["index"] = idx.to_string();
            if (divisors) e["divisor"] = divisor_text(idx);
            if (characters) e["character"] = character_text(idx);
            arr.push_back(e);
        }
        j["basis"] = arr;
        body << j.dump(2) << "\n";
    } else if (opts.format == "csv") {
        body << "index" << (divisors ? ",divisor" : "") << (characters ? ",character" : "")
             << "\n";
        for (const auto& idx : basis) {
            body << "\"" << idx.to_string() << "\"";
            if (divisors) body << ",\"" << divisor_text(idx) << "\"";
            if (characters) body << ",\"" << character_text(idx) << "\"";
            body << "\n";
        }
    } else {
        body << "# curve " << curve_to_string(curve) << "\n";
        for (const auto& idx : basis) {
            body << idx.to_string();
            if (divisors) body << "  divisor " << divisor_text(idx);
            if (characters) body << "  character " << character_text(idx);
            body << "\n";
        }
    }
    write_output(opts.out, body.str());
    return 0;
}

int run_matrix_cmd(const CommonOptions& opts) {
    JobSpec job = job_for_report(opts);
    Curve curve = curve_from_job(job);
    CartierMatrix cm = cartier_matrix(curve);
    const std::size_t g = cm.basis.size();

    std::ostringstream body;
    if (opts.format == "json") {
        nlohmann::ordered_json j;
        j["curve"] = curve_to_string(curve);
        auto names = nlohmann::ordered_json::array();
        for (const auto& idx : cm.basis) names.push_back(idx.to_string());
        j["basis"] = names;
        auto entries = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j2 = 0; j2 < g; ++j2)
                entries.push_back(cm.entries.at(i, j2).to_string());
        j["entries"] = entries;
        body << j.dump(2) << "\n";
    } else if (opts.format == "csv") {
        body << "# curve " << curve_to_string(curve) << "\n# basis";
        for (const auto& idx : cm.basis) body << " " << idx.to_string();
        body << "\n";
        for (std::size_t i = 0; i < g; ++i) {
            for (std::size_t j = 0; j < g; ++j)
                body << (j ? "," : "") << "\"" << cm.entries.at(i, j).to_string() << "\"";
            body << "\n";
        }
    } else {
        body << "# curve " << curve_to_string(curve) << "\n# basis";
        for (const auto& idx : cm.basis) body << " " << idx.to_string();
        body << "\n";
        for (std::size_t i = 0; i < g; ++i) {
            for (std::size_t j = 0; j < g; ++j) body << (j ? " " : "") << cm.entries.at(i, j).to_string();
            body << "\n";
        }
    }
    write_output(opts.out, body.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants of generalized Fermat curves over finite fields"};
    app.require_subcommand(1);

    CommonOptions report_opts, sweep_opts, basis_opts, matrix_opts;

    auto* report_cmd = app.add_subcommand("report", "full invariant report for one curve");
    add_common(report_cmd, report_opts);

    auto* sweep_cmd = app.add_subcommand("sweep", "a-number/p-rank table over lambda tuples");
    add_common(sweep_cmd, sweep_opts);
    sweep_cmd->add_option("--workers", sweep_opts.workers,
                          "worker pool size (default: env GFC_WORKERS or hardware)");

    auto* basis_cmd = app.add_subcommand("basis", "standard basis of holomorphic forms");
    add_common(basis_cmd, basis_opts);
    basis_cmd->add_flag("--divisors", basis_opts.divisors, "include divisor coefficients");
    basis_cmd->add_flag("--characters", basis_opts.characters, "include character vectors");

    auto* matrix_cmd = app.add_subcommand("matrix", "Cartier matrix in the standard basis");
    add_common(matrix_cmd, matrix_opts);

    CLI11_PARSE(app, argc, argv);

    try {
        CLI::App* cmd = nullptr;
        CommonOptions* opts = nullptr;
        if (report_cmd->parsed()) cmd = report_cmd, opts = &report_opts;
        if (sweep_cmd->parsed()) cmd = sweep_cmd, opts = &sweep_opts;
        if (basis_cmd->parsed()) cmd = basis_cmd, opts = &basis_opts;
        if (matrix_cmd->parsed()) cmd = matrix_cmd, opts = &matrix_opts;
        merge_config(cmd, *opts);
        require_curve_options(*opts);

        if (report_cmd->parsed()) return run_report(report_opts);
        if (sweep_cmd->parsed()) return run_sweep_cmd(sweep_opts);
        if (basis_cmd->parsed()) return run_basis_cmd(basis_opts);
        if (matrix_cmd->parsed()) return run_matrix_cmd(matrix_opts);
    } catch (const gfc::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
