#pragma once

// Report and sweep machinery shared by the CLI and the tests: single-curve
// invariant reports with oracle cross-checks, and resumable lambda sweeps
// with deterministic row order.

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gfc/cartier.hpp"

namespace gfc {

struct JobSpec {
    std::string field_text;
    std::uint32_t k = 0;
    std::uint32_t n = 0;
    std::vector<std::string> lambda_texts; // one element string per lambda
    bool sweep_all = false;
    std::vector<std::vector<std::string>> sweep_tuples; // explicit sweep list
    std::string format = "text";                        // json | csv | text
    std::string out_path;                               // empty = stdout
    std::uint32_t workers = 1;
};

Curve curve_from_job(const JobSpec& job);

struct CurveReport {
    std::string curve_text;
    long long genus = 0;
    long long index_count = 0; // |I_{k,n}|, must equal genus
    long long counting_genus = 0;
    std::vector<std::string> basis;
    std::vector<std::string> matrix; // row-major field-element strings
    long long a_number = 0;
    long long p_rank = 0;
    long long semisimple_dim = 0;
    long long nilpotent_dim = 0;
    bool nilpotent_dim_equals_a = false;
    std::vector<std::vector<std::string>> kernel;
    std::optional<bool> oracle_char2;            // p = 2 only
    std::optional<bool> oracle_char3_k2;         // p = 3, k = 2 only
    std::optional<long long> lower_bound;        // p = 2 only
    std::optional<bool> lower_bound_attained;

    bool oracles_ok() const;
};

CurveReport build_report(const Curve& curve);

std::string report_to_json(const CurveReport& r);
std::string report_to_csv(const CurveReport& r);
std::string report_to_text(const CurveReport& r);
std::string render_report(const CurveReport& r, const std::string& format);

/// Parse the emitted JSON back; used by the round-trip checks and the
/// resumable sweep reader.
CurveReport report_from_json(const std::string& text);

// ---- sweeps ----

struct SweepRow {
    std::string lambda_text; // elements joined with ';'
    long long a = -1;
    long long gamma = -1;
    std::optional<long long> bound;
    std::optional<bool> attained;
    std::string error; // row failed when nonempty
};

/// Every valid lambda tuple over the field, lexicographic in element encoding.
std::vector<std::vector<FieldElement>> all_valid_tuples(const Field& field, std::uint32_t n);

/// The tuples a sweep job asks for: everything valid for sweep_all, the
/// parsed explicit list otherwise.
std::vector<std::vector<FieldElement>> sweep_tuples_for(const JobSpec& job, const Field& field);

std::string sweep_lambda_key(const std::vector<FieldElement>& tuple);

/// Compute one sweep row; domain errors land in row.error instead of throwing.
SweepRow sweep_row(const Field& field, std::uint32_t k, std::uint32_t n,
                   const std::vector<FieldElement>& tuple);

/// Run the sweep with a bounded worker pool.  Rows are handed to `emit` in
/// tuple order regardless of completion order; tuples whose key is in
/// `already_done` are skipped entirely (resume support).
void run_sweep(const Field& field, std::uint32_t k, std::uint32_t n,
               const std::vector<std::vector<FieldElement>>& tuples,
               const std::set<std::string>& already_done, std::uint32_t workers,
               const std::function<void(const SweepRow&)>& emit);

std::string sweep_header(const std::string& format); // csv column line; empty otherwise
std::string sweep_row_line(const SweepRow& row, const std::string& format);
/// Lambda keys already present in an existing sweep output (csv or jsonl).
std::set<std::string> sweep_keys_in_file(const std::string& content, const std::string& format);

} // namespace gfc
