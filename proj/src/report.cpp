#include "gfc/report.hpp"

#include <atomic>
#include <condition_variable>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "gfc/closedform.hpp"

namespace gfc {

using ordered_json = nlohmann::ordered_json;

Curve curve_from_job(const JobSpec& job) {
    Field f = parse_field(job.field_text);
    std::vector<FieldElement> lambdas;
    for (const auto& t : job.lambda_texts) lambdas.push_back(parse_element(f, t));
    return make_curve(f, job.k, job.n, std::move(lambdas));
}

namespace {

bool char2_matches(const CartierMatrix& cm) {
    const Curve& curve = cm.curve;
    for (std::size_t col = 0; col < cm.basis.size(); ++col) {
        auto closed = char2_image(cm.basis[col], curve);
        std::size_t nonzero = 0;
        for (std::size_t row = 0; row < cm.basis.size(); ++row) {
            const FieldElement& v = cm.entries.at(row, col);
            if (v.is_zero()) continue;
            ++nonzero;
            bool found = false;
            for (const auto& term : closed)
                if (term.idx == cm.basis[row] && term.coeff == v) found = true;
            if (!found) return false;
        }
        if (nonzero != closed.size()) return false;
    }
    return true;
}

bool char3_matches(const CartierMatrix& cm) {
    const Curve& curve = cm.curve;
    for (std::size_t col = 0; col < cm.basis.size(); ++col) {
        auto closed = char3_k2_image(cm.basis[col], curve);
        auto general = cartier_apply(theta_form(cm.basis[col], curve), curve);
        if (!(closed == general)) return false;
    }
    return true;
}

} // namespace

bool CurveReport::oracles_ok() const {
    if (genus != index_count || genus != counting_genus) return false;
    if (oracle_char2 && !*oracle_char2) return false;
    if (oracle_char3_k2 && !*oracle_char3_k2) return false;
    if (lower_bound && a_number < *lower_bound) return false;
    return true;
}

CurveReport build_report(const Curve& curve) {
    CurveReport r;
    r.curve_text = curve_to_string(curve);
    r.genus = curve->genus;
    r.counting_genus = genus_from_counting(curve->k, curve->n);

    CartierMatrix cm = cartier_matrix(curve);
    r.index_count = static_cast<long long>(cm.basis.size());
    for (const auto& idx : cm.basis) r.basis.push_back(idx.to_string());
    for (std::size_t i = 0; i < cm.basis.size(); ++i)
        for (std::size_t j = 0; j < cm.basis.size(); ++j)
            r.matrix.push_back(cm.entries.at(i, j).to_string());

    r.a_number = a_number(cm);
    r.p_rank = p_rank(cm);
    HasseWittSplit split = hw_split(cm);
    r.semisimple_dim = split.semisimple;
    r.nilpotent_dim = split.nilpotent;
    r.nilpotent_dim_equals_a = split.nilpotent_dim_equals_a;
    for (const auto& v : kernel_basis(cm)) {
        std::vector<std::string> row;
        for (const auto& x : v) row.push_back(x.to_string());
        r.kernel.push_back(std::move(row));
    }

    if (curve->field->p == 2) {
        r.oracle_char2 = char2_matches(cm);
        r.lower_bound = char2_lower_bound(curve->k, curve->n);
        r.lower_bound_attained = (r.a_number == *r.lower_bound);
    }
    if (curve->field->p == 3 && curve->k == 2) r.oracle_char3_k2 = char3_matches(cm);
    return r;
}

std::string report_to_json(const CurveReport& r) {
    ordered_json j;
    j["curve"] = r.curve_text;
    j["genus"] = r.genus;
    j["basis"] = r.basis;
    j["cartier_matrix"] = r.matrix;
    j["a_number"] = r.a_number;
    j["p_rank"] = r.p_rank;
    j["kernel"] = r.kernel;
    ordered_json oracles;
    oracles["char2"] = r.oracle_char2 ? ordered_json(*r.oracle_char2) : ordered_json(nullptr);
    oracles["char3_k2"] =
        r.oracle_char3_k2 ? ordered_json(*r.oracle_char3_k2) : ordered_json(nullptr);
    if (r.lower_bound) {
        ordered_json lb;
        lb["value"] = *r.lower_bound;
        lb["attained"] = *r.lower_bound_attained;
        oracles["lower_bound"] = lb;
    } else {
        oracles["lower_bound"] = nullptr;
    }
    j["oracles"] = oracles;
    return j.dump(2) + "\n";
}

CurveReport report_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    CurveReport r;
    r.curve_text = j.at("curve").get<std::string>();
    r.genus = j.at("genus").get<long long>();
    r.basis = j.at("basis").get<std::vector<std::string>>();
    r.index_count = static_cast<long long>(r.basis.size());
    r.counting_genus = r.genus; // not serialized; equal by construction
    r.matrix = j.at("cartier_matrix").get<std::vector<std::string>>();
    r.a_number = j.at("a_number").get<long long>();
    r.p_rank = j.at("p_rank").get<long long>();
    r.kernel = j.at("kernel").get<std::vector<std::vector<std::string>>>();
    const auto& oracles = j.at("oracles");
    if (!oracles.at("char2").is_null()) r.oracle_char2 = oracles.at("char2").get<bool>();
    if (!oracles.at("char3_k2").is_null())
        r.oracle_char3_k2 = oracles.at("char3_k2").get<bool>();
    if (!oracles.at("lower_bound").is_null()) {
        r.lower_bound = oracles.at("lower_bound").at("value").get<long long>();
        r.lower_bound_attained = oracles.at("lower_bound").at("attained").get<bool>();
    }
    r.semisimple_dim = r.p_rank;
    r.nilpotent_dim = r.genus - r.p_rank;
    return r;
}

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += v[i];
    }
    return s;
}

std::string opt_bool(const std::optional<bool>& b) {
    if (!b) return "null";
    return *b ? "true" : "false";
}

} // namespace

std::string report_to_csv(const CurveReport& r) {
    std::ostringstream out;
    out << "key,value\n";
    out << "curve," << csv_quote(r.curve_text) << "\n";
    out << "genus," << r.genus << "\n";
    out << "basis," << csv_quote(join(r.basis, " ")) << "\n";
    out << "cartier_matrix," << csv_quote(join(r.matrix, " ")) << "\n";
    out << "a_number," << r.a_number << "\n";
    out << "p_rank," << r.p_rank << "\n";
    std::vector<std::string> kernel_rows;
    for (const auto& v : r.kernel) kernel_rows.push_back(join(v, " "));
    out << "kernel," << csv_quote(join(kernel_rows, " / ")) << "\n";
    out << "oracle_char2," << opt_bool(r.oracle_char2) << "\n";
    out << "oracle_char3_k2," << opt_bool(r.oracle_char3_k2) << "\n";
    out << "lower_bound," << (r.lower_bound ? std::to_string(*r.lower_bound) : "null") << "\n";
    out << "lower_bound_attained," << opt_bool(r.lower_bound_attained) << "\n";
    return out.str();
}

std::string report_to_text(const CurveReport& r) {
    std::ostringstream out;
    out << "curve           " << r.curve_text << "\n";
    out << "genus           " << r.genus << " (basis " << r.index_count << ", counting "
        << r.counting_genus << ")\n";
    out << "a-number        " << r.a_number << "\n";
    out << "p-rank          " << r.p_rank << "\n";
    out << "hasse-witt      semisimple " << r.semisimple_dim << ", nilpotent "
        << r.nilpotent_dim << (r.nilpotent_dim_equals_a ? " (= a)" : " (!= a)") << "\n";
    out << "basis           " << join(r.basis, "  ") << "\n";
    out << "kernel          " << r.kernel.size() << " vector(s)\n";
    for (const auto& v : r.kernel) out << "  " << join(v, " ") << "\n";
    out << "matrix          row-major\n";
    const std::size_t g = r.basis.size();
    for (std::size_t i = 0; i < g; ++i) {
        out << " ";
        for (std::size_t j = 0; j < g; ++j) out << " " << r.matrix[i * g + j];
        out << "\n";
    }
    out << "oracle char2    " << opt_bool(r.oracle_char2) << "\n";
    out << "oracle char3_k2 " << opt_bool(r.oracle_char3_k2) << "\n";
    if (r.lower_bound)
        out << "lower bound     " << *r.lower_bound
            << (*r.lower_bound_attained ? " (attained)" : " (strict)") << "\n";
    else
        out << "lower bound     null\n";
    return out.str();
}

std::string render_report(const CurveReport& r, const std::string& format) {
    if (format == "json") return report_to_json(r);
    if (format == "csv") return report_to_csv(r);
    if (format == "text") return report_to_text(r);
    fail(errc::parse_error, "unknown format '" + format + "'");
}

std::vector<std::vector<FieldElement>> all_valid_tuples(const Field& field, std::uint32_t n) {
    if (n < 2) fail(errc::out_of_range, "n must be >= 2");
    const std::uint32_t len = n - 2;
    std::vector<std::vector<FieldElement>> out;
    std::vector<std::uint64_t> enc(len, 0);
    if (len == 0) {
        out.emplace_back();
        return out;
    }
    // odometer over element encodings; 0 and 1 encode the constants 0 and 1
    for (;;) {
        bool valid = true;
        for (std::uint32_t i = 0; i < len && valid; ++i) {
            if (enc[i] < 2) valid = false;
            for (std::uint32_t j = i + 1; j < len && valid; ++j)
                if (enc[i] == enc[j]) valid = false;
        }
        if (valid) {
            std::vector<FieldElement> tuple;
            for (auto e : enc) tuple.push_back(FieldElement::from_encoding(field, e));
            out.push_back(std::move(tuple));
        }
        std::uint32_t i = len;
        while (i > 0 && enc[i - 1] + 1 == field->order) enc[--i] = 0;
        if (i == 0) break;
        ++enc[i - 1];
    }
    return out;
}

std::vector<std::vector<FieldElement>> sweep_tuples_for(const JobSpec& job, const Field& field) {
    if (job.sweep_all) return all_valid_tuples(field, job.n);
    if (job.sweep_tuples.empty())
        fail(errc::parse_error, "sweep needs --lambda all or explicit tuples");
    std::vector<std::vector<FieldElement>> tuples;
    for (const auto& texts : job.sweep_tuples) {
        std::vector<FieldElement> tuple;
        for (const auto& t : texts) tuple.push_back(parse_element(field, t));
        tuples.push_back(std::move(tuple));
    }
    return tuples;
}

std::string sweep_lambda_key(const std::vector<FieldElement>& tuple) {
    std::string s;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) s += ";";
        s += tuple[i].to_string();
    }
    return s;
}

SweepRow sweep_row(const Field& field, std::uint32_t k, std::uint32_t n,
                   const std::vector<FieldElement>& tuple) {
    SweepRow row;
    row.lambda_text = sweep_lambda_key(tuple);
    try {
        Curve curve = make_curve(field, k, n, tuple);
        CartierMatrix cm = cartier_matrix(curve);
        row.a = a_number(cm);
        row.gamma = p_rank(cm);
        if (field->p == 2) {
            row.bound = char2_lower_bound(k, n);
            row.attained = (row.a == *row.bound);
        }
    } catch (const error& e) {
        row.error = e.what();
    }
    return row;
}

void run_sweep(const Field& field, std::uint32_t k, std::uint32_t n,
               const std::vector<std::vector<FieldElement>>& tuples,
               const std::set<std::string>& already_done, std::uint32_t workers,
               const std::function<void(const SweepRow&)>& emit) {
    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < tuples.size(); ++i)
        if (!already_done.count(sweep_lambda_key(tuples[i]))) pending.push_back(i);
    if (pending.empty()) return;
    if (workers == 0) workers = 1;
    workers = std::min<std::uint32_t>(workers, static_cast<std::uint32_t>(pending.size()));

    std::mutex mu;
    std::condition_variable cv;
    std::map<std::size_t, SweepRow> finished; // position in `pending` -> row
    std::atomic<std::size_t> next{0};

    auto work = [&]() {
        for (;;) {
            std::size_t pos = next.fetch_add(1);
            if (pos >= pending.size()) return;
            SweepRow row = sweep_row(field, k, n, tuples[pending[pos]]);
            {
                std::lock_guard<std::mutex> lock(mu);
                finished.emplace(pos, std::move(row));
            }
            cv.notify_one();
        }
    };

    std::vector<std::thread> pool;
    for (std::uint32_t w = 0; w < workers; ++w) pool.emplace_back(work);

    // emit strictly in tuple order
    std::size_t write_pos = 0;
    {
        std::unique_lock<std::mutex> lock(mu);
        while (write_pos < pending.size()) {
            cv.wait(lock, [&] { return finished.count(write_pos) > 0; });
            while (finished.count(write_pos)) {
                emit(finished.at(write_pos));
                finished.erase(write_pos);
                ++write_pos;
            }
        }
    }
    for (auto& th : pool) th.join();
}

std::string sweep_header(const std::string& format) {
    if (format == "csv") return "lambda,a,gamma,bound,attained,error\n";
    return "";
}

std::string sweep_row_line(const SweepRow& row, const std::string& format) {
    if (format == "json") {
        ordered_json j;
        j["lambda"] = row.lambda_text;
        if (row.error.empty()) {
            j["a"] = row.a;
            j["gamma"] = row.gamma;
            j["bound"] = row.bound ? ordered_json(*row.bound) : ordered_json(nullptr);
            j["attained"] = row.attained ? ordered_json(*row.attained) : ordered_json(nullptr);
        } else {
            j["error"] = row.error;
        }
        return j.dump() + "\n";
    }
    if (format == "csv") {
        std::ostringstream out;
        out << csv_quote(row.lambda_text) << ",";
        if (row.error.empty()) {
            out << row.a << "," << row.gamma << ",";
            out << (row.bound ? std::to_string(*row.bound) : "") << ",";
            out << (row.attained ? (*row.attained ? "true" : "false") : "") << ",";
        } else {
            out << ",,,," << csv_quote(row.error);
        }
        out << "\n";
        return out.str();
    }
    // text
    std::ostringstream out;
    out << row.lambda_text;
    if (row.error.empty()) {
        out << "  a=" << row.a << "  gamma=" << row.gamma;
        if (row.bound)
            out << "  bound=" << *row.bound << (*row.attained ? " attained" : " strict");
    } else {
        out << "  error: " << row.error;
    }
    out << "\n";
    return out.str();
}

std::set<std::string> sweep_keys_in_file(const std::string& content, const std::string& format) {
    std::set<std::string> keys;
    std::istringstream in(content);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (format == "json") {
            try {
                auto j = ordered_json::parse(line);
                if (j.contains("lambda")) keys.insert(j["lambda"].get<std::string>());
            } catch (const nlohmann::json::exception&) {
                continue;
            }
        } else if (format == "csv") {
            if (line.rfind("lambda,", 0) == 0) continue; // header
            std::string key;
            if (!line.empty() && line[0] == '"') {
                auto close = line.find('"', 1);
                if (close == std::string::npos) continue;
                key = line.substr(1, close - 1);
            } else {
                key = line.substr(0, line.find(','));
            }
            keys.insert(key);
        } else {
            keys.insert(line.substr(0, line.find(' ')));
        }
    }
    return keys;
}

} // namespace gfc
