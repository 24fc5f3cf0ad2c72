#include <doctest.h>

#include <sstream>

#include "gfc/report.hpp"
#include "test_helpers.hpp"

using namespace gfc;

namespace {

JobSpec f33_job() {
    JobSpec job;
    job.field_text = "2^2:1,1,1";
    job.k = 3;
    job.n = 3;
    job.lambda_texts = {"0,1"};
    return job;
}

} // namespace

TEST_CASE("single-curve report") {
    auto report = build_report(curve_from_job(f33_job()));
    CHECK(report.curve_text == "2^2:1,1,1;3;3;0,1");
    CHECK(report.genus == 10);
    CHECK(report.index_count == 10);
    CHECK(report.counting_genus == 10);
    CHECK(report.a_number == 4);
    CHECK(report.p_rank == 6);
    CHECK(report.semisimple_dim == 6);
    CHECK(report.nilpotent_dim == 4);
    CHECK(report.nilpotent_dim_equals_a);
    CHECK(report.kernel.size() == 4);
    CHECK(report.matrix.size() == 100);
    REQUIRE(report.oracle_char2.has_value());
    CHECK(*report.oracle_char2);
    CHECK_FALSE(report.oracle_char3_k2.has_value());
    REQUIRE(report.lower_bound.has_value());
    CHECK(*report.lower_bound == 4);
    CHECK(*report.lower_bound_attained);
    CHECK(report.oracles_ok());
}

TEST_CASE("report JSON round trip is exact") {
    auto report = build_report(curve_from_job(f33_job()));
    auto text = report_to_json(report);
    CHECK(report_to_json(report) == text); // rendering is deterministic

    auto back = report_from_json(text);
    CHECK(back.curve_text == report.curve_text);
    CHECK(back.genus == report.genus);
    CHECK(back.a_number == report.a_number);
    CHECK(back.p_rank == report.p_rank);
    CHECK(back.basis == report.basis);
    CHECK(back.matrix == report.matrix);
    CHECK(back.kernel == report.kernel);
    CHECK(back.oracle_char2 == report.oracle_char2);
    CHECK(back.oracle_char3_k2 == report.oracle_char3_k2);
    CHECK(back.lower_bound == report.lower_bound);
    CHECK(report_to_json(back) == text);
}

TEST_CASE("CSV carries the same values as JSON") {
    auto report = build_report(curve_from_job(f33_job()));
    auto csv = report_to_csv(report);
    CHECK(csv.find("genus,10\n") != std::string::npos);
    CHECK(csv.find("a_number,4\n") != std::string::npos);
    CHECK(csv.find("p_rank,6\n") != std::string::npos);
    CHECK(csv.find("oracle_char2,true\n") != std::string::npos);
    CHECK(csv.find("oracle_char3_k2,null\n") != std::string::npos);
    CHECK(csv.find("lower_bound,4\n") != std::string::npos);

    auto text = report_to_text(report);
    CHECK(text.find("a-number        4") != std::string::npos);
    CHECK_THROWS_AS(render_report(report, "yaml"), error);
}

TEST_CASE("job parsing errors carry the rule name") {
    JobSpec bad;
    bad.field_text = "2^1";
    bad.k = 2;
    bad.n = 3;
    bad.lambda_texts = {"1"};
    try {
        curve_from_job(bad);
        FAIL("expected an error");
    } catch (const error& e) {
        CHECK(e.code() == errc::k_not_coprime_to_p);
        CHECK(std::string(e.what()).find("KNotCoprimeToP") != std::string::npos);
    }

    JobSpec garbage = f33_job();
    garbage.field_text = "nope";
    CHECK_THROWS_AS(curve_from_job(garbage), error);
}

TEST_CASE("valid tuple enumeration") {
    auto f9 = make_field(3, 2);
    auto tuples = all_valid_tuples(f9, 4);
    CHECK(tuples.size() == 42); // 7 * 6 ordered pairs of distinct non-{0,1} elements
    // lexicographic in the element encoding
    for (std::size_t i = 1; i < tuples.size(); ++i) {
        auto a = std::make_pair(tuples[i - 1][0].encoding(), tuples[i - 1][1].encoding());
        auto b = std::make_pair(tuples[i][0].encoding(), tuples[i][1].encoding());
        CHECK(a < b);
    }

    auto f4 = make_field(2, 2);
    CHECK(all_valid_tuples(f4, 3).size() == 2);

    auto f3 = make_field(3, 1);
    CHECK(all_valid_tuples(f3, 4).empty()); // only one usable element
    CHECK(all_valid_tuples(f3, 2).size() == 1); // the empty tuple
}

TEST_CASE("sweep rows and the Humbert trichotomy") {
    auto f9 = make_field(3, 2);
    auto tuples = all_valid_tuples(f9, 4);
    for (const auto& tuple : tuples) {
        auto row = sweep_row(f9, 2, 4, tuple);
        REQUIRE(row.error.empty());
        CHECK((row.a == 0 || row.a == 1));
        CHECK(row.gamma == 5 - row.a);
    }

    auto f4 = make_field(2, 2);
    for (const auto& tuple : all_valid_tuples(f4, 3)) {
        auto row = sweep_row(f4, 3, 3, tuple);
        REQUIRE(row.error.empty());
        CHECK(row.a == 4);
        CHECK(row.gamma == 6);
        CHECK(row.bound == 4);
        CHECK(row.attained == true);
    }

    // domain errors are recorded per row, not thrown
    auto bad = sweep_row(f4, 2, 3, {parse_element(f4, "0,1")});
    CHECK_FALSE(bad.error.empty());
}

TEST_CASE("sweep output is deterministic and resumable") {
    auto f9 = make_field(3, 2);
    auto tuples = all_valid_tuples(f9, 4);

    auto run = [&](std::uint32_t workers, const std::set<std::string>& done) {
        std::ostringstream out;
        run_sweep(f9, 2, 4, tuples, done, workers,
                  [&](const SweepRow& row) { out << sweep_row_line(row, "csv"); });
        return out.str();
    };

    auto one = run(1, {});
    CHECK(run(1, {}) == one);
    CHECK(run(4, {}) == one); // worker count never changes the output

    // resume: complete a truncated prefix and compare with the full run
    std::istringstream in(one);
    std::string line, prefix;
    std::set<std::string> done_keys;
    for (int i = 0; i < 10 && std::getline(in, line); ++i) prefix += line + "\n";
    done_keys = sweep_keys_in_file(prefix, "csv");
    CHECK(done_keys.size() == 10);
    auto rest = run(2, done_keys);
    CHECK(prefix + rest == one);

    // jsonl carries the same keys
    std::ostringstream jglob;
    run_sweep(f9, 2, 4, tuples, {}, 2,
              [&](const SweepRow& row) { jglob << sweep_row_line(row, "json"); });
    auto jkeys = sweep_keys_in_file(jglob.str(), "json");
    CHECK(jkeys.size() == tuples.size());
}
