#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "surdstats/io.hpp"
#include "surdstats/sweep.hpp"

using namespace surdstats;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("surdstats_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static inline int counter = 0;
};

}  // namespace

TEST_CASE("aggregate_discriminant d=5: one golden cycle") {
    const SweepRecord r = aggregate_discriminant(Int(5));
    CHECK(r.h_plus == 1);
    CHECK(r.cycle_count == 1);
    CHECK(r.total_period == 1);
    CHECK(r.agg_stats.freq(1) == doctest::Approx(1.0));
    CHECK(r.agg_tv == doctest::Approx(0.585).epsilon(1e-3));
    CHECK(r.fundamental);
    CHECK(r.h_wide == 1);
    CHECK(r.pell.x == 3);
    CHECK(r.pell.y == 1);
    CHECK(r.geodesic_length == doctest::Approx(2.0 * r.regulator));
    CHECK_THROWS_AS(aggregate_discriminant(Int(7)), std::invalid_argument);
}

TEST_CASE("aggregate_discriminant d=28 carries the sqrt7 motif") {
    const SweepRecord r = aggregate_discriminant(Int(28));
    CHECK(r.agg_stats.freq(1) == doctest::Approx(0.75));
    CHECK(r.agg_stats.freq(4) == doctest::Approx(0.25));
    CHECK(r.h_plus == 2);
    CHECK(r.agg_stats.total() == static_cast<std::uint64_t>(r.total_period));
}

TEST_CASE("per-cycle periods pool into total_period") {
    for (long d = 5; d <= 80; ++d) {
        if (!is_valid_discriminant(Int(d))) continue;
        const SweepRecord r = aggregate_discriminant(Int(d));
        std::int64_t sum = 0;
        for (const std::int64_t l : r.cycle_periods) sum += l;
        CHECK(sum == r.total_period);
        CHECK(r.agg_stats.total() == static_cast<std::uint64_t>(r.total_period));
        CHECK(r.per_cycle_tv.size() == static_cast<std::size_t>(r.cycle_count));
        for (const double tv : r.per_cycle_tv) {
            CHECK(tv >= 0.0);
            CHECK(tv <= 1.0);
        }
    }
}

TEST_CASE("sqrt_stats examples") {
    const SweepRecord r7 = sqrt_stats(Int(7));
    CHECK(r7.total_period == 4);
    CHECK(r7.agg_stats.freq(1) == doctest::Approx(0.75));
    CHECK(r7.d == 28);
    CHECK(r7.n.value() == 7);
    CHECK(r7.h_plus == 2);
    CHECK(r7.cycle_count == 1);

    const SweepRecord r2 = sqrt_stats(Int(2));
    CHECK(r2.total_period == 1);
    CHECK(r2.agg_stats.freq(2) == doctest::Approx(1.0));
    CHECK(r2.agg_tv == doctest::Approx(1.0 - gk_mass(2)).epsilon(1e-12));

    CHECK_THROWS_AS(sqrt_stats(Int(9)), std::invalid_argument);
    CHECK_THROWS_AS(sqrt_stats(Int(1)), std::invalid_argument);
}

TEST_CASE("run_sweep admits exactly the valid discriminants of [5,16]") {
    TempDir tmp;
    SweepConfig cfg;
    cfg.d_min = 5;
    cfg.d_max = 16;
    cfg.class_cap = 10;
    cfg.out_csv = (tmp.path / "sweep.csv").string();
    cfg.out_jsonl = (tmp.path / "sweep.jsonl").string();
    const SweepSummary sum = run_sweep(cfg);
    REQUIRE(sum.admitted == 4);
    const std::vector<long> expect{5, 8, 12, 13};
    for (std::size_t i = 0; i < 4; ++i) CHECK(sum.records[i].d == expect[i]);

    const std::string csv = slurp(cfg.out_csv);
    CHECK(csv.rfind("d,fundamental,h_plus,total_period,regulator,agg_tv,max_cycle_tv\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);  // header + 4 rows
    const std::string jsonl = slurp(cfg.out_jsonl);
    CHECK(std::count(jsonl.begin(), jsonl.end(), '\n') == 4);

    // every emitted line round-trips through the record schema
    std::istringstream lines(jsonl);
    std::string line;
    while (std::getline(lines, line)) {
        const SweepRecord rec = sweep_record_from_json(json::parse(line));
        CHECK(to_json(rec).dump() == line);
    }
}

TEST_CASE("empty range produces empty outputs") {
    TempDir tmp;
    SweepConfig cfg;
    cfg.d_min = 14;
    cfg.d_max = 15;  // 14 ≡ 2, 15 ≡ 3 (mod 4): nothing valid
    cfg.out_csv = (tmp.path / "empty.csv").string();
    const SweepSummary sum = run_sweep(cfg);
    CHECK(sum.admitted == 0);
    CHECK(sum.candidates == 0);
    CHECK(slurp(cfg.out_csv) ==
          "d,fundamental,h_plus,total_period,regulator,agg_tv,max_cycle_tv\n");
}

TEST_CASE("filters: class cap and fundamental-only") {
    SweepConfig cfg;
    cfg.d_min = 5;
    cfg.d_max = 16;
    cfg.class_cap = 1;
    SweepSummary sum = run_sweep(cfg);
    REQUIRE(sum.admitted == 3);  // h+(12) = 2 drops out
    CHECK(sum.records[0].d == 5);
    CHECK(sum.records[1].d == 8);
    CHECK(sum.records[2].d == 13);
    for (const auto& r : sum.records) CHECK(r.h_plus <= 1);

    cfg = SweepConfig{};
    cfg.d_min = 17;
    cfg.d_max = 21;
    cfg.fundamental_only = true;
    sum = run_sweep(cfg);
    REQUIRE(sum.admitted == 2);  // 20 = 4*5 is not fundamental
    CHECK(sum.records[0].d == 17);
    CHECK(sum.records[1].d == 21);
    for (const auto& r : sum.records) CHECK(r.fundamental);
}

TEST_CASE("sqrt mode sweeps the radicand") {
    SweepConfig cfg;
    cfg.mode = SweepMode::sqrt;
    cfg.d_min = 2;
    cfg.d_max = 10;
    const SweepSummary sum = run_sweep(cfg);
    REQUIRE(sum.admitted == 7);  // skips 4 and 9
    CHECK(sum.records.front().n.value() == 2);
    CHECK(sum.records.back().n.value() == 10);
    for (const auto& r : sum.records) {
        CHECK(r.d == 4 * r.n.value());
        CHECK(r.agg_stats.total() == static_cast<std::uint64_t>(r.total_period));
    }
}

TEST_CASE("byte-identical reruns, also under parallelism") {
    TempDir tmp;
    SweepConfig cfg;
    cfg.d_min = 5;
    cfg.d_max = 120;
    cfg.out_csv = (tmp.path / "a.csv").string();
    cfg.out_jsonl = (tmp.path / "a.jsonl").string();
    run_sweep(cfg);
    const std::string csv1 = slurp(cfg.out_csv);
    const std::string jsonl1 = slurp(cfg.out_jsonl);

    cfg.out_csv = (tmp.path / "b.csv").string();
    cfg.out_jsonl = (tmp.path / "b.jsonl").string();
    cfg.jobs = 4;
    run_sweep(cfg);
    CHECK(slurp(cfg.out_csv) == csv1);
    CHECK(slurp(cfg.out_jsonl) == jsonl1);
}

TEST_CASE("cache: hits reproduce computed records bit-for-bit") {
    TempDir tmp;
    SweepConfig cfg;
    cfg.d_min = 5;
    cfg.d_max = 60;
    cfg.cache_path = (tmp.path / "cache.jsonl").string();
    cfg.out_jsonl = (tmp.path / "first.jsonl").string();
    const SweepSummary first = run_sweep(cfg);
    CHECK(first.cache_hits == 0);

    cfg.out_jsonl = (tmp.path / "second.jsonl").string();
    const SweepSummary second = run_sweep(cfg);
    CHECK(second.cache_hits == second.admitted);
    CHECK(slurp(tmp.path / "first.jsonl") == slurp(tmp.path / "second.jsonl"));
}

TEST_CASE("cache: corrupt and stale lines are skipped with warnings") {
    TempDir tmp;
    SweepConfig cfg;
    cfg.d_min = 5;
    cfg.d_max = 13;
    cfg.cache_path = (tmp.path / "cache.jsonl").string();
    run_sweep(cfg);

    // truncate the last line and add garbage plus a wrong-schema entry
    std::string content = slurp(cfg.cache_path);
    content.resize(content.size() - 20);
    {
        std::ofstream out(cfg.cache_path, std::ios::binary);
        out << content << "\n{not json\n" << R"({"schema": 999, "d": "5"})" << "\n";
    }
    const SweepSummary sum = run_sweep(cfg);
    CHECK(sum.cache_warnings >= 2);
    CHECK(sum.admitted == 4);
    // stale entries were recomputed and appended: next run is all hits
    const SweepSummary again = run_sweep(cfg);
    CHECK(again.cache_hits == again.admitted);
}

TEST_CASE("I/O failures carry the path") {
    SweepConfig cfg;
    cfg.d_min = 5;
    cfg.d_max = 8;
    cfg.out_csv = "/nonexistent_dir_zz/out.csv";
    CHECK_THROWS_WITH_AS(run_sweep(cfg), doctest::Contains("/nonexistent_dir_zz/out.csv"),
                         std::runtime_error);
}

TEST_CASE("dyadic bucket means are reported") {
    SweepConfig cfg;
    cfg.d_min = 5;
    cfg.d_max = 64;
    std::ostringstream log;
    const SweepSummary sum = run_sweep(cfg, &log);
    CHECK(!sum.buckets.empty());
    std::size_t total = 0;
    for (const auto& b : sum.buckets) {
        CHECK(b.lo < b.hi);
        total += b.count;
    }
    CHECK(total == sum.admitted);
    CHECK(log.str().find("bucket [") != std::string::npos);
}
