#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "heat1d/analysis/classify.hpp"
#include "heat1d/analysis/cocomo.hpp"
#include "heat1d/analysis/fit.hpp"
#include "heat1d/analysis/loc.hpp"
#include "heat1d/analysis/report.hpp"
#include "heat1d/errors.hpp"

using namespace heat1d;
using namespace heat1d::analysis;
namespace fs = std::filesystem;

namespace {

std::vector<ScalingSample> planted(double serial, double parallel, std::vector<double> threads) {
    std::vector<ScalingSample> s;
    for (double p : threads) s.push_back({p, serial + parallel / p});
    return s;
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("heat1d_loc_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

void write_file(const fs::path& p, const std::string& text) {
    fs::create_directories(p.parent_path());
    std::ofstream(p) << text;
}

}  // namespace

TEST_CASE("fit_scaling recovers planted parameters") {
    const auto fit = fit_scaling(planted(1.0, 8.0, {1, 2, 4, 8}));
    CHECK(fit.serial_s == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fit.parallel_s == doctest::Approx(8.0).epsilon(1e-12));
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));

    const auto two = fit_scaling(planted(0.25, 3.0, {2, 7}));
    CHECK(two.serial_s == doctest::Approx(0.25));
    CHECK(two.parallel_s == doctest::Approx(3.0));
}

TEST_CASE("fit_scaling degenerate inputs") {
    CHECK_THROWS_AS(fit_scaling(planted(1, 2, {4, 4, 4})), DegenerateFit);
    CHECK_THROWS_AS(fit_scaling(std::vector<ScalingSample>{}), DegenerateFit);
    CHECK_THROWS_AS(fit_scaling(planted(1, 2, {0, 2})), DegenerateFit);

    const auto flat = fit_scaling(std::vector<ScalingSample>{{1, 3.0}, {2, 3.0}, {4, 3.0}});
    CHECK(flat.r_squared == 1.0);
    CHECK(flat.parallel_s == doctest::Approx(0.0));
    CHECK(flat.serial_s == doctest::Approx(3.0));
}

TEST_CASE("r_squared") {
    const std::vector<double> y{1, 2, 4, 7};
    CHECK(r_squared(y, y) == 1.0);
    const std::vector<double> mean(4, 3.5);
    CHECK(r_squared(y, mean) == 0.0);
    const std::vector<double> c(3, 2.0);
    CHECK(r_squared(c, c) == 1.0);
    CHECK(r_squared(c, std::vector<double>{2, 2, 3}) == -std::numeric_limits<double>::infinity());
}

TEST_CASE("fit properties") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> param(0.1, 10.0);
    std::normal_distribution<double> noise(0.0, 0.05);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<ScalingSample> s;
        for (double p : {1.0, 2.0, 3.0, 4.0, 8.0, 16.0}) s.push_back({p, param(rng) + param(rng) / p + noise(rng)});
        const auto base = fit_scaling(s);
        CHECK(base.r_squared <= 1.0);

        const double c = param(rng);
        auto scaled = s;
        for (auto& x : scaled) x.elapsed_s *= c;
        const auto f = fit_scaling(scaled);
        CHECK(f.serial_s == doctest::Approx(c * base.serial_s).epsilon(1e-9));
        CHECK(f.parallel_s == doctest::Approx(c * base.parallel_s).epsilon(1e-9));
        CHECK(std::abs(f.r_squared - base.r_squared) <= 1e-12 * std::max(1.0, std::abs(base.r_squared)));
    }

    auto noisy = planted(1.0, 8.0, {1, 2, 4, 8, 16});
    std::uniform_real_distribution<double> jitter(-0.01, 0.01);
    for (auto& x : noisy) x.elapsed_s += jitter(rng);
    CHECK(fit_scaling(noisy).r_squared < 1.0);
}

TEST_CASE("t_average") {
    CHECK(t_average(3, 3, 3) == 3.0);
    CHECK(t_average(1, 2, 3) == 2.0);
    CHECK(t_average(0.5, 0.25, 0.25) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(AverageTime{1, 2, 3}.t_average() == 2.0);
}

TEST_CASE("classify") {
    const std::vector<ClassificationInput> in{{"a", 1.0, 10.0}, {"b", 3.0, 2.0}, {"c", 2.0, 4.0}};
    const auto out = classify(in);
    REQUIRE(out.size() == 3);
    CHECK(out[0].x == -1.0);
    CHECK(out[1].x == 1.0);
    CHECK(out[2].x == 0.0);
    CHECK(out[1].y == 1.0);   // fastest
    CHECK(out[0].y == -1.0);  // slowest
    CHECK(out[2].y == doctest::Approx(0.5));

    const auto single = classify(std::vector<ClassificationInput>{{"only", 5.0, 5.0}});
    CHECK(single[0].x == 0.0);
    CHECK(single[0].y == 0.0);
    CHECK(classify(std::vector<ClassificationInput>{}).empty());

    SUBCASE("order preserving and affine invariant") {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> u(0.1, 100.0);
        std::vector<ClassificationInput> entries;
        for (int i = 0; i < 12; ++i) entries.push_back({std::to_string(i), u(rng), u(rng)});
        const auto base = classify(entries);
        for (std::size_t i = 0; i < entries.size(); ++i) {
            for (std::size_t j = 0; j < entries.size(); ++j) {
                if (entries[i].effort_months < entries[j].effort_months) CHECK(base[i].x < base[j].x);
                if (entries[i].t_average < entries[j].t_average) CHECK(base[i].y > base[j].y);
            }
        }
        auto moved = entries;
        for (auto& e : moved) {
            e.effort_months = 3.5 * e.effort_months - 7.0;
            e.t_average = 0.02 * e.t_average + 11.0;
        }
        const auto again = classify(moved);
        for (std::size_t i = 0; i < entries.size(); ++i) {
            CHECK(std::abs(again[i].x - base[i].x) <= 1e-12);
            CHECK(std::abs(again[i].y - base[i].y) <= 1e-12);
        }
    }
}

TEST_CASE("cocomo organic") {
    const auto zero = cocomo(0);
    CHECK(zero.effort_pm == 0.0);
    CHECK(zero.schedule_months == 0.0);

    const auto one_k = cocomo(1000);
    CHECK(one_k.kloc == 1.0);
    CHECK(one_k.effort_pm == 2.4);
    CHECK(std::abs(one_k.schedule_months - 3.4867) < 1e-4);

    // 134 lines: 2.4 * 0.134^1.05
    const auto small = cocomo(134);
    CHECK(small.effort_pm == doctest::Approx(0.2908514813).epsilon(1e-9));

    double last = -1.0;
    for (std::size_t loc = 0; loc < 5000; loc += 7) {
        const auto e = cocomo(loc);
        CHECK(e.effort_pm > last);
        last = e.effort_pm;
    }
}

TEST_CASE("count_lines") {
    const CommentSyntax cpp = *CommentRules::builtin().find("x.cpp");
    CHECK(count_lines("int a;\n// one\nint b; // trailing\n\n/* two */\nint c;\n", cpp) == LineCounts{3, 2, 1});
    CHECK(count_lines("", cpp) == LineCounts{});
    CHECK(count_lines("/*\n  block\n\n*/ int x;\n", cpp) == LineCounts{1, 2, 1});
    CHECK(count_lines("const char* s = \"// not a comment\";\n", cpp) == LineCounts{1, 0, 0});
    CHECK(count_lines("x = \"a\\\"/*\"; /* c */\n", cpp) == LineCounts{1, 0, 0});
    CHECK(count_lines("no newline at end", cpp) == LineCounts{1, 0, 0});
    CHECK(count_lines("   \t\n\n", cpp) == LineCounts{0, 0, 2});

    const CommentSyntax py = *CommentRules::builtin().find("x.py");
    CHECK(count_lines("# c\nx = '#'\n", py) == LineCounts{1, 1, 0});
    const CommentSyntax jl = *CommentRules::builtin().find("x.jl");
    CHECK(count_lines("#= a\nb =#\ny = 1\n", jl) == LineCounts{1, 2, 0});
}

TEST_CASE("count_loc over a tree") {
    const fs::path dir = fresh_dir("tree");
    write_file(dir / "a" / "one.cpp", "int a;\n// c\n\nint b;\n");
    write_file(dir / "a" / "two.HPP", "#pragma once\n");
    write_file(dir / "b" / "three.rs", "fn main() {}\n/* x */\n");
    write_file(dir / "b" / "notes.txt", "ignored\n");

    const auto all = count_loc(dir);
    CHECK(all.files.size() == 3);
    CHECK(all.total() == LineCounts{4, 2, 1});
    CHECK(all.skipped.empty());

    // additive over disjoint subsets
    auto parts = count_loc(dir / "a").total();
    parts += count_loc(dir / "b").total();
    CHECK(parts == all.total());

    CHECK(count_loc(dir / "a" / "one.cpp").total() == LineCounts{2, 1, 1});

    CommentRules custom;
    custom.set(".txt", {{";"}, {}, ""});
    CHECK(count_loc(dir, custom).total() == LineCounts{1, 0, 0});

    const auto missing = count_loc(dir / "nope");
    CHECK(missing.files.empty());
    CHECK(missing.skipped.size() == 1);
    fs::remove_all(dir);
}

TEST_CASE("count_loc agrees with cloc on this project's sources") {
    if (std::system("command -v cloc >/dev/null 2>&1") != 0) {
        MESSAGE("cloc not installed; skipping cross-check");
        return;
    }
    const fs::path root = HEAT1D_SOURCE_DIR;
    const std::string cmd = "cloc --csv --quiet --include-lang='C++,C/C++ Header' '" + (root / "src").string() +
                            "' '" + (root / "include").string() + "'";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    REQUIRE(pipe);
    std::string output;
    char buf[512];
    while (std::fgets(buf, sizeof buf, pipe.get())) output += buf;

    std::istringstream lines(output);
    std::string line;
    long cloc_code = -1;
    while (std::getline(lines, line)) {
        if (line.find(",SUM,") == std::string::npos) continue;
        cloc_code = std::stol(line.substr(line.rfind(',') + 1));
    }
    REQUIRE(cloc_code > 0);

    std::size_t ours = count_loc(root / "src").total().code + count_loc(root / "include").total().code;
    const double diff = std::abs(double(ours) - double(cloc_code)) / double(cloc_code);
    MESSAGE("count_loc=" << ours << " cloc=" << cloc_code);
    CHECK(diff <= 0.02);
}

TEST_CASE("report helpers") {
    std::vector<BenchRecord> records;
    for (std::size_t p : {1u, 2u, 4u}) {
        for (int rep = 0; rep < 2; ++rep) {
            BenchRecord r;
            r.strategy = "queues";
            r.threads = p;
            r.elapsed_s = 1.0 + 8.0 / double(p);
            records.push_back(r);
        }
    }
    BenchRecord lone;
    lone.strategy = "barrier";
    lone.threads = 2;
    lone.elapsed_s = 2.0;
    records.push_back(lone);

    CHECK(labels_of(records) == std::vector<std::string>{"queues", "barrier"});
    const auto fits = fit_by_label(records);
    REQUIRE(fits.size() == 1);
    CHECK(fits[0].samples == 6);
    CHECK(fits[0].fit.serial_s == doctest::Approx(1.0));
    CHECK(mean_elapsed(records, "queues", 2) == 5.0);
    CHECK_FALSE(mean_elapsed(records, "queues", 3).has_value());
}
