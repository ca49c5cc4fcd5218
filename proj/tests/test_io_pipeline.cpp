#include <doctest.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "graphrank/errors.hpp"
#include "graphrank/pipeline.hpp"
#include "graphrank/synthetic.hpp"
#include "support/oracle.hpp"

namespace fs = std::filesystem;
using graphrank::Dataset;
using graphrank::LoadOptions;
using graphrank::OperatorKind;
using graphrank::PipelineConfig;

namespace {

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / fs::path("graphrank_test_" + std::to_string(
                         std::chrono::steady_clock::now().time_since_epoch().count()))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }

    std::string file(const std::string& name, const std::string& content) const {
        const fs::path p = path / name;
        std::ofstream out(p);
        out << content;
        return p.string();
    }
};

std::string line_csv() {
    return "0\n1\n3\n";
}

}  // namespace

TEST_CASE("load_features: comma and tab delimiters") {
    TempDir dir;
    const LoadOptions opts;

    const Dataset comma = graphrank::load_features(
        dir.file("c.csv", "1.5,2\n3,4\n5,6\n"), opts);
    CHECK(comma.features.rows() == 3);
    CHECK(comma.features.cols() == 2);
    CHECK(comma.features(0, 0) == 1.5);
    CHECK(comma.ids == std::vector<std::int64_t>{1, 2, 3});

    const Dataset tab = graphrank::load_features(
        dir.file("t.tsv", "1.5\t2\n3\t4\n"), opts);
    CHECK(tab.features(1, 1) == 4.0);
}

TEST_CASE("load_features: header, id column, id base") {
    TempDir dir;

    LoadOptions opts;
    opts.has_header = true;
    const Dataset with_header = graphrank::load_features(
        dir.file("h.csv", "a,b\n1,2\n3,4\n"), opts);
    CHECK(with_header.features.rows() == 2);

    LoadOptions id_opts;
    id_opts.id_column = true;
    const Dataset with_ids = graphrank::load_features(
        dir.file("i.csv", "10,1,2\n20,3,4\n"), id_opts);
    CHECK(with_ids.features.cols() == 2);
    CHECK(with_ids.ids == std::vector<std::int64_t>{10, 20});

    LoadOptions zero_based;
    zero_based.id_base = 0;
    const Dataset zb = graphrank::load_features(dir.file("z.csv", "1,2\n3,4\n"), zero_based);
    CHECK(zb.ids == std::vector<std::int64_t>{0, 1});
}

TEST_CASE("load_features failures name the file and line") {
    TempDir dir;
    const LoadOptions opts;

    CHECK_THROWS_WITH_AS(
        graphrank::load_features(dir.file("ragged.csv", "1,2\n3\n"), opts),
        doctest::Contains("ragged.csv:2"), graphrank::ValidationError);
    CHECK_THROWS_WITH_AS(
        graphrank::load_features(dir.file("bad.csv", "1,2\n3,x\n"), opts),
        doctest::Contains("bad.csv:2"), graphrank::ValidationError);
    CHECK_THROWS_AS(graphrank::load_features(dir.file("empty.csv", ""), opts),
                    graphrank::ValidationError);
    CHECK_THROWS_AS(graphrank::load_features((dir.path / "missing.csv").string(), opts),
                    graphrank::ValidationError);
}

TEST_CASE("seed specs: inline list and file") {
    TempDir dir;
    CHECK(graphrank::parse_seed_spec("5,53,369") == std::vector<std::int64_t>{5, 53, 369});
    CHECK(graphrank::parse_seed_spec(dir.file("seeds.txt", "5 53\n369\n")) ==
          std::vector<std::int64_t>{5, 53, 369});
    CHECK_THROWS_AS(graphrank::parse_seed_spec((dir.path / "nope.txt").string()),
                    graphrank::ValidationError);
    CHECK_THROWS_AS(graphrank::parse_seed_spec(""), graphrank::ValidationError);
}

TEST_CASE("seed resolution maps external IDs to internal indices") {
    TempDir dir;
    LoadOptions opts;  // id_base = 1
    const Dataset data = graphrank::load_features(dir.file("d.csv", line_csv()), opts);

    const auto seeds = graphrank::resolve_seeds(data, {1, 3});
    CHECK(seeds.indices() == std::vector<Eigen::Index>{0, 2});

    CHECK_THROWS_WITH_AS(graphrank::resolve_seeds(data, {99}), doctest::Contains("99"),
                         graphrank::ValidationError);

    LoadOptions id_opts;
    id_opts.id_column = true;
    const Dataset dup = graphrank::load_features(
        dir.file("dup.csv", "7,1\n7,2\n"), id_opts);
    CHECK_THROWS_AS(graphrank::resolve_seeds(dup, {7}), graphrank::ValidationError);
}

TEST_CASE("synthetic blobs: shape, determinism, separation control") {
    const auto a = graphrank::gen_synthetic(10, 3, 25.0, 99);
    CHECK(a.features.rows() == 30);
    CHECK(a.features.cols() == 5);
    CHECK(a.labels.size() == 30);
    CHECK(a.labels.front() == 0);
    CHECK(a.labels.back() == 2);

    const auto b = graphrank::gen_synthetic(10, 3, 25.0, 99);
    CHECK(a.features == b.features);

    const auto c = graphrank::gen_synthetic(10, 3, 25.0, 100);
    CHECK(a.features != c.features);

    CHECK_THROWS_AS(graphrank::gen_synthetic(0, 3, 1.0, 1), graphrank::ValidationError);
    CHECK_THROWS_AS(graphrank::gen_synthetic(3, 3, -1.0, 1), graphrank::ValidationError);

    // High separation: no inter-cluster edges at k below the cluster size.
    graphrank::GraphConfig gcfg;
    gcfg.k = 5;
    const auto g = graphrank::build_knn_graph(a.features, gcfg);
    for (const auto& [i, j] : oracle::edge_set(g)) {
        CHECK(a.labels[static_cast<std::size_t>(i)] == a.labels[static_cast<std::size_t>(j)]);
    }

    // Separation zero: one big blob, inter-label edges appear.
    const auto flat = graphrank::gen_synthetic(10, 3, 0.0, 7);
    const auto gf = graphrank::build_knn_graph(flat.features, gcfg);
    bool crossing = false;
    for (const auto& [i, j] : oracle::edge_set(gf)) {
        crossing = crossing || flat.labels[static_cast<std::size_t>(i)] !=
                                   flat.labels[static_cast<std::size_t>(j)];
    }
    CHECK(crossing);
}

TEST_CASE("synthetic files round-trip through the loader") {
    TempDir dir;
    const auto data = graphrank::gen_synthetic(5, 2, 10.0, 3);
    const std::string path = (dir.path / "synth.csv").string();
    graphrank::write_features_csv(path, data.features);
    graphrank::write_labels(path + ".labels", data.labels);

    const Dataset loaded = graphrank::load_features(path, LoadOptions{});
    REQUIRE(loaded.features.rows() == data.features.rows());
    REQUIRE(loaded.features.cols() == data.features.cols());
    CHECK((loaded.features - data.features).lpNorm<Eigen::Infinity>() <= 1e-9);
}

TEST_CASE("rank pipeline: nearer point outranks the farther one") {
    TempDir dir;
    PipelineConfig cfg;
    cfg.input_path = dir.file("line.csv", line_csv());
    cfg.seeds_spec = "1";  // first row, 1-based IDs
    cfg.graph.k = 1;
    cfg.methods = {OperatorKind::unnormalized_laplacian};

    std::ostringstream out;
    graphrank::run_rank(cfg, out);
    const std::string text = out.str();

    // Candidates are rows 2 and 3; row 2 is adjacent to the seed.
    const auto rank1 = text.find("1\t2\t");
    const auto rank2 = text.find("2\t3\t");
    CHECK(rank1 != std::string::npos);
    CHECK(rank2 != std::string::npos);
    CHECK(rank1 < rank2);
    CHECK(text.find("# method=unnorm") != std::string::npos);
    CHECK(text.find("# seeds=1") != std::string::npos);
}

TEST_CASE("rank pipeline: alpha 0 zeroes non-seed scores, order falls back to index") {
    TempDir dir;
    PipelineConfig cfg;
    cfg.input_path = dir.file("x.csv", "0,0\n1,0\n0,9\n4,4\n");
    cfg.seeds_spec = "2";
    cfg.graph.k = 1;
    cfg.solver.alpha = 0.0;
    cfg.methods = {OperatorKind::random_walk};

    std::ostringstream out;
    graphrank::run_rank(cfg, out);
    std::istringstream lines(out.str());
    std::string line;
    std::vector<std::string> ranked;
    while (std::getline(lines, line)) {
        if (!line.empty() && line[0] != '#' && line.rfind("rank", 0) != 0) {
            ranked.push_back(line);
        }
    }
    REQUIRE(ranked.size() == 3);
    CHECK(ranked[0] == "1\t1\t0");
    CHECK(ranked[1] == "2\t3\t0");
    CHECK(ranked[2] == "3\t4\t0");
}

TEST_CASE("pipelines are deterministic") {
    TempDir dir;
    const auto data = graphrank::gen_synthetic(8, 2, 6.0, 11);
    const std::string path = (dir.path / "d.csv").string();
    graphrank::write_features_csv(path, data.features);

    PipelineConfig cfg;
    cfg.input_path = path;
    cfg.seeds_spec = "1,2,9";
    cfg.graph.k = 3;
    cfg.k_values = {1, 3, 5, 14};

    std::ostringstream rank_a, rank_b, eval_a, eval_b;
    graphrank::run_rank(cfg, rank_a);
    graphrank::run_rank(cfg, rank_b);
    graphrank::run_eval(cfg, eval_a);
    graphrank::run_eval(cfg, eval_b);
    CHECK(rank_a.str() == rank_b.str());
    CHECK(eval_a.str() == eval_b.str());
    CHECK(eval_a.str().find("accuracy@k") != std::string::npos);
}

TEST_CASE("eval pipeline: single method gives a one-row grid with records") {
    TempDir dir;
    const auto data = graphrank::gen_synthetic(10, 2, 12.0, 21);
    const std::string path = (dir.path / "e.csv").string();
    graphrank::write_features_csv(path, data.features);

    PipelineConfig cfg;
    cfg.input_path = path;
    cfg.seeds_spec = "1,2,3";
    cfg.graph.k = 4;
    cfg.methods = {OperatorKind::symmetric_normalized};
    cfg.k_values = {1, 9};

    std::ostringstream out;
    graphrank::run_eval(cfg, out);
    const std::string text = out.str();

    CHECK(text.find("sym") != std::string::npos);
    CHECK(text.find("rw") == std::string::npos);
    std::size_t records = 0;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.rfind("accuracy\tmethod=", 0) == 0) ++records;
    }
    CHECK(records == 2);  // one per method x k

    // Seeds are one tight cluster: every left-out seed comes back within the
    // cluster, so accuracy at k = 9 is 100.
    CHECK(text.find("accuracy\tmethod=sym\tk=9\tvalue=100.00") != std::string::npos);
}

TEST_CASE("eval pipeline validation") {
    TempDir dir;
    PipelineConfig cfg;
    cfg.input_path = dir.file("v.csv", "0,0\n1,0\n2,0\n");
    cfg.seeds_spec = "1";
    cfg.graph.k = 1;

    std::ostringstream out;
    CHECK_THROWS_AS(graphrank::run_eval(cfg, out), graphrank::ValidationError);  // one seed

    cfg.seeds_spec = "1,2";
    cfg.leave_one_out = false;
    CHECK_THROWS_AS(graphrank::run_eval(cfg, out), graphrank::ValidationError);

    cfg.leave_one_out = true;
    cfg.k_values = {};
    CHECK_THROWS_AS(graphrank::run_eval(cfg, out), graphrank::ValidationError);
}
