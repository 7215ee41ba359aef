#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "qb/bethe/solver.hpp"
#include "qb/cli/run.hpp"
#include "qb/oracle/xxz.hpp"
#include "qb/quiver/spec_io.hpp"

using namespace qb;
using namespace qb::cli;
using ojson = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

std::string source(const std::string& rel) { return std::string(QB_SOURCE_DIR) + "/" + rel; }

fs::path scratch(const std::string& name) {
    auto p = fs::temp_directory_path() / ("qb_cli_" + std::to_string(::getpid())) / name;
    fs::create_directories(p.parent_path());
    return p;
}

std::string write_spec(const QuiverModel& q, const std::string& name) {
    auto p = scratch(name);
    std::ofstream(p) << write_quiver_spec(q);
    return p.string();
}

JobConfig job(const std::string& spec, Task t, const std::string& out) {
    JobConfig c;
    c.spec = spec;
    c.task = t;
    c.out = scratch(out).string();
    return c;
}

const CsvTable& table(const Report& r, const std::string& name) {
    for (const auto& [n, t] : r.tables)
        if (n == name) return t;
    throw std::runtime_error("no table " + name);
}

ojson document(const Report& r, const std::string& name) {
    for (const auto& [n, d] : r.documents)
        if (n == name) return d;
    throw std::runtime_error("no document " + name);
}

}  // namespace

TEST_CASE("complex and rational literals") {
    PrecisionScope ps(40);
    CHECK(parse_complex("1.5") == Complex(Real("1.5")));
    CHECK(parse_complex("-2e-3i") == Complex(Real(0), Real("-2e-3")));
    CHECK(parse_complex("0.3+0.7i") == Complex(Real("0.3"), Real("0.7")));
    CHECK(parse_complex("1e-3-2.5e+1i") == Complex(Real("1e-3"), Real("-25")));
    CHECK(parse_complex("i") == Complex(Real(0), Real(1)));
    CHECK(abs(parse_complex("polar:2,0.5") - polar(Real(2), Real("0.5"))) == 0);
    CHECK_THROWS_AS(parse_complex("abc"), ConfigError);
    CHECK_THROWS_AS(parse_complex("1+"), ConfigError);
    CHECK_THROWS_AS(parse_complex(""), ConfigError);

    CHECK(parse_rational("1/10") == mpq_class(1, 10));
    CHECK(parse_rational("2/4") == mpq_class(1, 2));
    CHECK(parse_rational("0.01") == mpq_class(1, 100));
    CHECK(parse_rational("-1.5e2") == mpq_class(-150));
    CHECK(parse_rational("3") == mpq_class(3));
    CHECK_THROWS_AS(parse_rational("1/0"), ConfigError);
    CHECK_THROWS_AS(parse_rational("x"), ConfigError);
}

TEST_CASE("command line") {
    const char* argv[] = {"qbethe", "--spec", "s.json", "--task", "solve", "--digits", "60", "--z", "0.1+0.2i",
                          "--hbar", "1.3", "--params", "a0_1=0.5", "t1=2i", "--epsilon", "1/7", "--seed", "9",
                          "--out", "dir"};
    auto c = parse_args(20, argv);
    REQUIRE(c);
    CHECK(c->spec == "s.json");
    CHECK(c->task == Task::solve);
    CHECK(c->digits == 60);
    CHECK(c->z == std::vector<std::string>{"0.1+0.2i"});
    CHECK(c->hbar == std::optional<std::string>("1.3"));
    CHECK(c->params.at("a0_1") == "0.5");
    CHECK(c->params.at("t1") == "2i");
    CHECK(c->epsilon == std::vector<std::string>{"1/7"});
    CHECK(c->seed == 9);
    CHECK(c->out == "dir");

    CHECK(config_from_json(to_json(*c)) == *c);

    const char* bad_task[] = {"qbethe", "--spec", "s.json", "--task", "everything"};
    CHECK_THROWS_AS(parse_args(5, bad_task), ConfigError);
    const char* bad_param[] = {"qbethe", "--spec", "s.json", "--params", "noequals"};
    CHECK_THROWS_AS(parse_args(5, bad_param), ConfigError);
    const char* no_spec[] = {"qbethe", "--task", "solve"};
    CHECK_THROWS_AS(parse_args(3, no_spec), ConfigError);
    const char* unknown[] = {"qbethe", "--spec", "s.json", "--frobnicate"};
    CHECK_THROWS_AS(parse_args(4, unknown), ConfigError);
}

TEST_CASE("csv") {
    CsvTable empty{{"a", "b"}, {}};
    CHECK(to_csv(empty) == "a,b\n");
    CHECK(parse_csv(to_csv(empty)) == empty);

    CsvTable t{{"label", "value"}, {{"(2,1)", "x"}, {"say \"hi\"", ""}, {"plain", "1e-5"}}};
    CHECK(parse_csv(to_csv(t)) == t);
    CHECK_THROWS_AS(parse_csv("a,b\n1\n"), IoError);

    PrecisionScope ps(50);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-1000000000L, 1000000000L);
    for (int i = 0; i < 50; ++i) {
        Real x = exp(Real(d(rng)) / 1e8) * Real(d(rng)) / 7;
        CHECK(Real(format_real(x)) == x);
    }
}

TEST_CASE("certify Hilb(3)") {
    auto r = run(job(source("specs/hilb3.json"), Task::certify, "hilb3"));
    CHECK(r.exit_code == 0);
    auto certs = ojson::parse(read_file(scratch("hilb3").string() + "/certificates.json"));
    CHECK(certs["components"].size() == 3);
    for (const auto& c : certs["components"]) {
        CHECK(c["polynomial"]["passed"].get<bool>());
        CHECK(c["closed_form"]["passed"].get<bool>());
        CHECK(c["weight_bound"].size() == 2);
    }
    CHECK(certs["triangularity"]["order"] == "dominance");
    CHECK(certs["triangularity"]["points"].size() == 3);
}

TEST_CASE("bad inputs") {
    auto r = run(job(source("tests/data/dangling_edge.json"), Task::certify, "bad"));
    CHECK(r.exit_code == 2);
    CHECK(r.message.find("edges[1]") != std::string::npos);

    auto c = job(source("specs/a1_v1_w2.json"), Task::solve, "badparam");
    c.params["nope"] = "1";
    CHECK(run(c).exit_code == 2);

    auto missing = job(source("specs/does_not_exist.json"), Task::solve, "missing");
    CHECK(run(missing).exit_code == 2);
}

TEST_CASE("solve A1(1,2): root table") {
    PrecisionScope ps(50);
    auto c = job(source("specs/a1_v1_w2.json"), Task::solve, "a1");
    int code = -1;
    Report rep = build_report(c, code);
    CHECK(code == 0);
    const auto& roots = table(rep, "roots.csv");
    REQUIRE(roots.rows.size() == 2);
    for (const auto& row : roots.rows) CHECK(Real(row[5]) < Real("1e-40"));

    // the same solve done directly gives bit-identical values
    auto q = load_quiver_spec(c.spec);
    auto sys = bethe_equations(tangent_class(q));
    SolveOptions o;
    o.digits = 50;
    auto direct = solve(sys, NumericParams::generic(q, c.seed), enumerate_fixed(q), {Complex(Real("1e-3"))}, o);
    for (std::size_t i = 0; i < 2; ++i) {
        auto x = direct.tracks[i].roots()[0];
        CHECK(Real(roots.rows[i][3]) == Real(x.re, 50));
        CHECK(Real(roots.rows[i][4]) == Real(x.im, 50));
        CHECK(format_real(Real(roots.rows[i][3])) == roots.rows[i][3]);
    }

    // written file re-parses to the same table
    auto files = emit_report(rep, c.out);
    CHECK(parse_csv(read_file(c.out + "/roots.csv")) == roots);
    CHECK(files.back() == c.out + "/manifest.json");

    auto m = document(rep, "manifest.json");
    CHECK(m["conventions"]["r_matrix"] == r_matrix_convention_id());
    CHECK(m["conventions"]["twist"] == "diag((-1)^N z,1)");
    CHECK(m["tasks"]["solve"]["status"] == "pass");
    CHECK(Real(m["tasks"]["solve"]["max_yang_yang_gradient"].get<std::string>()) < Real("1e-3"));
    CHECK(m["config"]["seed"] == 1);
}

TEST_CASE("empty result set") {
    auto spec = write_spec(QuiverModel::a1(0, 2), "a1_0_2.json");
    auto c = job(spec, Task::solve, "empty");
    auto r = run(c);
    CHECK(r.exit_code == 0);
    CHECK(read_file(c.out + "/roots.csv") == "component,vertex,index,re,im,residual,round_trip,steps,ok,note\n");
}

TEST_CASE("determinism") {
    auto c = job(source("specs/a1_v1_w2.json"), Task::all, "det");
    c.z = {"polar:0.5,0.7"};
    // seed 1 puts q chi within 0.03 of a q-lattice point at q = 0.9 for one root (pre-asymptotic saddle)
    c.seed = 5;
    int c1 = -1, c2 = -1;
    Report a = build_report(c, c1), b = build_report(c, c2);
    CHECK(c1 == 0);
    CHECK(c2 == 0);
    REQUIRE(a.tables.size() == b.tables.size());
    for (std::size_t i = 0; i < a.tables.size(); ++i) CHECK(to_csv(a.tables[i].second) == to_csv(b.tables[i].second));
    REQUIRE(a.documents.size() == b.documents.size());
    for (std::size_t i = 0; i < a.documents.size(); ++i) {
        auto x = a.documents[i].second, y = b.documents[i].second;
        x.erase("timings");
        y.erase("timings");
        CHECK(x.dump() == y.dump());
    }
    auto m = document(a, "manifest.json");
    CHECK(m["tasks"]["oracle"]["status"] == "pass");
    CHECK(m["tasks"]["saddle"]["status"] == "pass");
    CHECK(m["conventions"]["gauge"]["consistent"].get<bool>());
    CHECK(table(a, "saddle.csv").rows.size() == 8);
}
