#include "qb/cli/run.hpp"

#include <mpfr.h>

#include <boost/version.hpp>
#include <chrono>
#include <random>

#include "qb/bethe/solver.hpp"
#include "qb/bethe/yang_yang.hpp"
#include "qb/envelope/certificates.hpp"
#include "qb/oracle/compare.hpp"
#include "qb/qmb/saddle.hpp"
#include "qb/quiver/spec_io.hpp"

namespace qb::cli {

using ojson = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "1.0.0";

bool is_hilbert(const QuiverModel& q) {
    return q.vertices == 1 && q.edges.size() == 1 && q.edges[0].src == 0 && q.edges[0].dst == 0 && q.w == std::vector<int>{1};
}

ojson complex_json(const Complex& c) { return ojson::array({format_real(c.re), format_real(c.im)}); }

NumericParams numeric_params(const QuiverModel& q, const JobConfig& c) {
    auto p = NumericParams::generic(q, c.seed);
    auto put = [&](const std::string& name, const std::string& value) {
        auto v = Variables::find(name);
        if (!v || !p.sqrt_value.count(*v)) throw ConfigError("unknown parameter '" + name + "' for this quiver");
        p.set(name, parse_complex(value));
    };
    if (c.hbar) put(q.hbar, *c.hbar);
    for (const auto& [k, v] : c.params) put(k, v);
    return p;
}

std::vector<Complex> kahler(const QuiverModel& q, const JobConfig& c) {
    if (c.z.size() != 1 && static_cast<int>(c.z.size()) != q.vertices)
        throw ConfigError("--z needs 1 or " + std::to_string(q.vertices) + " values");
    std::vector<Complex> z;
    for (int i = 0; i < q.vertices; ++i) z.push_back(parse_complex(c.z[c.z.size() == 1 ? 0 : i]));
    return z;
}

std::vector<Complex> spectral_points(std::uint64_t seed, int n) {
    std::mt19937_64 rng(seed ^ 0x5bd1e995);
    std::uniform_int_distribution<int> mod(60, 160), ang(1, 999);
    std::vector<Complex> u;
    for (int k = 0; k < n; ++k)
        u.push_back(polar(to_real(mpq_class(mod(rng), 100)), 2 * pi() * to_real(mpq_class(ang(rng), 1000))));
    return u;
}

struct Context {
    const JobConfig& config;
    QuiverModel quiver;
    NumericParams params;
    std::vector<Complex> z;
    std::vector<FixedComponent> fixed;
    std::optional<BetheSystem> system;
    std::optional<SolveReport> solved;
    Report report;
    ojson conventions = ojson::object();
    ojson tasks = ojson::object();
    ojson timings = ojson::object();
    bool failed = false;

    const BetheSystem& sys() {
        if (!system) system = bethe_equations(tangent_class(quiver));
        return *system;
    }
    const SolveReport& solution() {
        if (!solved) {
            SolveOptions o;
            o.digits = config.digits;
            solved = solve(sys(), params, fixed, z, o);
        }
        return *solved;
    }
    void finish(const std::string& task, bool ok, ojson detail = ojson::object()) {
        ojson t;
        t["status"] = ok ? "pass" : "fail";
        for (auto& [k, v] : detail.items()) t[k] = v;
        tasks[task] = t;
        failed = failed || !ok;
    }
};

void certify(Context& cx) {
    const auto& q = cx.quiver;
    ojson comps = ojson::array();
    bool ok = true, all_poly = true;
    std::vector<WeightFunction> wfs;
    std::vector<RationalFunction> ss;
    std::vector<mpq_class> eps;
    for (const auto& e : cx.config.epsilon) eps.push_back(parse_rational(e));

    for (const auto& f : cx.fixed) {
        ojson entry;
        entry["component"] = f.label();
        auto wf = build_weight_function(q, f);
        auto pc = check_polynomial(wf);
        entry["polynomial"] = {{"passed", pc.passed}, {"witness", pc.witness}};
        ok = ok && pc.passed;
        all_poly = all_poly && pc.passed;
        if (is_hilbert(q)) {
            auto hc = check_polynomial(hilbert_weight_function(q, f));
            auto r = hc.passed && pc.passed ? monomial_ratio(pc.s, hc.s) : std::nullopt;
            entry["closed_form"] = {{"passed", r.has_value()}, {"ratio", r ? r->to_string() : std::string()}};
            ok = ok && r.has_value();
        }
        ojson bounds = ojson::array();
        if (pc.passed) {
            for (std::size_t k = 0; k < eps.size(); ++k) {
                auto wb = check_weight_bound(wf, pc.s.numerator, eps[k]);
                ojson witness = ojson::array();
                for (const auto& c : wb.witness) witness.push_back(c.get_str());
                bounds.push_back({{"epsilon", cx.config.epsilon[k]},
                                  {"passed", wb.passed},
                                  {"det_power", wb.det_power},
                                  {"witness", witness},
                                  {"detail", wb.detail}});
                ok = ok && wb.passed;
            }
        }
        entry["weight_bound"] = bounds;
        comps.push_back(entry);
        wfs.push_back(std::move(wf));
        ss.push_back(pc.s);
    }

    ojson tri = ojson::object();
    FixedOrder order;
    if (is_hilbert(q)) {
        order = dominance_leq;
        tri["order"] = "dominance";
    } else if (q.is_a1()) {
        order = subset_leq;
        tri["order"] = "subset";
    } else {
        tri["order"] = nullptr;
        tri["note"] = "no declared order for this quiver; not checked";
    }
    ojson points = ojson::array();
    if (order && all_poly) {
        for (std::uint64_t k = 0; k < 3; ++k) {
            auto pt = ParameterPoint::random(q, cx.config.seed + k);
            auto m = restriction_matrix(wfs, ss, order, pt);
            points.push_back({{"point", pt.to_string()},
                              {"triangular", m.triangular},
                              {"nonzero_diagonal", m.nonzero_diagonal},
                              {"witness", m.witness}});
            ok = ok && m.triangular && m.nonzero_diagonal;
        }
    }
    tri["points"] = points;

    ojson doc;
    doc["components"] = comps;
    doc["triangularity"] = tri;
    cx.report.documents.emplace_back("certificates.json", doc);
    cx.finish("certify", ok, {{"components", cx.fixed.size()}});
}

void solve_task(Context& cx) {
    const auto& rep = cx.solution();
    CsvTable t;
    t.header = {"component", "vertex", "index", "re", "im", "residual", "round_trip", "steps", "ok", "note"};
    const auto& sys = cx.sys();
    for (const auto& tr : rep.tracks) {
        auto x = tr.roots();
        for (std::size_t k = 0; k < x.size(); ++k)
            t.rows.push_back({tr.component, std::to_string(sys.vertex_of[k]), std::to_string(k), format_real(x[k].re),
                              format_real(x[k].im), format_real(tr.residual), format_real(tr.round_trip),
                              std::to_string(tr.steps), tr.ok ? "1" : "0", tr.note});
    }
    cx.report.tables.emplace_back("roots.csv", t);

    // Yang-Yang criticality at 30 digits, step 1e-5; reported only, since at small |z| the
    // roots approach Li2 branch points and the step no longer resolves W
    std::vector<std::vector<Complex>> roots;
    bool ok = rep.distinct == cx.fixed.size();
    for (const auto& tr : rep.tracks) {
        roots.push_back(tr.u);
        ok = ok && tr.ok;
    }
    auto crit = criticality_check(sys, cx.params, roots, cx.z);
    cx.finish("solve", ok,
              {{"expected", cx.fixed.size()},
               {"distinct", rep.distinct},
               {"max_residual", format_real(rep.max_residual)},
               {"max_round_trip", format_real(rep.max_round_trip)},
               {"max_yang_yang_gradient", format_real(crit.max_gradient)}});
}

void oracle_task(Context& cx) {
    const auto& q = cx.quiver;
    if (!q.is_a1()) {
        cx.tasks["oracle"] = {{"status", "skipped"}, {"note", "the XXZ oracle needs an A1 quiver"}};
        return;
    }
    TwistConvention tw = calibrate_twist().convention;
    ChainState chain = chain_for(q, cx.params);
    auto u = spectral_points(cx.config.seed, 3);
    Real yb = yang_baxter_residual(u[0], u[1], u[2], chain.hbar_sqrt);
    Real comm = commutator_residual(chain, u[0], u[1], cx.z[0], tw);
    bool ok = yb < Real("1e-18") && comm < Real("1e-18");

    CsvTable t;
    t.header = {"component", "residual", "psi_norm", "degenerate"};
    for (const auto& tr : cx.solution().tracks) {
        auto e = eigen_check(chain, tr.roots(), cx.z[0], tw, u);
        t.rows.push_back({tr.component, format_real(e.residual), format_real(e.psi_norm), e.degenerate ? "1" : "0"});
        ok = ok && !e.degenerate && e.residual < Real("1e-10");
    }
    cx.report.tables.emplace_back("eigen.csv", t);

    ojson doc;
    doc["twist"] = tw.id();
    doc["yang_baxter_residual"] = format_real(yb);
    doc["commutator_residual"] = format_real(comm);
    int v = q.total_v();
    if (v > 0) {
        auto g = compare_weight_functions(q, cx.params, random_root_points(v, 4, static_cast<unsigned>(cx.config.seed)),
                                          Real("1e-8"));
        ojson gauge = ojson::object();
        for (std::size_t i = 0; i < g.labels.size(); ++i) gauge[g.labels[i]] = complex_json(g.gauge[i]);
        doc["gauge"] = {{"consistent", g.consistent},
                        {"max_residual", format_real(g.max_residual)},
                        {"outside_sector", format_real(g.outside_sector)},
                        {"factors", gauge},
                        {"note", g.note}};
        cx.conventions["gauge"] = doc["gauge"];

        auto b = baxter_check(q, cx.params, random_root_points(v, 3, static_cast<unsigned>(cx.config.seed + 1)), tw);
        doc["baxter"] = {{"exponent", b.exponent},
                         {"ratio_residual", format_real(b.ratio_residual)},
                         {"vac_residual", format_real(b.vac_residual)},
                         {"convention", b.convention}};
        ok = ok && b.ratio_residual < Real("1e-10");
    }
    cx.report.documents.emplace_back("oracle.json", doc);
    cx.finish("oracle", ok);
}

void saddle_task(Context& cx) {
    std::vector<Real> qs;
    for (const auto& s : cx.config.q) qs.push_back(Real(s));
    CsvTable t;
    t.header = {"component", "q", "root", "residual", "max", "slope"};
    ojson summary = ojson::array();
    bool ok = true;
    const auto& sys = cx.sys();
    for (const auto& tr : cx.solution().tracks) {
        if (!tr.ok) {
            ok = false;
            summary.push_back({{"component", tr.component}, {"error", "root not solved"}});
            continue;
        }
        try {
            auto rows = saddle_residual(sys, cx.params, tr.u, cx.z, qs, cx.config.saddle_digits);
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t k = 0; k < rows[r].per_root.size(); ++k)
                    t.rows.push_back({tr.component, cx.config.q[r], std::to_string(k), format_real(rows[r].per_root[k]),
                                      format_real(rows[r].max), format_real(rows[r].slope)});
            bool conv = saddle_converges(rows);
            ojson slopes = ojson::array();
            for (const auto& r : rows) slopes.push_back(format_real(r.slope));
            summary.push_back({{"component", tr.component}, {"converges", conv}, {"slopes", slopes}});
            ok = ok && conv;
        } catch (const PoleCollision& ex) {
            ok = false;
            summary.push_back({{"component", tr.component}, {"error", ex.what()}});
        }
    }
    cx.report.tables.emplace_back("saddle.csv", t);
    cx.finish("saddle", ok, {{"roots", summary}});
}

template <class F>
void timed(Context& cx, const std::string& name, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    cx.timings[name + "_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

Report build_report(const JobConfig& config, int& exit_code) {
    config.validate();
    PrecisionScope ps(config.digits);
    Context cx{config, load_quiver_spec(config.spec), {}, {}, {}, {}, {}, {}};
    cx.params = numeric_params(cx.quiver, config);
    cx.z = kahler(cx.quiver, config);
    cx.fixed = enumerate_fixed(cx.quiver);

    auto t = config.task;
    auto want = [&](Task k) { return t == Task::all || t == k; };
    if (want(Task::certify)) timed(cx, "certify", [&] { certify(cx); });
    if (want(Task::solve)) timed(cx, "solve", [&] { solve_task(cx); });
    if (want(Task::oracle)) timed(cx, "oracle", [&] { oracle_task(cx); });
    if (want(Task::saddle)) timed(cx, "saddle", [&] { saddle_task(cx); });

    auto cal = calibrate_twist();
    const auto& sys = cx.sys();
    cx.conventions["r_matrix"] = r_matrix_convention_id();
    cx.conventions["twist"] = cal.convention.id();
    cx.conventions["twist_mismatch"] = format_real(cal.mismatch);
    cx.conventions["chain_order"] = "site l carries a_{w-l}";
    cx.conventions["polarization"] = sys.half.to_string();
    cx.conventions["z_sharp"] = "ln z_# = ln z - d ln(-hbar^{1/2}), principal logs";
    cx.conventions["det_shift"] = sys.shift;
    cx.conventions["delta_hbar"] = "prod over same-vertex pairs (k, l), diagonal included";

    std::map<std::string, ojson> by_name;
    for (const auto& [v, s] : cx.params.sqrt_value) by_name[Variables::info(v).name] = complex_json(s * s);
    ojson params = ojson::object();
    for (auto& [k, v] : by_name) params[k] = v;

    ojson m;
    m["tool"] = "qbethe";
    m["version"] = kVersion;
    m["libraries"] = {{"gmp", gmp_version}, {"mpfr", mpfr_get_version()}, {"boost", BOOST_LIB_VERSION}};
    m["config"] = to_json(config);
    m["quiver"] = ojson::parse(write_quiver_spec(cx.quiver));
    m["parameters"] = params;
    ojson z = ojson::array();
    for (const auto& c : cx.z) z.push_back(complex_json(c));
    m["z"] = z;
    m["conventions"] = cx.conventions;
    m["tasks"] = cx.tasks;
    ojson files = ojson::array();
    for (const auto& [n, _] : cx.report.tables) files.push_back(n);
    for (const auto& [n, _] : cx.report.documents) files.push_back(n);
    files.push_back("manifest.json");
    m["files"] = files;
    m["timings"] = cx.timings;
    cx.report.documents.emplace_back("manifest.json", m);

    exit_code = cx.failed ? 1 : 0;
    return std::move(cx.report);
}

RunResult run(const JobConfig& config) {
    RunResult r;
    try {
        Report rep = build_report(config, r.exit_code);
        r.files = emit_report(rep, config.out);
        r.message = r.exit_code == 0 ? "all checks passed" : "some checks failed; see manifest.json";
    } catch (const SpecError& ex) {
        r.exit_code = 2;
        r.message = std::string("spec error: ") + ex.what();
    } catch (const ConfigError& ex) {
        r.exit_code = 2;
        r.message = std::string("config error: ") + ex.what();
    } catch (const IoError& ex) {
        r.exit_code = 3;
        r.message = std::string("I/O error: ") + ex.what();
    } catch (const std::invalid_argument& ex) {
        // non-generic sigma, malformed weights
        r.exit_code = 2;
        r.message = std::string("invalid input: ") + ex.what();
    }
    return r;
}

}  // namespace qb::cli
