#include "qb/cli/config.hpp"

#include <fstream>
#include <iostream>
#include <regex>

#include "CLI11.hpp"

namespace qb::cli {

using ojson = nlohmann::ordered_json;

namespace {

const std::regex& number_re() {
    static const std::regex re(R"([+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?)");
    return re;
}

Real parse_real(const std::string& s, const std::string& whole) {
    if (!std::regex_match(s, number_re())) throw ConfigError("bad number '" + s + "' in '" + whole + "'");
    return Real(s);
}

}  // namespace

Task parse_task(const std::string& s) {
    if (s == "certify") return Task::certify;
    if (s == "solve") return Task::solve;
    if (s == "oracle") return Task::oracle;
    if (s == "saddle") return Task::saddle;
    if (s == "all") return Task::all;
    throw ConfigError("unknown task '" + s + "' (certify, solve, oracle, saddle, all)");
}

std::string task_name(Task t) {
    switch (t) {
        case Task::certify: return "certify";
        case Task::solve: return "solve";
        case Task::oracle: return "oracle";
        case Task::saddle: return "saddle";
        case Task::all: return "all";
    }
    return "all";
}

Complex parse_complex(const std::string& s) {
    if (s.rfind("polar:", 0) == 0) {
        auto body = s.substr(6);
        auto comma = body.find(',');
        if (comma == std::string::npos) throw ConfigError("polar value needs 'polar:r,theta': '" + s + "'");
        return polar(parse_real(body.substr(0, comma), s), parse_real(body.substr(comma + 1), s));
    }
    if (s.empty()) throw ConfigError("empty complex value");
    if (s.back() != 'i') return Complex(parse_real(s, s));
    std::string body = s.substr(0, s.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t p = body.size(); p-- > 1;)
        if ((body[p] == '+' || body[p] == '-') && body[p - 1] != 'e' && body[p - 1] != 'E') {
            split = p;
            break;
        }
    auto imag = [&](const std::string& t) {
        if (t.empty() || t == "+") return Real(1);
        if (t == "-") return Real(-1);
        return parse_real(t, s);
    };
    if (split == std::string::npos) return Complex(Real(0), imag(body));
    return Complex(parse_real(body.substr(0, split), s), imag(body.substr(split)));
}

mpq_class parse_rational(const std::string& s) {
    static const std::regex frac(R"(([+-]?\d+)/(\d+))");
    std::smatch m;
    if (std::regex_match(s, m, frac)) {
        if (m[2] == "0" || std::stoll(m[2]) == 0) throw ConfigError("zero denominator in '" + s + "'");
        mpq_class r(m[1].str() + "/" + m[2].str());
        r.canonicalize();
        return r;
    }
    static const std::regex dec(R"(([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?)");
    if (!std::regex_match(s, m, dec) || (m[2].length() == 0 && m[3].length() == 0))
        throw ConfigError("bad rational '" + s + "'");
    std::string digits = m[2].str() + m[3].str();
    long exp10 = (m[4].matched ? std::stol(m[4]) : 0) - static_cast<long>(m[3].length());
    mpz_class num(digits.empty() ? "0" : digits), ten = 10, scale;
    mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(std::labs(exp10)));
    mpq_class r = exp10 >= 0 ? mpq_class(num * scale) : mpq_class(num, scale);
    r.canonicalize();
    return m[1] == "-" ? mpq_class(-r) : r;
}

void JobConfig::validate() const {
    if (spec.empty()) throw ConfigError("--spec is required");
    if (digits < 20 || digits > 2000) throw ConfigError("--digits must be in [20, 2000]");
    if (saddle_digits < 20) throw ConfigError("saddle_digits must be at least 20");
    if (z.empty()) throw ConfigError("--z needs at least one value");
    for (const auto& v : z) {
        if (parse_complex(v) == Complex()) throw ConfigError("--z must be nonzero");
    }
    if (hbar) parse_complex(*hbar);
    for (const auto& [k, v] : params) {
        if (k.empty()) throw ConfigError("--params: empty name");
        parse_complex(v);
    }
    for (const auto& e : epsilon)
        if (parse_rational(e) <= 0) throw ConfigError("--epsilon must be positive: '" + e + "'");
    for (const auto& v : q) {
        Real r = parse_real(v, v);
        if (!(r > 0 && r < 1)) throw ConfigError("saddle q must lie in (0, 1): '" + v + "'");
    }
    if (out.empty()) throw ConfigError("--out must not be empty");
}

ojson to_json(const JobConfig& c) {
    ojson j;
    j["spec"] = c.spec;
    j["task"] = task_name(c.task);
    j["digits"] = c.digits;
    j["z"] = c.z;
    j["hbar"] = c.hbar ? ojson(*c.hbar) : ojson(nullptr);
    j["params"] = ojson::object();
    for (const auto& [k, v] : c.params) j["params"][k] = v;
    j["epsilon"] = c.epsilon;
    j["q"] = c.q;
    j["saddle_digits"] = c.saddle_digits;
    j["seed"] = c.seed;
    j["out"] = c.out;
    return j;
}

JobConfig config_from_json(const ojson& j) {
    JobConfig c;
    try {
        c.spec = j.value("spec", c.spec);
        c.task = parse_task(j.value("task", task_name(c.task)));
        c.digits = j.value("digits", c.digits);
        c.z = j.value("z", c.z);
        if (j.contains("hbar") && !j["hbar"].is_null()) c.hbar = j["hbar"].get<std::string>();
        if (j.contains("params")) c.params = j["params"].get<std::map<std::string, std::string>>();
        c.epsilon = j.value("epsilon", c.epsilon);
        c.q = j.value("q", c.q);
        c.saddle_digits = j.value("saddle_digits", c.saddle_digits);
        c.seed = j.value("seed", c.seed);
        c.out = j.value("out", c.out);
    } catch (const nlohmann::json::exception& ex) {
        throw ConfigError(std::string("config: ") + ex.what());
    }
    return c;
}

std::optional<JobConfig> parse_args(int argc, const char* const* argv) {
    CLI::App app{"qbethe: weight functions, Bethe equations and their checks for quiver varieties"};
    std::string config_path, task, hbar;
    std::vector<std::string> z, params, epsilon;
    unsigned digits = 0;
    std::uint64_t seed = 0;
    std::string spec, out;
    app.add_option("--config", config_path, "JSON job config or a previous manifest.json; flags override it");
    app.add_option("--spec", spec, "quiver spec (JSON)");
    app.add_option("--task", task, "certify | solve | oracle | saddle | all");
    app.add_option("--digits", digits, "working precision in decimal digits");
    app.add_option("--z", z, "Kahler parameters, one per vertex (complex literals)");
    app.add_option("--hbar", hbar, "value of hbar");
    app.add_option("--params", params, "name=value for equivariant parameters");
    app.add_option("--epsilon", epsilon, "slopes for the weight bound (rationals)");
    app.add_option("--seed", seed, "seed for random parameters and check points");
    app.add_option("--out", out, "output directory");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return std::nullopt;
    } catch (const CLI::ParseError& ex) {
        throw ConfigError(ex.what());
    }

    JobConfig c;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw ConfigError("cannot open config " + config_path);
        try {
            auto j = ojson::parse(in);
            // a whole manifest is accepted too
            c = config_from_json(j.contains("config") && j["config"].is_object() ? j["config"] : j);
        } catch (const nlohmann::json::parse_error& ex) {
            throw ConfigError(config_path + ": " + ex.what());
        }
    }
    if (!spec.empty()) c.spec = spec;
    if (!task.empty()) c.task = parse_task(task);
    if (app.count("--digits")) c.digits = digits;
    if (!z.empty()) c.z = z;
    if (app.count("--hbar")) c.hbar = hbar;
    for (const auto& kv : params) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw ConfigError("--params expects name=value, got '" + kv + "'");
        c.params[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    if (!epsilon.empty()) c.epsilon = epsilon;
    if (app.count("--seed")) c.seed = seed;
    if (!out.empty()) c.out = out;
    c.validate();
    return c;
}

}  // namespace qb::cli
