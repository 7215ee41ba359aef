#include "qb/quiver/spec_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qb {

using ojson = nlohmann::ordered_json;

namespace {

template <class T>
T field(const ojson& j, const char* key, const std::string& where) {
    if (!j.contains(key)) throw SpecError(where + ": missing field '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& ex) {
        throw SpecError(where + "." + key + ": " + ex.what());
    }
}

}  // namespace

QuiverModel parse_quiver_spec(const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw SpecError(std::string("spec: malformed JSON at byte ") + std::to_string(ex.byte) + ": " + ex.what());
    }
    if (!j.is_object()) throw SpecError("spec: top level must be an object");
    QuiverModel q;
    q.name = j.value("name", std::string{});
    q.vertices = field<int>(j, "vertices", "spec");
    if (j.contains("edges")) {
        const auto& es = j.at("edges");
        if (!es.is_array()) throw SpecError("spec.edges: must be an array");
        for (std::size_t e = 0; e < es.size(); ++e) {
            std::string where = "edges[" + std::to_string(e) + "]";
            QuiverEdge ed;
            ed.src = field<int>(es[e], "src", where);
            ed.dst = field<int>(es[e], "dst", where);
            ed.param = es[e].value("param", std::string{});
            q.edges.push_back(ed);
        }
    }
    q.v = field<std::vector<int>>(j, "v", "spec");
    q.w = field<std::vector<int>>(j, "w", "spec");
    q.hbar = j.value("hbar", std::string("h"));
    if (j.contains("framing")) {
        q.framing = field<std::vector<std::vector<std::string>>>(j, "framing", "spec");
    } else {
        q.framing.resize(q.w.size());
        for (std::size_t i = 0; i < q.w.size(); ++i)
            for (int l = 0; l < q.w[i]; ++l) q.framing[i].push_back("a" + std::to_string(i) + "_" + std::to_string(l + 1));
    }
    if (j.contains("sigma")) q.sigma = field<std::map<std::string, int>>(j, "sigma", "spec");
    q.validate();
    return q;
}

QuiverModel load_quiver_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open spec file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_quiver_spec(ss.str());
    } catch (const SpecError& ex) {
        throw SpecError(path + ": " + ex.what());
    }
}

std::string write_quiver_spec(const QuiverModel& q) {
    ojson j;
    j["name"] = q.name;
    j["vertices"] = q.vertices;
    j["edges"] = ojson::array();
    for (const auto& e : q.edges) {
        ojson je;
        je["src"] = e.src;
        je["dst"] = e.dst;
        if (!e.param.empty()) je["param"] = e.param;
        j["edges"].push_back(je);
    }
    j["v"] = q.v;
    j["w"] = q.w;
    j["hbar"] = q.hbar;
    j["framing"] = q.framing;
    if (!q.sigma.empty()) {
        ojson s = ojson::object();
        for (const auto& [k, val] : q.sigma) s[k] = val;
        j["sigma"] = s;
    }
    return j.dump(2) + "\n";
}

}  // namespace qb
