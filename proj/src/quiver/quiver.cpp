#include "qb/quiver/quiver.hpp"

#include "qb/symkit/transforms.hpp"

namespace qb {

void QuiverModel::validate() const {
    if (vertices <= 0) throw SpecError("vertices: must be positive");
    if (static_cast<int>(v.size()) != vertices) throw SpecError("v: expected " + std::to_string(vertices) + " entries");
    if (static_cast<int>(w.size()) != vertices) throw SpecError("w: expected " + std::to_string(vertices) + " entries");
    for (int i = 0; i < vertices; ++i) {
        if (v[i] < 0) throw SpecError("v[" + std::to_string(i) + "]: negative dimension");
        if (w[i] < 0) throw SpecError("w[" + std::to_string(i) + "]: negative dimension");
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto& ed = edges[e];
        auto bad = [&](const char* end, int value) {
            return SpecError("edges[" + std::to_string(e) + "] (" + std::to_string(ed.src) + " -> " +
                             std::to_string(ed.dst) + "): " + end + " vertex " + std::to_string(value) +
                             " does not exist");
        };
        if (ed.src < 0 || ed.src >= vertices) throw bad("source", ed.src);
        if (ed.dst < 0 || ed.dst >= vertices) throw bad("target", ed.dst);
        if (!ed.param.empty()) {
            TorusWeight m = TorusWeight::parse(ed.param);
            if (!m.is_g_trivial()) throw SpecError("edges[" + std::to_string(e) + "].param: involves a Chern root");
        }
    }
    if (static_cast<int>(framing.size()) != vertices) throw SpecError("framing: expected one list per vertex");
    for (int i = 0; i < vertices; ++i) {
        if (static_cast<int>(framing[i].size()) != w[i])
            throw SpecError("framing[" + std::to_string(i) + "]: expected " + std::to_string(w[i]) + " weights");
        for (std::size_t l = 0; l < framing[i].size(); ++l) {
            TorusWeight a;
            try {
                a = TorusWeight::parse(framing[i][l]);
            } catch (const std::exception& ex) {
                throw SpecError("framing[" + std::to_string(i) + "][" + std::to_string(l) + "]: " + ex.what());
            }
            if (!a.is_g_trivial())
                throw SpecError("framing[" + std::to_string(i) + "][" + std::to_string(l) + "]: involves a Chern root");
        }
    }
    if (hbar.empty()) throw SpecError("hbar: empty name");
}

TorusWeight QuiverModel::hbar_weight() const { return TorusWeight::parameter(hbar); }

TorusWeight QuiverModel::edge_weight(std::size_t e) const {
    return edges.at(e).param.empty() ? TorusWeight{} : TorusWeight::parse(edges[e].param);
}

TorusWeight QuiverModel::framing_weight(int i, int l) const { return TorusWeight::parse(framing.at(i).at(l)); }

std::vector<std::vector<VarId>> QuiverModel::root_groups() const {
    std::vector<std::vector<VarId>> g(vertices);
    for (int i = 0; i < vertices; ++i)
        for (int k = 0; k < v[i]; ++k) g[i].push_back(Variables::chern_root(i, k));
    return g;
}

int QuiverModel::total_v() const {
    int t = 0;
    for (int x : v) t += x;
    return t;
}

bool QuiverModel::is_cyclic() const {
    if (static_cast<int>(edges.size()) != vertices) return false;
    std::vector<bool> seen(vertices, false);
    for (const auto& e : edges) {
        if (e.dst != (e.src + 1) % vertices || seen[e.src]) return false;
        seen[e.src] = true;
    }
    return true;
}

bool QuiverModel::is_a1() const { return vertices == 1 && edges.empty(); }

QuiverModel QuiverModel::hilbert(int n) {
    QuiverModel q;
    q.name = "hilb" + std::to_string(n);
    q.vertices = 1;
    q.edges = {{0, 0, "t1"}};
    q.v = {n};
    q.w = {1};
    q.framing = {{"1"}};
    q.sigma = {{"t1", -1}};
    return q;
}

QuiverModel QuiverModel::a1(int v, int w) {
    QuiverModel q;
    q.name = "a1_v" + std::to_string(v) + "_w" + std::to_string(w);
    q.vertices = 1;
    q.v = {v};
    q.w = {w};
    q.framing.resize(1);
    for (int l = 0; l < w; ++l) {
        q.framing[0].push_back("a0_" + std::to_string(l + 1));
        q.sigma["a0_" + std::to_string(l + 1)] = l + 1;
    }
    return q;
}

QuiverModel QuiverModel::cyclic(int l, std::vector<int> v, std::vector<int> w) {
    QuiverModel q;
    q.name = "cyclic" + std::to_string(l);
    q.vertices = l;
    for (int i = 0; i < l; ++i) {
        q.edges.push_back({i, (i + 1) % l, "m" + std::to_string(i)});
        q.sigma["m" + std::to_string(i)] = -1;
    }
    q.v = std::move(v);
    q.w = std::move(w);
    q.framing.resize(l);
    int idx = 0;
    for (int i = 0; i < l; ++i)
        for (int c = 0; c < q.w[i]; ++c) {
            std::string name = "a" + std::to_string(i) + "_" + std::to_string(c + 1);
            q.framing[i].push_back(name);
            q.sigma[name] = 1000 * (++idx);
        }
    return q;
}

int cartan_form(const QuiverModel& q, const std::vector<int>& u, const std::vector<int>& u2) {
    int s = 0;
    for (const auto& e : q.edges) s += u.at(e.src) * u2.at(e.dst);
    return s;
}

int half_dim(const QuiverModel& q, const std::vector<int>& v, const std::vector<int>& w) {
    int s = cartan_form(q, v, v);
    for (int i = 0; i < q.vertices; ++i) s += v.at(i) * (w.at(i) - v.at(i));
    return s;
}

OrientedClass rep_weights(const QuiverModel& q) {
    OrientedClass c;
    TorusWeight h = q.hbar_weight();
    for (std::size_t e = 0; e < q.edges.size(); ++e) {
        const auto& ed = q.edges[e];
        TorusWeight m = q.edge_weight(e);
        for (int k = 0; k < q.v[ed.src]; ++k)
            for (int l = 0; l < q.v[ed.dst]; ++l) {
                TorusWeight xi = QuiverModel::root(ed.src, k), xj = QuiverModel::root(ed.dst, l);
                c.add({xi, m * xj});
                c.add({h * m * xj, xi});
            }
    }
    for (int i = 0; i < q.vertices; ++i)
        for (int l = 0; l < q.w[i]; ++l) {
            TorusWeight a = q.framing_weight(i, l);
            for (int k = 0; k < q.v[i]; ++k) {
                TorusWeight x = QuiverModel::root(i, k);
                c.add({a, x});
                c.add({h * x, a});
            }
        }
    return c;
}

OrientedClass polarization(const QuiverModel& q) {
    OrientedClass c;
    for (std::size_t e = 0; e < q.edges.size(); ++e) {
        const auto& ed = q.edges[e];
        TorusWeight m = q.edge_weight(e);
        for (int k = 0; k < q.v[ed.src]; ++k)
            for (int l = 0; l < q.v[ed.dst]; ++l) c.add({QuiverModel::root(ed.src, k), m * QuiverModel::root(ed.dst, l)});
    }
    for (int i = 0; i < q.vertices; ++i)
        for (int l = 0; l < q.w[i]; ++l)
            for (int k = 0; k < q.v[i]; ++k) c.add({q.framing_weight(i, l), QuiverModel::root(i, k)});
    for (int i = 0; i < q.vertices; ++i)
        for (int k = 0; k < q.v[i]; ++k)
            for (int l = 0; l < q.v[i]; ++l) c.add({QuiverModel::root(i, k), QuiverModel::root(i, l)}, -1);
    return c;
}

KClass adjoint_character(const QuiverModel& q) {
    KClass c;
    for (int i = 0; i < q.vertices; ++i)
        for (int k = 0; k < q.v[i]; ++k)
            for (int l = 0; l < q.v[i]; ++l) c.add(QuiverModel::root(i, l) / QuiverModel::root(i, k));
    return c;
}

KClass tangent_character(const QuiverModel& q) {
    KClass adj = adjoint_character(q);
    return rep_weights(q).character() - adj - adj * q.hbar_weight().inverse();
}

FactoredRational delta_hbar(const QuiverModel& q) {
    FactoredRational d;
    TorusWeight h = q.hbar_weight();
    for (int i = 0; i < q.vertices; ++i)
        for (int k = 0; k < q.v[i]; ++k)
            for (int l = 0; l < q.v[i]; ++l)
                d *= FactoredRational::binomial(TorusWeight{}, h * QuiverModel::root(i, k) / QuiverModel::root(i, l));
    return d;
}

FactoredRational pi_factor(const QuiverModel& q) {
    FactoredRational p;
    TorusWeight h = q.hbar_weight();
    for (int i = 0; i < q.vertices; ++i)
        for (int k = 0; k < q.v[i]; ++k)
            for (int l = 0; l < q.w[i]; ++l)
                p *= FactoredRational::binomial(TorusWeight{}, h * QuiverModel::root(i, k) / q.framing_weight(i, l));
    return p;
}

FactoredRational pi_prime(const QuiverModel& q) {
    FactoredRational p;
    TorusWeight half_h = q.hbar_weight().sqrt();
    for (int i = 0; i < q.vertices; ++i)
        for (int k = 0; k < q.v[i]; ++k)
            for (int l = 0; l < q.w[i]; ++l)
                p *= FactoredRational(half_h) *
                     FactoredRational::binomial(TorusWeight{}, QuiverModel::root(i, k) / q.framing_weight(i, l));
    return p;
}

FactoredRational baxter_eigenvalue(const QuiverModel& q) { return pi_prime(q) / pi_factor(q); }

}  // namespace qb
