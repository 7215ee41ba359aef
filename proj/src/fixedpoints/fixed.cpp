#include "qb/fixedpoints/fixed.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace qb {

namespace {

int edge_from(const QuiverModel& q, int u) {
    for (std::size_t e = 0; e < q.edges.size(); ++e)
        if (q.edges[e].src == u) return static_cast<int>(e);
    throw std::logic_error("cyclic quiver without an outgoing edge");
}

// Character of box (r, s) in a column framed at vertex i0 with weight a:
// right steps divide by m_u, down steps multiply by hbar * m_{u-1}.
TorusWeight box_character(const QuiverModel& q, int i0, const TorusWeight& a, const Box& b) {
    int l = q.vertices;
    TorusWeight w = a;
    int u = i0;
    for (int s = 1; s < b.col; ++s) {
        w /= q.edge_weight(edge_from(q, u));
        u = (u + 1) % l;
    }
    for (int r = 1; r < b.row; ++r) {
        int prev = (u - 1 + l) % l;
        w *= q.hbar_weight() * q.edge_weight(edge_from(q, prev));
        u = prev;
    }
    return w;
}

}  // namespace

std::string FixedComponent::label() const {
    std::string s;
    for (std::size_t c = 0; c < partitions.size(); ++c) {
        if (c) s += "|";
        s += partitions[c].to_string();
    }
    return s.empty() ? "()" : s;
}

std::map<VarId, TorusWeight> FixedComponent::root_values() const {
    std::map<VarId, TorusWeight> t;
    for (std::size_t i = 0; i < slots.size(); ++i)
        for (std::size_t k = 0; k < slots[i].size(); ++k)
            t[Variables::chern_root(static_cast<int>(i), static_cast<int>(k))] = slots[i][k].character;
    return t;
}

std::map<VarId, TorusWeight> FixedComponent::root_values(const std::vector<std::vector<int>>& perm) const {
    std::map<VarId, TorusWeight> t;
    for (std::size_t i = 0; i < slots.size(); ++i)
        for (std::size_t k = 0; k < slots[i].size(); ++k)
            t[Variables::chern_root(static_cast<int>(i), static_cast<int>(k))] = slots[i][perm[i][k]].character;
    return t;
}

std::function<const TorusWeight*(VarId)> substitution(const std::map<VarId, TorusWeight>& table) {
    return [&table](VarId v) -> const TorusWeight* {
        auto it = table.find(v);
        return it == table.end() ? nullptr : &it->second;
    };
}

std::vector<FixedComponent> enumerate_fixed(const QuiverModel& q) {
    bool a1 = q.is_a1();
    if (!a1 && !q.is_cyclic()) throw std::invalid_argument("enumerate_fixed: quiver '" + q.name + "' is neither cyclic nor A1");
    const int l = q.vertices;
    std::vector<std::pair<int, int>> columns;
    for (int i = 0; i < l; ++i)
        for (int c = 0; c < q.w[i]; ++c) columns.emplace_back(i, c);

    auto counts_of = [&](const Partition& p, int i0) {
        std::vector<int> cnt(l, 0);
        for (const auto& b : p.boxes()) cnt[((i0 + b.content()) % l + l) % l]++;
        return cnt;
    };

    std::vector<FixedComponent> out;
    std::vector<Partition> chosen(columns.size());
    std::vector<int> used(l, 0);
    int total = q.total_v();
    std::function<void(std::size_t, int)> rec = [&](std::size_t c, int placed) {
        if (c == columns.size()) {
            if (used != q.v) return;
            FixedComponent f;
            f.columns = columns;
            f.partitions = chosen;
            f.slots.resize(l);
            for (std::size_t cc = 0; cc < columns.size(); ++cc) {
                auto [i0, lc] = columns[cc];
                TorusWeight a = q.framing_weight(i0, lc);
                for (const auto& b : chosen[cc].boxes()) {
                    int vert = ((i0 + b.content()) % l + l) % l;
                    f.slots[vert].push_back({static_cast<int>(cc), b, a1 ? a : box_character(q, i0, a, b)});
                }
            }
            for (auto& s : f.slots)
                std::sort(s.begin(), s.end(), [](const SlotData& x, const SlotData& y) {
                    return std::make_tuple(x.column, x.box.content(), x.box.row) <
                           std::make_tuple(y.column, y.box.content(), y.box.row);
                });
            out.push_back(std::move(f));
            return;
        }
        int i0 = columns[c].first;
        int maxn = total - placed;
        if (a1) maxn = std::min(maxn, 1);
        for (int n = 0; n <= maxn; ++n)
            for (const auto& p : Partition::all(n)) {
                auto cnt = counts_of(p, i0);
                bool ok = true;
                for (int i = 0; i < l; ++i)
                    if (used[i] + cnt[i] > q.v[i]) ok = false;
                if (!ok) continue;
                for (int i = 0; i < l; ++i) used[i] += cnt[i];
                chosen[c] = p;
                rec(c + 1, placed + n);
                for (int i = 0; i < l; ++i) used[i] -= cnt[i];
            }
    };
    rec(0, 0);
    return out;
}

KClass v_character(const QuiverModel& q, const FixedComponent& f) {
    if (!(q.vertices == 1 && q.is_cyclic() && q.w[0] == 1))
        throw std::invalid_argument("v_character: Jordan quiver with w = 1 required");
    KClass k;
    for (const auto& s : f.slots[0]) k.add(s.character);
    return k;
}

}  // namespace qb
