#include "qb/symkit/variables.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace qb {
namespace {

struct Table {
    std::shared_mutex mutex;
    std::deque<VarInfo> infos;  // deque: references stay valid on growth
    std::unordered_map<std::string, VarId> by_name;
};

Table& table() {
    static Table t;
    return t;
}

VarId intern(VarInfo info) {
    auto& t = table();
    {
        std::shared_lock lock(t.mutex);
        if (auto it = t.by_name.find(info.name); it != t.by_name.end()) return it->second;
    }
    std::unique_lock lock(t.mutex);
    if (auto it = t.by_name.find(info.name); it != t.by_name.end()) return it->second;
    if (t.infos.size() >= kMaxVars)
        throw std::length_error("symbol table full: cannot intern '" + info.name + "'");
    auto id = static_cast<VarId>(t.infos.size());
    t.by_name.emplace(info.name, id);
    t.infos.push_back(std::move(info));
    return id;
}

}  // namespace

VarId Variables::parameter(std::string_view name) {
    if (name.empty()) throw std::invalid_argument("empty parameter name");
    if (name.front() == 'x' && name.find('_') != std::string_view::npos)
        throw std::invalid_argument("parameter name '" + std::string(name) +
                                    "' collides with the Chern-root naming scheme");
    return intern(VarInfo{std::string(name), VarKind::parameter});
}

VarId Variables::chern_root(int vertex, int slot) {
    if (vertex < 0 || slot < 0) throw std::invalid_argument("negative Chern-root index");
    std::string name = "x" + std::to_string(vertex) + "_" + std::to_string(slot + 1);
    return intern(VarInfo{std::move(name), VarKind::chern_root, vertex, slot});
}

std::optional<VarId> Variables::find(std::string_view name) {
    auto& t = table();
    std::shared_lock lock(t.mutex);
    if (auto it = t.by_name.find(std::string(name)); it != t.by_name.end()) return it->second;
    return std::nullopt;
}

const VarInfo& Variables::info(VarId id) {
    auto& t = table();
    std::shared_lock lock(t.mutex);
    if (id >= t.infos.size()) throw std::out_of_range("unknown variable id");
    return t.infos[id];
}

std::size_t Variables::count() {
    auto& t = table();
    std::shared_lock lock(t.mutex);
    return t.infos.size();
}

}  // namespace qb
