#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace qb {

using VarId = std::uint16_t;

/// Upper bound on the number of distinct symbols a process may intern.
/// Monomials are stored densely over this many slots.
inline constexpr std::size_t kMaxVars = 32;

enum class VarKind : std::uint8_t { parameter, chern_root };

struct VarInfo {
    std::string name;
    VarKind kind = VarKind::parameter;
    int vertex = -1;  // chern roots only
    int slot = -1;    // chern roots only, 0-based
};

/// Process-wide symbol table. Interning is thread safe; ids are stable for
/// the lifetime of the process and assigned in first-use order.
class Variables {
public:
    static VarId parameter(std::string_view name);
    static VarId chern_root(int vertex, int slot);
    static std::optional<VarId> find(std::string_view name);
    static const VarInfo& info(VarId id);
    static std::size_t count();
};

inline bool is_chern_root(VarId id) { return Variables::info(id).kind == VarKind::chern_root; }

}  // namespace qb
