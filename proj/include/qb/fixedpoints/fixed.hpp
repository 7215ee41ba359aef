#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qb/fixedpoints/partition.hpp"
#include "qb/quiver/quiver.hpp"
#include "qb/symkit/kclass.hpp"

namespace qb {

/// One Chern-root slot at a fixed component: the box it sits in and its character.
struct SlotData {
    int column = 0;  // global framing-column index
    Box box{1, 1};
    TorusWeight character;
};

/// A torus-fixed component of a cyclic (or A_1) quiver variety, given by one
/// partition per framing column.
struct FixedComponent {
    std::vector<std::pair<int, int>> columns;  // (vertex, l) per global column
    std::vector<Partition> partitions;         // one per column
    /// slots[i][k] describes x_{i,k}; sorted by (column, content, row) within each vertex
    std::vector<std::vector<SlotData>> slots;

    std::string label() const;
    /// x_{i,k} -> character, as a substitution table.
    std::map<VarId, TorusWeight> root_values() const;
    /// The substitution with slots of vertex i reordered by perm[i] (x_{i,k} -> slot perm[i][k]).
    std::map<VarId, TorusWeight> root_values(const std::vector<std::vector<int>>& perm) const;
};

/// Enumerate fixed components. Accepts cyclic quivers (including the Jordan
/// quiver) and the A_1 quiver; anything else is rejected.
std::vector<FixedComponent> enumerate_fixed(const QuiverModel& q);

/// V restricted to F for the Jordan quiver with w = 1.
KClass v_character(const QuiverModel& q, const FixedComponent& f);

/// Substitution callback over a table.
std::function<const TorusWeight*(VarId)> substitution(const std::map<VarId, TorusWeight>& table);

}  // namespace qb
