#pragma once

#include <string>
#include <vector>

namespace qb {

struct Box {
    int row, col;  // 1-based
    int content() const { return col - row; }
};

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    bool empty() const { return parts_.empty(); }
    /// Boxes row by row.
    std::vector<Box> boxes() const;
    Partition conjugate() const;
    /// Dominance order: partial sums of this >= partial sums of other (same size).
    bool dominates(const Partition& other) const;
    std::string to_string() const;

    /// All partitions of n in reverse lexicographic order.
    static std::vector<Partition> all(int n);

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

}  // namespace qb
