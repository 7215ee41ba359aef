#include "qb/fixedpoints/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qb {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

std::vector<Box> Partition::boxes() const {
    std::vector<Box> out;
    for (std::size_t r = 0; r < parts_.size(); ++r)
        for (int c = 1; c <= parts_[r]; ++c) out.push_back({static_cast<int>(r) + 1, c});
    return out;
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    if (parts_.empty()) return {};
    for (int j = 1; j <= parts_[0]; ++j) {
        int n = 0;
        for (int p : parts_)
            if (p >= j) ++n;
        c.push_back(n);
    }
    return Partition(c);
}

bool Partition::dominates(const Partition& other) const {
    if (size() != other.size()) return false;
    int a = 0, b = 0;
    std::size_t n = std::max(parts_.size(), other.parts_.size());
    for (std::size_t i = 0; i < n; ++i) {
        a += i < parts_.size() ? parts_[i] : 0;
        b += i < other.parts_.size() ? other.parts_[i] : 0;
        if (a < b) return false;
    }
    return true;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::vector<Partition> Partition::all(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

}  // namespace qb
