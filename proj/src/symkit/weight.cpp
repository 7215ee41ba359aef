#include "qb/symkit/weight.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>
#include <vector>

namespace qb {
namespace {

std::int16_t checked(int v) {
    if (v > std::numeric_limits<std::int16_t>::max() || v < std::numeric_limits<std::int16_t>::min())
        throw std::overflow_error("torus weight exponent out of range");
    return static_cast<std::int16_t>(v);
}

}  // namespace

TorusWeight TorusWeight::var(VarId id, int exponent) {
    TorusWeight w;
    w.set_twice(id, 2 * exponent);
    return w;
}

TorusWeight TorusWeight::half_var(VarId id, int half_exponent) {
    TorusWeight w;
    w.set_twice(id, half_exponent);
    return w;
}

TorusWeight TorusWeight::parameter(std::string_view name, int exponent) {
    return var(Variables::parameter(name), exponent);
}

TorusWeight TorusWeight::chern_root(int vertex, int slot, int exponent) {
    return var(Variables::chern_root(vertex, slot), exponent);
}

void TorusWeight::set_twice(VarId id, int value) {
    if (id >= kMaxVars) throw std::out_of_range("variable id");
    e2_[id] = checked(value);
}

bool TorusWeight::is_identity() const {
    return std::all_of(e2_.begin(), e2_.end(), [](auto e) { return e == 0; });
}

bool TorusWeight::is_g_trivial() const {
    for (std::size_t i = 0; i < e2_.size(); ++i)
        if (e2_[i] != 0 && is_chern_root(static_cast<VarId>(i))) return false;
    return true;
}

bool TorusWeight::is_integral() const {
    return std::all_of(e2_.begin(), e2_.end(), [](auto e) { return e % 2 == 0; });
}

bool TorusWeight::is_nonnegative() const {
    return std::all_of(e2_.begin(), e2_.end(), [](auto e) { return e >= 0; });
}

TorusWeight TorusWeight::operator*(const TorusWeight& o) const {
    TorusWeight r = *this;
    r *= o;
    return r;
}

TorusWeight TorusWeight::operator/(const TorusWeight& o) const {
    TorusWeight r = *this;
    r /= o;
    return r;
}

TorusWeight& TorusWeight::operator*=(const TorusWeight& o) {
    for (std::size_t i = 0; i < e2_.size(); ++i) e2_[i] = checked(e2_[i] + o.e2_[i]);
    return *this;
}

TorusWeight& TorusWeight::operator/=(const TorusWeight& o) {
    for (std::size_t i = 0; i < e2_.size(); ++i) e2_[i] = checked(e2_[i] - o.e2_[i]);
    return *this;
}

TorusWeight TorusWeight::inverse() const {
    TorusWeight r;
    for (std::size_t i = 0; i < e2_.size(); ++i) r.e2_[i] = checked(-e2_[i]);
    return r;
}

TorusWeight TorusWeight::pow(int k) const {
    TorusWeight r;
    for (std::size_t i = 0; i < e2_.size(); ++i) r.e2_[i] = checked(e2_[i] * k);
    return r;
}

TorusWeight TorusWeight::sqrt() const {
    TorusWeight r;
    for (std::size_t i = 0; i < e2_.size(); ++i) {
        if (e2_[i] % 2 != 0)
            throw std::domain_error("square root of " + to_string() + " leaves the doubled lattice");
        r.e2_[i] = static_cast<std::int16_t>(e2_[i] / 2);
    }
    return r;
}

TorusWeight TorusWeight::chern_part() const {
    TorusWeight r;
    for (std::size_t i = 0; i < e2_.size(); ++i)
        if (e2_[i] != 0 && is_chern_root(static_cast<VarId>(i))) r.e2_[i] = e2_[i];
    return r;
}

TorusWeight TorusWeight::parameter_part() const {
    TorusWeight r;
    for (std::size_t i = 0; i < e2_.size(); ++i)
        if (e2_[i] != 0 && !is_chern_root(static_cast<VarId>(i))) r.e2_[i] = e2_[i];
    return r;
}

TorusWeight TorusWeight::positive_part() const {
    TorusWeight r;
    for (std::size_t i = 0; i < e2_.size(); ++i) r.e2_[i] = std::max<std::int16_t>(e2_[i], 0);
    return r;
}

TorusWeight TorusWeight::negative_part() const {
    TorusWeight r;
    for (std::size_t i = 0; i < e2_.size(); ++i)
        r.e2_[i] = static_cast<std::int16_t>(-std::min<std::int16_t>(e2_[i], 0));
    return r;
}

TorusWeight TorusWeight::gcd(const TorusWeight& a, const TorusWeight& b) {
    TorusWeight r;
    for (std::size_t i = 0; i < r.e2_.size(); ++i) r.e2_[i] = std::min(a.e2_[i], b.e2_[i]);
    return r;
}

TorusWeight TorusWeight::lcm(const TorusWeight& a, const TorusWeight& b) {
    TorusWeight r;
    for (std::size_t i = 0; i < r.e2_.size(); ++i) r.e2_[i] = std::max(a.e2_[i], b.e2_[i]);
    return r;
}

TorusWeight TorusWeight::substitute(const std::function<const TorusWeight*(VarId)>& image) const {
    TorusWeight r;
    for (std::size_t i = 0; i < e2_.size(); ++i) {
        int e = e2_[i];
        if (e == 0) continue;
        const TorusWeight* img = image(static_cast<VarId>(i));
        if (!img) {
            r.e2_[i] = checked(r.e2_[i] + e);
            continue;
        }
        if (e % 2 == 0) {
            r *= img->pow(e / 2);
        } else {
            r *= img->sqrt().pow(e);
        }
    }
    return r;
}

std::string TorusWeight::to_string() const {
    std::vector<std::pair<std::string, int>> factors;
    for (std::size_t i = 0; i < e2_.size(); ++i)
        if (e2_[i] != 0) factors.emplace_back(Variables::info(static_cast<VarId>(i)).name, e2_[i]);
    if (factors.empty()) return "1";
    std::sort(factors.begin(), factors.end());
    std::string out;
    for (const auto& [name, e2] : factors) {
        if (!out.empty()) out += '*';
        out += name;
        if (e2 == 2) continue;
        if (e2 % 2 == 0)
            out += "^" + std::to_string(e2 / 2);
        else
            out += "^(" + std::to_string(e2) + "/2)";
    }
    return out;
}

TorusWeight TorusWeight::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    TorusWeight result;
    if (text.empty()) throw std::invalid_argument("empty torus weight");
    if (text == "1") return result;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t star = text.find('*', pos);
        std::string_view factor = trim(text.substr(pos, star == std::string_view::npos ? text.npos : star - pos));
        if (factor.empty()) throw std::invalid_argument("malformed torus weight '" + std::string(text) + "'");
        std::string_view name = factor;
        int twice = 2;
        if (auto caret = factor.find('^'); caret != std::string_view::npos) {
            name = trim(factor.substr(0, caret));
            std::string_view ex = trim(factor.substr(caret + 1));
            if (ex.size() >= 2 && ex.front() == '(' && ex.back() == ')') ex = trim(ex.substr(1, ex.size() - 2));
            int num = 0, den = 1;
            auto slash = ex.find('/');
            auto parse_int = [&](std::string_view s, int& out) {
                s = trim(s);
                auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
                if (ec != std::errc{} || p != s.data() + s.size())
                    throw std::invalid_argument("bad exponent in torus weight '" + std::string(text) + "'");
            };
            parse_int(ex.substr(0, slash), num);
            if (slash != std::string_view::npos) parse_int(ex.substr(slash + 1), den);
            if (den == 1)
                twice = 2 * num;
            else if (den == 2)
                twice = num;
            else
                throw std::invalid_argument("only integer and half-integer exponents are supported");
        }
        if (name == "1") {
            // constant factor
        } else {
            VarId id;
            if (auto found = Variables::find(name)) {
                id = *found;
            } else if (name.size() > 1 && name.front() == 'x' && name.find('_') != std::string_view::npos) {
                auto us = name.find('_');
                int vtx = 0, slot = 0;
                auto r1 = std::from_chars(name.data() + 1, name.data() + us, vtx);
                auto r2 = std::from_chars(name.data() + us + 1, name.data() + name.size(), slot);
                if (r1.ec != std::errc{} || r2.ec != std::errc{} || slot < 1)
                    throw std::invalid_argument("bad Chern-root name '" + std::string(name) + "'");
                id = Variables::chern_root(vtx, slot - 1);
            } else {
                id = Variables::parameter(name);
            }
            result.set_twice(id, result.twice(id) + twice);
        }
        if (star == std::string_view::npos) break;
        pos = star + 1;
    }
    return result;
}

std::size_t TorusWeight::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto e : e2_) {
        h ^= static_cast<std::uint16_t>(e);
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

}  // namespace qb
