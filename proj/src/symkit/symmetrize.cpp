#include "qb/symkit/symmetrize.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qb/numeric/parallel.hpp"

namespace qb {

CosetFamily CosetFamily::full(std::vector<std::vector<VarId>> groups) {
    CosetFamily f;
    for (const auto& g : groups) f.block_sizes.emplace_back(g.size(), 1);
    f.groups = std::move(groups);
    return f;
}

std::uint64_t CosetFamily::count() const {
    std::uint64_t total = 1;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        // multinomial(n; b_1, ..., b_r) built as a product of binomials
        std::uint64_t left = groups[g].size();
        for (int b : block_sizes[g]) {
            std::uint64_t c = 1;
            for (int i = 1; i <= b; ++i) c = c * (left - b + i) / i;
            total *= c;
            left -= b;
        }
    }
    return total;
}

bool CosetFamily::contains(VarId v) const {
    for (const auto& g : groups)
        if (std::find(g.begin(), g.end(), v) != g.end()) return true;
    return false;
}

namespace {

// All ordered set partitions of {0..n-1} into blocks of the given sizes,
// encoded as: image[k] = index assigned to slot k.
void partitions(std::size_t n, const std::vector<int>& sizes, std::vector<std::vector<int>>& out) {
    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);
    std::vector<int> starts(sizes.size());
    std::partial_sum(sizes.begin(), sizes.end(), starts.begin());
    for (std::size_t b = 0; b < starts.size(); ++b) starts[b] -= sizes[b];

    std::function<void(std::size_t)> block = [&](std::size_t b) {
        if (b == sizes.size()) {
            out.push_back(image);
            return;
        }
        // choose sizes[b] unused indices in increasing order
        std::vector<int> free;
        for (std::size_t i = 0; i < n; ++i)
            if (!used[i]) free.push_back(static_cast<int>(i));
        int k = sizes[b];
        std::vector<bool> pick(free.size(), false);
        std::fill(pick.begin(), pick.begin() + k, true);
        do {
            int slot = starts[b];
            for (std::size_t i = 0; i < free.size(); ++i)
                if (pick[i]) {
                    image[slot++] = free[i];
                    used[free[i]] = true;
                }
            block(b + 1);
            for (std::size_t i = 0; i < free.size(); ++i)
                if (pick[i]) used[free[i]] = false;
        } while (std::prev_permutation(pick.begin(), pick.end()));
    };
    block(0);
}

}  // namespace

std::vector<std::vector<std::pair<VarId, VarId>>> CosetFamily::enumerate() const {
    std::vector<std::vector<std::pair<VarId, VarId>>> result{{}};
    for (std::size_t g = 0; g < groups.size(); ++g) {
        int total = std::accumulate(block_sizes[g].begin(), block_sizes[g].end(), 0);
        if (static_cast<std::size_t>(total) != groups[g].size())
            throw std::invalid_argument("block sizes do not match group size");
        std::vector<std::vector<int>> images;
        partitions(groups[g].size(), block_sizes[g], images);
        std::vector<std::vector<std::pair<VarId, VarId>>> next;
        next.reserve(result.size() * images.size());
        for (const auto& prefix : result)
            for (const auto& img : images) {
                auto s = prefix;
                for (std::size_t k = 0; k < img.size(); ++k)
                    if (img[k] != static_cast<int>(k)) s.emplace_back(groups[g][k], groups[g][img[k]]);
                next.push_back(std::move(s));
            }
        result = std::move(next);
    }
    return result;
}

FactoredRational RationalFunction::denominator_product() const {
    FactoredRational d;
    for (const auto& [f, m] : denominator) d.multiply_factor(f, m);
    return d;
}

RationalFunction RationalFunction::permute(const std::vector<std::pair<VarId, VarId>>& swaps) const {
    FactoredRational den = denominator_product().permute(swaps);
    RationalFunction r;
    // permuting a canonical binomial may flip its sign or pull out a monomial
    r.numerator = numerator.permute(swaps);
    r.numerator = r.numerator.scaled(1 / den.coefficient()).shifted(den.monomial().inverse());
    r.denominator = den.factors();
    return r;
}

bool RationalFunction::equals(const RationalFunction& o) const {
    FactoredRational da = denominator_product(), db = o.denominator_product();
    FactoredRational q = da / db;  // cancels shared factors
    // numerator * db == o.numerator * da  <=>  numerator * qden == o.numerator * qnum
    return numerator * q.denominator() == o.numerator * q.numerator();
}

RationalFunction sum_over_common_denominator(const std::vector<FactoredRational>& terms) {
    std::map<Binomial, int> lcm;
    for (const auto& t : terms) {
        if (t.is_zero()) continue;
        for (const auto& [f, m] : t.factors())
            if (m < 0) lcm[f] = std::max(lcm[f], -m);
    }
    std::vector<LaurentPoly> nums(terms.size());
    parallel_for(terms.size(), [&](std::size_t i) {
        const auto& t = terms[i];
        if (t.is_zero()) return;
        LaurentPoly p(t.monomial(), t.coefficient());
        for (const auto& [f, m] : t.factors())
            for (int k = 0; k < m; ++k) p = p.times_binomial(f.a, f.b);
        for (const auto& [f, need] : lcm) {
            auto it = t.factors().find(f);
            int have = (it != t.factors().end() && it->second < 0) ? -it->second : 0;
            for (int k = have; k < need; ++k) p = p.times_binomial(f.a, f.b);
        }
        nums[i] = std::move(p);
    });
    // pairwise tree summation keeps merges balanced
    while (nums.size() > 1) {
        std::vector<LaurentPoly> next((nums.size() + 1) / 2);
        parallel_for(next.size(), [&](std::size_t i) {
            next[i] = 2 * i + 1 < nums.size() ? nums[2 * i] + nums[2 * i + 1] : std::move(nums[2 * i]);
        });
        nums = std::move(next);
    }
    RationalFunction r;
    r.numerator = nums.empty() ? LaurentPoly{} : std::move(nums[0]);
    if (r.numerator.is_zero()) return r;
    for (auto [f, m] : lcm) {
        while (m > 0) {
            LaurentPoly q;
            if (!r.numerator.divide_binomial(f.a, f.b, q)) break;
            r.numerator = std::move(q);
            --m;
        }
        if (m > 0) r.denominator[f] = m;
    }
    return r;
}

RationalFunction symmetrize(const FactoredRational& f, const CosetFamily& cosets) {
    auto check = [&](const TorusWeight& w) {
        for (VarId v = 0; v < kMaxVars; ++v)
            if (w.twice(v) != 0 && is_chern_root(v) && !cosets.contains(v))
                throw std::invalid_argument("variable " + Variables::info(v).name + " is outside the coset family");
    };
    check(f.monomial());
    for (const auto& [b, m] : f.factors()) {
        check(b.a);
        check(b.b);
    }
    auto reps = cosets.enumerate();
    std::vector<FactoredRational> terms(reps.size());
    parallel_for(reps.size(), [&](std::size_t i) { terms[i] = f.permute(reps[i]); });
    return sum_over_common_denominator(terms);
}

bool is_symmetric(const RationalFunction& r, const CosetFamily& cosets) {
    for (const auto& g : cosets.groups)
        for (std::size_t k = 0; k + 1 < g.size(); ++k) {
            std::vector<std::pair<VarId, VarId>> swap{{g[k], g[k + 1]}, {g[k + 1], g[k]}};
            if (!r.permute(swap).equals(r)) return false;
        }
    return true;
}

}  // namespace qb
