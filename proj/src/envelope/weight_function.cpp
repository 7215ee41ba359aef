#include "qb/envelope/weight_function.hpp"

#include <stdexcept>

namespace qb {

SigmaChoice SigmaChoice::from_quiver(const QuiverModel& q) {
    SigmaChoice s;
    for (const auto& [name, val] : q.sigma) s.pairing[Variables::parameter(name)] = val;
    s.pairing[Variables::parameter(q.hbar)] = 0;
    return s;
}

long SigmaChoice::pair(const TorusWeight& w) const {
    long acc = 0;
    for (VarId v = 0; v < kMaxVars; ++v) {
        int e = w.twice(v);
        if (e == 0) continue;
        if (is_chern_root(v)) throw std::invalid_argument("pairing with a weight that involves Chern roots");
        auto it = pairing.find(v);
        if (it == pairing.end()) throw std::invalid_argument("sigma has no value for parameter " + Variables::info(v).name);
        acc += static_cast<long>(e) * it->second;
    }
    return acc;
}

TorusWeight a_character(const TorusWeight& w, const QuiverModel& q) {
    TorusWeight r = w;
    r.set_twice(Variables::parameter(q.hbar), 0);
    return r;
}

CosetFamily coset_family(const QuiverModel& q, const FixedComponent& f) {
    CosetFamily fam;
    fam.groups = q.root_groups();
    for (std::size_t i = 0; i < f.slots.size(); ++i) {
        std::vector<int> blocks;
        std::vector<TorusWeight> seen;
        for (std::size_t k = 0; k < f.slots[i].size(); ++k) {
            TorusWeight a = a_character(f.slots[i][k].character, q);
            if (k > 0 && a == seen.back()) {
                ++blocks.back();
                continue;
            }
            for (const auto& s : seen)
                if (s == a) throw std::logic_error("slot order does not keep A-blocks contiguous at " + f.label());
            seen.push_back(a);
            blocks.push_back(1);
        }
        fam.block_sizes.push_back(blocks);
    }
    return fam;
}

WeightFunction build_weight_function(const QuiverModel& q, const FixedComponent& f, const SigmaChoice& sigma,
                                     const OrientedClass& pol) {
    WeightFunction wf;
    wf.quiver = q;
    wf.fixed = f;
    wf.origin = "generic";
    auto values = f.root_values();
    auto sub = substitution(values);
    TorusWeight h = q.hbar_weight();
    for (const auto& [ow, mult] : pol.terms()) {
        TorusWeight at_f = ow.weight().substitute(sub);
        TorusWeight a = a_character(at_f, q);
        if (a.is_identity()) {
            wf.a_fixed.add(ow.weight(), mult);
            continue;
        }
        long p = sigma.pair(a);
        if (p == 0)
            throw NonGenericSigma("sigma is not generic at " + f.label() + ": weight " + ow.weight().to_string() +
                                  " restricts to " + at_f.to_string() + " with zero pairing");
        if (p > 0)
            wf.attracting.add(ow, mult);
        else
            wf.repelling.add(ow, mult);
    }
    wf.kernel = lambda_hat(wf.repelling + wf.attracting.twisted(h));
    wf.cosets = coset_family(q, f);
    return wf;
}

WeightFunction build_weight_function(const QuiverModel& q, const FixedComponent& f) {
    return build_weight_function(q, f, SigmaChoice::from_quiver(q), polarization(q));
}

WeightFunction hilbert_weight_function(const QuiverModel& q, const FixedComponent& f) {
    if (!(q.vertices == 1 && q.is_cyclic() && q.w[0] == 1))
        throw std::invalid_argument("hilbert_weight_function: Jordan quiver with w = 1 required");
    WeightFunction wf;
    wf.quiver = q;
    wf.fixed = f;
    wf.origin = "closed-form";
    const auto& slots = f.slots[0];
    const std::size_t n = slots.size();
    TorusWeight t1 = q.edge_weight(0);
    TorusWeight t1t2 = q.hbar_weight().inverse();
    TorusWeight t2 = t1t2 / t1;
    std::vector<TorusWeight> x(n);
    std::vector<int> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = QuiverModel::root(0, static_cast<int>(i));
        c[i] = slots[i].box.content();
    }
    FactoredRational k;
    auto mul = [&](const TorusWeight& a, const TorusWeight& b, int p) { k *= FactoredRational::binomial(a, b, p); };
    for (std::size_t i = 0; i < n; ++i) {
        if (c[i] < 0) mul(TorusWeight{}, x[i], 1);
        if (c[i] > 0) mul(t1t2, x[i], 1);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (c[i] < c[j] + 1) mul(x[j], t1 * x[i], 1);
            if (c[i] > c[j] + 1) mul(t2 * x[j], x[i], 1);
            if (c[i] < c[j]) mul(x[j], x[i], -1);
            if (c[i] > c[j]) mul(t1t2 * x[j], x[i], -1);
        }
    wf.kernel = k;
    wf.cosets = coset_family(q, f);
    return wf;
}

Complex evaluate_weight_function(const WeightFunction& wf, const std::function<Complex(VarId)>& sqrt_of) {
    Complex sum;
    for (const auto& swaps : wf.cosets.enumerate()) sum += wf.kernel.permute(swaps).evaluate<Complex>(sqrt_of, Complex(1));
    return sum;
}

}  // namespace qb
