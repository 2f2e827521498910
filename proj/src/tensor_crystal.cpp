#include "kmc/tensor_crystal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace kmc {

bool TensorCrystal::any_truncated() const {
    return std::any_of(factors.begin(), factors.end(),
                       [](const auto& f) { return f->truncated; });
}

TensorLabel TensorCrystal::hw_label() const {
    TensorLabel l(n_factors());
    for (std::size_t j = 0; j < n_factors(); ++j) l[j] = factors[j]->hw_node;
    return l;
}

long long TensorCrystal::label_count() const {
    long long c = 1;
    for (const auto& f : factors) c *= static_cast<long long>(f->nodes.size());
    return c;
}

std::vector<TensorLabel> TensorCrystal::all_labels() const {
    std::vector<TensorLabel> out;
    TensorLabel cur(n_factors(), 0);
    for (;;) {
        out.push_back(cur);
        std::size_t j = n_factors();
        while (j > 0) {
            --j;
            if (static_cast<std::size_t>(++cur[j]) < factors[j]->nodes.size()) break;
            cur[j] = 0;
            if (j == 0) return out;
        }
    }
}

void TensorCrystal::check_label(const TensorLabel& l) const {
    if (l.size() != n_factors()) fail("FactorIndexOutOfRange", "label length != factor count");
    for (std::size_t j = 0; j < l.size(); ++j)
        if (l[j] < 0 || static_cast<std::size_t>(l[j]) >= factors[j]->nodes.size())
            fail("FactorIndexOutOfRange", "node id outside factor " + std::to_string(j + 1));
}

WeightTuple TensorCrystal::weight_tuple(const TensorLabel& l) const {
    check_label(l);
    WeightTuple wt;
    for (std::size_t j = 0; j < l.size(); ++j) wt.entries.push_back(factors[j]->nodes[l[j]].wt);
    return wt;
}

Weight TensorCrystal::total_weight(const TensorLabel& l) const {
    check_label(l);
    Weight w = factors[0]->nodes[l[0]].wt;
    for (std::size_t j = 1; j < l.size(); ++j) w = wadd(w, factors[j]->nodes[l[j]].wt);
    return w;
}

TensorCrystal build_tensor(std::vector<std::shared_ptr<const CrystalGraph>> factors) {
    if (factors.empty()) fail("EmptyFactorList", "a tensor product needs at least one factor");
    for (const auto& f : factors)
        if (!f) fail("EmptyFactorList", "null factor handle");
    for (std::size_t j = 1; j < factors.size(); ++j)
        if (!factors[0]->cartan.same_as(factors[j]->cartan))
            fail("MixedCartanData", "factors live over different Cartan data");
    return TensorCrystal{std::move(factors)};
}

Signature i_signature(const TensorCrystal& t, const TensorLabel& l, std::size_t i) {
    t.check_label(l);
    if (i >= t.rank()) fail("FactorIndexOutOfRange", "color index out of range");
    Signature s;
    s.i = i;
    for (std::size_t j = 0; j < l.size(); ++j) {
        const auto& node = t.factors[j]->nodes[l[j]];
        s.groups.emplace_back(node.eps[i], node.phi[i]);
        for (int k = 0; k < node.eps[i]; ++k) {
            s.sign.push_back(+1);
            s.group_of.push_back(static_cast<int>(j));
        }
        for (int k = 0; k < node.phi[i]; ++k) {
            s.sign.push_back(-1);
            s.group_of.push_back(static_cast<int>(j));
        }
    }
    return s;
}

ReducedSignature reduce_signature(const Signature& s) {
    ReducedSignature r;
    r.sig = s;
    r.crossed.assign(s.sign.size(), 0);
    r.partner.assign(s.sign.size(), -1);
    // matching -( with )+ implements the adjacent -+ cancellation fixpoint
    std::vector<int> stack;
    for (std::size_t k = 0; k < s.sign.size(); ++k) {
        if (s.sign[k] < 0) {
            stack.push_back(static_cast<int>(k));
        } else if (!stack.empty()) {
            int m = stack.back();
            stack.pop_back();
            r.crossed[m] = r.crossed[k] = 1;
            r.partner[m] = static_cast<int>(k);
            r.partner[k] = m;
        }
    }
    for (std::size_t k = 0; k < s.sign.size(); ++k) {
        if (r.crossed[k]) continue;
        if (s.sign[k] > 0) {
            ++r.h_plus;
            r.rightmost_plus = static_cast<int>(k);
        } else {
            ++r.h_minus;
            if (r.leftmost_minus < 0) r.leftmost_minus = static_cast<int>(k);
        }
    }
    return r;
}

std::string signature_text(const ReducedSignature& r) {
    std::string out = "(";
    for (std::size_t k = 0; k < r.sig.sign.size(); ++k) {
        out += r.sig.sign[k] > 0 ? '+' : '-';
        if (r.crossed[k]) out += "̶";  // combining long stroke overlay
    }
    out += ")";
    return out;
}

std::optional<TensorLabel> tensor_e(const TensorCrystal& t, const TensorLabel& l, std::size_t i) {
    ReducedSignature r = reduce_signature(i_signature(t, l, i));
    if (r.rightmost_plus < 0) return std::nullopt;
    std::size_t j = static_cast<std::size_t>(r.sig.group_of[r.rightmost_plus]);
    std::int32_t target = t.factors[j]->e_edge[l[j]][i];
    if (target < 0)
        fail("TruncatedStatistics",
             "raising edge not materialized in factor " + std::to_string(j + 1));
    TensorLabel out = l;
    out[j] = target;
    return out;
}

std::optional<TensorLabel> tensor_f(const TensorCrystal& t, const TensorLabel& l, std::size_t i) {
    ReducedSignature r = reduce_signature(i_signature(t, l, i));
    if (r.leftmost_minus < 0) return std::nullopt;
    std::size_t j = static_cast<std::size_t>(r.sig.group_of[r.leftmost_minus]);
    std::int32_t target = t.factors[j]->f_edge[l[j]][i];
    if (target < 0)
        fail("TruncatedStatistics",
             "lowering leaves the generated range of factor " + std::to_string(j + 1));
    TensorLabel out = l;
    out[j] = target;
    return out;
}

std::pair<int, int> h_stats(const TensorCrystal& t, const TensorLabel& l, std::size_t i) {
    ReducedSignature r = reduce_signature(i_signature(t, l, i));
    return {r.h_plus, r.h_minus};
}

int h_minus_from(const TensorCrystal& t, const TensorLabel& l, std::size_t i, std::size_t k) {
    if (k < 1 || k > t.n_factors() + 1)
        fail("FactorIndexOutOfRange", "factor index must lie in 1..n+1");
    if (k == t.n_factors() + 1) return 0;
    Signature full = i_signature(t, l, i);
    Signature sub;
    sub.i = i;
    for (std::size_t j = k - 1; j < t.n_factors(); ++j) sub.groups.push_back(full.groups[j]);
    for (std::size_t p = 0; p < full.sign.size(); ++p) {
        if (static_cast<std::size_t>(full.group_of[p]) + 1 < k) continue;
        sub.sign.push_back(full.sign[p]);
        sub.group_of.push_back(full.group_of[p]);
    }
    return reduce_signature(sub).h_minus;
}

int alpha_indicator(const TensorCrystal& t, const TensorLabel& lambda, const TensorLabel& mu,
                    std::size_t ell, long m, std::size_t i) {
    t.check_label(lambda);
    t.check_label(mu);
    if (ell < 1 || ell > t.n_factors())
        fail("FactorIndexOutOfRange", "factor index must lie in 1..n");
    long phi_lambda = t.factors[ell - 1]->nodes[lambda[ell - 1]].phi[i];
    long phi_mu = t.factors[ell - 1]->nodes[mu[ell - 1]].phi[i];
    if (phi_lambda != m || phi_mu < m) return 0;
    return h_minus_from(t, mu, i, ell) > h_minus_from(t, mu, i, ell + 1) ? 1 : 0;
}

StringWord default_word(std::size_t rank) {
    StringWord w;
    w.cycle.resize(rank);
    std::iota(w.cycle.begin(), w.cycle.end(), 0);
    return w;
}

void check_word(const StringWord& w, std::size_t rank) {
    if (w.cycle.empty()) fail("WordSupportIncomplete", "word cycle is empty");
    for (std::size_t i : w.prefix)
        if (i >= rank) fail("WordSupportIncomplete", "word letter out of range");
    std::vector<char> seen(rank, 0);
    for (std::size_t i : w.cycle) {
        if (i >= rank) fail("WordSupportIncomplete", "word letter out of range");
        seen[i] = 1;
    }
    for (std::size_t i = 0; i < rank; ++i)
        if (!seen[i])
            fail("WordSupportIncomplete",
                 "cycle never mentions index " + std::to_string(i));
}

namespace {

constexpr std::size_t kStringBudget = 1u << 20;

void trim_zeros(std::vector<long>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

StringParam string_parametrization(const CrystalGraph& g, std::int32_t node,
                                   const StringWord& w) {
    check_word(w, g.rank());
    if (node < 0 || static_cast<std::size_t>(node) >= g.nodes.size())
        fail("FactorIndexOutOfRange", "node id out of range");
    StringParam out{w, {}};
    std::int32_t x = node;
    for (std::size_t k = 0;; ++k) {
        const auto& eps = g.nodes[x].eps;
        if (std::all_of(eps.begin(), eps.end(), [](int e) { return e == 0; })) break;
        if (k > kStringBudget) fail("NonTerminating", "string extraction exceeded its budget");
        std::size_t i = w.at(k);
        long a = eps[i];
        for (long s = 0; s < a; ++s) {
            std::int32_t up = g.e_edge[x][i];
            if (up < 0) fail("TruncatedStatistics", "raising edge missing during extraction");
            x = up;
        }
        out.exponents.push_back(a);
    }
    trim_zeros(out.exponents);
    return out;
}

StringParam string_parametrization(const TensorCrystal& t, const TensorLabel& l,
                                   const StringWord& w) {
    check_word(w, t.rank());
    t.check_label(l);
    StringParam out{w, {}};
    TensorLabel x = l;
    for (std::size_t k = 0;; ++k) {
        bool hw = true;
        for (std::size_t i = 0; i < t.rank() && hw; ++i)
            if (h_stats(t, x, i).first > 0) hw = false;
        if (hw) break;
        if (k > kStringBudget) fail("NonTerminating", "string extraction exceeded its budget");
        std::size_t i = w.at(k);
        long a = h_stats(t, x, i).first;
        for (long s = 0; s < a; ++s) x = *tensor_e(t, x, i);
        out.exponents.push_back(a);
    }
    trim_zeros(out.exponents);
    return out;
}

std::int32_t reconstruct_from_string(const CrystalGraph& g, const StringParam& p) {
    check_word(p.word, g.rank());
    std::int32_t x = g.hw_node;
    for (std::size_t k = p.exponents.size(); k-- > 0;) {
        std::size_t i = p.word.at(k);
        if (i >= g.rank()) fail("WordSupportIncomplete", "word letter out of range");
        if (p.exponents[k] < 0) fail("BadStringParam", "negative exponent");
        for (long s = 0; s < p.exponents[k]; ++s) {
            std::int32_t down = g.f_edge[x][i];
            if (down < 0) fail("BadStringParam", "exponent exceeds the string length");
            x = down;
        }
    }
    return x;
}

TensorLabel reconstruct_from_string(const TensorCrystal& t, const StringParam& p,
                                    const std::optional<TensorLabel>& from) {
    check_word(p.word, t.rank());
    TensorLabel x = from ? *from : t.hw_label();
    t.check_label(x);
    for (std::size_t k = p.exponents.size(); k-- > 0;) {
        std::size_t i = p.word.at(k);
        if (p.exponents[k] < 0) fail("BadStringParam", "negative exponent");
        for (long s = 0; s < p.exponents[k]; ++s) {
            auto down = tensor_f(t, x, i);
            if (!down) fail("BadStringParam", "exponent exceeds the string length");
            x = *down;
        }
    }
    return x;
}

namespace {

std::strong_ordering lex_compare(const std::vector<long>& a, const std::vector<long>& b) {
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
        long x = k < a.size() ? a[k] : 0;
        long y = k < b.size() ? b[k] : 0;
        if (x != y) return x > y ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare_exponent_sequences(const StringParam& a, const StringParam& b) {
    if (!(a.word == b.word)) fail("WordMismatch", "exponent sequences use different words");
    long sa = std::accumulate(a.exponents.begin(), a.exponents.end(), 0L);
    long sb = std::accumulate(b.exponents.begin(), b.exponents.end(), 0L);
    // smaller total degree ranks higher
    if (sa != sb) return sa < sb ? std::strong_ordering::greater : std::strong_ordering::less;
    return lex_compare(a.exponents, b.exponents);
}

std::strong_ordering compare_exponents_lex(const StringParam& a, const StringParam& b) {
    if (!(a.word == b.word)) fail("WordMismatch", "exponent sequences use different words");
    return lex_compare(a.exponents, b.exponents);
}

namespace {

bool is_hw_label(const TensorCrystal& t, const TensorLabel& l) {
    for (std::size_t i = 0; i < t.rank(); ++i)
        if (reduce_signature(i_signature(t, l, i)).h_plus > 0) return false;
    return true;
}

}  // namespace

std::vector<TensorLabel> highest_weight_labels(const TensorCrystal& t,
                                               const std::optional<Weight>& weight_filter) {
    long depth_bound = -1;
    if (weight_filter) {
        Weight top = t.factors[0]->nodes[t.factors[0]->hw_node].wt;
        for (std::size_t j = 1; j < t.n_factors(); ++j)
            top = wadd(top, t.factors[j]->nodes[t.factors[j]->hw_node].wt);
        if (weight_filter->fund != top.fund) return {};
        Rat d = 0;
        for (std::size_t k = 0; k < weight_filter->root.size(); ++k)
            d += top.root[k] - weight_filter->root[k];
        if (!is_integer(d) || d < 0) return {};
        depth_bound = to_long(d);
    }
    for (const auto& f : t.factors) {
        if (!f->truncated) continue;
        if (depth_bound < 0 || depth_bound > f->depth_used)
            fail("TruncatedRange",
                 "a truncated factor cannot guarantee completeness for this weight range");
    }

    std::vector<TensorLabel> out;
    TensorLabel cur(t.n_factors(), 0);
    // depth-pruned odometer over factor nodes
    auto rec = [&](auto&& self, std::size_t j, long depth) -> void {
        if (depth_bound >= 0 && depth > depth_bound) return;
        if (j == t.n_factors()) {
            if (depth_bound >= 0) {
                if (depth != depth_bound) return;
                if (!(t.total_weight(cur) == *weight_filter)) return;
            }
            if (is_hw_label(t, cur)) out.push_back(cur);
            return;
        }
        for (std::size_t v = 0; v < t.factors[j]->nodes.size(); ++v) {
            cur[j] = static_cast<std::int32_t>(v);
            self(self, j + 1, depth + t.factors[j]->nodes[v].depth);
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end(), [&](const TensorLabel& a, const TensorLabel& b) {
        Weight wa = t.total_weight(a), wb = t.total_weight(b);
        if (wa != wb) return wa < wb;
        return a < b;
    });
    return out;
}

std::vector<ComponentInfo> decompose(const TensorCrystal& t) {
    if (t.any_truncated())
        fail("TruncatedRange", "decomposition needs complete factors");
    std::map<TensorLabel, int> comp;
    std::vector<ComponentInfo> out;
    for (const TensorLabel& seed : t.all_labels()) {
        if (comp.count(seed)) continue;
        int id = static_cast<int>(out.size());
        ComponentInfo info;
        std::queue<TensorLabel> queue;
        queue.push(seed);
        comp[seed] = id;
        std::optional<TensorLabel> hw;
        long long size = 0;
        while (!queue.empty()) {
            TensorLabel x = queue.front();
            queue.pop();
            ++size;
            bool top = true;
            for (std::size_t i = 0; i < t.rank(); ++i) {
                auto up = tensor_e(t, x, i);
                if (up) {
                    top = false;
                    if (!comp.count(*up)) {
                        comp[*up] = id;
                        queue.push(*up);
                    }
                }
                auto down = tensor_f(t, x, i);
                if (down && !comp.count(*down)) {
                    comp[*down] = id;
                    queue.push(*down);
                }
            }
            if (top) {
                if (hw) fail("InternalCheck", "two highest-weight labels in one component");
                hw = x;
            }
        }
        if (!hw) fail("InternalCheck", "component without a highest-weight label");
        info.hw_label = *hw;
        info.hw_weight = t.total_weight(*hw);
        info.size = size;
        info.is_cartan = (*hw == t.hw_label());
        out.push_back(std::move(info));
    }
    std::sort(out.begin(), out.end(), [](const ComponentInfo& a, const ComponentInfo& b) {
        if (!(a.hw_weight == b.hw_weight)) return a.hw_weight < b.hw_weight;
        return a.hw_label < b.hw_label;
    });
    return out;
}

nlohmann::json decomposition_to_json(const TensorCrystal& t,
                                     const std::vector<ComponentInfo>& comps) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["kind"] = "decomposition";
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& comp : comps) {
        nlohmann::json root = nlohmann::json::array();
        for (const Rat& q : comp.hw_weight.root) root.push_back(rat_str(q));
        arr.push_back({{"hw_weight",
                        {{"root", root},
                         {"pairings", coroot_pairings(t.cartan(), comp.hw_weight)}}},
                       {"hw_label", comp.hw_label},
                       {"size", comp.size},
                       {"is_cartan", comp.is_cartan}});
    }
    j["components"] = std::move(arr);
    return j;
}

}  // namespace kmc
