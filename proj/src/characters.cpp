#include "kmc/characters.hpp"

#include <algorithm>
#include <set>

namespace kmc {

long long Character::total() const {
    long long t = 0;
    for (const auto& [w, m] : mult) t += m;
    return t;
}

Character character(const CrystalGraph& g, bool allow_truncated) {
    if (g.truncated && !allow_truncated)
        fail("TruncatedWithoutFlag", "character of a truncated graph needs the partial flag");
    Character chi;
    chi.partial = g.truncated;
    for (const auto& node : g.nodes) ++chi.mult[node.wt];
    return chi;
}

Character character(const TensorCrystal& t, bool allow_truncated) {
    if (t.any_truncated() && !allow_truncated)
        fail("TruncatedWithoutFlag", "character of a truncated tensor needs the partial flag");
    Character chi;
    chi.partial = t.any_truncated();
    for (const TensorLabel& l : t.all_labels()) ++chi.mult[t.total_weight(l)];
    return chi;
}

Character convolve(const Character& a, const Character& b) {
    Character out;
    out.partial = a.partial || b.partial;
    for (const auto& [wa, ma] : a.mult)
        for (const auto& [wb, mb] : b.mult) out.mult[wadd(wa, wb)] += ma * mb;
    return out;
}

bool characters_equal(const Character& a, const Character& b) {
    if (a.partial != b.partial)
        fail("TruncatedWithoutFlag", "cannot compare a partial character with a complete one");
    return a.mult == b.mult;
}

nlohmann::json character_to_json(const CartanData& c, const Character& chi) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["kind"] = "character";
    j["partial"] = chi.partial;
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [w, m] : chi.mult) {
        nlohmann::json root = nlohmann::json::array();
        for (const Rat& q : w.root) root.push_back(rat_str(q));
        entries.push_back({{"fund", w.fund},
                           {"root", root},
                           {"pairings", coroot_pairings(c, w)},
                           {"multiplicity", m}});
    }
    j["entries"] = std::move(entries);
    return j;
}

std::vector<std::vector<long>> positive_roots(const CartanData& c) {
    if (c.kind != CartanKind::finite)
        fail("NotFiniteType", "positive roots enumerate only in finite type");
    const std::size_t n = c.rank();
    std::set<std::vector<long>> seen;
    std::vector<std::vector<long>> queue;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<long> e(n, 0);
        e[i] = 1;
        seen.insert(e);
        queue.push_back(std::move(e));
    }
    while (!queue.empty()) {
        std::vector<long> beta = std::move(queue.back());
        queue.pop_back();
        for (std::size_t i = 0; i < n; ++i) {
            long pairing = 0;
            for (std::size_t j = 0; j < n; ++j) pairing += c.a[i][j] * beta[j];
            std::vector<long> refl = beta;
            refl[i] -= pairing;
            bool positive = false, negative = false;
            for (long x : refl) {
                if (x > 0) positive = true;
                if (x < 0) negative = true;
            }
            if (!positive || negative) continue;
            if (seen.insert(refl).second) queue.push_back(std::move(refl));
        }
    }
    return {seen.begin(), seen.end()};
}

Int weyl_dimension(const CartanData& c, const std::vector<long>& hw_fund) {
    if (c.kind != CartanKind::finite)
        fail("NotFiniteType", "the dimension formula needs finite type");
    if (hw_fund.size() != c.rank()) fail("MixedCartanData", "weight length does not match rank");
    for (long f : hw_fund)
        if (f < 0) fail("NotDominant", "dimension formula needs a dominant weight");
    Rat dim = 1;
    for (const auto& beta : positive_roots(c)) {
        Rat num = 0, den = 0;
        for (std::size_t j = 0; j < c.rank(); ++j) {
            Rat scaled = rat(beta[j]) * rat(c.d[j]);
            num += scaled * rat(hw_fund[j] + 1);
            den += scaled;
        }
        dim *= num / den;
    }
    if (!is_integer(dim)) fail("InternalCheck", "dimension product is not an integer");
    return dim.get_num();
}

VerifyReport verify_stembridge(const CrystalGraph& g) {
    if (!g.cartan.simply_laced())
        fail("NotSimplyLaced", "local axiom check covers simply-laced types only");
    if (g.truncated) fail("TruncatedRange", "local axiom check needs a complete graph");

    VerifyReport rep;
    const std::size_t n = g.rank();
    const std::size_t count = g.nodes.size();

    // chain lengths from the edges alone
    std::vector<std::size_t> order(count);
    for (std::size_t v = 0; v < count; ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return g.nodes[a].depth < g.nodes[b].depth; });
    std::vector<std::vector<int>> eps(count, std::vector<int>(n, 0));
    std::vector<std::vector<int>> phi(count, std::vector<int>(n, 0));
    for (std::size_t v : order)
        for (std::size_t i = 0; i < n; ++i)
            eps[v][i] = g.e_edge[v][i] < 0 ? 0 : eps[g.e_edge[v][i]][i] + 1;
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        for (std::size_t i = 0; i < n; ++i)
            phi[*it][i] = g.f_edge[*it][i] < 0 ? 0 : phi[g.f_edge[*it][i]][i] + 1;

    auto walk = [&](std::int32_t v, std::initializer_list<std::size_t> colors) -> std::int32_t {
        for (std::size_t i : colors) {
            if (v < 0) return -1;
            v = g.e_edge[v][i];
        }
        return v;
    };
    auto walk_f = [&](std::int32_t v, std::initializer_list<std::size_t> colors) -> std::int32_t {
        for (std::size_t i : colors) {
            if (v < 0) return -1;
            v = g.f_edge[v][i];
        }
        return v;
    };
    auto where = [](std::size_t v, std::size_t i, std::size_t j) {
        return " at node " + std::to_string(v) + " colors (" + std::to_string(i) + "," +
               std::to_string(j) + ")";
    };

    for (std::size_t v = 0; v < count; ++v) {
        for (std::size_t i = 0; i < n; ++i) {
            long pairing = coroot_pairing_int(g.cartan, g.nodes[v].wt, i);
            if (phi[v][i] - eps[v][i] != pairing)
                rep.add("phi - eps != coroot pairing at node " + std::to_string(v) + " color " +
                        std::to_string(i));
            std::int32_t u = g.e_edge[v][i];
            for (std::size_t j = 0; j < n && u >= 0; ++j) {
                if (j == i) continue;
                long a = g.cartan.a[j][i];
                int de = eps[u][j] - eps[v][j];
                int dp = phi[u][j] - phi[v][j];
                if (dp - de != a) rep.add("raising step breaks the weight identity" + where(v, i, j));
                if (de != 0 && de != -a) rep.add("raising moves eps_j outside {0,-a}" + where(v, i, j));
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                std::int32_t ei = g.e_edge[v][i], ej = g.e_edge[v][j];
                if (ei >= 0 && ej >= 0) {
                    int dij = eps[ei][j] - eps[v][j];  // change of eps_j under e_i
                    int dji = eps[ej][i] - eps[v][i];
                    if (dij == 0 || dji == 0) {
                        std::int32_t a = walk(v, {i, j}), b = walk(v, {j, i});
                        if (a < 0 || a != b) rep.add("raising square fails" + where(v, i, j));
                    } else if (dij == 1 && dji == 1) {
                        std::int32_t a = walk(v, {i, j, j, i}), b = walk(v, {j, i, i, j});
                        if (a < 0 || a != b) rep.add("raising bond relation fails" + where(v, i, j));
                    }
                }
                std::int32_t fi = g.f_edge[v][i], fj = g.f_edge[v][j];
                if (fi >= 0 && fj >= 0) {
                    int dij = phi[v][j] - phi[fi][j];  // drop of phi_j under f_i
                    int dji = phi[v][i] - phi[fj][i];
                    if (dij == 0 || dji == 0) {
                        std::int32_t a = walk_f(v, {i, j}), b = walk_f(v, {j, i});
                        if (a < 0 || a != b) rep.add("lowering square fails" + where(v, i, j));
                    } else if (dij == 1 && dji == 1) {
                        std::int32_t a = walk_f(v, {i, j, j, i}), b = walk_f(v, {j, i, i, j});
                        if (a < 0 || a != b) rep.add("lowering bond relation fails" + where(v, i, j));
                    }
                }
            }
        }
    }
    return rep;
}

long cyclotomic_dot_dimension(const CartanData& c, const std::vector<std::vector<long>>& nus,
                              std::size_t i) {
    if (i >= c.rank()) fail("FactorIndexOutOfRange", "color index out of range");
    if (nus.empty()) return 0;
    long sum = 0;
    for (const auto& nu : nus) {
        if (nu.size() != c.rank()) fail("MixedCartanData", "weight length does not match rank");
        sum += nu[i];
    }
    // cross-check against the lowering statistic at the highest-weight label
    std::vector<std::shared_ptr<const CrystalGraph>> factors;
    factors.reserve(nus.size());
    for (const auto& nu : nus)
        factors.push_back(std::make_shared<CrystalGraph>(generate_crystal(c, nu, 0)));
    TensorCrystal t = build_tensor(std::move(factors));
    auto [plus, minus] = h_stats(t, t.hw_label(), i);
    if (plus != 0 || minus != sum)
        fail("InternalCheck", "pairing sum disagrees with the signature statistic");
    return sum;
}

}  // namespace kmc
