#include "kmc/path_crystal.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace kmc {

namespace {

WeightPoint wp_scale(const WeightPoint& x, const Rat& s) {
    WeightPoint y = x;
    y.hw_scale *= s;
    for (auto& r : y.root) r *= s;
    return y;
}

WeightPoint alpha_point(std::size_t rank, std::size_t i) {
    WeightPoint a = wp_zero(rank);
    a.root[i] = 1;
    return a;
}

// velocity of the segment [k, k+1], including the hw_scale coordinate
std::vector<Rat> segment_velocity(const PLPath& p, std::size_t k) {
    Rat dt = p.t[k + 1] - p.t[k];
    std::vector<Rat> v;
    v.reserve(p.pt[k].root.size() + 1);
    v.push_back((p.pt[k + 1].hw_scale - p.pt[k].hw_scale) / dt);
    for (std::size_t j = 0; j < p.pt[k].root.size(); ++j)
        v.push_back((p.pt[k + 1].root[j] - p.pt[k].root[j]) / dt);
    return v;
}

std::vector<Rat> h_profile(const CartanData& c, const std::vector<long>& hw_fund,
                           const PLPath& p, std::size_t i) {
    std::vector<Rat> h(p.t.size());
    for (std::size_t k = 0; k < p.t.size(); ++k) h[k] = wp_pairing(c, hw_fund, p.pt[k], i);
    return h;
}

WeightPoint interpolate(const PLPath& p, std::size_t k, const Rat& t) {
    // point at time t inside segment [k, k+1]
    Rat lam = (t - p.t[k]) / (p.t[k + 1] - p.t[k]);
    return wp_add(p.pt[k], wp_scale(wp_sub(p.pt[k + 1], p.pt[k]), lam));
}

}  // namespace

WeightPoint wp_zero(std::size_t rank) {
    return WeightPoint{Rat(0), std::vector<Rat>(rank, Rat(0))};
}

WeightPoint wp_add(const WeightPoint& a, const WeightPoint& b) {
    WeightPoint x = a;
    x.hw_scale += b.hw_scale;
    for (std::size_t j = 0; j < x.root.size(); ++j) x.root[j] += b.root[j];
    return x;
}

WeightPoint wp_sub(const WeightPoint& a, const WeightPoint& b) {
    WeightPoint x = a;
    x.hw_scale -= b.hw_scale;
    for (std::size_t j = 0; j < x.root.size(); ++j) x.root[j] -= b.root[j];
    return x;
}

Rat wp_pairing(const CartanData& c, const std::vector<long>& hw_fund, const WeightPoint& x,
               std::size_t i) {
    Rat p = x.hw_scale * rat(hw_fund[i]);
    for (std::size_t j = 0; j < x.root.size(); ++j)
        if (x.root[j] != 0) p += rat(c.a[i][j]) * x.root[j];
    return p;
}

WeightPoint wp_reflect(const CartanData& c, const std::vector<long>& hw_fund,
                       const WeightPoint& x, std::size_t i) {
    Rat p = wp_pairing(c, hw_fund, x, i);
    WeightPoint y = x;
    y.root[i] -= p;
    return y;
}

PLPath normalize_path(PLPath p) {
    const std::size_t n = p.t.size();
    if (n < 2 || p.t.size() != p.pt.size()) fail("BadPath", "path needs matching breakpoint lists");
    if (p.t.front() != 0 || p.t.back() != 1) fail("BadPath", "path must run over t in [0,1]");
    for (std::size_t k = 0; k + 1 < n; ++k)
        if (!(p.t[k] < p.t[k + 1])) fail("BadPath", "breakpoint times must strictly increase");

    PLPath out;
    out.t.push_back(p.t[0]);
    out.pt.push_back(p.pt[0]);
    for (std::size_t k = 1; k + 1 < n; ++k) {
        // drop the breakpoint when the velocity does not change across it
        PLPath probe;
        probe.t = {out.t.back(), p.t[k], p.t[k + 1]};
        probe.pt = {out.pt.back(), p.pt[k], p.pt[k + 1]};
        if (segment_velocity(probe, 0) == segment_velocity(probe, 1)) continue;
        out.t.push_back(p.t[k]);
        out.pt.push_back(p.pt[k]);
    }
    out.t.push_back(p.t[n - 1]);
    out.pt.push_back(p.pt[n - 1]);
    return out;
}

PLPath straight_path(const CartanData& c, const std::vector<long>& hw_fund) {
    if (hw_fund.size() != c.rank()) fail("MixedCartanData", "weight length does not match rank");
    for (long v : hw_fund)
        if (v < 0) fail("NotDominant", "highest weight must have nonnegative coroot pairings");
    PLPath p;
    p.t = {Rat(0), Rat(1)};
    WeightPoint end = wp_zero(c.rank());
    end.hw_scale = 1;
    p.pt = {wp_zero(c.rank()), end};
    return p;
}

std::optional<PLPath> root_operator_f(const CartanData& c, const std::vector<long>& hw_fund,
                                      const PLPath& p, std::size_t i) {
    const std::size_t n = p.t.size();
    std::vector<Rat> h = h_profile(c, hw_fund, p, i);
    Rat m = *std::min_element(h.begin(), h.end());
    Rat target = m + 1;
    if (h.back() < target) return std::nullopt;

    std::size_t k0 = 0;
    for (std::size_t k = 0; k < n; ++k)
        if (h[k] == m) k0 = k;  // last attainment; always a breakpoint
    std::size_t k1 = k0 + 1;
    while (h[k1] < target) ++k1;

    const WeightPoint base = p.pt[k0];
    auto reflected = [&](const WeightPoint& x) {
        return wp_add(base, wp_reflect(c, hw_fund, wp_sub(x, base), i));
    };
    const WeightPoint alpha = alpha_point(c.rank(), i);

    PLPath out;
    for (std::size_t k = 0; k <= k0; ++k) {
        out.t.push_back(p.t[k]);
        out.pt.push_back(p.pt[k]);
    }
    for (std::size_t k = k0 + 1; k < k1; ++k) {
        out.t.push_back(p.t[k]);
        out.pt.push_back(reflected(p.pt[k]));
    }
    if (h[k1] == target) {
        // the boundary is an existing breakpoint; reflection there equals translation
        out.t.push_back(p.t[k1]);
        out.pt.push_back(wp_sub(p.pt[k1], alpha));
        for (std::size_t k = k1 + 1; k < n; ++k) {
            out.t.push_back(p.t[k]);
            out.pt.push_back(wp_sub(p.pt[k], alpha));
        }
    } else {
        Rat lam = (target - h[k1 - 1]) / (h[k1] - h[k1 - 1]);
        Rat t1 = p.t[k1 - 1] + lam * (p.t[k1] - p.t[k1 - 1]);
        WeightPoint p1 = interpolate(p, k1 - 1, t1);
        out.t.push_back(t1);
        out.pt.push_back(wp_sub(p1, alpha));
        for (std::size_t k = k1; k < n; ++k) {
            out.t.push_back(p.t[k]);
            out.pt.push_back(wp_sub(p.pt[k], alpha));
        }
    }
    return normalize_path(std::move(out));
}

std::optional<PLPath> root_operator_e(const CartanData& c, const std::vector<long>& hw_fund,
                                      const PLPath& p, std::size_t i) {
    const std::size_t n = p.t.size();
    std::vector<Rat> h = h_profile(c, hw_fund, p, i);
    Rat m = *std::min_element(h.begin(), h.end());
    if (m > -1) return std::nullopt;
    Rat target = m + 1;

    std::size_t k1 = 0;
    while (h[k1] != m) ++k1;  // first attainment; always a breakpoint
    std::size_t k0 = k1 - 1;
    while (h[k0] < target) --k0;  // h[0] = 0 >= target, so this terminates

    const WeightPoint alpha = alpha_point(c.rank(), i);

    PLPath out;
    for (std::size_t k = 0; k <= k0; ++k) {
        out.t.push_back(p.t[k]);
        out.pt.push_back(p.pt[k]);
    }
    WeightPoint base;
    if (h[k0] == target) {
        base = p.pt[k0];
    } else {
        // crossing strictly inside segment [k0, k0+1]
        Rat lam = (h[k0] - target) / (h[k0] - h[k0 + 1]);
        Rat t0 = p.t[k0] + lam * (p.t[k0 + 1] - p.t[k0]);
        base = interpolate(p, k0, t0);
        out.t.push_back(t0);
        out.pt.push_back(base);
    }
    auto reflected = [&](const WeightPoint& x) {
        return wp_add(base, wp_reflect(c, hw_fund, wp_sub(x, base), i));
    };
    for (std::size_t k = k0 + 1; k < k1; ++k) {
        out.t.push_back(p.t[k]);
        out.pt.push_back(reflected(p.pt[k]));
    }
    // at k1 the reflection equals translation by +alpha
    for (std::size_t k = k1; k < n; ++k) {
        out.t.push_back(p.t[k]);
        out.pt.push_back(wp_add(p.pt[k], alpha));
    }
    return normalize_path(std::move(out));
}

int path_eps(const CartanData& c, const std::vector<long>& hw_fund, const PLPath& p,
             std::size_t i) {
    std::vector<Rat> h = h_profile(c, hw_fund, p, i);
    Rat m = *std::min_element(h.begin(), h.end());
    return static_cast<int>(to_long(-m));
}

int path_phi(const CartanData& c, const std::vector<long>& hw_fund, const PLPath& p,
             std::size_t i) {
    std::vector<Rat> h = h_profile(c, hw_fund, p, i);
    Rat m = *std::min_element(h.begin(), h.end());
    return static_cast<int>(to_long(h.back() - m));
}

Weight path_endpoint_weight(const CartanData& c, const std::vector<long>& hw_fund,
                            const PLPath& p) {
    (void)c;
    if (p.pt.back().hw_scale != 1)
        fail("BadPath", "endpoint must carry the full highest-weight coefficient");
    return Weight{hw_fund, p.pt.back().root};
}

std::string path_key(const PLPath& p) {
    std::ostringstream os;
    for (std::size_t k = 0; k < p.t.size(); ++k) {
        if (k) os << "|";
        os << rat_str(p.t[k]) << ":" << rat_str(p.pt[k].hw_scale) << ":";
        for (std::size_t j = 0; j < p.pt[k].root.size(); ++j) {
            if (j) os << ",";
            os << rat_str(p.pt[k].root[j]);
        }
    }
    return os.str();
}

PLPath path_from_key(const std::string& key, std::size_t rank) {
    PLPath p;
    std::stringstream ss(key);
    std::string bp;
    while (std::getline(ss, bp, '|')) {
        std::stringstream bs(bp);
        std::string t_str, s_str, roots;
        if (!std::getline(bs, t_str, ':') || !std::getline(bs, s_str, ':') ||
            !std::getline(bs, roots))
            fail("BadPath", "malformed path key");
        WeightPoint x = wp_zero(rank);
        x.hw_scale = parse_rat(s_str);
        std::stringstream rs(roots);
        std::string r;
        std::size_t j = 0;
        while (std::getline(rs, r, ',')) {
            if (j >= rank) fail("BadPath", "path key has too many root coordinates");
            x.root[j++] = parse_rat(r);
        }
        if (j != rank) fail("BadPath", "path key has too few root coordinates");
        p.t.push_back(parse_rat(t_str));
        p.pt.push_back(std::move(x));
    }
    return normalize_path(std::move(p));
}

std::int32_t CrystalGraph::node_by_key(const std::string& key) const {
    auto it = index.find(key);
    return it == index.end() ? -1 : it->second;
}

std::vector<std::int32_t> CrystalGraph::nodes_by_pairings(
    const std::vector<long>& pairings) const {
    std::vector<std::int32_t> out;
    for (std::size_t v = 0; v < nodes.size(); ++v)
        if (coroot_pairings(cartan, nodes[v].wt) == pairings)
            out.push_back(static_cast<std::int32_t>(v));
    return out;
}

namespace {

std::int32_t add_node(CrystalGraph& g, std::string key, PLPath path, int depth) {
    CrystalGraph::Node node;
    node.key = std::move(key);
    node.wt = path_endpoint_weight(g.cartan, g.hw_fund, path);
    node.depth = depth;
    node.eps.resize(g.rank());
    node.phi.resize(g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i) {
        node.eps[i] = path_eps(g.cartan, g.hw_fund, path, i);
        node.phi[i] = path_phi(g.cartan, g.hw_fund, path, i);
    }
    node.path = std::move(path);
    g.nodes.push_back(std::move(node));
    g.f_edge.emplace_back(g.rank(), -1);
    g.e_edge.emplace_back(g.rank(), -1);
    std::int32_t id = static_cast<std::int32_t>(g.nodes.size() - 1);
    g.index.emplace(g.nodes.back().key, id);
    g.depth_used = std::max(g.depth_used, depth);
    return id;
}

// Positive 1-dimensional left kernel of the Cartan matrix, when there is one;
// used to read off the level of an affine weight.
std::optional<std::vector<Rat>> positive_left_kernel(const CartanData& c) {
    const std::size_t n = c.rank();
    std::vector<std::vector<long>> at(n, std::vector<long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) at[i][j] = c.a[j][i];
    // reuse the elimination in root_data via dominance? keep a local pass instead
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = rat(at[i][j]);
    std::vector<long> pivot_of_col(n, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t p = row;
        while (p < n && m[p][col] == 0) ++p;
        if (p == n) continue;
        std::swap(m[p], m[row]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rat factor = m[r][col] / m[row][col];
            for (std::size_t cc = 0; cc < n; ++cc) m[r][cc] -= factor * m[row][cc];
        }
        pivot_of_col[col] = static_cast<long>(row);
        ++row;
    }
    std::vector<std::vector<Rat>> basis;
    for (std::size_t col = 0; col < n; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        std::vector<Rat> v(n, Rat(0));
        v[col] = 1;
        for (std::size_t c2 = 0; c2 < n; ++c2) {
            long pr = pivot_of_col[c2];
            if (pr >= 0)
                v[c2] = -m[static_cast<std::size_t>(pr)][col] / m[static_cast<std::size_t>(pr)][c2];
        }
        basis.push_back(std::move(v));
    }
    if (basis.size() != 1) return std::nullopt;
    bool pos = true, neg = true;
    for (const Rat& q : basis[0]) {
        if (q <= 0) pos = false;
        if (q >= 0) neg = false;
    }
    if (neg)
        for (Rat& q : basis[0]) q = -q;
    if (!(pos || neg)) return std::nullopt;
    return basis[0];
}

}  // namespace

CrystalGraph generate_crystal(const CartanData& c, const std::vector<long>& hw_fund,
                              std::optional<int> depth_cutoff) {
    if (hw_fund.size() != c.rank()) fail("MixedCartanData", "weight length does not match rank");
    for (long v : hw_fund)
        if (v < 0) fail("NotDominant", "highest weight must have nonnegative coroot pairings");
    if (depth_cutoff && *depth_cutoff < 0) fail("BadCutoff", "depth cutoff must be >= 0");
    if (!depth_cutoff && c.kind != CartanKind::finite)
        fail("NotFiniteType", "closure generation needs finite type; pass a depth cutoff");

    CrystalGraph g;
    g.cartan = c;
    g.hw_fund = hw_fund;
    if (c.kind == CartanKind::affine) {
        if (auto lk = positive_left_kernel(c)) {
            Rat level = 0;
            for (std::size_t i = 0; i < c.rank(); ++i) level += (*lk)[i] * rat(hw_fund[i]);
            bool zero_weight =
                std::all_of(hw_fund.begin(), hw_fund.end(), [](long v) { return v == 0; });
            if (level == 0 && !zero_weight) g.level_zero_affine = true;
        }
    }

    PLPath hw = straight_path(c, hw_fund);
    std::string hw_key = path_key(hw);  // sequenced before the move below
    add_node(g, std::move(hw_key), std::move(hw), 0);

    std::vector<std::int32_t> frontier = {0};
    int depth = 0;
    while (!frontier.empty()) {
        if (depth_cutoff && depth == *depth_cutoff) {
            for (std::int32_t v : frontier)
                for (std::size_t i = 0; i < g.rank(); ++i)
                    if (g.nodes[v].phi[i] > 0) g.truncated = true;
            break;
        }
        std::map<std::string, PLPath> fresh;
        std::vector<std::tuple<std::int32_t, std::size_t, std::string>> pend;
        for (std::int32_t v : frontier) {
            for (std::size_t i = 0; i < g.rank(); ++i) {
                if (g.nodes[v].phi[i] == 0) continue;
                auto child = root_operator_f(c, hw_fund, g.nodes[v].path, i);
                if (!child) fail("InternalCheck", "phi > 0 but the lowering operator failed");
                std::string key = path_key(*child);
                if (g.index.find(key) == g.index.end() && fresh.find(key) == fresh.end())
                    fresh.emplace(key, std::move(*child));
                pend.emplace_back(v, i, std::move(key));
            }
        }
        std::vector<std::int32_t> next;
        next.reserve(fresh.size());
        for (auto& [key, path] : fresh)  // sorted keys: deterministic node numbering
            next.push_back(add_node(g, key, std::move(path), depth + 1));
        for (auto& [v, i, key] : pend) {
            std::int32_t u = g.index.at(key);
            g.f_edge[v][i] = u;
            g.e_edge[u][i] = v;
        }
        frontier = std::move(next);
        ++depth;
    }
    return g;
}

VerifyReport verify_crystal_axioms(const CrystalGraph& g) {
    VerifyReport rep;
    const auto& c = g.cartan;
    for (std::size_t v = 0; v < g.nodes.size(); ++v) {
        const auto& node = g.nodes[v];
        for (std::size_t i = 0; i < g.rank(); ++i) {
            long pair_vi = coroot_pairing_int(c, node.wt, i);
            if (node.phi[i] - node.eps[i] != pair_vi)
                rep.add("phi-eps != pairing at node " + std::to_string(v) + " color " +
                        std::to_string(i));

            std::int32_t u = g.f_edge[v][i];
            auto fv = root_operator_f(c, g.hw_fund, node.path, i);
            if (u >= 0) {
                if (!fv || path_key(*fv) != g.nodes[u].key)
                    rep.add("f-edge disagrees with the path operator at node " +
                            std::to_string(v) + " color " + std::to_string(i));
                if (g.e_edge[u][i] != static_cast<std::int32_t>(v))
                    rep.add("edge not bidirectional at node " + std::to_string(v) + " color " +
                            std::to_string(i));
                Weight expect = wsub(node.wt, simple_root_weight(g.rank(), i));
                if (g.nodes[u].wt != expect)
                    rep.add("weight step != -alpha_i at node " + std::to_string(v) + " color " +
                            std::to_string(i));
            } else if (fv && !g.truncated) {
                rep.add("missing f-edge on a complete graph at node " + std::to_string(v) +
                        " color " + std::to_string(i));
            }

            std::int32_t w = g.e_edge[v][i];
            auto ev = root_operator_e(c, g.hw_fund, node.path, i);
            if (w >= 0) {
                if (!ev || path_key(*ev) != g.nodes[w].key)
                    rep.add("e-edge disagrees with the path operator at node " +
                            std::to_string(v) + " color " + std::to_string(i));
                if (g.f_edge[w][i] != static_cast<std::int32_t>(v))
                    rep.add("edge not bidirectional at node " + std::to_string(v) + " color " +
                            std::to_string(i));
            } else if (ev) {
                // raising edges always stay inside the generated depth range
                rep.add("missing e-edge at node " + std::to_string(v) + " color " +
                        std::to_string(i));
            }

            // eps equals the maximal raising power along materialized edges
            int up = 0;
            for (std::int32_t x = g.e_edge[v][i]; x >= 0; x = g.e_edge[x][i]) ++up;
            if (up != node.eps[i])
                rep.add("eps != maximal raising power at node " + std::to_string(v) + " color " +
                        std::to_string(i));
            if (!g.truncated) {
                int down = 0;
                for (std::int32_t x = g.f_edge[v][i]; x >= 0; x = g.f_edge[x][i]) ++down;
                if (down != node.phi[i])
                    rep.add("phi != maximal lowering power at node " + std::to_string(v) +
                            " color " + std::to_string(i));
            }
        }
    }
    for (std::size_t i = 0; i < g.rank(); ++i)
        if (g.nodes[g.hw_node].eps[i] != 0) rep.add("hw node has a raising operator");
    return rep;
}

nlohmann::json crystal_to_json(const CrystalGraph& g) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["kind"] = "crystal_graph";
    j["cartan"] = {{"name", g.cartan.name},
                   {"a", g.cartan.a},
                   {"d", g.cartan.d},
                   {"kind", kind_name(g.cartan.kind)}};
    j["hw"] = g.hw_fund;
    j["hw_node"] = g.hw_node;
    j["truncated"] = g.truncated;
    j["depth_used"] = g.depth_used;
    j["level_zero_affine"] = g.level_zero_affine;
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& node : g.nodes) {
        nlohmann::json root = nlohmann::json::array();
        for (const Rat& q : node.wt.root) root.push_back(rat_str(q));
        nodes.push_back({{"key", node.key},
                         {"depth", node.depth},
                         {"wt", {{"root", root}, {"pairings", coroot_pairings(g.cartan, node.wt)}}},
                         {"eps", node.eps},
                         {"phi", node.phi}});
    }
    j["nodes"] = std::move(nodes);
    nlohmann::json edges = nlohmann::json::array();
    for (std::size_t v = 0; v < g.nodes.size(); ++v)
        for (std::size_t i = 0; i < g.rank(); ++i)
            if (g.f_edge[v][i] >= 0) edges.push_back({v, i, g.f_edge[v][i]});
    j["edges"] = std::move(edges);
    return j;
}

CrystalGraph crystal_from_json(const nlohmann::json& j) {
    if (!j.is_object() || j.value("kind", "") != "crystal_graph")
        fail("BadImport", "not a crystal_graph document");
    if (j.value("schema_version", 0) != 1) fail("BadImport", "unsupported schema_version");
    const auto& jc = j.at("cartan");
    CartanData c = validate_cartan(jc.at("a").get<std::vector<std::vector<long>>>(),
                                   jc.at("d").get<std::vector<long>>(),
                                   jc.value("name", "custom"));
    CrystalGraph g;
    g.cartan = std::move(c);
    g.hw_fund = j.at("hw").get<std::vector<long>>();
    if (g.hw_fund.size() != g.cartan.rank()) fail("BadImport", "hw length mismatch");
    g.hw_node = j.at("hw_node").get<std::int32_t>();
    g.truncated = j.at("truncated").get<bool>();
    g.level_zero_affine = j.value("level_zero_affine", false);
    for (const auto& jn : j.at("nodes")) {
        PLPath path = path_from_key(jn.at("key").get<std::string>(), g.cartan.rank());
        add_node(g, jn.at("key").get<std::string>(), std::move(path),
                 jn.at("depth").get<int>());
    }
    g.depth_used = j.at("depth_used").get<int>();
    for (const auto& je : j.at("edges")) {
        std::int32_t v = je.at(0).get<std::int32_t>();
        std::size_t i = je.at(1).get<std::size_t>();
        std::int32_t u = je.at(2).get<std::int32_t>();
        if (v < 0 || u < 0 || static_cast<std::size_t>(v) >= g.nodes.size() ||
            static_cast<std::size_t>(u) >= g.nodes.size() || i >= g.rank())
            fail("BadImport", "edge out of range");
        g.f_edge[v][i] = u;
        g.e_edge[u][i] = v;
    }
    if (g.hw_node < 0 || static_cast<std::size_t>(g.hw_node) >= g.nodes.size())
        fail("BadImport", "hw_node out of range");
    return g;
}

std::string crystal_to_dot(const CrystalGraph& g) {
    static const char* palette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
                                    "#ff7f00", "#a65628", "#f781bf", "#999999"};
    std::ostringstream os;
    os << "digraph crystal {\n  rankdir=TB;\n  node [shape=box,fontname=\"monospace\"];\n";
    for (std::size_t v = 0; v < g.nodes.size(); ++v) {
        os << "  n" << v << " [label=\"" << weight_str(g.cartan, g.nodes[v].wt) << "\"];\n";
    }
    for (std::size_t v = 0; v < g.nodes.size(); ++v)
        for (std::size_t i = 0; i < g.rank(); ++i)
            if (g.f_edge[v][i] >= 0)
                os << "  n" << v << " -> n" << g.f_edge[v][i] << " [label=\"" << i
                   << "\",color=\"" << palette[i % 8] << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace kmc
