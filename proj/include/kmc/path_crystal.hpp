#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "kmc/root_data.hpp"

namespace kmc {

// Point on a path, relative to the crystal's highest weight lambda:
//     point = hw_scale * lambda + sum_j root[j] * alpha_j.
// All coordinates are exact rationals; the pairing with any coroot is exact.
struct WeightPoint {
    Rat hw_scale;
    std::vector<Rat> root;

    friend bool operator==(const WeightPoint&, const WeightPoint&) = default;
};

WeightPoint wp_zero(std::size_t rank);
WeightPoint wp_add(const WeightPoint& a, const WeightPoint& b);
WeightPoint wp_sub(const WeightPoint& a, const WeightPoint& b);
Rat wp_pairing(const CartanData& c, const std::vector<long>& hw_fund, const WeightPoint& x,
               std::size_t i);
WeightPoint wp_reflect(const CartanData& c, const std::vector<long>& hw_fund,
                       const WeightPoint& x, std::size_t i);

// Piecewise-linear path as normalized breakpoints: t strictly increasing from
// 0 to 1, point[0] the origin, and no interior breakpoint whose incoming and
// outgoing velocities agree (canonical form, load-bearing for deduplication).
struct PLPath {
    std::vector<Rat> t;
    std::vector<WeightPoint> pt;

    friend bool operator==(const PLPath&, const PLPath&) = default;
};

PLPath normalize_path(PLPath p);

// pi(t) = t * nu, the dominant straight path (the highest weight element).
PLPath straight_path(const CartanData& c, const std::vector<long>& hw_fund);

// Littelmann lowering operator: reflect after the last attainment of the
// minimum of h_i up to the first return to min+1; undefined when the endpoint
// stays below min+1. Raising operator is the mirror image.
std::optional<PLPath> root_operator_f(const CartanData& c, const std::vector<long>& hw_fund,
                                      const PLPath& p, std::size_t i);
std::optional<PLPath> root_operator_e(const CartanData& c, const std::vector<long>& hw_fund,
                                      const PLPath& p, std::size_t i);

// Exact statistics read off the h_i profile: eps = -min h_i, phi = h_i(1) - min h_i.
int path_eps(const CartanData& c, const std::vector<long>& hw_fund, const PLPath& p,
             std::size_t i);
int path_phi(const CartanData& c, const std::vector<long>& hw_fund, const PLPath& p,
             std::size_t i);

Weight path_endpoint_weight(const CartanData& c, const std::vector<long>& hw_fund,
                            const PLPath& p);

std::string path_key(const PLPath& p);
PLPath path_from_key(const std::string& key, std::size_t rank);

struct CrystalGraph {
    CartanData cartan;
    std::vector<long> hw_fund;

    struct Node {
        std::string key;
        PLPath path;
        Weight wt;
        std::vector<int> eps, phi;
        int depth = 0;
    };

    std::vector<Node> nodes;
    // f_edge[v][i] = target of the i-colored lowering edge, -1 when absent
    std::vector<std::vector<std::int32_t>> f_edge, e_edge;
    std::int32_t hw_node = 0;
    bool truncated = false;
    int depth_used = 0;
    bool level_zero_affine = false;

    std::unordered_map<std::string, std::int32_t> index;

    std::int32_t node_by_key(const std::string& key) const;
    std::vector<std::int32_t> nodes_by_pairings(const std::vector<long>& pairings) const;
    std::size_t rank() const { return cartan.rank(); }
};

// BFS closure of the straight path under all f_i, deduplicated by canonical
// path keys. Without a cutoff the closure runs to exhaustion (finite type
// only); with a cutoff the graph is truncated at that many f-applications.
CrystalGraph generate_crystal(const CartanData& c, const std::vector<long>& hw_fund,
                              std::optional<int> depth_cutoff = std::nullopt);

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> violations;

    void add(std::string v) {
        ok = false;
        violations.push_back(std::move(v));
    }
};

// Edge bidirectionality, weight step, phi - eps = pairing, and eps/phi equal
// to the maximal operator powers, all recomputed from the path operators.
VerifyReport verify_crystal_axioms(const CrystalGraph& g);

nlohmann::json crystal_to_json(const CrystalGraph& g);
CrystalGraph crystal_from_json(const nlohmann::json& j);
std::string crystal_to_dot(const CrystalGraph& g);

}  // namespace kmc
