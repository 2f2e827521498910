#pragma once

#include <map>

#include "kmc/tensor_crystal.hpp"

namespace kmc {

struct Character {
    std::map<Weight, long long> mult;
    bool partial = false;  // computed from a truncated source

    long long total() const;
};

// Weight -> node/label count. Truncated sources are rejected unless the caller
// opts in, in which case the result is tagged partial.
Character character(const CrystalGraph& g, bool allow_truncated = false);
Character character(const TensorCrystal& t, bool allow_truncated = false);

Character convolve(const Character& a, const Character& b);

// Refuses to compare a partial character against a complete one.
bool characters_equal(const Character& a, const Character& b);

nlohmann::json character_to_json(const CartanData& c, const Character& chi);

// Positive roots in simple-root coordinates, via reflection closure.
std::vector<std::vector<long>> positive_roots(const CartanData& c);

// Exact product-formula dimension of the irreducible with this highest weight.
Int weyl_dimension(const CartanData& c, const std::vector<long>& hw_fund);

// Local axiom check certifying a complete simply-laced graph as a genuine
// highest-weight crystal; eps/phi are recomputed as edge-chain lengths so the
// check is independent of the generator's cached statistics.
VerifyReport verify_stembridge(const CrystalGraph& g);

// Sum of coroot pairings of the given dominant weights at color i,
// cross-checked against h_minus at the highest-weight tensor label.
long cyclotomic_dot_dimension(const CartanData& c, const std::vector<std::vector<long>>& nus,
                              std::size_t i);

}  // namespace kmc
