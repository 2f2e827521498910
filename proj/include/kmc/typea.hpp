#pragma once

#include <utility>

#include "kmc/tensor_crystal.hpp"

namespace kmc {

struct Partition {
    std::vector<long> parts;  // weakly decreasing, positive

    long rows() const { return static_cast<long>(parts.size()); }
    long first() const { return parts.empty() ? 0 : parts.front(); }
};

Partition make_partition(std::vector<long> parts);

// Marked boxes of the residue-r diagonals, (x, y) = (column, row), both
// 1-based, content = x - y. Stored in increasing-content order, so the left
// boundary marker (0, *) comes first and the right one (*, 0) last.
struct CondensationProfile {
    long p = 0;
    long r = 0;
    std::vector<std::pair<long, long>> boxes;
    std::vector<long> m;  // m_k = y_k - y_{k+1}, each within [0, p]

    std::vector<std::size_t> nontrivial() const;  // positions with 0 < m_k < p
};

CondensationProfile residue_condense(const Partition& lam, long p, long r);
nlohmann::json profile_to_json(const CondensationProfile& prof);

// Tuples of strictly decreasing blocks with entries in {1..m}.
struct ParabolicLabels {
    long m = 0;
    std::vector<long> blocks;
    std::vector<std::vector<std::vector<long>>> labels;
};

ParabolicLabels parabolic_labels(long m, const std::vector<long>& blocks);

// Coroot pairing vector of the wedge weight picked out by a block, over the
// rank m-1 type A root data.
std::vector<long> block_pairings(long m, const std::vector<long>& block);

// Match one parabolic label to the unique tensor label with the same
// per-factor weights (factor weights here are multiplicity-free).
TensorLabel parabolic_to_tensor_label(long m, const std::vector<std::vector<long>>& label,
                                      const TensorCrystal& t);

}  // namespace kmc
