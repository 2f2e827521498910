#include "kmc/typea.hpp"

#include <algorithm>

namespace kmc {

Partition make_partition(std::vector<long> parts) {
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (parts[k] <= 0) fail("BadPartition", "parts must be positive");
        if (k && parts[k] > parts[k - 1]) fail("BadPartition", "parts must weakly decrease");
    }
    return Partition{std::move(parts)};
}

std::vector<std::size_t> CondensationProfile::nontrivial() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < m.size(); ++k)
        if (m[k] > 0 && m[k] < p) out.push_back(k);
    return out;
}

namespace {

long floor_mod(long a, long b) {
    long r = a % b;
    return r < 0 ? r + b : r;
}

}  // namespace

CondensationProfile residue_condense(const Partition& lam, long p, long r) {
    if (p < 2) fail("BadResidue", "modulus must be at least 2");
    if (r < 0 || r >= p) fail("BadResidue", "residue must lie in 0..p-1");

    const long rows = lam.rows();
    const long width = lam.first();
    // first residue-r diagonals beyond the diagram on each side
    const long d_left = -rows - floor_mod(-rows - r, p);
    const long d_right = width + floor_mod(r - width, p);

    CondensationProfile prof;
    prof.p = p;
    prof.r = r;
    prof.boxes.emplace_back(0, -d_left);
    for (long d = d_left + p; d < d_right; d += p) {
        // rightmost box of the diagonal: largest row y with a box in column d + y
        long y = rows;
        while (y >= 1 && (d + y < 1 || lam.parts[y - 1] < d + y)) --y;
        if (y < 1) fail("InternalCheck", "interior diagonal has no box");
        prof.boxes.emplace_back(d + y, y);
    }
    prof.boxes.emplace_back(d_right, 0);

    for (std::size_t k = 0; k + 1 < prof.boxes.size(); ++k) {
        long mk = prof.boxes[k].second - prof.boxes[k + 1].second;
        if (mk < 0 || mk > p) fail("InternalCheck", "box spacing outside 0..p");
        prof.m.push_back(mk);
    }
    return prof;
}

nlohmann::json profile_to_json(const CondensationProfile& prof) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["kind"] = "condensation";
    j["p"] = prof.p;
    j["r"] = prof.r;
    nlohmann::json boxes = nlohmann::json::array();
    for (const auto& [x, y] : prof.boxes) boxes.push_back({x, y});
    j["boxes"] = std::move(boxes);
    j["m"] = prof.m;
    nlohmann::json factors = nlohmann::json::array();
    for (long mk : prof.m)
        factors.push_back({{"wedge", mk}, {"trivial", mk == 0 || mk == prof.p}});
    j["factors"] = std::move(factors);
    return j;
}

ParabolicLabels parabolic_labels(long m, const std::vector<long>& blocks) {
    if (m < 1) fail("BlockTooLarge", "ambient dimension must be positive");
    for (long mk : blocks)
        if (mk < 1 || mk > m)
            fail("BlockTooLarge", "block sizes must lie in 1.." + std::to_string(m));

    // strictly decreasing tuples = reversed combinations from {1..m}
    std::vector<std::vector<std::vector<long>>> choices;
    for (long mk : blocks) {
        std::vector<std::vector<long>> tuples;
        std::vector<long> comb(mk);
        for (long k = 0; k < mk; ++k) comb[k] = k + 1;
        for (;;) {
            std::vector<long> dec(comb.rbegin(), comb.rend());
            tuples.push_back(std::move(dec));
            long k = mk - 1;
            while (k >= 0 && comb[k] == m - (mk - 1 - k)) --k;
            if (k < 0) break;
            ++comb[k];
            for (long j = k + 1; j < mk; ++j) comb[j] = comb[j - 1] + 1;
        }
        choices.push_back(std::move(tuples));
    }

    ParabolicLabels out;
    out.m = m;
    out.blocks = blocks;
    std::vector<std::size_t> idx(blocks.size(), 0);
    for (;;) {
        std::vector<std::vector<long>> label;
        for (std::size_t j = 0; j < blocks.size(); ++j) label.push_back(choices[j][idx[j]]);
        out.labels.push_back(std::move(label));
        std::size_t j = blocks.size();
        bool done = true;
        while (j > 0) {
            --j;
            if (++idx[j] < choices[j].size()) {
                done = false;
                break;
            }
            idx[j] = 0;
        }
        if (done) break;
    }
    return out;
}

std::vector<long> block_pairings(long m, const std::vector<long>& block) {
    std::vector<char> in(m + 2, 0);
    for (long v : block) {
        if (v < 1 || v > m) fail("BlockTooLarge", "block entry outside 1..m");
        in[v] = 1;
    }
    std::vector<long> out;
    for (long i = 1; i < m; ++i) out.push_back(long(in[i]) - long(in[i + 1]));
    return out;
}

TensorLabel parabolic_to_tensor_label(long m, const std::vector<std::vector<long>>& label,
                                      const TensorCrystal& t) {
    if (label.size() != t.n_factors())
        fail("FactorIndexOutOfRange", "label length != factor count");
    TensorLabel out;
    for (std::size_t j = 0; j < label.size(); ++j) {
        auto matches = t.factors[j]->nodes_by_pairings(block_pairings(m, label[j]));
        if (matches.size() != 1)
            fail("InternalCheck", "block weight does not pick a unique node in factor " +
                                      std::to_string(j + 1));
        out.push_back(matches.front());
    }
    return out;
}

}  // namespace kmc
