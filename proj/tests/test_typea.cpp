#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "kmc/typea.hpp"

using namespace kmc;

namespace {

std::string error_code(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

}  // namespace

TEST_CASE("partition validation") {
    CHECK(make_partition({7, 5, 1, 1, 1, 1, 1}).rows() == 7);
    CHECK(make_partition({}).rows() == 0);
    CHECK(make_partition({}).first() == 0);
    CHECK(error_code([] { make_partition({1, 2}); }) == "BadPartition");
    CHECK(error_code([] { make_partition({2, 0}); }) == "BadPartition");
    CHECK(error_code([] { make_partition({-1}); }) == "BadPartition");
}

TEST_CASE("worked condensation example") {
    Partition lam = make_partition({7, 5, 1, 1, 1, 1, 1});
    CondensationProfile prof = residue_condense(lam, 3, 0);

    // the reference figure lists the marked boxes from the right boundary in
    std::vector<std::pair<long, long>> listed = {{9, 0}, {7, 1}, {5, 2}, {2, 2},
                                                 {1, 4}, {1, 7}, {0, 9}};
    std::vector<std::pair<long, long>> reversed(prof.boxes.rbegin(), prof.boxes.rend());
    CHECK(reversed == listed);

    CHECK(prof.m == std::vector<long>{2, 3, 2, 0, 1, 1});
    REQUIRE(prof.nontrivial().size() == 4);
    std::vector<long> wedges;
    for (std::size_t k : prof.nontrivial()) wedges.push_back(prof.m[k]);
    CHECK(wedges == std::vector<long>{2, 2, 1, 1});

    nlohmann::json j = profile_to_json(prof);
    CHECK(j.at("schema_version").get<int>() == 1);
    CHECK(j.at("kind").get<std::string>() == "condensation");
    CHECK(j.at("m").get<std::vector<long>>() == prof.m);
    REQUIRE(j.at("factors").size() == 6);
    CHECK(j.at("factors").at(0).at("wedge").get<long>() == 2);
    CHECK_FALSE(j.at("factors").at(0).at("trivial").get<bool>());
    CHECK(j.at("factors").at(3).at("trivial").get<bool>());
}

TEST_CASE("empty partition condensation") {
    Partition empty = make_partition({});
    for (long p : {2L, 3L, 5L}) {
        CAPTURE(p);
        CondensationProfile zero = residue_condense(empty, p, 0);
        CHECK(zero.boxes == std::vector<std::pair<long, long>>{{0, 0}, {0, 0}});
        CHECK(zero.m == std::vector<long>{0});
        CHECK(zero.nontrivial().empty());
        for (long r = 1; r < p; ++r) {
            CAPTURE(r);
            // nonzero residue shifts the boundary diagonals apart: the class
            // of the empty diagram carries a single wedge of degree p - r
            CondensationProfile prof = residue_condense(empty, p, r);
            CHECK(prof.boxes ==
                  std::vector<std::pair<long, long>>{{0, p - r}, {r, 0}});
            CHECK(prof.m == std::vector<long>{p - r});
            CHECK(prof.nontrivial() == std::vector<std::size_t>{0});
        }
    }
}

TEST_CASE("condensation guards") {
    Partition lam = make_partition({2, 1});
    CHECK(error_code([&] { residue_condense(lam, 1, 0); }) == "BadResidue");
    CHECK(error_code([&] { residue_condense(lam, 0, 0); }) == "BadResidue");
    CHECK(error_code([&] { residue_condense(lam, 3, 3); }) == "BadResidue");
    CHECK(error_code([&] { residue_condense(lam, 3, -1); }) == "BadResidue");
}

TEST_CASE("condensation profile invariants on random partitions") {
    std::mt19937 rng(987654);
    for (int trial = 0; trial < 500; ++trial) {
        // random partition with parts <= 20
        std::vector<long> parts;
        long cur = 1 + static_cast<long>(rng() % 20);
        int nrows = static_cast<int>(rng() % 9);
        for (int k = 0; k < nrows && cur >= 1; ++k) {
            parts.push_back(cur);
            cur -= static_cast<long>(rng() % 4);
        }
        Partition lam = make_partition(std::move(parts));
        for (long p = 2; p <= 7; ++p)
            for (long r = 0; r < p; ++r) {
                CAPTURE(lam.parts);
                CAPTURE(p);
                CAPTURE(r);
                CondensationProfile prof = residue_condense(lam, p, r);
                REQUIRE(prof.boxes.size() >= 2);
                CHECK(prof.boxes.front().first == 0);   // x_0 = 0
                CHECK(prof.boxes.back().second == 0);   // y_last = 0
                REQUIRE(prof.m.size() == prof.boxes.size() - 1);
                for (std::size_t k = 0; k < prof.m.size(); ++k) {
                    CHECK(prof.m[k] >= 0);
                    CHECK(prof.m[k] <= p);
                }
                for (std::size_t k = 0; k + 1 < prof.boxes.size(); ++k) {
                    // contents strictly increase by steps of p; coordinates
                    // move weakly right and weakly up
                    long c0 = prof.boxes[k].first - prof.boxes[k].second;
                    long c1 = prof.boxes[k + 1].first - prof.boxes[k + 1].second;
                    if (lam.rows() == 0 && r == 0)
                        CHECK(c1 == c0);  // both guards share the zero diagonal
                    else
                        CHECK(c1 - c0 == p);
                    CHECK(((c0 - r) % p + p) % p == 0);
                    CHECK(prof.boxes[k].first <= prof.boxes[k + 1].first);
                    CHECK(prof.boxes[k].second >= prof.boxes[k + 1].second);
                }
                // marked boxes inside the diagram are rightmost on their diagonal
                for (const auto& [x, y] : prof.boxes) {
                    if (x == 0 || y == 0) continue;  // boundary markers
                    REQUIRE(y <= lam.rows());
                    CHECK(x <= lam.parts[static_cast<std::size_t>(y - 1)]);
                    bool next_in = y + 1 <= lam.rows() &&
                                   x + 1 <= lam.parts[static_cast<std::size_t>(y)];
                    CHECK_FALSE(next_in);  // the next box on the diagonal is outside
                }
            }
    }
}

TEST_CASE("parabolic label enumeration") {
    ParabolicLabels small = parabolic_labels(2, {1, 1});
    CHECK(small.labels.size() == 4);

    ParabolicLabels mid = parabolic_labels(3, {2, 2, 1, 1});
    CHECK(mid.labels.size() == 81);
    // every label has strictly decreasing blocks with entries in 1..3
    for (const auto& label : mid.labels) {
        REQUIRE(label.size() == 4);
        for (std::size_t k = 0; k < 4; ++k) {
            REQUIRE(label[k].size() == static_cast<std::size_t>(mid.blocks[k]));
            for (std::size_t s = 0; s < label[k].size(); ++s) {
                CHECK(label[k][s] >= 1);
                CHECK(label[k][s] <= 3);
                if (s + 1 < label[k].size()) CHECK(label[k][s] > label[k][s + 1]);
            }
        }
    }
    std::set<std::vector<std::vector<long>>> uniq(mid.labels.begin(), mid.labels.end());
    CHECK(uniq.size() == 81);

    ParabolicLabels det = parabolic_labels(3, {3});
    REQUIRE(det.labels.size() == 1);
    CHECK(det.labels[0][0] == std::vector<long>{3, 2, 1});

    CHECK(error_code([] { parabolic_labels(2, {3}); }) == "BlockTooLarge");
    CHECK(error_code([] { parabolic_labels(2, {0}); }) == "BlockTooLarge");
}

TEST_CASE("block weights") {
    // single entries of the vector representation of sl3
    CHECK(block_pairings(3, {1}) == std::vector<long>{1, 0});
    CHECK(block_pairings(3, {2}) == std::vector<long>{-1, 1});
    CHECK(block_pairings(3, {3}) == std::vector<long>{0, -1});
    // wedge pairs
    CHECK(block_pairings(3, {2, 1}) == std::vector<long>{0, 1});
    CHECK(block_pairings(3, {3, 1}) == std::vector<long>{1, -1});
    CHECK(block_pairings(3, {3, 2}) == std::vector<long>{-1, 0});
    // determinant block is weightless
    CHECK(block_pairings(3, {3, 2, 1}) == std::vector<long>{0, 0});
}

TEST_CASE("parabolic labels match tensor labels") {
    struct Case {
        long m;
        std::vector<long> blocks;
    };
    for (const Case& k : {Case{2, {1, 1}}, Case{3, {2, 2, 1, 1}}, Case{3, {3}},
                          Case{4, {2, 1}}}) {
        CAPTURE(k.m);
        CartanData c = builtin_cartan("A" + std::to_string(k.m - 1));
        std::vector<std::shared_ptr<const CrystalGraph>> factors;
        for (long mk : k.blocks) {
            std::vector<long> hw(c.rank(), 0);
            if (static_cast<std::size_t>(mk) <= c.rank()) hw[mk - 1] = 1;
            factors.push_back(
                std::make_shared<const CrystalGraph>(generate_crystal(c, hw)));
        }
        TensorCrystal t = build_tensor(std::move(factors));
        ParabolicLabels labels = parabolic_labels(k.m, k.blocks);
        CHECK(static_cast<long long>(labels.labels.size()) == t.label_count());
        std::set<TensorLabel> seen;
        for (const auto& label : labels.labels) {
            TensorLabel tl = parabolic_to_tensor_label(k.m, label, t);
            // the bijection preserves each factor's weight
            for (std::size_t j = 0; j < label.size(); ++j)
                CHECK(coroot_pairings(c, t.factors[j]->nodes[tl[j]].wt) ==
                      block_pairings(k.m, label[j]));
            seen.insert(tl);
        }
        CHECK(static_cast<long long>(seen.size()) == t.label_count());
    }
}
