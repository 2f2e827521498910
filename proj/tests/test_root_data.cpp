#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>
#include <utility>

#include "kmc/root_data.hpp"

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

Weight fund_weight(std::size_t /*rank*/, std::vector<long> f) {
    return weight_from_fund(std::move(f));
}

}  // namespace

TEST_CASE("cartan validation accepts standard matrices") {
    CartanData a1 = validate_cartan({{2}}, std::nullopt, "A1");
    CHECK(a1.rank() == 1);
    CHECK(a1.d == std::vector<long>{1});
    CHECK(a1.kind == CartanKind::finite);

    CartanData a2 = validate_cartan({{2, -1}, {-1, 2}});
    CHECK(a2.d == std::vector<long>{1, 1});
    CHECK(a2.kind == CartanKind::finite);
    CHECK(a2.simply_laced());

    CartanData aff = validate_cartan({{2, -2}, {-2, 2}});
    CHECK(aff.d == std::vector<long>{1, 1});
    CHECK(aff.kind == CartanKind::affine);
    CHECK_FALSE(aff.simply_laced());
}

TEST_CASE("builtin cartan table") {
    struct Row {
        const char* name;
        std::size_t rank;
        CartanKind kind;
        std::vector<long> d;
    };
    const Row rows[] = {
        {"A1", 1, CartanKind::finite, {1}},
        {"A2", 2, CartanKind::finite, {1, 1}},
        {"A3", 3, CartanKind::finite, {1, 1, 1}},
        {"B2", 2, CartanKind::finite, {2, 1}},
        {"B3", 3, CartanKind::finite, {2, 2, 1}},
        {"C3", 3, CartanKind::finite, {1, 1, 2}},
        {"D4", 4, CartanKind::finite, {1, 1, 1, 1}},
        {"E6", 6, CartanKind::finite, {1, 1, 1, 1, 1, 1}},
        {"E7", 7, CartanKind::finite, {1, 1, 1, 1, 1, 1, 1}},
        {"E8", 8, CartanKind::finite, {1, 1, 1, 1, 1, 1, 1, 1}},
        {"F4", 4, CartanKind::finite, {2, 2, 1, 1}},
        {"G2", 2, CartanKind::finite, {3, 1}},
        {"A1~", 2, CartanKind::affine, {1, 1}},
        {"A2~", 3, CartanKind::affine, {1, 1, 1}},
        {"A1(1)", 2, CartanKind::affine, {1, 1}},
    };
    for (const Row& r : rows) {
        CAPTURE(r.name);
        CartanData c = builtin_cartan(r.name);
        CHECK(c.rank() == r.rank);
        CHECK(c.kind == r.kind);
        CHECK(c.d == r.d);
    }
    CHECK(error_code([] { builtin_cartan("Z9"); }) == "NotGCM");
    CHECK(error_code([] { builtin_cartan("E9"); }) == "NotGCM");
    CHECK(error_code([] { builtin_cartan("B1"); }) == "NotGCM");
}

TEST_CASE("cartan validation rejects non-GCM input") {
    CHECK(error_code([] { validate_cartan({{1}}); }) == "NotGCM");
    CHECK(error_code([] { validate_cartan({{2, 1}, {1, 2}}); }) == "NotGCM");
    CHECK(error_code([] { validate_cartan({{2, -1}, {0, 2}}); }) == "NotGCM");
    CHECK(error_code([] { validate_cartan({{2, -1}}); }) == "NotGCM");
    CHECK(error_code([] { validate_cartan({}); }) == "NotGCM");
}

TEST_CASE("symmetrizability") {
    // odd cycle with inconsistent ratio products
    CHECK(error_code([] {
              validate_cartan({{2, -1, -2}, {-2, 2, -1}, {-1, -2, 2}});
          }) == "NotSymmetrizable");
    // a wrong explicit symmetrizer is rejected even when a right one exists
    CHECK(error_code([] {
              validate_cartan({{2, -1}, {-2, 2}}, std::vector<long>{1, 1});
          }) == "NotSymmetrizable");
    CHECK(error_code([] {
              validate_cartan({{2, -1}, {-1, 2}}, std::vector<long>{1, 0});
          }) == "NotSymmetrizable");
    CartanData b2 = validate_cartan({{2, -1}, {-2, 2}}, std::vector<long>{2, 1});
    CHECK(b2.d == std::vector<long>{2, 1});
    // minimal symmetrizer is scaled down
    CartanData b2big = validate_cartan({{2, -1}, {-2, 2}}, std::vector<long>{4, 2});
    CHECK(b2big.d == std::vector<long>{4, 2});
    CartanData b2min = validate_cartan({{2, -1}, {-2, 2}});
    CHECK(b2min.d == std::vector<long>{2, 1});
}

TEST_CASE("kind detection") {
    CHECK(validate_cartan({{2, -3}, {-3, 2}}).kind == CartanKind::general);
    CHECK(validate_cartan({{2, -4}, {-1, 2}}).kind == CartanKind::affine);
    // disconnected: finite + affine blocks
    CartanData mixed = validate_cartan({{2, 0, 0}, {0, 2, -2}, {0, -2, 2}});
    CHECK(mixed.kind == CartanKind::affine);
    CartanData gen = validate_cartan({{2, 0, 0}, {0, 2, -3}, {0, -3, 2}});
    CHECK(gen.kind == CartanKind::general);
    CartanData fin = validate_cartan({{2, 0}, {0, 2}});
    CHECK(fin.kind == CartanKind::finite);
}

TEST_CASE("dominance on sl2") {
    CartanData c = builtin_cartan("A1");
    CHECK(dominance_leq(c, fund_weight(1, {1}), fund_weight(1, {3})));
    CHECK(dominance_leq(c, fund_weight(1, {3}), fund_weight(1, {3})));
    CHECK_FALSE(dominance_leq(c, fund_weight(1, {3}), fund_weight(1, {1})));
    DominanceReason why;
    CHECK_FALSE(dominance_leq(c, fund_weight(1, {0}), fund_weight(1, {1}), &why));
    CHECK(why == DominanceReason::not_in_root_lattice);
    CHECK_FALSE(dominance_leq(c, fund_weight(1, {1}), fund_weight(1, {-1}), &why));
    CHECK(why == DominanceReason::negative_coefficients);
    CHECK(error_code([&] { dominance_leq(c, fund_weight(1, {1}), fund_weight(2, {1, 0})); }) ==
          "MixedCartanData");
}

TEST_CASE("dominance on sl3") {
    CartanData c = builtin_cartan("A2");
    // omega1 - omega2 vs omega1 + omega2: difference 2*omega2 has non-integer
    // simple-root coordinates (2/3, 4/3)
    DominanceReason why;
    CHECK_FALSE(dominance_leq(c, fund_weight(2, {1, -1}), fund_weight(2, {1, 1}), &why));
    CHECK(why == DominanceReason::not_in_root_lattice);
    // 0 <= omega1 + omega2 (difference alpha1 + alpha2)
    CHECK(dominance_leq(c, fund_weight(2, {0, 0}), fund_weight(2, {1, 1})));
    CHECK_FALSE(dominance_leq(c, fund_weight(2, {1, 1}), fund_weight(2, {0, 0})));
}

TEST_CASE("dominance matches brute-force root sums") {
    for (const char* name : {"A2", "B2"}) {
        CAPTURE(name);
        CartanData c = builtin_cartan(name);
        // all pairing vectors reachable as nonnegative root sums with
        // coefficients <= 30 (ample for fund differences within [-6, 6])
        std::set<std::pair<long, long>> reachable;
        for (long c1 = 0; c1 <= 30; ++c1)
            for (long c2 = 0; c2 <= 30; ++c2)
                reachable.insert({c.a[0][0] * c1 + c.a[0][1] * c2,
                                  c.a[1][0] * c1 + c.a[1][1] * c2});
        for (long f1 = -3; f1 <= 3; ++f1)
            for (long f2 = -3; f2 <= 3; ++f2)
                for (long g1 = -3; g1 <= 3; ++g1)
                    for (long g2 = -3; g2 <= 3; ++g2) {
                        bool expect = reachable.count({g1 - f1, g2 - f2}) > 0;
                        CHECK(dominance_leq(c, fund_weight(2, {f1, f2}),
                                            fund_weight(2, {g1, g2})) == expect);
                    }
    }
}

TEST_CASE("inverse dominance fixtures") {
    CartanData c = builtin_cartan("A1");
    auto tup = [&](std::vector<long> vals) {
        WeightTuple t;
        for (long v : vals) t.entries.push_back(fund_weight(1, {v}));
        return t;
    };
    CHECK(inverse_dominance_compare(c, tup({1, 1}), tup({1, 1})) == TupleOrder::equal);
    CHECK(inverse_dominance_compare(c, tup({1, 1}), tup({3, -1})) == TupleOrder::greater);
    CHECK(inverse_dominance_compare(c, tup({1, 3}), tup({3, 1})) == TupleOrder::greater);
    CHECK(inverse_dominance_compare(c, tup({3, 1}), tup({1, 3})) == TupleOrder::less);
    // different totals are never comparable
    CHECK(inverse_dominance_compare(c, tup({1, 1}), tup({1, -1})) == TupleOrder::incomparable);
    // crossing partial sums
    CHECK(inverse_dominance_compare(c, tup({3, -3, 0}), tup({1, 1, -2})) ==
          TupleOrder::incomparable);
    CHECK(error_code([&] { inverse_dominance_compare(c, tup({1}), tup({1, 1})); }) ==
          "LengthMismatch");
    WeightTuple bad = tup({1, 1});
    bad.entries[1] = fund_weight(2, {1, 0});
    CHECK(error_code([&] { inverse_dominance_compare(c, tup({1, 1}), bad); }) ==
          "MixedCartanData");
}

TEST_CASE("inverse dominance is a partial order") {
    CartanData c = builtin_cartan("A1");
    std::vector<WeightTuple> pool;
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b)
            for (long d = -2; d <= 2; ++d) {
                WeightTuple t;
                t.entries = {fund_weight(1, {a}), fund_weight(1, {b}), fund_weight(1, {d})};
                pool.push_back(t);
            }
    auto cmp = [&](const WeightTuple& x, const WeightTuple& y) {
        return inverse_dominance_compare(c, x, y);
    };
    for (std::size_t x = 0; x < pool.size(); ++x) {
        CHECK(cmp(pool[x], pool[x]) == TupleOrder::equal);
        for (std::size_t y = 0; y < pool.size(); ++y) {
            TupleOrder xy = cmp(pool[x], pool[y]);
            TupleOrder yx = cmp(pool[y], pool[x]);
            // antisymmetry
            if (xy == TupleOrder::greater) CHECK(yx == TupleOrder::less);
            if (xy == TupleOrder::equal) CHECK(yx == TupleOrder::equal);
        }
    }
    // transitivity over a thinner slice (total 0 tuples)
    std::vector<WeightTuple> zero;
    for (const auto& t : pool) {
        long total = t.entries[0].fund[0] + t.entries[1].fund[0] + t.entries[2].fund[0];
        if (total == 0) zero.push_back(t);
    }
    for (const auto& x : zero)
        for (const auto& y : zero) {
            if (cmp(x, y) != TupleOrder::greater) continue;
            for (const auto& z : zero)
                if (cmp(y, z) == TupleOrder::greater) CHECK(cmp(x, z) == TupleOrder::greater);
        }
}

TEST_CASE("upsets within a total-weight slice are finite") {
    CartanData a1 = builtin_cartan("A1");
    // sl2 pairs (a, -a), |a| <= 10, strictly above (0, 0)
    long count = 0;
    for (long a = -10; a <= 10; ++a) {
        WeightTuple t;
        t.entries = {fund_weight(1, {a}), fund_weight(1, {-a})};
        WeightTuple base;
        base.entries = {fund_weight(1, {0}), fund_weight(1, {0})};
        if (inverse_dominance_compare(a1, t, base) == TupleOrder::greater) ++count;
    }
    CHECK(count == 5);  // a in {-2,-4,-6,-8,-10}

    CartanData a2 = builtin_cartan("A2");
    // sl3 adjoint weights mu with (mu, -mu) strictly above ((0,0), (0,0))
    std::vector<std::vector<long>> adjoint = {{1, 1},  {-1, 2}, {2, -1}, {0, 0},
                                              {1, -2}, {-2, 1}, {-1, -1}};
    long count3 = 0;
    for (const auto& mu : adjoint) {
        WeightTuple t;
        t.entries = {fund_weight(2, mu), fund_weight(2, {-mu[0], -mu[1]})};
        WeightTuple base;
        base.entries = {fund_weight(2, {0, 0}), fund_weight(2, {0, 0})};
        if (inverse_dominance_compare(a2, t, base) == TupleOrder::greater) ++count3;
    }
    CHECK(count3 == 3);  // -alpha1, -alpha2, -alpha1-alpha2
}

TEST_CASE("weight arithmetic and pairings") {
    CartanData c = builtin_cartan("A2");
    Weight w = fund_weight(2, {1, 1});
    Weight a0 = simple_root_weight(2, 0);
    CHECK(coroot_pairing_int(c, a0, 0) == 2);
    CHECK(coroot_pairing_int(c, a0, 1) == -1);
    Weight x = wsub(w, a0);
    CHECK(coroot_pairing_int(c, x, 0) == -1);
    CHECK(coroot_pairing_int(c, x, 1) == 2);
    CHECK(coroot_pairings(c, x) == std::vector<long>{-1, 2});
    Weight r = reflect_weight(c, x, 0);
    CHECK(coroot_pairing_int(c, r, 0) == 1);
    CHECK(wadd(x, a0) == w);
    CHECK(weights_equal_math(c, wadd(x, a0), w));
}
