#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kmc/error.hpp"
#include "kmc/rational.hpp"

namespace kmc {

enum class CartanKind { finite, affine, general };

std::string kind_name(CartanKind kind);

// Generalized Cartan matrix with a positive integral symmetrizer.
//
// Entry convention: a[i][j] = <alpha_j, alpha_i^vee>, so the symmetrizability
// condition reads d[i]*a[i][j] = d[j]*a[j][i].
struct CartanData {
    std::vector<std::vector<long>> a;
    std::vector<long> d;
    CartanKind kind = CartanKind::general;
    std::string name = "custom";

    std::size_t rank() const { return a.size(); }
    bool same_as(const CartanData& other) const { return a == other.a; }
    bool simply_laced() const;
};

// Checks the GCM axioms (2 on the diagonal, nonpositive off-diagonal entries,
// symmetric zero pattern), finds or verifies a symmetrizer, and detects the
// kind (finite / affine / general) per indecomposable component.
CartanData validate_cartan(std::vector<std::vector<long>> a,
                           std::optional<std::vector<long>> symmetrizer = std::nullopt,
                           std::string name = "custom");

// Builtin families: A1.., B2.., C2.., D3.., E6, E7, E8, F4, G2, and the affine
// cycles An(1) (spelled "A2(1)" or shell-friendly "A2~").
CartanData builtin_cartan(const std::string& name);

// Integral weight stored as a formal pair
//     sum_i fund[i] * omega_i  +  sum_j root[j] * alpha_j.
// The blocks stay separate on purpose: over a degenerate (affine) Cartan
// matrix the fundamental part has no canonical root-coordinate form, and the
// explicit root part is what keeps the imaginary direction exact.
struct Weight {
    std::vector<long> fund;
    std::vector<Rat> root;

    friend bool operator==(const Weight&, const Weight&) = default;
    // Lexicographic over (fund, root); total order for use as a map key.
    friend bool operator<(const Weight& a, const Weight& b);
};

Weight weight_zero(std::size_t rank);
Weight weight_from_fund(std::vector<long> fund);
Weight simple_root_weight(std::size_t rank, std::size_t j);
Weight wadd(const Weight& a, const Weight& b);
Weight wsub(const Weight& a, const Weight& b);

Rat coroot_pairing(const CartanData& c, const Weight& w, std::size_t i);
long coroot_pairing_int(const CartanData& c, const Weight& w, std::size_t i);
std::vector<long> coroot_pairings(const CartanData& c, const Weight& w);

// s_i(w) = w - <w, alpha_i^vee> alpha_i
Weight reflect_weight(const CartanData& c, const Weight& w, std::size_t i);

std::string weight_str(const CartanData& c, const Weight& w);

enum class DominanceReason { comparable, not_in_root_lattice, negative_coefficients };

// True iff b2 - b1 is a nonnegative-integer combination of simple roots.
// In finite type the fundamental block is converted by an exact rational
// solve; otherwise the difference must already live in the root block.
bool dominance_leq(const CartanData& c, const Weight& b1, const Weight& b2,
                   DominanceReason* why = nullptr);

// Equality as weights (the formal fund/root split may differ for the same
// weight; this compares via dominance both ways).
bool weights_equal_math(const CartanData& c, const Weight& a, const Weight& b);

struct WeightTuple {
    std::vector<Weight> entries;

    friend bool operator==(const WeightTuple&, const WeightTuple&) = default;
};

enum class TupleOrder { greater, less, equal, incomparable };

std::string tuple_order_name(TupleOrder o);

// Inverse dominance: mu >= mu' iff the proper partial sums of mu are
// dominance-below those of mu' and the totals agree.
TupleOrder inverse_dominance_compare(const CartanData& c, const WeightTuple& mu,
                                     const WeightTuple& mu_prime);

}  // namespace kmc
