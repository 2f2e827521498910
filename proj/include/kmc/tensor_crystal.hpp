#pragma once

#include <compare>
#include <memory>
#include <utility>

#include "kmc/path_crystal.hpp"

namespace kmc {

// A label picks one node id per factor, left to right. Factor order is
// load-bearing and never normalized.
using TensorLabel = std::vector<std::int32_t>;

struct TensorCrystal {
    std::vector<std::shared_ptr<const CrystalGraph>> factors;

    const CartanData& cartan() const { return factors.front()->cartan; }
    std::size_t n_factors() const { return factors.size(); }
    std::size_t rank() const { return cartan().rank(); }
    bool any_truncated() const;

    TensorLabel hw_label() const;  // the tuple of factor highest-weight nodes
    long long label_count() const;
    std::vector<TensorLabel> all_labels() const;  // odometer order over node ids

    void check_label(const TensorLabel& l) const;
    WeightTuple weight_tuple(const TensorLabel& l) const;
    Weight total_weight(const TensorLabel& l) const;
};

TensorCrystal build_tensor(std::vector<std::shared_ptr<const CrystalGraph>> factors);

// Per-factor (eps, phi) groups flattened into +/- symbols: group j contributes
// eps_i(b_j) plus signs then phi_i(b_j) minus signs, groups concatenated left
// to right.
struct Signature {
    std::size_t i = 0;
    std::vector<std::pair<int, int>> groups;  // (plus_count, minus_count) per factor
    std::vector<int> sign;                    // flat symbols, +1 or -1
    std::vector<int> group_of;                // owning factor per flat symbol
};

// Fixpoint of cancelling adjacent -+ pairs (ignoring already-crossed symbols).
// Uncrossed symbols always read +^a -^b; crossed ones pair up nested.
struct ReducedSignature {
    Signature sig;
    std::vector<char> crossed;
    std::vector<int> partner;  // matched flat index for crossed symbols, else -1
    int h_plus = 0;
    int h_minus = 0;
    int rightmost_plus = -1;  // flat index of rightmost uncrossed +, -1 if none
    int leftmost_minus = -1;  // flat index of leftmost uncrossed -, -1 if none
};

Signature i_signature(const TensorCrystal& t, const TensorLabel& l, std::size_t i);
ReducedSignature reduce_signature(const Signature& s);

// "(++-+--+--)" with crossed symbols struck via a combining overlay.
std::string signature_text(const ReducedSignature& r);

std::optional<TensorLabel> tensor_e(const TensorCrystal& t, const TensorLabel& l, std::size_t i);
std::optional<TensorLabel> tensor_f(const TensorCrystal& t, const TensorLabel& l, std::size_t i);

// (h_plus, h_minus): uncrossed counts = maximal raising/lowering powers.
std::pair<int, int> h_stats(const TensorCrystal& t, const TensorLabel& l, std::size_t i);

// Uncrossed minus count after reducing the sub-signature of groups k..n on its
// own. k is 1-based; k = 1 recovers h_minus, k = n+1 is 0 by convention.
int h_minus_from(const TensorCrystal& t, const TensorLabel& l, std::size_t i, std::size_t k);

// 1 iff phi_i(mu_ell) >= phi_i(lambda_ell) = m and the mu sequence strictly
// drops between positions ell and ell+1. ell is 1-based.
int alpha_indicator(const TensorCrystal& t, const TensorLabel& lambda, const TensorLabel& mu,
                    std::size_t ell, long m, std::size_t i);

// Infinite index word given as a finite prefix plus a repeating cycle; the
// cycle must mention every index so each one recurs infinitely often.
struct StringWord {
    std::vector<std::size_t> prefix;
    std::vector<std::size_t> cycle;
    bool operator==(const StringWord&) const = default;
    std::size_t at(std::size_t k) const {
        return k < prefix.size() ? prefix[k] : cycle[(k - prefix.size()) % cycle.size()];
    }
};

StringWord default_word(std::size_t rank);              // empty prefix, cycle 0..rank-1
void check_word(const StringWord& w, std::size_t rank); // WordSupportIncomplete on bad words

struct StringParam {
    StringWord word;
    std::vector<long> exponents;  // trailing zeros trimmed
    bool operator==(const StringParam&) const = default;
};

// Greedy raising-operator exhaustion along the word; stops at highest weight.
StringParam string_parametrization(const CrystalGraph& g, std::int32_t node, const StringWord& w);
StringParam string_parametrization(const TensorCrystal& t, const TensorLabel& l,
                                   const StringWord& w);

// Inverse: apply lowering powers in reverse word order starting from hw. For
// tensors the start defaults to the hw tuple; a label outside the Cartan
// component reconstructs from its own component's highest-weight label.
std::int32_t reconstruct_from_string(const CrystalGraph& g, const StringParam& p);
TensorLabel reconstruct_from_string(const TensorCrystal& t, const StringParam& p,
                                    const std::optional<TensorLabel>& from = std::nullopt);

// Total order: smaller exponent sum is GREATER; equal sums fall back to
// lexicographic (entrywise, zero-padded). Both sequences must share the word.
std::strong_ordering compare_exponent_sequences(const StringParam& a, const StringParam& b);
std::strong_ordering compare_exponents_lex(const StringParam& a, const StringParam& b);

// All labels killed by every raising operator, sorted by (total weight, label).
// The optional filter keeps only labels of exactly that total weight (compared
// on the raw fund/root representation).
std::vector<TensorLabel> highest_weight_labels(const TensorCrystal& t,
                                               const std::optional<Weight>& weight_filter =
                                                   std::nullopt);

struct ComponentInfo {
    Weight hw_weight;
    TensorLabel hw_label;
    long long size = 0;
    bool is_cartan = false;  // the component containing the hw tuple
};

std::vector<ComponentInfo> decompose(const TensorCrystal& t);
nlohmann::json decomposition_to_json(const TensorCrystal& t,
                                     const std::vector<ComponentInfo>& comps);

}  // namespace kmc
