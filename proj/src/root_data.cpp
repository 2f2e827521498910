#include "kmc/root_data.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <sstream>

namespace kmc {

namespace {

enum class SolveStatus { unique, inconsistent, underdetermined };

// Gaussian elimination over the rationals for a square system M x = rhs.
SolveStatus solve_linear(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs,
                         std::vector<Rat>& x) {
    const std::size_t n = m.size();
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t p = row;
        while (p < n && m[p][col] == 0) ++p;
        if (p == n) continue;
        std::swap(m[p], m[row]);
        std::swap(rhs[p], rhs[row]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rat factor = m[r][col] / m[row][col];
            for (std::size_t cc = col; cc < n; ++cc) m[r][cc] -= factor * m[row][cc];
            rhs[r] -= factor * rhs[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < n; ++r)
        if (rhs[r] != 0) return SolveStatus::inconsistent;
    if (pivot_col.size() < n) return SolveStatus::underdetermined;
    x.assign(n, Rat(0));
    for (std::size_t r = 0; r < n; ++r) x[pivot_col[r]] = rhs[r] / m[r][pivot_col[r]];
    return SolveStatus::unique;
}

// Right kernel basis of an integer matrix, exact.
std::vector<std::vector<Rat>> kernel_basis(const std::vector<std::vector<long>>& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = rat(a[i][j]);
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
            if (pr >= 0) v[c2] = -m[static_cast<std::size_t>(pr)][col] / m[static_cast<std::size_t>(pr)][c2];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Leading principal minors of the symmetrized matrix restricted to `idx`,
// all required positive for the finite (positive definite) case.
bool leading_minors_positive(const CartanData& c, const std::vector<std::size_t>& idx) {
    const std::size_t n = idx.size();
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::vector<Rat>> m(k, std::vector<Rat>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                m[i][j] = rat(c.d[idx[i]] * c.a[idx[i]][idx[j]]);
        // determinant by elimination
        Rat det = 1;
        for (std::size_t col = 0; col < k; ++col) {
            std::size_t p = col;
            while (p < k && m[p][col] == 0) ++p;
            if (p == k) {
                det = 0;
                break;
            }
            if (p != col) {
                std::swap(m[p], m[col]);
                det = -det;
            }
            det *= m[col][col];
            for (std::size_t r = col + 1; r < k; ++r) {
                if (m[r][col] == 0) continue;
                Rat factor = m[r][col] / m[col][col];
                for (std::size_t cc = col; cc < k; ++cc) m[r][cc] -= factor * m[col][cc];
            }
        }
        if (det <= 0) return false;
    }
    return true;
}

std::vector<std::vector<std::size_t>> dynkin_components(const std::vector<std::vector<long>>& a) {
    const std::size_t n = a.size();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::size_t>> comps;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> comp;
        std::queue<std::size_t> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            std::size_t v = q.front();
            q.pop();
            comp.push_back(v);
            for (std::size_t w = 0; w < n; ++w)
                if (!seen[w] && a[v][w] != 0) {
                    seen[w] = true;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

CartanKind component_kind(const CartanData& c, const std::vector<std::size_t>& idx) {
    if (leading_minors_positive(c, idx)) return CartanKind::finite;
    std::vector<std::vector<long>> sub(idx.size(), std::vector<long>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) sub[i][j] = c.a[idx[i]][idx[j]];
    auto ker = kernel_basis(sub);
    if (ker.size() == 1) {
        const auto& v = ker[0];
        bool pos = true, neg = true;
        for (const Rat& q : v) {
            if (q <= 0) pos = false;
            if (q >= 0) neg = false;
        }
        if (pos || neg) return CartanKind::affine;
    }
    return CartanKind::general;
}

std::vector<long> minimal_symmetrizer(const std::vector<std::vector<long>>& a) {
    const std::size_t n = a.size();
    std::vector<Rat> w(n, Rat(0));
    std::vector<bool> seen(n, false);
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> comp;
        w[s] = 1;
        seen[s] = true;
        std::queue<std::size_t> q;
        q.push(s);
        while (!q.empty()) {
            std::size_t v = q.front();
            q.pop();
            comp.push_back(v);
            for (std::size_t u = 0; u < n; ++u) {
                if (a[v][u] == 0 || u == v) continue;
                // d_v * a[v][u] = d_u * a[u][v]
                Rat need = w[v] * rat(a[v][u], a[u][v]);
                if (!seen[u]) {
                    w[u] = need;
                    seen[u] = true;
                    q.push(u);
                } else if (w[u] != need) {
                    fail("NotSymmetrizable", "inconsistent symmetrizer ratios around a cycle");
                }
            }
        }
        // scale the component to minimal positive integers
        Int lcm_den = 1;
        for (std::size_t v : comp) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), w[v].get_den().get_mpz_t());
        Int gcd_num = 0;
        for (std::size_t v : comp) {
            Int scaled = w[v].get_num() * (lcm_den / w[v].get_den());
            mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_mpz_t());
        }
        for (std::size_t v : comp) {
            Rat scaled = w[v] * Rat(lcm_den) / Rat(gcd_num);
            w[v] = scaled;
        }
    }
    std::vector<long> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_integer(w[i]) || w[i] <= 0) fail("NotSymmetrizable", "no positive integral symmetrizer");
        d[i] = to_long(w[i]);
    }
    return d;
}

}  // namespace

std::string kind_name(CartanKind kind) {
    switch (kind) {
        case CartanKind::finite: return "finite";
        case CartanKind::affine: return "affine";
        default: return "general";
    }
}

bool CartanData::simply_laced() const {
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j)
            if (i != j && a[i][j] < -1) return false;
    return true;
}

CartanData validate_cartan(std::vector<std::vector<long>> a,
                           std::optional<std::vector<long>> symmetrizer, std::string name) {
    const std::size_t n = a.size();
    if (n == 0) fail("NotGCM", "empty matrix");
    for (const auto& row : a)
        if (row.size() != n) fail("NotGCM", "matrix is not square");
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i][i] != 2) fail("NotGCM", "diagonal entry != 2 at index " + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (a[i][j] > 0)
                fail("NotGCM", "positive off-diagonal entry at (" + std::to_string(i) + "," +
                                   std::to_string(j) + ")");
            if ((a[i][j] == 0) != (a[j][i] == 0))
                fail("NotGCM", "zero pattern not symmetric at (" + std::to_string(i) + "," +
                                   std::to_string(j) + ")");
        }
    }

    CartanData c;
    c.a = std::move(a);
    c.name = std::move(name);
    if (symmetrizer) {
        if (symmetrizer->size() != n) fail("NotSymmetrizable", "symmetrizer length mismatch");
        for (long di : *symmetrizer)
            if (di <= 0) fail("NotSymmetrizable", "symmetrizer entries must be positive");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if ((*symmetrizer)[i] * c.a[i][j] != (*symmetrizer)[j] * c.a[j][i])
                    fail("NotSymmetrizable", "d[i]*a[i][j] != d[j]*a[j][i] at (" +
                                                 std::to_string(i) + "," + std::to_string(j) + ")");
        c.d = *symmetrizer;
    } else {
        c.d = minimal_symmetrizer(c.a);
    }

    bool all_finite = true, any_affine = false, any_general = false;
    for (const auto& comp : dynkin_components(c.a)) {
        CartanKind k = component_kind(c, comp);
        if (k != CartanKind::finite) all_finite = false;
        if (k == CartanKind::affine) any_affine = true;
        if (k == CartanKind::general) any_general = true;
    }
    c.kind = all_finite ? CartanKind::finite
                        : (any_affine && !any_general ? CartanKind::affine : CartanKind::general);
    return c;
}

CartanData builtin_cartan(const std::string& name) {
    std::string s = name;
    bool affine = false;
    if (s.size() > 1 && s.back() == '~') {
        affine = true;
        s.pop_back();
    } else if (s.size() > 3 && s.substr(s.size() - 3) == "(1)") {
        affine = true;
        s = s.substr(0, s.size() - 3);
    }
    if (s.size() < 2 || !std::isalpha(static_cast<unsigned char>(s[0])))
        fail("NotGCM", "unknown Cartan name '" + name + "'");
    char family = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    long n = 0;
    for (std::size_t k = 1; k < s.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            fail("NotGCM", "unknown Cartan name '" + name + "'");
        n = n * 10 + (s[k] - '0');
    }
    if (n < 1 || n > 64) fail("NotGCM", "rank out of range in '" + name + "'");

    auto chain = [](std::size_t r) {
        std::vector<std::vector<long>> m(r, std::vector<long>(r, 0));
        for (std::size_t i = 0; i < r; ++i) {
            m[i][i] = 2;
            if (i + 1 < r) m[i][i + 1] = m[i + 1][i] = -1;
        }
        return m;
    };

    std::vector<std::vector<long>> m;
    if (affine) {
        if (family != 'A') fail("NotGCM", "only affine A-family builtins are provided: '" + name + "'");
        std::size_t r = static_cast<std::size_t>(n) + 1;
        if (n == 1) {
            m = {{2, -2}, {-2, 2}};
        } else {
            m = chain(r);
            m[0][r - 1] = m[r - 1][0] = -1;  // close the cycle
        }
        return validate_cartan(std::move(m), std::nullopt, "A" + std::to_string(n) + "(1)");
    }

    switch (family) {
        case 'A':
            m = chain(static_cast<std::size_t>(n));
            break;
        case 'B':
            if (n < 2) fail("NotGCM", "B requires rank >= 2");
            m = chain(static_cast<std::size_t>(n));
            m[n - 1][n - 2] = -2;  // last simple root short
            break;
        case 'C':
            if (n < 2) fail("NotGCM", "C requires rank >= 2");
            m = chain(static_cast<std::size_t>(n));
            m[n - 2][n - 1] = -2;  // last simple root long
            break;
        case 'D': {
            if (n < 3) fail("NotGCM", "D requires rank >= 3");
            std::size_t r = static_cast<std::size_t>(n);
            m = chain(r - 1);
            for (auto& row : m) row.push_back(0);
            m.emplace_back(r, 0);
            m[r - 1][r - 1] = 2;
            m[r - 1][r - 3] = m[r - 3][r - 1] = -1;  // fork at the antepenultimate node
            m[r - 1][r - 2] = m[r - 2][r - 1] = 0;
            break;
        }
        case 'E': {
            if (n < 6 || n > 8) fail("NotGCM", "E requires rank 6, 7 or 8");
            std::size_t r = static_cast<std::size_t>(n);
            // nodes 0..r-2 form a chain, the last node attaches to node 2
            m = chain(r - 1);
            for (auto& row : m) row.push_back(0);
            m.emplace_back(r, 0);
            m[r - 1][r - 1] = 2;
            m[r - 1][2] = m[2][r - 1] = -1;
            break;
        }
        case 'F':
            if (n != 4) fail("NotGCM", "F requires rank 4");
            m = chain(4);
            m[2][1] = -2;  // alpha_3, alpha_4 short
            m[1][2] = -1;
            break;
        case 'G':
            if (n != 2) fail("NotGCM", "G requires rank 2");
            m = {{2, -1}, {-3, 2}};
            break;
        default:
            fail("NotGCM", "unknown Cartan family '" + std::string(1, family) + "'");
    }
    return validate_cartan(std::move(m), std::nullopt, s);
}

bool operator<(const Weight& a, const Weight& b) {
    if (a.fund != b.fund) return a.fund < b.fund;
    return std::lexicographical_compare(a.root.begin(), a.root.end(), b.root.begin(),
                                        b.root.end());
}

Weight weight_zero(std::size_t rank) {
    return Weight{std::vector<long>(rank, 0), std::vector<Rat>(rank, Rat(0))};
}

Weight weight_from_fund(std::vector<long> fund) {
    std::size_t r = fund.size();
    return Weight{std::move(fund), std::vector<Rat>(r, Rat(0))};
}

Weight simple_root_weight(std::size_t rank, std::size_t j) {
    Weight w = weight_zero(rank);
    w.root[j] = 1;
    return w;
}

Weight wadd(const Weight& a, const Weight& b) {
    Weight w = a;
    for (std::size_t i = 0; i < w.fund.size(); ++i) w.fund[i] += b.fund[i];
    for (std::size_t j = 0; j < w.root.size(); ++j) w.root[j] += b.root[j];
    return w;
}

Weight wsub(const Weight& a, const Weight& b) {
    Weight w = a;
    for (std::size_t i = 0; i < w.fund.size(); ++i) w.fund[i] -= b.fund[i];
    for (std::size_t j = 0; j < w.root.size(); ++j) w.root[j] -= b.root[j];
    return w;
}

Rat coroot_pairing(const CartanData& c, const Weight& w, std::size_t i) {
    Rat p = rat(w.fund[i]);
    for (std::size_t j = 0; j < c.rank(); ++j)
        if (w.root[j] != 0) p += rat(c.a[i][j]) * w.root[j];
    return p;
}

long coroot_pairing_int(const CartanData& c, const Weight& w, std::size_t i) {
    return to_long(coroot_pairing(c, w, i));
}

std::vector<long> coroot_pairings(const CartanData& c, const Weight& w) {
    std::vector<long> p(c.rank());
    for (std::size_t i = 0; i < c.rank(); ++i) p[i] = coroot_pairing_int(c, w, i);
    return p;
}

Weight reflect_weight(const CartanData& c, const Weight& w, std::size_t i) {
    Rat p = coroot_pairing(c, w, i);
    Weight out = w;
    out.root[i] -= p;
    return out;
}

std::string weight_str(const CartanData& c, const Weight& w) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < c.rank(); ++i) {
        if (i) os << ",";
        os << rat_str(coroot_pairing(c, w, i));
    }
    os << ")";
    if (c.kind != CartanKind::finite) {
        os << "@[";
        for (std::size_t j = 0; j < w.root.size(); ++j) {
            if (j) os << ",";
            os << rat_str(w.root[j]);
        }
        os << "]";
    }
    return os.str();
}

bool dominance_leq(const CartanData& c, const Weight& b1, const Weight& b2,
                   DominanceReason* why) {
    auto set_reason = [&](DominanceReason r) {
        if (why) *why = r;
    };
    set_reason(DominanceReason::comparable);
    if (b1.fund.size() != c.rank() || b2.fund.size() != c.rank())
        fail("MixedCartanData", "weight length does not match Cartan rank");
    Weight diff = wsub(b2, b1);
    std::vector<Rat> x;
    bool fund_zero = std::all_of(diff.fund.begin(), diff.fund.end(), [](long v) { return v == 0; });
    if (fund_zero) {
        x = diff.root;
    } else if (c.kind == CartanKind::finite) {
        std::vector<std::vector<Rat>> m(c.rank(), std::vector<Rat>(c.rank()));
        std::vector<Rat> rhs(c.rank());
        for (std::size_t i = 0; i < c.rank(); ++i) {
            rhs[i] = rat(diff.fund[i]);
            for (std::size_t j = 0; j < c.rank(); ++j) m[i][j] = rat(c.a[i][j]);
        }
        std::vector<Rat> y;
        if (solve_linear(std::move(m), std::move(rhs), y) != SolveStatus::unique) {
            set_reason(DominanceReason::not_in_root_lattice);
            return false;
        }
        x = diff.root;
        for (std::size_t j = 0; j < x.size(); ++j) x[j] += y[j];
    } else {
        // Degenerate Cartan matrix: fundamental symbols have no root-coordinate
        // form, so a nonzero fundamental difference is not a root-lattice element.
        set_reason(DominanceReason::not_in_root_lattice);
        return false;
    }
    for (const Rat& q : x)
        if (!is_integer(q)) {
            set_reason(DominanceReason::not_in_root_lattice);
            return false;
        }
    for (const Rat& q : x)
        if (q < 0) {
            set_reason(DominanceReason::negative_coefficients);
            return false;
        }
    return true;
}

bool weights_equal_math(const CartanData& c, const Weight& a, const Weight& b) {
    return dominance_leq(c, a, b) && dominance_leq(c, b, a);
}

std::string tuple_order_name(TupleOrder o) {
    switch (o) {
        case TupleOrder::greater: return "greater";
        case TupleOrder::less: return "less";
        case TupleOrder::equal: return "equal";
        default: return "incomparable";
    }
}

TupleOrder inverse_dominance_compare(const CartanData& c, const WeightTuple& mu,
                                     const WeightTuple& mu_prime) {
    if (mu.entries.size() != mu_prime.entries.size())
        fail("LengthMismatch", "weight tuples have different lengths");
    const std::size_t n = mu.entries.size();
    if (n == 0) return TupleOrder::equal;
    for (const auto& w : mu.entries)
        if (w.fund.size() != c.rank()) fail("MixedCartanData", "tuple entry rank mismatch");
    for (const auto& w : mu_prime.entries)
        if (w.fund.size() != c.rank()) fail("MixedCartanData", "tuple entry rank mismatch");

    bool all_equal = true;
    for (std::size_t j = 0; j < n && all_equal; ++j)
        all_equal = weights_equal_math(c, mu.entries[j], mu_prime.entries[j]);
    if (all_equal) return TupleOrder::equal;

    Weight total_a = weight_zero(c.rank()), total_b = weight_zero(c.rank());
    for (std::size_t j = 0; j < n; ++j) {
        total_a = wadd(total_a, mu.entries[j]);
        total_b = wadd(total_b, mu_prime.entries[j]);
    }
    if (!weights_equal_math(c, total_a, total_b)) return TupleOrder::incomparable;

    bool geq = true, leq = true;
    Weight sum_a = weight_zero(c.rank()), sum_b = weight_zero(c.rank());
    for (std::size_t j = 0; j + 1 < n; ++j) {
        sum_a = wadd(sum_a, mu.entries[j]);
        sum_b = wadd(sum_b, mu_prime.entries[j]);
        if (!dominance_leq(c, sum_a, sum_b)) geq = false;
        if (!dominance_leq(c, sum_b, sum_a)) leq = false;
        if (!geq && !leq) return TupleOrder::incomparable;
    }
    if (geq && leq) return TupleOrder::equal;  // partial sums all agree => same tuple
    return geq ? TupleOrder::greater : TupleOrder::less;
}

}  // namespace kmc
