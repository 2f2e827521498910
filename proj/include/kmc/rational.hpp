#pragma once

#include <gmpxx.h>

#include <string>

namespace kmc {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class does not canonicalize two-argument construction, so all literal
// fractions go through here.
inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Exact conversion; the argument must be integral and fit in a long.
long to_long(const Rat& q);

// Canonical text form: "p" for integers, "p/q" otherwise.
std::string rat_str(const Rat& q);

Rat parse_rat(const std::string& s);

}  // namespace kmc
