#include "kmc/rational.hpp"

#include "kmc/error.hpp"

namespace kmc {

long to_long(const Rat& q) {
    if (!is_integer(q)) fail("BadNumber", "expected an integer, got " + rat_str(q));
    if (!q.get_num().fits_slong_p())
        fail("BadNumber", "integer out of machine range: " + rat_str(q));
    return q.get_num().get_si();
}

std::string rat_str(const Rat& q) {
    return q.get_str();  // canonical "p" or "p/q"
}

Rat parse_rat(const std::string& s) {
    if (s.empty()) fail("BadNumber", "empty number literal");
    Rat q;
    if (q.set_str(s, 10) != 0)
        fail("BadNumber", "not a rational literal: '" + s + "'");
    if (q.get_den() == 0) fail("BadNumber", "zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace kmc
