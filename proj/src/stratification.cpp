#include "strata/stratification.hpp"

namespace strata {

MarkedDoubleCoset stratum_of(const Barcode& b, double tol) {
    return double_coset(b, tol);
}

bool contains(const MarkedDoubleCoset& s, const Barcode& b, double tol) {
    if (s.n() != b.size())
        throw std::invalid_argument("contains: stratum and barcode sizes differ");
    return q_leq(s, stratum_of(b, tol));
}

StratumOrder compare_strata(const MarkedDoubleCoset& a, const MarkedDoubleCoset& b) {
    const bool le = q_leq(a, b);
    const bool ge = q_leq(b, a);
    if (le && ge) return StratumOrder::equal;
    if (le) return StratumOrder::leq;
    if (ge) return StratumOrder::geq;
    return StratumOrder::incomparable;
}

} // namespace strata
