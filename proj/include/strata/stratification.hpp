#pragma once

#include "strata/barcode.hpp"

namespace strata {

// The minimal stratum containing a barcode: (P_b, P_b tau_b^{-1} tau_d P_d,
// P_d). The strata of the space of n-bar barcodes are indexed by marked
// double cosets; barcodes in the interior of a stratum are exactly those
// with this triple as their invariant.
MarkedDoubleCoset stratum_of(const Barcode& b, double tol = 0.0);

// Whether the stratum s contains the barcode, i.e. s <= stratum_of(b) in
// the marked-double-coset order. The bottom element (both parabolics full)
// contains every barcode.
bool contains(const MarkedDoubleCoset& s, const Barcode& b, double tol = 0.0);

// Outcome of comparing two strata.
enum class StratumOrder { equal, leq, geq, incomparable };
StratumOrder compare_strata(const MarkedDoubleCoset& a, const MarkedDoubleCoset& b);

} // namespace strata
