#pragma once

#include <span>
#include <vector>

#include "strata/barcode.hpp"

namespace strata {

// Result of an exact matching-based distance: bar i of the first barcode is
// paired with bar matching(i) of the second one, and distance equals the
// objective re-evaluated on that matching.
struct MatchingResult {
    double distance;
    Permutation matching;
};

enum class Norm { linf, l2 };

// min over permutations g of max_i ||(b_i, d_i) - (b'_{g(i)}, d'_{g(i)})||_inf.
// Exact: binary search over the n^2 candidate pair costs, feasibility decided
// by Hopcroft-Karp matching. Requires equal bar counts.
MatchingResult modified_bottleneck(const Barcode& a, const Barcode& b,
                                   std::uint64_t lex_max_n = 64);

// min over permutations g of (sum_i ||(b_i, d_i) - (b'_{g(i)}, d'_{g(i)})||_2^2)^(1/2),
// solved as a linear assignment problem (shortest augmenting paths with
// potentials). Requires equal bar counts.
MatchingResult modified_wasserstein(const Barcode& a, const Barcode& b,
                                    std::uint64_t lex_max_n = 64);

// The quotient-metric formulation: min over g in S_n of the 2n-dimensional
// distance between (b, d) and the diagonally permuted (b', d'). Computed by
// an independent algorithm (incremental threshold growth for l_inf,
// Bellman-Ford successive shortest paths for l_2) and evaluated literally on
// the stacked vectors; agrees with the corresponding modified distance.
double quotient_distance(const Barcode& a, const Barcode& b, Norm norm);

// Exhaustive minimum over all n! matchings, n <= 8. Ties resolve to the
// lexicographically smallest permutation.
MatchingResult brute_force(const Barcode& a, const Barcode& b, Norm norm);

// Pairwise distances (zero diagonal, symmetric). All barcodes must have the
// same number of bars.
std::vector<std::vector<double>> distance_matrix(std::span<const Barcode> barcodes, Norm norm);

} // namespace strata
