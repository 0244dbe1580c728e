#pragma once

#include <cstdint>
#include <vector>

#include "strata/parabolic.hpp"

namespace strata {

// The canonical representative of the double coset P_left * sigma * P_right:
// its unique minimal element under (length, then lexicographic) order,
// reached by greedily applying any left generator of P_left or right
// generator of P_right that shortens the word.
Permutation canonical_double_coset_rep(const ParabolicSubgroup& left, const Permutation& sigma,
                                       const ParabolicSubgroup& right);

// Marked double coset (P_1, P_1 sigma P_2, P_2). "Marked" means the two
// parabolics are part of the value: triples with different parabolics are
// distinct even when the underlying double cosets coincide as sets.
class MarkedDoubleCoset {
public:
    MarkedDoubleCoset(ParabolicSubgroup left, const Permutation& sigma, ParabolicSubgroup right);

    const ParabolicSubgroup& left() const { return left_; }
    const Permutation& rep() const { return rep_; }
    const ParabolicSubgroup& right() const { return right_; }
    std::size_t n() const { return rep_.size(); }

    // Full listing {l * rep * r}, duplicates removed, sorted. Throws
    // CapExceeded when |P_left| * |P_right| > cap.
    std::vector<Permutation> elements(std::uint64_t cap = 1'000'000) const;

    friend bool operator==(const MarkedDoubleCoset&, const MarkedDoubleCoset&) = default;

private:
    ParabolicSubgroup left_;
    ParabolicSubgroup right_;
    Permutation rep_; // initialized last: canonicalization needs both parabolics
};

// sigma in P_1 * rep * P_2, decided by canonicalization, no enumeration.
bool dc_member(const Permutation& sigma, const MarkedDoubleCoset& d);

// Partial order on marked double cosets: a <= b iff the parabolics of a
// contain those of b component-wise and the double coset of a contains that
// of b. Smaller elements index more degenerate (lower-dimensional) strata.
bool q_leq(const MarkedDoubleCoset& a, const MarkedDoubleCoset& b);

// S_n-orbit of a pair of cosets (tau_1 P_1, tau_2 P_2) under the diagonal
// left action, stored via a canonical representative: the left coset is
// normalized to have representative id, which determines the right coset up
// to left multiplication by P_1; that freedom is resolved by taking the
// minimal double-coset element as the right representative.
class OrbitPair {
public:
    OrbitPair(const Coset& left, const Coset& right);

    const Coset& left() const { return left_; }
    const Coset& right() const { return right_; }

    friend bool operator==(const OrbitPair&, const OrbitPair&) = default;

private:
    Coset left_;
    Coset right_;
};

// The mutually inverse poset isomorphisms between orbits of coset pairs and
// marked double cosets.
MarkedDoubleCoset phi(const OrbitPair& p);
OrbitPair psi(const MarkedDoubleCoset& d);

// Order on orbit pairs: a <= b iff some g in S_n maps both cosets of b into
// the corresponding cosets of a. Decided by scanning S_n; intended for the
// small-n enumerations, guarded to n <= 8.
bool orbit_leq(const OrbitPair& a, const OrbitPair& b);

// All marked double cosets for S_n (2 <= n <= 6), deterministically ordered.
std::vector<MarkedDoubleCoset> enumerate_marked_double_cosets(std::size_t n);

// All distinct cosets tau * P_T over all generator subsets T, ordered like
// the face enumeration; building block for enumerating orbit pairs.
std::vector<Coset> enumerate_cosets(std::size_t n);

} // namespace strata
