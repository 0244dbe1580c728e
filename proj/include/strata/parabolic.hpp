#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "strata/permutation.hpp"

namespace strata {

// Standard parabolic subgroup P_T <= S_n generated by a set T of adjacent
// transpositions. Generator index k (1-based, 1 <= k <= n-1) stands for the
// transposition (k, k+1). The generators split {1..n} into consecutive
// blocks; P_T is the direct product of the symmetric groups on those blocks.
class ParabolicSubgroup {
public:
    ParabolicSubgroup(std::size_t n, std::vector<int> generators);

    static ParabolicSubgroup trivial(std::size_t n);
    static ParabolicSubgroup full(std::size_t n);

    std::size_t n() const { return n_; }
    const std::vector<int>& generators() const { return gens_; }

    // Consecutive position intervals [first, last] (1-based, inclusive)
    // partitioning {1..n}; singleton blocks included.
    std::vector<std::pair<int, int>> blocks() const;

    // Product of block-size factorials, saturated at UINT64_MAX.
    std::uint64_t order() const;
    bool order_exceeds(std::uint64_t cap) const;

    bool contains(const Permutation& p) const;
    // Generator-set containment; equivalent to subgroup containment for
    // standard parabolics.
    bool contains_subgroup(const ParabolicSubgroup& other) const;

    // Full element listing (closure of the generators), sorted
    // lexicographically. Throws CapExceeded when order() > cap.
    std::vector<Permutation> elements(std::uint64_t cap = 40320) const;

    friend bool operator==(const ParabolicSubgroup&, const ParabolicSubgroup&) = default;

private:
    std::size_t n_;
    std::vector<int> gens_; // sorted, unique, subset of {1..n-1}
};

// Left coset rep * P of a standard parabolic subgroup, stored via its
// canonical representative: the unique member whose one-line values increase
// within every block of P (equivalently the minimal-length member).
class Coset {
public:
    Coset(const Permutation& tau, ParabolicSubgroup subgroup);

    const Permutation& rep() const { return rep_; }
    const ParabolicSubgroup& subgroup() const { return sub_; }

    bool member(const Permutation& tau) const;
    // this >= other as sets: every element of `other` lies in this coset.
    bool contains_coset(const Coset& other) const;

    std::vector<Permutation> elements(std::uint64_t cap = 40320) const;

    friend bool operator==(const Coset&, const Coset&) = default;

private:
    Permutation rep_;
    ParabolicSubgroup sub_;
};

// Sorts the one-line values of tau inside each block of P; returns the
// canonical (block-increasing) representative of the coset tau * P.
Permutation canonical_coset_rep(const Permutation& tau, const ParabolicSubgroup& P);

// Left action g . (tau P) = (g tau) P.
Coset act(const Permutation& g, const Coset& c);

} // namespace strata
