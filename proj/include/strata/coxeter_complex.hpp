#pragma once

#include <cstddef>
#include <vector>

#include "strata/parabolic.hpp"

namespace strata {

// Face of the Coxeter complex of S_n: a coset tau * P_T, of dimension
// |S \ T| - 1 = n - 2 - |T|. The unique (-1)-dimensional face (T = S) is
// represented explicitly so the face poset has a bottom element.
struct Face {
    Coset coset;
    int dim;
};

// f <= g in the face poset iff coset(f) contains coset(g).
bool face_leq(const Face& f, const Face& g);

// The full complex for small n: one face per distinct coset over all
// generator subsets, ordered by (dim, rep, generators) for determinism.
struct FacePoset {
    std::size_t n = 0;
    std::vector<Face> faces;

    bool leq(std::size_t i, std::size_t j) const { return face_leq(faces[i], faces[j]); }
    // Number of faces of the given dimension (dim in [-1, n-2]).
    std::size_t count_dim(int dim) const;
    // Alternating sum over dims 0..n-2 of face counts.
    long euler_characteristic() const;
};

FacePoset enumerate_complex(std::size_t n, std::size_t max_n = 6);

// Chamber graph on the n! top-dimensional faces; two chambers are adjacent
// iff their permutations differ by one right adjacent transposition. This is
// the Cayley graph of (S_n, adjacent transpositions).
struct ChamberGraph {
    std::vector<Permutation> chambers;               // lexicographic order
    std::vector<std::vector<std::size_t>> neighbors; // sorted index lists

    std::size_t edge_count() const;
    bool is_regular(std::size_t degree) const;
    bool is_connected() const;
};

ChamberGraph chamber_graph(std::size_t n, std::size_t max_n = 6);

} // namespace strata
