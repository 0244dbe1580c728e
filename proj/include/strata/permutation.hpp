#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace strata {

// Element of the symmetric group S_n in one-line notation. Internally the
// images are 0-based (img[i] is the image of i); all serialization and the
// one_line() view are 1-based, so the permutation mapping 1->4, 2->1, 3->3,
// 4->2 prints as [4,1,3,2].
class Permutation {
public:
    // images are 0-based and must form a bijection of {0,...,n-1}, n >= 1.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(std::size_t n);
    // Adjacent transposition (k, k+1) in 1-based labels, 1 <= k <= n-1.
    static Permutation adjacent_transposition(std::size_t n, int k);
    // Parses 1-based one-line notation, e.g. {4,1,3,2}.
    static Permutation from_one_line(const std::vector<int>& one_based);

    std::size_t size() const { return img_.size(); }
    // Image of i, 0-based.
    int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return img_; }
    std::vector<int> one_line() const;

    Permutation inverse() const;
    bool is_identity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    // Lexicographic order on one-line notation.
    bool operator<(const Permutation& other) const { return img_ < other.img_; }

private:
    struct unchecked_t {};
    Permutation(std::vector<int> images, unchecked_t) : img_(std::move(images)) {}

    std::vector<int> img_;

    friend Permutation compose(const Permutation&, const Permutation&);
    friend Permutation unchecked_permutation(std::vector<int>);
};

// (p o q)(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) {
    return compose(p, q);
}

// For internal use by canonicalization routines that already guarantee a
// bijection; skips validation.
Permutation unchecked_permutation(std::vector<int> images);

// Coordinate action of Eq.-style permutation of positions:
// result[i] = x[g^{-1}(i)], i.e. the value at slot j moves to slot g(j).
template <typename T>
std::vector<T> act(const Permutation& g, std::span<const T> x) {
    if (x.size() != g.size())
        throw std::invalid_argument("act: vector length does not match permutation size");
    std::vector<T> out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) out[static_cast<std::size_t>(g(static_cast<int>(j)))] = x[j];
    return out;
}

template <typename T>
std::vector<T> act(const Permutation& g, const std::vector<T>& x) {
    return act(g, std::span<const T>(x));
}

// #{(i,j) : i < j, p(i) > p(j)}; equals the Coxeter length of p.
std::int64_t inversions(const Permutation& p);
// #{i : p(i) > p(i+1)}.
int descents(const Permutation& p);

// (length, lex) order used to pick canonical double-coset representatives.
bool shorter_then_lex_less(const Permutation& a, const Permutation& b);

// All n! permutations in lexicographic one-line order. Guarded to n <= 10.
std::vector<Permutation> all_permutations(std::size_t n);

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const;
};

} // namespace strata
