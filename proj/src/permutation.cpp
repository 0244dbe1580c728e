#include "strata/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace strata {

namespace {

void validate(const std::vector<int>& images) {
    if (images.empty())
        throw std::invalid_argument("permutation must have n >= 1");
    std::vector<char> seen(images.size(), 0);
    for (int v : images) {
        if (v < 0 || static_cast<std::size_t>(v) >= images.size() || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("images are not a bijection of {1..n}");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

} // namespace

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    validate(img_);
}

Permutation unchecked_permutation(std::vector<int> images) {
    return Permutation(std::move(images), Permutation::unchecked_t{});
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return unchecked_permutation(std::move(img));
}

Permutation Permutation::adjacent_transposition(std::size_t n, int k) {
    if (k < 1 || static_cast<std::size_t>(k) >= n)
        throw std::invalid_argument("adjacent transposition index must satisfy 1 <= k <= n-1");
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::swap(img[static_cast<std::size_t>(k - 1)], img[static_cast<std::size_t>(k)]);
    return unchecked_permutation(std::move(img));
}

Permutation Permutation::from_one_line(const std::vector<int>& one_based) {
    std::vector<int> img(one_based.size());
    for (std::size_t i = 0; i < one_based.size(); ++i) img[i] = one_based[i] - 1;
    return Permutation(std::move(img));
}

std::vector<int> Permutation::one_line() const {
    std::vector<int> out(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
    return out;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) inv[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
    return unchecked_permutation(std::move(inv));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<int>(i)) return false;
    return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size())
        throw std::invalid_argument("compose: permutations act on different sets");
    std::vector<int> img(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        img[i] = p.img_[static_cast<std::size_t>(q.img_[i])];
    return unchecked_permutation(std::move(img));
}

std::int64_t inversions(const Permutation& p) {
    const auto& img = p.images();
    std::int64_t count = 0;
    for (std::size_t i = 0; i < img.size(); ++i)
        for (std::size_t j = i + 1; j < img.size(); ++j)
            if (img[i] > img[j]) ++count;
    return count;
}

int descents(const Permutation& p) {
    const auto& img = p.images();
    int count = 0;
    for (std::size_t i = 0; i + 1 < img.size(); ++i)
        if (img[i] > img[i + 1]) ++count;
    return count;
}

bool shorter_then_lex_less(const Permutation& a, const Permutation& b) {
    auto la = inversions(a), lb = inversions(b);
    if (la != lb) return la < lb;
    return a < b;
}

std::vector<Permutation> all_permutations(std::size_t n) {
    if (n < 1 || n > 10)
        throw std::invalid_argument("all_permutations: n must be between 1 and 10");
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(unchecked_permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
    std::size_t h = p.size();
    for (int v : p.images())
        h = h * 1099511628211ULL + static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL;
    return h;
}

} // namespace strata
