#include "strata/parabolic.hpp"

#include <algorithm>
#include <numeric>

#include "strata/config.hpp"

namespace strata {

ParabolicSubgroup::ParabolicSubgroup(std::size_t n, std::vector<int> generators)
    : n_(n), gens_(std::move(generators)) {
    if (n_ < 1) throw std::invalid_argument("parabolic subgroup needs n >= 1");
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    for (int k : gens_)
        if (k < 1 || static_cast<std::size_t>(k) >= n_)
            throw std::invalid_argument("generator index out of range 1..n-1");
}

ParabolicSubgroup ParabolicSubgroup::trivial(std::size_t n) {
    return ParabolicSubgroup(n, {});
}

ParabolicSubgroup ParabolicSubgroup::full(std::size_t n) {
    std::vector<int> gens(n >= 1 ? n - 1 : 0);
    std::iota(gens.begin(), gens.end(), 1);
    return ParabolicSubgroup(n, std::move(gens));
}

std::vector<std::pair<int, int>> ParabolicSubgroup::blocks() const {
    std::vector<std::pair<int, int>> out;
    std::size_t gi = 0;
    int start = 1;
    while (start <= static_cast<int>(n_)) {
        int end = start;
        // generator k glues positions k and k+1
        while (gi < gens_.size() && gens_[gi] == end) {
            ++end;
            ++gi;
        }
        out.emplace_back(start, end);
        start = end + 1;
    }
    return out;
}

std::uint64_t ParabolicSubgroup::order() const {
    std::uint64_t ord = 1;
    for (auto [a, b] : blocks()) {
        for (int m = 2; m <= b - a + 1; ++m) {
            if (ord > UINT64_MAX / static_cast<std::uint64_t>(m)) return UINT64_MAX;
            ord *= static_cast<std::uint64_t>(m);
        }
    }
    return ord;
}

bool ParabolicSubgroup::order_exceeds(std::uint64_t cap) const {
    std::uint64_t ord = 1;
    for (auto [a, b] : blocks()) {
        for (int m = 2; m <= b - a + 1; ++m) {
            if (ord > cap / static_cast<std::uint64_t>(m)) return true;
            ord *= static_cast<std::uint64_t>(m);
        }
    }
    return ord > cap;
}

bool ParabolicSubgroup::contains(const Permutation& p) const {
    if (p.size() != n_) return false;
    for (auto [a, b] : blocks()) {
        for (int pos = a; pos <= b; ++pos) {
            int v = p(pos - 1) + 1;
            if (v < a || v > b) return false;
        }
    }
    return true;
}

bool ParabolicSubgroup::contains_subgroup(const ParabolicSubgroup& other) const {
    if (other.n_ != n_) return false;
    return std::includes(gens_.begin(), gens_.end(), other.gens_.begin(), other.gens_.end());
}

std::vector<Permutation> ParabolicSubgroup::elements(std::uint64_t cap) const {
    if (order_exceeds(cap))
        throw CapExceeded("parabolic subgroup order exceeds enumeration cap");
    // Per-block arrangements, combined by an odometer over the blocks.
    std::vector<std::vector<std::vector<int>>> arrangements;
    for (auto [a, b] : blocks()) {
        std::vector<int> base;
        for (int pos = a; pos <= b; ++pos) base.push_back(pos - 1);
        std::vector<std::vector<int>> arr;
        std::vector<int> cur = base;
        do {
            arr.push_back(cur);
        } while (std::next_permutation(cur.begin(), cur.end()));
        arrangements.push_back(std::move(arr));
    }
    auto blks = blocks();
    std::vector<std::size_t> idx(arrangements.size(), 0);
    std::vector<Permutation> out;
    while (true) {
        std::vector<int> img(n_);
        for (std::size_t bi = 0; bi < blks.size(); ++bi) {
            auto [a, b] = blks[bi];
            const auto& arr = arrangements[bi][idx[bi]];
            for (int pos = a; pos <= b; ++pos) img[static_cast<std::size_t>(pos - 1)] = arr[static_cast<std::size_t>(pos - a)];
        }
        out.push_back(unchecked_permutation(std::move(img)));
        std::size_t bi = 0;
        while (bi < idx.size()) {
            if (++idx[bi] < arrangements[bi].size()) break;
            idx[bi] = 0;
            ++bi;
        }
        if (bi == idx.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

Permutation canonical_coset_rep(const Permutation& tau, const ParabolicSubgroup& P) {
    if (tau.size() != P.n())
        throw std::invalid_argument("coset rep: permutation and subgroup sizes differ");
    std::vector<int> img = tau.images();
    for (auto [a, b] : P.blocks())
        std::sort(img.begin() + (a - 1), img.begin() + b);
    return unchecked_permutation(std::move(img));
}

Coset::Coset(const Permutation& tau, ParabolicSubgroup subgroup)
    : rep_(canonical_coset_rep(tau, subgroup)), sub_(std::move(subgroup)) {}

bool Coset::member(const Permutation& tau) const {
    if (tau.size() != sub_.n()) return false;
    return canonical_coset_rep(tau, sub_) == rep_;
}

bool Coset::contains_coset(const Coset& other) const {
    return sub_.contains_subgroup(other.sub_) && member(other.rep_);
}

std::vector<Permutation> Coset::elements(std::uint64_t cap) const {
    auto elems = sub_.elements(cap);
    std::vector<Permutation> out;
    out.reserve(elems.size());
    for (const auto& p : elems) out.push_back(rep_ * p);
    std::sort(out.begin(), out.end());
    return out;
}

Coset act(const Permutation& g, const Coset& c) {
    return Coset(g * c.rep(), c.subgroup());
}

} // namespace strata
