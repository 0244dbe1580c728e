#include "strata/double_coset.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "strata/config.hpp"

namespace strata {

Permutation canonical_double_coset_rep(const ParabolicSubgroup& left, const Permutation& sigma,
                                       const ParabolicSubgroup& right) {
    const std::size_t n = sigma.size();
    if (left.n() != n || right.n() != n)
        throw std::invalid_argument("double coset: sizes of parabolics and permutation differ");
    std::vector<int> img = sigma.images();
    std::vector<int> pos(n); // pos[v] = position of value v
    for (std::size_t i = 0; i < n; ++i) pos[static_cast<std::size_t>(img[i])] = static_cast<int>(i);

    // Right generator k swaps the entries at positions k, k+1; it shortens
    // the word iff they descend. Left generator k swaps the values k, k+1;
    // it shortens iff value k+1 sits left of value k. Every swap removes one
    // inversion, so the loop terminates at the unique minimal element.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int k : right.generators()) {
            int a = k - 1, b = k;
            if (img[static_cast<std::size_t>(a)] > img[static_cast<std::size_t>(b)]) {
                std::swap(img[static_cast<std::size_t>(a)], img[static_cast<std::size_t>(b)]);
                pos[static_cast<std::size_t>(img[static_cast<std::size_t>(a)])] = a;
                pos[static_cast<std::size_t>(img[static_cast<std::size_t>(b)])] = b;
                changed = true;
            }
        }
        for (int k : left.generators()) {
            int va = k - 1, vb = k;
            int pa = pos[static_cast<std::size_t>(va)], pb = pos[static_cast<std::size_t>(vb)];
            if (pa > pb) {
                std::swap(img[static_cast<std::size_t>(pa)], img[static_cast<std::size_t>(pb)]);
                pos[static_cast<std::size_t>(va)] = pb;
                pos[static_cast<std::size_t>(vb)] = pa;
                changed = true;
            }
        }
    }
    return unchecked_permutation(std::move(img));
}

MarkedDoubleCoset::MarkedDoubleCoset(ParabolicSubgroup left, const Permutation& sigma,
                                     ParabolicSubgroup right)
    : left_(std::move(left)), right_(std::move(right)),
      rep_(canonical_double_coset_rep(left_, sigma, right_)) {}

std::vector<Permutation> MarkedDoubleCoset::elements(std::uint64_t cap) const {
    if (left_.order_exceeds(cap) || right_.order_exceeds(cap) ||
        left_.order() > cap / right_.order())
        throw CapExceeded("double coset enumeration exceeds cap");
    auto ls = left_.elements(cap);
    auto rs = right_.elements(cap);
    std::set<std::vector<int>> seen;
    for (const auto& l : ls) {
        const Permutation lr = l * rep_;
        for (const auto& r : rs) seen.insert((lr * r).images());
    }
    std::vector<Permutation> out;
    out.reserve(seen.size());
    for (const auto& img : seen) out.push_back(unchecked_permutation(img));
    return out;
}

bool dc_member(const Permutation& sigma, const MarkedDoubleCoset& d) {
    if (sigma.size() != d.n())
        throw std::invalid_argument("dc_member: sizes differ");
    return canonical_double_coset_rep(d.left(), sigma, d.right()) == d.rep();
}

bool q_leq(const MarkedDoubleCoset& a, const MarkedDoubleCoset& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("q_leq: sizes differ");
    return a.left().contains_subgroup(b.left()) && a.right().contains_subgroup(b.right()) &&
           dc_member(b.rep(), a);
}

OrbitPair::OrbitPair(const Coset& left, const Coset& right)
    : left_(Permutation::identity(left.subgroup().n()), left.subgroup()),
      right_(canonical_double_coset_rep(left.subgroup(), left.rep().inverse() * right.rep(),
                                        right.subgroup()),
             right.subgroup()) {}

MarkedDoubleCoset phi(const OrbitPair& p) {
    return MarkedDoubleCoset(p.left().subgroup(), p.right().rep(), p.right().subgroup());
}

OrbitPair psi(const MarkedDoubleCoset& d) {
    return OrbitPair(Coset(Permutation::identity(d.n()), d.left()),
                     Coset(d.rep(), d.right()));
}

bool orbit_leq(const OrbitPair& a, const OrbitPair& b) {
    const std::size_t n = a.left().subgroup().n();
    if (n != b.left().subgroup().n())
        throw std::invalid_argument("orbit_leq: sizes differ");
    if (n > 8) throw std::invalid_argument("orbit_leq: guarded to n <= 8");
    // Coset containment tau P_A >= g tau' P_B needs P_A >= P_B; that part is
    // independent of g, so check it once and scan S_n for the rep condition.
    if (!a.left().subgroup().contains_subgroup(b.left().subgroup()) ||
        !a.right().subgroup().contains_subgroup(b.right().subgroup()))
        return false;
    const auto& bl = b.left().rep().images();
    const auto& br = b.right().rep().images();
    const auto lblocks = a.left().subgroup().blocks();
    const auto rblocks = a.right().subgroup().blocks();
    std::vector<int> g(n), tmp(n);
    std::iota(g.begin(), g.end(), 0);
    auto lands_on = [&](const std::vector<int>& rep_b, const std::vector<int>& rep_a,
                        const std::vector<std::pair<int, int>>& blocks) {
        for (std::size_t i = 0; i < n; ++i) tmp[i] = g[static_cast<std::size_t>(rep_b[i])];
        for (auto [s, e] : blocks) std::sort(tmp.begin() + (s - 1), tmp.begin() + e);
        return tmp == rep_a;
    };
    do {
        if (lands_on(bl, a.left().rep().images(), lblocks) &&
            lands_on(br, a.right().rep().images(), rblocks))
            return true;
    } while (std::next_permutation(g.begin(), g.end()));
    return false;
}

namespace {

std::vector<ParabolicSubgroup> all_parabolics(std::size_t n) {
    std::vector<ParabolicSubgroup> out;
    const std::size_t s = n - 1;
    for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
        std::vector<int> gens;
        for (std::size_t k = 0; k < s; ++k)
            if (mask & (1u << k)) gens.push_back(static_cast<int>(k + 1));
        out.emplace_back(n, std::move(gens));
    }
    return out;
}

} // namespace

std::vector<MarkedDoubleCoset> enumerate_marked_double_cosets(std::size_t n) {
    if (n < 2 || n > 6)
        throw std::invalid_argument("marked double coset enumeration supports 2 <= n <= 6");
    const auto perms = all_permutations(n);
    const auto parabolics = all_parabolics(n);
    std::vector<MarkedDoubleCoset> out;
    for (const auto& P1 : parabolics) {
        for (const auto& P2 : parabolics) {
            std::set<std::vector<int>> reps;
            for (const auto& sigma : perms)
                reps.insert(canonical_double_coset_rep(P1, sigma, P2).images());
            for (const auto& img : reps)
                out.emplace_back(P1, unchecked_permutation(img), P2);
        }
    }
    return out;
}

std::vector<Coset> enumerate_cosets(std::size_t n) {
    if (n < 2 || n > 6)
        throw std::invalid_argument("coset enumeration supports 2 <= n <= 6");
    const auto perms = all_permutations(n);
    std::vector<Coset> out;
    for (const auto& P : all_parabolics(n)) {
        std::set<std::vector<int>> reps;
        for (const auto& tau : perms) reps.insert(canonical_coset_rep(tau, P).images());
        for (const auto& img : reps) out.emplace_back(unchecked_permutation(img), P);
    }
    return out;
}

} // namespace strata
