#include "strata/coxeter_complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "strata/config.hpp"

namespace strata {

bool face_leq(const Face& f, const Face& g) {
    return f.coset.contains_coset(g.coset);
}

std::size_t FacePoset::count_dim(int dim) const {
    std::size_t c = 0;
    for (const auto& f : faces)
        if (f.dim == dim) ++c;
    return c;
}

long FacePoset::euler_characteristic() const {
    long chi = 0;
    for (const auto& f : faces) {
        if (f.dim < 0) continue;
        chi += (f.dim % 2 == 0) ? 1 : -1;
    }
    return chi;
}

namespace {

void check_complex_range(std::size_t n, std::size_t max_n) {
    if (n < 2 || n > max_n)
        throw std::invalid_argument("coxeter complex enumeration supports 2 <= n <= " +
                                    std::to_string(max_n));
}

} // namespace

FacePoset enumerate_complex(std::size_t n, std::size_t max_n) {
    check_complex_range(n, max_n);
    const auto perms = all_permutations(n);
    FacePoset poset;
    poset.n = n;
    const std::size_t s = n - 1; // number of simple generators
    for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
        std::vector<int> gens;
        for (std::size_t k = 0; k < s; ++k)
            if (mask & (1u << k)) gens.push_back(static_cast<int>(k + 1));
        ParabolicSubgroup P(n, gens);
        std::vector<std::vector<int>> reps;
        for (const auto& tau : perms) reps.push_back(canonical_coset_rep(tau, P).images());
        std::sort(reps.begin(), reps.end());
        reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
        const int dim = static_cast<int>(n) - 2 - static_cast<int>(gens.size());
        for (auto& r : reps)
            poset.faces.push_back(Face{Coset(unchecked_permutation(std::move(r)), P), dim});
    }
    std::sort(poset.faces.begin(), poset.faces.end(), [](const Face& a, const Face& b) {
        return std::tie(a.dim, a.coset.rep().images(), a.coset.subgroup().generators()) <
               std::tie(b.dim, b.coset.rep().images(), b.coset.subgroup().generators());
    });
    return poset;
}

std::size_t ChamberGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : neighbors) twice += nb.size();
    return twice / 2;
}

bool ChamberGraph::is_regular(std::size_t degree) const {
    return std::all_of(neighbors.begin(), neighbors.end(),
                       [degree](const auto& nb) { return nb.size() == degree; });
}

bool ChamberGraph::is_connected() const {
    if (chambers.empty()) return true;
    std::vector<char> seen(chambers.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t visited = 1;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : neighbors[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++visited;
                stack.push_back(w);
            }
    }
    return visited == chambers.size();
}

ChamberGraph chamber_graph(std::size_t n, std::size_t max_n) {
    check_complex_range(n, max_n);
    ChamberGraph g;
    g.chambers = all_permutations(n);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < g.chambers.size(); ++i) index[g.chambers[i].images()] = i;
    g.neighbors.resize(g.chambers.size());
    for (std::size_t i = 0; i < g.chambers.size(); ++i) {
        for (int k = 1; k < static_cast<int>(n); ++k) {
            auto img = g.chambers[i].images();
            std::swap(img[static_cast<std::size_t>(k - 1)], img[static_cast<std::size_t>(k)]);
            g.neighbors[i].push_back(index.at(img));
        }
        std::sort(g.neighbors[i].begin(), g.neighbors[i].end());
    }
    return g;
}

} // namespace strata
