#include "strata/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>

namespace strata {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using Matrix = std::vector<std::vector<double>>;

Matrix linf_costs(const Barcode& a, const Barcode& b) {
    const std::size_t n = a.size();
    Matrix c(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            c[i][j] = std::max(std::abs(a[i].birth - b[j].birth),
                               std::abs(a[i].death - b[j].death));
    return c;
}

Matrix l2sq_costs(const Barcode& a, const Barcode& b) {
    const std::size_t n = a.size();
    Matrix c(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double db = a[i].birth - b[j].birth;
            const double dd = a[i].death - b[j].death;
            c[i][j] = db * db + dd * dd;
        }
    return c;
}

void require_same_size(const Barcode& a, const Barcode& b) {
    if (a.size() != b.size())
        throw std::invalid_argument(
            "modified distances are only defined for barcodes with the same number of bars");
}

// ---- bipartite matching machinery ------------------------------------

// Hopcroft-Karp maximum matching; adj[i] lists candidate columns of row i.
int hopcroft_karp(const std::vector<std::vector<int>>& adj, int n, std::vector<int>& match_row,
                  std::vector<int>& match_col) {
    match_row.assign(static_cast<std::size_t>(n), -1);
    match_col.assign(static_cast<std::size_t>(n), -1);
    constexpr int kUnreached = std::numeric_limits<int>::max();
    std::vector<int> dist(static_cast<std::size_t>(n));
    int matching = 0;

    auto bfs = [&]() {
        std::queue<int> q;
        bool reachable_free = false;
        for (int i = 0; i < n; ++i) {
            if (match_row[static_cast<std::size_t>(i)] == -1) {
                dist[static_cast<std::size_t>(i)] = 0;
                q.push(i);
            } else {
                dist[static_cast<std::size_t>(i)] = kUnreached;
            }
        }
        while (!q.empty()) {
            const int i = q.front();
            q.pop();
            for (int j : adj[static_cast<std::size_t>(i)]) {
                const int r = match_col[static_cast<std::size_t>(j)];
                if (r == -1) {
                    reachable_free = true;
                } else if (dist[static_cast<std::size_t>(r)] == kUnreached) {
                    dist[static_cast<std::size_t>(r)] = dist[static_cast<std::size_t>(i)] + 1;
                    q.push(r);
                }
            }
        }
        return reachable_free;
    };

    std::function<bool(int)> dfs = [&](int i) -> bool {
        for (int j : adj[static_cast<std::size_t>(i)]) {
            const int r = match_col[static_cast<std::size_t>(j)];
            if (r == -1 ||
                (dist[static_cast<std::size_t>(r)] == dist[static_cast<std::size_t>(i)] + 1 &&
                 dfs(r))) {
                match_row[static_cast<std::size_t>(i)] = j;
                match_col[static_cast<std::size_t>(j)] = i;
                return true;
            }
        }
        dist[static_cast<std::size_t>(i)] = kUnreached;
        return false;
    };

    while (bfs())
        for (int i = 0; i < n; ++i)
            if (match_row[static_cast<std::size_t>(i)] == -1 && dfs(i)) ++matching;
    return matching;
}

std::vector<std::vector<int>> threshold_adjacency(const Matrix& c, double t) {
    const int n = static_cast<int>(c.size());
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] <= t)
                adj[static_cast<std::size_t>(i)].push_back(j);
    return adj;
}

// Single-row augmenting search (Kuhn) over an edge predicate, honouring a
// set of blocked columns.
bool kuhn_augment(int i, int n, const std::function<bool(int, int)>& edge,
                  std::vector<int>& match_col, std::vector<char>& visited,
                  const std::vector<char>& blocked) {
    for (int j = 0; j < n; ++j) {
        if (blocked[static_cast<std::size_t>(j)] || visited[static_cast<std::size_t>(j)] ||
            !edge(i, j))
            continue;
        visited[static_cast<std::size_t>(j)] = 1;
        const int r = match_col[static_cast<std::size_t>(j)];
        if (r == -1 || kuhn_augment(r, n, edge, match_col, visited, blocked)) {
            match_col[static_cast<std::size_t>(j)] = i;
            return true;
        }
    }
    return false;
}

// Rewires a perfect matching into the lexicographically smallest one (as a
// row -> column map) inside the subgraph described by `edge`. match_col must
// hold a perfect matching on entry.
Permutation lex_smallest_perfect_matching(int n, const std::function<bool(int, int)>& edge,
                                          std::vector<int> match_col) {
    std::vector<int> gamma(static_cast<std::size_t>(n), -1);
    std::vector<char> fixed(static_cast<std::size_t>(n), 0);
    std::vector<int> match_row(static_cast<std::size_t>(n), -1);
    for (int j = 0; j < n; ++j)
        if (match_col[static_cast<std::size_t>(j)] != -1)
            match_row[static_cast<std::size_t>(match_col[static_cast<std::size_t>(j)])] = j;

    for (int i = 0; i < n; ++i) {
        // Detach row i; the rest of match_col stays a perfect matching of
        // the remaining rows onto the non-fixed columns.
        match_col[static_cast<std::size_t>(match_row[static_cast<std::size_t>(i)])] = -1;
        int chosen = -1;
        for (int j = 0; j < n && chosen == -1; ++j) {
            if (fixed[static_cast<std::size_t>(j)] || !edge(i, j)) continue;
            const int r = match_col[static_cast<std::size_t>(j)];
            if (r == -1) {
                chosen = j;
                break;
            }
            // Column j is occupied: it is usable iff its occupant can be
            // rerouted to some other free column.
            match_col[static_cast<std::size_t>(j)] = -1;
            fixed[static_cast<std::size_t>(j)] = 1;
            std::vector<char> visited(static_cast<std::size_t>(n), 0);
            if (kuhn_augment(r, n, edge, match_col, visited, fixed)) {
                chosen = j;
                fixed[static_cast<std::size_t>(j)] = 0; // re-marked below
            } else {
                fixed[static_cast<std::size_t>(j)] = 0;
                match_col[static_cast<std::size_t>(j)] = r;
            }
        }
        if (chosen == -1) throw std::logic_error("lex matching: no admissible column");
        gamma[static_cast<std::size_t>(i)] = chosen;
        fixed[static_cast<std::size_t>(chosen)] = 1;
        // Rebuild match_row for the rows that were rerouted.
        for (int j = 0; j < n; ++j)
            if (match_col[static_cast<std::size_t>(j)] != -1)
                match_row[static_cast<std::size_t>(match_col[static_cast<std::size_t>(j)])] = j;
    }
    return unchecked_permutation(std::move(gamma));
}

// Jonker-Volgenant style shortest augmenting paths with potentials;
// minimizes sum cost[i][col(i)] and returns dual variables.
double lap_min(const Matrix& cost, std::vector<int>& row_to_col, std::vector<double>& u,
               std::vector<double>& v) {
    const int n = static_cast<int>(cost.size());
    std::vector<double> uu(static_cast<std::size_t>(n) + 1, 0.0),
        vv(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<int> p(static_cast<std::size_t>(n) + 1, 0), way(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(static_cast<std::size_t>(n) + 1, kInf);
        std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
        do {
            used[static_cast<std::size_t>(j0)] = 1;
            const int i0 = p[static_cast<std::size_t>(j0)];
            int j1 = 0;
            double delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[static_cast<std::size_t>(j)]) continue;
                const double cur = cost[static_cast<std::size_t>(i0 - 1)][static_cast<std::size_t>(j - 1)] -
                                   uu[static_cast<std::size_t>(i0)] - vv[static_cast<std::size_t>(j)];
                if (cur < minv[static_cast<std::size_t>(j)]) {
                    minv[static_cast<std::size_t>(j)] = cur;
                    way[static_cast<std::size_t>(j)] = j0;
                }
                if (minv[static_cast<std::size_t>(j)] < delta) {
                    delta = minv[static_cast<std::size_t>(j)];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[static_cast<std::size_t>(j)]) {
                    uu[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])] += delta;
                    vv[static_cast<std::size_t>(j)] -= delta;
                } else {
                    minv[static_cast<std::size_t>(j)] -= delta;
                }
            }
            j0 = j1;
        } while (p[static_cast<std::size_t>(j0)] != 0);
        do {
            const int j1 = way[static_cast<std::size_t>(j0)];
            p[static_cast<std::size_t>(j0)] = p[static_cast<std::size_t>(j1)];
            j0 = j1;
        } while (j0);
    }
    row_to_col.assign(static_cast<std::size_t>(n), -1);
    for (int j = 1; j <= n; ++j)
        if (p[static_cast<std::size_t>(j)])
            row_to_col[static_cast<std::size_t>(p[static_cast<std::size_t>(j)] - 1)] = j - 1;
    u.assign(uu.begin() + 1, uu.end());
    v.assign(vv.begin() + 1, vv.end());
    double total = 0.0;
    for (int i = 0; i < n; ++i)
        total += cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(row_to_col[static_cast<std::size_t>(i)])];
    return total;
}

// Min-cost perfect matching by successive shortest paths with Bellman-Ford
// (SPFA) path searches; independent of lap_min by construction.
std::vector<int> mincost_matching_bellman(const Matrix& cost) {
    const int n = static_cast<int>(cost.size());
    std::vector<int> match_row(static_cast<std::size_t>(n), -1),
        match_col(static_cast<std::size_t>(n), -1);
    for (int round = 0; round < n; ++round) {
        std::vector<double> dist_row(static_cast<std::size_t>(n), kInf),
            dist_col(static_cast<std::size_t>(n), kInf);
        std::vector<int> from_row(static_cast<std::size_t>(n), -1);
        std::vector<char> in_queue(static_cast<std::size_t>(n), 0);
        std::queue<int> q;
        for (int i = 0; i < n; ++i)
            if (match_row[static_cast<std::size_t>(i)] == -1) {
                dist_row[static_cast<std::size_t>(i)] = 0.0;
                q.push(i);
                in_queue[static_cast<std::size_t>(i)] = 1;
            }
        while (!q.empty()) {
            const int i = q.front();
            q.pop();
            in_queue[static_cast<std::size_t>(i)] = 0;
            for (int j = 0; j < n; ++j) {
                if (match_row[static_cast<std::size_t>(i)] == j) continue;
                const double nd = dist_row[static_cast<std::size_t>(i)] +
                                  cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (nd < dist_col[static_cast<std::size_t>(j)]) {
                    dist_col[static_cast<std::size_t>(j)] = nd;
                    from_row[static_cast<std::size_t>(j)] = i;
                    const int r = match_col[static_cast<std::size_t>(j)];
                    if (r != -1) {
                        const double ndr =
                            nd - cost[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
                        if (ndr < dist_row[static_cast<std::size_t>(r)]) {
                            dist_row[static_cast<std::size_t>(r)] = ndr;
                            if (!in_queue[static_cast<std::size_t>(r)]) {
                                q.push(r);
                                in_queue[static_cast<std::size_t>(r)] = 1;
                            }
                        }
                    }
                }
            }
        }
        int best = -1;
        for (int j = 0; j < n; ++j) {
            if (match_col[static_cast<std::size_t>(j)] != -1) continue;
            if (best == -1 || dist_col[static_cast<std::size_t>(j)] < dist_col[static_cast<std::size_t>(best)])
                best = j;
        }
        // Augment along the recorded shortest path.
        int j = best;
        while (j != -1) {
            const int i = from_row[static_cast<std::size_t>(j)];
            const int prev = match_row[static_cast<std::size_t>(i)];
            match_row[static_cast<std::size_t>(i)] = j;
            match_col[static_cast<std::size_t>(j)] = i;
            j = prev;
        }
    }
    return match_row;
}

double evaluate_linf(const Matrix& c, const Permutation& gamma) {
    double worst = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i)
        worst = std::max(worst, c[i][static_cast<std::size_t>(gamma(static_cast<int>(i)))]);
    return worst;
}

double evaluate_sum(const Matrix& c, const Permutation& gamma) {
    double total = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i)
        total += c[i][static_cast<std::size_t>(gamma(static_cast<int>(i)))];
    return total;
}

} // namespace

MatchingResult modified_bottleneck(const Barcode& a, const Barcode& b, std::uint64_t lex_max_n) {
    require_same_size(a, b);
    const int n = static_cast<int>(a.size());
    const Matrix c = linf_costs(a, b);

    std::vector<double> candidates;
    candidates.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (const auto& row : c) candidates.insert(candidates.end(), row.begin(), row.end());
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // Smallest candidate threshold admitting a perfect matching.
    std::vector<int> match_row, match_col;
    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        const auto adj = threshold_adjacency(c, candidates[mid]);
        if (hopcroft_karp(adj, n, match_row, match_col) == n)
            hi = mid;
        else
            lo = mid + 1;
    }
    const double threshold = candidates[lo];
    const auto adj = threshold_adjacency(c, threshold);
    hopcroft_karp(adj, n, match_row, match_col);

    Permutation gamma = unchecked_permutation(match_row);
    if (static_cast<std::uint64_t>(n) <= lex_max_n) {
        auto edge = [&c, threshold](int i, int j) {
            return c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] <= threshold;
        };
        gamma = lex_smallest_perfect_matching(n, edge, match_col);
    }
    return MatchingResult{evaluate_linf(c, gamma), std::move(gamma)};
}

MatchingResult modified_wasserstein(const Barcode& a, const Barcode& b, std::uint64_t lex_max_n) {
    require_same_size(a, b);
    const int n = static_cast<int>(a.size());
    const Matrix c = l2sq_costs(a, b);

    std::vector<int> row_to_col;
    std::vector<double> u, v;
    lap_min(c, row_to_col, u, v);

    Permutation gamma = unchecked_permutation(row_to_col);
    if (static_cast<std::uint64_t>(n) <= lex_max_n) {
        // Optimal assignments are exactly the perfect matchings of the
        // tight-edge graph (complementary slackness); pick its
        // lexicographically smallest one.
        double scale = 1.0;
        for (const auto& row : c)
            for (double x : row) scale = std::max(scale, std::abs(x));
        const double tol = 1e-12 * scale * static_cast<double>(n);
        auto edge = [&](int i, int j) {
            return c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                       u[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(j)] <=
                   tol;
        };
        std::vector<int> match_col(static_cast<std::size_t>(n), -1);
        for (int i = 0; i < n; ++i)
            match_col[static_cast<std::size_t>(row_to_col[static_cast<std::size_t>(i)])] = i;
        gamma = lex_smallest_perfect_matching(n, edge, std::move(match_col));
    }
    return MatchingResult{std::sqrt(evaluate_sum(c, gamma)), std::move(gamma)};
}

double quotient_distance(const Barcode& a, const Barcode& b, Norm norm) {
    require_same_size(a, b);
    const int n = static_cast<int>(a.size());

    // Matching row i (bar of a) to column j (bar of b) realises the group
    // element g with g(j) = i in the diagonal action below.
    std::vector<int> match_row;
    if (norm == Norm::linf) {
        const Matrix c = linf_costs(a, b);
        std::vector<double> candidates;
        for (const auto& row : c) candidates.insert(candidates.end(), row.begin(), row.end());
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        // Incremental threshold growth: admit edges batch by batch until a
        // perfect matching appears.
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
        std::vector<int> match_col(static_cast<std::size_t>(n), -1);
        std::vector<char> row_matched(static_cast<std::size_t>(n), 0);
        int matched = 0;
        for (double t : candidates) {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == t)
                        adj[static_cast<std::size_t>(i)].push_back(j);
            for (int i = 0; i < n && matched < n; ++i) {
                if (row_matched[static_cast<std::size_t>(i)]) continue;
                std::vector<char> visited(static_cast<std::size_t>(n), 0);
                std::vector<char> blocked(static_cast<std::size_t>(n), 0);
                auto edge = [&adj](int r, int j) {
                    const auto& row = adj[static_cast<std::size_t>(r)];
                    return std::find(row.begin(), row.end(), j) != row.end();
                };
                if (kuhn_augment(i, n, edge, match_col, visited, blocked)) {
                    row_matched[static_cast<std::size_t>(i)] = 1;
                    ++matched;
                }
            }
            if (matched == n) break;
        }
        match_row.assign(static_cast<std::size_t>(n), -1);
        for (int j = 0; j < n; ++j)
            if (match_col[static_cast<std::size_t>(j)] != -1)
                match_row[static_cast<std::size_t>(match_col[static_cast<std::size_t>(j)])] = j;
    } else {
        match_row = mincost_matching_bellman(l2sq_costs(a, b));
    }

    std::vector<int> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(match_row[static_cast<std::size_t>(i)])] = i;
    const Permutation gamma = unchecked_permutation(std::move(g));

    // Literal evaluation on the stacked 2n-dimensional vectors.
    const auto pb = act(gamma, b.births());
    const auto pd = act(gamma, b.deaths());
    const auto ab = a.births();
    const auto ad = a.deaths();
    if (norm == Norm::linf) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            worst = std::max(worst, std::abs(ab[static_cast<std::size_t>(i)] - pb[static_cast<std::size_t>(i)]));
            worst = std::max(worst, std::abs(ad[static_cast<std::size_t>(i)] - pd[static_cast<std::size_t>(i)]));
        }
        return worst;
    }
    double sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double db = ab[static_cast<std::size_t>(i)] - pb[static_cast<std::size_t>(i)];
        sq += db * db;
    }
    for (int i = 0; i < n; ++i) {
        const double dd = ad[static_cast<std::size_t>(i)] - pd[static_cast<std::size_t>(i)];
        sq += dd * dd;
    }
    return std::sqrt(sq);
}

MatchingResult brute_force(const Barcode& a, const Barcode& b, Norm norm) {
    require_same_size(a, b);
    if (a.size() > 8) throw std::invalid_argument("brute_force is limited to n <= 8");
    const Matrix c = norm == Norm::linf ? linf_costs(a, b) : l2sq_costs(a, b);
    const auto perms = all_permutations(a.size());
    double best = kInf;
    const Permutation* best_gamma = nullptr;
    for (const auto& gamma : perms) {
        const double value = norm == Norm::linf ? evaluate_linf(c, gamma) : evaluate_sum(c, gamma);
        if (value < best) {
            best = value;
            best_gamma = &gamma;
        }
    }
    return MatchingResult{norm == Norm::linf ? best : std::sqrt(best), *best_gamma};
}

std::vector<std::vector<double>> distance_matrix(std::span<const Barcode> barcodes, Norm norm) {
    for (const auto& b : barcodes)
        if (b.size() != barcodes.front().size())
            throw std::invalid_argument("distance_matrix requires barcodes with equal bar counts");
    const std::size_t m = barcodes.size();
    std::vector<std::vector<double>> out(m, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const double d = norm == Norm::linf
                                 ? modified_bottleneck(barcodes[i], barcodes[j]).distance
                                 : modified_wasserstein(barcodes[i], barcodes[j]).distance;
            out[i][j] = out[j][i] = d;
        }
    return out;
}

} // namespace strata
