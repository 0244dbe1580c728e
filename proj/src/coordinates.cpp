#include "strata/coordinates.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace strata {

namespace detail {

std::pair<double, double> mean_radius(std::span<const double> x) {
    if (x.empty()) throw std::invalid_argument("empty vector");
    std::vector<double> sorted(x.begin(), x.end());
    std::sort(sorted.begin(), sorted.end());
    // All-equal input must give radius exactly 0.
    if (sorted.front() == sorted.back()) return {sorted.front(), 0.0};
    double sum = 0.0;
    for (double v : sorted) sum += v;
    const double mean = sum / static_cast<double>(x.size());
    // Second pass removes the rounding residue of the mean so that the
    // deviations sum to zero at machine precision even after normalization.
    double residue = 0.0;
    for (double v : sorted) residue += v - mean;
    const double correction = residue / static_cast<double>(x.size());
    double sq = 0.0;
    for (double v : sorted) {
        const double d = (v - mean) - correction;
        sq += d * d;
    }
    return {mean, std::sqrt(sq)};
}

// The per-coordinate deviation matching mean_radius. Kept in one place so
// direction() is bitwise equivariant under permutations of the input.
static double deviation(double v, double mean, double correction) {
    return (v - mean) - correction;
}

static double mean_correction(std::span<const double> x, double mean) {
    std::vector<double> sorted(x.begin(), x.end());
    std::sort(sorted.begin(), sorted.end());
    double residue = 0.0;
    for (double v : sorted) residue += v - mean;
    return residue / static_cast<double>(x.size());
}

} // namespace detail

std::pair<double, double> project(std::span<const double> x) {
    if (x.size() < 2) throw std::invalid_argument("project requires n >= 2");
    return detail::mean_radius(x);
}

std::vector<double> direction(std::span<const double> x) {
    auto [mean, radius] = project(x);
    if (radius == 0.0)
        throw std::domain_error("degenerate: all coordinates equal, direction undefined");
    const double correction = detail::mean_correction(x, mean);
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = detail::deviation(x[i], mean, correction) / radius;
    return out;
}

Coset face_of(std::span<const double> x, double tol) {
    if (x.size() < 2) throw std::invalid_argument("face_of requires n >= 2");
    if (tol < 0.0) throw std::invalid_argument("tolerance must be nonnegative");
    const std::size_t n = x.size();
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        return x[static_cast<std::size_t>(a)] < x[static_cast<std::size_t>(b)];
    });
    std::vector<int> gens;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const double gap = x[static_cast<std::size_t>(idx[k + 1])] - x[static_cast<std::size_t>(idx[k])];
        if (gap <= tol) gens.push_back(static_cast<int>(k + 1));
    }
    return Coset(unchecked_permutation(std::move(idx)), ParabolicSubgroup(n, std::move(gens)));
}

ConeCoordinates decompose(std::span<const double> x, double tol) {
    ConeCoordinates c;
    c.n = x.size();
    std::tie(c.mean, c.radius) = project(x);
    if (c.radius > 0.0) {
        c.direction = direction(x);
        c.face = face_of(std::span<const double>(*c.direction), tol);
    }
    return c;
}

std::vector<double> reconstruct(const ConeCoordinates& c) {
    if (c.n < 1) throw std::invalid_argument("reconstruct: n must be >= 1");
    if (c.radius < 0.0) throw std::invalid_argument("reconstruct: negative radius");
    if (c.radius == 0.0) {
        if (c.direction || c.face)
            throw std::invalid_argument("reconstruct: direction/face must be absent at radius 0");
        return std::vector<double>(c.n, c.mean);
    }
    if (!c.direction)
        throw std::invalid_argument("reconstruct: direction required when radius > 0");
    const auto& u = *c.direction;
    if (u.size() != c.n)
        throw std::invalid_argument("reconstruct: direction length does not match n");
    double norm2 = 0.0, sum = 0.0;
    for (double v : u) {
        norm2 += v * v;
        sum += v;
    }
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-12 || std::abs(sum) > 1e-12)
        throw std::invalid_argument("reconstruct: direction is not a unit vector with zero sum");
    if (c.face && !(*c.face == face_of(std::span<const double>(u))))
        throw std::invalid_argument("reconstruct: face does not match direction");
    std::vector<double> out(c.n);
    for (std::size_t i = 0; i < c.n; ++i) out[i] = c.mean + c.radius * u[i];
    return out;
}

} // namespace strata
