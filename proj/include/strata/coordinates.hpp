#pragma once

#include <optional>
#include <span>
#include <vector>

#include "strata/parabolic.hpp"

namespace strata {

// Cone-and-line coordinates of a vector x in R^n: x = mean * (1,...,1) +
// radius * direction, where direction is a unit vector with zero coordinate
// sum. The face is the lowest-dimensional face of the Coxeter complex whose
// closed simplex contains direction; both are absent exactly when x lies on
// the diagonal line (radius = 0).
//
// radius is the plain l2 norm of the deviations, (sum |x_i - mean|^2)^(1/2),
// without the 1/sqrt(n) of the statistical standard deviation.
struct ConeCoordinates {
    std::size_t n = 0;
    double mean = 0.0;
    double radius = 0.0;
    std::optional<std::vector<double>> direction;
    std::optional<Coset> face;
};

// (mean, radius). Requires n >= 2. Accumulation runs over a sorted copy of
// the input so the result is bitwise invariant under permutation.
std::pair<double, double> project(std::span<const double> x);

// (x - mean * e) / radius. Throws std::domain_error when all coordinates are
// equal ("degenerate": the spherical coordinate is undefined on the line).
std::vector<double> direction(std::span<const double> x);

// The coset {rho : x_{rho(1)} <= ... <= x_{rho(n)}} with its canonical
// (stable-sort) representative; generator k present iff the k-th and
// (k+1)-th smallest values are within tol of each other (single linkage).
// Defined on the diagonal line too, where it returns the full-group coset.
Coset face_of(std::span<const double> x, double tol = 0.0);

ConeCoordinates decompose(std::span<const double> x, double tol = 0.0);

// Inverse of decompose; validates the ConeCoordinates invariants.
std::vector<double> reconstruct(const ConeCoordinates& c);

// Convenience overloads.
inline std::pair<double, double> project(const std::vector<double>& x) {
    return project(std::span<const double>(x));
}
inline std::vector<double> direction(const std::vector<double>& x) {
    return direction(std::span<const double>(x));
}
inline Coset face_of(const std::vector<double>& x, double tol = 0.0) {
    return face_of(std::span<const double>(x), tol);
}
inline ConeCoordinates decompose(const std::vector<double>& x, double tol = 0.0) {
    return decompose(std::span<const double>(x), tol);
}

namespace detail {
// mean/radius for any n >= 1 (n = 1 yields radius 0); shared with the
// barcode module, which must handle single-bar barcodes.
std::pair<double, double> mean_radius(std::span<const double> x);
} // namespace detail

} // namespace strata
