#pragma once

#include <optional>
#include <random>
#include <vector>

#include "strata/coordinates.hpp"
#include "strata/double_coset.hpp"

namespace strata {

struct Bar {
    double birth;
    double death;

    friend bool operator==(const Bar&, const Bar&) = default;
};

// Multiset of bars with finite values and birth < death. The stored order is
// an arbitrary indexing; every invariant computed from a Barcode is
// independent of it.
class Barcode {
public:
    explicit Barcode(std::vector<Bar> bars);

    std::size_t size() const { return bars_.size(); }
    const std::vector<Bar>& bars() const { return bars_; }
    const Bar& operator[](std::size_t i) const { return bars_[i]; }

    std::vector<double> births() const;
    std::vector<double> deaths() const;

    friend bool operator==(const Barcode&, const Barcode&) = default;

private:
    std::vector<Bar> bars_;
};

// Multiset equality (compares sorted bar lists).
bool same_multiset(const Barcode& a, const Barcode& b);

// The permutation tau with birth[tau(1)] <= ... <= birth[tau(n)], canonical
// through a stable sort (ties broken by bar index); death_permutation is the
// analogue for deaths.
Permutation birth_permutation(const Barcode& b);
Permutation death_permutation(const Barcode& b);

bool is_strict(const Barcode& b, double tol = 0.0);

// sigma = tau_b^{-1} * tau_d, the permutation sending the i-th smallest
// death to the sigma(i)-th smallest birth. Only defined for strict barcodes;
// throws std::domain_error otherwise.
Permutation barcode_permutation(const Barcode& b, double tol = 0.0);

// (P_b, P_d): generator k present iff the k-th and (k+1)-th smallest births
// (resp. deaths) coincide within tol.
std::pair<ParabolicSubgroup, ParabolicSubgroup> parabolics(const Barcode& b, double tol = 0.0);

// The marked double coset (P_b, P_b tau_b^{-1} tau_d P_d, P_d); reduces to
// the singleton {sigma} for strict barcodes.
MarkedDoubleCoset double_coset(const Barcode& b, double tol = 0.0);

struct RegionDescriptor {
    double mean_birth;
    double mean_death;
    double dev_birth; // l2 norm of birth deviations
    double dev_death;
    MarkedDoubleCoset stratum;

    friend bool operator==(const RegionDescriptor&, const RegionDescriptor&) = default;
};

// The full coordinate tuple of a barcode: the region data plus a canonical
// representative of the orbit of sphere directions. Directions are absent
// when the corresponding deviation vanishes (all births resp. all deaths
// equal). The orbit representative re-indexes bars by (birth, death, index)
// before projecting, so equal barcodes produce identical directions.
struct BarcodeCoordinates {
    std::size_t n;
    RegionDescriptor region;
    std::optional<std::vector<double>> birth_direction;
    std::optional<std::vector<double>> death_direction;
};

BarcodeCoordinates coxeter_coordinates(const Barcode& b, double tol = 0.0);

// Rebuilds a barcode from its coordinates; inverse of coxeter_coordinates
// up to re-indexing.
Barcode reconstruct_barcode(const BarcodeCoordinates& c);

RegionDescriptor region(const Barcode& b, double tol = 0.0);

// Same region in the sense of the disjoint decomposition: all four numeric
// coordinates within num_tol and identical marked double cosets.
bool same_region(const Barcode& a, const Barcode& b, double num_tol = 0.0, double tie_tol = 0.0);

// Births i.i.d. uniform on [0,1), deaths birth + uniform (0,1]. strict mode
// resamples until births and deaths are pairwise distinct.
Barcode random_barcode(std::size_t n, std::mt19937_64& rng, bool strict = false);

} // namespace strata
