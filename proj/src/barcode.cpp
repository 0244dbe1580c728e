#include "strata/barcode.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace strata {

namespace {

Permutation sorting_permutation(const std::vector<double>& values) {
    std::vector<int> idx(values.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        return values[static_cast<std::size_t>(a)] < values[static_cast<std::size_t>(b)];
    });
    return unchecked_permutation(std::move(idx));
}

std::vector<int> tie_generators(const std::vector<double>& values, double tol) {
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> gens;
    for (std::size_t k = 0; k + 1 < sorted.size(); ++k)
        if (sorted[k + 1] - sorted[k] <= tol) gens.push_back(static_cast<int>(k + 1));
    return gens;
}

} // namespace

Barcode::Barcode(std::vector<Bar> bars) : bars_(std::move(bars)) {
    if (bars_.empty()) throw std::invalid_argument("barcode must contain at least one bar");
    for (std::size_t i = 0; i < bars_.size(); ++i) {
        const auto& bar = bars_[i];
        if (!std::isfinite(bar.birth) || !std::isfinite(bar.death))
            throw std::invalid_argument("bar " + std::to_string(i + 1) + ": values must be finite");
        if (!(bar.birth < bar.death))
            throw std::invalid_argument("bar " + std::to_string(i + 1) +
                                        ": birth must be strictly smaller than death");
    }
}

std::vector<double> Barcode::births() const {
    std::vector<double> out(bars_.size());
    for (std::size_t i = 0; i < bars_.size(); ++i) out[i] = bars_[i].birth;
    return out;
}

std::vector<double> Barcode::deaths() const {
    std::vector<double> out(bars_.size());
    for (std::size_t i = 0; i < bars_.size(); ++i) out[i] = bars_[i].death;
    return out;
}

bool same_multiset(const Barcode& a, const Barcode& b) {
    if (a.size() != b.size()) return false;
    auto key = [](const Barcode& bc) {
        std::vector<std::pair<double, double>> v;
        v.reserve(bc.size());
        for (const auto& bar : bc.bars()) v.emplace_back(bar.birth, bar.death);
        std::sort(v.begin(), v.end());
        return v;
    };
    return key(a) == key(b);
}

Permutation birth_permutation(const Barcode& b) {
    return sorting_permutation(b.births());
}

Permutation death_permutation(const Barcode& b) {
    return sorting_permutation(b.deaths());
}

bool is_strict(const Barcode& b, double tol) {
    return tie_generators(b.births(), tol).empty() && tie_generators(b.deaths(), tol).empty();
}

Permutation barcode_permutation(const Barcode& b, double tol) {
    if (!is_strict(b, tol))
        throw std::domain_error(
            "sigma is undefined for non-strict barcodes; use double_coset instead");
    return birth_permutation(b).inverse() * death_permutation(b);
}

std::pair<ParabolicSubgroup, ParabolicSubgroup> parabolics(const Barcode& b, double tol) {
    const std::size_t n = b.size();
    return {ParabolicSubgroup(n, tie_generators(b.births(), tol)),
            ParabolicSubgroup(n, tie_generators(b.deaths(), tol))};
}

MarkedDoubleCoset double_coset(const Barcode& b, double tol) {
    auto [pb, pd] = parabolics(b, tol);
    const Permutation sigma = birth_permutation(b).inverse() * death_permutation(b);
    return MarkedDoubleCoset(std::move(pb), sigma, std::move(pd));
}

BarcodeCoordinates coxeter_coordinates(const Barcode& b, double tol) {
    const std::size_t n = b.size();
    auto [mean_b, dev_b] = detail::mean_radius(std::span<const double>(b.births()));
    auto [mean_d, dev_d] = detail::mean_radius(std::span<const double>(b.deaths()));

    BarcodeCoordinates out{n,
                           RegionDescriptor{mean_b, mean_d, dev_b, dev_d, double_coset(b, tol)},
                           std::nullopt, std::nullopt};

    // Canonical orbit representative: act by the permutation that sorts bars
    // by (birth, death, index) before taking sphere directions.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        if (b[i].birth != b[j].birth) return b[i].birth < b[j].birth;
        return b[i].death < b[j].death;
    });
    std::vector<double> births(n), deaths(n);
    for (std::size_t k = 0; k < n; ++k) {
        births[k] = b[order[k]].birth;
        deaths[k] = b[order[k]].death;
    }
    if (dev_b > 0.0) out.birth_direction = direction(births);
    if (dev_d > 0.0) out.death_direction = direction(deaths);
    return out;
}

Barcode reconstruct_barcode(const BarcodeCoordinates& c) {
    if (c.n < 1) throw std::invalid_argument("reconstruct_barcode: n must be >= 1");
    auto expand = [&](double mean, double dev,
                      const std::optional<std::vector<double>>& dir) {
        ConeCoordinates cc;
        cc.n = c.n;
        cc.mean = mean;
        cc.radius = dev;
        cc.direction = dir;
        return reconstruct(cc);
    };
    const auto births = expand(c.region.mean_birth, c.region.dev_birth, c.birth_direction);
    const auto deaths = expand(c.region.mean_death, c.region.dev_death, c.death_direction);
    std::vector<Bar> bars(c.n);
    for (std::size_t i = 0; i < c.n; ++i) bars[i] = Bar{births[i], deaths[i]};
    return Barcode(std::move(bars));
}

RegionDescriptor region(const Barcode& b, double tol) {
    return coxeter_coordinates(b, tol).region;
}

bool same_region(const Barcode& a, const Barcode& b, double num_tol, double tie_tol) {
    if (a.size() != b.size()) return false;
    const auto ra = region(a, tie_tol);
    const auto rb = region(b, tie_tol);
    return std::abs(ra.mean_birth - rb.mean_birth) <= num_tol &&
           std::abs(ra.mean_death - rb.mean_death) <= num_tol &&
           std::abs(ra.dev_birth - rb.dev_birth) <= num_tol &&
           std::abs(ra.dev_death - rb.dev_death) <= num_tol && ra.stratum == rb.stratum;
}

Barcode random_barcode(std::size_t n, std::mt19937_64& rng, bool strict) {
    if (n < 1) throw std::invalid_argument("random_barcode: n must be >= 1");
    // 53-bit mantissa draw; portable and deterministic for a fixed seed.
    auto u01 = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    while (true) {
        std::vector<Bar> bars(n);
        for (auto& bar : bars) {
            bar.birth = u01();
            bar.death = bar.birth + (1.0 - u01()); // offset in (0, 1]
        }
        Barcode b(std::move(bars));
        if (!strict || is_strict(b)) return b;
    }
}

} // namespace strata
