#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace strata {

// Thrown when an enumeration would exceed its configured cap. Callers that
// only need the compact representation (canonical representative, generator
// sets) never hit this; explicit listings do.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

enum class OutputFormat { json, csv };

struct Config {
    // Tie detection: values x, y are merged when |x - y| <= tol (single
    // linkage on the sorted values). 0 means exact float equality.
    double tol = 0.0;

    // Largest parabolic subgroup that may be listed element by element (8!).
    std::uint64_t parabolic_cap = 40320;

    // Largest |P_left| * |P_right| for which a double coset may be enumerated.
    std::uint64_t double_coset_cap = 1'000'000;

    // Coxeter-complex enumeration is only offered for 2 <= n <= complex_max_n.
    std::uint64_t complex_max_n = 6;

    // Optimal-matching ties are resolved to the lexicographically smallest
    // permutation up to this many bars; above it the (still deterministic)
    // solver output is returned as-is.
    std::uint64_t lex_matching_max_n = 64;

    // Seed for random barcode generation.
    std::uint64_t seed = 0;

    // Barcode output format for generation; analysis reports are always
    // JSON and distance matrices always CSV.
    OutputFormat format = OutputFormat::csv;
};

// Reads the BARCODE_STRATA_CAP environment variable if set and applies it to
// both enumeration caps. Returns the (possibly updated) config.
Config apply_env_overrides(Config cfg);

} // namespace strata
