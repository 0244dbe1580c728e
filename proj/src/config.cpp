#include "strata/config.hpp"

#include <cstdlib>

namespace strata {

Config apply_env_overrides(Config cfg) {
    if (const char* raw = std::getenv("BARCODE_STRATA_CAP")) {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(raw, &end, 10);
        if (end == raw || *end != '\0' || value == 0)
            throw std::invalid_argument("BARCODE_STRATA_CAP must be a positive integer");
        cfg.parabolic_cap = value;
        cfg.double_coset_cap = value;
    }
    return cfg;
}

} // namespace strata
