#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "strata/barcode.hpp"
#include "strata/config.hpp"
#include "strata/coxeter_complex.hpp"
#include "strata/stratification.hpp"

namespace strata {

enum class BarcodeFormat { csv, json };

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// CSV: one "birth,death" pair per line, '#' starts a comment, blank lines
// ignored. JSON: array of [birth, death] pairs.
Barcode parse_barcode(std::istream& in, BarcodeFormat format);
Barcode parse_barcode(const std::string& text, BarcodeFormat format);
// Dispatches on the file extension (.json is JSON, everything else CSV).
Barcode read_barcode_file(const std::string& path);

std::string to_csv(const Barcode& b);

nlohmann::json to_json(const Permutation& p);       // 1-based one-line array
nlohmann::json to_json(const ParabolicSubgroup& p); // generator index array
nlohmann::json to_json(const Coset& c);             // {rep, generators}
nlohmann::json to_json(const MarkedDoubleCoset& d); // {left_generators, rep, right_generators}
nlohmann::json to_json(const Barcode& b);           // [[birth, death], ...]
nlohmann::json to_json(const ConeCoordinates& c);
nlohmann::json to_json(const BarcodeCoordinates& c);

// The analysis report emitted by the `analyze` subcommand:
// {n, mean_birth, mean_death, dev_birth, dev_death, tau_b, tau_d, sigma?,
//  P_b, P_d, double_coset_rep, double_coset_elements?, strict}.
// sigma appears only for strict barcodes; the element listing only when
// requested (throws CapExceeded past cfg.double_coset_cap).
nlohmann::json analyze_report(const Barcode& b, const Config& cfg, bool enumerate_dc = false);

// Face poset export for the `complex` subcommand: faces as
// {rep, generators, dim} plus all strict order relations as index pairs.
nlohmann::json complex_report(const FacePoset& poset);

} // namespace strata
