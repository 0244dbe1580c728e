#include "strata/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace strata {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

double parse_number(const std::string& field, std::size_t line) {
    const std::string t = trim(field);
    if (t.empty()) throw ParseError("empty field", line);
    double value = 0.0;
    const char* begin = t.data();
    const char* end = t.data() + t.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError("cannot parse number '" + t + "'", line);
    return value;
}

Barcode parse_csv(std::istream& in) {
    std::vector<Bar> bars;
    std::vector<std::size_t> lines;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
            throw ParseError("expected exactly one comma in 'birth,death'", lineno);
        bars.push_back(Bar{parse_number(line.substr(0, comma), lineno),
                           parse_number(line.substr(comma + 1), lineno)});
        lines.push_back(lineno);
    }
    if (bars.empty()) throw ParseError("no bars in input", 0);
    for (std::size_t i = 0; i < bars.size(); ++i)
        if (!(bars[i].birth < bars[i].death))
            throw ParseError("bar " + std::to_string(i + 1) + ": birth >= death", lines[i]);
    return Barcode(std::move(bars));
}

Barcode parse_json_barcode(std::istream& in) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), 0);
    }
    if (!j.is_array()) throw ParseError("expected a JSON array of [birth, death] pairs", 0);
    std::vector<Bar> bars;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& item = j[i];
        if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number())
            throw ParseError("bar " + std::to_string(i + 1) + ": expected [birth, death]", 0);
        bars.push_back(Bar{item[0].get<double>(), item[1].get<double>()});
    }
    if (bars.empty()) throw ParseError("no bars in input", 0);
    for (std::size_t i = 0; i < bars.size(); ++i)
        if (!(bars[i].birth < bars[i].death))
            throw ParseError("bar " + std::to_string(i + 1) + ": birth >= death", 0);
    return Barcode(std::move(bars));
}

} // namespace

Barcode parse_barcode(std::istream& in, BarcodeFormat format) {
    return format == BarcodeFormat::csv ? parse_csv(in) : parse_json_barcode(in);
}

Barcode parse_barcode(const std::string& text, BarcodeFormat format) {
    std::istringstream in(text);
    return parse_barcode(in, format);
}

Barcode read_barcode_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    const bool json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
    return parse_barcode(in, json ? BarcodeFormat::json : BarcodeFormat::csv);
}

std::string to_csv(const Barcode& b) {
    std::string out;
    char buf[64];
    for (const auto& bar : b.bars()) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", bar.birth, bar.death);
        out += buf;
    }
    return out;
}

nlohmann::json to_json(const Permutation& p) {
    return nlohmann::json(p.one_line());
}

nlohmann::json to_json(const ParabolicSubgroup& p) {
    return nlohmann::json(p.generators());
}

nlohmann::json to_json(const Coset& c) {
    return {{"rep", to_json(c.rep())}, {"generators", to_json(c.subgroup())}};
}

nlohmann::json to_json(const MarkedDoubleCoset& d) {
    return {{"left_generators", to_json(d.left())},
            {"rep", to_json(d.rep())},
            {"right_generators", to_json(d.right())}};
}

nlohmann::json to_json(const Barcode& b) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& bar : b.bars()) out.push_back({bar.birth, bar.death});
    return out;
}

nlohmann::json to_json(const ConeCoordinates& c) {
    nlohmann::json out{{"n", c.n}, {"mean", c.mean}, {"radius", c.radius}};
    if (c.direction) out["direction"] = *c.direction;
    if (c.face) out["face"] = to_json(*c.face);
    return out;
}

nlohmann::json to_json(const BarcodeCoordinates& c) {
    nlohmann::json out{{"n", c.n},
                       {"mean_birth", c.region.mean_birth},
                       {"mean_death", c.region.mean_death},
                       {"dev_birth", c.region.dev_birth},
                       {"dev_death", c.region.dev_death},
                       {"stratum", to_json(c.region.stratum)}};
    if (c.birth_direction) out["birth_direction"] = *c.birth_direction;
    if (c.death_direction) out["death_direction"] = *c.death_direction;
    return out;
}

nlohmann::json analyze_report(const Barcode& b, const Config& cfg, bool enumerate_dc) {
    const auto coords = coxeter_coordinates(b, cfg.tol);
    const auto& stratum = coords.region.stratum;
    const bool strict = is_strict(b, cfg.tol);

    nlohmann::json out{{"n", b.size()},
                       {"mean_birth", coords.region.mean_birth},
                       {"mean_death", coords.region.mean_death},
                       {"dev_birth", coords.region.dev_birth},
                       {"dev_death", coords.region.dev_death},
                       {"tau_b", to_json(birth_permutation(b))},
                       {"tau_d", to_json(death_permutation(b))},
                       {"P_b", to_json(stratum.left())},
                       {"P_d", to_json(stratum.right())},
                       {"double_coset_rep", to_json(stratum.rep())},
                       {"strict", strict}};
    if (strict) out["sigma"] = to_json(barcode_permutation(b, cfg.tol));
    if (enumerate_dc) {
        nlohmann::json elems = nlohmann::json::array();
        for (const auto& p : stratum.elements(cfg.double_coset_cap)) elems.push_back(to_json(p));
        out["double_coset_elements"] = std::move(elems);
    }
    return out;
}

nlohmann::json complex_report(const FacePoset& poset) {
    nlohmann::json faces = nlohmann::json::array();
    for (const auto& f : poset.faces)
        faces.push_back({{"rep", to_json(f.coset.rep())},
                         {"generators", to_json(f.coset.subgroup())},
                         {"dim", f.dim}});
    nlohmann::json relations = nlohmann::json::array();
    for (std::size_t i = 0; i < poset.faces.size(); ++i)
        for (std::size_t j = 0; j < poset.faces.size(); ++j)
            if (i != j && poset.leq(i, j)) relations.push_back({i, j});
    return {{"n", poset.n}, {"faces", std::move(faces)}, {"relations", std::move(relations)}};
}

} // namespace strata
