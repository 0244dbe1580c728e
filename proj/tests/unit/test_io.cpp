#include <doctest.h>

#include <sstream>

#include "strata/io.hpp"

using namespace strata;

TEST_CASE("csv parsing") {
    const std::string text = "# worked example\n"
                             "1,10\n"
                             "\n"
                             "2,5   # inline comment\n"
                             "4,5\n"
                             "4,7\n";
    const auto b = parse_barcode(text, BarcodeFormat::csv);
    REQUIRE(b.size() == 4);
    CHECK(b[0] == Bar{1, 10});
    CHECK(b[3] == Bar{4, 7});
}

TEST_CASE("csv errors carry line numbers") {
    try {
        parse_barcode(std::string("0,1\n3,2\n"), BarcodeFormat::csv);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("birth >= death") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_barcode(std::string("1;2\n"), BarcodeFormat::csv), ParseError);
    CHECK_THROWS_AS(parse_barcode(std::string("1,2,3\n"), BarcodeFormat::csv), ParseError);
    CHECK_THROWS_AS(parse_barcode(std::string("a,2\n"), BarcodeFormat::csv), ParseError);
    CHECK_THROWS_AS(parse_barcode(std::string("# only comments\n"), BarcodeFormat::csv),
                    ParseError);
    CHECK_THROWS_AS(parse_barcode(std::string(""), BarcodeFormat::csv), ParseError);
}

TEST_CASE("json parsing") {
    const auto b = parse_barcode(std::string("[[0,1]]"), BarcodeFormat::json);
    CHECK(b.size() == 1);
    CHECK(b[0] == Bar{0, 1});

    CHECK_THROWS_AS(parse_barcode(std::string("{}"), BarcodeFormat::json), ParseError);
    CHECK_THROWS_AS(parse_barcode(std::string("[[0,1,2]]"), BarcodeFormat::json), ParseError);
    CHECK_THROWS_AS(parse_barcode(std::string("[[1,0]]"), BarcodeFormat::json), ParseError);
    CHECK_THROWS_AS(parse_barcode(std::string("[]"), BarcodeFormat::json), ParseError);
    CHECK_THROWS_AS(parse_barcode(std::string("[[0,1]"), BarcodeFormat::json), ParseError);
}

TEST_CASE("csv round trip") {
    const Barcode b({{0.125, 1.75}, {-3.5, 0.0625}});
    const auto back = parse_barcode(to_csv(b), BarcodeFormat::csv);
    CHECK(back == b);
}

TEST_CASE("analysis report for the worked example") {
    const auto b = parse_barcode(std::string("1,10\n2,5\n4,5\n4,7\n"), BarcodeFormat::csv);
    Config cfg;
    const auto report = analyze_report(b, cfg, true);

    CHECK(report["n"] == 4);
    CHECK(report["strict"] == false);
    CHECK(report["tau_b"] == nlohmann::json({1, 2, 3, 4}));
    CHECK(report["tau_d"] == nlohmann::json({2, 3, 4, 1}));
    CHECK(report["P_b"] == nlohmann::json({3}));
    CHECK(report["P_d"] == nlohmann::json({1}));
    CHECK(report["double_coset_rep"] == nlohmann::json({2, 3, 4, 1}));
    CHECK_FALSE(report.contains("sigma"));
    CHECK(report["double_coset_elements"] ==
          nlohmann::json({{2, 3, 4, 1}, {2, 4, 3, 1}, {3, 2, 4, 1}, {4, 2, 3, 1}}));
    CHECK(report["mean_birth"] == doctest::Approx(2.75));
    CHECK(report["mean_death"] == doctest::Approx(6.75));

    // enumeration refused past the cap, compact data still available
    Config tiny = cfg;
    tiny.double_coset_cap = 1;
    CHECK_THROWS_AS(analyze_report(b, tiny, true), CapExceeded);
    CHECK(analyze_report(b, tiny, false)["double_coset_rep"] == nlohmann::json({2, 3, 4, 1}));
}

TEST_CASE("analysis report for a strict barcode") {
    const auto b = parse_barcode(std::string("3,4\n1,7\n0,5\n2,6\n"), BarcodeFormat::csv);
    const auto report = analyze_report(b, Config{});
    CHECK(report["strict"] == true);
    CHECK(report["sigma"] == nlohmann::json({4, 1, 3, 2}));
    CHECK(report["tau_b"] == nlohmann::json({3, 2, 4, 1}));
    CHECK(report["tau_d"] == nlohmann::json({1, 3, 4, 2}));
    CHECK(report["P_b"] == nlohmann::json(nlohmann::json::array()));
    CHECK_FALSE(report.contains("double_coset_elements"));
}

TEST_CASE("single bar report") {
    const auto report = analyze_report(Barcode({{2, 5}}), Config{});
    CHECK(report["n"] == 1);
    CHECK(report["strict"] == true);
    CHECK(report["sigma"] == nlohmann::json({1}));
    CHECK(report["dev_birth"] == 0.0);
}

TEST_CASE("complex report shape") {
    const auto report = complex_report(enumerate_complex(3));
    CHECK(report["faces"].size() == 13);
    std::size_t chambers = 0;
    for (const auto& f : report["faces"])
        if (f["dim"] == 1) ++chambers;
    CHECK(chambers == 6);
    CHECK(report["relations"].size() > 0);
    for (const auto& rel : report["relations"]) REQUIRE(rel.size() == 2);
}

TEST_CASE("serialization of group data") {
    CHECK(to_json(Permutation::from_one_line({4, 1, 3, 2})) == nlohmann::json({4, 1, 3, 2}));
    CHECK(to_json(ParabolicSubgroup(4, {3, 1})) == nlohmann::json({1, 3}));
    const auto dc = double_coset(Barcode({{1, 10}, {2, 5}, {4, 5}, {4, 7}}));
    const auto j = to_json(dc);
    CHECK(j["left_generators"] == nlohmann::json({3}));
    CHECK(j["rep"] == nlohmann::json({2, 3, 4, 1}));
    CHECK(j["right_generators"] == nlohmann::json({1}));
}

TEST_CASE("serialization of coordinates") {
    const auto cone = to_json(decompose(std::vector<double>{0.0, 2.0}));
    CHECK(cone["n"] == 2);
    CHECK(cone["mean"] == 1.0);
    CHECK(cone.contains("direction"));
    CHECK(cone["face"]["rep"] == nlohmann::json({1, 2}));

    const auto flat = to_json(decompose(std::vector<double>{3.0, 3.0}));
    CHECK(flat["radius"] == 0.0);
    CHECK_FALSE(flat.contains("direction"));
    CHECK_FALSE(flat.contains("face"));

    const auto bc = to_json(coxeter_coordinates(Barcode({{1, 10}, {2, 5}, {4, 5}, {4, 7}})));
    CHECK(bc["mean_birth"] == 2.75);
    CHECK(bc["stratum"]["rep"] == nlohmann::json({2, 3, 4, 1}));
    CHECK(bc.contains("birth_direction"));
}
