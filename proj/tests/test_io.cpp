#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "fig8/errors.hpp"
#include "fig8/fixtures.hpp"
#include "fig8/io.hpp"
#include "fig8/riley.hpp"
#include "fig8/surgery.hpp"
#include "fig8/torsion_formulas.hpp"

using namespace fig8;
using fixtures::Rng;

namespace {

std::size_t count_fields(const std::string& line) { return static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1; }

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) out.push_back(line);
    return out;
}

} // namespace

TEST_CASE("parse_complex") {
    CHECK(io::parse_complex("1,0") == Cx(1.0, 0.0));
    CHECK(io::parse_complex("-2.5,3") == Cx(-2.5, 3.0));
    CHECK(io::parse_complex("2") == Cx(2.0, 0.0));
    CHECK(io::parse_complex(" 0.5 , -1e-3 ") == Cx(0.5, -1e-3));
    CHECK_THROWS_AS(io::parse_complex(""), ParseError);
    CHECK_THROWS_AS(io::parse_complex("abc"), ParseError);
    CHECK_THROWS_AS(io::parse_complex("1,2,3"), ParseError);
    CHECK_THROWS_AS(io::parse_complex("1,"), ParseError);
    CHECK_THROWS_AS(io::parse_complex("1x"), ParseError);
}

TEST_CASE("format_real reads back exactly") {
    Rng rng(71);
    for (int n = 0; n < 1000; ++n) {
        const double v = fixtures::gaussian(rng).real() * std::pow(10.0, static_cast<int>(rng() % 20) - 10);
        CHECK(std::strtod(io::format_real(v).c_str(), nullptr) == v);
    }
    CHECK(io::format_real(0.5) == "0.5");
    CHECK(io::format_real(-0.0) == "0");
}

TEST_CASE("format_complex") {
    CHECK(io::format_complex(Cx(1.5, -0.25)) == "1.5-0.25i");
    CHECK(io::format_complex(Cx(-2.0, 0.0)) == "-2+0i");
    CHECK(io::format_complex(Cx(0.0, -0.0)) == "0+0i");
}

TEST_CASE("RileyPoint JSON") {
    const RileyPoint p = solve_t(Cx(0.7, 0.3)).minus;
    const io::Json j = io::to_json(p);
    CHECK(j.at("branch") == "-");
    CHECK(j.at("s").at("re").get<double>() == 0.7);
    CHECK(j.at("t").contains("im"));
    CHECK(j.at("residual").get<double>() == p.residual);

    const RileyPoint q = io::riley_point_from_json(io::Json::parse(j.dump()));
    CHECK(q.s == p.s);
    CHECK(q.t == p.t);
    CHECK(q.branch == p.branch);
    CHECK(q.residual == p.residual);

    CHECK_THROWS_AS(io::riley_point_from_json(io::Json{{"s", 1}}), ParseError);
    io::Json bad = j;
    bad["branch"] = "?";
    CHECK_THROWS_AS(io::riley_point_from_json(bad), ParseError);
}

TEST_CASE("group ring JSON") {
    const GroupRingElement e = fox_derivative(GroupWord::parse("xYXy"), Generator::x);
    const io::Json j = io::to_json(e);
    REQUIRE(j.is_array());
    CHECK(j.size() == 2);
    for (const auto& term : j) {
        CHECK(term.contains("word"));
        CHECK(term.at("coeff").is_number_integer());
    }
    CHECK(io::group_ring_from_json(j) == e);

    Rng rng(72);
    for (int n = 0; n < 100; ++n) {
        const GroupRingElement f = fox_derivative(fixtures::random_word(rng, 12), Generator::y);
        CHECK(io::group_ring_from_json(io::Json::parse(io::to_json(f).dump())) == f);
    }
}

TEST_CASE("torsion report serializations") {
    const TorsionReport r = full_report(solve_t(2.0).plus);
    const io::Json j = io::to_json(r);
    for (const char* key : {"point", "u", "trace_longitude", "tau_exterior_closed", "tau_exterior_oracle",
                            "tau_solid_closed", "tau_solid_trace", "tau_surgered", "tau_manifold", "consistency_flags"})
        CHECK(j.contains(key));
    CHECK(j.at("tau_manifold").at("status") == "ok");
    CHECK(std::abs(io::complex_from_json(j.at("tau_manifold").at("value")) - 0.384) < 1e-10);

    const std::string header = io::torsion_csv_header();
    const std::string row = io::torsion_csv_row(r);
    CHECK(count_fields(header) == count_fields(row));
}

TEST_CASE("surgery CSV") {
    const SurgeryResult r = surgery_table(make_slope(0, 1));
    std::ostringstream os;
    io::write_surgery_csv(os, r);
    const auto lines = lines_of(os.str());
    REQUIRE(lines.size() == r.solutions.size() + 1);
    CHECK(lines[0] == io::kSurgeryCsvHeader);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        CHECK(count_fields(lines[i]) == count_fields(lines[0]));
        CHECK(lines[i].find("degenerate") != std::string::npos);
        CHECK(lines[i].find(",,") != std::string::npos);  // empty tau cells
    }

    const io::Json j = io::to_json(r);
    REQUIRE(j.is_array());
    CHECK(j.size() == r.solutions.size());
}
