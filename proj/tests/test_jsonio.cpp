// qes: band-edge spectra of quasi-exactly solvable elliptic potentials.
// SPDX-License-Identifier: MIT
//
// Result serialization. The writer must be deterministic (sorted keys,
// fixed float formatting) because output files are regression-diffed.
// Well-formedness is checked by re-parsing every rendered document with
// an unrelated JSON implementation.

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include "qes/jsonio.hpp"

using qes::JsonValue;
using qes::Modulus;
using qes::Rational;

namespace {

Rational rat(long long p, long long q = 1) { return Rational(p, q); }

} // namespace

TEST_CASE("json writer renders sorted keys and exact reals", "[jsonio]") {
    JsonValue doc = JsonValue::object();
    doc.fields["zeta"] = JsonValue::of(1.0 / 3.0);
    doc.fields["alpha"] = JsonValue::of(std::string("a\"b\\c\n"));
    doc.fields["mid"] = JsonValue::array();
    doc.fields["mid"].items.push_back(JsonValue::of(12LL));
    doc.fields["mid"].items.push_back(JsonValue::of(true));
    doc.fields["mid"].items.push_back(JsonValue());

    const std::string text = qes::render_json(doc);
    REQUIRE(text.find("\"alpha\"") < text.find("\"mid\""));
    REQUIRE(text.find("\"mid\"") < text.find("\"zeta\""));
    REQUIRE(text.find("0.33333333333333331") != std::string::npos);
    REQUIRE(text.find("\\n") != std::string::npos);

    const auto parsed = nlohmann::json::parse(text);
    REQUIRE(parsed["alpha"].get<std::string>() == "a\"b\\c\n");
    REQUIRE(parsed["mid"][0].get<long long>() == 12);
    REQUIRE(parsed["mid"][1].get<bool>() == true);
    REQUIRE(parsed["mid"][2].is_null());
    REQUIRE(parsed["zeta"].get<double>() == 1.0 / 3.0);

    REQUIRE_THROWS_AS(qes::render_json(JsonValue::of(std::nan(""))), qes::Error);
}

TEST_CASE("solution documents are byte identical across runs", "[jsonio]") {
    const auto spec = qes::associated_lame_spec(rat(3), rat(1), Modulus(rat(2, 3)));
    const auto once = qes::solve_spec(spec);
    const auto again = qes::solve_spec(spec);
    const std::string a = qes::render_json(qes::solution_document(spec, once, nullptr));
    const std::string b = qes::render_json(qes::solution_document(spec, again, nullptr));
    REQUIRE(a == b);
    REQUIRE(!a.empty());
}

TEST_CASE("solution document carries the advertised schema", "[jsonio]") {
    const auto spec = qes::associated_lame_spec(rat(3), rat(3), Modulus(rat(2, 3)));
    const auto spectrum = qes::solve_spec(spec);

    qes::VerificationReport report;
    report.residuals = {1e-9, 2e-9};
    report.oracle_levels = {12.0, 56.0 / 3.0};
    report.max_mismatch = 5e-10;

    const auto parsed = nlohmann::json::parse(
        qes::render_json(qes::solution_document(spec, spectrum, &report, {"note"})));

    REQUIRE(parsed["spec"]["family"] == "associated-lame");
    REQUIRE(parsed["spec"]["m"] == "3");
    REQUIRE(parsed["spec"]["l"] == "3");
    REQUIRE(parsed["spec"]["k2"] == "2/3");

    // labels (3, 3) sit on a single line of spin six
    REQUIRE(parsed["cases"].size() == 1);
    for (const auto& c : parsed["cases"]) {
        REQUIRE(c.contains("case_id"));
        REQUIRE(c.contains("n"));
        const int n = c["n"].get<int>();
        REQUIRE(static_cast<int>(c["lambda"].size()) == n + 1);
        REQUIRE(static_cast<int>(c["rho"].size()) == n + 2);
        REQUIRE(static_cast<int>(c["critical_poly"].size()) == n + 2);
        REQUIRE(c["critical_poly"].back() == "1");
    }

    // the exact levels 12, 56/3, 92/3 of this spectrum keep their rational
    // form in the document
    bool saw_12 = false, saw_56_3 = false, saw_92_3 = false;
    for (const auto& e : parsed["energies"]) {
        REQUIRE(e.contains("value"));
        REQUIRE(e.contains("degeneracy"));
        REQUIRE(e.contains("sources"));
        if (e.contains("exact")) {
            if (e["exact"] == "12") saw_12 = true;
            if (e["exact"] == "56/3") saw_56_3 = true;
            if (e["exact"] == "92/3") saw_92_3 = true;
        }
    }
    REQUIRE(saw_12);
    REQUIRE(saw_56_3);
    REQUIRE(saw_92_3);

    REQUIRE(parsed["verification"]["residuals"].size() == 2);
    REQUIRE(parsed["verification"]["oracle_levels"].size() == 2);
    REQUIRE(parsed["verification"]["max_mismatch"].get<double>() == 5e-10);
    REQUIRE(parsed["warnings"].size() == 1);
    REQUIRE(parsed["warnings"][0] == "note");
}

TEST_CASE("floating modulus is emitted as a number", "[jsonio]") {
    const auto spec = qes::tan_spec(1, Modulus(0.3));
    const auto spectrum = qes::solve_spec(spec);
    const auto parsed =
        nlohmann::json::parse(qes::render_json(qes::solution_document(spec, spectrum, nullptr)));
    REQUIRE(parsed["spec"]["family"] == "tan");
    REQUIRE(parsed["spec"]["n"] == 1);
    REQUIRE(parsed["spec"]["k2"].is_number());
    REQUIRE(parsed["spec"]["k2"].get<double>() == 0.3);
}

TEST_CASE("csv sampler emits one labeled column per state", "[jsonio]") {
    const Modulus mod(rat(1, 2));
    const auto spec = qes::associated_lame_spec(rat(1), rat(0), mod);
    const std::vector<std::function<double(double)>> states = {
        [&mod](double x) { return qes::jacobi(x, mod).dn; },
        [&mod](double x) { return qes::jacobi(x, mod).cn; }};
    const std::string csv = qes::sample_csv(spec, states, {0.5, 1.0}, 0.0, 2.0 * mod.K(), 5);

    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        const auto nl = csv.find('\n', pos);
        lines.push_back(csv.substr(pos, nl - pos));
        pos = nl + 1;
    }
    REQUIRE(lines.size() == 6);
    REQUIRE(lines[0] == "x,V(x),E=0.5,E=1");
    for (std::size_t i = 1; i < lines.size(); ++i)
        REQUIRE(std::count(lines[i].begin(), lines[i].end(), ',') == 3);

    REQUIRE_THROWS_AS(qes::sample_csv(spec, states, {0.5}, 0.0, 1.0, 5), qes::Error);
}
