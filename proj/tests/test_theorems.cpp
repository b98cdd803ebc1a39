#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "tripotent/classes.hpp"
#include "tripotent/errors.hpp"
#include "tripotent/generate.hpp"
#include "tripotent/theorems.hpp"

using namespace tripotent;

namespace {

const ToleranceConfig kCfg;

ComplexMatrix diag3() {
    return ComplexMatrix::diagonal(std::vector<double>{1.0, -1.0, 0.0});
}

ComplexMatrix projector_2x2() {
    return ComplexMatrix(2, 2, {Complex(1, 0), Complex(1, 0),
                                Complex(0, 0), Complex(0, 0)});
}

ComplexMatrix star4() {
    return reference_examples().star_average;
}

ComplexMatrix gen3op(std::size_t n, std::uint64_t seed) {
    GenSpec spec;
    spec.n = n;
    spec.label = "3OP";
    spec.seed = seed;
    return generate(spec);
}

void expect(const TheoremReport& rep, bool condition, bool three_op) {
    INFO(rep.theorem_id);
    CHECK(rep.condition_holds == condition);
    CHECK(rep.is_three_op == three_op);
    CHECK(rep.verdict_consistent);
}

} // namespace

TEST_CASE("canonical form checker") {
    expect(check_canonical_form(diag3(), kCfg), true, true);
    expect(check_canonical_form(projector_2x2(), kCfg), false, false);
    expect(check_canonical_form(
               ComplexMatrix::diagonal(std::vector<double>{1.0, 2.0}), kCfg),
           false, false);
    CHECK_THROWS_AS(check_canonical_form(ComplexMatrix::zero(2, 3), kCfg),
                    DimensionError);
}

TEST_CASE("star dagger checker") {
    expect(check_star_dagger(diag3(), kCfg), true, true);
    expect(check_star_dagger(
               ComplexMatrix::diagonal(std::vector<double>{2.0}), kCfg),
           false, false);
    expect(check_star_dagger(star4(), kCfg), false, false);
}

TEST_CASE("structural split checker") {
    const TheoremReport rep = check_structural(diag3(), kCfg);
    expect(rep, true, true);
    CHECK(rep.residuals.at("ef_zero") < 1e-14);
    CHECK(rep.residuals.at("fe_zero") < 1e-14);
    expect(check_structural(projector_2x2(), kCfg), false, false);
}

TEST_CASE("svd factors checker") {
    expect(check_svd_factors(diag3(), kCfg), true, true);
    expect(check_svd_factors(gen3op(5, 11), kCfg), true, true);
    expect(check_svd_factors(
               ComplexMatrix::diagonal(std::vector<double>{2.0, 0.5}), kCfg),
           false, false);
}

TEST_CASE("average checker and the spectral exclusion") {
    for (const char* variant : {"toA", "toDagger", "toStar"}) {
        const TheoremReport rep = check_average(diag3(), variant, kCfg);
        expect(rep, true, true);
        if (std::string(variant) == "toStar") {
            REQUIRE(rep.exclusion_flag.has_value());
            CHECK(*rep.exclusion_flag);
        } else {
            CHECK(!rep.exclusion_flag.has_value());
        }
    }

    const TheoremReport star = check_average(star4(), "toStar", kCfg);
    CHECK(star.condition_holds);
    CHECK(!star.is_three_op);
    REQUIRE(star.exclusion_flag.has_value());
    CHECK(!*star.exclusion_flag);
    CHECK(star.verdict_consistent);

    const TheoremReport to_a = check_average(star4(), "toA", kCfg);
    expect(to_a, false, false);

    CHECK_THROWS_AS(check_average(diag3(), "toX", kCfg), InvalidInputError);
}

TEST_CASE("linear identities") {
    for (char variant = 'b'; variant <= 'h'; ++variant) {
        expect(check_linear(diag3(), variant, kCfg), true, true);
        expect(check_linear(gen3op(4, 21 + variant), variant, kCfg), true, true);
        expect(check_linear(star4(), variant, kCfg), false, false);
    }
    CHECK_THROWS_AS(check_linear(diag3(), 'a', kCfg), InvalidInputError);
    CHECK_THROWS_AS(check_linear(diag3(), 'z', kCfg), InvalidInputError);
}

TEST_CASE("power identities") {
    expect(check_power(diag3(), 'b', PowerParams{2, 0}, kCfg), true, true);
    expect(check_power(gen3op(4, 33), 'c', PowerParams{3, 1}, kCfg), true, true);
    expect(check_power(ComplexMatrix::diagonal(std::vector<double>{2.0, 0.5}),
                       'b', PowerParams{2, 0}, kCfg),
           false, false);
    CHECK_THROWS_AS(check_power(diag3(), 'b', PowerParams{1, 2}, kCfg),
                    SideConditionError);
    CHECK_THROWS_AS(check_power(diag3(), 'b', PowerParams{2, 2}, kCfg),
                    SideConditionError);
    CHECK_THROWS_AS(check_power(diag3(), 'c', PowerParams{1, -2}, kCfg),
                    SideConditionError);
}

TEST_CASE("one-exponent power identities") {
    expect(check_corollary_power(diag3(), 'b', 2, kCfg), true, true);
    expect(check_corollary_power(gen3op(3, 55), 'd', -2, kCfg), true, true);
    const ComplexMatrix pair_i =
        ComplexMatrix::diagonal(std::vector<Complex>{Complex(0, 1), Complex(0, -1)});
    expect(check_corollary_power(pair_i, 'd', 2, kCfg), false, false);
    CHECK_THROWS_AS(check_corollary_power(diag3(), 'b', 0, kCfg),
                    SideConditionError);
    CHECK_THROWS_AS(check_corollary_power(diag3(), 'b', 1, kCfg),
                    SideConditionError);
    CHECK_THROWS_AS(check_corollary_power(diag3(), 'c', -1, kCfg),
                    SideConditionError);
}

TEST_CASE("gram projector identities") {
    for (char variant : {'b', 'e', 'g'}) {
        expect(check_gram_projector(diag3(), variant, PowerParams{2, 1}, kCfg),
               true, true);
    }
    for (char variant : {'h', 'j', 'l'}) {
        expect(check_gram_projector(gen3op(4, 60 + variant), variant,
                                    PowerParams{3, 1}, kCfg),
               true, true);
    }
    expect(check_gram_projector(star4(), 'b', PowerParams{2, 1}, kCfg), false,
           false);
}

TEST_CASE("rank plus trace identities") {
    for (char variant = 'b'; variant <= 'e'; ++variant) {
        expect(check_rank_trace(diag3(), variant, kCfg), true, true);
        expect(check_rank_trace(star4(), variant, kCfg), false, false);
    }
}

TEST_CASE("trace remark identities") {
    expect(check_trace_remark(diag3(), 'a', 0, kCfg), true, true);
    expect(check_trace_remark(diag3(), 'b', 0, kCfg), true, true);

    const TheoremReport proj = check_trace_remark(projector_2x2(), 'c', 2, kCfg);
    CHECK(proj.condition_holds);
    CHECK(!proj.is_three_op);
    CHECK(proj.verdict_consistent);

    const TheoremReport scalar = check_trace_remark(
        ComplexMatrix::diagonal(std::vector<double>{2.0}), 'c', 2, kCfg);
    CHECK(!scalar.condition_holds);
    CHECK(scalar.verdict_consistent);

    const TheoremReport odd = check_trace_remark(diag3(), 'c', 5, kCfg);
    CHECK(odd.condition_holds);
    CHECK(odd.verdict_consistent);

    CHECK_THROWS_AS(check_trace_remark(diag3(), 'c', 1, kCfg),
                    SideConditionError);
}

TEST_CASE("normal trace identities") {
    const ComplexMatrix pair_i =
        ComplexMatrix::diagonal(std::vector<Complex>{Complex(0, 1), Complex(0, -1)});
    for (char variant = 'b'; variant <= 'e'; ++variant) {
        expect(check_normal_trace(diag3(), variant, kCfg), true, true);
        expect(check_normal_trace(pair_i, variant, kCfg), false, false);
    }
}

TEST_CASE("condition matrix pairs") {
    const ComplexMatrix d21 = ComplexMatrix::diagonal(std::vector<double>{2.0, 1.0});
    expect(check_condition_matrix(diag3(), 'a', 'a', 1, kCfg), true, true);
    expect(check_condition_matrix(diag3(), 'b', 'd', 1, kCfg), true, true);
    expect(check_condition_matrix(diag3(), 'd', 'g', 2, kCfg), true, true);
    expect(check_condition_matrix(gen3op(5, 71), 'e', 'c', 1, kCfg), true, true);
    expect(check_condition_matrix(d21, 'a', 'c', 1, kCfg), false, false);
    expect(check_condition_matrix(star4(), 'f', 'a', 1, kCfg), false, false);
    CHECK_THROWS_AS(check_condition_matrix(diag3(), 'd', 'a', 0, kCfg),
                    SideConditionError);
    CHECK_THROWS_AS(check_condition_matrix(diag3(), 'h', 'a', 1, kCfg),
                    InvalidInputError);
}

TEST_CASE("rank gram pairs") {
    const ComplexMatrix half = ComplexMatrix::diagonal(std::vector<double>{0.5});
    expect(check_rank_gram(diag3(), 'a', 'a', PowerParams{3, 1}, kCfg), true,
           true);
    expect(check_rank_gram(gen3op(4, 88), 'c', 'e', PowerParams{2, 1}, kCfg),
           true, true);
    expect(check_rank_gram(half, 'a', 'a', PowerParams{3, 1}, kCfg), false,
           false);
    CHECK_THROWS_AS(check_rank_gram(diag3(), 'a', 'a', PowerParams{0, 1}, kCfg),
                    SideConditionError);
    CHECK_THROWS_AS(check_rank_gram(diag3(), 'b', 'b', PowerParams{2, 2}, kCfg),
                    SideConditionError);
}

TEST_CASE("coprime rank identity holds unconditionally") {
    for (const ComplexMatrix& a :
         {diag3(), projector_2x2(), star4(),
          ComplexMatrix::diagonal(std::vector<double>{2.0, 1.0})}) {
        const TheoremReport rep = check_coprime_rank(a, kCfg);
        CHECK(rep.condition_holds);
        CHECK(rep.verdict_consistent);
        CHECK(rep.residuals.at("rank_defect") == 0.0);
    }
}

TEST_CASE("theorem and variant listings") {
    const std::vector<std::string> ids = list_theorems();
    CHECK(ids.size() == 15);
    std::size_t total = 0;
    for (const std::string& id : ids) {
        const std::vector<std::string> variants = list_variants(id);
        total += variants.empty() ? 1 : variants.size();
    }
    CHECK(total == 128);
    CHECK(list_variants("average") ==
          std::vector<std::string>{"toA", "toDagger", "toStar"});
    CHECK(list_variants("condition-matrix").size() == 49);
    CHECK(list_variants("rank-gram").size() == 28);
    CHECK(list_variants("canonical-form").empty());
    CHECK_THROWS_AS(list_variants("bogus"), InvalidInputError);
}

TEST_CASE("power parameter validation table") {
    CHECK(power_params_valid("power", "b", 2, 0));
    CHECK(!power_params_valid("power", "b", 1, 2));
    CHECK(!power_params_valid("power", "b", 3, 3));
    CHECK(!power_params_valid("power", "g", 2, -2));
    CHECK(power_params_valid("corollary-power", "b", 2, 0));
    CHECK(!power_params_valid("corollary-power", "b", 1, 0));
    CHECK(!power_params_valid("corollary-power", "c", -1, 0));
    CHECK(!power_params_valid("rank-gram", "aa", 0, 1));
    CHECK(power_params_valid("canonical-form", "", 0, 0));
}

TEST_CASE("run_checker dispatch and defaults") {
    CheckRequest req;
    req.theorem = "power";
    req.variant = "b";
    const TheoremReport rep = run_checker(diag3(), req, kCfg);
    CHECK(rep.theorem_id == "power:b");
    CHECK(rep.condition_holds);

    req.theorem = "trace-remark";
    req.variant = "c";
    CHECK(run_checker(diag3(), req, kCfg).verdict_consistent);

    req.theorem = "condition-matrix";
    req.variant = "dd";
    CHECK(run_checker(diag3(), req, kCfg).condition_holds);

    req.theorem = "gram-projector";
    req.variant = "h'";
    const TheoremReport primed = run_checker(diag3(), req, kCfg);
    CHECK(primed.theorem_id == "gram-projector:h");

    req.theorem = "bogus";
    req.variant = "";
    CHECK_THROWS_AS(run_checker(diag3(), req, kCfg), InvalidInputError);

    req.theorem = "linear";
    req.variant = "q";
    CHECK_THROWS_AS(run_checker(diag3(), req, kCfg), InvalidInputError);
}

TEST_CASE("report serialization") {
    TheoremReport rep = check_average(star4(), "toStar", kCfg);
    const nlohmann::json j = nlohmann::json::parse(to_json_string(rep));
    CHECK(j.at("theorem_id") == "average:toStar");
    CHECK(j.at("condition_holds") == true);
    CHECK(j.at("is_three_op") == false);
    CHECK(j.at("verdict_consistent") == true);
    CHECK(j.at("exclusion_flag") == false);
    CHECK(j.at("residuals").is_object());
    CHECK(!j.contains("witness"));

    rep.witness = diag3();
    const nlohmann::json jw = nlohmann::json::parse(to_json_string(rep));
    CHECK(jw.at("witness").at("rows") == 3);
}
