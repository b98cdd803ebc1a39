#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "tripotent/classes.hpp"
#include "tripotent/decompose.hpp"
#include "tripotent/errors.hpp"
#include "tripotent/generate.hpp"
#include "tripotent/matrix.hpp"

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

ComplexMatrix gen(const std::string& label, std::size_t n, std::uint64_t seed) {
    GenSpec spec;
    spec.n = n;
    spec.label = label;
    spec.seed = seed;
    return generate(spec);
}

} // namespace

TEST_CASE("label string round trip") {
    for (ClassLabel label : all_class_labels) {
        CHECK(class_from_string(to_string(label)) == label);
    }
    CHECK(class_from_string("ThreeOP") == ClassLabel::ThreeOP);
    CHECK(class_from_string("3-OP") == ClassLabel::ThreeOP);
    CHECK(!class_from_string("nope").has_value());
}

TEST_CASE("membership table for diag(1, -1, 0)") {
    const ComplexMatrix a = diag3();
    CHECK(is_member(a, ClassLabel::H, kCfg));
    CHECK(!is_member(a, ClassLabel::P, kCfg));
    CHECK(!is_member(a, ClassLabel::OP, kCfg));
    CHECK(is_member(a, ClassLabel::TM, kCfg));
    CHECK(is_member(a, ClassLabel::N, kCfg));
    CHECK(is_member(a, ClassLabel::EP, kCfg));
    CHECK(is_member(a, ClassLabel::MP, kCfg));
    CHECK(is_member(a, ClassLabel::SD, kCfg));
    CHECK(is_member(a, ClassLabel::PI, kCfg));
    CHECK(is_member(a, ClassLabel::ThreeOP, kCfg));
}

TEST_CASE("membership table for a skew projector") {
    const ComplexMatrix a = projector_2x2();
    CHECK(!is_member(a, ClassLabel::H, kCfg));
    CHECK(is_member(a, ClassLabel::P, kCfg));
    CHECK(!is_member(a, ClassLabel::OP, kCfg));
    CHECK(is_member(a, ClassLabel::TM, kCfg));
    CHECK(!is_member(a, ClassLabel::N, kCfg));
    CHECK(!is_member(a, ClassLabel::EP, kCfg));
    CHECK(!is_member(a, ClassLabel::MP, kCfg));
    CHECK(!is_member(a, ClassLabel::PI, kCfg));
    CHECK(!is_member(a, ClassLabel::ThreeOP, kCfg));
}

TEST_CASE("membership table for diag(i)") {
    const ComplexMatrix a =
        ComplexMatrix::diagonal(std::vector<Complex>{Complex(0, 1)});
    CHECK(!is_member(a, ClassLabel::H, kCfg));
    CHECK(!is_member(a, ClassLabel::TM, kCfg));
    CHECK(is_member(a, ClassLabel::N, kCfg));
    CHECK(is_member(a, ClassLabel::EP, kCfg));
    CHECK(!is_member(a, ClassLabel::MP, kCfg));
    CHECK(is_member(a, ClassLabel::SD, kCfg));
    CHECK(is_member(a, ClassLabel::PI, kCfg));
    CHECK(!is_member(a, ClassLabel::ThreeOP, kCfg));
}

TEST_CASE("class residual is the membership boundary") {
    const ComplexMatrix almost = perturb(diag3(), 1e-12, 77);
    CHECK(is_member(almost, ClassLabel::ThreeOP, kCfg));
    const ComplexMatrix far = perturb(diag3(), 1e-6, 77);
    CHECK(!is_member(far, ClassLabel::ThreeOP, kCfg));
    CHECK(class_residual(far, ClassLabel::ThreeOP, kCfg) > 1e-8);
    CHECK_THROWS_AS(class_residual(ComplexMatrix::zero(2, 3),
                                   ClassLabel::H, kCfg),
                    DimensionError);
}

TEST_CASE("generated families land in their classes") {
    const char* labels[] = {"H", "P", "OP", "TM", "N", "EP", "MP", "SD", "PI",
                            "3OP"};
    std::uint64_t seed = 1000;
    for (const char* name : labels) {
        const ClassLabel label = *class_from_string(name);
        for (std::size_t n : {1, 2, 4, 7}) {
            for (int rep = 0; rep < 5; ++rep) {
                const ComplexMatrix a = gen(name, n, ++seed);
                INFO(name << " n=" << n << " seed=" << seed);
                CHECK(is_member(a, label, kCfg));
            }
        }
    }
}

TEST_CASE("factor-level membership agrees with the defining equations") {
    const ClassLabel checkable[] = {ClassLabel::H,  ClassLabel::MP,
                                    ClassLabel::N,  ClassLabel::TM,
                                    ClassLabel::EP, ClassLabel::PI,
                                    ClassLabel::SD, ClassLabel::ThreeOP};
    const char* families[] = {"gaussian", "3OP", "H", "N", "EP", "MP", "PI",
                              "SD", "TM", "P", "tripotent-nonhermitian",
                              "partial-isometry-nonEP", "ep-nonPI",
                              "hermitian-nontripotent", "normal-nontripotent"};
    std::uint64_t seed = 4000;
    for (const char* family : families) {
        for (std::size_t n : {2, 3, 5}) {
            for (int rep = 0; rep < 3; ++rep) {
                const ComplexMatrix a = gen(family, n, ++seed);
                const HSDecomposition d = hs_decompose(a, kCfg);
                for (ClassLabel label : checkable) {
                    INFO(family << " n=" << n << " seed=" << seed
                                << " label=" << to_string(label));
                    CHECK(hs_class_check(d, label, kCfg) ==
                          is_member(a, label, kCfg));
                }
            }
        }
    }
}

TEST_CASE("factor-level membership rejects P and OP") {
    const HSDecomposition d = hs_decompose(diag3(), kCfg);
    CHECK_THROWS_AS(hs_class_check(d, ClassLabel::P, kCfg),
                    UnsupportedLabelError);
    CHECK_THROWS_AS(hs_class_residual(d, ClassLabel::OP, kCfg),
                    UnsupportedLabelError);
}

TEST_CASE("factor-level membership is vacuous at rank zero") {
    const HSDecomposition d = hs_decompose(ComplexMatrix::zero(3, 3), kCfg);
    for (ClassLabel label : {ClassLabel::H, ClassLabel::MP, ClassLabel::N,
                             ClassLabel::TM, ClassLabel::EP, ClassLabel::PI,
                             ClassLabel::SD, ClassLabel::ThreeOP}) {
        CHECK(hs_class_check(d, label, kCfg));
    }
}

TEST_CASE("signature of orthogonal tripotents") {
    const Signature sig = signature(diag3(), kCfg);
    CHECK(sig == Signature{1, 1, 1});

    const Signature zero_sig = signature(ComplexMatrix::zero(2, 2), kCfg);
    CHECK(zero_sig == Signature{0, 0, 2});

    GenSpec spec;
    spec.n = 6;
    spec.label = "3OP";
    spec.signature = Signature{3, 2, 1};
    spec.seed = 42;
    CHECK(signature(generate(spec), kCfg) == Signature{3, 2, 1});

    CHECK_THROWS_AS(signature(ComplexMatrix::diagonal(std::vector<double>{2.0}),
                              kCfg),
                    NotThreeOpError);
}

TEST_CASE("unclassifiable eigenvalues are reported") {
    ToleranceConfig cfg;
    cfg.eq_tol = 10.0;
    cfg.eig_class_tol = 1e-12;
    CHECK_THROWS_AS(signature(ComplexMatrix::diagonal(std::vector<double>{0.9}),
                              cfg),
                    UnclassifiableEigenvalueError);
}

TEST_CASE("k-idempotent reduction") {
    CHECK(k_idempotent_reduce(2) == ClassLabel::OP);
    CHECK(k_idempotent_reduce(4) == ClassLabel::OP);
    CHECK(k_idempotent_reduce(3) == ClassLabel::ThreeOP);
    CHECK(k_idempotent_reduce(9) == ClassLabel::ThreeOP);
    CHECK_THROWS_AS(k_idempotent_reduce(1), InvalidInputError);
}

TEST_CASE("intersection identities pin down the class") {
    struct Identity {
        const char* name;
        std::vector<ClassLabel> rhs;
    };
    const Identity identities[] = {
        {"TM and N", {ClassLabel::TM, ClassLabel::N}},
        {"H and PI", {ClassLabel::H, ClassLabel::PI}},
        {"H and MP", {ClassLabel::H, ClassLabel::MP}},
        {"TM and EP and PI", {ClassLabel::TM, ClassLabel::EP, ClassLabel::PI}},
        {"TM and EP and SD", {ClassLabel::TM, ClassLabel::EP, ClassLabel::SD}},
        {"MP and SD", {ClassLabel::MP, ClassLabel::SD}},
        {"MP and PI", {ClassLabel::MP, ClassLabel::PI}},
    };
    const char* families[] = {"3OP", "hermitian-nontripotent",
                              "tripotent-nonhermitian", "normal-nontripotent",
                              "partial-isometry-nonEP", "ep-nonPI", "gaussian"};
    std::uint64_t seed = 20000;
    for (const char* family : families) {
        for (std::size_t n : {2, 3, 5, 8}) {
            for (int rep = 0; rep < 4; ++rep) {
                const ComplexMatrix a = gen(family, n, ++seed);
                const bool lhs = is_member(a, ClassLabel::ThreeOP, kCfg);
                for (const Identity& id : identities) {
                    bool rhs = true;
                    for (ClassLabel label : id.rhs) {
                        rhs = rhs && is_member(a, label, kCfg);
                    }
                    INFO(family << " n=" << n << " seed=" << seed << " "
                                << id.name);
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}
