// Acceptance gate: every exit criterion at its stated tolerance, one
// [PASS]/[FAIL] line per criterion. Exits nonzero if any criterion failed.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tripotent/classes.hpp"
#include "tripotent/decompose.hpp"
#include "tripotent/generate.hpp"
#include "tripotent/matrix.hpp"
#include "tripotent/suite.hpp"
#include "tripotent/theorems.hpp"

using namespace tripotent;

namespace {

struct CheckFailure {
    std::string message;
};

#define REQUIRE(cond, msg)                   \
    do {                                     \
        if (!(cond)) {                       \
            std::ostringstream os_;          \
            os_ << msg;                      \
            throw CheckFailure{os_.str()};   \
        }                                    \
    } while (0)

const ToleranceConfig kCfg;

double seconds_since(std::chrono::steady_clock::time_point start) {
    const auto now = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(now - start).count();
}

ComplexMatrix gaussian_block(std::size_t rows, std::size_t cols,
                             std::uint64_t seed) {
    GenSpec spec;
    spec.n = std::max(rows, cols);
    spec.label = "gaussian";
    spec.seed = seed;
    return block(generate(spec), 0, 0, rows, cols);
}

ComplexMatrix square_with_rank(std::size_t n, std::size_t r,
                               std::uint64_t seed) {
    if (r == 0) return ComplexMatrix::zero(n, n);
    return gaussian_block(n, r, derive_seed(seed, 1)) *
           gaussian_block(r, n, derive_seed(seed, 2));
}

ComplexMatrix gen(const std::string& family, std::size_t n,
                  std::uint64_t seed) {
    GenSpec spec;
    spec.n = n;
    spec.label = family;
    spec.seed = seed;
    return generate(spec);
}

double penrose_worst(const ComplexMatrix& a, const ComplexMatrix& p) {
    const ComplexMatrix ap = a * p;
    const ComplexMatrix pa = p * a;
    return std::max({relative_distance(a * pa, a),
                     relative_distance(p * ap, p),
                     relative_distance(conj_transpose(ap), ap),
                     relative_distance(conj_transpose(pa), pa)});
}

// 1. Four Penrose residuals <= 1e-10 on 500 random shapes, dims <= 16, < 10 s.
void criterion_penrose() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> dim(1, 16);
    for (int i = 0; i < 500; ++i) {
        const std::size_t rows = dim(rng);
        const std::size_t cols = dim(rng);
        const ComplexMatrix a =
            gaussian_block(rows, cols, derive_seed(1000, static_cast<std::uint64_t>(i)));
        const double worst = penrose_worst(a, mp_inverse(a, kCfg));
        REQUIRE(worst <= 1e-10, "penrose residual " << worst << " at trial " << i
                                << " shape " << rows << "x" << cols);
    }
    const double elapsed = seconds_since(start);
    REQUIRE(elapsed < 10.0, "took " << elapsed << " s, budget 10 s");
}

// 2. Canonical form on 500 random squares (dims <= 12, ranks 0..n):
//    reconstruction and row-isometry residuals <= 1e-10, and the two
//    pseudoinverse routes agree to 1e-10. < 10 s.
void criterion_canonical_routes() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<std::size_t> dim(1, 12);
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = dim(rng);
        std::uniform_int_distribution<std::size_t> rank_pick(0, n);
        const std::size_t r = rank_pick(rng);
        const ComplexMatrix a =
            square_with_rank(n, r, derive_seed(2000, static_cast<std::uint64_t>(i)));
        const HSDecomposition d = hs_decompose(a, kCfg);
        const double rebuild = relative_distance(hs_reconstruct(d), a);
        REQUIRE(rebuild <= 1e-10, "reconstruction residual " << rebuild
                                  << " at trial " << i);
        if (d.r > 0) {
            const ComplexMatrix gram = d.k * conj_transpose(d.k) +
                                       d.l * conj_transpose(d.l);
            const double iso =
                frobenius_distance(gram, ComplexMatrix::identity(d.r));
            REQUIRE(iso <= 1e-10, "row isometry residual " << iso
                                  << " at trial " << i);
        }
        const double routes = relative_distance(mp_inverse(a, kCfg), mp_via_hs(d));
        REQUIRE(routes <= 1e-10, "pseudoinverse route gap " << routes
                                 << " at trial " << i);
    }
    const double elapsed = seconds_since(start);
    REQUIRE(elapsed < 10.0, "took " << elapsed << " s, budget 10 s");
}

// 3. Reference commutation pair: k commutes with sigma^3 + sigma^-3 to 1e-14
//    while |sigma k - k sigma|_F = 2.12132 +- 1e-5.
void criterion_commutation_pair() {
    const ReferenceExamples ref = reference_examples();
    const ComplexMatrix& sigma = ref.commutation.sigma;
    const ComplexMatrix& k = ref.commutation.k;
    const ComplexMatrix mix =
        mat_pow(sigma, 3) + mat_pow(mp_inverse(sigma, kCfg), 3);
    const double commute = frobenius_distance(mix * k, k * mix);
    REQUIRE(commute <= 1e-14, "mixed-power commutator " << commute);
    const double gap = frobenius_norm(sigma * k - k * sigma);
    REQUIRE(std::abs(gap - 2.12132) <= 1e-5,
            "|sigma k - k sigma|_F = " << gap << ", expected 2.12132 +- 1e-5");
}

// 4. Reference star-average matrix diag(1, -1, i/sqrt 3, -i/sqrt 3):
//    closed-form pseudoinverse to 1e-12, a + a^+ = 2 a^* to 1e-12,
//    |a - a^*|_F = 1.63299 +- 1e-5, and not 3OP.
void criterion_star_average_matrix() {
    const double s3 = std::sqrt(3.0);
    const ComplexMatrix a = ComplexMatrix::diagonal(std::vector<Complex>{
        Complex(1, 0), Complex(-1, 0), Complex(0, 1.0 / s3),
        Complex(0, -1.0 / s3)});
    const ComplexMatrix expected_pinv = ComplexMatrix::diagonal(
        std::vector<Complex>{Complex(1, 0), Complex(-1, 0), Complex(0, -s3),
                             Complex(0, s3)});
    const ComplexMatrix pinv = mp_inverse(a, kCfg);
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            worst = std::max(worst, std::abs(pinv(i, j) - expected_pinv(i, j)));
        }
    }
    REQUIRE(worst <= 1e-12, "pseudoinverse entry deviation " << worst);
    const ComplexMatrix star = conj_transpose(a);
    const double avg = frobenius_norm(a + pinv - 2.0 * star);
    REQUIRE(avg <= 1e-12, "|a + a^+ - 2 a^*|_F = " << avg);
    const double skew = frobenius_norm(a - star);
    REQUIRE(std::abs(skew - 1.63299) <= 1e-5,
            "|a - a^*|_F = " << skew << ", expected 1.63299 +- 1e-5");
    REQUIRE(!is_member(a, ClassLabel::ThreeOP, kCfg),
            "reference matrix classified as 3OP");
}

// 5. 100 generated 3OP matrices per size n in 1..12: every eigenvalue within
//    1e-8 of {-1, 0, 1} and the prescribed signature recovered exactly.
void criterion_spectra_signatures() {
    std::mt19937_64 rng(55);
    for (std::size_t n = 1; n <= 12; ++n) {
        for (int trial = 0; trial < 100; ++trial) {
            std::uniform_int_distribution<std::size_t> pick_p(0, n);
            Signature want;
            want.p = pick_p(rng);
            std::uniform_int_distribution<std::size_t> pick_q(0, n - want.p);
            want.q = pick_q(rng);
            want.z = n - want.p - want.q;
            GenSpec spec;
            spec.n = n;
            spec.label = "3OP";
            spec.signature = want;
            spec.seed = derive_seed(5000 + n, static_cast<std::uint64_t>(trial));
            const ComplexMatrix a = generate(spec);
            for (const Complex& eig : eigenvalues(a)) {
                const double dist = std::min({std::abs(eig - Complex(1, 0)),
                                              std::abs(eig + Complex(1, 0)),
                                              std::abs(eig)});
                REQUIRE(dist <= 1e-8, "eigenvalue " << eig.real() << "+"
                                      << eig.imag() << "i at distance " << dist
                                      << " from {-1,0,1}, n=" << n);
            }
            const Signature got = signature(a, kCfg);
            REQUIRE(got == want, "signature (" << got.p << "," << got.q << ","
                                 << got.z << ") != prescribed (" << want.p
                                 << "," << want.q << "," << want.z << ")");
        }
    }
}

// 6. Full default sweep (all checkers, sizes 1..8, 50 trials per cell,
//    exponent grid {-3..3}^2): zero inconsistent verdicts, the only permitted
//    exception cell being average:toStar on the star-average-spectrum family.
//    < 5 minutes.
void criterion_equivalence_sweeps() {
    const auto start = std::chrono::steady_clock::now();
    SuiteConfig cfg;
    const SuiteReport report = run_suite(cfg);
    const double elapsed = seconds_since(start);
    REQUIRE(elapsed < 300.0, "took " << elapsed << " s, budget 300 s");

    // Four variant-family blocks are documented as identities that hold
    // beyond the target class (see README); anything outside them is an
    // undocumented soundness bug and fails hard here.
    const std::set<std::pair<std::string, std::string>> documented = {
        {"linear:e", "tripotent-nonhermitian"},
        {"linear:f", "hermitian-nontripotent"},
        {"rank-gram:ce", "hermitian-nontripotent"},
        {"rank-gram:de", "hermitian-nontripotent"},
    };
    for (const SuiteCell& cell : report.cells) {
        if (cell.status == "failed") {
            REQUIRE(documented.count({cell.theorem, cell.family}) == 1,
                    "undocumented inconsistency: " << cell.theorem << " on "
                    << cell.family << " n=" << cell.size);
        } else if (cell.status == "expected-exception") {
            REQUIRE(cell.theorem == "average:toStar" &&
                        cell.family == "star-average-spectrum",
                    "unexpected exception cell: " << cell.theorem << " on "
                    << cell.family);
        }
    }
    REQUIRE(report.total_inconsistent == 0,
            report.total_inconsistent << " of " << report.total_trials
            << " verdicts inconsistent, confined to the documented blocks: "
            << "linear:e holds for every involution, and linear:f, "
            << "rank-gram:ce, rank-gram:de (at t = s+1) hold for every "
            << "Hermitian matrix, so these sweeps cannot reach zero");
}

// 7. Seven intersection identities as bidirectional predicate agreement on
//    500 positive and 500 negative samples, zero disagreements.
void criterion_intersections() {
    const std::vector<std::vector<ClassLabel>> identities = {
        {ClassLabel::TM, ClassLabel::N},
        {ClassLabel::H, ClassLabel::PI},
        {ClassLabel::H, ClassLabel::MP},
        {ClassLabel::TM, ClassLabel::EP, ClassLabel::PI},
        {ClassLabel::TM, ClassLabel::EP, ClassLabel::SD},
        {ClassLabel::MP, ClassLabel::SD},
        {ClassLabel::MP, ClassLabel::PI},
    };
    auto agree = [&](const ComplexMatrix& a, const char* origin, int index) {
        const bool lhs = is_member(a, ClassLabel::ThreeOP, kCfg);
        for (std::size_t id = 0; id < identities.size(); ++id) {
            bool rhs = true;
            for (ClassLabel label : identities[id]) {
                rhs = rhs && is_member(a, label, kCfg);
            }
            REQUIRE(lhs == rhs, "identity " << id << " disagrees on " << origin
                                << " sample " << index << " (3OP=" << lhs
                                << ", intersection=" << rhs << ")");
        }
    };
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = 1 + static_cast<std::size_t>(i % 8);
        agree(gen("3OP", n, derive_seed(7000, static_cast<std::uint64_t>(i))),
              "positive", i);
    }
    const std::vector<std::string> negatives = {
        "gaussian",           "hermitian-nontripotent",
        "normal-nontripotent", "tripotent-nonhermitian",
        "partial-isometry-nonEP", "ep-nonPI"};
    for (int i = 0; i < 500; ++i) {
        const std::string& family = negatives[static_cast<std::size_t>(i) %
                                              negatives.size()];
        const std::size_t n = 2 + static_cast<std::size_t>(i % 7);
        agree(gen(family, n, derive_seed(8000, static_cast<std::uint64_t>(i))),
              family.c_str(), i);
    }
}

// 8. Coprime rank identity with exact integer ranks on 200 random matrices,
//    verdicts stable under halving eq_tol.
void criterion_coprime_integrality() {
    ToleranceConfig halved = kCfg;
    halved.eq_tol = kCfg.eq_tol / 2.0;
    const std::vector<std::string> families = {
        "gaussian", "3OP", "hermitian-nontripotent", "tripotent-nonhermitian",
        "partial-isometry-nonEP"};
    for (int i = 0; i < 200; ++i) {
        const std::string& family = families[static_cast<std::size_t>(i) %
                                             families.size()];
        const std::size_t n = 2 + static_cast<std::size_t>(i % 8);
        const ComplexMatrix a =
            gen(family, n, derive_seed(9000, static_cast<std::uint64_t>(i)));
        const TheoremReport rep = check_coprime_rank(a, kCfg);
        REQUIRE(rep.residuals.at("rank_defect") == 0.0,
                "rank defect " << rep.residuals.at("rank_defect") << " on "
                << family << " n=" << n << " sample " << i);
        REQUIRE(rep.condition_holds, "identity failed on " << family << " n="
                                     << n << " sample " << i);
        const TheoremReport again = check_coprime_rank(a, halved);
        REQUIRE(again.condition_holds == rep.condition_holds,
                "verdict flipped under halved eq_tol on " << family << " n="
                << n << " sample " << i);
    }
}

// 9. The search driver rediscovers a star-average witness with an eigenvalue
//    within 1e-6 of +-i/sqrt(3) inside a 1e5-sample budget.
void criterion_witness_search() {
    SearchConfig cfg;
    cfg.request.theorem = "average";
    cfg.request.variant = "toStar";
    cfg.ensemble = "normal-unit-modulus-spectrum";
    cfg.budget = 100000;
    cfg.seed = 17;
    const SearchResult result = search_counterexample(cfg);
    REQUIRE(result.found, "no witness within " << cfg.budget << " samples");
    REQUIRE(result.witness.has_value(), "witness matrix missing");
    REQUIRE(result.samples <= cfg.budget,
            "sample count " << result.samples << " exceeds budget");
    const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
    double best = 1e300;
    for (const Complex& eig : eigenvalues(*result.witness)) {
        best = std::min(best, std::abs(eig - Complex(0, inv_sqrt3)));
        best = std::min(best, std::abs(eig - Complex(0, -inv_sqrt3)));
    }
    REQUIRE(best <= 1e-6, "closest eigenvalue is " << best
                          << " from +-i/sqrt(3)");
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        void (*fn)();
    };
    const Criterion criteria[] = {
        {"1 penrose residuals on 500 random shapes", criterion_penrose},
        {"2 canonical form and dual pseudoinverse routes on 500 squares",
         criterion_canonical_routes},
        {"3 reference commutation pair", criterion_commutation_pair},
        {"4 reference star-average matrix", criterion_star_average_matrix},
        {"5 spectra and signatures of 1200 generated 3OP matrices",
         criterion_spectra_signatures},
        {"6 full equivalence sweeps with zero inconsistencies",
         criterion_equivalence_sweeps},
        {"7 intersection identities on 1000 samples", criterion_intersections},
        {"8 coprime rank integrality on 200 matrices",
         criterion_coprime_integrality},
        {"9 star-average witness search", criterion_witness_search},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        try {
            c.fn();
            std::cout << "[PASS] " << c.name << "\n";
        } catch (const CheckFailure& f) {
            ++failed;
            std::cout << "[FAIL] " << c.name << ": " << f.message << "\n";
        } catch (const std::exception& e) {
            ++failed;
            std::cout << "[FAIL] " << c.name << ": unexpected "
                      << e.what() << "\n";
        }
    }
    if (failed != 0) {
        std::cout << failed << " of 9 criteria failed\n";
    }
    return failed == 0 ? 0 : 1;
}
