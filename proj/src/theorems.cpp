#include "tripotent/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "tripotent/classes.hpp"
#include "tripotent/decompose.hpp"
#include "tripotent/errors.hpp"
#include "tripotent/matrix_json.hpp"

namespace tripotent {

namespace {

void require_square(const ComplexMatrix& a) {
    if (!a.is_square()) {
        throw DimensionError("theorem checks need a square matrix");
    }
}

// Scalar analogue of relative_distance, with an extra factor n so trace
// comparisons tolerate n accumulated entry errors.
double scalar_residual(const Complex& lhs, const Complex& rhs, std::size_t n) {
    const double denom = static_cast<double>(std::max<std::size_t>(n, 1)) *
                         std::max({1.0, std::abs(lhs), std::abs(rhs)});
    return std::abs(lhs - rhs) / denom;
}

double spectrum_distance(const std::vector<Complex>& eigs,
                         const std::vector<Complex>& targets) {
    double worst = 0.0;
    for (const auto& ev : eigs) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& t : targets) best = std::min(best, std::abs(ev - t));
        worst = std::max(worst, best);
    }
    return worst;
}

void finalize(TheoremReport& rep, const ComplexMatrix& a,
              const ToleranceConfig& cfg) {
    rep.is_three_op = is_member(a, ClassLabel::ThreeOP, cfg);
    rep.verdict_consistent = rep.condition_holds == rep.is_three_op;
}

bool power_params_ok(char variant, int s, int t) noexcept {
    switch (variant) {
        case 'b':
        case 'd':
        case 'e': return s != t && s - t + 1 != 0;
        case 'c': return s != t && s + t + 1 != 0;
        case 'f': return s != t && s - t - 1 != 0;
        case 'g': return s != -t && s - t + 1 != 0;
        default: return false;
    }
}

bool corollary_param_ok(char variant, int s) noexcept {
    if (s == 0) return false;
    switch (variant) {
        case 'b':
        case 'f':
        case 'g':
        case 'i': return s != 1;
        case 'c':
        case 'd':
        case 'e':
        case 'h': return s != -1;
        default: return false;
    }
}

char gram_to_corollary(char variant) {
    switch (variant) {
        case 'b': return 'b';
        case 'c': return 'c';
        case 'd': return 'd';
        case 'e': return 'e';
        case 'f': return 'i';
        case 'g': return 'h';
        default: return '\0';
    }
}

char gram_to_power(char variant) {
    switch (variant) {
        case 'h': return 'b';
        case 'i': return 'c';
        case 'j': return 'd';
        case 'k': return 'f';
        case 'l': return 'g';
        default: return '\0';
    }
}

bool rank_gram_params_ok(char col, int s, int t) noexcept {
    switch (col) {
        case 'a': return s != 0;
        case 'b':
        case 'c':
        case 'd':
        case 'e': return s != t;
        case 'f':
        case 'g': return s != t - 1;
        default: return false;
    }
}

struct Sides {
    ComplexMatrix lhs;
    ComplexMatrix rhs;
};

Sides corollary_sides(const ComplexMatrix& a, char variant, int s,
                      const ToleranceConfig& cfg) {
    const ComplexMatrix star = conj_transpose(a);
    const ComplexMatrix pinv = mp_inverse(a, cfg);
    switch (variant) {
        case 'b': return {a, pinv * gram_power(a, GramSide::Left, s, cfg)};
        case 'c': return {pinv, a * gram_power(a, GramSide::Left, s, cfg)};
        case 'd': return {star, a * gram_power(a, GramSide::Right, s, cfg)};
        case 'e': return {a, star * gram_power(a, GramSide::Left, s, cfg)};
        case 'f': return {a, star * gram_power(a, GramSide::Right, s, cfg)};
        case 'g': return {a, pinv * gram_power(a, GramSide::Right, s, cfg)};
        case 'h': return {pinv, a * gram_power(a, GramSide::Right, s, cfg)};
        case 'i': return {star, a * gram_power(a, GramSide::Left, s, cfg)};
        default: break;
    }
    throw InvalidInputError("corollary-power: unknown variant");
}

Sides power_sides(const ComplexMatrix& a, char variant, int s, int t,
                  const ToleranceConfig& cfg) {
    const ComplexMatrix star = conj_transpose(a);
    const ComplexMatrix pinv = mp_inverse(a, cfg);
    switch (variant) {
        case 'b':
            return {a * gram_power(a, GramSide::Left, s, cfg),
                    pinv * gram_power(a, GramSide::Left, t, cfg)};
        case 'c':
            return {star * gram_power(a, GramSide::Left, s, cfg),
                    a * gram_power(a, GramSide::Right, t, cfg)};
        case 'd':
            return {a * gram_power(a, GramSide::Right, s, cfg),
                    star * gram_power(a, GramSide::Right, t, cfg)};
        case 'e':
            return {a * gram_power(a, GramSide::Right, s, cfg),
                    pinv * gram_power(a, GramSide::Right, t, cfg)};
        case 'f':
            return {a * gram_power(a, GramSide::Left, s, cfg),
                    star * gram_power(a, GramSide::Left, t, cfg)};
        case 'g':
            return {a * gram_power(a, GramSide::Right, s, cfg),
                    pinv * gram_power(a, GramSide::Left, t, cfg)};
        default: break;
    }
    throw InvalidInputError("power: unknown variant");
}

Sides rank_gram_col_sides(const ComplexMatrix& a, char col, int s, int t,
                          const ToleranceConfig& cfg) {
    const ComplexMatrix star = conj_transpose(a);
    switch (col) {
        case 'a': return {a, star * gram_power(a, GramSide::Right, s, cfg)};
        case 'b':
            return {star * gram_power(a, GramSide::Left, s, cfg),
                    a * gram_power(a, GramSide::Right, t, cfg)};
        case 'c':
            return {a * gram_power(a, GramSide::Right, s, cfg),
                    star * gram_power(a, GramSide::Right, t, cfg)};
        case 'd':
            return {a * gram_power(a, GramSide::Left, s, cfg),
                    star * gram_power(a, GramSide::Left, t, cfg)};
        case 'e':
            return {a * gram_power(a, GramSide::Right, s, cfg),
                    mp_inverse(a, cfg) * gram_power(a, GramSide::Left, t, cfg)};
        case 'f':
            return {a * gram_power(a, GramSide::Left, s, cfg),
                    mp_inverse(a, cfg) * gram_power(a, GramSide::Left, t, cfg)};
        case 'g':
            return {a * gram_power(a, GramSide::Right, s, cfg),
                    mp_inverse(a, cfg) * gram_power(a, GramSide::Right, t, cfg)};
        default: break;
    }
    throw InvalidInputError("rank-gram: unknown column");
}

Sides condition_col_sides(const ComplexMatrix& a, char col,
                          const ToleranceConfig& cfg) {
    const ComplexMatrix star = conj_transpose(a);
    const ComplexMatrix pinv = mp_inverse(a, cfg);
    switch (col) {
        case 'a': return {pinv * a, pinv * star};
        case 'b': return {pinv * a, star * pinv};
        case 'c': return {star, (a * a) * pinv};
        case 'd': return {a, (a * pinv) * star};
        case 'e': return {a, (star * a) * pinv};
        case 'f': return {a, (pinv * star) * a};
        case 'g': return {a, (star * pinv) * a};
        default: break;
    }
    throw InvalidInputError("condition-matrix: unknown column");
}

// Rank with the cutoff anchored to the scale the arithmetic ran at. A derived
// matrix (difference of products) that is pure rounding noise must count as
// zero, which the bare largest-singular-value rule cannot see. The slack
// absorbs rounding accumulated across the products that built the matrix; it
// stays many orders of magnitude below the unit-sized singular values these
// integer rank tests discriminate.
constexpr double kDerivedScaleSlack = 64.0;

std::size_t rank_of_svd_at_scale(const std::vector<double>& sv,
                                 std::size_t rows, std::size_t cols,
                                 double scale, const ToleranceConfig& cfg) {
    const double top = sv.empty() ? 0.0 : sv[0];
    const double cutoff = cfg.rank_cutoff_factor(rows, cols) *
                          std::max(top, kDerivedScaleSlack * scale);
    std::size_t r = 0;
    for (double v : sv) {
        if (v > cutoff) ++r;
    }
    return r;
}

std::size_t rank_at_scale(const ComplexMatrix& m, double scale,
                          const ToleranceConfig& cfg) {
    const SvdResult s = svd(m);
    return rank_of_svd_at_scale(s.singular_values, m.rows(), m.cols(), scale, cfg);
}

// Orthonormal basis of the nullspace: trailing right singular vectors, with
// the same anchored cutoff.
ComplexMatrix null_basis(const ComplexMatrix& m, double scale,
                         const ToleranceConfig& cfg) {
    const SvdResult s = svd(m);
    const std::size_t r =
        rank_of_svd_at_scale(s.singular_values, m.rows(), m.cols(), scale, cfg);
    return block(s.v, 0, r, m.cols(), m.cols() - r);
}

void check_variant_char(const char* theorem, char variant, const char* allowed) {
    for (const char* p = allowed; *p; ++p) {
        if (*p == variant) return;
    }
    throw InvalidInputError(std::string(theorem) + ": unknown variant '" +
                            std::string(1, variant) + "'");
}

} // namespace

TheoremReport check_canonical_form(const ComplexMatrix& a,
                                   const ToleranceConfig& cfg) {
    require_square(a);
    cfg.validate();
    TheoremReport rep;
    rep.theorem_id = "canonical-form";
    const double herm = relative_distance(a, conj_transpose(a));
    const double spec = spectrum_distance(
        eigenvalues(a),
        {Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(-1.0, 0.0)});
    rep.residuals["hermitian"] = herm;
    rep.residuals["spectrum"] = spec;
    rep.condition_holds = herm <= cfg.eq_tol && spec <= cfg.eig_class_tol;
    finalize(rep, a, cfg);
    return rep;
}

TheoremReport check_star_dagger(const ComplexMatrix& a,
                                const ToleranceConfig& cfg) {
    require_square(a);
    cfg.validate();
    TheoremReport rep;
    rep.theorem_id = "star-dagger";
    const double star_res = relative_distance(a, conj_transpose(a));
    const double dagger_res = relative_distance(a, mp_inverse(a, cfg));
    rep.residuals["star"] = star_res;
    rep.residuals["dagger"] = dagger_res;
    rep.condition_holds = star_res <= cfg.eq_tol && dagger_res <= cfg.eq_tol;
    finalize(rep, a, cfg);
    return rep;
}

TheoremReport check_structural(const ComplexMatrix& a,
                               const ToleranceConfig& cfg) {
    require_square(a);
    cfg.validate();
    TheoremReport rep;
    rep.theorem_id = "structural";
    const ComplexMatrix a2 = a * a;
    const Complex half(0.5, 0.0);
    const ComplexMatrix e = scale(half, mat_add(a2, a));
    const ComplexMatrix f = scale(half, mat_sub(a2, a));
    const ComplexMatrix ef = e * f;
    const double e_idem = relative_distance(e * e, e);
    const double e_herm = relative_distance(e, conj_transpose(e));
    const double f_idem = relative_distance(f * f, f);
    const double f_herm = relative_distance(f, conj_transpose(f));
    const double commute = relative_distance(ef, f * e);
    rep.residuals["e_idempotent"] = e_idem;
    rep.residuals["e_hermitian"] = e_herm;
    rep.residuals["f_idempotent"] = f_idem;
    rep.residuals["f_hermitian"] = f_herm;
    rep.residuals["commute"] = commute;
    const ComplexMatrix zero = ComplexMatrix::zero(a.rows(), a.cols());
    // difference split A = H + L with H = E, L = -F annihilates both ways
    rep.residuals["ef_zero"] = relative_distance(ef, zero);
    rep.residuals["fe_zero"] = relative_distance(f * e, zero);
    rep.condition_holds = e_idem <= cfg.eq_tol && e_herm <= cfg.eq_tol &&
                          f_idem <= cfg.eq_tol && f_herm <= cfg.eq_tol &&
                          commute <= cfg.eq_tol;
    finalize(rep, a, cfg);
    return rep;
}

TheoremReport check_svd_factors(const ComplexMatrix& a,
                                const ToleranceConfig& cfg) {
    require_square(a);
    cfg.validate();
    TheoremReport rep;
    rep.theorem_id = "svd-factors";
    const std::size_t n = a.rows();
    const SvdResult dec = svd(a);
    const std::size_t r =
        rank_from_singular_values(dec.singular_values, n, n, cfg);
    const ComplexMatrix u1 = block(dec.u, 0, 0, n, r);
    const ComplexMatrix v1 = block(dec.v, 0, 0, n, r);
    const ComplexMatrix eye_r = ComplexMatrix::identity(r);
    const ComplexMatrix cross = conj_transpose(u1) * v1;
    const double left_on = relative_distance(conj_transpose(u1) * u1, eye_r);
    const double right_on = relative_distance(conj_transpose(v1) * v1, eye_r);
    const double factor = relative_distance(a, u1 * conj_transpose(v1));
    const double swapped = relative_distance(a, v1 * conj_transpose(u1));
    const double involution = relative_distance(cross * cross, eye_r);
    rep.residuals["left_orthonormal"] = left_on;
    rep.residuals["right_orthonormal"] = right_on;
    rep.residuals["factor"] = factor;
    rep.residuals["factor_swapped"] = swapped;
    rep.residuals["involution"] = involution;
    rep.condition_holds = left_on <= cfg.eq_tol && right_on <= cfg.eq_tol &&
                          factor <= cfg.eq_tol && swapped <= cfg.eq_tol &&
                          involution <= cfg.eq_tol;
    finalize(rep, a, cfg);
    return rep;
}

TheoremReport check_average(const ComplexMatrix& a, const std::string& variant,
                            const ToleranceConfig& cfg) {
    require_square(a);
    cfg.validate();
    if (variant != "toA" && variant != "toDagger" && variant != "toStar") {
        throw InvalidInputError("average: unknown variant '" + variant + "'");
    }
    TheoremReport rep;
    rep.theorem_id = "average:" + variant;
    const ComplexMatrix star = conj_transpose(a);
    const ComplexMatrix pinv = mp_inverse(a, cfg);
    const ComplexMatrix avg =
        scale(Complex(1.0 / 3.0, 0.0), mat_add(mat_add(a, star), pinv));
    const ComplexMatrix& target =
        (variant == "toA") ? a : (variant == "toDagger") ? pinv : star;
    const double res = relative_distance(avg, target);
    rep.residuals["average"] = res;
    rep.condition_holds = res <= cfg.eq_tol;
    finalize(rep, a, cfg);
    if (variant == "toStar") {
        const double c = 1.0 / std::sqrt(3.0);
        double nearest = std::numeric_limits<double>::infinity();
        for (const auto& ev : eigenvalues(a)) {
            nearest = std::min(nearest, std::abs(ev - Complex(0.0, c)));
            nearest = std::min(nearest, std::abs(ev - Complex(0.0, -c)));
        }
        const bool excluded = nearest > cfg.eig_class_tol;
        rep.exclusion_flag = excluded;
        rep.verdict_consistent =
            (rep.condition_holds && excluded) == rep.is_three_op;
    }
    return rep;
}

TheoremReport check_linear(const ComplexMatrix& a, char variant,
                           const ToleranceConfig& cfg) {
    require_square(a);
    cfg.validate();
    check_variant_char("linear", variant, "bcdefgh");
    TheoremReport rep;
    rep.theorem_id = std::string("linear:") + variant;
    const ComplexMatrix star = conj_transpose(a);
    const ComplexMatrix pinv = mp_inverse(a, cfg);
    ComplexMatrix lhs(0, 0), rhs(0, 0);
    switch (variant) {
        case 'b':
            lhs = mat_add(star, (a * pinv) * star);
            rhs = mat_add(a, (a * star) * a);
            break;
        case 'c':
            lhs = mat_add(a, (a * pinv) * star);
            rhs = mat_add(pinv, (a * star) * pinv);
            break;
        case 'd':
            lhs = mat_add(a, (a * a) * pinv);
            rhs = mat_add(pinv, (pinv * a) * star);
            break;
        case 'e':
            lhs = mat_add(a, (a * a) * star);
            rhs = mat_add(pinv, (pinv * a) * star);
            break;
        case 'f':
            lhs = mat_add(a, (a * a) * star);
            rhs = mat_add(star, (star * a) * star);
            break;
        case 'g':
            lhs = mat_add(pinv * a, pinv * star);
            rhs = mat_add(a * a, star * star);
            break;
        default:
            lhs = mat_add(pinv * a, star * pinv);
            rhs = mat_add(a * a, star * star);
            break;
    }
    const double res = relative_distance(lhs, rhs);
    rep.residuals["identity"] = res;
    rep.condition_holds = res <= cfg.eq_tol;
    finalize(rep, a, cfg);
    return rep;
}

TheoremReport check_power(const ComplexMatrix& a, char variant,
                          const PowerParams& params, const ToleranceConfig& cfg) {
    require_square(a);
    cfg.validate();
    check_variant_char("power", variant, "bcdefg");
    if (!power_params_ok(variant, params.s, params.t)) {
        throw SideConditionError(std::string("power:") + variant +
                                 ": exponents violate the side condition");
    }
    TheoremReport rep;
    rep.theorem_id = std::string("power:") + variant;
    const Sides sides = power_sides(a, variant, params.s, params.t, cfg);
    const double res = relative_distance(sides.lhs, sides.rhs);
    rep.residuals["identity"] = res;
    rep.condition_holds = res <= cfg.eq_tol;
    finalize(rep, a, cfg);
    return rep;
}

TheoremReport check_corollary_power(const ComplexMatrix& a, char variant, int s,
                                    const ToleranceConfig& cfg) {
    require_square(a);
    cfg.validate();
    check_variant_char("corollary-power", variant, "bcdefghi");
    if (!corollary_param_ok(variant, s)) {
        throw SideConditionError(std::string("corollary-power:") + variant +
                                 ": exponent violates the side condition");
    }
    TheoremReport rep;
    rep.theorem_id = std::string("corollary-power:") + variant;
    const Sides sides = corollary_sides(a, variant, s, cfg);
    const double res = relative_distance(sides.lhs, sides.rhs);
    rep.residuals["identity"] = res;
    rep.condition_holds = res <= cfg.eq_tol;
    finalize(rep, a, cfg);
    return rep;
}

TheoremReport check_gram_projector(const ComplexMatrix& a, char variant,
                                   const PowerParams& params,
                                   const ToleranceConfig& cfg) {
    require_square(a);
    cfg.validate();
    check_variant_char("gram-projector", variant, "bcdefghijkl");
    Sides sides{ComplexMatrix(0, 0), ComplexMatrix(0, 0)};
    if (variant <= 'g') {
        const char mapped = gram_to_corollary(variant);
        if (!corollary_param_ok(mapped, params.s)) {
            throw SideConditionError(std::string("gram-projector:") + variant +
                                     ": exponent violates the side condition");
        }
        sides = corollary_sides(a, mapped, params.s, cfg);
    } else {
        const char mapped = gram_to_power(variant);
        if (!power_params_ok(mapped, params.s, params.t)) {
            throw SideConditionError(std::string("gram-projector:") + variant +
                                     ": exponents violate the side condition");
        }
        sides = power_sides(a, mapped, params.s, params.t, cfg);
    }
    TheoremReport rep;
    rep.theorem_id = std::string("gram-projector:") + variant;
    const double gram_res =
        class_residual(a * conj_transpose(a), ClassLabel::OP, cfg);
    const double res = relative_distance(sides.lhs, sides.rhs);
    rep.residuals["gram_projector"] = gram_res;
    rep.residuals["identity"] = res;
    rep.condition_holds = gram_res <= cfg.eq_tol && res <= cfg.eq_tol;
    finalize(rep, a, cfg);
    return rep;
}

TheoremReport check_rank_trace(const ComplexMatrix& a, char variant,
                               const ToleranceConfig& cfg) {
    require_square(a);
    cfg.validate();
    check_variant_char("rank-trace", variant, "bcde");
    TheoremReport rep;
    rep.theorem_id = std::string("rank-trace:") + variant;
    const std::size_t n = a.rows();
    const ComplexMatrix star = conj_transpose(a);
    const ComplexMatrix pinv = mp_inverse(a, cfg);
    const double rank_a = static_cast<double>(numerical_rank(a, cfg));
    Complex lhs, rhs;
    double clause_res = 0.0;
    switch (variant) {
        case 'b': {
            lhs = trace(star * a) + trace(gram_power(a, GramSide::Right, -1, cfg));
            rhs = Complex(2.0 * rank_a, 0.0);
            clause_res = relative_distance(star * a, star * pinv);
            break;
        }
        case 'c': {
            lhs = trace(star * a) + trace(gram_power(a, GramSide::Right, -1, cfg));
            rhs = Complex(2.0 * rank_a, 0.0);
            clause_res = relative_distance(pinv * a, pinv * star);
            break;
        }
        case 'd': {
            lhs = trace(a * star) + trace(star * a);
            rhs = Complex(2.0 * trace(a * a).real(), 0.0);
            clause_res = relative_distance(star * a, star * pinv);
            break;
        }
        default: {
            lhs = trace(a * pinv) +
                  trace(((mat_pow(a, 3) * pinv) * star) * star);
            rhs = Complex(2.0 * trace(a * a).real(), 0.0);
            clause_res = relative_distance(a * star, star * a);
            break;
        }
    }
    const double trace_res = scalar_residual(lhs, rhs, n);
    rep.residuals["trace"] = trace_res;
    rep.residuals["clause"] = clause_res;
    rep.condition_holds = trace_res <= cfg.eq_tol && clause_res <= cfg.eq_tol;
    finalize(rep, a, cfg);
    return rep;
}

TheoremReport check_trace_remark(const ComplexMatrix& a, char variant, int k,
                                 const ToleranceConfig& cfg) {
    require_square(a);
    cfg.validate();
    check_variant_char("trace-remark", variant, "abc");
    TheoremReport rep;
    rep.theorem_id = std::string("trace-remark:") + variant;
    const std::size_t n = a.rows();
    const ComplexMatrix star = conj_transpose(a);
    if (variant == 'a') {
        const double herm = relative_distance(a, star);
        const Complex lhs =
            Complex(static_cast<double>(numerical_rank(a, cfg)), 0.0) +
            trace(mat_pow(a, 4));
        const Complex rhs(2.0 * trace(a * a).real(), 0.0);
        const double trace_res = scalar_residual(lhs, rhs, n);
        rep.residuals["hermitian"] = herm;
        rep.residuals["trace"] = trace_res;
        rep.condition_holds = herm <= cfg.eq_tol && trace_res <= cfg.eq_tol;
        finalize(rep, a, cfg);
        return rep;
    }
    if (variant == 'b') {
        const ComplexMatrix pinv = mp_inverse(a, cfg);
        const double normal = relative_distance(a * star, star * a);
        const Complex lhs =
            Complex(static_cast<double>(numerical_rank(a * pinv, cfg)), 0.0) +
            trace((a * a) * (star * star));
        const Complex rhs(2.0 * trace(a * a).real(), 0.0);
        const double trace_res = scalar_residual(lhs, rhs, n);
        rep.residuals["normal"] = normal;
        rep.residuals["trace"] = trace_res;
        rep.condition_holds = normal <= cfg.eq_tol && trace_res <= cfg.eq_tol;
        finalize(rep, a, cfg);
        return rep;
    }
    if (k < 2) {
        throw SideConditionError("trace-remark:c needs k >= 2");
    }
    const ComplexMatrix pinv = mp_inverse(a, cfg);
    const std::size_t uk = static_cast<std::size_t>(k);
    const Complex lhs =
        Complex(static_cast<double>(numerical_rank(a, cfg)), 0.0) +
        trace((mat_pow(a, uk) * pinv) * mat_pow(star, uk - 1));
    const Complex rhs(2.0 * trace(mat_pow(a, uk - 1)).real(), 0.0);
    const double trace_res = scalar_residual(lhs, rhs, n);
    const double k_potent = relative_distance(mat_pow(a, uk), a);
    rep.residuals["trace"] = trace_res;
    rep.residuals["k_potent"] = k_potent;
    rep.condition_holds = trace_res <= cfg.eq_tol;
    rep.is_three_op = is_member(a, ClassLabel::ThreeOP, cfg);
    rep.verdict_consistent = rep.condition_holds == (k_potent <= cfg.eq_tol);
    return rep;
}

TheoremReport check_normal_trace(const ComplexMatrix& a, char variant,
                                 const ToleranceConfig& cfg) {
    require_square(a);
    cfg.validate();
    check_variant_char("normal-trace", variant, "bcde");
    TheoremReport rep;
    rep.theorem_id = std::string("normal-trace:") + variant;
    const std::size_t n = a.rows();
    const ComplexMatrix star = conj_transpose(a);
    const ComplexMatrix gram = a * star;
    const double normal = relative_distance(gram, star * a);
    const double gram_res = class_residual(gram, ClassLabel::OP, cfg);
    const double rank_a = static_cast<double>(numerical_rank(a, cfg));
    Complex lhs, rhs;
    switch (variant) {
        case 'b': {
            lhs = Complex(rank_a, 0.0) + trace(gram);
            rhs = Complex(2.0, 0.0) * trace(a * a);
            break;
        }
        case 'c': {
            const ComplexMatrix pinv = mp_inverse(a, cfg);
            lhs = Complex(rank_a, 0.0) + trace(a * pinv);
            rhs = Complex(2.0, 0.0) * trace(star * pinv);
            break;
        }
        case 'd': {
            lhs = Complex(rank_a, 0.0) + trace(gram);
            rhs = Complex(2.0 * trace(star * star).real(), 0.0);
            break;
        }
        default: {
            const ComplexMatrix pinv = mp_inverse(a, cfg);
            lhs = Complex(rank_a, 0.0) + trace(gram);
            rhs = Complex((trace(a * pinv) + trace(pinv * pinv)).real(), 0.0);
            break;
        }
    }
    const double trace_res = scalar_residual(lhs, rhs, n);
    rep.residuals["normal"] = normal;
    rep.residuals["gram_projector"] = gram_res;
    rep.residuals["trace"] = trace_res;
    rep.condition_holds = normal <= cfg.eq_tol && gram_res <= cfg.eq_tol &&
                          trace_res <= cfg.eq_tol;
    finalize(rep, a, cfg);
    return rep;
}

TheoremReport check_condition_matrix(const ComplexMatrix& a, char row, char col,
                                     int k, const ToleranceConfig& cfg) {
    require_square(a);
    cfg.validate();
    check_variant_char("condition-matrix", row, "abcdefg");
    check_variant_char("condition-matrix", col, "abcdefg");
    if ((row == 'd' || row == 'e') && k < 1) {
        throw SideConditionError("condition-matrix: rows d and e need k >= 1");
    }
    TheoremReport rep;
    rep.theorem_id = std::string("condition-matrix:") + row + col;
    const std::size_t n = a.rows();
    const ComplexMatrix eye = ComplexMatrix::identity(n);
    const ComplexMatrix star = conj_transpose(a);
    bool row_holds = false;
    switch (row) {
        case 'a': {
            const double shift_scale = 1.0 + frobenius_norm(a);
            const double total =
                static_cast<double>(numerical_rank(a, cfg)) +
                static_cast<double>(
                    rank_at_scale(mat_sub(eye, a), shift_scale, cfg)) +
                static_cast<double>(
                    rank_at_scale(mat_add(eye, a), shift_scale, cfg));
            const double defect = std::abs(total - 2.0 * static_cast<double>(n));
            rep.residuals["row_rank_defect"] = defect;
            row_holds = defect == 0.0;
            break;
        }
        case 'b':
        case 'c': {
            const ComplexMatrix& base = (row == 'b') ? star : a;
            const double shift_scale = 1.0 + frobenius_norm(base);
            const ComplexMatrix n0 = null_basis(base, 0.0, cfg);
            const ComplexMatrix n1 =
                null_basis(mat_sub(eye, base), shift_scale, cfg);
            const ComplexMatrix n2 =
                null_basis(mat_add(eye, base), shift_scale, cfg);
            const std::size_t dims = n0.cols() + n1.cols() + n2.cols();
            const std::size_t basis_rank =
                numerical_rank(hcat(hcat(n0, n1), n2), cfg);
            rep.residuals["row_dim_defect"] = std::abs(
                static_cast<double>(dims) - static_cast<double>(n));
            rep.residuals["row_basis_defect"] = std::abs(
                static_cast<double>(basis_rank) - static_cast<double>(n));
            row_holds = dims == n && basis_rank == n;
            break;
        }
        case 'd': {
            const std::size_t uk = static_cast<std::size_t>(k);
            const double power_res =
                relative_distance(mat_pow(a, uk + 2), mat_pow(a, uk));
            // Under the power identity every eigenvalue is in {0, 1, -1}, so
            // diagonalizability is equivalent to the cubic identity itself.
            const double diag_res = relative_distance(mat_pow(a, 3), a);
            rep.residuals["row_power"] = power_res;
            rep.residuals["row_diag"] = diag_res;
            row_holds = power_res <= cfg.eq_tol && diag_res <= cfg.eq_tol;
            break;
        }
        case 'e': {
            const std::size_t uk = static_cast<std::size_t>(k);
            const double power_res =
                relative_distance(mat_pow(a, uk + 2), mat_pow(a, uk));
            const double ep_res = class_residual(a, ClassLabel::EP, cfg);
            rep.residuals["row_power"] = power_res;
            rep.residuals["row_ep"] = ep_res;
            row_holds = power_res <= cfg.eq_tol && ep_res <= cfg.eq_tol;
            break;
        }
        case 'f': {
            const ComplexMatrix pinv = mp_inverse(a, cfg);
            const double res = relative_distance(pinv * (star * star), pinv);
            rep.residuals["row_identity"] = res;
            row_holds = res <= cfg.eq_tol;
            break;
        }
        default: {
            const ComplexMatrix pinv = mp_inverse(a, cfg);
            const double res =
                relative_distance(pinv, (pinv * mat_pow(a, 3)) * pinv);
            rep.residuals["row_identity"] = res;
            row_holds = res <= cfg.eq_tol;
            break;
        }
    }
    const Sides sides = condition_col_sides(a, col, cfg);
    const double col_res = relative_distance(sides.lhs, sides.rhs);
    rep.residuals["col_identity"] = col_res;
    rep.condition_holds = row_holds && col_res <= cfg.eq_tol;
    finalize(rep, a, cfg);
    return rep;
}

TheoremReport check_rank_gram(const ComplexMatrix& a, char row, char col,
                              const PowerParams& params,
                              const ToleranceConfig& cfg) {
    require_square(a);
    cfg.validate();
    check_variant_char("rank-gram", row, "abcd");
    check_variant_char("rank-gram", col, "abcdefg");
    if (!rank_gram_params_ok(col, params.s, params.t)) {
        throw SideConditionError(std::string("rank-gram:") + row + col +
                                 ": exponents violate the side condition");
    }
    TheoremReport rep;
    rep.theorem_id = std::string("rank-gram:") + row + col;
    const std::size_t n = a.rows();
    const ComplexMatrix eye = ComplexMatrix::identity(n);
    const ComplexMatrix star = conj_transpose(a);
    ComplexMatrix gram(0, 0);
    switch (row) {
        case 'a': gram = a * star; break;
        case 'b': gram = star * a; break;
        case 'c': gram = mp_inverse(a, cfg) * star; break;
        default: gram = star * mp_inverse(a, cfg); break;
    }
    const std::size_t rank_a = numerical_rank(a, cfg);
    const std::size_t row_rank =
        rank_at_scale(mat_sub(eye, gram), 1.0 + frobenius_norm(gram), cfg);
    const double defect = std::abs(static_cast<double>(row_rank) -
                                   static_cast<double>(n - rank_a));
    const Sides sides = rank_gram_col_sides(a, col, params.s, params.t, cfg);
    const double col_res = relative_distance(sides.lhs, sides.rhs);
    rep.residuals["row_rank_defect"] = defect;
    rep.residuals["col_identity"] = col_res;
    rep.condition_holds = defect == 0.0 && col_res <= cfg.eq_tol;
    finalize(rep, a, cfg);
    return rep;
}

TheoremReport check_coprime_rank(const ComplexMatrix& a,
                                 const ToleranceConfig& cfg) {
    require_square(a);
    cfg.validate();
    TheoremReport rep;
    rep.theorem_id = "coprime-rank";
    const std::size_t n = a.rows();
    const ComplexMatrix eye = ComplexMatrix::identity(n);
    const double nf = frobenius_norm(a);
    const double shift_scale = 1.0 + nf;
    const double lhs =
        static_cast<double>(numerical_rank(a, cfg)) +
        static_cast<double>(rank_at_scale(mat_sub(eye, a), shift_scale, cfg)) +
        static_cast<double>(rank_at_scale(mat_add(eye, a), shift_scale, cfg));
    const double rhs =
        2.0 * static_cast<double>(n) +
        static_cast<double>(rank_at_scale(mat_sub(a, mat_pow(a, 3)),
                                          nf + nf * nf * nf, cfg));
    const double defect = std::abs(lhs - rhs);
    rep.residuals["rank_defect"] = defect;
    rep.condition_holds = defect == 0.0;
    rep.is_three_op = is_member(a, ClassLabel::ThreeOP, cfg);
    rep.verdict_consistent = rep.condition_holds;
    return rep;
}

std::vector<std::string> list_theorems() {
    return {"canonical-form", "star-dagger",     "structural",
            "svd-factors",    "average",         "linear",
            "power",          "corollary-power", "gram-projector",
            "rank-trace",     "trace-remark",    "normal-trace",
            "condition-matrix", "rank-gram",     "coprime-rank"};
}

std::vector<std::string> list_variants(const std::string& theorem) {
    auto letters = [](const char* range) {
        std::vector<std::string> out;
        for (const char* p = range; *p; ++p) out.emplace_back(1, *p);
        return out;
    };
    if (theorem == "canonical-form" || theorem == "star-dagger" ||
        theorem == "structural" || theorem == "svd-factors" ||
        theorem == "coprime-rank") {
        return {};
    }
    if (theorem == "average") return {"toA", "toDagger", "toStar"};
    if (theorem == "linear") return letters("bcdefgh");
    if (theorem == "power") return letters("bcdefg");
    if (theorem == "corollary-power") return letters("bcdefghi");
    if (theorem == "gram-projector") return letters("bcdefghijkl");
    if (theorem == "rank-trace") return letters("bcde");
    if (theorem == "trace-remark") return letters("abc");
    if (theorem == "normal-trace") return letters("bcde");
    if (theorem == "condition-matrix" || theorem == "rank-gram") {
        const std::string rows =
            (theorem == "condition-matrix") ? "abcdefg" : "abcd";
        std::vector<std::string> out;
        for (char r : rows) {
            for (char c : std::string("abcdefg")) {
                out.push_back(std::string(1, r) + c);
            }
        }
        return out;
    }
    throw InvalidInputError("unknown theorem '" + theorem + "'");
}

bool power_params_valid(const std::string& theorem, const std::string& variant,
                        int s, int t) noexcept {
    if (theorem == "power") {
        return variant.size() == 1 && power_params_ok(variant[0], s, t);
    }
    if (theorem == "corollary-power") {
        return variant.size() == 1 && corollary_param_ok(variant[0], s);
    }
    if (theorem == "gram-projector") {
        if (variant.size() != 1) return false;
        const char v = variant[0];
        if (v >= 'b' && v <= 'g') return corollary_param_ok(gram_to_corollary(v), s);
        if (v >= 'h' && v <= 'l') return power_params_ok(gram_to_power(v), s, t);
        return false;
    }
    if (theorem == "rank-gram") {
        return variant.size() == 2 && rank_gram_params_ok(variant[1], s, t);
    }
    if (theorem == "trace-remark") {
        return variant != "c" || s >= 2;
    }
    if (theorem == "condition-matrix") {
        if (variant.size() != 2) return false;
        if (variant[0] == 'd' || variant[0] == 'e') return s >= 1;
        return true;
    }
    return true;
}

TheoremReport run_checker(const ComplexMatrix& a, const CheckRequest& req,
                          const ToleranceConfig& cfg) {
    const std::string& th = req.theorem;
    std::string variant = req.variant;
    if (!variant.empty() && variant.back() == '\'') variant.pop_back();

    auto expect_no_variant = [&]() {
        if (!variant.empty()) {
            throw InvalidInputError(th + " takes no variant");
        }
    };
    auto one_letter = [&]() -> char {
        if (variant.size() != 1) {
            throw InvalidInputError(th + " needs a one-letter variant");
        }
        return variant[0];
    };
    auto two_letters = [&]() -> std::pair<char, char> {
        if (variant.size() != 2) {
            throw InvalidInputError(th + " needs a two-letter variant");
        }
        return {variant[0], variant[1]};
    };

    if (th == "canonical-form") {
        expect_no_variant();
        return check_canonical_form(a, cfg);
    }
    if (th == "star-dagger") {
        expect_no_variant();
        return check_star_dagger(a, cfg);
    }
    if (th == "structural") {
        expect_no_variant();
        return check_structural(a, cfg);
    }
    if (th == "svd-factors") {
        expect_no_variant();
        return check_svd_factors(a, cfg);
    }
    if (th == "coprime-rank") {
        expect_no_variant();
        return check_coprime_rank(a, cfg);
    }
    if (th == "average") return check_average(a, variant, cfg);
    if (th == "linear") return check_linear(a, one_letter(), cfg);
    if (th == "power") {
        return check_power(a, one_letter(),
                           PowerParams{req.s.value_or(3), req.t.value_or(1)}, cfg);
    }
    if (th == "corollary-power") {
        return check_corollary_power(a, one_letter(), req.s.value_or(2), cfg);
    }
    if (th == "gram-projector") {
        const char v = one_letter();
        const int s = req.s.value_or(v <= 'g' ? 2 : 3);
        return check_gram_projector(a, v, PowerParams{s, req.t.value_or(1)}, cfg);
    }
    if (th == "rank-trace") return check_rank_trace(a, one_letter(), cfg);
    if (th == "trace-remark") {
        return check_trace_remark(a, one_letter(), req.s.value_or(2), cfg);
    }
    if (th == "normal-trace") return check_normal_trace(a, one_letter(), cfg);
    if (th == "condition-matrix") {
        const auto [row, col] = two_letters();
        return check_condition_matrix(a, row, col, req.s.value_or(1), cfg);
    }
    if (th == "rank-gram") {
        const auto [row, col] = two_letters();
        return check_rank_gram(a, row, col,
                               PowerParams{req.s.value_or(3), req.t.value_or(1)},
                               cfg);
    }
    throw InvalidInputError("unknown theorem '" + th + "'");
}

std::string to_json_string(const TheoremReport& report) {
    nlohmann::ordered_json j;
    j["theorem_id"] = report.theorem_id;
    j["condition_holds"] = report.condition_holds;
    j["is_three_op"] = report.is_three_op;
    j["verdict_consistent"] = report.verdict_consistent;
    j["residuals"] = nlohmann::ordered_json::object();
    for (const auto& [name, value] : report.residuals) {
        j["residuals"][name] = value;
    }
    if (report.exclusion_flag) {
        j["exclusion_flag"] = *report.exclusion_flag;
    }
    if (report.witness) {
        j["witness"] = nlohmann::ordered_json::parse(matrix_to_json(*report.witness));
    }
    return j.dump(2);
}

} // namespace tripotent
