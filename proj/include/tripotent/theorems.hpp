#ifndef TRIPOTENT_THEOREMS_HPP
#define TRIPOTENT_THEOREMS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tripotent/matrix.hpp"

namespace tripotent {

// Exponent pair for the power-identity characterizations. Variant-specific
// side conditions (s != t and the like) are enforced by the checkers, which
// throw SideConditionError on a violation.
struct PowerParams {
    int s = 3;
    int t = 1;
};

// Outcome of one characterization check on one matrix.
//
//   theorem_id         full id, e.g. "average:toStar" or "condition-matrix:bc"
//   condition_holds    the characterization's condition, evaluated at eq_tol
//                      (spectral snaps use eig_class_tol)
//   is_three_op        membership in class 3OP at eq_tol
//   verdict_consistent condition_holds agrees with the property the statement
//                      is equivalent to; for most checks that is is_three_op,
//                      for trace-remark:c it is a^k = a, for coprime-rank the
//                      identity is unconditional so this equals condition_holds,
//                      and for average:toStar the spectral exclusion below is
//                      part of the equivalence
//   residuals          named residuals behind condition_holds, each directly
//                      comparable to the tolerance used for it
//   exclusion_flag     average:toStar only: true when no eigenvalue lies
//                      within eig_class_tol of +-i/sqrt(3)
//   witness            optional matrix attached by sweep or search drivers
struct TheoremReport {
    std::string theorem_id;
    bool condition_holds = false;
    bool is_three_op = false;
    bool verdict_consistent = false;
    std::map<std::string, double> residuals;
    std::optional<bool> exclusion_flag;
    std::optional<ComplexMatrix> witness;
};

// Dispatch key for run_checker. variant stays empty for theorems without
// variants. s doubles as the power index k for trace-remark:c (default 2)
// and condition-matrix rows d and e (default 1); unset fields take
// per-theorem defaults that satisfy every side condition.
struct CheckRequest {
    std::string theorem;
    std::string variant;
    std::optional<int> s;
    std::optional<int> t;
};

// Hermitian with spectrum inside {-1, 0, 1}.
TheoremReport check_canonical_form(const ComplexMatrix& a,
                                   const ToleranceConfig& cfg);

// a = a^* and a = a^+.
TheoremReport check_star_dagger(const ComplexMatrix& a,
                                const ToleranceConfig& cfg);

// e = (a^2 + a)/2 and f = (a^2 - a)/2 are commuting orthogonal projectors.
// The ef_zero residual is informational.
TheoremReport check_structural(const ComplexMatrix& a,
                               const ToleranceConfig& cfg);

// With u1, v1 the first rank(a) singular vector blocks: a = u1 v1^*,
// a = v1 u1^*, and u1^* v1 is an involution.
TheoremReport check_svd_factors(const ComplexMatrix& a,
                                const ToleranceConfig& cfg);

// (a + a^* + a^+)/3 equals a ("toA"), a^+ ("toDagger"), or a^* ("toStar").
// toStar carries the +-i/sqrt(3) spectral exclusion flag.
TheoremReport check_average(const ComplexMatrix& a, const std::string& variant,
                            const ToleranceConfig& cfg);

// Linear identities in a, a^*, a^+, variants b..h.
TheoremReport check_linear(const ComplexMatrix& a, char variant,
                           const ToleranceConfig& cfg);

// Two-exponent Gram power identities, variants b..g.
TheoremReport check_power(const ComplexMatrix& a, char variant,
                          const PowerParams& params, const ToleranceConfig& cfg);

// One-exponent Gram power identities, variants b..i. s must be nonzero and
// avoid the variant's excluded value.
TheoremReport check_corollary_power(const ComplexMatrix& a, char variant, int s,
                                    const ToleranceConfig& cfg);

// a a^* in class OP combined with a power identity, variants b..l. Variants
// b..g use params.s only; h..l use both exponents.
TheoremReport check_gram_projector(const ComplexMatrix& a, char variant,
                                   const PowerParams& params,
                                   const ToleranceConfig& cfg);

// Trace-plus-rank identities with a Gram equality side clause, variants b..e.
TheoremReport check_rank_trace(const ComplexMatrix& a, char variant,
                               const ToleranceConfig& cfg);

// Trace identities, variants a..c. Variant c takes the power k >= 2 and its
// verdict is measured against a^k = a.
TheoremReport check_trace_remark(const ComplexMatrix& a, char variant, int k,
                                 const ToleranceConfig& cfg);

// Trace identities under normality plus a a^* in OP, variants b..e.
TheoremReport check_normal_trace(const ComplexMatrix& a, char variant,
                                 const ToleranceConfig& cfg);

// Row condition (a..g) and column condition (a..g) pairs; rows d and e take
// the power k >= 1. Both conditions together are checked against 3OP.
TheoremReport check_condition_matrix(const ComplexMatrix& a, char row, char col,
                                     int k, const ToleranceConfig& cfg);

// Rank row condition (a..d) and power column condition (a..g) pairs.
TheoremReport check_rank_gram(const ComplexMatrix& a, char row, char col,
                              const PowerParams& params,
                              const ToleranceConfig& cfg);

// rank(a) + rank(i - a) + rank(i + a) = 2n + rank(a - a^3); holds for every
// square matrix, so verdict_consistent simply mirrors condition_holds.
TheoremReport check_coprime_rank(const ComplexMatrix& a,
                                 const ToleranceConfig& cfg);

// All theorem ids, in a stable order.
std::vector<std::string> list_theorems();

// Variant names for one theorem id; empty when the theorem has none.
// Unknown ids throw InvalidInputError.
std::vector<std::string> list_variants(const std::string& theorem);

// True when (s, t) satisfies the side conditions of the given theorem
// variant. Theorems that ignore the exponents accept everything; for
// single-exponent variants t is ignored.
bool power_params_valid(const std::string& theorem, const std::string& variant,
                        int s, int t) noexcept;

// Validate the request, apply per-theorem exponent defaults, and dispatch.
// Unknown theorems or variants throw InvalidInputError; side condition
// violations throw SideConditionError; a throws DimensionError if not square.
TheoremReport run_checker(const ComplexMatrix& a, const CheckRequest& req,
                          const ToleranceConfig& cfg);

std::string to_json_string(const TheoremReport& report);

} // namespace tripotent

#endif
