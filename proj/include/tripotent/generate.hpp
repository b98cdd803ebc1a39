#ifndef TRIPOTENT_GENERATE_HPP
#define TRIPOTENT_GENERATE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "tripotent/classes.hpp"
#include "tripotent/matrix.hpp"

namespace tripotent {

// Request for a seeded random matrix. label is either a class name
// ("H", "P", "OP", "TM", "N", "EP", "MP", "SD", "PI", "3OP") or one of the
// named constructions:
//
//   gaussian                       plain complex Gaussian entries
//   hermitian-nontripotent         Hermitian, eigenvalues far from {-1,0,1}
//   tripotent-nonhermitian         tripotent via a non-unitary similarity,
//                                  non-Hermitian with margin (needs n >= 2)
//   normal-nontripotent            normal, spectrum far from {-1,0,1}
//   partial-isometry-nonEP         partial isometry with a nonzero l block
//                                  (needs n >= 2)
//   ep-nonPI                       range-Hermitian, singular values far
//                                  from 1 (needs rank >= 1)
//   star-average-spectrum          normal, eigenvalues in {1,-1,±i/sqrt 3}
//                                  with at least one imaginary pair member
//   normal-unit-modulus-spectrum   normal; each eigenvalue is either a
//                                  random unit-modulus phase or a draw from
//                                  {1,-1,±i/sqrt 3}
//
// signature is honored only for label 3OP and must satisfy p + q + z = n.
// rank must be <= n. Infeasible combinations throw InvalidInputError.
struct GenSpec {
    std::size_t n = 1;
    std::string label;
    std::optional<Signature> signature;
    std::optional<std::size_t> rank;
    std::uint64_t seed = 0;
};

// Stream splitting: disjoint substreams are obtained by pushing
// base + odd-constant * (index + 1) through the splitmix64 finalizer. Equal
// (base, index) pairs always give equal seeds.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

// Haar-distributed unitary: complex Gaussian matrix, QR, then each column
// scaled so the R diagonal becomes real positive. Deterministic per seed.
ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed);

ComplexMatrix generate(const GenSpec& spec);

// a + epsilon * g with g complex Gaussian scaled to unit Frobenius norm.
// epsilon = 0 returns a unchanged.
ComplexMatrix perturb(const ComplexMatrix& a, double epsilon, std::uint64_t seed);

// Fixed matrices used across the test corpus:
//   commutation       the pair (diag(2, 1/2), [[0,1],[1,0]]): k commutes
//                     with sigma^3 + sigma^-3 exactly but not with sigma
//   star_average      diag(1, -1, i/sqrt 3, -i/sqrt 3), which satisfies
//                     a + a^+ = 2 a^* without being orthogonal tripotent
//   star_average_pinv its Moore-Penrose inverse in closed form
struct ReferenceExamples {
    struct {
        ComplexMatrix sigma;
        ComplexMatrix k;
    } commutation;
    ComplexMatrix star_average;
    ComplexMatrix star_average_pinv;
};

ReferenceExamples reference_examples();

} // namespace tripotent

#endif
