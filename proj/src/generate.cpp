#include "tripotent/generate.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "eigen_support.hpp"

namespace tripotent {

namespace {

using Rng = std::mt19937_64;

ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> entries(rows * cols);
    for (auto& z : entries) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        z = Complex(re, im);
    }
    return ComplexMatrix(rows, cols, std::move(entries));
}

// n x n matrix  u * [ top_left  top_right ] * u^*  with zero lower blocks.
ComplexMatrix embed_top_rows(const ComplexMatrix& u, const ComplexMatrix& top_left,
                             const ComplexMatrix& top_right) {
    const std::size_t n = u.rows();
    const std::size_t r = top_left.rows();
    std::vector<Complex> entries(n * n, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) entries[i * n + j] = top_left(i, j);
        for (std::size_t j = 0; j < n - r; ++j) {
            entries[i * n + r + j] = top_right(i, j);
        }
    }
    const ComplexMatrix core(n, n, std::move(entries));
    return mat_mul(mat_mul(u, core), conj_transpose(u));
}

ComplexMatrix unitary_conjugate_diag(const std::vector<Complex>& d,
                                     std::uint64_t seed) {
    const ComplexMatrix w = random_unitary(d.size(), seed);
    return mat_mul(mat_mul(w, ComplexMatrix::diagonal(d)), conj_transpose(w));
}

// Random invertible matrix with condition number at most hi/lo (so well
// under the documented cap of 50): two Haar factors around a positive
// diagonal spread.
ComplexMatrix random_invertible(std::size_t n, std::uint64_t seed, Rng& rng,
                                double lo = 0.6, double hi = 1.8) {
    std::uniform_real_distribution<double> spread(lo, hi);
    std::vector<Complex> d(n);
    for (auto& v : d) v = Complex(spread(rng), 0.0);
    const ComplexMatrix w1 = random_unitary(n, derive_seed(seed, 11));
    const ComplexMatrix w2 = random_unitary(n, derive_seed(seed, 12));
    return mat_mul(mat_mul(w1, ComplexMatrix::diagonal(d)), w2);
}

// s * diag(d) * s^-1 through an LU solve.
ComplexMatrix similarity_diag(const ComplexMatrix& s, const std::vector<Complex>& d) {
    const Eigen::MatrixXcd se = detail::to_eigen(s);
    const Eigen::MatrixXcd de = detail::to_eigen(ComplexMatrix::diagonal(d));
    const Eigen::MatrixXcd out = se * de * se.partialPivLu().inverse();
    return detail::from_eigen(out);
}

std::size_t draw_rank(const GenSpec& spec, Rng& rng, std::size_t lo,
                      std::size_t hi) {
    if (spec.rank) {
        if (*spec.rank < lo || *spec.rank > hi) {
            throw InvalidInputError("generate: requested rank is infeasible");
        }
        return *spec.rank;
    }
    std::uniform_int_distribution<std::size_t> pick(lo, hi);
    return pick(rng);
}

// First r rows of a Haar unitary: an r x n matrix with orthonormal rows,
// split into the r x r and r x (n - r) pieces.
void isometry_rows(std::size_t n, std::size_t r, std::uint64_t seed,
                   ComplexMatrix& k, ComplexMatrix& l) {
    const ComplexMatrix w = random_unitary(n, seed);
    k = block(w, 0, 0, r, r);
    l = block(w, 0, r, r, n - r);
}

const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

Complex draw_solution_eigenvalue(Rng& rng) {
    std::uniform_int_distribution<int> pick(0, 3);
    switch (pick(rng)) {
        case 0: return Complex(1.0, 0.0);
        case 1: return Complex(-1.0, 0.0);
        case 2: return Complex(0.0, kInvSqrt3);
        default: return Complex(0.0, -kInvSqrt3);
    }
}

ComplexMatrix generate_three_op(const GenSpec& spec, Rng& rng) {
    const std::size_t n = spec.n;
    std::size_t p = 0, q = 0;
    if (spec.signature) {
        const Signature& sig = *spec.signature;
        if (sig.p + sig.q + sig.z != n) {
            throw InvalidInputError("generate: signature does not sum to n");
        }
        if (spec.rank && *spec.rank != sig.p + sig.q) {
            throw InvalidInputError("generate: rank conflicts with signature");
        }
        p = sig.p;
        q = sig.q;
    } else {
        const std::size_t r = draw_rank(spec, rng, 0, n);
        std::uniform_int_distribution<std::size_t> split(0, r);
        p = split(rng);
        q = r - p;
    }
    std::vector<Complex> d(n, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < p; ++i) d[i] = Complex(1.0, 0.0);
    for (std::size_t i = 0; i < q; ++i) d[p + i] = Complex(-1.0, 0.0);
    return unitary_conjugate_diag(d, derive_seed(spec.seed, 1));
}

ComplexMatrix generate_class(const GenSpec& spec, ClassLabel label, Rng& rng) {
    const std::size_t n = spec.n;
    const std::uint64_t useed = derive_seed(spec.seed, 1);
    switch (label) {
        case ClassLabel::ThreeOP:
            return generate_three_op(spec, rng);
        case ClassLabel::H: {
            std::normal_distribution<double> gauss(0.0, 1.0);
            std::vector<Complex> d(n);
            for (auto& v : d) v = Complex(gauss(rng), 0.0);
            return unitary_conjugate_diag(d, useed);
        }
        case ClassLabel::N: {
            std::normal_distribution<double> gauss(0.0, 1.0);
            std::vector<Complex> d(n);
            for (auto& v : d) v = Complex(gauss(rng), gauss(rng));
            return unitary_conjugate_diag(d, useed);
        }
        case ClassLabel::OP: {
            const std::size_t r = draw_rank(spec, rng, 0, n);
            std::vector<Complex> d(n, Complex(0.0, 0.0));
            for (std::size_t i = 0; i < r; ++i) d[i] = Complex(1.0, 0.0);
            return unitary_conjugate_diag(d, useed);
        }
        case ClassLabel::P: {
            const std::size_t r = draw_rank(spec, rng, 0, n);
            std::vector<Complex> d(n, Complex(0.0, 0.0));
            for (std::size_t i = 0; i < r; ++i) d[i] = Complex(1.0, 0.0);
            return similarity_diag(random_invertible(n, useed, rng), d);
        }
        case ClassLabel::TM: {
            const std::size_t r = draw_rank(spec, rng, 0, n);
            std::uniform_int_distribution<std::size_t> split(0, r);
            const std::size_t p = split(rng);
            std::vector<Complex> d(n, Complex(0.0, 0.0));
            for (std::size_t i = 0; i < p; ++i) d[i] = Complex(1.0, 0.0);
            for (std::size_t i = p; i < r; ++i) d[i] = Complex(-1.0, 0.0);
            return similarity_diag(random_invertible(n, useed, rng), d);
        }
        case ClassLabel::EP: {
            const std::size_t r = draw_rank(spec, rng, 1, n);
            std::uniform_real_distribution<double> sv(0.5, 2.0);
            const ComplexMatrix k = random_unitary(r, derive_seed(spec.seed, 2));
            std::vector<Complex> scaled(r * r);
            std::vector<double> sigma(r);
            for (auto& s : sigma) s = sv(rng);
            for (std::size_t i = 0; i < r; ++i) {
                for (std::size_t j = 0; j < r; ++j) {
                    scaled[i * r + j] = sigma[i] * k(i, j);
                }
            }
            return embed_top_rows(random_unitary(n, useed),
                                  ComplexMatrix(r, r, std::move(scaled)),
                                  ComplexMatrix::zero(r, n - r));
        }
        case ClassLabel::MP: {
            // u [b 0; 0 0] u^* with b an involution: the pseudoinverse is
            // then u [b^-1 0; 0 0] u^* = the matrix itself.
            const std::size_t r = draw_rank(spec, rng, 1, n);
            std::uniform_int_distribution<int> coin(0, 1);
            std::vector<Complex> d(r);
            for (auto& v : d) v = Complex(coin(rng) ? 1.0 : -1.0, 0.0);
            const ComplexMatrix t = random_invertible(r, derive_seed(spec.seed, 2), rng);
            const ComplexMatrix b = similarity_diag(t, d);
            return embed_top_rows(random_unitary(n, useed), b,
                                  ComplexMatrix::zero(r, n - r));
        }
        case ClassLabel::PI: {
            const std::size_t r = draw_rank(spec, rng, 0, n);
            if (r == 0) return ComplexMatrix::zero(n, n);
            ComplexMatrix k(0, 0), l(0, 0);
            isometry_rows(n, r, derive_seed(spec.seed, 2), k, l);
            return embed_top_rows(random_unitary(n, useed), k, l);
        }
        case ClassLabel::SD: {
            // Scalar sigma commutes with every k, which is the factor-level
            // star-dagger criterion.
            const std::size_t r = draw_rank(spec, rng, 1, n);
            std::uniform_real_distribution<double> scalar(0.5, 2.0);
            const double c = scalar(rng);
            ComplexMatrix k(0, 0), l(0, 0);
            isometry_rows(n, r, derive_seed(spec.seed, 2), k, l);
            return embed_top_rows(random_unitary(n, useed),
                                  scale(Complex(c, 0.0), k),
                                  scale(Complex(c, 0.0), l));
        }
        default:
            break;
    }
    throw InvalidInputError("generate: unsupported label");
}

ComplexMatrix generate_named(const GenSpec& spec, Rng& rng) {
    const std::size_t n = spec.n;
    const std::string& name = spec.label;
    const std::uint64_t useed = derive_seed(spec.seed, 1);

    if (name == "gaussian") {
        return gaussian_matrix(n, n, rng);
    }
    if (name == "hermitian-nontripotent") {
        // Real spectrum at distance >= 0.5 from {-1, 0, 1}.
        std::uniform_real_distribution<double> mag(1.5, 3.0);
        std::uniform_int_distribution<int> coin(0, 1);
        std::vector<Complex> d(n);
        for (auto& v : d) v = Complex(coin(rng) ? mag(rng) : -mag(rng), 0.0);
        return unitary_conjugate_diag(d, useed);
    }
    if (name == "normal-nontripotent") {
        // Modulus in [1.5, 2], phase well away from the real axis.
        std::uniform_real_distribution<double> mag(1.5, 2.0);
        std::uniform_real_distribution<double> phase(0.3, 1.25);
        std::uniform_int_distribution<int> coin(0, 1);
        std::vector<Complex> d(n);
        for (auto& v : d) {
            const double m = mag(rng);
            const double th = coin(rng) ? phase(rng) : -phase(rng);
            v = Complex(m * std::cos(th), m * std::sin(th));
        }
        return unitary_conjugate_diag(d, useed);
    }
    if (name == "tripotent-nonhermitian") {
        if (n < 2) {
            throw InvalidInputError(
                "generate: tripotent-nonhermitian needs n >= 2");
        }
        for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
            const std::uint64_t sub = derive_seed(spec.seed, 7000 + attempt);
            Rng local(sub);
            // At least one +1 and at least one other value, so the
            // similarity genuinely mixes eigenspaces.
            std::uniform_int_distribution<std::size_t> pick_p(1, n - 1);
            const std::size_t p = pick_p(local);
            std::uniform_int_distribution<std::size_t> pick_q(0, n - p);
            const std::size_t q = pick_q(local);
            std::vector<Complex> d(n, Complex(0.0, 0.0));
            for (std::size_t i = 0; i < p; ++i) d[i] = Complex(1.0, 0.0);
            for (std::size_t i = 0; i < q; ++i) d[p + i] = Complex(-1.0, 0.0);
            const ComplexMatrix s =
                random_invertible(n, derive_seed(sub, 1), local);
            const ComplexMatrix a = similarity_diag(s, d);
            const ComplexMatrix astar = conj_transpose(a);
            if (relative_distance(a, astar) < 1e-3) continue;
            if (relative_distance(mat_mul(a, astar), mat_mul(astar, a)) < 1e-3) {
                continue;
            }
            return a;
        }
        throw InvalidInputError(
            "generate: could not realize tripotent-nonhermitian margins");
    }
    if (name == "partial-isometry-nonEP") {
        if (n < 2) {
            throw InvalidInputError(
                "generate: partial-isometry-nonEP needs n >= 2");
        }
        for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
            const std::uint64_t sub = derive_seed(spec.seed, 8000 + attempt);
            Rng local(sub);
            std::uniform_int_distribution<std::size_t> pick_r(1, n - 1);
            const std::size_t r = spec.rank ? *spec.rank : pick_r(local);
            if (r < 1 || r > n - 1) {
                throw InvalidInputError(
                    "generate: partial-isometry-nonEP needs 1 <= rank <= n-1");
            }
            ComplexMatrix k(0, 0), l(0, 0);
            isometry_rows(n, r, derive_seed(sub, 2), k, l);
            if (frobenius_norm(l) < 0.1) continue;
            const ComplexMatrix a =
                embed_top_rows(random_unitary(n, derive_seed(sub, 1)), k, l);
            if (relative_distance(a, conj_transpose(a)) < 1e-2) continue;
            return a;
        }
        throw InvalidInputError(
            "generate: could not realize partial-isometry-nonEP margins");
    }
    if (name == "ep-nonPI") {
        Rng local(derive_seed(spec.seed, 3));
        const std::size_t r = draw_rank(spec, local, 1, n);
        std::uniform_real_distribution<double> sv(1.5, 2.5);
        const ComplexMatrix k = random_unitary(r, derive_seed(spec.seed, 2));
        std::vector<Complex> scaled(r * r);
        for (std::size_t i = 0; i < r; ++i) {
            const double s = sv(local);
            for (std::size_t j = 0; j < r; ++j) scaled[i * r + j] = s * k(i, j);
        }
        return embed_top_rows(random_unitary(n, useed),
                              ComplexMatrix(r, r, std::move(scaled)),
                              ComplexMatrix::zero(r, n - r));
    }
    if (name == "star-average-spectrum") {
        std::uniform_int_distribution<int> coin(0, 1);
        std::vector<Complex> d(n);
        d[0] = Complex(0.0, coin(rng) ? kInvSqrt3 : -kInvSqrt3);
        for (std::size_t i = 1; i < n; ++i) d[i] = draw_solution_eigenvalue(rng);
        return unitary_conjugate_diag(d, useed);
    }
    if (name == "normal-unit-modulus-spectrum") {
        std::uniform_int_distribution<int> coin(0, 1);
        std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
        std::vector<Complex> d(n);
        for (auto& v : d) {
            if (coin(rng)) {
                const double th = phase(rng);
                v = Complex(std::cos(th), std::sin(th));
            } else {
                v = draw_solution_eigenvalue(rng);
            }
        }
        return unitary_conjugate_diag(d, useed);
    }
    throw InvalidInputError("generate: unknown label '" + name + "'");
}

} // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed) {
    if (n == 0) return ComplexMatrix::identity(0);
    Rng rng(seed);
    const ComplexMatrix g = gaussian_matrix(n, n, rng);
    const Eigen::MatrixXcd ge = detail::to_eigen(g);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(ge);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR();
    // Scale each column so the corresponding R diagonal entry becomes real
    // positive; this makes the distribution Haar rather than QR-convention
    // dependent.
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
        const std::complex<double> rjj = r(j, j);
        const double mag = std::abs(rjj);
        const std::complex<double> ph =
            (mag > 0.0) ? rjj / mag : std::complex<double>(1.0, 0.0);
        q.col(j) *= ph;
    }
    return detail::from_eigen(q);
}

ComplexMatrix generate(const GenSpec& spec) {
    if (spec.rank && *spec.rank > spec.n) {
        throw InvalidInputError("generate: rank exceeds n");
    }
    const auto label = class_from_string(spec.label);
    if (spec.signature && (!label || *label != ClassLabel::ThreeOP)) {
        throw InvalidInputError("generate: signature requires label 3OP");
    }
    Rng rng(derive_seed(spec.seed, 0));
    if (label) return generate_class(spec, *label, rng);
    return generate_named(spec, rng);
}

ComplexMatrix perturb(const ComplexMatrix& a, double epsilon, std::uint64_t seed) {
    if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
        throw InvalidInputError("perturb: epsilon must be finite and nonnegative");
    }
    if (epsilon == 0.0) return a;
    Rng rng(seed);
    ComplexMatrix g = gaussian_matrix(a.rows(), a.cols(), rng);
    const double norm = frobenius_norm(g);
    if (norm == 0.0) return a;
    return mat_add(a, scale(Complex(epsilon / norm, 0.0), g));
}

ReferenceExamples reference_examples() {
    ReferenceExamples ex;
    ex.commutation.sigma = ComplexMatrix::diagonal(std::vector<double>{2.0, 0.5});
    ex.commutation.k = ComplexMatrix(
        2, 2, {Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0)});
    const double c = kInvSqrt3;
    const double s3 = std::sqrt(3.0);
    ex.star_average = ComplexMatrix::diagonal(std::vector<Complex>{
        Complex(1, 0), Complex(-1, 0), Complex(0, c), Complex(0, -c)});
    ex.star_average_pinv = ComplexMatrix::diagonal(std::vector<Complex>{
        Complex(1, 0), Complex(-1, 0), Complex(0, -s3), Complex(0, s3)});
    return ex;
}

} // namespace tripotent
