#include "fsir/numerics.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include <fmt/format.h>

#include "fsir/error.hpp"

namespace fsir {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace

SeededRng::SeededRng(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id), engine_(make_engine(seed, stream_id)) {}

std::uint64_t SeededRng::below(std::uint64_t bound) {
    if (bound == 0) throw InvalidInput("SeededRng::below: bound must be positive");
    // Rejection sampling keeps the draw unbiased and platform independent.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r;
    do {
        r = engine_();
    } while (r >= limit);
    return r % bound;
}

std::uint64_t derive_stream(std::initializer_list<std::uint64_t> parts) {
    std::uint64_t h = 0x6a09e667f3bcc909ULL;
    for (auto part : parts) h = splitmix64(h ^ splitmix64(part));
    return h;
}

bool all_finite(const Matrix& m) { return m.allFinite(); }

void canonicalize_signs(Matrix& u, Matrix* v) {
    for (Eigen::Index c = 0; c < u.cols(); ++c) {
        Eigen::Index best = 0;
        double best_abs = -1.0;
        for (Eigen::Index r = 0; r < u.rows(); ++r) {
            const double a = std::abs(u(r, c));
            if (a > best_abs) {
                best_abs = a;
                best = r;
            }
        }
        if (u.rows() > 0 && u(best, c) < 0.0) {
            u.col(c) = -u.col(c);
            if (v != nullptr && c < v->cols()) v->col(c) = -v->col(c);
        }
    }
}

SvdResult svd(const Matrix& m, SvdBasis basis) {
    if (m.size() == 0) throw InvalidInput("svd: empty matrix");
    if (!m.allFinite()) throw InvalidInput("svd: non-finite input");

    const unsigned options = (basis == SvdBasis::full_left ? Eigen::ComputeFullU
                                                           : Eigen::ComputeThinU) |
                             Eigen::ComputeThinV;
    Eigen::JacobiSVD<Matrix> solver(m, options);

    SvdResult out;
    out.u = solver.matrixU();
    out.s = solver.singularValues();
    out.v = solver.matrixV();
    // Columns past min(p,q) in a full basis have no partner in v; sign-fix them alone.
    canonicalize_signs(out.u, &out.v);
    return out;
}

EigResult sym_eig(const Matrix& m) {
    if (m.rows() != m.cols()) throw InvalidInput("sym_eig: matrix is not square");
    if (m.size() == 0) throw InvalidInput("sym_eig: empty matrix");
    if (!m.allFinite()) throw InvalidInput("sym_eig: non-finite input");
    const double scale = m.norm();
    if ((m - m.transpose()).norm() > 1e-10 * std::max(scale, 1e-300))
        throw InvalidInput("sym_eig: matrix is not symmetric");

    const Matrix sym = 0.5 * (m + m.transpose());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
    if (solver.info() != Eigen::Success) throw InvalidInput("sym_eig: decomposition failed");

    // Eigen returns ascending order.
    EigResult out;
    out.values = solver.eigenvalues().reverse();
    out.vectors = solver.eigenvectors().rowwise().reverse();
    canonicalize_signs(out.vectors);
    return out;
}

SpdSolution solve_spd(const Matrix& a, const Matrix& b, double ridge) {
    if (a.rows() != a.cols()) throw InvalidInput("solve_spd: matrix is not square");
    if (a.rows() != b.rows()) throw InvalidInput("solve_spd: right-hand side row mismatch");
    if (ridge < 0.0) throw InvalidInput("solve_spd: negative ridge");
    if (!a.allFinite() || !b.allFinite()) throw InvalidInput("solve_spd: non-finite input");

    const Eigen::Index p = a.rows();
    auto attempt = [&](double r, Matrix& x) {
        Matrix shifted = a;
        shifted.diagonal().array() += r;
        Eigen::LLT<Matrix> llt(shifted);
        if (llt.info() != Eigen::Success) return false;
        x = llt.solve(b);
        return x.allFinite();
    };

    SpdSolution out;
    if (attempt(ridge, out.x)) {
        out.ridge = ridge;
        return out;
    }

    double base = a.trace() / static_cast<double>(p);
    if (!(base > 0.0)) base = 1.0;
    double tried = ridge;
    for (int exponent = -10; exponent <= -2; ++exponent) {
        tried = ridge + std::pow(10.0, exponent) * base;
        if (attempt(tried, out.x)) {
            out.ridge = tried;
            return out;
        }
    }
    throw SingularMatrix(
        fmt::format("solve_spd: not positive definite after ridge escalation (last ridge {:.3g})",
                    tried),
        tried);
}

Matrix gaussian_matrix(SeededRng& rng, Eigen::Index rows, Eigen::Index cols, double mean,
                       double sd) {
    if (!(sd > 0.0) || !std::isfinite(sd)) throw InvalidInput("gaussian_matrix: sd must be > 0");
    if (rows < 0 || cols < 0) throw InvalidInput("gaussian_matrix: negative shape");
    Matrix out(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) out(i, j) = mean + sd * rng.normal();
    return out;
}

Matrix symmetric_gaussian(SeededRng& rng, Eigen::Index p, double sd) {
    if (!(sd > 0.0) || !std::isfinite(sd))
        throw InvalidInput("symmetric_gaussian: sd must be > 0");
    if (p < 1) throw InvalidInput("symmetric_gaussian: p must be positive");
    Matrix out(p, p);
    for (Eigen::Index i = 0; i < p; ++i)
        for (Eigen::Index j = i; j < p; ++j) {
            out(i, j) = sd * rng.normal();
            out(j, i) = out(i, j);
        }
    return out;
}

}  // namespace fsir
