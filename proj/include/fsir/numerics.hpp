#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include <Eigen/Dense>

namespace fsir {

using Matrix = Eigen::MatrixXd;
using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

/// Deterministic random stream keyed by (seed, stream_id).
///
/// Two instances built from the same pair produce the same draws no matter
/// which thread uses them or in what order streams are consumed. Instances
/// are cheap to create; give every unit of parallel work its own.
class SeededRng {
public:
    SeededRng(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream_id() const noexcept { return stream_id_; }

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double normal() { return normal_(engine_); }
    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_;
};

/// Mixes a list of integers (replication, client, purpose, ...) into a stream id.
std::uint64_t derive_stream(std::initializer_list<std::uint64_t> parts);

struct SvdResult {
    Matrix u;  ///< p x min(p,q), or p x p when the full left basis is requested
    Vector s;  ///< descending, length min(p,q)
    Matrix v;  ///< q x min(p,q)
};

enum class SvdBasis { thin, full_left };

/// Dense SVD with a fixed sign convention: the largest-magnitude entry of
/// every left singular vector is positive (first index wins ties).
SvdResult svd(const Matrix& m, SvdBasis basis = SvdBasis::thin);

struct EigResult {
    Vector values;   ///< descending
    Matrix vectors;  ///< columns match values
};

/// Eigendecomposition of a symmetric matrix, same sign convention as svd().
EigResult sym_eig(const Matrix& m);

struct SpdSolution {
    Matrix x;
    double ridge = 0.0;  ///< ridge actually used, including any escalation
};

/// Solves (a + ridge I) x = b by Cholesky. When the factorization fails the
/// ridge is escalated by decades from 1e-10 to 1e-2 times trace(a)/p;
/// SingularMatrix is thrown once the ladder is exhausted.
SpdSolution solve_spd(const Matrix& a, const Matrix& b, double ridge = 0.0);

/// i.i.d. N(mean, sd^2) entries, drawn in row-major order.
Matrix gaussian_matrix(SeededRng& rng, Eigen::Index rows, Eigen::Index cols, double mean,
                       double sd);

/// Symmetric p x p matrix: upper triangle i.i.d. N(0, sd^2), lower mirrored.
Matrix symmetric_gaussian(SeededRng& rng, Eigen::Index p, double sd);

/// Flips column signs so the largest-magnitude entry of each column of `u`
/// is positive; the same flips are applied to `v` when given.
void canonicalize_signs(Matrix& u, Matrix* v = nullptr);

bool all_finite(const Matrix& m);

}  // namespace fsir
