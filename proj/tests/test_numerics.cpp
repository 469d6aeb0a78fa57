#include <cmath>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "fsir/error.hpp"
#include "fsir/numerics.hpp"

using namespace fsir;

namespace {

Matrix random_matrix(SeededRng& rng, Eigen::Index r, Eigen::Index c) {
    return gaussian_matrix(rng, r, c, 0.0, 1.0);
}

}  // namespace

TEST(Svd, IdentityHasUnitSingularValues) {
    const auto dec = svd(Matrix::Identity(3, 3));
    EXPECT_TRUE(dec.s.isApprox(Vector::Ones(3)));
}

TEST(Svd, DiagonalGivesIdentityBasisAfterSignFix) {
    Matrix m(2, 2);
    m << 3, 0, 0, 2;
    const auto dec = svd(m);
    EXPECT_DOUBLE_EQ(dec.s(0), 3.0);
    EXPECT_DOUBLE_EQ(dec.s(1), 2.0);
    EXPECT_TRUE(dec.u.isApprox(Matrix::Identity(2, 2)));
}

TEST(Svd, ReconstructsRandomMatrix) {
    SeededRng rng(11, 1);
    const Matrix m = random_matrix(rng, 10, 8);
    const auto dec = svd(m);
    const Matrix back = dec.u * dec.s.asDiagonal() * dec.v.transpose();
    EXPECT_LE((back - m).norm() / m.norm(), 1e-8);
}

TEST(Svd, FullLeftBasisIsOrthonormal) {
    SeededRng rng(12, 1);
    const Matrix m = random_matrix(rng, 7, 3);
    const auto dec = svd(m, SvdBasis::full_left);
    ASSERT_EQ(dec.u.cols(), 7);
    EXPECT_LE((dec.u.transpose() * dec.u - Matrix::Identity(7, 7)).norm(), 1e-12);
    EXPECT_EQ(dec.s.size(), 3);
}

TEST(Svd, SignConventionAndDeterminism) {
    SeededRng rng(13, 1);
    const Matrix m = random_matrix(rng, 6, 4);
    const auto a = svd(m);
    const auto b = svd(m);
    EXPECT_EQ(a.u, b.u);
    EXPECT_EQ(a.s, b.s);
    for (Eigen::Index j = 0; j < a.u.cols(); ++j) {
        Eigen::Index idx;
        a.u.col(j).cwiseAbs().maxCoeff(&idx);
        EXPECT_GT(a.u(idx, j), 0.0);
    }
}

TEST(Svd, SingularValuesMatchGramEigenvalues) {
    SeededRng rng(14, 1);
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix m = random_matrix(rng, 9, 5);
        const auto dec = svd(m);
        const auto eig = sym_eig(m.transpose() * m);
        for (Eigen::Index j = 0; j < 5; ++j)
            EXPECT_NEAR(dec.s(j), std::sqrt(eig.values(j)), 1e-7 * dec.s(j));
    }
}

TEST(SymEig, IdentityAndClassicPair) {
    EXPECT_TRUE(sym_eig(Matrix::Identity(2, 2)).values.isApprox(Vector::Ones(2)));
    Matrix a(2, 2);
    a << 2, 1, 1, 2;
    const auto e = sym_eig(a);
    EXPECT_NEAR(e.values(0), 3.0, 1e-14);
    EXPECT_NEAR(e.values(1), 1.0, 1e-14);
    const double h = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(e.vectors(0, 0), h, 1e-14);
    EXPECT_NEAR(e.vectors(1, 0), h, 1e-14);
    EXPECT_NEAR(std::abs(e.vectors(0, 1)), h, 1e-14);
    EXPECT_NEAR(e.vectors(0, 1) * e.vectors(1, 1), -0.5, 1e-14);
}

TEST(SymEig, ResidualOnRandomSymmetric) {
    SeededRng rng(15, 1);
    const Matrix g = random_matrix(rng, 10, 10);
    const Matrix a = (g + g.transpose()) / 2.0;
    const auto e = sym_eig(a);
    const double norm2 = e.values.cwiseAbs().maxCoeff();
    for (Eigen::Index j = 0; j < 10; ++j) {
        const Vector v = e.vectors.col(j);
        EXPECT_LE((a * v - e.values(j) * v).norm(), 1e-8 * norm2);
        if (j > 0) {
            EXPECT_GE(e.values(j - 1), e.values(j));
        }
    }
}

TEST(SolveSpd, IdentityAndDiagonal) {
    SeededRng rng(16, 1);
    const Matrix b = random_matrix(rng, 3, 2);
    EXPECT_TRUE(solve_spd(Matrix::Identity(3, 3), b).x.isApprox(b));
    Matrix a = Matrix::Zero(2, 2);
    a(0, 0) = 2;
    a(1, 1) = 4;
    Vector rhs(2);
    rhs << 2, 4;
    const auto sol = solve_spd(a, rhs, 0.0);
    EXPECT_DOUBLE_EQ(sol.x(0), 1.0);
    EXPECT_DOUBLE_EQ(sol.x(1), 1.0);
    EXPECT_EQ(sol.ridge, 0.0);
}

TEST(SolveSpd, RandomSpdResidualAndRecovery) {
    SeededRng rng(17, 1);
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix g = random_matrix(rng, 10, 10);
        const Matrix a = g * g.transpose() + Matrix::Identity(10, 10);
        const Matrix x0 = random_matrix(rng, 10, 2);
        const Matrix b = a * x0;
        const auto sol = solve_spd(a, b);
        EXPECT_LE((a * sol.x - b).norm(), 1e-8 * b.norm());
        EXPECT_LE((sol.x - x0).norm(), 1e-7 * x0.norm());
    }
}

TEST(SolveSpd, RidgeEscalatesOnSingularInput) {
    Matrix a = Matrix::Zero(3, 3);
    a(0, 0) = 1.0;
    a(1, 1) = 1.0;
    const auto sol = solve_spd(a, Matrix::Identity(3, 1));
    EXPECT_GT(sol.ridge, 0.0);
    EXPECT_TRUE(all_finite(sol.x));
}

TEST(SolveSpd, ThrowsWhenLadderIsExhausted) {
    Matrix a = Matrix::Identity(2, 2);
    a(1, 1) = -1e3;
    EXPECT_THROW(solve_spd(a, Matrix::Identity(2, 1)), SingularMatrix);
}

TEST(Gaussian, MeanAndVarianceOfManyDraws) {
    SeededRng rng(18, 1);
    const Matrix m = gaussian_matrix(rng, 1000, 100, 0.0, 1.0);
    EXPECT_LE(std::abs(m.mean()), 4.0 / std::sqrt(1e5));
    SeededRng rng2(18, 2);
    const Matrix w = gaussian_matrix(rng2, 1000, 100, 0.0, 2.0);
    const double var = (w.array() - w.mean()).square().sum() / (w.size() - 1.0);
    EXPECT_NEAR(var, 4.0, 0.05 * 4.0);
}

TEST(Gaussian, SameStreamGivesSameMatrix) {
    SeededRng a(19, 7), b(19, 7), c(19, 8);
    const Matrix ma = gaussian_matrix(a, 5, 4, 1.0, 2.0);
    EXPECT_EQ(ma, gaussian_matrix(b, 5, 4, 1.0, 2.0));
    EXPECT_NE(ma, gaussian_matrix(c, 5, 4, 1.0, 2.0));
}

TEST(Gaussian, StreamsReproduceAcrossThreads) {
    std::vector<Matrix> threaded(4);
    {
        std::vector<std::jthread> pool;
        for (int t = 0; t < 4; ++t)
            pool.emplace_back([&threaded, t] {
                SeededRng rng(20, derive_stream({0, static_cast<std::uint64_t>(t)}));
                threaded[static_cast<std::size_t>(t)] = gaussian_matrix(rng, 50, 3, 0.0, 1.0);
            });
    }
    for (int t = 3; t >= 0; --t) {
        SeededRng rng(20, derive_stream({0, static_cast<std::uint64_t>(t)}));
        EXPECT_EQ(threaded[static_cast<std::size_t>(t)], gaussian_matrix(rng, 50, 3, 0.0, 1.0));
    }
}

TEST(SymmetricGaussian, ExactlySymmetric) {
    SeededRng rng(21, 1);
    const Matrix a = symmetric_gaussian(rng, 6, 1.5);
    EXPECT_EQ(a, Matrix(a.transpose()));
    SeededRng one(21, 2);
    EXPECT_EQ(symmetric_gaussian(one, 1, 1.5).size(), 1);
}

TEST(SymmetricGaussian, UpperTriangleVariance) {
    SeededRng rng(22, 1);
    const double sd = 0.7;
    double sum = 0.0, sumsq = 0.0;
    long count = 0;
    for (int draw = 0; draw < 2000; ++draw) {
        const Matrix a = symmetric_gaussian(rng, 4, sd);
        for (Eigen::Index i = 0; i < 4; ++i)
            for (Eigen::Index j = i; j < 4; ++j) {
                sum += a(i, j);
                sumsq += a(i, j) * a(i, j);
                ++count;
            }
    }
    const double mean = sum / count;
    const double var = (sumsq - count * mean * mean) / (count - 1);
    EXPECT_NEAR(var, sd * sd, 0.05 * sd * sd);
}

TEST(Rng, BelowStaysInRange) {
    SeededRng rng(23, 1);
    std::vector<int> hits(7, 0);
    for (int i = 0; i < 7000; ++i) ++hits[rng.below(7)];
    for (int h : hits) EXPECT_GT(h, 800);
    EXPECT_THROW(rng.below(0), InvalidInput);
}
