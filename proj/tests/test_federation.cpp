#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>
#include <json.hpp>

#include "fsir/error.hpp"
#include "fsir/federation.hpp"
#include "fsir/metrics.hpp"
#include "fsir/simgen.hpp"
#include "fsir/trace.hpp"

using namespace fsir;

namespace {

ClientUpload upload(std::uint64_t id, Eigen::Index n, const Matrix& m, const Matrix& sigma) {
    ClientUpload u;
    u.client_id = id;
    u.n = n;
    u.m_tilde = m;
    u.sigma_tilde = sigma;
    return u;
}

std::vector<LabeledDataset> model_clients(Model model, Eigen::Index p, Eigen::Index n, int k,
                                          std::uint64_t seed, Matrix* beta = nullptr,
                                          bool sparse = false) {
    SeededRng beta_rng(seed, 99);
    const ModelSpec spec = make_spec(model, p, sparse, beta_rng);
    if (beta) *beta = spec.true_beta;
    std::vector<LabeledDataset> out;
    for (int c = 0; c < k; ++c) {
        SeededRng rng(seed, static_cast<std::uint64_t>(c));
        auto d = generate(spec, n, rng);
        assign_slices(d, SlicingRule{}, 8);
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace

TEST(ClientPipeline, UploadShapeAndDeterminism) {
    const auto clients = model_clients(Model::III, 10, 400, 1, 71);
    ClientOptions opts;
    opts.mechanism = Mechanism::vgm;
    SeededRng a(1, 2), b(1, 2);
    const auto ua = client_pipeline(clients[0], opts, a, 3);
    const auto ub = client_pipeline(clients[0], opts, b, 3);
    ASSERT_TRUE(ua && ub);
    EXPECT_EQ(ua->n, 400);
    EXPECT_EQ(ua->client_id, 3u);
    EXPECT_EQ(ua->m_tilde, ub->m_tilde);
    EXPECT_EQ(ua->sigma_tilde, ub->sigma_tilde);
    EXPECT_EQ(ua->sigma_tilde, Matrix(ua->sigma_tilde.transpose()));
    EXPECT_EQ(ua->m_tilde.rows(), 10);
    EXPECT_EQ(ua->m_tilde.cols(), 8);
    ASSERT_TRUE(ua->vgm);
}

TEST(ClientPipeline, HugeBudgetApproachesRawEstimates) {
    const auto clients = model_clients(Model::III, 10, 300, 1, 72);
    ClientOptions opts;
    opts.mechanism = Mechanism::iid;
    opts.epsilon_m = opts.epsilon_x = 1e6;
    opts.delta = 0.999;
    SeededRng rng(2, 2);
    const auto up = client_pipeline(clients[0], opts, rng);
    ASSERT_TRUE(up);
    const auto raw = slice_mean_matrix(clients[0], opts.r);
    EXPECT_LE((up->m_tilde - raw.m).norm(), 1e-4);
}

TEST(ClientPipeline, SmallClientIsExcluded) {
    const auto clients = model_clients(Model::III, 10, 30, 1, 73);
    ClientOptions opts;
    SeededRng rng(3, 3);
    EXPECT_FALSE(client_pipeline(clients[0], opts, rng).has_value());
    opts.mechanism = Mechanism::none;
    EXPECT_TRUE(client_pipeline(clients[0], opts, rng).has_value());
}

TEST(ServerMerge, WeightedAverage) {
    const Matrix m1 = Matrix::Constant(2, 3, 1.0), m2 = Matrix::Constant(2, 3, 5.0);
    const Matrix s1 = Matrix::Identity(2, 2), s2 = 3.0 * Matrix::Identity(2, 2);
    const auto single = server_merge({upload(0, 100, m1, s1)});
    EXPECT_EQ(single.merged_m, m1);
    EXPECT_EQ(single.merged_sigma, s1);
    const auto equal = server_merge({upload(0, 50, m1, s1), upload(1, 50, m2, s2)});
    EXPECT_TRUE(equal.merged_m.isApprox(Matrix::Constant(2, 3, 3.0)));
    const auto weighted = server_merge({upload(0, 100, m1, s1), upload(1, 300, m2, s2)});
    EXPECT_TRUE(weighted.merged_m.isApprox(0.25 * m1 + 0.75 * m2));
    EXPECT_TRUE(weighted.merged_sigma.isApprox(0.25 * s1 + 0.75 * s2));
    EXPECT_EQ(weighted.total_n, 400);
    EXPECT_EQ(weighted.uploads, 2u);
}

TEST(ServerMerge, PermutationInvariantBitExact) {
    SeededRng rng(74, 1);
    std::vector<ClientUpload> ups;
    for (std::uint64_t k = 0; k < 6; ++k)
        ups.push_back(upload(k, 100 + 17 * static_cast<Eigen::Index>(k), gaussian_matrix(rng, 3, 4, 0, 1),
                             gaussian_matrix(rng, 3, 3, 0, 1)));
    const auto a = server_merge(ups);
    std::reverse(ups.begin(), ups.end());
    std::swap(ups[1], ups[4]);
    const auto b = server_merge(ups);
    EXPECT_EQ(a.merged_m, b.merged_m);
    EXPECT_EQ(a.merged_sigma, b.merged_sigma);
}

TEST(ServerMerge, MismatchNamesClient) {
    try {
        server_merge({upload(0, 10, Matrix::Zero(2, 2), Matrix::Identity(2, 2)),
                      upload(7, 10, Matrix::Zero(3, 2), Matrix::Identity(3, 3))});
        FAIL() << "expected ProtocolError";
    } catch (const ProtocolError& e) {
        EXPECT_NE(std::string(e.what()).find('7'), std::string::npos);
    }
    EXPECT_THROW(server_merge({}), ProtocolError);
}

TEST(EstimateSubspace, IdentityCovarianceRankOne) {
    ServerState s;
    s.merged_m = Matrix::Zero(4, 3);
    s.merged_m.row(0).setOnes();
    s.merged_sigma = Matrix::Identity(4, 4);
    const auto est = estimate_subspace(s, std::nullopt);
    EXPECT_EQ(est.d, 1);
    Matrix e1 = Matrix::Zero(4, 1);
    e1(0, 0) = 1.0;
    EXPECT_LE(projection_loss(est.beta, e1), 1e-12);
}

TEST(EstimateSubspace, ForcedDimensionWins) {
    ServerState s;
    s.merged_m = Matrix::Zero(4, 3);
    s.merged_m.row(0).setOnes();
    s.merged_m(1, 0) = 1e-3;
    s.merged_sigma = Matrix::Identity(4, 4);
    const auto est = estimate_subspace(s, 2);
    EXPECT_EQ(est.d, 2);
    EXPECT_EQ(est.d_rule, 1);
    EXPECT_EQ(est.beta.cols(), 2);
    Matrix e1 = Matrix::Zero(4, 1);
    e1(0, 0) = 1.0;
    EXPECT_NEAR(projection_loss(est.beta, e1), 1.0, 1e-12);
    EXPECT_EQ(estimate_subspace(s, 4).beta.cols(), 4);
}

TEST(Embed, PlacesRows) {
    SubspaceEstimate est;
    est.beta = Matrix(2, 1);
    est.beta << 1.5, -2.0;
    est.d = 1;
    est.embedding = ActiveSet{{2, 4}};
    const auto out = embed(est, 4);
    Matrix want(4, 1);
    want << 0, 1.5, 0, -2.0;
    EXPECT_EQ(out.beta, want);
    EXPECT_FALSE(out.embedding);
    est.embedding = ActiveSet{{1, 2}};
    EXPECT_EQ(embed(est, 2).beta, est.beta);
    est.embedding = ActiveSet{{2, 5}};
    EXPECT_THROW(embed(est, 4), InvalidInput);
}

TEST(Embed, RestrictRoundTrip) {
    SeededRng rng(75, 1);
    SubspaceEstimate est;
    est.beta = gaussian_matrix(rng, 3, 2, 0, 1);
    est.embedding = ActiveSet{{1, 4, 6}};
    const auto out = embed(est, 7);
    for (std::size_t i = 0; i < 3; ++i)
        EXPECT_EQ(out.beta.row(est.embedding->indices[i] - 1), est.beta.row(static_cast<Eigen::Index>(i)));
}

TEST(RunFsir, SingleClientEqualsDirectPipeline) {
    const auto clients = model_clients(Model::III, 10, 500, 1, 76);
    FsirOptions opts;
    opts.seed = 9;
    opts.client.cov_noise = CovNoise::unit;
    opts.forced_d = 2;
    const auto res = run_fsir(clients, opts);
    SeededRng rng(9, client_stream(0, 0, kStreamNoise));
    const auto up = client_pipeline(clients[0], opts.client, rng, 0);
    ASSERT_TRUE(up);
    const auto direct = estimate_subspace(server_merge({*up}), 2);
    EXPECT_EQ(res.estimate.beta, direct.beta);
}

TEST(RunFsir, NoiseOffKernelMatchesBruteForceSir) {
    auto clients = model_clients(Model::V, 10, 800, 1, 77);
    FsirOptions opts;
    opts.client.mechanism = Mechanism::none;
    const auto res = run_fsir(clients, opts);
    const auto& d = clients[0];
    Matrix lambda = Matrix::Zero(10, 10);
    for (int h = 1; h <= d.slices; ++h) {
        Vector m = Vector::Zero(10);
        for (Eigen::Index i = 0; i < d.n(); ++i)
            if (d.labels[static_cast<std::size_t>(i)] == h)
                for (Eigen::Index j = 0; j < 10; ++j) m(j) += std::clamp(d.x(i, j), -3.0, 3.0);
        m /= static_cast<double>(d.n());
        lambda += m * m.transpose();
    }
    const Matrix got = res.state.merged_m * res.state.merged_m.transpose();
    EXPECT_LE((got - lambda).norm(), 1e-10);
}

TEST(RunFsir, NoiselessModelVRecoversSubspace) {
    Matrix beta;
    const auto clients = model_clients(Model::V, 10, 1000, 10, 78, &beta);
    FsirOptions opts;
    opts.client.mechanism = Mechanism::none;
    opts.forced_d = 2;
    const auto res = run_fsir(clients, opts);
    EXPECT_LE(projection_loss(res.estimate.beta, beta), 0.2);
}

TEST(RunFsir, ScaleInvariantLoss) {
    SeededRng rng(79, 1);
    const Matrix b = gaussian_matrix(rng, 6, 2, 0, 1);
    Matrix t(2, 2);
    t << 2, 1, -1, 3;
    EXPECT_LE(projection_loss(b * t, b), 1e-12);
}

TEST(RunFsir, HighDimScreensAndEmbeds) {
    Matrix beta;
    const auto clients = model_clients(Model::I, 200, 1000, 10, 80, &beta, true);
    FsirOptions opts;
    opts.client.mechanism = Mechanism::none;
    opts.forced_d = 1;
    opts.high_dim = HighDim::on;
    const auto res = run_fsir(clients, opts);
    ASSERT_TRUE(res.screened);
    ASSERT_TRUE(res.active);
    EXPECT_EQ(res.estimate.beta.rows(), 200);
    for (Eigen::Index j = 0; j < 200; ++j) {
        const bool kept = std::binary_search(res.active->indices.begin(), res.active->indices.end(),
                                             static_cast<int>(j) + 1);
        if (!kept) {
            EXPECT_EQ(res.estimate.beta(j, 0), 0.0);
        }
    }
    EXPECT_LT(projection_loss(res.estimate.beta, beta), 0.5);
}

TEST(RunFsir, EmptyActiveSetAbortsOrFallsBack) {
    const auto clients = model_clients(Model::III, 12, 200, 3, 81);
    FsirOptions opts;
    opts.client.mechanism = Mechanism::none;
    opts.high_dim = HighDim::on;
    opts.screening.threshold = 1e6;
    opts.forced_d = 2;
    EXPECT_THROW(run_fsir(clients, opts), RunError);
    opts.fallback_unscreened = true;
    const auto res = run_fsir(clients, opts);
    EXPECT_FALSE(res.screened);
    EXPECT_EQ(res.estimate.beta.rows(), 12);
}

TEST(RunFsir, AllClientsExcludedIsRunError) {
    const auto clients = model_clients(Model::III, 10, 25, 3, 82);
    FsirOptions opts;
    EXPECT_THROW(run_fsir(clients, opts), RunError);
}

TEST(RunFsir, ExcludedClientsAreReported) {
    auto clients = model_clients(Model::III, 10, 1000, 3, 83);
    clients.push_back(model_clients(Model::III, 10, 25, 1, 84)[0]);
    FsirOptions opts;
    opts.client.cov_noise = CovNoise::unit;
    opts.forced_d = 2;
    const auto res = run_fsir(clients, opts);
    EXPECT_EQ(res.excluded, (std::vector<std::uint64_t>{3}));
    EXPECT_EQ(res.state.uploads, 3u);
}

TEST(Trace, LinesAreJsonWithChecksums) {
    const auto clients = model_clients(Model::III, 10, 500, 3, 85);
    FsirOptions opts;
    opts.client.cov_noise = CovNoise::unit;
    opts.trace = true;
    opts.run_id = "unit";
    opts.replication = 4;
    opts.forced_d = 2;
    const auto res = run_fsir(clients, opts);
    ASSERT_FALSE(res.trace.empty());
    int uploads = 0;
    bool merged = false, estimated = false;
    for (const auto& line : res.trace) {
        const auto j = nlohmann::json::parse(line);
        EXPECT_EQ(j.at("run"), "unit");
        EXPECT_EQ(j.at("replication"), 4);
        const auto ev = j.at("event").get<std::string>();
        if (ev == "client_upload") {
            ++uploads;
            EXPECT_EQ(j.at("m_checksum").get<std::string>().size(), 16u);
        }
        merged |= ev == "merge";
        estimated |= ev == "estimate";
    }
    EXPECT_EQ(uploads, 3);
    EXPECT_TRUE(merged && estimated);
    const auto again = run_fsir(clients, opts);
    EXPECT_EQ(again.trace, res.trace);
}

TEST(Trace, ChecksumIgnoresSignOfZeroAndSeesShape) {
    Matrix a = Matrix::Zero(2, 2), b = Matrix::Zero(2, 2);
    b(1, 0) = -0.0;
    EXPECT_EQ(matrix_checksum(a), matrix_checksum(b));
    EXPECT_NE(matrix_checksum(Matrix::Zero(1, 4)), matrix_checksum(Matrix::Zero(4, 1)));
    b(1, 0) = 1e-300;
    EXPECT_NE(matrix_checksum(a), matrix_checksum(b));
}
