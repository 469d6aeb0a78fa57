#include "fsir/federation.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "fsir/error.hpp"

namespace fsir {

double ClientOptions::delta_for(Eigen::Index n) const {
    if (delta) return *delta;
    if (n < 2) throw InvalidInput("delta rule n^(-a) needs n >= 2");
    return std::pow(static_cast<double>(n), -delta_exponent);
}

PrivacyBudget ClientOptions::m_budget(Eigen::Index n) const {
    return PrivacyBudget{epsilon_m, delta_for(n), r};
}

PrivacyBudget ClientOptions::x_budget(Eigen::Index n) const {
    return PrivacyBudget{epsilon_x, delta_for(n), r};
}

std::optional<ClientUpload> client_pipeline(const LabeledDataset& d, const ClientOptions& opts,
                                            SeededRng& rng, std::uint64_t client_id) {
    if (d.n() == 0) throw InvalidInput(fmt::format("client {}: empty dataset", client_id));
    const PrivacyBudget mb = opts.m_budget(d.n());
    if (opts.mechanism != Mechanism::none && !budget_check(d.n(), mb, d.p(), opts.sigma0))
        return std::nullopt;

    const SliceMeanMatrix m_bar = slice_mean_matrix(d, opts.r);
    const CovarianceEstimate cov = covariance_estimate(d, opts.r);

    ClientUpload up;
    up.n = d.n();
    up.mechanism = opts.mechanism;
    up.c_r = cov.c_r;
    up.client_id = client_id;
    switch (opts.mechanism) {
        case Mechanism::none:
            up.m_tilde = m_bar.m;
            up.sigma_tilde = cov.sigma;
            return up;
        case Mechanism::iid:
            up.m_tilde = iid_gaussian_mechanism(m_bar, mb, rng);
            break;
        case Mechanism::vgm: {
            VgmResult res = vgm_mechanism(m_bar, mb, rng, opts.vgm_bound);
            up.m_tilde = std::move(res.m_tilde);
            up.d_hat = res.d_hat;
            up.vgm = std::move(res.spec);
            break;
        }
    }
    up.sigma_tilde = private_covariance(cov, opts.x_budget(d.n()), rng, opts.cov_noise);
    return up;
}

ServerState server_merge(std::vector<ClientUpload> uploads) {
    if (uploads.empty()) throw ProtocolError("server_merge: no uploads");
    std::stable_sort(uploads.begin(), uploads.end(),
                     [](const ClientUpload& a, const ClientUpload& b) {
                         return a.client_id < b.client_id;
                     });
    const Eigen::Index p = uploads.front().m_tilde.rows();
    const Eigen::Index h = uploads.front().m_tilde.cols();

    ServerState state;
    state.merged_m = Matrix::Zero(p, h);
    state.merged_sigma = Matrix::Zero(p, p);
    for (const auto& up : uploads) {
        if (up.m_tilde.rows() != p || up.m_tilde.cols() != h || up.sigma_tilde.rows() != p ||
            up.sigma_tilde.cols() != p)
            throw ProtocolError(fmt::format(
                "server_merge: client {} uploaded M {}x{} / Sigma {}x{}, expected {}x{} / {}x{}",
                up.client_id, up.m_tilde.rows(), up.m_tilde.cols(), up.sigma_tilde.rows(),
                up.sigma_tilde.cols(), p, h, p, p));
        if (up.n < 1) throw ProtocolError(fmt::format("server_merge: client {} has n = 0", up.client_id));
        state.total_n += up.n;
    }
    const double total = static_cast<double>(state.total_n);
    for (const auto& up : uploads) {
        const double w = static_cast<double>(up.n) / total;
        state.merged_m += w * up.m_tilde;
        state.merged_sigma += w * up.sigma_tilde;
    }
    state.uploads = uploads.size();
    return state;
}

SubspaceEstimate estimate_subspace(const ServerState& state, std::optional<int> forced_d,
                                   double ridge) {
    const Matrix& m = state.merged_m;
    if (m.size() == 0) throw InvalidInput("estimate_subspace: empty server state");
    const Eigen::Index p = m.rows();
    const Eigen::Index count = std::min(m.rows(), m.cols());
    if (forced_d && (*forced_d < 1 || *forced_d > p))
        throw InvalidInput(fmt::format("estimate_subspace: forced d = {} outside 1..{}", *forced_d, p));

    const bool need_full = forced_d && *forced_d > count;
    const SvdResult dec = svd(m, need_full ? SvdBasis::full_left : SvdBasis::thin);

    SubspaceEstimate est;
    est.d_rule = largest_eigengap(dec.s, count);
    est.d = forced_d.value_or(est.d_rule);
    const SpdSolution sol = solve_spd(state.merged_sigma, dec.u.leftCols(est.d), ridge);
    est.beta = sol.x;
    est.ridge = sol.ridge;
    return est;
}

SubspaceEstimate embed(const SubspaceEstimate& est, Eigen::Index p_global) {
    if (!est.embedding) throw InvalidInput("embed: estimate carries no embedding");
    const auto& idx = est.embedding->indices;
    if (static_cast<Eigen::Index>(idx.size()) != est.beta.rows())
        throw InvalidInput("embed: embedding size does not match beta rows");

    SubspaceEstimate out = est;
    out.embedding.reset();
    out.beta = Matrix::Zero(p_global, est.beta.cols());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 1 || idx[i] > p_global)
            throw InvalidInput(fmt::format("embed: index {} outside 1..{}", idx[i], p_global));
        out.beta.row(idx[i] - 1) = est.beta.row(static_cast<Eigen::Index>(i));
    }
    return out;
}

std::uint64_t client_stream(std::uint64_t replication, std::uint64_t client, std::uint64_t purpose) {
    return derive_stream({replication, client, purpose});
}

FsirResult run_fsir(const std::vector<LabeledDataset>& clients, const FsirOptions& opts) {
    if (clients.empty()) throw InvalidInput("run_fsir: no clients");
    const Eigen::Index p = clients.front().p();
    Eigen::Index min_n = clients.front().n();
    for (std::size_t k = 0; k < clients.size(); ++k) {
        if (clients[k].p() != p)
            throw ProtocolError(fmt::format("run_fsir: client {} has p = {}, expected {}", k,
                                            clients[k].p(), p));
        if (!clients[k].labeled())
            throw InvalidInput(fmt::format("run_fsir: client {} has no slice labels", k));
        min_n = std::min(min_n, clients[k].n());
    }

    ProtocolTrace trace(opts.run_id, opts.replication);
    FsirResult result;

    bool screen = opts.high_dim == HighDim::on || (opts.high_dim == HighDim::automatic && p > min_n);
    std::vector<LabeledDataset> restricted;
    if (screen) {
        std::vector<ClientVote> votes;
        votes.reserve(clients.size());
        for (std::size_t k = 0; k < clients.size(); ++k) {
            votes.push_back(ccmd_client(clients[k], opts.client.r, opts.screening));
            if (opts.trace)
                trace.screen_vote(k, {votes.back().multiplicity.begin(),
                                      votes.back().multiplicity.end()});
        }
        ActiveSet active = ccmd_aggregate(votes, static_cast<int>(clients.size()));
        if (opts.trace) trace.active_set(active.indices);
        if (active.empty()) {
            if (!opts.fallback_unscreened)
                throw RunError("run_fsir: screening produced an empty active set");
            screen = false;
        } else {
            restricted.reserve(clients.size());
            for (const auto& c : clients) restricted.push_back(restrict_dataset(c, active));
            result.active = std::move(active);
        }
    }
    result.screened = screen;
    const std::vector<LabeledDataset>& work = screen ? restricted : clients;

    for (std::size_t k = 0; k < work.size(); ++k) {
        SeededRng rng(opts.seed, client_stream(opts.replication, k, kStreamNoise));
        auto up = client_pipeline(work[k], opts.client, rng, k);
        if (!up) {
            result.excluded.push_back(k);
            if (opts.trace)
                trace.exclusion(k, work[k].n(),
                                min_sample_size(opts.client.m_budget(work[k].n()), work[k].p(),
                                                opts.client.sigma0));
            continue;
        }
        if (opts.trace)
            trace.client_upload(k, up->n, mechanism_name(up->mechanism), up->d_hat, up->m_tilde,
                                up->sigma_tilde);
        result.uploads.push_back(std::move(*up));
    }
    if (result.uploads.empty())
        throw RunError(fmt::format("run_fsir: all {} clients failed the minimal sample size check",
                                   work.size()));

    result.state = server_merge(result.uploads);
    if (opts.trace)
        trace.merge(result.state.uploads, result.state.total_n, result.state.merged_m,
                    result.state.merged_sigma);

    SubspaceEstimate est = estimate_subspace(result.state, opts.forced_d, opts.ridge);
    if (screen) {
        est.embedding = result.active;
        est = embed(est, p);
    }
    if (opts.trace) trace.estimate(est.d, est.d_rule, est.ridge, est.beta);
    result.estimate = std::move(est);
    result.trace = trace.lines();
    return result;
}

}  // namespace fsir
