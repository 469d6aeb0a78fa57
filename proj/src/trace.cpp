#include "fsir/trace.hpp"

#include <cstring>

#include <fmt/format.h>
#include <json.hpp>

namespace fsir {
namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

std::uint64_t fnv_bytes(std::uint64_t h, const void* data, std::size_t size) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < size; ++i) {
        h ^= bytes[i];
        h *= kFnvPrime;
    }
    return h;
}

}  // namespace

std::uint64_t matrix_checksum(const Matrix& m) {
    std::uint64_t h = kFnvOffset;
    const std::int64_t shape[2] = {m.rows(), m.cols()};
    h = fnv_bytes(h, shape, sizeof shape);
    for (Eigen::Index c = 0; c < m.cols(); ++c)
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            const double v = m(r, c) == 0.0 ? 0.0 : m(r, c);  // fold -0 into +0
            h = fnv_bytes(h, &v, sizeof v);
        }
    return h;
}

std::string checksum_hex(std::uint64_t value) { return fmt::format("{:016x}", value); }

namespace {

nlohmann::ordered_json header(std::string_view event, const std::string& run,
                              std::uint64_t replication) {
    nlohmann::ordered_json j;
    j["event"] = event;
    j["run"] = run;
    j["replication"] = replication;
    return j;
}

}  // namespace

void ProtocolTrace::client_upload(std::uint64_t client, Eigen::Index n,
                                  std::string_view mechanism, int d_hat, const Matrix& m_tilde,
                                  const Matrix& sigma_tilde) {
    auto j = header("client_upload", run_id_, replication_);
    j["client"] = client;
    j["n"] = n;
    j["mechanism"] = mechanism;
    j["d_hat"] = d_hat;
    j["m_checksum"] = checksum_hex(matrix_checksum(m_tilde));
    j["sigma_checksum"] = checksum_hex(matrix_checksum(sigma_tilde));
    lines_.push_back(j.dump());
}

void ProtocolTrace::exclusion(std::uint64_t client, Eigen::Index n, std::int64_t required) {
    auto j = header("exclusion", run_id_, replication_);
    j["client"] = client;
    j["n"] = n;
    j["required_n"] = required;
    lines_.push_back(j.dump());
}

void ProtocolTrace::screen_vote(std::uint64_t client,
                                const std::vector<std::pair<int, int>>& pairs) {
    auto j = header("screen_vote", run_id_, replication_);
    j["client"] = client;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [index, count] : pairs) arr.push_back({index, count});
    j["votes"] = std::move(arr);
    lines_.push_back(j.dump());
}

void ProtocolTrace::active_set(const std::vector<int>& indices) {
    auto j = header("active_set", run_id_, replication_);
    j["indices"] = indices;
    lines_.push_back(j.dump());
}

void ProtocolTrace::merge(std::size_t uploads, Eigen::Index total_n, const Matrix& m,
                          const Matrix& sigma) {
    auto j = header("merge", run_id_, replication_);
    j["uploads"] = uploads;
    j["total_n"] = total_n;
    j["m_checksum"] = checksum_hex(matrix_checksum(m));
    j["sigma_checksum"] = checksum_hex(matrix_checksum(sigma));
    lines_.push_back(j.dump());
}

void ProtocolTrace::estimate(int d, int d_rule, double ridge, const Matrix& beta) {
    auto j = header("estimate", run_id_, replication_);
    j["d"] = d;
    j["d_rule"] = d_rule;
    j["ridge"] = ridge;
    j["beta_checksum"] = checksum_hex(matrix_checksum(beta));
    lines_.push_back(j.dump());
}

}  // namespace fsir
