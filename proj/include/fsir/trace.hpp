#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fsir/numerics.hpp"

namespace fsir {

/// FNV-1a over the IEEE-754 bytes of the entries in column-major order,
/// prefixed by the shape. Identical matrices give identical checksums on
/// every little-endian platform.
std::uint64_t matrix_checksum(const Matrix& m);

/// Hex rendering used in trace lines.
std::string checksum_hex(std::uint64_t value);

/// Line-delimited JSON protocol trace. Each event becomes one line holding
/// at least "event", "run" and "replication"; events are kept in memory so
/// that parallel replications can be written out in a fixed order.
class ProtocolTrace {
public:
    ProtocolTrace(std::string run_id, std::uint64_t replication)
        : run_id_(std::move(run_id)), replication_(replication) {}

    void client_upload(std::uint64_t client, Eigen::Index n, std::string_view mechanism,
                       int d_hat, const Matrix& m_tilde, const Matrix& sigma_tilde);
    void exclusion(std::uint64_t client, Eigen::Index n, std::int64_t required);
    void screen_vote(std::uint64_t client, const std::vector<std::pair<int, int>>& pairs);
    void active_set(const std::vector<int>& indices);
    void merge(std::size_t uploads, Eigen::Index total_n, const Matrix& m, const Matrix& sigma);
    void estimate(int d, int d_rule, double ridge, const Matrix& beta);

    const std::vector<std::string>& lines() const { return lines_; }

private:
    std::string run_id_;
    std::uint64_t replication_;
    std::vector<std::string> lines_;
};

}  // namespace fsir
