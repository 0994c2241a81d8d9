#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ferrers {

/// Structured outcome of one machine-checked claim. A failed check is a
/// verdict with witnesses, not an exception: the CLI surfaces these as
/// reproduction reports.
struct ClaimVerdict {
    ClaimVerdict() = default;
    ClaimVerdict(std::string id, std::string range)
        : claim_id(std::move(id)), parameter_range(std::move(range)) {}

    std::string claim_id;
    std::string parameter_range;
    bool holds = true;
    /// (where, detail) pairs: failure witnesses, or notable confirmations
    /// such as discovered thresholds.
    std::vector<std::pair<std::string, std::string>> witnesses;

    void fail(std::string where, std::string detail) {
        holds = false;
        witnesses.emplace_back(std::move(where), std::move(detail));
    }
    void note(std::string where, std::string detail) {
        witnesses.emplace_back(std::move(where), std::move(detail));
    }
};

}  // namespace ferrers
