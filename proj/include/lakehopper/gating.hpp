#pragma once

// Confidence scoring and construction of the verifier query set: a
// prediction whose confidence falls below the threshold is forwarded for
// verification, everything at or above it is trusted.

#include <cmath>
#include <span>
#include <vector>

#include "lakehopper/errors.hpp"

namespace lakehopper {

// Maximum softmax probability of a logits vector, computed with
// max-subtraction so large logits cannot overflow. Range [1/n, 1].
inline double confidence(std::span<const double> logits) {
    if (logits.empty()) throw DataError("confidence: empty logits vector");
    double top = logits[0];
    for (double v : logits) top = std::max(top, v);
    double sum = 0.0;
    for (double v : logits) sum += std::exp(v - top);
    return 1.0 / sum;  // exp(top - top) / sum
}

struct QueryCandidate {
    int column_id = -1;
    int predicted_type = -1;
    std::vector<double> logits;
    double confidence = 0.0;
};

// Keeps candidates with confidence strictly below delta, preserving input
// order. Confidence exactly at the threshold is trusted and excluded.
inline std::vector<QueryCandidate> build_query_set(const std::vector<QueryCandidate>& candidates, double delta) {
    if (delta <= 0.0 || delta > 1.0) throw ConfigError("confidence threshold must be in (0,1]");
    std::vector<QueryCandidate> query_set;
    for (const auto& c : candidates) {
        if (c.confidence < delta) query_set.push_back(c);
    }
    return query_set;
}

}  // namespace lakehopper
