#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "oplab/records.hpp"

namespace oplab {

// Total-variance decomposition over groups of runs:
// tv = E[within-group variance] + Var(group means), population variances and
// an unweighted mean over groups throughout.
struct VarianceReport {
    std::vector<std::vector<double>> groups;
    double expected_within_var = 0.0;
    double var_of_means = 0.0;
    double tv = 0.0;
    double sqrt_tv = 0.0;
};

VarianceReport total_variance(const std::vector<std::vector<double>>& groups);

struct RewardHistogram {
    std::array<std::int64_t, 6> counts{};   // scores 0..5
    double normalized_entropy = 0.0;        // Shannon entropy / ln 6
};

RewardHistogram reward_histogram(const std::vector<int>& scores);
RewardHistogram reward_histogram(const std::vector<EftRecord>& efts);

// Standard Pearson correlation; throws on size mismatch, fewer than two
// samples, or zero variance in either input.
double pearson(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace oplab
