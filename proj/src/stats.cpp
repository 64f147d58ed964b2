#include "oplab/stats.hpp"

#include <cmath>

namespace oplab {

namespace {

double mean(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

double population_variance(const std::vector<double>& v) {
    const double m = mean(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return s / static_cast<double>(v.size());
}

}  // namespace

VarianceReport total_variance(const std::vector<std::vector<double>>& groups) {
    if (groups.empty()) throw ArgumentError("total_variance: need at least one group");
    for (const auto& g : groups) {
        if (g.empty()) throw ArgumentError("total_variance: groups must be non-empty");
    }
    VarianceReport report;
    report.groups = groups;
    std::vector<double> means;
    means.reserve(groups.size());
    double within_sum = 0.0;
    for (const auto& g : groups) {
        within_sum += population_variance(g);
        means.push_back(mean(g));
    }
    report.expected_within_var = within_sum / static_cast<double>(groups.size());
    report.var_of_means = population_variance(means);
    report.tv = report.expected_within_var + report.var_of_means;
    report.sqrt_tv = std::sqrt(report.tv);
    return report;
}

RewardHistogram reward_histogram(const std::vector<int>& scores) {
    RewardHistogram h;
    for (int s : scores) {
        if (s < 0 || s > 5) throw ArgumentError("reward_histogram: score outside [0,5]");
        ++h.counts[s];
    }
    const double total = static_cast<double>(scores.size());
    if (total == 0.0) return h;
    double entropy = 0.0;
    for (std::int64_t c : h.counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / total;
        entropy -= p * std::log(p);
    }
    h.normalized_entropy = entropy / std::log(6.0);
    return h;
}

RewardHistogram reward_histogram(const std::vector<EftRecord>& efts) {
    std::vector<int> scores;
    scores.reserve(efts.size());
    for (const auto& e : efts) scores.push_back(e.score);
    return reward_histogram(scores);
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw ArgumentError("pearson: size mismatch");
    if (x.size() < 2) throw ArgumentError("pearson: need at least two samples");
    const double mx = mean(x);
    const double my = mean(y);
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw ArgumentError("pearson: degenerate input with zero variance");
    }
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace oplab
