#include "oplab/selection.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "oplab/rng.hpp"

namespace oplab {

namespace {

void check_uniform_dims(const std::vector<EmbeddingVector>& points) {
    if (points.empty()) throw ArgumentError("selection: points must be non-empty");
    const std::size_t dim = points.front().dim();
    for (const auto& p : points) {
        if (p.dim() != dim) throw ArgumentError("selection: points must share one dimension");
    }
}

double dist(const EmbeddingVector& a, const EmbeddingVector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        const double d = a.values[i] - b.values[i];
        s += d * d;
    }
    return std::sqrt(s);
}

}  // namespace

double covering_radius(const std::vector<EmbeddingVector>& points,
                       const std::vector<std::size_t>& centers) {
    check_uniform_dims(points);
    if (centers.empty()) throw ArgumentError("covering_radius: centers must be non-empty");
    for (std::size_t c : centers) {
        if (c >= points.size()) throw ArgumentError("covering_radius: center index out of range");
    }
    double radius = 0.0;
    for (const auto& p : points) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t c : centers) best = std::min(best, dist(p, points[c]));
        radius = std::max(radius, best);
    }
    return radius;
}

SelectionResult kcenter_greedy(const std::vector<EmbeddingVector>& points, std::size_t k) {
    check_uniform_dims(points);
    const std::size_t n = points.size();
    if (k < 1 || k > n) throw ArgumentError("kcenter_greedy: k must be in [1, |points|]");

    const std::size_t dim = points.front().dim();
    EmbeddingVector centroid;
    centroid.values.assign(dim, 0.0);
    for (const auto& p : points) {
        for (std::size_t i = 0; i < dim; ++i) centroid.values[i] += p.values[i];
    }
    for (double& x : centroid.values) x /= static_cast<double>(n);

    std::size_t first = 0;
    double first_dist = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = dist(points[i], centroid);
        if (d > first_dist) {
            first_dist = d;
            first = i;
        }
    }

    SelectionResult result;
    result.strategy = "kcenter_greedy";
    result.chosen.push_back(first);

    std::vector<double> min_dist(n);
    for (std::size_t i = 0; i < n; ++i) min_dist[i] = dist(points[i], points[first]);

    while (result.chosen.size() < k) {
        std::size_t next = 0;
        double best = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (min_dist[i] > best) {
                best = min_dist[i];
                next = i;
            }
        }
        result.chosen.push_back(next);
        for (std::size_t i = 0; i < n; ++i) {
            min_dist[i] = std::min(min_dist[i], dist(points[i], points[next]));
        }
    }

    result.covering_radius = *std::max_element(min_dist.begin(), min_dist.end());
    return result;
}

SelectionResult kcenter_bruteforce(const std::vector<EmbeddingVector>& points, std::size_t k) {
    check_uniform_dims(points);
    const std::size_t n = points.size();
    if (n > 16) throw ArgumentError("kcenter_bruteforce: at most 16 points (exhaustive search)");
    if (k < 1 || k > n) throw ArgumentError("kcenter_bruteforce: k must be in [1, |points|]");

    std::vector<std::size_t> subset(k);
    for (std::size_t i = 0; i < k; ++i) subset[i] = i;

    SelectionResult best;
    best.strategy = "kcenter_bruteforce";
    best.covering_radius = std::numeric_limits<double>::infinity();

    // Lexicographic enumeration; strict improvement keeps the smallest tuple among optima.
    while (true) {
        const double r = covering_radius(points, subset);
        if (r < best.covering_radius) {
            best.covering_radius = r;
            best.chosen = subset;
        }
        std::size_t i = k;
        while (i > 0 && subset[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++subset[i - 1];
        for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
    return best;
}

std::vector<std::size_t> random_select(std::size_t count_total, std::size_t n, std::uint64_t seed) {
    if (n > count_total) throw ArgumentError("random_select: n exceeds count_total");
    Rng rng(seed);
    return rng.sample_indices(count_total, n);
}

std::vector<EftRecord> balanced_subset(const std::vector<EftRecord>& records,
                                       std::optional<std::size_t> per_class_cap,
                                       std::uint64_t seed) {
    if (records.empty()) return {};

    std::array<std::vector<std::size_t>, 6> by_class;
    for (std::size_t i = 0; i < records.size(); ++i) by_class[records[i].score].push_back(i);

    std::size_t quota = std::numeric_limits<std::size_t>::max();
    for (const auto& cls : by_class) {
        if (!cls.empty()) quota = std::min(quota, cls.size());
    }
    if (per_class_cap) quota = std::min(quota, *per_class_cap);

    Rng rng(seed);
    std::vector<std::size_t> selected;
    for (int score = 0; score <= 5; ++score) {
        const auto& cls = by_class[score];
        if (cls.empty()) continue;
        std::vector<std::size_t> picks = rng.sample_indices(cls.size(), quota);
        std::sort(picks.begin(), picks.end());  // original order within the class
        for (std::size_t p : picks) selected.push_back(cls[p]);
    }

    std::vector<EftRecord> out;
    out.reserve(selected.size());
    for (std::size_t i : selected) out.push_back(records[i]);
    return out;
}

}  // namespace oplab
