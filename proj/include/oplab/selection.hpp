#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oplab/embedding.hpp"
#include "oplab/records.hpp"

namespace oplab {

struct SelectionResult {
    std::vector<std::size_t> chosen;  // in pick order
    double covering_radius = 0.0;
    std::string strategy;
};

// k-center objective value: max over points of min Euclidean distance to a center.
double covering_radius(const std::vector<EmbeddingVector>& points,
                       const std::vector<std::size_t>& centers);

// Greedy farthest-point k-center (2-approximation). The first center is the
// point farthest from the centroid; ties always break to the lowest index,
// which keeps the selection deterministic without a seed.
SelectionResult kcenter_greedy(const std::vector<EmbeddingVector>& points, std::size_t k);

// Exhaustive optimum for small instances (|points| <= 16); among optima the
// lexicographically smallest index tuple wins. Test oracle for the greedy.
SelectionResult kcenter_bruteforce(const std::vector<EmbeddingVector>& points, std::size_t k);

// n distinct indices drawn uniformly without replacement, in draw order.
std::vector<std::size_t> random_select(std::size_t count_total, std::size_t n, std::uint64_t seed);

// Equal per-score-class subsample. Classes absent from the input are ignored;
// the per-class quota is min(smallest present class, per_class_cap). Output is
// ordered by (score, original position).
std::vector<EftRecord> balanced_subset(const std::vector<EftRecord>& records,
                                       std::optional<std::size_t> per_class_cap, std::uint64_t seed);

}  // namespace oplab
