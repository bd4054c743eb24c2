#pragma once

#include <cstdint>
#include <vector>

#include "matchdecay/graph.hpp"
#include "matchdecay/rng.hpp"

namespace matchdecay {

enum class WeightDistribution { exp1, uniform01 };

/// One strictly positive weight per edge id of the base graph. Weights are
/// pairwise distinct (the sampler resamples on the measure-zero float
/// collision), preserving the generic-weights assumption.
class WeightAssignment {
public:
    WeightAssignment() = default;
    explicit WeightAssignment(std::vector<double> weights);

    double operator[](EdgeId e) const { return weights_[e]; }
    int size() const { return static_cast<int>(weights_.size()); }
    const std::vector<double>& values() const { return weights_; }

private:
    std::vector<double> weights_;
};

WeightAssignment sample_weights(const Graph& g, WeightDistribution dist, std::uint64_t seed);
WeightAssignment sample_weights(const Graph& g, WeightDistribution dist, Rng& rng);

}  // namespace matchdecay
