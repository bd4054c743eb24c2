#include "matchdecay/weights.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace matchdecay {

WeightAssignment::WeightAssignment(std::vector<double> weights) : weights_(std::move(weights)) {
    for (double w : weights_)
        if (!(w > 0.0)) throw std::invalid_argument("weights: all weights must be strictly positive");
}

WeightAssignment sample_weights(const Graph& g, WeightDistribution dist, Rng& rng) {
    std::vector<double> w;
    w.reserve(g.n_edges());
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(g.n_edges() * 2);
    for (EdgeId e = 0; e < g.n_edges(); ++e) {
        double x;
        std::uint64_t bits;
        do {
            x = dist == WeightDistribution::exp1 ? rng.next_exp1() : rng.next_unit_positive();
            bits = std::bit_cast<std::uint64_t>(x);
        } while (!seen.insert(bits).second);
        w.push_back(x);
    }
    return WeightAssignment(std::move(w));
}

WeightAssignment sample_weights(const Graph& g, WeightDistribution dist, std::uint64_t seed) {
    Rng rng(seed);
    return sample_weights(g, dist, rng);
}

}  // namespace matchdecay
