#pragma once

#include <stdexcept>
#include <vector>

#include "matchdecay/graph.hpp"
#include "matchdecay/weights.hpp"

namespace matchdecay {

/// Set of pairwise non-adjacent edges, kept as sorted edge ids.
struct Matching {
    std::vector<EdgeId> edge_ids;

    bool contains(EdgeId e) const;
};

bool is_valid_matching(const SubgraphView& g, const Matching& m);

double matching_weight(const Matching& m, const WeightAssignment& w);

enum class SolverKind { tree_dp, branch_bound, enumeration };

struct MwmResult {
    Matching matching;
    double total_weight = 0.0;
    bool certified = false;
    SolverKind solver = SolverKind::enumeration;
};

struct MwmOptions {
    int max_edges = 30;  // cap for the exhaustive solver
};

struct SolverCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exhaustive include/exclude recursion over edges with a weight-halving
/// prune: at any node, the achievable extra weight is at most half the sum
/// over free vertices of their heaviest remaining incident edge. Exact for
/// generic weights; equal-weight ties go to the lexicographically smallest
/// edge-id set.
MwmResult mwm_enumerate(const SubgraphView& g, const WeightAssignment& w, const MwmOptions& opts = {});
MwmResult mwm_enumerate(const Graph& g, const WeightAssignment& w, const MwmOptions& opts = {});

/// Linear-time solver for trees: one post-order bonus pass, then the
/// symmetric edge criterion w_e > B(u, T_{v->u}) + B(v, T_{u->v}) decides
/// each edge. Requires the effective graph to be a connected tree.
MwmResult mwm_tree(const SubgraphView& t, const WeightAssignment& w);
MwmResult mwm_tree(const Graph& t, const WeightAssignment& w);

/// Routes to the tree DP when the effective graph is a forest (any number
/// of components), otherwise to the exhaustive solver.
MwmResult mwm_solve(const SubgraphView& g, const WeightAssignment& w, const MwmOptions& opts = {});

enum class CertStatus { certified, refuted, inconclusive };

struct CertifyOptions {
    long long max_paths = 1'000'000;  // enumeration budget on alternating paths
};

/// Optimality certificate: enumerates alternating self-avoiding paths and
/// even alternating cycles and searches for an augmenting one (endpoint
/// condition on non-matching end edges, off-matching weight strictly
/// larger). `certified` means none exists; `inconclusive` means the budget
/// ran out first.
CertStatus certify_no_augmenting_path(const SubgraphView& g, const WeightAssignment& w,
                                      const Matching& m, const CertifyOptions& opts = {});
CertStatus certify_no_augmenting_path(const Graph& g, const WeightAssignment& w,
                                      const Matching& m, const CertifyOptions& opts = {});

/// All matchings of the effective graph (test/oracle helper; exponential).
std::vector<Matching> enumerate_all_matchings(const SubgraphView& g, int max_edges = 24);

}  // namespace matchdecay
