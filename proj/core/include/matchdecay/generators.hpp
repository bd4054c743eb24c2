#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matchdecay/graph.hpp"
#include "matchdecay/rng.hpp"

namespace matchdecay {

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);

/// Random d-regular graph via the pairing model, resampling on loops,
/// parallel edges or disconnection. Requires n*d even and d < n.
Graph make_random_regular(int n, int d, Rng& rng);

/// G(n, p), largest connected component, vertices relabeled in increasing
/// order of their original ids.
Graph make_erdos_renyi_lcc(int n, double p, Rng& rng);

/// Ball of graph radius R around a fixed origin vertex of the infinite
/// hexagonal (honeycomb) lattice, built from the two-sublattice axial
/// embedding. The origin has vertex id 0; maximum degree is 3.
Graph make_hex_patch(int radius);

/// Rooted tree for the message-passing recursions: vertex 0 is the root
/// (degree exactly 1), vertex 1 its unique neighbor. One branch is forced
/// to reach the requested depth (counted in edges from the root); every
/// other vertex above the deepest level draws its child count uniformly
/// from {min_children, ..., max_children}.
Graph make_rooted_depth_tree(int depth, int min_children, int max_children, Rng& rng);

/// Uniform random attachment tree on n vertices with a degree cap.
Graph make_random_attachment_tree(int n, int max_degree, Rng& rng);

/// Two rooted depth-(depth) trees with child counts in {1..max_children},
/// joined at their roots by edge id 0. With max_children == 1 this is a
/// path with a central edge.
Graph make_double_tree(int depth, int max_children, Rng& rng);

/// Balanced D-regular tree of the given depth: the root has D children,
/// every other internal vertex D-1. Used as a finite exhaustion stage of
/// the infinite D-regular tree.
Graph make_regular_tree(int degree, int depth);

struct FamilySpec {
    std::string family;  // path|cycle|complete|tree|random_regular|erdos_renyi|hex_patch
    int n = 0;
    int d = 3;
    double p = 0.3;
    int depth = 4;
    int min_children = 1;
    int max_children = 2;
    int radius = 3;
};

/// Dispatch used by the CLI `gen` subcommand.
Graph generate(const FamilySpec& spec, std::uint64_t seed);

}  // namespace matchdecay
