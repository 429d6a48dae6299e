#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dynamo/graph.hpp"
#include "dynamo/rational.hpp"
#include "dynamo/rng.hpp"

namespace dynamo {

Graph gen_complete(int n);                 // K_n, n >= 2
Graph gen_cycle(int n);                    // C_n, n >= 3
Graph gen_path(int n);                     // P_n, n >= 2
Graph gen_star(int leaves);                // node 0 internal, 1..leaves pendant

/// Clique on k nodes 0..k-1, each clique node carrying n/k - 1 private
/// leaves; n nodes total. Requires k >= 2 and k | n.
Graph gen_clique_with_leaves(int k, int n);

/// Connected r-regular graph (even n) built from a path of (r+1)-cliques,
/// each missing one internal edge, closed by an r-regular circulant tail
/// with one edge rerouted to the chain ends. For odd n the even construction
/// on n-1 nodes gains an extra node adjacent to the first r chain gaps,
/// leaving exactly r nodes of degree r+1. Requires r >= 3.
Graph gen_regular_chain(int r, int n);

/// Clique of size ceil(1/(1-alpha)) bridged to a path on the remaining
/// nodes. Path nodes come first (0..), clique nodes last; the bridge joins
/// the first clique node to path node 0.
Graph gen_stable_tight(const Rational& alpha, int n);

Graph gen_petersen();

/// K_n minus a perfect matching {2i, 2i+1}; n even, n >= 4.
Graph gen_complete_minus_matching(int n);

/// Connected sample of G(n, p): edge probabilities i.i.d., resampled until
/// connected. Deterministic for a given generator state.
Graph gen_random_connected(int n, double p, SplitMix64& rng);

/// Uniform random labeled tree via a random Pruefer sequence.
Graph gen_random_tree(int n, SplitMix64& rng);

}  // namespace dynamo
