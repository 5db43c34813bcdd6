#pragma once

// Reference implementations used only by the tests. None of them calls the
// enumerator, and only the bucket counters call canonical_key.

#include "molex/graph.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

/// Upper-triangle bitmask of a labeled graph on n <= 8 vertices; bit index of
/// pair (i, j), i < j, follows the row-major order of the upper triangle.
using Mask = std::uint32_t;

std::vector<std::pair<int, int>> pair_list(int n);
molex::MolecularGraph graph_from_mask(int n, Mask mask);
bool degrees_at_most_4(int n, Mask mask);
bool connected(int n, Mask mask);

/// Smallest mask over all n! relabelings. Exponential; n <= 7.
Mask brute_canonical(int n, Mask mask);
Mask mask_of(const molex::MolecularGraph& g);

/// Number of isomorphism classes of graphs (connected or not) with max degree
/// 4, by edge count, via Burnside's lemma over cycle types of S_n.
std::vector<long long> burnside_counts(int n);

/// Classes by edge count found by bucketing every labeled graph with max
/// degree 4 under canonical_key.
std::vector<long long> labeled_bucket_counts(int n, bool connected_only);

/// Classes of trees with max degree 4, found by decoding every Pruefer
/// sequence whose labels appear at most three times.
long long pruefer_tree_classes(int n);

/// Index values straight from the defining formulas.
double chi_alpha(const molex::MolecularGraph& g, double alpha);
double platt_alpha(const molex::MolecularGraph& g, double alpha);
double oga_k(const molex::MolecularGraph& g, double k);
double randic(const molex::MolecularGraph& g);
double harmonic(const molex::MolecularGraph& g);

}  // namespace oracle
