#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "dmcquant/common.hpp"

namespace dmcquant {

/// Binary-input discrete memoryless channel.
///
/// `likelihoods[i] = {P(Y=i | X=0), P(Y=i | X=1)}`; each conditional
/// (column of the 2 x I transition matrix) sums to 1.  All mutual-information
/// values in this library are in bits (log base 2).
struct Dmc {
  std::array<double, 2> prior{0.5, 0.5};
  std::vector<std::array<double, 2>> likelihoods;

  int num_outputs() const { return static_cast<int>(likelihoods.size()); }
};

/// Throws ValidationError unless `ch` satisfies the Dmc invariants
/// (prior sums to 1 within 1e-12, conditionals sum to 1 within 1e-9,
/// all entries nonnegative).
void validate_dmc(const Dmc& ch);

/// Builds a validated Dmc; conditionals are renormalized to sum exactly to 1.
Dmc make_dmc(std::array<double, 2> prior, std::vector<std::array<double, 2>> likelihoods);

/// I(X;Y) of the channel, in bits.  Zero-mass terms contribute 0.
double mutual_information(const Dmc& ch);

/// Outcome of sorting outputs by likelihood ratio and merging equal-ratio ones.
struct SortMergeResult {
  Dmc channel;  // outputs in strictly increasing P(i|0)/P(i|1) order
  /// Per original output: index of the merged output it belongs to, or -1 if
  /// the output had zero likelihood under both inputs and was dropped.
  std::vector<int32_t> group_of_original;
  /// Per merged output: the original output indices it absorbed.
  std::vector<std::vector<int32_t>> originals_of_group;

  bool is_identity() const;
};

/// Sorts channel outputs into strictly increasing likelihood-ratio order,
/// dropping zero-likelihood outputs and combining outputs whose ratios agree
/// within `merge_tol` (relative).  Mutual information is preserved.
/// Outputs with P(i|1)=0 sort last (ratio +inf); P(i|0)=0 sort first.
SortMergeResult sort_and_merge(const Dmc& ch, double merge_tol = kDefaultMergeTol);

/// Partial mutual information iota(a' -> a) of the output group {a'+1, ..., a}
/// (1-based, as a single quantizer output), in bits.  Requires 0 <= a' < a <= I.
double partial_mi(const Dmc& ch, int a_prime, int a);

/// Banded triangular table of iota(a' -> a) values.
///
/// Row a' in {0..I-1} holds a in {a'+1, ..., min(a'+1+I-K, I)}; wider groups
/// can never appear in a K-level quantizer with nonempty preimages.
class PartialMiTable {
 public:
  PartialMiTable(int num_inputs, int num_levels);

  bool contains(int a_prime, int a) const;
  double at(int a_prime, int a) const;  // throws ValidationError outside the band

  int num_inputs() const { return num_inputs_; }
  int num_levels() const { return num_levels_; }
  int band_width() const { return band_; }

  double& cell(int a_prime, int a);  // unchecked within-band access

 private:
  int num_inputs_;
  int num_levels_;
  int band_;  // I - K + 1
  std::vector<double> values_;
};

/// Fills the banded iota table with running conditional-mass sums, so the
/// total cost is O(I^2) regardless of group width.  Requires 1 <= K <= I and
/// a channel already in sorted order.
PartialMiTable precompute_partial_mi(const Dmc& sorted_channel, int num_levels);

/// Two-group partial mutual information function iota(c, b) over the joint
/// masses c (input-0 side) and b (input-1 side) assigned to the first group,
/// with group totals C and B.  Property-test surface for the symmetry /
/// convexity / lower-bound facts used by the optimality argument.
/// Requires 0 <= c <= C <= 1, 0 <= b <= B <= 1, C > 0, B > 0, positive prior.
double pmi_function(double c, double b, double total_c, double total_b,
                    std::array<double, 2> prior);

}  // namespace dmcquant
