#include "dmcquant/dmc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace dmcquant {

namespace {

double column_sum(const Dmc& ch, int j) {
  double s = 0.0;
  for (const auto& row : ch.likelihoods) s += row[j];
  return s;
}

// Relative equality of the ratios r0[i]/r1[i] and s0/s1, written with cross
// products so that 0 and +inf ratios compare cleanly.
bool ratios_equal(double a0, double a1, double b0, double b1, double tol) {
  const double x = a0 * b1;
  const double y = b0 * a1;
  return std::fabs(x - y) <= tol * std::max(x, y);
}

}  // namespace

void validate_dmc(const Dmc& ch) {
  if (ch.likelihoods.empty()) throw ValidationError("channel has no outputs");
  if (ch.prior[0] < 0.0 || ch.prior[0] > 1.0 || ch.prior[1] < 0.0 || ch.prior[1] > 1.0)
    throw ValidationError("prior components must lie in [0, 1]");
  if (std::fabs(ch.prior[0] + ch.prior[1] - 1.0) > kPriorSumTol)
    throw ValidationError("prior does not sum to 1");
  for (const auto& row : ch.likelihoods)
    if (row[0] < 0.0 || row[1] < 0.0) throw ValidationError("negative likelihood entry");
  for (int j = 0; j < 2; ++j) {
    const double s = column_sum(ch, j);
    if (std::fabs(s - 1.0) > kColumnSumTol)
      throw ValidationError("conditional for input " + std::to_string(j) +
                            " sums to " + std::to_string(s) + ", expected 1");
  }
}

Dmc make_dmc(std::array<double, 2> prior, std::vector<std::array<double, 2>> likelihoods) {
  Dmc ch{prior, std::move(likelihoods)};
  validate_dmc(ch);
  for (int j = 0; j < 2; ++j) {
    const double s = column_sum(ch, j);
    for (auto& row : ch.likelihoods) row[j] /= s;
  }
  return ch;
}

double mutual_information(const Dmc& ch) {
  validate_dmc(ch);
  const double p0 = ch.prior[0];
  const double p1 = ch.prior[1];
  double mi = 0.0;
  for (const auto& row : ch.likelihoods) {
    const double s = p0 * row[0] + p1 * row[1];  // P(Y = i)
    if (s <= 0.0) continue;
    if (p0 > 0.0 && row[0] > 0.0) mi += p0 * row[0] * std::log2(row[0] / s);
    if (p1 > 0.0 && row[1] > 0.0) mi += p1 * row[1] * std::log2(row[1] / s);
  }
  return mi;
}

bool SortMergeResult::is_identity() const {
  if (channel.num_outputs() != static_cast<int>(group_of_original.size())) return false;
  for (size_t i = 0; i < group_of_original.size(); ++i)
    if (group_of_original[i] != static_cast<int32_t>(i)) return false;
  return true;
}

SortMergeResult sort_and_merge(const Dmc& ch, double merge_tol) {
  validate_dmc(ch);
  const int n = ch.num_outputs();

  std::vector<int32_t> kept;
  kept.reserve(n);
  for (int i = 0; i < n; ++i)
    if (ch.likelihoods[i][0] > 0.0 || ch.likelihoods[i][1] > 0.0) kept.push_back(i);
  if (kept.empty()) throw ValidationError("all channel outputs have zero likelihood");

  // Ascending likelihood ratio P(i|0)/P(i|1); cross products avoid 0/inf.
  std::stable_sort(kept.begin(), kept.end(), [&](int32_t a, int32_t b) {
    return ch.likelihoods[a][0] * ch.likelihoods[b][1] <
           ch.likelihoods[b][0] * ch.likelihoods[a][1];
  });

  SortMergeResult out;
  out.channel.prior = ch.prior;
  out.group_of_original.assign(n, -1);

  for (int32_t idx : kept) {
    const auto& row = ch.likelihoods[idx];
    bool merged = false;
    if (!out.channel.likelihoods.empty()) {
      auto& grp = out.channel.likelihoods.back();
      if (ratios_equal(grp[0], grp[1], row[0], row[1], merge_tol)) {
        grp[0] += row[0];
        grp[1] += row[1];
        out.originals_of_group.back().push_back(idx);
        merged = true;
      }
    }
    if (!merged) {
      out.channel.likelihoods.push_back(row);
      out.originals_of_group.push_back({idx});
    }
    out.group_of_original[idx] = static_cast<int32_t>(out.originals_of_group.size()) - 1;
  }
  return out;
}

double partial_mi(const Dmc& ch, int a_prime, int a) {
  const int n = ch.num_outputs();
  if (a_prime < 0 || a_prime >= a || a > n)
    throw ValidationError("partial_mi indices must satisfy 0 <= a' < a <= I");
  const double p0 = ch.prior[0];
  const double p1 = ch.prior[1];
  double t0 = 0.0, t1 = 0.0;
  for (int i = a_prime; i < a; ++i) {
    t0 += ch.likelihoods[i][0];
    t1 += ch.likelihoods[i][1];
  }
  const double s = p0 * t0 + p1 * t1;
  double v = 0.0;
  if (s > 0.0) {
    if (p0 > 0.0 && t0 > 0.0) v += p0 * t0 * std::log2(t0 / s);
    if (p1 > 0.0 && t1 > 0.0) v += p1 * t1 * std::log2(t1 / s);
  }
  return v;
}

PartialMiTable::PartialMiTable(int num_inputs, int num_levels)
    : num_inputs_(num_inputs),
      num_levels_(num_levels),
      band_(num_inputs - num_levels + 1),
      values_(static_cast<size_t>(num_inputs) * static_cast<size_t>(band_),
              std::numeric_limits<double>::quiet_NaN()) {
  if (num_levels < 1 || num_levels > num_inputs)
    throw ValidationError("PartialMiTable requires 1 <= K <= I");
}

bool PartialMiTable::contains(int a_prime, int a) const {
  if (a_prime < 0 || a_prime >= num_inputs_) return false;
  const int hi = std::min(a_prime + band_, num_inputs_);
  return a > a_prime && a <= hi;
}

double PartialMiTable::at(int a_prime, int a) const {
  if (!contains(a_prime, a))
    throw ValidationError("partial-MI table cell (" + std::to_string(a_prime) + ", " +
                          std::to_string(a) + ") is outside the populated band");
  return values_[static_cast<size_t>(a_prime) * band_ + (a - a_prime - 1)];
}

double& PartialMiTable::cell(int a_prime, int a) {
  return values_[static_cast<size_t>(a_prime) * band_ + (a - a_prime - 1)];
}

PartialMiTable precompute_partial_mi(const Dmc& sorted_channel, int num_levels) {
  validate_dmc(sorted_channel);
  const int n = sorted_channel.num_outputs();
  if (num_levels < 1) throw ValidationError("K must be at least 1");
  if (num_levels > n) throw ValidationError("K exceeds the number of channel outputs");

  PartialMiTable table(n, num_levels);
  const double p0 = sorted_channel.prior[0];
  const double p1 = sorted_channel.prior[1];
  for (int ap = 0; ap < n; ++ap) {
    const int hi = std::min(ap + table.band_width(), n);
    double t0 = 0.0, t1 = 0.0;  // running sums over the group
    for (int a = ap + 1; a <= hi; ++a) {
      t0 += sorted_channel.likelihoods[a - 1][0];
      t1 += sorted_channel.likelihoods[a - 1][1];
      const double s = p0 * t0 + p1 * t1;
      double v = 0.0;
      if (s > 0.0) {
        if (p0 > 0.0 && t0 > 0.0) v += p0 * t0 * std::log2(t0 / s);
        if (p1 > 0.0 && t1 > 0.0) v += p1 * t1 * std::log2(t1 / s);
      }
      table.cell(ap, a) = v;
    }
  }
  return table;
}

double pmi_function(double c, double b, double total_c, double total_b,
                    std::array<double, 2> prior) {
  if (!(total_c > 0.0) || !(total_b > 0.0) || total_c > 1.0 || total_b > 1.0)
    throw ValidationError("pmi_function requires 0 < C <= 1 and 0 < B <= 1");
  if (c < 0.0 || c > total_c || b < 0.0 || b > total_b)
    throw ValidationError("pmi_function requires 0 <= c <= C and 0 <= b <= B");
  if (!(prior[0] > 0.0) || !(prior[1] > 0.0))
    throw ValidationError("pmi_function requires a strictly positive prior");

  auto group = [&](double gc, double gb) {
    const double s = gc + gb;
    double v = 0.0;
    if (s > 0.0) {
      if (gc > 0.0) v += gc * std::log2((gc / prior[0]) / s);
      if (gb > 0.0) v += gb * std::log2((gb / prior[1]) / s);
    }
    return v;
  };
  return group(c, b) + group(total_c - c, total_b - b);
}

}  // namespace dmcquant
