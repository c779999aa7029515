#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "roofcalc/limits.hpp"
#include "roofcalc/numeric.hpp"
#include "roofcalc/weyl.hpp"

namespace roofcalc {

/// Weights with strictly positive multiplicities, ordered lexicographically.
class WeightMultiset {
public:
  using Map = std::map<Weight, std::int64_t>;

  WeightMultiset() = default;
  explicit WeightMultiset(Map entries);

  void add(const Weight& w, std::int64_t mult = 1);
  std::int64_t multiplicity(const Weight& w) const;
  const Map& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t distinct() const noexcept { return entries_.size(); }
  std::int64_t total() const;

  /// Every weight negated (the character of the dual module).
  WeightMultiset dual() const;
  WeightMultiset shifted(const Weight& by) const;

  friend bool operator==(const WeightMultiset&, const WeightMultiset&) = default;

private:
  Map entries_;
};

/// The irreducible representation V_P(chi) of the parabolic P.
struct LeviIrrep {
  Parabolic parabolic;
  Weight highest_weight;
};

/// <chi, alpha_i^vee> >= 0 for every retained node i.
bool is_dominant(const Weight& chi, const Parabolic& p);

/// Weyl dimension formula over the Levi of p (over G when nothing is crossed).
/// Throws ValidationError naming the first node where chi fails dominance.
BigInt weyl_dimension(const Parabolic& p, const Weight& chi);
BigInt weyl_dimension(RootSystemPtr sys, const Weight& chi);

/// All weights of V_P(chi) with multiplicities (Freudenthal recursion on the
/// Levi-dominant weights, then W_I orbits).
WeightMultiset weight_multiset(const LeviIrrep& rep, const Limits& limits = {});

/// Weights of the p-th exterior power: p-fold sums over sub-multisets.
WeightMultiset exterior_power(const WeightMultiset& weights, int p, const Limits& limits = {});

/// Splits a W_I-stable multiset into Levi irreducibles by peeling off the
/// highest dominant weight (max height, ties broken lexicographically).
/// Highest weights are returned in peeling order, repeated by multiplicity.
std::vector<Weight> decompose_levi(const WeightMultiset& weights, const Parabolic& p,
                                   const Limits& limits = {});

/// -w0(chi) for the longest element w0 of W_I: the highest weight of V_P(chi)^dual.
Weight dual_highest_weight(const Weight& chi, const Parabolic& p);

/// dim V_P(chi) == 1, decided through the Levi Weyl dimension formula.
bool line_bundle_rank_check(const Weight& chi, const Parabolic& p);

/// chi_i > 0 on crossed nodes and chi_i >= 0 on retained nodes.
bool is_ample(const Weight& chi, const Parabolic& p);

} // namespace roofcalc
