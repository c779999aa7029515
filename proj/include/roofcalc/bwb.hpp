#pragma once

#include <map>
#include <optional>
#include <vector>

#include "roofcalc/numeric.hpp"
#include "roofcalc/weyl.hpp"

namespace roofcalc {

/// w . chi = w(chi + rho) - rho
Weight dot_action(const WeylElement& w, const Weight& chi);

/// Cohomology of the homogeneous bundle E_P(chi) = G x_P V_P(chi)^dual.
struct CohomologyResult {
  enum class Status { Vanishes, Single };

  Status status = Status::Vanishes;
  int degree = 0;                          // valid when Single
  std::optional<Weight> g_highest_weight;  // w . chi, dominant for G
  BigInt dimension = 0;                    // dim V_G(w . chi)
  std::optional<Weight> singular_point;    // chi + rho after straightening hit a wall

  bool vanishes() const noexcept { return status == Status::Vanishes; }
};

/// Borel-Weil-Bott. Straightens chi + rho by reflecting the lowest-index
/// negative coordinate; a zero coordinate at any step means total vanishing.
CohomologyResult bwb(const Parabolic& p, const Weight& chi);

/// Cohomology of a direct sum of E_P(summand), accumulated per degree.
struct BundleCohomology {
  std::map<int, BigInt> per_degree;                 // omitted degrees are zero
  std::map<int, std::vector<Weight>> contributors;  // summands feeding each degree

  bool vanishes() const noexcept { return per_degree.empty(); }
};

BundleCohomology bundle_cohomology(const Parabolic& p, const std::vector<Weight>& summands);

} // namespace roofcalc
