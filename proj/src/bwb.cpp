#include "roofcalc/bwb.hpp"

#include "roofcalc/errors.hpp"
#include "roofcalc/reps.hpp"

namespace roofcalc {

Weight dot_action(const WeylElement& w, const Weight& chi) {
  const auto& rho = w.system()->rho();
  return act(w, chi + rho) - rho;
}

CohomologyResult bwb(const Parabolic& p, const Weight& chi) {
  if (!is_dominant(chi, p))
    throw ValidationError("Borel-Weil-Bott needs a P-dominant weight; " + chi.str() + " is not dominant for " +
                          p.sys().label() + " crossed " + p.crossed_label());
  const auto& sys = p.sys();
  Weight v = chi + sys.rho();
  int steps = 0;
  // Each reflection in a negative coordinate removes one inversion, so this
  // terminates after at most #Phi^+ steps.
  for (;;) {
    int negative = 0;
    for (std::size_t i = 0; i < v.rank(); ++i) {
      if (v[i] == 0) {
        CohomologyResult r;
        r.status = CohomologyResult::Status::Vanishes;
        r.singular_point = v;
        return r;
      }
      if (v[i] < 0 && negative == 0) negative = static_cast<int>(i) + 1;
    }
    if (negative == 0) break;
    sys.reflect_in_place(v, negative);
    ++steps;
  }
  CohomologyResult r;
  r.status = CohomologyResult::Status::Single;
  r.degree = steps;
  r.g_highest_weight = v - sys.rho();
  r.dimension = weyl_dimension(p.system(), *r.g_highest_weight);
  return r;
}

BundleCohomology bundle_cohomology(const Parabolic& p, const std::vector<Weight>& summands) {
  BundleCohomology out;
  for (const auto& chi : summands) {
    const auto r = bwb(p, chi);
    if (r.vanishes()) continue;
    out.per_degree[r.degree] += r.dimension;
    out.contributors[r.degree].push_back(chi);
  }
  return out;
}

} // namespace roofcalc
