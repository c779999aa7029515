#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "roofcalc/bwb.hpp"
#include "roofcalc/limits.hpp"
#include "roofcalc/motive.hpp"
#include "roofcalc/reps.hpp"

namespace roofcalc {

enum class RoofLabel { AxA, A_M, A_G, C, D, F4, G2 };

std::string to_string(RoofLabel l);
/// "AxA", "A_M"/"AM", "A_G"/"AG", "C", "D", "F4", "G2".
RoofLabel parse_roof_label(const std::string& s);
const std::vector<RoofLabel>& all_roof_labels();

/// One row of the homogeneous-roof catalog, instantiated at parameter r.
struct RoofFamily {
  RoofLabel label = RoofLabel::C;
  int r = 0;                  // family parameter (ignored for F4, G2)
  RootType type = RootType::A;
  int group_rank = 0;
  std::string group;          // simply connected group, e.g. "Sp(10)"
  int node1 = 0, node2 = 0;   // crossed nodes of Q; P_i crosses node i only
  int roof_rank = 0;          // fibres of M -> F_i are P^{roof_rank - 1}
  int base_dim = 0;
  int bundle_rank = 0;
  Weight bundle_weight;       // omega_node1 + omega_node2
  bool pipeline_eligible = true;
  bool zero_loci_empty = false;  // A_r x A_r
  std::vector<std::string> notes;

  RootSystemPtr system() const;
  /// Base F_side = G/P_side, side in {1, 2}.
  Parabolic base(int side) const;
  Weight twist(int side) const;  // omega of the node crossed by P_side
  /// dim F_i - rank E_i > 2: restriction Pic(F_i) -> Pic(Z_i) is an isomorphism.
  bool lefschetz_applicable() const { return base_dim - bundle_rank > 2; }
};

/// Throws ValidationError for unsupported parameters.
RoofFamily roof_data(RoofLabel label, int r);
/// Smallest admissible r for the family (1 for the rank-free families).
int default_roof_parameter(RoofLabel label);

enum class KoszulStatus { Determined, Inconclusive };
std::string to_string(KoszulStatus s);

/// Term p of the Koszul complex: wedge^p(E^dual) (x) twist as a sum of
/// E_P(summand), with its cohomology on the base.
struct KoszulTerm {
  int p = 0;
  std::vector<Weight> summands;
  BundleCohomology cohomology;
};

struct ZeroLocusCohomology {
  KoszulStatus status = KoszulStatus::Inconclusive;
  int bundle_rank = 0;
  std::vector<KoszulTerm> first_page;  // index p
  std::map<int, BigInt> per_degree;    // H^n(Z, twist); filled only when Determined
  std::string reason;                  // why Inconclusive

  BigInt h0() const;
  bool higher_columns_vanish() const;  // every p >= 1 term has no cohomology
};

/// Cohomology of the twist restricted to the zero locus of a general section
/// of E_P(bundle_hw), read off the Koszul spectral sequence
/// E_1^{-p,q} = H^q(F, wedge^p E^dual (x) twist) => H^{q-p}(Z, twist).
/// The answer is Determined only if no differential on any page can connect
/// two nonzero entries.
ZeroLocusCohomology koszul_zero_locus_cohomology(const Parabolic& p, const Weight& bundle_hw,
                                                 const Weight& twist, const Limits& limits = {});

struct RoofSide {
  LPolynomial base_class;
  std::optional<LPolynomial> igr_class;  // type C only
  std::optional<ZeroLocusCohomology> zero_locus;
};

struct RoofReport {
  RoofFamily family;
  RoofSide side1, side2;
  bool classes_equal = false;
  std::optional<bool> backends_agree;    // type C: coset and point-count classes match
  LPolynomial residual;
  bool lefschetz_applicable = false;
  std::optional<std::string> certificate;
  bool distinctness = false;
  std::string distinctness_reason;
  std::vector<std::string> conditional_on;
  std::vector<std::string> notes;

  std::optional<BigInt> h0_z1() const;
  std::optional<BigInt> h0_z2() const;
  /// Certificate present and distinctness established.
  bool nontrivial() const { return certificate.has_value() && distinctness; }
};

RoofReport verify_roof(RoofLabel label, int r, const Limits& limits = {});

} // namespace roofcalc
