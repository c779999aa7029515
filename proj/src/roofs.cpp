#include "roofcalc/roofs.hpp"

#include <algorithm>
#include <cctype>
#include <future>

#include "roofcalc/errors.hpp"

namespace roofcalc {

std::string to_string(RoofLabel l) {
  switch (l) {
    case RoofLabel::AxA: return "AxA";
    case RoofLabel::A_M: return "A_M";
    case RoofLabel::A_G: return "A_G";
    case RoofLabel::C: return "C";
    case RoofLabel::D: return "D";
    case RoofLabel::F4: return "F4";
    case RoofLabel::G2: return "G2";
  }
  return "?";
}

RoofLabel parse_roof_label(const std::string& s) {
  std::string u;
  for (char ch : s)
    if (ch != '_') u += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (u == "AXA") return RoofLabel::AxA;
  if (u == "AM") return RoofLabel::A_M;
  if (u == "AG") return RoofLabel::A_G;
  if (u == "C") return RoofLabel::C;
  if (u == "D") return RoofLabel::D;
  if (u == "F4" || u == "F") return RoofLabel::F4;
  if (u == "G2" || u == "G") return RoofLabel::G2;
  throw ValidationError("unknown roof family '" + s + "' (expected AxA, A_M, A_G, C, D, F4 or G2)");
}

const std::vector<RoofLabel>& all_roof_labels() {
  static const std::vector<RoofLabel> labels{RoofLabel::AxA, RoofLabel::A_M, RoofLabel::A_G, RoofLabel::C,
                                             RoofLabel::D,   RoofLabel::F4,  RoofLabel::G2};
  return labels;
}

std::string to_string(KoszulStatus s) { return s == KoszulStatus::Determined ? "Determined" : "Inconclusive"; }

int default_roof_parameter(RoofLabel label) {
  switch (label) {
    case RoofLabel::AxA: return 1;
    case RoofLabel::A_M: return 2;
    case RoofLabel::A_G: return 2;
    case RoofLabel::C: return 2;
    case RoofLabel::D: return 5;
    default: return 1;
  }
}

RootSystemPtr RoofFamily::system() const { return build_root_system(type, group_rank); }

Parabolic RoofFamily::base(int side) const {
  if (side != 1 && side != 2) throw ValidationError("roof side must be 1 or 2");
  return Parabolic(system(), {side == 1 ? node1 : node2});
}

Weight RoofFamily::twist(int side) const { return system()->fundamental(side == 1 ? node1 : node2); }

namespace {

void require_r(bool ok, RoofLabel label, int r, const std::string& constraint) {
  if (!ok)
    throw ValidationError("roof family " + to_string(label) + " needs " + constraint + ", got r=" +
                          std::to_string(r));
}

} // namespace

RoofFamily roof_data(RoofLabel label, int r) {
  RoofFamily f;
  f.label = label;
  f.r = r;
  switch (label) {
    case RoofLabel::AxA:
      require_r(r >= 1, label, r, "r >= 1");
      // G = SL(r+1) x SL(r+1) with node 1 crossed in each factor; each base is
      // P^r times a point, modelled here on the single factor A_r.
      f.type = RootType::A;
      f.group_rank = r;
      f.group = "SL(" + std::to_string(r + 1) + ") x SL(" + std::to_string(r + 1) + ")";
      f.node1 = f.node2 = 1;
      f.roof_rank = r + 1;
      f.base_dim = r;
      f.bundle_rank = r + 1;
      f.pipeline_eligible = false;
      f.zero_loci_empty = true;
      f.notes.push_back("the zero loci Z_i are empty; bases modelled on one A_r factor");
      break;
    case RoofLabel::A_M:
      require_r(r >= 2, label, r, "r >= 2");
      f.type = RootType::A;
      f.group_rank = r;
      f.group = "SL(" + std::to_string(r + 1) + ")";
      f.node1 = 1;
      f.node2 = r;
      f.roof_rank = r;
      f.base_dim = r;
      f.bundle_rank = r;
      f.pipeline_eligible = false;
      f.notes.push_back(
          "Z_i are finite sets of points, so [Z_i] = #Z_i and L^k([Z1]-[Z2]) = 0 forces [Z1] = [Z2]: "
          "roofs of this type do not yield non-trivial L-equivalences");
      break;
    case RoofLabel::A_G:
      require_r(r >= 2, label, r, "r >= 2");
      f.type = RootType::A;
      f.group_rank = 2 * r;
      f.group = "SL(" + std::to_string(2 * r + 1) + ")";
      f.node1 = r;
      f.node2 = r + 1;
      f.roof_rank = r + 1;
      f.base_dim = r * r + r;
      f.bundle_rank = r + 1;
      f.notes.push_back("informational: no reference cohomology values are asserted for this family");
      break;
    case RoofLabel::C:
      require_r(r >= 1, label, r, "r >= 1");
      f.type = RootType::C;
      f.group_rank = 3 * r - 1;
      f.group = "Sp(" + std::to_string(6 * r - 2) + ")";
      f.node1 = 2 * r - 1;
      f.node2 = 2 * r;
      f.roof_rank = 2 * r;
      f.base_dim = 6 * r * r - 3 * r;
      f.bundle_rank = 2 * r;
      if (r == 1) {
        f.pipeline_eligible = false;
        f.notes.push_back("C_2: dim F_i - rank E_i = 1, the Picard restriction argument does not apply");
      }
      break;
    case RoofLabel::D:
      require_r(r >= 4, label, r, "r >= 4");
      f.type = RootType::D;
      f.group_rank = r;
      f.group = "Spin(" + std::to_string(2 * r) + ")";
      f.node1 = r - 1;
      f.node2 = r;
      f.roof_rank = r;
      f.base_dim = r * (r - 1) / 2;
      f.bundle_rank = r;
      if (r == 4) {
        f.pipeline_eligible = false;
        f.notes.push_back("D_4: dim F_i - rank E_i = 2, the Picard restriction argument does not apply");
      }
      f.notes.push_back("informational: no reference cohomology values are asserted for this family");
      break;
    case RoofLabel::F4:
      f.type = RootType::F4;
      f.group_rank = 4;
      f.group = "F4";
      f.node1 = 2;
      f.node2 = 3;
      f.roof_rank = 3;
      f.base_dim = 20;
      f.bundle_rank = 3;
      break;
    case RoofLabel::G2:
      f.type = RootType::G2;
      f.group_rank = 2;
      f.group = "G2";
      f.node1 = 1;
      f.node2 = 2;
      f.roof_rank = 2;
      f.base_dim = 5;
      f.bundle_rank = 2;
      f.notes.push_back("informational: no reference cohomology values are asserted for this family");
      break;
  }

  auto sys = f.system();
  if (label == RoofLabel::AxA) {
    f.bundle_weight = sys->fundamental(1);
  } else {
    f.bundle_weight = sys->fundamental(f.node1) + sys->fundamental(f.node2);
    const Parabolic q(sys, {f.node1, f.node2});
    if (!is_ample(f.bundle_weight, q)) throw InternalError("roof bundle weight is not ample on G/Q");
    for (int side : {1, 2}) {
      const auto p = f.base(side);
      if (p.quotient_dimension() != f.base_dim || weyl_dimension(p, f.bundle_weight) != f.bundle_rank)
        throw InternalError("catalog row " + to_string(label) + " disagrees with its root data");
    }
  }
  return f;
}

// --------------------------------------------------------------------- Koszul

BigInt ZeroLocusCohomology::h0() const {
  auto it = per_degree.find(0);
  return it == per_degree.end() ? BigInt(0) : it->second;
}

bool ZeroLocusCohomology::higher_columns_vanish() const {
  return std::all_of(first_page.begin(), first_page.end(),
                     [](const KoszulTerm& t) { return t.p == 0 || t.cohomology.vanishes(); });
}

ZeroLocusCohomology koszul_zero_locus_cohomology(const Parabolic& p, const Weight& bundle_hw, const Weight& twist,
                                                 const Limits& limits) {
  if (!is_dominant(bundle_hw, p))
    throw ValidationError("bundle weight " + bundle_hw.str() + " is not dominant for the parabolic");
  if (!line_bundle_rank_check(twist, p))
    throw ValidationError("twist " + twist.str() + " is not a line-bundle weight (must vanish on retained nodes)");

  ZeroLocusCohomology z;
  const BigInt rank = weyl_dimension(p, bundle_hw);
  if (rank > limits.max_elements) throw ResourceLimitError("bundle rank too large", limits.max_elements);
  z.bundle_rank = static_cast<int>(rank);

  const auto dual_weights = weight_multiset({p, dual_highest_weight(bundle_hw, p)}, limits);
  for (int k = 0; k <= z.bundle_rank; ++k) {
    KoszulTerm term;
    term.p = k;
    for (const auto& hw : decompose_levi(exterior_power(dual_weights, k, limits), p, limits))
      term.summands.push_back(hw + twist);
    term.cohomology = bundle_cohomology(p, term.summands);
    z.first_page.push_back(std::move(term));
  }

  // Nonzero entries (p, q) sit at total degree q - p. A differential d_k
  // runs from (p, q) to (p - k, q - k + 1): to a smaller column, one total
  // degree up.
  struct Entry {
    int p, q;
    BigInt dim;
  };
  std::vector<Entry> entries;
  for (const auto& t : z.first_page)
    for (const auto& [q, dim] : t.cohomology.per_degree) entries.push_back({t.p, q, dim});
  for (const auto& a : entries) {
    for (const auto& b : entries) {
      if (a.p > b.p && (b.q - b.p) == (a.q - a.p) + 1) {
        z.status = KoszulStatus::Inconclusive;
        z.reason = "possible differential from column " + std::to_string(a.p) + " degree " + std::to_string(a.q) +
                   " to column " + std::to_string(b.p) + " degree " + std::to_string(b.q);
        return z;
      }
    }
  }
  for (const auto& e : entries) {
    if (e.q - e.p < 0) {
      z.status = KoszulStatus::Inconclusive;
      z.reason = "surviving entry in negative total degree " + std::to_string(e.q - e.p);
      z.per_degree.clear();
      return z;
    }
    z.per_degree[e.q - e.p] += e.dim;
  }
  z.status = KoszulStatus::Determined;
  return z;
}

// ---------------------------------------------------------------- verify_roof

std::optional<BigInt> RoofReport::h0_z1() const {
  if (!side1.zero_locus || side1.zero_locus->status != KoszulStatus::Determined) return std::nullopt;
  return side1.zero_locus->h0();
}

std::optional<BigInt> RoofReport::h0_z2() const {
  if (!side2.zero_locus || side2.zero_locus->status != KoszulStatus::Determined) return std::nullopt;
  return side2.zero_locus->h0();
}

RoofReport verify_roof(RoofLabel label, int r, const Limits& limits) {
  RoofReport rep;
  rep.family = roof_data(label, r);
  const RoofFamily& fam = rep.family;

  auto compute_side = [&fam, &limits](int side) {
    RoofSide out;
    const auto p = fam.base(side);
    out.base_class = class_of_quotient(p, limits);
    if (fam.label == RoofLabel::C) out.igr_class = igr_class(side == 1 ? fam.node1 : fam.node2, fam.group_rank);
    if (!fam.zero_loci_empty)
      out.zero_locus = koszul_zero_locus_cohomology(p, fam.bundle_weight, fam.twist(side), limits);
    return out;
  };
  auto second = std::async(std::launch::async, compute_side, 2);
  rep.side1 = compute_side(1);
  rep.side2 = second.get();

  rep.classes_equal = rep.side1.base_class == rep.side2.base_class;
  if (rep.side1.igr_class && rep.side2.igr_class)
    rep.backends_agree = *rep.side1.igr_class == rep.side1.base_class && *rep.side2.igr_class == rep.side2.base_class;
  rep.residual = roof_identity_residual(rep.side1.base_class, rep.side2.base_class, fam.roof_rank);
  if (rep.classes_equal && rep.residual.is_zero() && rep.backends_agree.value_or(true)) {
    const int e = fam.roof_rank - 1;
    rep.certificate = (e == 1 ? std::string("L") : "L^" + std::to_string(e)) + "([Z1]-[Z2]) = 0";
  }

  rep.lefschetz_applicable = fam.lefschetz_applicable();
  rep.notes = fam.notes;
  if (fam.zero_loci_empty) {
    rep.distinctness_reason = "zero loci are empty";
  } else if (!fam.pipeline_eligible) {
    rep.distinctness_reason = "family is not eligible for the distinctness argument";
  } else if (!rep.lefschetz_applicable) {
    rep.distinctness_reason = "dim F_i - rank E_i <= 2: Picard groups need not restrict isomorphically";
  } else if (rep.side1.zero_locus->status != KoszulStatus::Determined ||
             rep.side2.zero_locus->status != KoszulStatus::Determined) {
    rep.distinctness_reason = "Koszul spectral sequence inconclusive on at least one side";
  } else if (rep.side1.zero_locus->per_degree == rep.side2.zero_locus->per_degree) {
    rep.distinctness_reason = "H*(Z1, O(1)) and H*(Z2, O(1)) have the same dimensions";
  } else {
    rep.distinctness = true;
    rep.distinctness_reason = "H*(Z1, O(1)) and H*(Z2, O(1)) differ, so Z1 and Z2 are not isomorphic";
    rep.conditional_on = {
        "Z_i is a smooth connected Calabi-Yau variety of codimension rank E_i",
        "Pic(F_i) -> Pic(Z_i) is an isomorphism of ample generators (Lefschetz, dim F_i - rank E_i > 2)",
        "for these Calabi-Yau pairs [Z1] = [Z2] implies Z1 and Z2 are isomorphic (stable birationality)",
    };
  }
  return rep;
}

} // namespace roofcalc
