#include "roofcalc/report.hpp"

#include <limits>
#include <sstream>

namespace roofcalc {

json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

json to_json(const Weight& w) { return w.coords(); }

json to_json(const LPolynomial& f) {
  json a = json::array();
  for (const auto& c : f.coefficients()) a.push_back(to_json(c));
  return a;
}

namespace {

json degree_map(const std::map<int, BigInt>& m) {
  json o = json::object();
  for (const auto& [deg, dim] : m) o[std::to_string(deg)] = to_json(dim);
  return o;
}

json optional_big(const std::optional<BigInt>& v) { return v ? to_json(*v) : json(nullptr); }

std::string degree_text(const std::map<int, BigInt>& m) {
  if (m.empty()) return "0 in every degree";
  std::string s;
  for (const auto& [deg, dim] : m) s += (s.empty() ? "" : ", ") + ("H^" + std::to_string(deg) + " = " + dim.str());
  return s;
}

} // namespace

json to_json(const CohomologyResult& r) {
  json o;
  o["status"] = r.vanishes() ? "Vanishes" : "Single";
  if (!r.vanishes()) {
    o["degree"] = r.degree;
    o["g_highest_weight"] = to_json(*r.g_highest_weight);
    o["dimension"] = to_json(r.dimension);
  }
  return o;
}

json to_json(const BundleCohomology& c) {
  json o;
  o["per_degree"] = degree_map(c.per_degree);
  json contrib = json::object();
  for (const auto& [deg, ws] : c.contributors) {
    json arr = json::array();
    for (const auto& w : ws) arr.push_back(to_json(w));
    contrib[std::to_string(deg)] = arr;
  }
  o["contributors"] = contrib;
  return o;
}

json to_json(const ZeroLocusCohomology& z) {
  json o;
  o["status"] = to_string(z.status);
  o["bundle_rank"] = z.bundle_rank;
  o["per_degree"] = degree_map(z.per_degree);
  if (!z.reason.empty()) o["reason"] = z.reason;
  json page = json::array();
  for (const auto& t : z.first_page) {
    json term;
    term["p"] = t.p;
    json s = json::array();
    for (const auto& w : t.summands) s.push_back(to_json(w));
    term["summands"] = s;
    term["cohomology"] = degree_map(t.cohomology.per_degree);
    page.push_back(term);
  }
  o["first_page"] = page;
  return o;
}

json to_json(const RoofFamily& f) {
  json o;
  o["label"] = to_string(f.label);
  o["r"] = f.r;
  o["group"] = f.group;
  o["root_system"] = to_string(f.type) + std::to_string(f.group_rank);
  o["crossed_pair"] = {f.node1, f.node2};
  o["roof_rank"] = f.roof_rank;
  o["base_dims"] = f.base_dim;
  o["bundle_rank"] = f.bundle_rank;
  o["bundle_weight"] = to_json(f.bundle_weight);
  o["pipeline_eligible"] = f.pipeline_eligible;
  o["lefschetz_applicable"] = f.lefschetz_applicable();
  o["notes"] = f.notes;
  return o;
}

json to_json(const RoofReport& r) {
  json o;
  o["family"] = to_json(r.family);
  o["class_f1"] = to_json(r.side1.base_class);
  o["class_f2"] = to_json(r.side2.base_class);
  o["classes_equal"] = r.classes_equal;
  o["backends_agree"] = r.backends_agree ? json(*r.backends_agree) : json(nullptr);
  o["residual"] = to_json(r.residual);
  o["h0_z1"] = optional_big(r.h0_z1());
  o["h0_z2"] = optional_big(r.h0_z2());
  o["cohomology_z1"] = r.side1.zero_locus ? to_json(*r.side1.zero_locus) : json(nullptr);
  o["cohomology_z2"] = r.side2.zero_locus ? to_json(*r.side2.zero_locus) : json(nullptr);
  o["koszul_status"] = {r.side1.zero_locus ? to_string(r.side1.zero_locus->status) : "NotRun",
                        r.side2.zero_locus ? to_string(r.side2.zero_locus->status) : "NotRun"};
  o["lefschetz_applicable"] = r.lefschetz_applicable;
  o["certificate"] = r.certificate ? json(*r.certificate) : json(nullptr);
  o["distinctness"] = r.distinctness;
  o["distinctness_reason"] = r.distinctness_reason;
  o["conditional_on"] = r.conditional_on;
  o["nontrivial"] = r.nontrivial();
  o["notes"] = r.notes;
  return o;
}

std::string render_text(const ZeroLocusCohomology& z) {
  std::ostringstream out;
  out << "    status: " << to_string(z.status);
  if (!z.reason.empty()) out << " (" << z.reason << ")";
  out << "\n";
  for (const auto& t : z.first_page) {
    out << "    p=" << t.p << ": " << t.summands.size() << " summand(s), " << degree_text(t.cohomology.per_degree)
        << "\n";
  }
  if (z.status == KoszulStatus::Determined) out << "    H*(Z, O(1)): " << degree_text(z.per_degree) << "\n";
  return out.str();
}

std::string render_text(const RoofReport& r) {
  const auto& f = r.family;
  std::ostringstream out;
  out << "roof " << to_string(f.label);
  if (f.label != RoofLabel::F4 && f.label != RoofLabel::G2) out << " r=" << f.r;
  out << ": G = " << f.group << ", Q crosses nodes " << f.node1 << "," << f.node2 << ", roof rank " << f.roof_rank
      << ", dim F_i = " << f.base_dim << ", rank E_i = " << f.bundle_rank << "\n";
  out << "[F1] = " << r.side1.base_class.str() << "\n";
  out << "[F2] = " << r.side2.base_class.str() << "\n";
  out << "classes_equal: " << (r.classes_equal ? "true" : "false") << "\n";
  if (r.backends_agree) out << "point-count backend agrees: " << (*r.backends_agree ? "true" : "false") << "\n";
  out << "residual [P^" << f.roof_rank - 2 << "]([F2]-[F1]) = " << r.residual.str() << "\n";
  for (int side : {1, 2}) {
    const auto& s = side == 1 ? r.side1 : r.side2;
    if (!s.zero_locus) continue;
    out << "Z" << side << " (Koszul on F" << side << "):\n" << render_text(*s.zero_locus);
  }
  const auto h1 = r.h0_z1(), h2 = r.h0_z2();
  if (h1 && h2) out << "h0 pair: (" << h1->str() << ", " << h2->str() << ")\n";
  out << "lefschetz_applicable: " << (r.lefschetz_applicable ? "true" : "false") << "\n";
  out << "certificate: " << (r.certificate ? *r.certificate : std::string("none")) << "\n";
  out << "distinctness: " << (r.distinctness ? "true" : "false") << " (" << r.distinctness_reason << ")\n";
  for (const auto& c : r.conditional_on) out << "  conditional on: " << c << "\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return out.str();
}

} // namespace roofcalc
