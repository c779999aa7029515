#include "roofcalc/cli.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "roofcalc/bwb.hpp"
#include "roofcalc/errors.hpp"
#include "roofcalc/motive.hpp"
#include "roofcalc/report.hpp"
#include "roofcalc/reps.hpp"
#include "roofcalc/roofs.hpp"

namespace roofcalc::cli {

namespace {

constexpr int kInternal = 4;

struct Options {
  std::string format = "text";
  std::size_t cap = 0;
  std::string cache_dir;

  std::string type;
  int rank = 0;
  std::string cross;
  std::string weight;

  int d = 0, n = 0;
  std::string q;

  std::string family;
  int r = 0;
};

std::vector<int> parse_nodes(const std::string& csv) {
  std::vector<int> nodes;
  if (csv.empty()) return nodes;
  const Weight w = parse_weight(csv);
  for (auto v : w.coords()) nodes.push_back(static_cast<int>(v));
  return nodes;
}

BigInt parse_big(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ValidationError("expected a non-negative integer, got '" + s + "'");
  return BigInt(s);
}

class Command {
public:
  Command(const Options& o, std::ostream& out) : o_(o), out_(out) {
    limits_ = Limits::from_environment();
    if (o.cap) limits_.max_elements = o.cap;
    limits_.cache_dir = o.cache_dir;
    if (o.format != "text" && o.format != "json") throw ValidationError("--format must be text or json");
  }

  bool json_mode() const { return o_.format == "json"; }

  void emit(const json& j) { out_ << j.dump(2) << "\n"; }

  RootSystemPtr system() const { return build_root_system(o_.type, o_.rank); }
  Parabolic parabolic() const { return Parabolic(system(), parse_nodes(o_.cross)); }
  Weight weight(const RootSystem& sys) const {
    Weight w = parse_weight(o_.weight);
    sys.check_weight(w);
    return w;
  }

  int roots() {
    auto sys = system();
    if (json_mode()) {
      json j;
      j["label"] = sys->label();
      j["rank"] = sys->rank();
      j["cartan"] = sys->cartan_matrix();
      j["rho"] = to_json(sys->rho());
      json roots = json::array();
      for (const auto& b : sys->positive_roots())
        roots.push_back({{"simple", b.simple}, {"weight", to_json(b.weight)}, {"coroot", b.coroot}});
      j["positive_roots"] = roots;
      j["positive_root_count"] = sys->positive_roots().size();
      j["weyl_group_order"] = to_json(weyl_group_order(*sys));
      emit(j);
      return kOk;
    }
    out_ << sys->label() << ": rank " << sys->rank() << ", " << sys->positive_roots().size() << " positive roots, |W| = "
         << weyl_group_order(*sys).str() << "\n";
    out_ << "cartan <alpha_i, alpha_j^vee>:\n";
    for (const auto& row : sys->cartan_matrix()) {
      out_ << " ";
      for (auto v : row) out_ << " " << v;
      out_ << "\n";
    }
    out_ << "rho = " << omega_string(sys->rho()) << "\n";
    out_ << "positive roots (simple-root coefficients : omega coordinates):\n";
    for (const auto& b : sys->positive_roots()) out_ << "  " << Weight(b.simple).str() << " : " << b.weight.str() << "\n";
    return kOk;
  }

  int weyl_cosets() {
    const auto p = parabolic();
    const auto reps = minimal_coset_reps(p, limits_);
    const auto poly = class_of_quotient(p, limits_);
    if (json_mode()) {
      json j;
      j["system"] = p.sys().label();
      j["crossed"] = p.crossed();
      j["count"] = reps.size();
      j["length_polynomial"] = to_json(poly);
      json arr = json::array();
      for (const auto& r : reps) arr.push_back({{"word", r.element.word()}, {"length", r.length}});
      j["representatives"] = arr;
      emit(j);
      return kOk;
    }
    out_ << reps.size() << " minimal coset representatives\n";
    out_ << "sum t^l(w) = " << poly.str("t") << "\n";
    for (const auto& r : reps) out_ << r.length << " " << r.element.word_string() << "\n";
    return kOk;
  }

  int weyl_orbit() {
    const auto p = parabolic();
    const auto o = orbit(weight(p.sys()), p, limits_);
    if (json_mode()) {
      json arr = json::array();
      for (const auto& w : o) arr.push_back(to_json(w));
      emit({{"orbit", arr}, {"size", o.size()}});
      return kOk;
    }
    out_ << o.size() << " weights\n";
    for (const auto& w : o) out_ << w.str() << "  " << omega_string(w) << "\n";
    return kOk;
  }

  int rep_dim() {
    const auto p = parabolic();
    const auto dim = weyl_dimension(p, weight(p.sys()));
    if (json_mode())
      emit({{"dimension", to_json(dim)}});
    else
      out_ << dim.str() << "\n";
    return kOk;
  }

  int bwb_cmd() {
    const auto p = parabolic();
    const auto res = bwb(p, weight(p.sys()));
    if (json_mode()) {
      emit(to_json(res));
      return kOk;
    }
    if (res.vanishes())
      out_ << "vanishes in every degree\n";
    else
      out_ << "H^" << res.degree << " = V_G(" << omega_string(*res.g_highest_weight) << ")^dual, dimension "
           << res.dimension.str() << "\n";
    return kOk;
  }

  int class_quotient() {
    const auto p = parabolic();
    const auto poly = class_of_quotient(p, limits_);
    if (json_mode()) {
      emit({{"class", to_json(poly)}, {"rendered", poly.str()}, {"cells", to_json(poly.coefficient_sum())},
            {"dimension", poly.degree()}});
      return kOk;
    }
    out_ << poly.str() << "\n";
    return kOk;
  }

  int count_igr() {
    const auto v = igr_point_count(o_.d, o_.n, parse_big(o_.q));
    if (json_mode())
      emit({{"count", to_json(v)}});
    else
      out_ << v.str() << "\n";
    return kOk;
  }

  int roof_list() {
    json arr = json::array();
    for (auto label : all_roof_labels()) {
      const auto f = roof_data(label, default_roof_parameter(label));
      if (json_mode()) {
        arr.push_back(to_json(f));
        continue;
      }
      out_ << to_string(label) << " (r=" << f.r << "): G = " << f.group << ", crossed " << f.node1 << "," << f.node2
           << ", roof rank " << f.roof_rank << ", dim F_i = " << f.base_dim << ", rank E_i = " << f.bundle_rank
           << (f.pipeline_eligible ? "" : ", pipeline-ineligible") << "\n";
    }
    if (json_mode()) emit(arr);
    return kOk;
  }

  int roof_verify() {
    const auto label = parse_roof_label(o_.family);
    const int r = o_.r ? o_.r : default_roof_parameter(label);
    const auto report = verify_roof(label, r, limits_);
    if (json_mode())
      emit(to_json(report));
    else
      out_ << render_text(report);
    return report.nontrivial() ? kOk : kNoCertificate;
  }

private:
  const Options& o_;
  std::ostream& out_;
  Limits limits_;
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Lie-theory engine for homogeneous roofs and their Calabi-Yau pairs", "roofcalc"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format: text or json")->capture_default_str();
  app.add_option("--cap", o.cap, "Resource cap on enumerated elements (overrides ROOFCALC_CAP)");
  app.add_option("--cache-dir", o.cache_dir, "Directory for cached coset lengths");

  auto add_group = [&o](CLI::App* sub) {
    sub->add_option("type", o.type, "Root system type: A, C, D, F4, G2")->required();
    sub->add_option("rank", o.rank, "Rank")->required();
  };
  auto add_cross = [&o](CLI::App* sub) {
    sub->add_option("--cross", o.cross, "Comma-separated crossed Dynkin nodes (empty: G itself)");
  };
  auto add_weight = [&o](CLI::App* sub) {
    sub->add_option("--weight", o.weight, "Weight as comma-separated fundamental coordinates")->required();
  };

  std::string chosen;
  auto roots = app.add_subcommand("roots", "Dump root-system data");
  add_group(roots);

  auto weyl = app.add_subcommand("weyl", "Weyl group enumerations");
  weyl->require_subcommand(1);
  auto cosets = weyl->add_subcommand("cosets", "Minimal coset representatives of W/W_I");
  add_group(cosets);
  add_cross(cosets);
  auto orb = weyl->add_subcommand("orbit", "W_I-orbit of a weight");
  add_group(orb);
  add_cross(orb);
  add_weight(orb);

  auto rep = app.add_subcommand("rep", "Representations");
  rep->require_subcommand(1);
  auto dim = rep->add_subcommand("dim", "Weyl dimension of V_P(weight)");
  add_group(dim);
  add_cross(dim);
  add_weight(dim);

  auto bwbc = app.add_subcommand("bwb", "Borel-Weil-Bott cohomology of E_P(weight)");
  add_group(bwbc);
  add_cross(bwbc);
  add_weight(bwbc);

  auto cls = app.add_subcommand("class", "Grothendieck-ring classes");
  cls->require_subcommand(1);
  auto quot = cls->add_subcommand("quotient", "[G/P] as a polynomial in L");
  add_group(quot);
  add_cross(quot);

  auto count = app.add_subcommand("count", "Finite-field point counts");
  count->require_subcommand(1);
  auto igr = count->add_subcommand("igr", "#IGr(d, 2n)(F_q)");
  igr->add_option("d", o.d)->required();
  igr->add_option("n", o.n)->required();
  igr->add_option("q", o.q)->required();

  auto roof = app.add_subcommand("roof", "Homogeneous roofs");
  roof->require_subcommand(1);
  auto list = roof->add_subcommand("list", "The roof catalog");
  auto verify = roof->add_subcommand("verify", "Run the L-equivalence pipeline for a family");
  verify->add_option("family", o.family, "AxA, A_M, A_G, C, D, F4 or G2")->required();
  verify->add_option("--r", o.r, "Family parameter");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kValidation;
  }

  try {
    Command cmd(o, out);
    if (*roots) return cmd.roots();
    if (*cosets) return cmd.weyl_cosets();
    if (*orb) return cmd.weyl_orbit();
    if (*dim) return cmd.rep_dim();
    if (*bwbc) return cmd.bwb_cmd();
    if (*quot) return cmd.class_quotient();
    if (*igr) return cmd.count_igr();
    if (*list) return cmd.roof_list();
    if (*verify) return cmd.roof_verify();
    err << app.help();
    return kValidation;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const NotARepresentation& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceCap;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

} // namespace roofcalc::cli
