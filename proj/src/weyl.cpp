#include "roofcalc/weyl.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "roofcalc/errors.hpp"

namespace roofcalc {

namespace {

// Lowest node with a negative coordinate, 0 if dominant.
int first_negative(const Weight& v) {
  for (std::size_t i = 0; i < v.rank(); ++i)
    if (v[i] < 0) return static_cast<int>(i) + 1;
  return 0;
}

void check_cap(std::size_t n, const Limits& limits, const char* what) {
  if (n > limits.max_elements)
    throw ResourceLimitError(std::string(what) + " exceeds the element cap", limits.max_elements);
}

Weight coset_probe(const Parabolic& p) {
  Weight probe = p.sys().zero();
  for (int node : p.crossed()) probe[static_cast<std::size_t>(node - 1)] = 1;
  return probe;
}

std::string cache_file(const Parabolic& p, const std::string& dir) {
  std::string name = p.sys().label() + "_x";
  for (std::size_t i = 0; i < p.crossed().size(); ++i) {
    if (i) name += '-';
    name += std::to_string(p.crossed()[i]);
  }
  return (std::filesystem::path(dir) / (name + ".txt")).string();
}

std::optional<std::vector<std::uint64_t>> read_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string line;
  std::vector<std::uint64_t> counts;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::uint64_t v;
    while (ss >> v) counts.push_back(v);
    if (!ss.eof()) return std::nullopt;
  }
  if (counts.empty()) return std::nullopt;
  return counts;
}

void write_cache(const std::string& path, const Parabolic& p, const std::vector<std::uint64_t>& counts) {
  std::error_code ec;
  std::filesystem::create_directories(std::filesystem::path(path).parent_path(), ec);
  std::ofstream out(path);
  if (!out) return;  // the cache is best-effort
  out << "# coset length counts for " << p.sys().label() << " crossed " << p.crossed_label() << "\n";
  for (std::size_t i = 0; i < counts.size(); ++i) out << (i ? " " : "") << counts[i];
  out << "\n";
}

} // namespace

// ---------------------------------------------------------------- WeylElement

WeylElement WeylElement::identity(RootSystemPtr sys) {
  Weight rho = sys->rho();
  return WeylElement(std::move(sys), {}, std::move(rho));
}

WeylElement WeylElement::simple(RootSystemPtr sys, int node) {
  sys->check_node(node);
  return from_word(std::move(sys), {node});
}

WeylElement WeylElement::from_word(RootSystemPtr sys, const std::vector<int>& word) {
  Weight v = sys->rho();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    sys->check_node(*it);
    sys->reflect_in_place(v, *it);
  }
  return from_rho_image(std::move(sys), v);
}

WeylElement WeylElement::from_rho_image(RootSystemPtr sys, const Weight& key) {
  sys->check_weight(key, "canonical key");
  // Each reflection in a negative coordinate shortens the element by one, so
  // the recorded nodes spell a reduced word.
  std::vector<int> word;
  Weight v = key;
  while (int node = first_negative(v)) {
    sys->reflect_in_place(v, node);
    word.push_back(node);
  }
  if (v != sys->rho()) throw ValidationError(key.str() + " is not in the Weyl orbit of rho");
  return WeylElement(std::move(sys), std::move(word), key);
}

WeylElement WeylElement::inverse() const {
  return from_word(sys_, std::vector<int>(word_.rbegin(), word_.rend()));
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  std::vector<int> w = a.word_;
  w.insert(w.end(), b.word_.begin(), b.word_.end());
  return WeylElement::from_word(a.sys_, w);
}

std::string WeylElement::word_string() const {
  if (word_.empty()) return "e";
  std::string s;
  for (int i : word_) s += "s" + std::to_string(i);
  return s;
}

// ------------------------------------------------------------------ Parabolic

Parabolic::Parabolic(RootSystemPtr sys, const std::vector<int>& crossed_nodes) : sys_(std::move(sys)) {
  const int n = sys_->rank();
  crossed_mask_.assign(static_cast<std::size_t>(n), false);
  for (int node : crossed_nodes) {
    sys_->check_node(node);
    crossed_mask_[static_cast<std::size_t>(node - 1)] = true;
  }
  for (int node = 1; node <= n; ++node)
    (is_crossed(node) ? crossed_ : retained_).push_back(node);
  for (const auto& beta : sys_->positive_roots()) {
    bool inside = true;
    for (int node : crossed_) inside = inside && beta.simple[static_cast<std::size_t>(node - 1)] == 0;
    if (inside) levi_roots_.push_back(beta);
  }
}

Parabolic Parabolic::borel(RootSystemPtr sys) {
  std::vector<int> all;
  for (int i = 1; i <= sys->rank(); ++i) all.push_back(i);
  return Parabolic(std::move(sys), all);
}

Weight Parabolic::anticanonical() const {
  Weight k = sys_->zero();
  for (const auto& beta : sys_->positive_roots()) {
    bool levi = true;
    for (int node : crossed_) levi = levi && beta.simple[static_cast<std::size_t>(node - 1)] == 0;
    if (!levi) k += beta.weight;
  }
  return k;
}

int Parabolic::quotient_dimension() const {
  return static_cast<int>(sys_->positive_roots().size() - levi_roots_.size());
}

std::string Parabolic::crossed_label() const {
  std::string s = "{";
  for (std::size_t i = 0; i < crossed_.size(); ++i) s += (i ? "," : "") + std::to_string(crossed_[i]);
  return s + "}";
}

// ----------------------------------------------------------------- operations

Weight act(const WeylElement& w, const Weight& chi) {
  const auto& sys = *w.system();
  sys.check_weight(chi);
  Weight v = chi;
  const auto& word = w.word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) sys.reflect_in_place(v, *it);
  return v;
}

int inversion_count(const WeylElement& w) {
  const auto& sys = *w.system();
  int count = 0;
  for (const auto& beta : sys.positive_roots())
    if (sys.height_numerator(act(w, beta.weight)) < 0) ++count;
  return count;
}

WeylElement longest_element(const Parabolic& p) {
  const auto& sys = p.sys();
  // Climb while some retained coordinate of w(rho) is positive; the top of
  // W_I sends rho to a weight negative on every retained node.
  Weight v = sys.rho();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int node : p.retained()) {
      if (v[static_cast<std::size_t>(node - 1)] > 0) {
        sys.reflect_in_place(v, node);
        moved = true;
        break;
      }
    }
  }
  return WeylElement::from_rho_image(p.system(), v);
}

Weight levi_dominant_representative(const Parabolic& p, const Weight& chi) {
  const auto& sys = p.sys();
  Weight v = chi;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int node : p.retained()) {
      if (v[static_cast<std::size_t>(node - 1)] < 0) {
        sys.reflect_in_place(v, node);
        moved = true;
        break;
      }
    }
  }
  return v;
}

std::vector<Weight> orbit(const Weight& chi, const Parabolic& p, const Limits& limits) {
  const auto& sys = p.sys();
  sys.check_weight(chi);
  std::unordered_set<Weight, WeightHash> seen{chi};
  std::vector<Weight> frontier{chi};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& v : frontier) {
      for (int node : p.retained()) {
        if (v[static_cast<std::size_t>(node - 1)] == 0) continue;
        Weight u = sys.reflect(v, node);
        if (seen.insert(u).second) {
          check_cap(seen.size(), limits, "orbit");
          next.push_back(std::move(u));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Weight> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CosetRepresentative> minimal_coset_reps(const Parabolic& p, const Limits& limits) {
  const auto& sys = p.sys();
  const Weight probe = coset_probe(p);

  // The stabiliser of the probe is exactly W_I, so orbit points are cosets.
  // Moving up through s_i with v_i > 0 adds one to the length, so the BFS
  // level of a point is the length of its minimal representative.
  struct Node {
    std::size_t parent;
    int reflection;
    int length;
  };
  std::vector<Weight> points{probe};
  std::vector<Node> nodes{{0, 0, 0}};
  std::unordered_map<Weight, std::size_t, WeightHash> index{{probe, 0}};
  std::size_t level_begin = 0;
  while (level_begin < points.size()) {
    const std::size_t level_end = points.size();
    for (std::size_t k = level_begin; k < level_end; ++k) {
      for (int node = 1; node <= sys.rank(); ++node) {
        if (points[k][static_cast<std::size_t>(node - 1)] <= 0) continue;
        Weight u = sys.reflect(points[k], node);
        if (index.count(u)) continue;
        check_cap(points.size() + 1, limits, "coset enumeration");
        index.emplace(u, points.size());
        nodes.push_back({k, node, nodes[k].length + 1});
        points.push_back(std::move(u));
      }
    }
    level_begin = level_end;
  }

  std::vector<CosetRepresentative> reps;
  reps.reserve(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    std::vector<int> word;
    for (std::size_t cur = k; cur != 0; cur = nodes[cur].parent) word.push_back(nodes[cur].reflection);
    reps.push_back({WeylElement::from_word(p.system(), word), nodes[k].length});
  }
  std::sort(reps.begin(), reps.end(), [](const CosetRepresentative& a, const CosetRepresentative& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.element.canonical_key() < b.element.canonical_key();
  });
  return reps;
}

std::vector<std::uint64_t> coset_length_counts(const Parabolic& p, const Limits& limits) {
  std::string path;
  if (!limits.cache_dir.empty()) {
    path = cache_file(p, limits.cache_dir);
    // A stale or hand-edited file is ignored unless it is at least
    // palindromic and sums to the index.
    if (auto cached = read_cache(path)) {
      const auto& c = *cached;
      BigInt sum = 0;
      for (auto v : c) sum += v;
      if (std::equal(c.begin(), c.end(), c.rbegin()) && static_cast<int>(c.size()) == p.quotient_dimension() + 1 &&
          sum * weyl_group_order(p) == weyl_group_order(p.sys()))
        return c;
    }
  }

  const auto& sys = p.sys();
  std::unordered_set<Weight, WeightHash> seen;
  std::vector<Weight> frontier{coset_probe(p)};
  seen.insert(frontier.front());
  std::vector<std::uint64_t> counts;
  std::size_t total = 1;
  while (!frontier.empty()) {
    counts.push_back(frontier.size());
    std::vector<Weight> next;
    for (const auto& v : frontier) {
      for (int node = 1; node <= sys.rank(); ++node) {
        if (v[static_cast<std::size_t>(node - 1)] <= 0) continue;
        Weight u = sys.reflect(v, node);
        if (seen.insert(u).second) {
          check_cap(++total, limits, "coset enumeration");
          next.push_back(std::move(u));
        }
      }
    }
    // Points two levels down can never be reached again.
    for (const auto& v : frontier) seen.erase(v);
    frontier = std::move(next);
  }

  if (!path.empty()) write_cache(path, p, counts);
  return counts;
}

namespace {

BigInt order_from_heights(const std::vector<PositiveRoot>& roots) {
  std::map<std::int64_t, std::int64_t> per_height;
  std::int64_t top = 0;
  for (const auto& beta : roots) {
    ++per_height[beta.height];
    top = std::max(top, beta.height);
  }
  BigInt order = 1;
  for (std::int64_t k = 1; k <= top; ++k) {
    const auto exps = per_height[k] - per_height[k + 1];  // exponents equal to k
    for (std::int64_t e = 0; e < exps; ++e) order *= k + 1;
  }
  return order;
}

} // namespace

BigInt weyl_group_order(const Parabolic& p) { return order_from_heights(p.levi_roots()); }

BigInt weyl_group_order(const RootSystem& sys) { return order_from_heights(sys.positive_roots()); }

} // namespace roofcalc
