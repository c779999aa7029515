#include "roofcalc/reps.hpp"

#include <algorithm>
#include <unordered_map>

#include "roofcalc/errors.hpp"

namespace roofcalc {

// ------------------------------------------------------------- WeightMultiset

WeightMultiset::WeightMultiset(Map entries) {
  for (auto& [w, m] : entries) add(w, m);
}

void WeightMultiset::add(const Weight& w, std::int64_t mult) {
  if (mult == 0) return;
  auto [it, inserted] = entries_.try_emplace(w, 0);
  it->second += mult;
  if (it->second < 0) throw NotARepresentation("negative multiplicity for weight " + w.str());
  if (it->second == 0) entries_.erase(it);
}

std::int64_t WeightMultiset::multiplicity(const Weight& w) const {
  auto it = entries_.find(w);
  return it == entries_.end() ? 0 : it->second;
}

std::int64_t WeightMultiset::total() const {
  std::int64_t t = 0;
  for (const auto& [w, m] : entries_) t += m;
  return t;
}

WeightMultiset WeightMultiset::dual() const {
  WeightMultiset out;
  for (const auto& [w, m] : entries_) out.entries_.emplace(-w, m);
  return out;
}

WeightMultiset WeightMultiset::shifted(const Weight& by) const {
  WeightMultiset out;
  for (const auto& [w, m] : entries_) out.entries_.emplace(w + by, m);
  return out;
}

// ----------------------------------------------------------------- dominance

bool is_dominant(const Weight& chi, const Parabolic& p) {
  p.sys().check_weight(chi);
  for (int node : p.retained())
    if (chi[static_cast<std::size_t>(node - 1)] < 0) return false;
  return true;
}

namespace {

void require_dominant(const Weight& chi, const Parabolic& p) {
  p.sys().check_weight(chi);
  for (int node : p.retained()) {
    if (chi[static_cast<std::size_t>(node - 1)] < 0)
      throw ValidationError("weight " + chi.str() + " is not dominant for " + p.sys().label() + " crossed " +
                            p.crossed_label() + ": node " + std::to_string(node) + " has coefficient " +
                            std::to_string(chi[static_cast<std::size_t>(node - 1)]));
  }
}

std::int64_t coroot_height(const PositiveRoot& beta) {
  std::int64_t h = 0;
  for (auto c : beta.coroot) h += c;
  return h;
}

} // namespace

BigInt weyl_dimension(const Parabolic& p, const Weight& chi) {
  require_dominant(chi, p);
  const auto& sys = p.sys();
  BigInt num = 1, den = 1;
  // <rho_L, beta^vee> is the height of beta^vee in the simple coroots.
  for (const auto& beta : p.levi_roots()) {
    const auto h = coroot_height(beta);
    num *= sys.coroot_pairing(chi, beta) + h;
    den *= h;
  }
  if (num % den != 0) throw InternalError("Weyl dimension formula left a remainder for " + chi.str());
  return num / den;
}

BigInt weyl_dimension(RootSystemPtr sys, const Weight& chi) {
  return weyl_dimension(Parabolic::full_group(std::move(sys)), chi);
}

// ----------------------------------------------------------------- Freudenthal

WeightMultiset weight_multiset(const LeviIrrep& rep, const Limits& limits) {
  const Parabolic& p = rep.parabolic;
  const Weight& top = rep.highest_weight;
  require_dominant(top, p);
  const auto& sys = p.sys();
  const auto n = static_cast<std::size_t>(sys.rank());

  if (weyl_dimension(p, top) > limits.max_elements)
    throw ResourceLimitError("representation " + top.str() + " is too large", limits.max_elements);

  // Levi-dominant weights below the top, with their depth in simple roots.
  std::unordered_map<Weight, std::vector<std::int64_t>, WeightHash> depth;
  depth.emplace(top, std::vector<std::int64_t>(n, 0));
  std::vector<Weight> frontier{top};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& mu : frontier) {
      const auto k = depth.at(mu);
      for (const auto& beta : p.levi_roots()) {
        Weight nu = mu - beta.weight;
        if (!is_dominant(nu, p) || depth.count(nu)) continue;
        auto k2 = k;
        for (std::size_t i = 0; i < n; ++i) k2[i] += beta.simple[i];
        depth.emplace(nu, std::move(k2));
        next.push_back(std::move(nu));
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::pair<std::int64_t, Weight>> order;
  for (const auto& [mu, k] : depth) {
    std::int64_t d = 0;
    for (auto v : k) d += v;
    order.emplace_back(d, mu);
  }
  std::sort(order.begin(), order.end());

  std::unordered_map<Weight, std::int64_t, WeightHash> mult;
  auto lookup = [&](const Weight& nu) -> std::int64_t {
    auto it = mult.find(levi_dominant_representative(p, nu));
    return it == mult.end() ? 0 : it->second;
  };

  // Freudenthal:
  // ((top+rho, top+rho) - (mu+rho, mu+rho)) m(mu) = 2 sum_{beta>0} sum_{j>=1} m(mu + j beta)(mu + j beta, beta)
  for (const auto& [d, mu] : order) {
    if (d == 0) {
      mult[mu] = 1;
      continue;
    }
    std::int64_t rhs = 0;
    for (const auto& beta : p.levi_roots()) {
      for (Weight nu = mu + beta.weight;; nu += beta.weight) {
        const auto m = lookup(nu);
        if (m == 0) break;
        rhs += m * sys.inner_with_root(nu, beta);
      }
    }
    // (top - mu, top + mu + 2 rho_L) with top - mu = sum k_i alpha_i over retained nodes
    const auto& k = depth.at(mu);
    std::int64_t lhs = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (k[i]) lhs += k[i] * sys.half_norm(static_cast<int>(i) + 1) * (top[i] + mu[i] + 2);
    if (lhs <= 0 || (2 * rhs) % lhs != 0)
      throw InternalError("Freudenthal recursion is not integral at " + mu.str());
    const auto m = 2 * rhs / lhs;
    if (m > 0) mult[mu] = m;
  }

  WeightMultiset out;
  for (const auto& [mu, m] : mult)
    for (const auto& w : orbit(mu, p, limits)) out.add(w, m);
  return out;
}

// ------------------------------------------------------------ exterior powers

WeightMultiset exterior_power(const WeightMultiset& weights, int p, const Limits& limits) {
  const auto size = weights.total();
  if (p < 0 || p > size)
    throw ValidationError("exterior power " + std::to_string(p) + " out of range 0.." + std::to_string(size));
  if (binomial(static_cast<unsigned>(size), static_cast<unsigned>(p)) > limits.max_elements)
    throw ResourceLimitError("exterior power is too large", limits.max_elements);

  std::vector<WeightMultiset::Map> layer(static_cast<std::size_t>(p) + 1);
  if (weights.empty()) return WeightMultiset({{Weight(), 1}});
  const std::size_t rank = weights.entries().begin()->first.rank();
  layer[0][Weight(rank)] = 1;
  std::int64_t processed = 0;
  for (const auto& [w, m] : weights.entries()) {
    for (std::int64_t copy = 0; copy < m; ++copy) {
      ++processed;
      for (auto k = std::min<std::int64_t>(p, processed); k >= 1; --k) {
        auto& dst = layer[static_cast<std::size_t>(k)];
        for (const auto& [v, c] : layer[static_cast<std::size_t>(k - 1)]) dst[v + w] += c;
      }
    }
  }
  return WeightMultiset(std::move(layer[static_cast<std::size_t>(p)]));
}

// -------------------------------------------------------------- decomposition

std::vector<Weight> decompose_levi(const WeightMultiset& weights, const Parabolic& p, const Limits& limits) {
  const auto& sys = p.sys();
  WeightMultiset rest = weights;
  std::vector<Weight> out;
  while (!rest.empty()) {
    const Weight* best = nullptr;
    std::int64_t best_height = 0;
    for (const auto& [w, m] : rest.entries()) {
      if (!is_dominant(w, p)) continue;
      const auto h = sys.height_numerator(w);
      if (!best || h > best_height || (h == best_height && *best < w)) {
        best = &w;
        best_height = h;
      }
    }
    if (!best) throw NotARepresentation("leftover weights contain no dominant weight for the Levi");
    const Weight top = *best;
    const auto irrep = weight_multiset({p, top}, limits);
    for (const auto& [w, m] : irrep.entries()) {
      if (rest.multiplicity(w) < m)
        throw NotARepresentation("peeling V_P" + top.str() + " drives weight " + w.str() + " negative");
      rest.add(w, -m);
    }
    out.push_back(top);
  }
  return out;
}

Weight dual_highest_weight(const Weight& chi, const Parabolic& p) {
  require_dominant(chi, p);
  return -act(longest_element(p), chi);
}

bool line_bundle_rank_check(const Weight& chi, const Parabolic& p) {
  if (!is_dominant(chi, p)) return false;
  return weyl_dimension(p, chi) == 1;
}

bool is_ample(const Weight& chi, const Parabolic& p) {
  p.sys().check_weight(chi);
  for (int node = 1; node <= p.sys().rank(); ++node) {
    const auto c = chi[static_cast<std::size_t>(node - 1)];
    if (p.is_crossed(node) ? c <= 0 : c < 0) return false;
  }
  return true;
}

} // namespace roofcalc
