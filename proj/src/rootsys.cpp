#include "roofcalc/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "roofcalc/errors.hpp"

namespace roofcalc {

namespace {

using Matrix = std::vector<std::vector<std::int64_t>>;

Matrix cartan_for(RootType type, int n) {
  Matrix c(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  auto at = [&](int i, int j) -> std::int64_t& { return c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; };
  for (int i = 1; i <= n; ++i) at(i, i) = 2;
  switch (type) {
    case RootType::A:
      for (int i = 1; i < n; ++i) at(i, i + 1) = at(i + 1, i) = -1;
      break;
    case RootType::C:
      for (int i = 1; i < n; ++i) at(i, i + 1) = at(i + 1, i) = -1;
      if (n >= 2) at(n, n - 1) = -2;  // alpha_n = 2L_n is long
      break;
    case RootType::D:
      for (int i = 1; i < n - 1; ++i) at(i, i + 1) = at(i + 1, i) = -1;
      at(n - 1, n - 2) = at(n - 2, n - 1) = -1;
      at(n, n - 2) = at(n - 2, n) = -1;
      break;
    case RootType::F4:
      c = {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
      break;
    case RootType::G2:
      c = {{2, -1}, {-3, 2}};
      break;
  }
  return c;
}

// d_i = |alpha_i|^2 / 2, from A_ij d_j = A_ji d_i, scaled so the minimum is 1.
std::vector<std::int64_t> half_norms(const Matrix& a) {
  const std::size_t n = a.size();
  std::vector<Rational> d(n, Rational(0));
  d[0] = 1;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    auto i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || a[i][j] == 0 || d[j] != Rational(0)) continue;
      d[j] = d[i] * Rational(a[j][i], a[i][j]);
      stack.push_back(j);
    }
  }
  Rational lo = *std::min_element(d.begin(), d.end());
  std::vector<std::int64_t> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational v = d[i] / lo;
    if (v.denominator() != 1) throw InternalError("non-integral root length ratio");
    out[i] = v.numerator();
  }
  return out;
}

std::vector<std::vector<Rational>> invert(const Matrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == Rational(0)) ++piv;
    if (piv == n) throw InternalError("singular Cartan matrix");
    std::swap(a[piv], a[col]);
    Rational p = a[col][col];
    for (auto& v : a[col]) v /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == Rational(0)) continue;
      Rational f = a[r][col];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

} // namespace

std::string to_string(RootType t) {
  switch (t) {
    case RootType::A: return "A";
    case RootType::C: return "C";
    case RootType::D: return "D";
    case RootType::F4: return "F";
    case RootType::G2: return "G";
  }
  return "?";
}

RootType parse_root_type(const std::string& label) {
  std::string s;
  for (char ch : label) s += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (s == "A") return RootType::A;
  if (s == "C") return RootType::C;
  if (s == "D") return RootType::D;
  if (s == "F" || s == "F4") return RootType::F4;
  if (s == "G" || s == "G2") return RootType::G2;
  throw ValidationError("unsupported root system type '" + label + "' (expected A, C, D, F4 or G2)");
}

std::string RootSystem::label() const { return to_string(type_) + std::to_string(rank_); }

Weight RootSystem::fundamental(int node) const {
  check_node(node);
  Weight w(static_cast<std::size_t>(rank_));
  w[idx(node)] = 1;
  return w;
}

Weight RootSystem::reflect(const Weight& chi, int node) const {
  Weight out = chi;
  reflect_in_place(out, node);
  return out;
}

void RootSystem::reflect_in_place(Weight& chi, int node) const {
  const auto k = chi[idx(node)];
  if (k == 0) return;
  const auto& a = cartan_[idx(node)];
  for (std::size_t j = 0; j < a.size(); ++j) chi[j] -= k * a[j];
}

std::int64_t RootSystem::coroot_pairing(const Weight& chi, const PositiveRoot& beta) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < beta.coroot.size(); ++i) s += beta.coroot[i] * chi[i];
  return s;
}

std::int64_t RootSystem::inner_with_root(const Weight& chi, const PositiveRoot& beta) const {
  // (omega_i, alpha_j) = delta_ij d_j
  std::int64_t s = 0;
  for (std::size_t i = 0; i < beta.simple.size(); ++i) s += beta.simple[i] * chi[i] * half_norm_[i];
  return s;
}

std::int64_t RootSystem::height_numerator(const Weight& chi) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < height_num_.size(); ++i) s += height_num_[i] * chi[i];
  return s;
}

std::vector<Rational> RootSystem::root_coordinates(const Weight& chi) const {
  const auto n = static_cast<std::size_t>(rank_);
  std::vector<Rational> c(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i] += Rational(chi[j]) * cartan_inverse_[j][i];
  return c;
}

void RootSystem::check_weight(const Weight& chi, const char* what) const {
  if (chi.rank() != static_cast<std::size_t>(rank_))
    throw ValidationError(std::string(what) + " " + chi.str() + " has " + std::to_string(chi.rank()) +
                          " coordinates but " + label() + " has rank " + std::to_string(rank_));
}

void RootSystem::check_node(int node) const {
  if (node < 1 || node > rank_)
    throw ValidationError("node " + std::to_string(node) + " out of range 1.." + std::to_string(rank_) +
                          " for " + label());
}

RootSystemPtr build_root_system(RootType type, int rank) {
  bool ok = false;
  switch (type) {
    case RootType::A: ok = rank >= 1; break;
    case RootType::C: ok = rank >= 1; break;
    case RootType::D: ok = rank >= 3; break;
    case RootType::F4: ok = rank == 4; break;
    case RootType::G2: ok = rank == 2; break;
  }
  if (!ok)
    throw ValidationError("unsupported root system (" + to_string(type) + ", " + std::to_string(rank) +
                          "): need A_n n>=1, C_n n>=1, D_n n>=3, F4 or G2");

  std::shared_ptr<RootSystem> sys(new RootSystem());
  sys->type_ = type;
  sys->rank_ = rank;
  sys->cartan_ = cartan_for(type, rank);
  sys->half_norm_ = half_norms(sys->cartan_);
  const auto n = static_cast<std::size_t>(rank);

  for (std::size_t i = 0; i < n; ++i) sys->simple_roots_.emplace_back(sys->cartan_[i]);
  sys->rho_ = Weight(std::vector<std::int64_t>(n, 1));

  // Closure of the simple roots under simple reflections, tracked in
  // simple-root coordinates; s_i permutes Phi^+ \ {alpha_i}.
  std::map<std::vector<std::int64_t>, Weight> roots;
  std::vector<std::vector<std::int64_t>> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> c(n, 0);
    c[i] = 1;
    roots.emplace(c, sys->simple_roots_[i]);
    frontier.push_back(c);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& c : frontier) {
      const Weight beta = roots.at(c);
      for (std::size_t i = 0; i < n; ++i) {
        if (beta[i] >= 0) continue;  // only upward moves generate new positive roots
        auto c2 = c;
        c2[i] -= beta[i];
        if (roots.count(c2)) continue;
        Weight w = beta;
        sys->reflect_in_place(w, static_cast<int>(i) + 1);
        roots.emplace(c2, w);
        next.push_back(c2);
      }
    }
    frontier = std::move(next);
  }

  for (const auto& [c, w] : roots) {
    PositiveRoot r;
    r.weight = w;
    r.simple = c;
    r.height = std::accumulate(c.begin(), c.end(), std::int64_t{0});
    std::int64_t norm2 = 0;  // (beta, beta) with short simple roots of length 2
    for (std::size_t i = 0; i < n; ++i) norm2 += c[i] * w[i] * sys->half_norm_[i];
    const std::int64_t dbeta = norm2 / 2;
    r.coroot.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      if ((c[i] * sys->half_norm_[i]) % dbeta != 0) throw InternalError("non-integral coroot");
      r.coroot[i] = c[i] * sys->half_norm_[i] / dbeta;
    }
    sys->positive_.push_back(std::move(r));
  }
  std::stable_sort(sys->positive_.begin(), sys->positive_.end(),
                   [](const PositiveRoot& a, const PositiveRoot& b) { return a.height < b.height; });

  sys->cartan_inverse_ = invert(sys->cartan_);
  std::vector<Rational> h(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) h[j] += sys->cartan_inverse_[j][i];
  std::int64_t den = 1;
  for (const auto& v : h) den = std::lcm(den, v.denominator());
  sys->height_den_ = den;
  for (const auto& v : h) sys->height_num_.push_back(v.numerator() * (den / v.denominator()));
  return sys;
}

RootSystemPtr build_root_system(const std::string& type_label, int rank) {
  return build_root_system(parse_root_type(type_label), rank);
}

std::int64_t pair(const RootSystem& sys, const Weight& chi, int node) {
  sys.check_node(node);
  sys.check_weight(chi);
  return chi[static_cast<std::size_t>(node - 1)];
}

std::vector<Rational> to_orthogonal(const RootSystem& sys, const Weight& chi) {
  sys.check_weight(chi);
  const int n = sys.rank();
  const auto un = static_cast<std::size_t>(n);
  switch (sys.type()) {
    case RootType::A:
    case RootType::C: {
      // omega_i = L_1 + ... + L_i
      std::vector<Rational> x(sys.type() == RootType::A ? un + 1 : un, Rational(0));
      Rational acc = 0;
      for (int k = n; k >= 1; --k) {
        acc += chi[static_cast<std::size_t>(k - 1)];
        x[static_cast<std::size_t>(k - 1)] = acc;
      }
      return x;
    }
    case RootType::D: {
      // omega_{n-1} = (L_1 + ... + L_{n-1} - L_n)/2, omega_n = (L_1 + ... + L_n)/2
      std::vector<Rational> x(un, Rational(0));
      const Rational spin_plus(chi[un - 1], 2);
      const Rational spin_minus(chi[un - 2], 2);
      Rational acc = 0;
      for (int k = n - 2; k >= 1; --k) {
        acc += chi[static_cast<std::size_t>(k - 1)];
        x[static_cast<std::size_t>(k - 1)] = acc + spin_plus + spin_minus;
      }
      x[un - 2] = spin_plus + spin_minus;
      x[un - 1] = spin_plus - spin_minus;
      return x;
    }
    default:
      throw ValidationError("no orthogonal L-basis for " + sys.label());
  }
}

Weight from_orthogonal(const RootSystem& sys, const std::vector<Rational>& x) {
  if (!sys.has_orthogonal_basis()) throw ValidationError("no orthogonal L-basis for " + sys.label());
  const auto n = static_cast<std::size_t>(sys.rank());
  const std::size_t expect = sys.type() == RootType::A ? n + 1 : n;
  if (x.size() != expect)
    throw ValidationError("expected " + std::to_string(expect) + " L-coordinates for " + sys.label());
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i + 1 < n; ++i) c[i] = x[i] - x[i + 1];
  switch (sys.type()) {
    case RootType::A: c[n - 1] = x[n - 1] - x[n]; break;
    case RootType::C: c[n - 1] = x[n - 1]; break;
    case RootType::D: c[n - 1] = x[n - 2] + x[n - 1]; break;
    default: break;
  }
  Weight w(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i].denominator() != 1) throw ValidationError("L-coordinates do not describe an integral weight");
    w[i] = c[i].numerator();
  }
  return w;
}

} // namespace roofcalc
