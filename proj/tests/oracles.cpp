#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace oracle {

using roofcalc::BigInt;
using roofcalc::RootType;

Vec reflect(const Matrix& cartan, Vec v, int node) {
  const auto i = static_cast<std::size_t>(node - 1);
  const auto c = v[i];
  for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c * cartan[i][j];
  return v;
}

std::vector<std::vector<int>> group_words(const Matrix& cartan, const std::vector<int>& nodes) {
  const Vec rho(cartan.size(), 1);
  std::map<Vec, std::vector<int>> seen{{rho, {}}};
  std::vector<Vec> frontier{rho};
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& v : frontier) {
      for (int s : nodes) {
        auto u = reflect(cartan, v, s);
        if (seen.count(u)) continue;
        // u = s w(rho), so the word for u is s followed by the word for v
        auto word = seen[v];
        word.insert(word.begin(), s);
        seen.emplace(u, std::move(word));
        next.push_back(std::move(u));
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> out;
  for (auto& [k, w] : seen) out.push_back(w);
  return out;
}

std::vector<std::uint64_t> poincare(const Matrix& cartan, const std::vector<int>& nodes) {
  std::vector<std::uint64_t> h;
  for (const auto& w : group_words(cartan, nodes)) {
    if (h.size() <= w.size()) h.resize(w.size() + 1, 0);
    ++h[w.size()];
  }
  return h;
}

std::vector<std::uint64_t> quotient_poincare(const Matrix& cartan, const std::vector<int>& crossed) {
  std::vector<int> all, retained;
  for (int i = 1; i <= static_cast<int>(cartan.size()); ++i) {
    all.push_back(i);
    if (std::find(crossed.begin(), crossed.end(), i) == crossed.end()) retained.push_back(i);
  }
  std::vector<std::int64_t> num;
  for (auto v : poincare(cartan, all)) num.push_back(static_cast<std::int64_t>(v));
  const auto den = poincare(cartan, retained);  // monic, constant term 1
  const std::size_t dd = den.size() - 1;
  std::vector<std::uint64_t> q(num.size() - dd, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const auto c = num[k + dd];
    if (c < 0) throw std::logic_error("negative quotient coefficient");
    q[k] = static_cast<std::uint64_t>(c);
    for (std::size_t j = 0; j <= dd; ++j) num[k + j] -= c * static_cast<std::int64_t>(den[j]);
  }
  for (auto r : num)
    if (r != 0) throw std::logic_error("Poincare polynomials do not divide");
  return q;
}

Vec apply_word(const Matrix& cartan, const std::vector<int>& word, Vec v) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = reflect(cartan, v, *it);
  return v;
}

int bwb_degree(const Matrix& cartan, const Vec& chi) {
  std::vector<int> all;
  for (int i = 1; i <= static_cast<int>(cartan.size()); ++i) all.push_back(i);
  Vec v = chi;
  for (auto& x : v) x += 1;
  for (const auto& w : group_words(cartan, all)) {
    const auto u = apply_word(cartan, w, v);
    if (std::all_of(u.begin(), u.end(), [](std::int64_t x) { return x > 0; })) return static_cast<int>(w.size());
  }
  return -1;
}

BigInt weyl_order(RootType type, int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  switch (type) {
    case RootType::A: return f * (n + 1);
    case RootType::C: return f * (BigInt(1) << n);
    case RootType::D: return f * (BigInt(1) << (n - 1));
    case RootType::F4: return 1152;
    case RootType::G2: return 12;
  }
  return 0;
}

namespace {

// prod over i<j of (a_i - a_j)/(b_i - b_j) and friends, accumulated exactly
struct Ratio {
  BigInt num = 1, den = 1;
  void times(const BigInt& a, const BigInt& b) {
    num *= a;
    den *= b;
  }
  BigInt value() const {
    if (num % den != 0) throw std::logic_error("product formula is not integral");
    return num / den;
  }
};

} // namespace

BigInt classical_dimension(RootType type, const Vec& chi) {
  const int n = static_cast<int>(chi.size());
  Ratio r;
  switch (type) {
    case RootType::A: {
      // partition lambda_k = chi_k + ... + chi_n, lambda_{n+1} = 0
      Vec lambda(static_cast<std::size_t>(n + 1), 0);
      for (int k = n - 1; k >= 0; --k) lambda[static_cast<std::size_t>(k)] = lambda[static_cast<std::size_t>(k + 1)] + chi[static_cast<std::size_t>(k)];
      for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          r.times(lambda[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(j)] + j - i, j - i);
      return r.value();
    }
    case RootType::C: {
      Vec l(static_cast<std::size_t>(n)), rho(static_cast<std::size_t>(n));
      std::int64_t acc = 0;
      for (int k = n - 1; k >= 0; --k) {
        acc += chi[static_cast<std::size_t>(k)];
        rho[static_cast<std::size_t>(k)] = n - k;
        l[static_cast<std::size_t>(k)] = acc + n - k;
      }
      for (int i = 0; i < n; ++i) {
        const BigInt li = l[static_cast<std::size_t>(i)], ri = rho[static_cast<std::size_t>(i)];
        r.times(li, ri);
        for (int j = i + 1; j < n; ++j) {
          const BigInt lj = l[static_cast<std::size_t>(j)], rj = rho[static_cast<std::size_t>(j)];
          r.times(li * li - lj * lj, ri * ri - rj * rj);
        }
      }
      return r.value();
    }
    case RootType::D: {
      // doubled coordinates so that spin weights stay integral
      Vec x(static_cast<std::size_t>(n)), rho(static_cast<std::size_t>(n));
      const auto a = chi[static_cast<std::size_t>(n - 2)], b = chi[static_cast<std::size_t>(n - 1)];
      std::int64_t acc = 0;
      for (int k = n - 3; k >= 0; --k) {
        acc += 2 * chi[static_cast<std::size_t>(k)];
        x[static_cast<std::size_t>(k)] = acc + a + b;
      }
      x[static_cast<std::size_t>(n - 2)] = a + b;
      x[static_cast<std::size_t>(n - 1)] = b - a;
      for (int k = 0; k < n; ++k) {
        rho[static_cast<std::size_t>(k)] = 2 * (n - 1 - k);
        x[static_cast<std::size_t>(k)] += rho[static_cast<std::size_t>(k)];
      }
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          const BigInt li = x[static_cast<std::size_t>(i)], lj = x[static_cast<std::size_t>(j)];
          const BigInt ri = rho[static_cast<std::size_t>(i)], rj = rho[static_cast<std::size_t>(j)];
          r.times(li * li - lj * lj, ri * ri - rj * rj);
        }
      return r.value();
    }
    default:
      throw std::logic_error("no classical product formula for this type");
  }
}

BigInt sp_fundamental_dimension(int n, int k) {
  auto binom = [](int a, int b) -> BigInt {
    if (b < 0 || b > a) return 0;
    BigInt v = 1;
    for (int i = 1; i <= b; ++i) v = v * (a - b + i) / i;
    return v;
  };
  return binom(2 * n, k) - binom(2 * n, k - 2);
}

std::uint64_t brute_force_igr(int d, int n, int q) {
  const int dim = 2 * n;
  std::size_t count = 1;
  for (int i = 0; i < dim; ++i) count *= static_cast<std::size_t>(q);
  std::vector<std::vector<int>> vecs(count, std::vector<int>(static_cast<std::size_t>(dim)));
  for (std::size_t c = 0; c < count; ++c) {
    auto x = c;
    for (int i = 0; i < dim; ++i) {
      vecs[c][static_cast<std::size_t>(i)] = static_cast<int>(x % static_cast<std::size_t>(q));
      x /= static_cast<std::size_t>(q);
    }
  }
  auto form = [&](std::size_t u, std::size_t v) {
    long s = 0;
    for (int i = 0; i < n; ++i)
      s += vecs[u][static_cast<std::size_t>(i)] * vecs[v][static_cast<std::size_t>(n + i)] -
           vecs[u][static_cast<std::size_t>(n + i)] * vecs[v][static_cast<std::size_t>(i)];
    return ((s % q) + q) % q;
  };
  auto add = [&](std::size_t u, std::size_t v, int k) {
    std::size_t out = 0, base = 1;
    for (int i = 0; i < dim; ++i) {
      out += static_cast<std::size_t>((vecs[u][static_cast<std::size_t>(i)] + k * vecs[v][static_cast<std::size_t>(i)]) % q) * base;
      base *= static_cast<std::size_t>(q);
    }
    return out;
  };

  std::uint64_t ordered = 0;
  std::vector<std::size_t> basis;
  std::function<void(const std::set<std::size_t>&)> extend = [&](const std::set<std::size_t>& span) {
    if (static_cast<int>(basis.size()) == d) {
      ++ordered;
      return;
    }
    for (std::size_t v = 0; v < count; ++v) {
      if (span.count(v)) continue;
      bool perp = true;
      for (auto b : basis) perp = perp && form(v, b) == 0;
      if (!perp) continue;
      std::set<std::size_t> bigger;
      for (auto s : span)
        for (int k = 0; k < q; ++k) bigger.insert(add(s, v, k));
      basis.push_back(v);
      extend(bigger);
      basis.pop_back();
    }
  };
  extend({0});

  std::uint64_t gl = 1, qd = 1;
  for (int i = 0; i < d; ++i) qd *= static_cast<std::uint64_t>(q);
  for (std::uint64_t qi = 1, i = 0; i < static_cast<std::uint64_t>(d); ++i, qi *= static_cast<std::uint64_t>(q))
    gl *= qd - qi;
  if (ordered % gl != 0) throw std::logic_error("ordered basis count not divisible by |GL_d|");
  return ordered / gl;
}

} // namespace oracle
