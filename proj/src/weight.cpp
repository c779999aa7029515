#include "roofcalc/weight.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "roofcalc/errors.hpp"
#include "roofcalc/limits.hpp"
#include "roofcalc/numeric.hpp"

namespace roofcalc {

bool Weight::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](value_type v) { return v == 0; });
}

Weight& Weight::operator+=(const Weight& other) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Weight& Weight::operator*=(value_type k) {
  for (auto& c : coords_) c *= k;
  return *this;
}

std::string Weight::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  // FNV-1a over the coordinates
  std::size_t h = 1469598103934665603ULL;
  for (auto c : w.coords()) {
    h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return h;
}

Weight parse_weight(const std::string& csv) {
  std::vector<Weight::value_type> coords;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    auto next = csv.find(',', pos);
    if (next == std::string::npos) next = csv.size();
    std::string tok = csv.substr(pos, next - pos);
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }),
              tok.end());
    Weight::value_type v{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw ValidationError("malformed weight '" + csv + "': expected comma-separated integers");
    coords.push_back(v);
    pos = next + 1;
  }
  return Weight(std::move(coords));
}

std::string omega_string(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.rank(); ++i) {
    auto c = w[i];
    if (c == 0) continue;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    auto a = c < 0 ? -c : c;
    if (a != 1) s += std::to_string(a);
    s += "w" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Limits Limits::from_environment() {
  Limits l;
  if (const char* cap = std::getenv("ROOFCALC_CAP"); cap && *cap) {
    std::size_t v{};
    std::string s(cap);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v == 0)
      throw ValidationError("ROOFCALC_CAP must be a positive integer, got '" + s + "'");
    l.max_elements = v;
  }
  return l;
}

} // namespace roofcalc
