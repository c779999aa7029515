#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace roofcalc {

/// An integral weight in fundamental-weight coordinates: entry i is the
/// pairing with the (i+1)-th simple coroot, i.e. the coefficient of
/// omega_{i+1}. Storage is 0-based; Dynkin nodes are 1-based elsewhere.
class Weight {
public:
  using value_type = std::int64_t;

  Weight() = default;
  explicit Weight(std::size_t rank) : coords_(rank, 0) {}
  explicit Weight(std::vector<value_type> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<value_type> coords) : coords_(coords) {}

  std::size_t rank() const noexcept { return coords_.size(); }
  const std::vector<value_type>& coords() const noexcept { return coords_; }

  value_type operator[](std::size_t i) const { return coords_[i]; }
  value_type& operator[](std::size_t i) { return coords_[i]; }

  bool is_zero() const noexcept;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  Weight& operator*=(value_type k);

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(value_type k, Weight a) { return a *= k; }
  friend Weight operator-(Weight a) { return a *= -1; }

  // Lexicographic on coordinates; this is the canonical output order.
  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;

  /// "(a,b,c)"
  std::string str() const;

private:
  std::vector<value_type> coords_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

/// Parses "1,-2,0" into a Weight. Throws ValidationError on malformed input.
Weight parse_weight(const std::string& csv);

/// Human form in the omega basis, e.g. "-2w2 + w4"; "0" for the zero weight.
std::string omega_string(const Weight& w);

} // namespace roofcalc
