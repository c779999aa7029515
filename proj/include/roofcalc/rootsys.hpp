#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "roofcalc/numeric.hpp"
#include "roofcalc/weight.hpp"

namespace roofcalc {

enum class RootType { A, C, D, F4, G2 };

std::string to_string(RootType t);
/// Accepts "A", "C", "D", "F4"/"F", "G2"/"G" (case-insensitive).
RootType parse_root_type(const std::string& label);

/// A positive root, kept in three coordinate systems.
struct PositiveRoot {
  Weight weight;                      // fundamental-weight coordinates
  std::vector<std::int64_t> simple;   // coefficients on the simple roots
  std::vector<std::int64_t> coroot;   // coefficients of beta^vee on the simple coroots
  std::int64_t height = 0;            // sum of `simple`
};

/// Immutable root datum of a simply connected simple group.
///
/// Conventions:
///  - Dynkin nodes are numbered 1..rank. For C_n, alpha_i = L_i - L_{i+1}
///    (i < n) and alpha_n = 2L_n. For F4 the numbering is fixed by
///    s1(w1) = -w1 + w2, s2(w2) = w1 - w2 + 2w3, s3(w3) = w2 - w3 + w4,
///    s4(w4) = w3 - w4, so nodes 1,2 are long and 3,4 short. For G2 node 1
///    is short.
///  - cartan(i, j) = <alpha_i, alpha_j^vee>; row i is alpha_i in the omega
///    basis, so s_j(chi) = chi - chi_j * alpha_j.
class RootSystem {
public:
  RootType type() const noexcept { return type_; }
  int rank() const noexcept { return rank_; }
  /// "C5", "F4", ...
  std::string label() const;

  std::int64_t cartan(int i, int j) const { return cartan_[idx(i)][idx(j)]; }
  const std::vector<std::vector<std::int64_t>>& cartan_matrix() const noexcept { return cartan_; }

  /// |alpha_i|^2 / 2 with short roots normalised to 1.
  std::int64_t half_norm(int node) const { return half_norm_[idx(node)]; }

  const Weight& simple_root(int node) const { return simple_roots_[idx(node)]; }
  Weight fundamental(int node) const;
  Weight zero() const { return Weight(static_cast<std::size_t>(rank_)); }
  const Weight& rho() const noexcept { return rho_; }
  const std::vector<PositiveRoot>& positive_roots() const noexcept { return positive_; }

  /// s_node(chi) = chi - <chi, alpha_node^vee> alpha_node.
  Weight reflect(const Weight& chi, int node) const;
  void reflect_in_place(Weight& chi, int node) const;

  /// <chi, beta^vee> for a positive root.
  std::int64_t coroot_pairing(const Weight& chi, const PositiveRoot& beta) const;
  /// Invariant form (chi, beta) with short roots of squared length 2.
  std::int64_t inner_with_root(const Weight& chi, const PositiveRoot& beta) const;

  /// Height <chi, rho^vee> as an exact fraction numerator/denominator
  /// (denominator is the same for every weight of this system).
  std::int64_t height_numerator(const Weight& chi) const;
  std::int64_t height_denominator() const noexcept { return height_den_; }

  /// Simple-root coordinates of chi (exact rationals).
  std::vector<Rational> root_coordinates(const Weight& chi) const;

  bool has_orthogonal_basis() const noexcept { return type_ == RootType::A || type_ == RootType::C || type_ == RootType::D; }

  /// Checks rank and throws ValidationError with `what` otherwise.
  void check_weight(const Weight& chi, const char* what = "weight") const;
  void check_node(int node) const;

private:
  friend std::shared_ptr<const RootSystem> build_root_system(RootType, int);
  RootSystem() = default;

  std::size_t idx(int node) const { return static_cast<std::size_t>(node - 1); }

  RootType type_ = RootType::A;
  int rank_ = 0;
  std::vector<std::vector<std::int64_t>> cartan_;
  std::vector<std::int64_t> half_norm_;
  std::vector<Weight> simple_roots_;
  std::vector<PositiveRoot> positive_;
  Weight rho_;
  std::vector<std::vector<Rational>> cartan_inverse_;
  std::vector<std::int64_t> height_num_;
  std::int64_t height_den_ = 1;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Supported: A_n (n >= 1), C_n (n >= 1), D_n (n >= 3), F4, G2.
RootSystemPtr build_root_system(RootType type, int rank);
RootSystemPtr build_root_system(const std::string& type_label, int rank);

/// <chi, alpha_node^vee>.
std::int64_t pair(const RootSystem& sys, const Weight& chi, int node);

/// Coordinates in the L_j basis (A_n uses n+1 coordinates, with
/// omega_i = L_1 + ... + L_i modulo L_1 + ... + L_{n+1}; C_n and D_n use n).
std::vector<Rational> to_orthogonal(const RootSystem& sys, const Weight& chi);
/// Inverse of to_orthogonal. Throws ValidationError if the result is not an
/// integral weight.
Weight from_orthogonal(const RootSystem& sys, const std::vector<Rational>& x);

} // namespace roofcalc
