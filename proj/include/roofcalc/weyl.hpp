#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "roofcalc/limits.hpp"
#include "roofcalc/numeric.hpp"
#include "roofcalc/rootsys.hpp"

namespace roofcalc {

/// An element of the Weyl group. Equality is decided by the image of rho,
/// which is regular, so two elements are equal iff they move rho to the same
/// weight. The stored word is always reduced.
class WeylElement {
public:
  static WeylElement identity(RootSystemPtr sys);
  static WeylElement simple(RootSystemPtr sys, int node);
  /// Any word (reduced or not); product s_{w[0]} s_{w[1]} ... acting right to left.
  static WeylElement from_word(RootSystemPtr sys, const std::vector<int>& word);
  /// Recovers the element sending rho to `key`. `key` must lie in the W-orbit of rho.
  static WeylElement from_rho_image(RootSystemPtr sys, const Weight& key);

  const RootSystemPtr& system() const noexcept { return sys_; }
  const std::vector<int>& word() const noexcept { return word_; }
  const Weight& canonical_key() const noexcept { return key_; }
  int length() const noexcept { return static_cast<int>(word_.size()); }

  WeylElement inverse() const;
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.key_ == b.key_; }

  /// "s1s3s4s3", or "e" for the identity.
  std::string word_string() const;

private:
  WeylElement(RootSystemPtr sys, std::vector<int> word, Weight key)
      : sys_(std::move(sys)), word_(std::move(word)), key_(std::move(key)) {}

  RootSystemPtr sys_;
  std::vector<int> word_;
  Weight key_;
};

/// P_I given by the crossed-out Dynkin nodes; the retained nodes I generate W_I.
class Parabolic {
public:
  Parabolic(RootSystemPtr sys, const std::vector<int>& crossed_nodes);
  static Parabolic full_group(RootSystemPtr sys) { return Parabolic(std::move(sys), {}); }
  static Parabolic borel(RootSystemPtr sys);

  const RootSystem& sys() const noexcept { return *sys_; }
  const RootSystemPtr& system() const noexcept { return sys_; }
  const std::vector<int>& crossed() const noexcept { return crossed_; }
  const std::vector<int>& retained() const noexcept { return retained_; }
  bool is_crossed(int node) const { return crossed_mask_[static_cast<std::size_t>(node - 1)]; }
  bool is_retained(int node) const { return !is_crossed(node); }

  /// Positive roots of the Levi factor (supported on retained nodes).
  const std::vector<PositiveRoot>& levi_roots() const noexcept { return levi_roots_; }
  /// 2 rho_G - 2 rho_L, the weight of the anticanonical bundle of G/P.
  Weight anticanonical() const;
  /// dim G/P = #Phi^+ - #Phi_L^+.
  int quotient_dimension() const;

  /// "{2,3}" style label of the crossed set.
  std::string crossed_label() const;

private:
  RootSystemPtr sys_;
  std::vector<int> crossed_;
  std::vector<int> retained_;
  std::vector<bool> crossed_mask_;
  std::vector<PositiveRoot> levi_roots_;
};

/// w(chi), simple reflections applied right to left.
Weight act(const WeylElement& w, const Weight& chi);
/// Number of positive roots sent to negative roots; equals w.length().
int inversion_count(const WeylElement& w);
/// The longest element of W_I (of W itself when nothing is crossed).
WeylElement longest_element(const Parabolic& p);

/// Moves chi into the dominant chamber of the Levi using retained reflections.
Weight levi_dominant_representative(const Parabolic& p, const Weight& chi);

/// The W_I-orbit of chi, sorted lexicographically.
std::vector<Weight> orbit(const Weight& chi, const Parabolic& p, const Limits& limits = {});

struct CosetRepresentative {
  WeylElement element;
  int length;
};

/// Minimal-length representatives of W/W_I, sorted by (length, w(rho)).
std::vector<CosetRepresentative> minimal_coset_reps(const Parabolic& p, const Limits& limits = {});

/// Coefficient j = number of minimal coset representatives of length j.
/// Uses (and fills) the cache in limits.cache_dir when set.
std::vector<std::uint64_t> coset_length_counts(const Parabolic& p, const Limits& limits = {});

/// |W_I| from the height distribution of the (Levi) positive roots: the
/// exponents are the dual partition of the root counts per height, and
/// |W_I| = prod (m_i + 1).
BigInt weyl_group_order(const Parabolic& p);
BigInt weyl_group_order(const RootSystem& sys);

} // namespace roofcalc
