#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace klext {

using IntVec = std::vector<std::int64_t>;

/// Integral weight in the fundamental-weight basis: coords[i] = <lambda, alpha_i^vee>.
struct Weight {
  IntVec coords;

  std::size_t rank() const { return coords.size(); }
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// "[a1,...,an]"
std::string format_weight(const Weight& w);
/// Parses "[a1,...,an]" (whitespace tolerated). Throws InputError.
Weight parse_weight(const std::string& text);

bool is_dominant(const Weight& w);

/// Finite irreducible reduced root system of type A-G, Bourbaki numbering.
///
/// Roots are kept in simple-root coordinates, coroots in simple-coroot
/// coordinates, weights in fundamental-weight coordinates. The Cartan matrix
/// is cartan[i][j] = <alpha_i^vee, alpha_j>, so simple root alpha_j has
/// fundamental coordinates given by column j.
class RootSystem {
 public:
  /// Throws InputError for an invalid (type, rank) pair.
  static RootSystem build(char type_label, int rank);

  char type_label() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, type_) + std::to_string(rank_); }

  const std::vector<IntVec>& cartan() const { return cartan_; }
  const std::vector<IntVec>& positive_roots() const { return roots_; }
  const std::vector<IntVec>& positive_coroots() const { return coroots_; }
  /// Half the squared length of simple root i, normalised so the short roots have 1.
  const IntVec& symmetrizer() const { return sym_; }

  Weight rho() const;
  int coxeter_number() const { return coxeter_; }
  int dual_coxeter_number() const { return dual_coxeter_; }
  int lacing() const { return lacing_; }
  /// Index into positive_roots(); its coroot is the highest coroot.
  std::size_t highest_short_root() const { return highest_short_; }
  /// Order of the finite Weyl group.
  std::int64_t weyl_group_order() const;

  /// <lambda, alpha^vee> for the positive coroot with the given index.
  std::int64_t pair(const Weight& lambda, std::size_t coroot_index) const;
  /// Same pairing for an arbitrary coordinate vector (e.g. a rho-shifted point).
  std::int64_t pair(const IntVec& v, std::size_t coroot_index) const;
  /// Positive root with the given index expressed in fundamental-weight coordinates.
  IntVec root_in_weight_coords(std::size_t root_index) const;
  /// Index of the simple root alpha_i (0-based) in positive_roots().
  std::size_t simple_root_index(int i) const { return simple_index_[static_cast<std::size_t>(i)]; }

 private:
  RootSystem() = default;

  char type_ = 'A';
  int rank_ = 0;
  std::vector<IntVec> cartan_;
  IntVec sym_;
  std::vector<IntVec> roots_;
  std::vector<IntVec> coroots_;
  std::vector<std::size_t> simple_index_;
  int coxeter_ = 0;
  int dual_coxeter_ = 0;
  int lacing_ = 1;
  std::size_t highest_short_ = 0;
};

}  // namespace klext
