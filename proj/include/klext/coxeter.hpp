#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "klext/rootsys.hpp"

namespace klext {

/// Sequence of generator indices s_{a1} s_{a2} ... (leftmost factor first).
struct Word {
  std::vector<std::uint8_t> letters;

  std::size_t size() const { return letters.size(); }
  friend auto operator<=>(const Word&, const Word&) = default;
};

/// "1,0,1"; the empty word is "".
std::string format_word(const Word& w);
Word parse_word(const std::string& text);

/// Subset of the Coxeter generators, as a bitmask (at most 32 generators).
class GeneratorSet {
 public:
  GeneratorSet() = default;
  explicit GeneratorSet(std::uint32_t bits) : bits_(bits) {}
  static GeneratorSet of(std::initializer_list<int> gens);
  static GeneratorSet of(const std::vector<int>& gens);

  bool contains(int s) const { return (bits_ >> s) & 1u; }
  void insert(int s) { bits_ |= (1u << s); }
  bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcount(bits_); }
  std::uint32_t bits() const { return bits_; }
  /// Ascending generator indices.
  std::vector<int> to_vector() const;
  bool is_subset_of(GeneratorSet other) const { return (bits_ & ~other.bits_) == 0; }
  GeneratorSet intersect(GeneratorSet other) const { return GeneratorSet(bits_ & other.bits_); }
  /// Smallest member, or -1.
  int first() const { return bits_ ? __builtin_ctz(bits_) : -1; }

  friend bool operator==(GeneratorSet, GeneratorSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// "{0,2}" style.
std::string format_generator_set(GeneratorSet s);
/// Parses "0,2" (or "" for the empty set). Throws InputError.
GeneratorSet parse_generator_set(const std::string& text);

/// Affine map v -> fin * v + trans on rho-shifted weight coordinates.
/// fin is row-major rank x rank.
struct AffineElement {
  IntVec fin;
  IntVec trans;

  friend bool operator==(const AffineElement&, const AffineElement&) = default;
};

struct AffineElementHash {
  std::size_t operator()(const AffineElement& e) const noexcept;
};

struct CosetDecomposition {
  AffineElement minimal;  ///< in W^J
  AffineElement parabolic;  ///< in W_J
};

/// The affine Weyl group W_l (generators 0..rank, 0 affine) or, in finite
/// mode, the finite Weyl group W (generators 1..rank), both realised by
/// exact integer affine maps on rho-shifted weight coordinates.
///
/// Generator i >= 1 reflects in <v, alpha_i^vee> = 0; generator 0 reflects in
/// <v, theta^vee> = -ell with theta the highest short root. Together these are
/// the walls of the top antidominant alcove C^-.
class CoxeterGroup {
 public:
  static CoxeterGroup affine(RootSystem rs, std::int64_t ell);
  static CoxeterGroup finite(RootSystem rs);

  const RootSystem& root_system() const { return rs_; }
  bool is_affine() const { return affine_; }
  std::int64_t ell() const { return ell_; }
  int rank() const { return rs_.rank(); }
  const std::vector<int>& generators() const { return gens_; }
  GeneratorSet all_generators() const { return all_; }
  bool is_generator(int s) const { return s >= 0 && s < 32 && all_.contains(s); }
  /// e.g. "A2~ ell=5" or "A3 finite".
  std::string describe() const;

  AffineElement identity() const;
  const AffineElement& generator(int s) const;
  AffineElement multiply(const AffineElement& a, const AffineElement& b) const;
  AffineElement inverse(const AffineElement& a) const;
  AffineElement from_word(const Word& w) const;
  IntVec act(const AffineElement& a, const IntVec& v) const;

  /// Number of reflecting hyperplanes separating the base point from its image.
  int length(const AffineElement& w) const;
  GeneratorSet right_descents(const AffineElement& w) const;
  GeneratorSet left_descents(const AffineElement& w) const;
  /// Lexicographically least reduced word (greedy smallest left descent).
  Word canonical_word(const AffineElement& w) const;
  bool bruhat_leq(const AffineElement& u, const AffineElement& w) const;

  /// True when J generates a finite subgroup.
  bool is_finite_parabolic(GeneratorSet J) const;
  /// w = minimal * parabolic with lengths adding. Throws InputError when W_J is infinite.
  CosetDecomposition coset_decompose(const AffineElement& w, GeneratorSet J) const;
  /// True when w has no right descent in J.
  bool is_minimal_in_coset(const AffineElement& w, GeneratorSet J) const;
  /// All of W_J in (length, word) order, bounded by the finite Weyl group order.
  std::vector<AffineElement> parabolic_subgroup(GeneratorSet J) const;
  /// All elements of length <= bound in (length, canonical word) order.
  std::vector<AffineElement> enumerate_ball(int length_bound) const;

  /// Order of s*t (0 for infinite).
  int coxeter_matrix_entry(int s, int t) const;

 private:
  CoxeterGroup(RootSystem rs, std::int64_t ell, bool affine);

  RootSystem rs_;
  std::int64_t ell_;
  bool affine_;
  std::vector<int> gens_;
  GeneratorSet all_;
  std::vector<AffineElement> gen_elems_;  // indexed by generator index
  IntVec base_point_;                     // base point scaled by scale_
  std::int64_t scale_;
  std::vector<std::int64_t> base_pairings_;  // <scaled base point, alpha^vee>
};

}  // namespace klext
