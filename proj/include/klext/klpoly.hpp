#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "klext/coxeter.hpp"
#include "klext/intpoly.hpp"

namespace klext {

/// Identifies the group a KL table belongs to; written as the cache file header.
struct TableHeader {
  int version = 1;
  char type_label = 'A';
  int rank = 0;
  std::int64_t ell = 0;  ///< 0 means the finite Weyl group
  int generator_count = 0;

  static TableHeader for_group(const CoxeterGroup& g);
  friend bool operator==(const TableHeader&, const TableHeader&) = default;
};

/// Memo of KL polynomials P_{x,w} and mu(x,w), keyed by canonical words.
///
/// Reads take a shared lock, insertion an exclusive one. Re-inserting an
/// existing key keeps the stored value (entries are value-identical).
class KLTable {
 public:
  explicit KLTable(TableHeader header) : header_(header) {}

  const TableHeader& header() const { return header_; }

  std::optional<IntPoly> find(const Word& x, const Word& w) const;
  std::optional<std::int64_t> find_mu(const Word& x, const Word& w) const;
  void insert(const Word& x, const Word& w, const IntPoly& p);

  std::size_t size() const;
  /// Longest w-word stored (0 when empty).
  int max_length() const;

  /// Line-delimited JSON: header record then one {"x","w","p"} record per entry,
  /// sorted so that equal tables produce identical files.
  void save(const std::string& path) const;
  /// Validates the header against this table's header and merges the entries.
  /// Throws InputError on mismatch or malformed content; nothing is merged then.
  void load(const std::string& path);
  /// Reads only the header record of a cache file.
  static TableHeader read_header(const std::string& path);

 private:
  using Key = std::pair<Word, Word>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  TableHeader header_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, IntPoly, KeyHash> polys_;
  std::unordered_map<Key, std::int64_t, KeyHash> mu_;
};

/// Serial Kazhdan-Lusztig engine: memoised descent recursion over interned elements.
///
/// Not thread-safe (element interning mutates state); the KLTable it writes to is.
class KLEngine {
 public:
  explicit KLEngine(CoxeterGroup group);
  KLEngine(CoxeterGroup group, std::shared_ptr<KLTable> table);

  const CoxeterGroup& group() const { return group_; }
  KLTable& table() { return *table_; }
  std::shared_ptr<KLTable> shared_table() const { return table_; }

  /// P_{x,w} in q.
  IntPoly kl(const AffineElement& x, const AffineElement& w);
  /// Coefficient of q^{(l(w)-l(x)-1)/2} in P_{x,w}; 0 for even length difference.
  std::int64_t mu(const AffineElement& x, const AffineElement& w);

  bool leq(const AffineElement& x, const AffineElement& w);
  int length(const AffineElement& x);
  const Word& word(const AffineElement& x);
  GeneratorSet right_descents(const AffineElement& x);
  /// x * s
  AffineElement times(const AffineElement& x, int s);
  /// W_J in (length, word) order, cached per J.
  const std::vector<AffineElement>& parabolic(GeneratorSet J);

  /// Fills the table for every pair in the ball of the given radius using the
  /// OpenMP ball kernel; later kl() calls inside the ball become lookups.
  void prime(int length_bound, int threads = 0);

 private:
  struct Node {
    AffineElement elem;
    Word word;
    int length = 0;
    GeneratorSet rdesc;
    std::vector<int> rmul;  // -1 = not yet computed
    bool lower_done = false;
    std::vector<int> lower;  // ids of the lower Bruhat interval, ascending
    bool mu_done = false;
    std::vector<std::pair<int, std::int64_t>> mu_list;  // z < w with mu(z,w) != 0
  };

  int intern(const AffineElement& e);
  int rmul(int id, int s);
  bool leq_id(int x, int w);
  IntPoly kl_id(int x, int w);
  const std::vector<int>& lower_interval(int id);
  const std::vector<std::pair<int, std::int64_t>>& mu_list(int id);

  CoxeterGroup group_;
  std::shared_ptr<KLTable> table_;
  std::deque<Node> nodes_;
  std::unordered_map<AffineElement, int, AffineElementHash> ids_;
  std::map<std::uint32_t, std::vector<AffineElement>> parabolics_;
};

/// Independent oracle: R-polynomials and KL polynomials recovered by solving
/// the triangular system q^{l(w)-l(x)} P_{x,w}(1/q) = sum_z R_{x,z} P_{z,w}.
/// Shares only the group arithmetic with KLEngine.
class KLOracle {
 public:
  explicit KLOracle(CoxeterGroup group);

  IntPoly r_poly(const AffineElement& x, const AffineElement& w);
  IntPoly kl_via_r(const AffineElement& x, const AffineElement& w);

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<AffineElement, AffineElement>& p) const noexcept;
  };
  using PairMap = std::unordered_map<std::pair<AffineElement, AffineElement>, IntPoly, PairHash>;

  std::vector<AffineElement> lower_interval(const AffineElement& w);

  CoxeterGroup group_;
  PairMap r_memo_;
  PairMap p_memo_;
};

/// sum_{x in W_J} (-1)^{l(x)} P_{yx,w} without membership checks.
IntPoly alternating_kl_sum(KLEngine& engine, GeneratorSet J, const AffineElement& y, const AffineElement& w);

/// Parabolic KL polynomial P^J_{y,w} for y, w in W^J. Throws InputError otherwise
/// or when W_J is infinite.
IntPoly parabolic_kl(KLEngine& engine, GeneratorSet J, const AffineElement& y, const AffineElement& w);

}  // namespace klext
