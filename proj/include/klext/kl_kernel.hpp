#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "klext/coxeter.hpp"
#include "klext/intpoly.hpp"

namespace klext {

class KLTable;

/// All KL polynomials P_{x,w} for x <= w inside the ball of a given radius.
///
/// Elements are indexed in (length, canonical word) order. Bruhat order and
/// KL polynomials are filled one length layer at a time; every w in a layer
/// depends only on earlier layers, so each layer is an OpenMP parallel loop.
/// Results do not depend on the thread count. KLEngine::kl is the serial
/// reference this kernel is tested against.
class BallKL {
 public:
  /// threads <= 0 uses the OpenMP default.
  BallKL(const CoxeterGroup& group, int length_bound, int threads = 0);

  std::size_t size() const { return elems_.size(); }
  int length_bound() const { return bound_; }
  const AffineElement& element(std::size_t i) const { return elems_[i]; }
  const Word& word(std::size_t i) const { return words_[i]; }
  int length(std::size_t i) const { return lengths_[i]; }
  /// -1 when outside the ball.
  int index_of(const AffineElement& e) const;

  bool leq(std::size_t x, std::size_t w) const { return leq_[w * elems_.size() + x] != 0; }
  /// Zero polynomial when x is not below w.
  const IntPoly& poly(std::size_t x, std::size_t w) const;
  /// Elements of the lower Bruhat interval of w, ascending.
  const std::vector<int>& lower(std::size_t w) const { return lower_[w]; }

  void export_to(KLTable& table) const;

 private:
  int bound_;
  int gen_count_;
  std::vector<AffineElement> elems_;
  std::vector<Word> words_;
  std::vector<int> lengths_;
  std::vector<std::uint32_t> rdesc_;
  std::vector<int> rmul_;  // [i * gen_count_ + s], -1 outside the ball
  std::unordered_map<AffineElement, int, AffineElementHash> index_;
  std::vector<std::uint8_t> leq_;  // [w * N + x]
  std::vector<std::vector<int>> lower_;
  std::vector<std::vector<IntPoly>> polys_;  // aligned with lower_
  IntPoly zero_;
};

}  // namespace klext
