#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace klext {

/// Polynomial with integer coefficients; coeffs()[k] multiplies x^k.
/// Used for KL polynomials in q. No trailing zeros; the zero polynomial is empty.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<std::int64_t> coeffs);
  explicit IntPoly(std::vector<std::int64_t> coeffs);

  static IntPoly constant(std::int64_t c);
  /// c * x^k
  static IntPoly monomial(std::int64_t c, int k);

  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int k) const;
  std::int64_t eval(std::int64_t x) const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly shifted(int k) const;  // times x^k
  IntPoly scaled(std::int64_t c) const;

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// "1 + 2q^3" style rendering, variable name configurable.
  std::string to_string(const std::string& var = "q") const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

}  // namespace klext
