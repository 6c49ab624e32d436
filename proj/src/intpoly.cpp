#include "klext/intpoly.hpp"

#include <sstream>

#include "klext/error.hpp"

namespace klext {

IntPoly::IntPoly(std::initializer_list<std::int64_t> coeffs) : coeffs_(coeffs) { trim(); }

IntPoly::IntPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(std::int64_t c) { return IntPoly{c}; }

IntPoly IntPoly::monomial(std::int64_t c, int k) {
  if (k < 0) throw InternalError("negative exponent in IntPoly::monomial");
  std::vector<std::int64_t> v(static_cast<std::size_t>(k) + 1, 0);
  v.back() = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t IntPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

std::int64_t IntPoly::eval(std::int64_t x) const {
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = checked::add(checked::mul(acc, x), *it);
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k)
    coeffs_[k] = checked::add(coeffs_[k], other.coeffs_[k]);
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k)
    coeffs_[k] = checked::sub(coeffs_[k], other.coeffs_[k]);
  trim();
  return *this;
}

IntPoly IntPoly::shifted(int k) const {
  if (k < 0) throw InternalError("negative shift in IntPoly::shifted");
  if (is_zero()) return {};
  std::vector<std::int64_t> v(static_cast<std::size_t>(k), 0);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::scaled(std::int64_t c) const {
  std::vector<std::int64_t> v(coeffs_);
  for (auto& x : v) x = checked::mul(x, c);
  return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      v[i + j] = checked::add(v[i + j], checked::mul(a.coeffs_[i], b.coeffs_[j]));
  return IntPoly(std::move(v));
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    std::int64_t c = coeffs_[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::int64_t mag = c < 0 ? -c : c;
    if (k == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag;
      out << var;
      if (k > 1) out << "^" << k;
    }
    first = false;
  }
  return out.str();
}

}  // namespace klext
