#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "latq/rational.hpp"
#include "latq/verdict.hpp"

namespace latq {

// Polynomial in q with exact rational coefficients, dense and trimmed:
// no trailing zero coefficients, and the zero polynomial has an empty
// coefficient list (degree() == -1).
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static QPolynomial zero() { return QPolynomial(); }
  static QPolynomial constant(Rat c) { return QPolynomial({std::move(c)}); }

  int degree() const { return (int)coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  Rat coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }

  void add_term(std::size_t k, const Rat& c) {
    if (c == 0) return;
    if (coeffs_.size() <= k) coeffs_.resize(k + 1, Rat(0));
    coeffs_[k] += c;
    trim();
  }

  QPolynomial operator+(const QPolynomial& other) const {
    std::vector<Rat> out(std::max(coeffs_.size(), other.coeffs_.size()), Rat(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] += coeffs_[k];
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) out[k] += other.coeffs_[k];
    return QPolynomial(std::move(out));
  }

  QPolynomial operator-(const QPolynomial& other) const {
    std::vector<Rat> out(std::max(coeffs_.size(), other.coeffs_.size()), Rat(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] += coeffs_[k];
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) out[k] -= other.coeffs_[k];
    return QPolynomial(std::move(out));
  }

  QPolynomial operator*(const QPolynomial& other) const {
    if (coeffs_.empty() || other.coeffs_.empty()) return zero();
    std::vector<Rat> out(coeffs_.size() + other.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    return QPolynomial(std::move(out));
  }

  bool operator==(const QPolynomial& other) const { return coeffs_ == other.coeffs_; }
  bool operator!=(const QPolynomial& other) const { return !(*this == other); }

  Rat eval(const Rat& q) const {
    Rat v(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * q + *it;
    return v;
  }

  // Space-separated coefficients, constant term first; "0" for zero.
  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (k) s += " ";
      s += rat_to_string(coeffs_[k]);
    }
    return s;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rat> coeffs_;
};

// p << r in the coefficient-dominance order: every coefficient of r - p
// is non-negative. The witness names the first offending power of q.
inline Verdict poly_dominates(const QPolynomial& p, const QPolynomial& r) {
  const std::size_t top = std::max(p.coeffs().size(), r.coeffs().size());
  for (std::size_t k = 0; k < top; ++k) {
    if (p.coeff(k) > r.coeff(k))
      return Verdict::fail({"coefficient-dominance",
                            {"q^" + std::to_string(k)},
                            rat_to_string(p.coeff(k)),
                            rat_to_string(r.coeff(k))});
  }
  return Verdict::ok();
}

}  // namespace latq
