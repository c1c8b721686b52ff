#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace klck {

/// Integer-coefficient Laurent polynomial in one variable v.
///
/// Stored as a dense coefficient window [lo, lo + size). The zero polynomial
/// has an empty window. Invariant: no leading or trailing zero coefficients.
class Laurent {
public:
  Laurent() = default;
  explicit Laurent(long long constant) {
    if (constant != 0) { lo_ = 0; c_ = {constant}; }
  }
  /// Monomial c * v^e.
  static Laurent monomial(long long c, int e) {
    Laurent p;
    if (c != 0) { p.lo_ = e; p.c_ = {c}; }
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int min_deg() const;   // throws on zero
  int max_deg() const;   // throws on zero
  long long coeff(int e) const {
    if (c_.empty() || e < lo_ || e >= lo_ + static_cast<int>(c_.size())) return 0;
    return c_[static_cast<size_t>(e - lo_)];
  }

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { a += b; return a; }
  friend Laurent operator-(Laurent a, const Laurent& b) { a -= b; return a; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  bool operator==(const Laurent& o) const {
    return (is_zero() && o.is_zero()) || (lo_ == o.lo_ && c_ == o.c_);
  }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  Laurent& scale(long long k);
  Laurent& shift(int e) { if (!c_.empty()) lo_ += e; return *this; }
  /// The bar involution v -> v^{-1}.
  Laurent bar() const;
  /// Substitute v := 1.
  long long eval_at_one() const;
  /// True iff invariant under v -> v^{-1}.
  bool is_bar_symmetric() const { return *this == bar(); }

  /// Add c * v^e in place.
  void add_term(long long c, int e);

  /// Rendering: "v^-2 + 2 + v^2" style; `var` names the variable.
  std::string str(const std::string& var = "v") const;
  /// Renders in q = v^2 when every exponent is even and nonnegative.
  std::string str_q() const;

  const std::vector<long long>& coeffs() const { return c_; }
  int lo() const { return lo_; }

private:
  void normalize();
  int lo_ = 0;
  std::vector<long long> c_;
};

std::ostream& operator<<(std::ostream& os, const Laurent& p);

} // namespace klck
