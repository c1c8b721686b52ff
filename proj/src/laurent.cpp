#include "klcellkit/laurent.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace klck {

void Laurent::normalize() {
  size_t a = 0, b = c_.size();
  while (b > a && c_[b - 1] == 0) --b;
  while (a < b && c_[a] == 0) ++a;
  if (a == b) { c_.clear(); lo_ = 0; return; }
  if (a > 0) c_.erase(c_.begin(), c_.begin() + static_cast<long>(a));
  c_.resize(b - a);
  lo_ += static_cast<int>(a);
}

int Laurent::min_deg() const {
  if (c_.empty()) throw std::logic_error("min_deg of zero polynomial");
  return lo_;
}

int Laurent::max_deg() const {
  if (c_.empty()) throw std::logic_error("max_deg of zero polynomial");
  return lo_ + static_cast<int>(c_.size()) - 1;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.c_.empty()) return *this;
  if (c_.empty()) { *this = o; return *this; }
  int nlo = std::min(lo_, o.lo_);
  int nhi = std::max(lo_ + static_cast<int>(c_.size()), o.lo_ + static_cast<int>(o.c_.size()));
  std::vector<long long> nc(static_cast<size_t>(nhi - nlo), 0);
  for (size_t i = 0; i < c_.size(); ++i) nc[static_cast<size_t>(lo_ - nlo) + i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) nc[static_cast<size_t>(o.lo_ - nlo) + i] += o.c_[i];
  lo_ = nlo;
  c_ = std::move(nc);
  normalize();
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  Laurent t = o;
  t.scale(-1);
  return *this += t;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  if (a.c_.empty() || b.c_.empty()) return r;
  r.lo_ = a.lo_ + b.lo_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.normalize();
  return r;
}

Laurent& Laurent::scale(long long k) {
  if (k == 0) { c_.clear(); lo_ = 0; return *this; }
  for (auto& c : c_) c *= k;
  return *this;
}

Laurent Laurent::bar() const {
  Laurent r;
  if (c_.empty()) return r;
  r.c_.assign(c_.rbegin(), c_.rend());
  r.lo_ = -(lo_ + static_cast<int>(c_.size()) - 1);
  return r;
}

long long Laurent::eval_at_one() const {
  long long s = 0;
  for (auto c : c_) s += c;
  return s;
}

void Laurent::add_term(long long c, int e) { *this += monomial(c, e); }

namespace {
std::string term_str(long long c, int e, const std::string& var, bool leading) {
  std::ostringstream os;
  long long a = c;
  if (leading) {
    if (a < 0) { os << "-"; a = -a; }
  } else {
    os << (a < 0 ? " - " : " + ");
    if (a < 0) a = -a;
  }
  if (e == 0) { os << a; return os.str(); }
  if (a != 1) os << a << "*";
  os << var;
  if (e != 1) os << "^" << e;
  return os.str();
}
} // namespace

std::string Laurent::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    out += term_str(c_[i], lo_ + static_cast<int>(i), var, first);
    first = false;
  }
  return out;
}

std::string Laurent::str_q() const {
  if (c_.empty()) return "0";
  bool q_ok = lo_ >= 0;
  if (q_ok)
    for (size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0 && (lo_ + static_cast<int>(i)) % 2 != 0) { q_ok = false; break; }
  if (!q_ok) return str();
  std::string out;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    out += term_str(c_[i], (lo_ + static_cast<int>(i)) / 2, "q", first);
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Laurent& p) { return os << p.str(); }

} // namespace klck
