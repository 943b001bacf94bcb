#ifndef CHNLAB_MONOMIAL_HPP
#define CHNLAB_MONOMIAL_HPP

#include <map>
#include <string>

namespace chnlab {

/// Laurent monomial: indeterminate name -> integer exponent.
/// Zero exponents are never stored, so the map itself is the canonical form.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const std::string& var, int exp = 1) {
    if (exp != 0) e_[var] = exp;
  }

  bool is_one() const { return e_.empty(); }
  int exponent(const std::string& var) const {
    auto it = e_.find(var);
    return it == e_.end() ? 0 : it->second;
  }
  const std::map<std::string, int>& exponents() const { return e_; }

  /// True when every exponent is nonnegative (a genuine polynomial monomial).
  bool is_proper() const {
    for (const auto& [v, e] : e_)
      if (e < 0) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (const auto& [v, e] : o.e_) {
      int ne = r.exponent(v) + e;
      if (ne == 0)
        r.e_.erase(v);
      else
        r.e_[v] = ne;
    }
    return r;
  }
  Monomial operator/(const Monomial& o) const { return *this * o.inverse(); }
  Monomial inverse() const {
    Monomial r;
    for (const auto& [v, e] : e_) r.e_[v] = -e;
    return r;
  }
  Monomial pow(int k) const {
    Monomial r;
    if (k != 0)
      for (const auto& [v, e] : e_) r.e_[v] = e * k;
    return r;
  }

  /// Componentwise divisibility for proper monomials (used by poly division).
  bool divides(const Monomial& o) const {
    for (const auto& [v, e] : e_)
      if (e > o.exponent(v)) return false;
    return true;
  }

  /// Fixed global order: lexicographic over the sorted variable names,
  /// higher exponent first. Total, multiplication-invariant.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    auto ia = a.e_.begin(), ib = b.e_.begin();
    while (ia != a.e_.end() && ib != b.e_.end()) {
      if (ia->first != ib->first) {
        // the lexicographically earlier variable name dominates; the one that
        // lacks it has exponent 0 there
        if (ia->first < ib->first) return ia->second < 0;
        return ib->second > 0;
      }
      if (ia->second != ib->second) return ia->second < ib->second;
      ++ia;
      ++ib;
    }
    if (ia != a.e_.end()) return ia->second < 0;
    if (ib != b.e_.end()) return ib->second > 0;
    return false;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::map<std::string, int> e_;
};

}  // namespace chnlab

#endif
