#ifndef CHNLAB_POLYNOMIAL_HPP
#define CHNLAB_POLYNOMIAL_HPP

#include <map>
#include <set>
#include <string>

#include "chnlab/gauss_rational.hpp"
#include "chnlab/monomial.hpp"

namespace chnlab {

/// Thrown by evaluation when the requested point is inadmissible
/// (denominator vanishes, or a negative power of zero is needed).
struct BadEvaluationPoint : std::domain_error {
  explicit BadEvaluationPoint(const std::string& what) : std::domain_error(what) {}
};

/// Sparse Laurent polynomial over the Gaussian rationals.
/// Zero coefficients are never stored.
class Poly {
 public:
  using Map = std::map<Monomial, GaussRational>;

  Poly() = default;
  explicit Poly(GaussRational c) {
    if (!c.is_zero()) t_[Monomial()] = std::move(c);
  }
  Poly(Monomial m, GaussRational c) {
    if (!c.is_zero()) t_[std::move(m)] = std::move(c);
  }
  static Poly one() { return Poly(GaussRational(1)); }
  static Poly variable(const std::string& name, int exp = 1) {
    return Poly(Monomial(name, exp), GaussRational(1));
  }

  bool is_zero() const { return t_.empty(); }
  bool is_one() const;
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one()); }
  const Map& terms() const { return t_; }
  std::size_t term_count() const { return t_.size(); }

  void add_term(const Monomial& m, const GaussRational& c);

  const GaussRational& coeff(const Monomial& m) const;

  /// Leading term under the fixed global monomial order (largest monomial).
  const Monomial& leading_monomial() const;
  const GaussRational& leading_coeff() const;

  std::set<std::string> variables() const;

  /// Componentwise minimum exponent over all terms (0 for a variable that is
  /// absent from some term): the Laurent monomial content.
  Monomial monomial_content() const;

  /// True when all exponents are nonnegative.
  bool is_proper() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  Poly mul_term(const Monomial& m, const GaussRational& c) const;
  Poly mul_coeff(const GaussRational& c) const { return mul_term(Monomial(), c); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Exact quotient of proper polynomials; throws std::logic_error when the
  /// division is not exact (never expected on internal call sites).
  static Poly exact_div(const Poly& a, const Poly& b);

  /// GCD of proper polynomials, normalized monic under the global order.
  static Poly gcd(const Poly& a, const Poly& b);
  static Poly lcm(const Poly& a, const Poly& b);

  GaussRational evaluate(const std::map<std::string, GaussRational>& point) const;

  std::string to_string() const;

 private:
  Map t_;
};

}  // namespace chnlab

#endif
