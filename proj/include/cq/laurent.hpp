#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace cq {

using BigInt = boost::multiprecision::cpp_int;

/// Product of variables with nonzero integer exponents, kept sorted by
/// variable name. Ordering compares the (name, exponent) lists
/// lexicographically.
class Monomial {
 public:
  using Entry = std::pair<std::string, int>;

  Monomial() = default;
  static Monomial variable(std::string name, int exponent = 1);
  static Monomial from_entries(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_one() const { return entries_.empty(); }
  int exponent(std::string_view name) const;
  int total_degree() const;

  Monomial operator*(const Monomial& other) const;
  Monomial inverse() const;
  Monomial pow(int e) const;

  /// Lex order in the usual polynomial sense: compare exponents variable by
  /// variable in name order, larger exponent wins. A monomial order.
  static bool lex_less(const Monomial& a, const Monomial& b);

  std::string to_string() const;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Entry> entries_;
};

class LaurentPoly;

class InexactDivision : public std::domain_error {
 public:
  InexactDivision(const std::string& what, std::string remainder_text)
      : std::domain_error(what), remainder(std::move(remainder_text)) {}
  std::string remainder;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Laurent polynomial over Z in named variables.
class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(long long c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const BigInt& c);
  static LaurentPoly variable(const std::string& name, int exponent = 1);
  static LaurentPoly term(const Monomial& m, const BigInt& c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Single term with coefficient +-1.
  bool is_unit() const;
  bool is_polynomial() const;  // no negative exponents
  BigInt coefficient(const Monomial& m) const;
  std::vector<std::string> variables() const;
  /// Coefficients all >= 0.
  bool has_nonnegative_coefficients() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly pow(int e) const;  // negative exponents only for units

  bool operator==(const LaurentPoly&) const = default;

  /// Canonical text: terms in descending monomial order, e.g. "3*x1^-1*x2 + 1".
  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);

  nlohmann::json to_json() const;
  static LaurentPoly from_json(const nlohmann::json& j);

 private:
  void add_term(const Monomial& m, const BigInt& c);
  TermMap terms_;
};

inline LaurentPoly operator+(long long c, const LaurentPoly& p) { return LaurentPoly(c) + p; }
inline LaurentPoly operator-(long long c, const LaurentPoly& p) { return LaurentPoly(c) - p; }
inline LaurentPoly operator*(long long c, const LaurentPoly& p) { return LaurentPoly(c) * p; }

/// Numerator over monomial denominator, numerator terms by ascending degree:
/// "(1+x2)/x1". Plain canonical text when there is no denominator.
std::string fraction_text(const LaurentPoly& p);

/// Exact division in the Laurent ring. Throws InexactDivision carrying the
/// remainder witness when the quotient is not a Laurent polynomial.
LaurentPoly exact_div(const LaurentPoly& numerator, const LaurentPoly& denominator);

/// Simultaneous substitution. Variables raised to negative powers must be
/// sent to units.
LaurentPoly substitute(const LaurentPoly& p, const std::map<std::string, LaurentPoly>& images);

/// Element of a tropical semifield: a Laurent monomial, with addition
/// given by the componentwise minimum of exponents.
class TropicalMonomial {
 public:
  TropicalMonomial() = default;
  explicit TropicalMonomial(std::map<std::string, int> exponents);

  const std::map<std::string, int>& exponents() const { return exponents_; }
  TropicalMonomial operator*(const TropicalMonomial& o) const;
  TropicalMonomial pow(int e) const;
  /// Tropical sum.
  static TropicalMonomial oplus(const TropicalMonomial& a, const TropicalMonomial& b);
  Monomial to_monomial() const;

  bool operator==(const TropicalMonomial& o) const { return exponents_ == o.exponents_; }

 private:
  void normalize();
  std::map<std::string, int> exponents_;
};

/// Evaluates a subtraction-free Laurent polynomial in the tropical semifield.
TropicalMonomial tropical_eval(const LaurentPoly& f,
                               const std::map<std::string, TropicalMonomial>& values);

}  // namespace cq
