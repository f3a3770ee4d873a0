#include "cq/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace cq {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::string name, int exponent) {
  Monomial m;
  if (exponent != 0) m.entries_.emplace_back(std::move(name), exponent);
  return m;
}

Monomial Monomial::from_entries(std::vector<Entry> entries) {
  std::map<std::string, int> acc;
  for (auto& [name, e] : entries) acc[name] += e;
  Monomial m;
  for (auto& [name, e] : acc)
    if (e != 0) m.entries_.emplace_back(name, e);
  return m;
}

int Monomial::exponent(std::string_view name) const {
  for (const auto& [n, e] : entries_)
    if (n == name) return e;
  return 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [n, e] : entries_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.entries_.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      out.entries_.push_back(*b++);
    } else {
      const int e = a->second + b->second;
      if (e != 0) out.entries_.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::inverse() const { return pow(-1); }

Monomial Monomial::pow(int e) const {
  Monomial out;
  if (e == 0) return out;
  for (const auto& [n, x] : entries_) out.entries_.emplace_back(n, x * e);
  return out;
}

bool Monomial::lex_less(const Monomial& a, const Monomial& b) {
  auto ia = a.entries_.begin();
  auto ib = b.entries_.begin();
  while (ia != a.entries_.end() || ib != b.entries_.end()) {
    int ea = 0;
    int eb = 0;
    if (ib == b.entries_.end() || (ia != a.entries_.end() && ia->first < ib->first)) {
      ea = ia->second;
      ++ia;
    } else if (ia == a.entries_.end() || ib->first < ia->first) {
      eb = ib->second;
      ++ib;
    } else {
      ea = ia->second;
      eb = ib->second;
      ++ia;
      ++ib;
    }
    if (ea != eb) return ea < eb;
  }
  return false;
}

std::string Monomial::to_string() const {
  if (entries_.empty()) return "1";
  std::string out;
  for (const auto& [n, e] : entries_) {
    if (!out.empty()) out += '*';
    out += n;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

// ------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long long c) {
  if (c != 0) terms_.emplace(Monomial{}, BigInt(c));
}

LaurentPoly::LaurentPoly(const BigInt& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

LaurentPoly LaurentPoly::variable(const std::string& name, int exponent) {
  return term(Monomial::variable(name, exponent));
}

LaurentPoly LaurentPoly::term(const Monomial& m, const BigInt& c) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

void LaurentPoly::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
}

bool LaurentPoly::is_polynomial() const {
  for (const auto& [m, c] : terms_)
    for (const auto& [n, e] : m.entries())
      if (e < 0) return false;
  return true;
}

BigInt LaurentPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::vector<std::string> LaurentPoly::variables() const {
  std::set<std::string> names;
  for (const auto& [m, c] : terms_)
    for (const auto& [n, e] : m.entries()) names.insert(n);
  return {names.begin(), names.end()};
}

bool LaurentPoly::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  out += o;
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  out -= o;
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) {
    if (!is_unit()) throw std::domain_error("negative power of a non-unit: " + to_string());
    const auto& [m, c] = *terms_.begin();
    return term(m.pow(e), (-e) % 2 == 1 ? c : BigInt(1));
  }
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (m.is_one())
      out += mag.str();
    else if (mag == 1)
      out += m.to_string();
    else
      out += mag.str() + "*" + m.to_string();
  }
  return out;
}

std::string fraction_text(const LaurentPoly& p) {
  std::map<std::string, int> lowest;
  for (const auto& [m, c] : p.terms())
    for (const auto& [name, e] : m.entries()) lowest[name] = std::min(lowest[name], e);
  std::vector<Monomial::Entry> den;
  for (const auto& [name, e] : lowest)
    if (e < 0) den.emplace_back(name, -e);
  if (den.empty()) return p.to_string();
  const Monomial denominator = Monomial::from_entries(den);
  std::vector<std::pair<Monomial, BigInt>> num;
  for (const auto& [m, c] : p.terms()) num.emplace_back(m * denominator, c);
  std::stable_sort(num.begin(), num.end(), [](const auto& a, const auto& b) {
    return a.first.total_degree() < b.first.total_degree();
  });
  std::string out;
  for (const auto& [m, c] : num) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (negative) out += "-";
    else if (!out.empty()) out += "+";
    if (m.is_one()) out += mag.str();
    else if (mag == 1) out += m.to_string();
    else out += mag.str() + "*" + m.to_string();
  }
  if (num.size() > 1) out = "(" + out + ")";
  const std::string d = denominator.to_string();
  return out + "/" + (den.size() > 1 ? "(" + d + ")" : d);
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  LaurentPoly parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    LaurentPoly result = parse_sum();
    if (!at_end()) fail(depth_ > 0 ? "expected ')'" : "expected '+' or '-'");
    return result;
  }

 private:
  LaurentPoly parse_sum() {
    LaurentPoly result;
    bool negative = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      negative = get() == '-';
      skip_ws();
    }
    result += negative ? -parse_product() : parse_product();
    while (!at_end() && (peek() == '+' || peek() == '-')) {
      const char op = get();
      skip_ws();
      const LaurentPoly t = parse_product();
      result += op == '-' ? -t : t;
    }
    return result;
  }

  LaurentPoly parse_product() {
    LaurentPoly result = parse_factor();
    while (!at_end() && peek() == '*') {
      get();
      skip_ws();
      result *= parse_factor();
    }
    return result;
  }

  // integer, variable or parenthesised sum, with an optional integer exponent
  LaurentPoly parse_factor() {
    if (at_end()) fail("unexpected end of input");
    LaurentPoly base;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      base = LaurentPoly(parse_integer());
      skip_ws();
      return base;
    }
    if (peek() == '(') {
      get();
      skip_ws();
      ++depth_;
      base = parse_sum();
      --depth_;
      if (at_end() || peek() != ')') fail("expected ')'");
      get();
    } else {
      base = LaurentPoly::variable(parse_name());
    }
    skip_ws();
    if (!at_end() && peek() == '^') {
      get();
      skip_ws();
      bool neg = false;
      if (!at_end() && peek() == '-') {
        neg = true;
        get();
      }
      BigInt v = parse_integer();
      if (v > 1000000) fail("exponent too large");
      const int e = static_cast<int>(v) * (neg ? -1 : 1);
      try {
        base = base.pow(e);
      } catch (const std::exception&) {
        fail("negative power of a non-monomial");
      }
      skip_ws();
    }
    return base;
  }

  std::string parse_name() {
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
      fail("expected variable name");
    std::string name;
    while (!at_end()) {
      const char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'') {
        name += get();
      } else if (c == '[') {
        while (!at_end() && peek() != ']') name += get();
        if (at_end()) fail("unterminated '['");
        name += get();
      } else {
        break;
      }
    }
    return name;
  }

  BigInt parse_integer() {
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
    if (digits.empty()) fail("expected integer");
    return BigInt(digits);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  char get() { return s_[pos_++]; }
  int depth_ = 0;
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) { return Parser(text).parse(); }

nlohmann::json LaurentPoly::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    nlohmann::json mono = nlohmann::json::object();
    for (const auto& [n, e] : it->first.entries()) mono[n] = e;
    terms.push_back({{"coeff", it->second.str()}, {"monomial", mono}});
  }
  return {{"text", to_string()}, {"terms", terms}};
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse(j.get<std::string>());
  if (j.contains("terms")) {
    LaurentPoly p;
    for (const auto& t : j["terms"]) {
      std::vector<Monomial::Entry> entries;
      for (auto it = t.at("monomial").begin(); it != t.at("monomial").end(); ++it)
        entries.emplace_back(it.key(), it.value().get<int>());
      p.add_term(Monomial::from_entries(std::move(entries)), BigInt(t.at("coeff").get<std::string>()));
    }
    return p;
  }
  return parse(j.at("text").get<std::string>());
}

// --------------------------------------------------------------- division

namespace {

// per-variable minimum exponent over all terms, as a monomial
Monomial min_exponents(const LaurentPoly& p) {
  std::map<std::string, int> mins;
  for (const auto& var : p.variables()) mins[var] = 0;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    for (auto& [var, lo] : mins) {
      const int e = m.exponent(var);
      lo = first ? e : std::min(lo, e);
    }
    first = false;
  }
  std::vector<Monomial::Entry> entries(mins.begin(), mins.end());
  return Monomial::from_entries(std::move(entries));
}

LaurentPoly shift(const LaurentPoly& p, const Monomial& m) { return p * LaurentPoly::term(m); }

std::pair<Monomial, BigInt> leading_term(const LaurentPoly& p) {
  auto best = p.terms().begin();
  for (auto it = p.terms().begin(); it != p.terms().end(); ++it)
    if (Monomial::lex_less(best->first, it->first)) best = it;
  return *best;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (const auto& [n, e] : a.entries())
    if (b.exponent(n) < e) return false;
  return true;
}

}  // namespace

LaurentPoly exact_div(const LaurentPoly& numerator, const LaurentPoly& denominator) {
  if (denominator.is_zero()) throw std::domain_error("division by zero");
  if (numerator.is_zero()) return {};

  if (denominator.is_monomial()) {
    const auto& [dm, dc] = *denominator.terms().begin();
    const Monomial inv = dm.inverse();
    LaurentPoly q;
    for (const auto& [m, c] : numerator.terms()) {
      if (c % dc != 0)
        throw InexactDivision("coefficient not divisible by " + dc.str(), numerator.to_string());
      q += LaurentPoly::term(m * inv, c / dc);
    }
    return q;
  }

  // Clear denominators so both sides are polynomials not divisible by any
  // variable, then run multivariate division in lex order.
  const Monomial num_shift = min_exponents(numerator).inverse();
  const Monomial den_shift = min_exponents(denominator).inverse();
  LaurentPoly rem = shift(numerator, num_shift);
  const LaurentPoly den = shift(denominator, den_shift);
  const auto [lead_m, lead_c] = leading_term(den);

  LaurentPoly quotient;
  while (!rem.is_zero()) {
    const auto [rm, rc] = leading_term(rem);
    if (!divides(lead_m, rm) || rc % lead_c != 0) {
      const LaurentPoly witness = shift(rem, num_shift.inverse());
      throw InexactDivision("not divisible by " + denominator.to_string(), witness.to_string());
    }
    const LaurentPoly t = LaurentPoly::term(rm * lead_m.inverse(), rc / lead_c);
    quotient += t;
    rem -= t * den;
  }
  return shift(quotient, num_shift.inverse() * den_shift);
}

LaurentPoly substitute(const LaurentPoly& p, const std::map<std::string, LaurentPoly>& images) {
  LaurentPoly out;
  std::map<std::pair<std::string, int>, LaurentPoly> power_cache;
  for (const auto& [m, c] : p.terms()) {
    LaurentPoly t(c);
    std::vector<Monomial::Entry> kept;
    for (const auto& [name, e] : m.entries()) {
      auto it = images.find(name);
      if (it == images.end()) {
        kept.emplace_back(name, e);
        continue;
      }
      if (e < 0 && !it->second.is_unit())
        throw std::domain_error("cannot invert the image of " + name + ": " + it->second.to_string());
      auto key = std::make_pair(name, e);
      auto cached = power_cache.find(key);
      if (cached == power_cache.end()) cached = power_cache.emplace(key, it->second.pow(e)).first;
      t *= cached->second;
    }
    if (!kept.empty()) t *= LaurentPoly::term(Monomial::from_entries(std::move(kept)));
    out += t;
  }
  return out;
}

// --------------------------------------------------------------- tropical

TropicalMonomial::TropicalMonomial(std::map<std::string, int> exponents)
    : exponents_(std::move(exponents)) {
  normalize();
}

void TropicalMonomial::normalize() {
  std::erase_if(exponents_, [](const auto& kv) { return kv.second == 0; });
}

TropicalMonomial TropicalMonomial::operator*(const TropicalMonomial& o) const {
  auto e = exponents_;
  for (const auto& [n, x] : o.exponents_) e[n] += x;
  return TropicalMonomial(std::move(e));
}

TropicalMonomial TropicalMonomial::pow(int k) const {
  auto e = exponents_;
  for (auto& [n, x] : e) x *= k;
  return TropicalMonomial(std::move(e));
}

TropicalMonomial TropicalMonomial::oplus(const TropicalMonomial& a, const TropicalMonomial& b) {
  std::map<std::string, int> e;
  for (const auto& [n, x] : a.exponents_) e[n] = std::min(x, b.exponents_.count(n) ? b.exponents_.at(n) : 0);
  for (const auto& [n, x] : b.exponents_)
    if (!e.count(n)) e[n] = std::min(x, 0);
  return TropicalMonomial(std::move(e));
}

Monomial TropicalMonomial::to_monomial() const {
  return Monomial::from_entries({exponents_.begin(), exponents_.end()});
}

TropicalMonomial tropical_eval(const LaurentPoly& f,
                               const std::map<std::string, TropicalMonomial>& values) {
  if (f.is_zero()) throw std::domain_error("tropical evaluation of zero");
  bool first = true;
  TropicalMonomial acc;
  for (const auto& [m, c] : f.terms()) {
    if (c < 0) throw std::domain_error("tropical evaluation needs a subtraction-free polynomial");
    TropicalMonomial t;
    for (const auto& [name, e] : m.entries()) {
      auto it = values.find(name);
      if (it == values.end()) throw std::domain_error("no tropical value for " + name);
      t = t * it->second.pow(e);
    }
    acc = first ? t : TropicalMonomial::oplus(acc, t);
    first = false;
  }
  return acc;
}

}  // namespace cq
