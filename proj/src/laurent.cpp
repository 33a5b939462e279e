#include "koszul/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "koszul/errors.hpp"

namespace koszul {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(Degree{}, c);
}

LaurentPoly LaurentPoly::monomial(const Degree& d, const mpz_class& c) {
  LaurentPoly p;
  p.add_term(d, c);
  return p;
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("Laurent polynomial '" + std::string(s) + "': " + what + " at offset " +
                         std::to_string(i),
                     0);
  }
  std::string digits() {
    skip();
    std::size_t b = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (b == i) fail("expected digits");
    return std::string(s.substr(b, i - b));
  }
  int exponent() {
    bool brace = eat('{');
    int sign = eat('-') ? -1 : 1;
    int v = std::stoi(digits());
    if (brace && !eat('}')) fail("missing }");
    return sign * v;
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
  Cursor cur{text};
  LaurentPoly out;
  bool first = true;
  if (cur.peek() == '\0') cur.fail("empty input");
  while (cur.peek() != '\0') {
    int sign = 1;
    if (cur.eat('-'))
      sign = -1;
    else if (!cur.eat('+') && !first)
      cur.fail("expected + or -");
    first = false;
    mpz_class coef = sign;
    Degree d;
    bool more = true;
    while (more) {
      char c = cur.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coef *= mpz_class(cur.digits());
      } else if (c == 'q' || c == 't' || c == 'a') {
        ++cur.i;
        int e = cur.eat('^') ? cur.exponent() : 1;
        (c == 'q' ? d.q : c == 't' ? d.t : d.a) += e;
      } else {
        cur.fail("expected coefficient or variable");
      }
      more = cur.eat('*');
      if (!more) {
        char n = cur.peek();
        // Juxtaposed variables such as "q^2t" are accepted as products.
        more = n == 'q' || n == 't' || n == 'a';
      }
    }
    out.add_term(d, coef);
  }
  return out;
}

mpz_class LaurentPoly::coefficient(const Degree& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::add_term(const Degree& d, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(d, 0);
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [d, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  LaurentPoly r;
  for (const auto& [d1, c1] : x.terms_)
    for (const auto& [d2, c2] : y.terms_) r.add_term(d1 + d2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly r = 1, base = *this;
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

LaurentPoly LaurentPoly::shifted(const Degree& s) const {
  LaurentPoly r;
  for (const auto& [d, c] : terms_) r.terms_.emplace(d + s, c);
  return r;
}

LaurentPoly LaurentPoly::substitute_a_qpow(int N) const {
  LaurentPoly r;
  for (const auto& [d, c] : terms_) r.add_term({d.q + N * d.a, d.t, 0}, c);
  return r;
}

LaurentPoly LaurentPoly::substitute_a_tinv() const {
  LaurentPoly r;
  for (const auto& [d, c] : terms_) r.add_term({d.q, d.t - d.a, 0}, c);
  return r;
}

Degree LaurentPoly::min_degree() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no terms");
  return terms_.begin()->first;
}

Degree LaurentPoly::max_degree() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no terms");
  return terms_.rbegin()->first;
}

Degree LaurentPoly::min_exponents() const {
  Degree m = min_degree();
  for (const auto& [d, c] : terms_) m = {std::min(m.q, d.q), std::min(m.t, d.t), std::min(m.a, d.a)};
  return m;
}

Degree LaurentPoly::max_exponents() const {
  Degree m = min_degree();
  for (const auto& [d, c] : terms_) m = {std::max(m.q, d.q), std::max(m.t, d.t), std::max(m.a, d.a)};
  return m;
}

mpz_class LaurentPoly::coefficient_sum() const {
  mpz_class s = 0;
  for (const auto& [d, c] : terms_) s += c;
  return s;
}

bool LaurentPoly::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second > 0; });
}

bool LaurentPoly::involves_a() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.a != 0; });
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (is_zero()) return LaurentPoly{};
  // Exponents of a quotient are confined to this box in every variable.
  Degree lo = min_exponents() - divisor.min_exponents();
  Degree hi = max_exponents() - divisor.max_exponents();
  const Degree lead = divisor.max_degree();
  const mpz_class lead_c = divisor.coefficient(lead);
  LaurentPoly rem = *this, quot;
  while (!rem.is_zero()) {
    Degree top = rem.max_degree();
    Degree m = top - lead;
    if (m.q < lo.q || m.q > hi.q || m.t < lo.t || m.t > hi.t || m.a < lo.a || m.a > hi.a)
      return std::nullopt;
    const mpz_class& c = rem.terms_.at(top);
    if (!mpz_divisible_p(c.get_mpz_t(), lead_c.get_mpz_t())) return std::nullopt;
    mpz_class f = c / lead_c;
    quot.add_term(m, f);
    for (const auto& [d, v] : divisor.terms_) rem.add_term(d + m, -f * v);
  }
  return quot;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    bool neg = c < 0;
    mpz_class a = neg ? mpz_class(-c) : c;
    s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    std::string mono;
    auto var = [&](char v, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (e != 1) mono += "^" + std::to_string(e);
    };
    var('q', d.q);
    var('t', d.t);
    var('a', d.a);
    if (mono.empty())
      s += a.get_str();
    else
      s += (a == 1 ? "" : a.get_str() + "*") + mono;
  }
  return s;
}

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ -= o.num_;
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
  }
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  return *this;
}

RationalFunction operator/(const RationalFunction& x, const RationalFunction& y) {
  if (y.num_.is_zero()) throw std::domain_error("division by the zero rational function");
  return RationalFunction(x.num_ * y.den_, x.den_ * y.num_);
}

bool operator==(const RationalFunction& x, const RationalFunction& y) {
  return x.num_ * y.den_ == y.num_ * x.den_;
}

RationalFunction RationalFunction::shifted(const Degree& d) const {
  return RationalFunction(num_.shifted(d), den_);
}

RationalFunction RationalFunction::substitute_a_qpow(int N) const {
  return RationalFunction(num_.substitute_a_qpow(N), den_.substitute_a_qpow(N));
}

RationalFunction RationalFunction::substitute_a_tinv() const {
  return RationalFunction(num_.substitute_a_tinv(), den_.substitute_a_tinv());
}

std::optional<LaurentPoly> RationalFunction::as_polynomial() const {
  return num_.divide_exact(den_);
}

std::string RationalFunction::to_string() const {
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

bool identity_check(const RationalFunction& lhs, const RationalFunction& rhs) { return lhs == rhs; }

}  // namespace koszul
