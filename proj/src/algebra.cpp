#include "koszul/algebra.hpp"

#include <bit>
#include <cctype>
#include <stdexcept>

#include "koszul/errors.hpp"

namespace koszul {

GeneratorSet::GeneratorSet(std::vector<Generator> generators) : generators_(std::move(generators)) {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    if (g.symbol.empty()) throw std::invalid_argument("generator with empty symbol");
    for (std::size_t j = 0; j < i; ++j)
      if (generators_[j].symbol == g.symbol)
        throw std::invalid_argument("duplicate generator symbol " + g.symbol);
    (g.parity == Parity::Even ? even_ : odd_).push_back(i);
  }
  if (odd_.size() > kMaxOdd) throw std::invalid_argument("more than 64 odd generators");
}

std::optional<std::pair<Parity, std::size_t>> GeneratorSet::find(std::string_view symbol) const {
  for (std::size_t i = 0; i < even_.size(); ++i)
    if (generators_[even_[i]].symbol == symbol) return std::pair{Parity::Even, i};
  for (std::size_t j = 0; j < odd_.size(); ++j)
    if (generators_[odd_[j]].symbol == symbol) return std::pair{Parity::Odd, j};
  return std::nullopt;
}

Monomial::Monomial(const GeneratorSet& gens, std::vector<int> even, OddSet odd)
    : even_(std::move(even)), odd_(odd) {
  if (even_.size() != gens.even_count())
    throw StructuralError("monomial exponent vector does not match generator set");
  if (gens.odd_count() < 64 && (odd_ >> gens.odd_count()) != 0)
    throw StructuralError("monomial references an odd generator outside the generator set");
  for (int e : even_)
    if (e < 0) throw std::invalid_argument("negative exponent in monomial");
  degree_ = mono_degree(*this, gens);
}

Monomial Monomial::one(const GeneratorSet& gens) {
  return Monomial(gens, std::vector<int>(gens.even_count(), 0), 0);
}

Monomial Monomial::even_power(const GeneratorSet& gens, std::size_t i, int power) {
  std::vector<int> e(gens.even_count(), 0);
  e.at(i) = power;
  return Monomial(gens, std::move(e), 0);
}

Monomial Monomial::odd_generator(const GeneratorSet& gens, std::size_t j) {
  if (j >= gens.odd_count()) throw std::out_of_range("odd generator index");
  return Monomial(gens, std::vector<int>(gens.even_count(), 0), OddSet{1} << j);
}

int Monomial::odd_count() const noexcept { return std::popcount(odd_); }

int Monomial::total_multiplicity() const noexcept {
  int s = odd_count();
  for (int e : even_) s += e;
  return s;
}

bool Monomial::is_one() const noexcept {
  if (odd_) return false;
  for (int e : even_)
    if (e) return false;
  return true;
}

std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
  if (auto c = x.degree_ <=> y.degree_; c != 0) return c;
  if (auto c = x.even_ <=> y.even_; c != 0) return c;
  if (x.odd_ == y.odd_) return std::strong_ordering::equal;
  // Compare the ascending index sequences: they agree below the lowest
  // differing bit b; whichever side holds b is smaller unless the other side
  // runs out first.
  OddSet diff = x.odd_ ^ y.odd_;
  OddSet b = diff & (~diff + 1);
  OddSet above = ~((b << 1) - 1);
  if (b == 0) return std::strong_ordering::equal;
  if (x.odd_ & b)
    return (y.odd_ & above) ? std::strong_ordering::less : std::strong_ordering::greater;
  return (x.odd_ & above) ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::optional<std::pair<int, Monomial>> mono_mul(const Monomial& m1, const Monomial& m2) {
  if (m1.even_.size() != m2.even_.size())
    throw StructuralError("monomials from different generator sets");
  if (m1.odd_ & m2.odd_) return std::nullopt;
  int inversions = 0;
  for (OddSet rest = m2.odd_; rest; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    inversions += j >= 63 ? 0 : std::popcount(m1.odd_ >> (j + 1));
  }
  Monomial r;
  r.even_ = m1.even_;
  for (std::size_t i = 0; i < r.even_.size(); ++i) r.even_[i] += m2.even_[i];
  r.odd_ = m1.odd_ | m2.odd_;
  r.degree_ = m1.degree_ + m2.degree_;
  return std::pair{inversions % 2 ? -1 : 1, std::move(r)};
}

Degree mono_degree(const Monomial& m, const GeneratorSet& gens) {
  if (m.even().size() != gens.even_count())
    throw StructuralError("monomial does not belong to this generator set");
  Degree d;
  for (std::size_t i = 0; i < m.even().size(); ++i) d += m.even()[i] * gens.even(i).degree;
  for (OddSet rest = m.odd(); rest; rest &= rest - 1) d += gens.odd(std::countr_zero(rest)).degree;
  return d;
}

std::string to_string(const Monomial& m, const GeneratorSet& gens) {
  std::string s;
  auto append = [&](const std::string& f) {
    if (!s.empty()) s += '*';
    s += f;
  };
  for (std::size_t i = 0; i < m.even().size(); ++i) {
    int e = m.even()[i];
    if (e == 0) continue;
    append(gens.even(i).symbol + (e > 1 ? "^" + std::to_string(e) : ""));
  }
  for (OddSet rest = m.odd(); rest; rest &= rest - 1) append(gens.odd(std::countr_zero(rest)).symbol);
  return s.empty() ? "1" : s;
}

SuperPolynomial::SuperPolynomial(std::shared_ptr<const GeneratorSet> gens, CoefficientRing ring)
    : gens_(std::move(gens)), ring_(ring) {
  if (!gens_) throw std::invalid_argument("null generator set");
}

SuperPolynomial SuperPolynomial::constant(std::shared_ptr<const GeneratorSet> gens,
                                          CoefficientRing ring, const mpq_class& c) {
  SuperPolynomial p(gens, ring);
  p.add_term(Monomial::one(*gens), c);
  return p;
}

SuperPolynomial SuperPolynomial::monomial(std::shared_ptr<const GeneratorSet> gens,
                                          CoefficientRing ring, const Monomial& m,
                                          const mpq_class& c) {
  SuperPolynomial p(std::move(gens), ring);
  p.add_term(m, c);
  return p;
}

SuperPolynomial SuperPolynomial::generator(std::shared_ptr<const GeneratorSet> gens,
                                           CoefficientRing ring, std::string_view symbol) {
  auto found = gens->find(symbol);
  if (!found) throw std::invalid_argument("unknown generator " + std::string(symbol));
  Monomial m = found->first == Parity::Even ? Monomial::even_power(*gens, found->second)
                                            : Monomial::odd_generator(*gens, found->second);
  return monomial(std::move(gens), ring, m);
}

namespace {

struct Lexer {
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
  bool at_end() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  std::string digits() {
    skip();
    std::size_t b = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return std::string(s.substr(b, i - b));
  }
  std::string ident() {
    skip();
    std::size_t b = i;
    while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return std::string(s.substr(b, i - b));
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("polynomial '" + std::string(s) + "': " + what + " at offset " +
                         std::to_string(i),
                     0);
  }
};

}  // namespace

SuperPolynomial SuperPolynomial::parse(std::shared_ptr<const GeneratorSet> gens,
                                       CoefficientRing ring, std::string_view text) {
  Lexer lx{text};
  SuperPolynomial result(gens, ring);
  if (lx.at_end()) lx.fail("empty input");
  bool first = true;
  while (!lx.at_end()) {
    int sign = 1;
    if (lx.eat('-'))
      sign = -1;
    else if (!lx.eat('+') && !first)
      lx.fail("expected + or -");
    first = false;
    mpq_class coef = sign;
    Monomial mono = Monomial::one(*gens);
    bool need_factor = true;
    while (need_factor) {
      char c = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        mpz_class num(lx.digits());
        mpz_class den = 1;
        if (lx.eat('/')) {
          std::string d = lx.digits();
          if (d.empty()) lx.fail("missing denominator");
          den = mpz_class(d);
          if (den == 0) lx.fail("zero denominator");
        }
        mpq_class v(num, den);
        v.canonicalize();
        coef *= v;
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string sym = lx.ident();
        auto found = gens->find(sym);
        if (!found) lx.fail("unknown generator " + sym);
        int power = 1;
        if (lx.eat('^')) {
          std::string d = lx.digits();
          if (d.empty()) lx.fail("missing exponent");
          power = std::stoi(d);
        }
        for (int k = 0; k < power; ++k) {
          Monomial g = found->first == Parity::Even ? Monomial::even_power(*gens, found->second)
                                                    : Monomial::odd_generator(*gens, found->second);
          auto prod = mono_mul(mono, g);
          if (!prod) {
            coef = 0;
            break;
          }
          coef *= prod->first;
          mono = std::move(prod->second);
        }
      } else {
        lx.fail("expected coefficient or generator");
      }
      need_factor = lx.eat('*');
    }
    if (coef != 0) result.add_term(mono, coef);
  }
  return result;
}

mpq_class SuperPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void SuperPolynomial::add_term(const Monomial& m, const mpq_class& c) {
  if (m.even().size() != gens_->even_count())
    throw StructuralError("monomial does not belong to this generator set");
  auto [it, inserted] = terms_.try_emplace(m, 0);
  it->second = ring_.normalize(it->second + c);
  if (it->second == 0) terms_.erase(it);
}

void SuperPolynomial::check_compatible(const SuperPolynomial& o) const {
  if (!(ring_ == o.ring_)) throw StructuralError("coefficient rings differ");
  if (gens_ != o.gens_ && !(*gens_ == *o.gens_)) throw StructuralError("generator sets differ");
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SuperPolynomial SuperPolynomial::operator-() const { return scaled(-1); }

SuperPolynomial SuperPolynomial::scaled(const mpq_class& c) const {
  SuperPolynomial r(gens_, ring_);
  for (const auto& [m, v] : terms_) r.add_term(m, v * c);
  return r;
}

SuperPolynomial operator*(const SuperPolynomial& x, const SuperPolynomial& y) {
  return poly_mul(x, y);
}

SuperPolynomial poly_mul(const SuperPolynomial& p1, const SuperPolynomial& p2) {
  p1.check_compatible(p2);
  SuperPolynomial r(p1.gens_, p1.ring_);
  for (const auto& [m1, c1] : p1.terms_)
    for (const auto& [m2, c2] : p2.terms_) {
      auto prod = mono_mul(m1, m2);
      if (!prod) continue;
      r.add_term(prod->second, prod->first * c1 * c2);
    }
  return r;
}

SuperPolynomial SuperPolynomial::change_ring(const CoefficientRing& target) const {
  SuperPolynomial r(gens_, target);
  for (const auto& [m, c] : terms_) r.add_term(m, c);
  return r;
}

std::set<Degree> SuperPolynomial::support_degrees() const {
  std::set<Degree> out;
  for (const auto& [m, c] : terms_) out.insert(m.degree());
  return out;
}

std::optional<Degree> SuperPolynomial::homogeneous_degree() const {
  auto s = support_degrees();
  if (s.size() != 1) return std::nullopt;
  return *s.begin();
}

bool SuperPolynomial::is_even() const noexcept {
  for (const auto& [m, c] : terms_)
    if (m.is_odd()) return false;
  return true;
}

std::string SuperPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool neg = c < 0;
    mpq_class a = neg ? mpq_class(-c) : c;
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    first = false;
    if (m.is_one()) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str() + "*";
      s += koszul::to_string(m, *gens_);
    }
  }
  return s;
}

bool operator==(const SuperPolynomial& x, const SuperPolynomial& y) {
  if (!(x.ring_ == y.ring_)) return false;
  if (x.gens_ != y.gens_ && !(*x.gens_ == *y.gens_)) return false;
  return x.terms_ == y.terms_;
}

}  // namespace koszul
