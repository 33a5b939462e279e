#include "koszul/presentations.hpp"

#include <bit>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "koszul/errors.hpp"

namespace koszul {

Presentation::Presentation(std::string name, std::vector<Generator> generators,
                           const std::map<std::string, std::string>& images)
    : name_(std::move(name)),
      gens_(std::make_shared<const GeneratorSet>(std::move(generators))) {
  const auto Z = CoefficientRing::integers();
  for (const auto& [sym, text] : images) {
    auto found = gens_->find(sym);
    if (!found) throw std::invalid_argument(name_ + ": image for unknown generator " + sym);
    if (found->first != Parity::Odd)
      throw std::invalid_argument(name_ + ": even generator " + sym + " must be a cycle");
  }
  for (std::size_t j = 0; j < gens_->odd_count(); ++j) {
    const Generator& g = gens_->odd(j);
    auto it = images.find(g.symbol);
    SuperPolynomial img = it == images.end() ? SuperPolynomial(gens_, Z)
                                             : SuperPolynomial::parse(gens_, Z, it->second);
    if (!img.is_even())
      throw std::invalid_argument(name_ + ": d(" + g.symbol + ") is not purely even");
    Degree want = g.degree + kDifferentialDegree;
    for (const Degree& d : img.support_degrees())
      if (d != want)
        throw std::invalid_argument(name_ + ": d(" + g.symbol + ") = " + img.to_string() +
                                    " has a term of degree " + to_string(d) + ", expected " +
                                    to_string(want));
    images_.push_back(std::move(img));
  }
  // Images are even, so d of an image is zero term by term; this catches
  // odd factors sneaking in through a malformed generator set.
  for (std::size_t j = 0; j < images_.size(); ++j)
    if (!apply_d(*this, images_[j]).is_zero())
      throw std::invalid_argument(name_ + ": d^2 does not vanish on " + gens_->odd(j).symbol);
}

bool Presentation::has_differential() const noexcept {
  for (const auto& p : images_)
    if (!p.is_zero()) return true;
  return false;
}

SuperPolynomial Presentation::poly(std::string_view text, CoefficientRing ring) const {
  return SuperPolynomial::parse(gens_, ring, text);
}

std::string Presentation::serialize() const {
  std::ostringstream os;
  os << "presentation " << name_ << "\n";
  std::size_t odd = 0;
  for (const Generator& g : gens_->all()) {
    os << (g.parity == Parity::Even ? "even " : "odd  ") << g.symbol << " q=" << g.degree.q
       << " t=" << g.degree.t << " a=" << g.degree.a;
    if (g.parity == Parity::Odd) {
      const auto& img = images_[odd++];
      if (!img.is_zero()) os << " d=" << img.to_string();
    }
    os << "\n";
  }
  return os.str();
}

namespace {

mpz_class binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::string coef_prefix(const mpz_class& c) { return c == 1 ? "" : c.get_str() + "*"; }

std::string power(const std::string& sym, int e) {
  if (e == 0) return "";
  return e == 1 ? sym : sym + "^" + std::to_string(e);
}

std::string join_factors(std::initializer_list<std::string> parts) {
  std::string s;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!s.empty()) s += "*";
    s += p;
  }
  return s.empty() ? "1" : s;
}

// Coefficient of tau^k in (sum_{i<n} x_i tau^i)^N, as canonical text.
// Multisets {i with multiplicity c_i} with sum c_i = N and sum i c_i = k,
// weighted by N! / prod c_i!.
std::string stable_image(int n, int N, int k, int skip_below) {
  std::vector<int> counts(n, 0);
  std::vector<std::string> terms;
  mpz_class fact_N;
  mpz_fac_ui(fact_N.get_mpz_t(), N);
  std::function<void(int, int, int)> rec = [&](int i, int left, int weight) {
    if (i < 0) {
      if (left == 0 && weight == 0) {
        mpz_class c = fact_N;
        std::string mono;
        for (int j = 0; j < n; ++j) {
          mpz_class f;
          mpz_fac_ui(f.get_mpz_t(), counts[j]);
          c /= f;
          if (counts[j] > 0) mono += (mono.empty() ? "" : "*") + power("x" + std::to_string(j), counts[j]);
        }
        terms.push_back(coef_prefix(c) + (mono.empty() ? "1" : mono));
      }
      return;
    }
    int maxc = i == 0 ? left : std::min(left, weight / i);
    for (int c = (i == 0 ? left : 0); c <= maxc; ++c) {
      if (i < skip_below && c > 0) continue;
      counts[i] = c;
      rec(i - 1, left - c, weight - c * i);
    }
    counts[i] = 0;
  };
  rec(n - 1, N, k);
  std::string s;
  for (const auto& t : terms) s += (s.empty() ? "" : " + ") + t;
  return s;
}

void check_stable_args(int n, int N) {
  if (n < 1) throw std::invalid_argument("strand count n must be at least 1");
  if (N < 2) throw std::invalid_argument("N must be at least 2");
}

Degree stable_even_degree(int k) { return {2 * k + 2, 2 * k, 0}; }
Degree stable_odd_degree(int k, int N) { return {2 * N + 2 * k, 2 * k + 1, 0}; }

}  // namespace

Presentation stable_presentation(int n, int N) {
  check_stable_args(n, N);
  std::vector<Generator> gens;
  for (int k = 0; k < n; ++k) gens.push_back({"x" + std::to_string(k), Parity::Even, stable_even_degree(k)});
  std::map<std::string, std::string> images;
  for (int k = 0; k < n; ++k) {
    std::string sym = "xi" + std::to_string(k);
    gens.push_back({sym, Parity::Odd, stable_odd_degree(k, N)});
    std::string img = stable_image(n, N, k, 0);
    if (!img.empty()) images[sym] = img;
  }
  return Presentation("stable(" + std::to_string(n) + "," + std::to_string(N) + ")", gens, images);
}

Presentation reduced_presentation(int n, int N, bool keep_xi0) {
  check_stable_args(n, N);
  std::vector<Generator> gens;
  for (int k = 1; k < n; ++k) gens.push_back({"x" + std::to_string(k), Parity::Even, stable_even_degree(k)});
  std::map<std::string, std::string> images;
  for (int k = keep_xi0 ? 0 : 1; k < n; ++k) {
    std::string sym = "xi" + std::to_string(k);
    gens.push_back({sym, Parity::Odd, stable_odd_degree(k, N)});
    std::string img = stable_image(n, N, k, 1);
    if (!img.empty()) images[sym] = img;
  }
  return Presentation("reduced(" + std::to_string(n) + "," + std::to_string(N) + ")", gens, images);
}

Tableau parse_tableau(std::string_view text) {
  for (Tableau t : all_tableaux())
    if (tableau_name(t) == text) return t;
  throw std::invalid_argument("unsupported tableau '" + std::string(text) +
                              "' (expected [12], [1,2], [123], [1,2,3], [12,3] or [13,2])");
}

std::string tableau_name(Tableau t) {
  switch (t) {
    case Tableau::Row2: return "[12]";
    case Tableau::Column2: return "[1,2]";
    case Tableau::Row3: return "[123]";
    case Tableau::Column3: return "[1,2,3]";
    case Tableau::Hook12_3: return "[12,3]";
    case Tableau::Hook13_2: return "[13,2]";
  }
  return "?";
}

const std::vector<Tableau>& all_tableaux() {
  static const std::vector<Tableau> all = {Tableau::Row2,     Tableau::Column2,  Tableau::Row3,
                                           Tableau::Column3,  Tableau::Hook12_3, Tableau::Hook13_2};
  return all;
}

namespace {

struct HomflyGenerator {
  const char* symbol;
  Parity parity;
  Degree degree;
};

std::vector<HomflyGenerator> homfly_generators(Tableau t) {
  const HomflyGenerator x0{"x0", Parity::Even, {2, 0, 0}}, x1{"x1", Parity::Even, {4, 2, 0}},
      x2{"x2", Parity::Even, {6, 4, 0}}, a1{"a1", Parity::Even, {-4, -2, 0}},
      a2{"a2", Parity::Even, {-6, -2, 0}}, b2{"b2", Parity::Even, {-6, -4, 0}},
      xi0{"xi0", Parity::Odd, {0, 1, 2}}, xi1{"xi1", Parity::Odd, {2, 3, 2}},
      xi2{"xi2", Parity::Odd, {4, 5, 2}}, th1{"theta1", Parity::Odd, {-2, 1, 2}},
      th2{"theta2", Parity::Odd, {-4, 1, 2}};
  // In the [13,2] algebra x2 and xi2 carry the degrees forced by its series
  // denominator (1 - q^6 t^2) and numerator factor (1 + a^2 q^2 t^3).
  const HomflyGenerator hx2{"x2", Parity::Even, {6, 2, 0}}, hxi2{"xi2", Parity::Odd, {2, 3, 2}};
  switch (t) {
    case Tableau::Row2: return {x0, x1, xi0, xi1};
    case Tableau::Column2: return {x0, a1, xi0, th1};
    case Tableau::Row3: return {x0, x1, x2, xi0, xi1, xi2};
    case Tableau::Column3: return {x0, a1, a2, xi0, th1, th2};
    case Tableau::Hook12_3: return {x0, x1, b2, xi0, xi1, th1};
    case Tableau::Hook13_2: return {x0, a1, hx2, xi0, th1, hxi2};
  }
  return {};
}

std::map<std::string, std::string> dn_images(Tableau t, int N, bool hook_variant) {
  const std::string n = std::to_string(N);
  const mpz_class cN = N, c2 = binomial(N, 2);
  const std::string x0N = power("x0", N), x0N1 = power("x0", N - 1), x0N2 = power("x0", N - 2);
  auto term = [](const mpz_class& c, std::initializer_list<std::string> f) {
    return coef_prefix(c) + join_factors(f);
  };
  std::map<std::string, std::string> m;
  m["xi0"] = join_factors({x0N});
  switch (t) {
    case Tableau::Row2:
      m["xi1"] = term(cN, {x0N1, "x1"});
      break;
    case Tableau::Column2:
      m["theta1"] = term(cN, {x0N1});
      break;
    case Tableau::Row3:
      m["xi1"] = term(cN, {x0N1, "x1"});
      m["xi2"] = term(cN, {x0N1, "x2"}) + " + " + term(c2, {x0N2, "x1^2"});
      break;
    case Tableau::Column3:
      m["theta1"] = term(cN, {x0N1});
      m["theta2"] = term(c2, {x0N2});
      break;
    case Tableau::Hook12_3:
      m["xi1"] = term(cN, {x0N1, "x1"});
      m["theta1"] = term(cN, {x0N1}) + " + " + term(c2, {x0N2, "x1^2", "b2"});
      break;
    case Tableau::Hook13_2:
      if (hook_variant) m["xi0"] = join_factors({x0N1});
      m["theta1"] = term(cN, {x0N1});
      m["xi2"] = term(c2, {x0N2, "x2"});
      break;
  }
  return m;
}

std::map<std::string, std::string> d0_images(Tableau t) {
  switch (t) {
    case Tableau::Row3: return {{"xi2", "x1"}};
    case Tableau::Column3: return {{"theta2", "a1"}};
    case Tableau::Hook12_3: return {{"theta1", "x1*b2"}};
    case Tableau::Hook13_2: return {{"xi2", "x2*a1"}};
    default:
      throw std::invalid_argument("no d_0 differential for tableau " + tableau_name(t));
  }
}

// Substitutes x0 = 0 in a canonical-text image: drops every term containing x0.
std::string drop_x0_terms(const std::string& text) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = text.find(" + ", i);
    std::string term = text.substr(i, j == std::string::npos ? std::string::npos : j - i);
    bool has_x0 = false;
    for (std::size_t p = term.find("x0"); p != std::string::npos; p = term.find("x0", p + 1)) {
      bool left_ok = p == 0 || term[p - 1] == '*';
      bool right_ok = p + 2 == term.size() || term[p + 2] == '*' || term[p + 2] == '^';
      if (left_ok && right_ok) has_x0 = true;
    }
    if (!has_x0) out += (out.empty() ? "" : " + ") + term;
    if (j == std::string::npos) break;
    i = j + 3;
  }
  return out;
}

}  // namespace

Presentation projector_presentation(Tableau tableau, ProjectorLevel level, int N,
                                    ProjectorOptions options) {
  if (level == ProjectorLevel::SlN && N < 2) throw std::invalid_argument("N must be at least 2");
  bool reduced = options.reduced || level == ProjectorLevel::D0;
  std::map<std::string, std::string> images;
  if (level == ProjectorLevel::SlN) images = dn_images(tableau, N, options.hook_xi0_variant);
  if (level == ProjectorLevel::D0) images = d0_images(tableau);

  std::vector<Generator> gens;
  for (const auto& h : homfly_generators(tableau)) {
    std::string sym = h.symbol;
    if (reduced && (sym == "x0" || sym == "xi0")) continue;
    Degree d = h.degree;
    if (level == ProjectorLevel::SlN) d = {d.q + N * d.a, d.t, 0};
    if (level == ProjectorLevel::D0) d = {d.q, d.t - d.a, 0};
    gens.push_back({sym, h.parity, d});
  }
  if (reduced) {
    images.erase("xi0");
    for (auto it = images.begin(); it != images.end();) {
      it->second = drop_x0_terms(it->second);
      it = it->second.empty() ? images.erase(it) : std::next(it);
    }
  }

  std::string name = "projector" + tableau_name(tableau);
  switch (level) {
    case ProjectorLevel::Homfly: name += "(HOMFLY"; break;
    case ProjectorLevel::SlN: name += "(N=" + std::to_string(N); break;
    case ProjectorLevel::D0: name += "(d0"; break;
  }
  if (reduced) name += ",reduced";
  if (options.hook_xi0_variant) name += ",xi0-variant";
  name += ")";
  return Presentation(name, gens, images);
}

std::map<Monomial, mpz_class> apply_d_monomial(const Presentation& pres, const Monomial& m) {
  std::map<Monomial, mpz_class> out;
  const GeneratorSet& gens = *pres.generators();
  int position = 0;
  for (OddSet rest = m.odd(); rest; rest &= rest - 1, ++position) {
    int j = std::countr_zero(rest);
    const SuperPolynomial& img = pres.image(j);
    if (img.is_zero()) continue;
    Monomial without(gens, m.even(), m.odd() & ~(OddSet{1} << j));
    int sign = position % 2 ? -1 : 1;
    for (const auto& [im, c] : img.terms()) {
      auto prod = mono_mul(im, without);
      mpz_class v = c.get_num() * sign;
      auto [it, inserted] = out.try_emplace(std::move(prod->second), 0);
      it->second += v;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

SuperPolynomial apply_d(const Presentation& pres, const SuperPolynomial& p) {
  if (p.generator_set() != pres.generators() && !(p.generators() == *pres.generators()))
    throw StructuralError("polynomial is not over presentation " + pres.name());
  SuperPolynomial r(pres.generators(), p.ring());
  for (const auto& [m, c] : p.terms())
    for (const auto& [dm, v] : apply_d_monomial(pres, m)) r.add_term(dm, c * v);
  return r;
}

SuperPolynomial mu(const Presentation& stable, int k, int N) {
  const auto& gens = stable.generators();
  int n = static_cast<int>(gens->even_count());
  if (k < 1 || k > n - 1)
    throw std::out_of_range("mu_k needs 1 <= k <= n-1, got k=" + std::to_string(k));
  auto Z = CoefficientRing::integers();
  SuperPolynomial r(gens, Z);
  for (int i = 0; i <= k; ++i) {
    int j = k - i;
    auto prod = mono_mul(Monomial::even_power(*gens, i), Monomial::odd_generator(*gens, j));
    r.add_term(prod->second, mpq_class(N * i - j));
  }
  return r;
}

SuperPolynomial mu(int k, int n, int N) { return mu(stable_presentation(n, N), k, N); }

}  // namespace koszul
