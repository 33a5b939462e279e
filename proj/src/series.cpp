#include "koszul/series.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <stdexcept>

#include "koszul/coefficients.hpp"
#include "koszul/errors.hpp"
#include "koszul/homology.hpp"

namespace koszul {

namespace {

long dot(const Degree& w, const Degree& d) {
  return static_cast<long>(w.q) * d.q + static_cast<long>(w.t) * d.t + static_cast<long>(w.a) * d.a;
}

LaurentPoly truncated_product(const LaurentPoly& x, const LaurentPoly& y, const Degree& w,
                              long limit) {
  LaurentPoly r;
  for (const auto& [d1, c1] : x.terms()) {
    long w1 = dot(w, d1);
    for (const auto& [d2, c2] : y.terms())
      if (w1 + dot(w, d2) <= limit) r.add_term(d1 + d2, c1 * c2);
  }
  return r;
}

}  // namespace

Degree default_expansion_weights(const RationalFunction& rf) {
  const LaurentPoly& den = rf.denominator();
  Degree m0 = den.min_degree();
  std::vector<Degree> e;
  int spread = 1;
  for (const auto& [d, c] : den.terms()) {
    if (d == m0) continue;
    Degree v = d - m0;
    e.push_back(v);
    spread = std::max({spread, std::abs(v.q), std::abs(v.t), std::abs(v.a)});
  }
  if (e.empty()) return {1, 0, 0};
  auto positive = [&](const Degree& w) {
    return std::all_of(e.begin(), e.end(), [&](const Degree& v) { return dot(w, v) > 0; });
  };
  for (int s = 1; s <= 24; ++s)
    for (int wq = -s; wq <= s; ++wq)
      for (int wt = -(s - std::abs(wq)); wt <= s - std::abs(wq); ++wt) {
        int rest = s - std::abs(wq) - std::abs(wt);
        for (int wa : {rest, -rest}) {
          Degree w{wq, wt, wa};
          // Only weights that order every difference like (t, q, a) qualify;
          // positivity on the lex-positive differences guarantees it here.
          if (positive(w)) return w;
          if (rest == 0) break;
        }
      }
  int b = 2 * spread + 1;
  return {b, b * b, 1};
}

std::map<Degree, mpz_class> expand(const RationalFunction& rf, const SeriesWindow& window,
                                   std::optional<Degree> weights) {
  std::map<Degree, mpz_class> out;
  if (window.tmin > window.tmax || window.qmin > window.qmax || window.amin > window.amax)
    return out;
  Degree w = weights ? *weights : default_expansion_weights(rf);
  const LaurentPoly& den = rf.denominator();

  long wmin = 0;
  std::vector<std::pair<Degree, mpz_class>> minimal;
  for (const auto& [d, c] : den.terms()) {
    long v = dot(w, d);
    if (minimal.empty() || v < wmin) {
      minimal.assign(1, {d, c});
      wmin = v;
    } else if (v == wmin) {
      minimal.push_back({d, c});
    }
  }
  if (minimal.size() != 1)
    throw NoExpansionRegionError("denominator " + den.to_string() +
                                 " has no unique lowest term under weights " + to_string(w));
  const auto [m0, c0] = minimal.front();
  if (c0 != 1 && c0 != -1)
    throw NoExpansionRegionError("lowest denominator term of " + den.to_string() +
                                 " is not a unit");

  // den = c0 * q^m0 * (1 - E) with every term of E of positive weight.
  LaurentPoly E;
  for (const auto& [d, c] : den.terms())
    if (d != m0) E.add_term(d - m0, -c * c0);

  long fmax = LONG_MIN;
  for (int q : {window.qmin, window.qmax})
    for (int t : {window.tmin, window.tmax})
      for (int a : {window.amin, window.amax}) fmax = std::max(fmax, dot(w, Degree{q, t, a}));

  LaurentPoly num;
  for (const auto& [d, c] : rf.numerator().terms()) num.add_term(d - m0, c * c0);
  if (num.is_zero()) return out;
  long nmin = LONG_MAX;
  for (const auto& [d, c] : num.terms()) nmin = std::min(nmin, dot(w, d));
  long budget = fmax - nmin;
  if (budget < 0) return out;

  LaurentPoly geometric = 1, power = 1;
  for (;;) {
    power = truncated_product(power, E, w, budget);
    if (power.is_zero()) break;
    geometric += power;
  }
  LaurentPoly full = truncated_product(num, geometric, w, fmax);
  for (const auto& [d, c] : full.terms())
    if (window.contains(d)) out.emplace(d, c);
  return out;
}

namespace {

LaurentPoly mono(int q, int t, int a = 0, long c = 1) { return LaurentPoly::monomial({q, t, a}, c); }
LaurentPoly op(int q, int t, int a = 0) { return 1 + mono(q, t, a); }
LaurentPoly om(int q, int t, int a = 0) { return 1 - mono(q, t, a); }

RationalFunction frac(const LaurentPoly& n, const LaurentPoly& d) { return RationalFunction(n, d); }

void require_N(int N) {
  if (N < 2) throw std::invalid_argument("N must be at least 2 for a d_N series");
}

RationalFunction p2_dN(int N) {
  LaurentPoly num = 1 - mono(2 * N, 0) - mono(2 * N + 2, 2) + mono(2 * N + 4, 2) +
                    mono(2 * N + 4, 3) - mono(4 * N + 2, 3);
  return frac(num, om(2, 0) * om(4, 2));
}

RationalFunction p3_dN(int N) {
  LaurentPoly num = 1 - mono(2 * N, 0) - mono(2 * N + 2, 2) +
                    mono(2 * N + 4, 0) * (mono(0, 2) + mono(0, 3) - mono(0, 4)) +
                    mono(2 * N + 6, 0) * (mono(0, 4) + mono(0, 5)) - mono(4 * N + 2, 3) -
                    mono(4 * N + 4, 5) - mono(4 * N + 6, 7) +
                    mono(4 * N + 10, 0) * (mono(0, 7) + mono(0, 8)) - mono(6 * N + 6, 8);
  return frac(num, om(2, 0) * om(4, 2) * om(6, 4));
}

RationalFunction hook_numerator_over(int N, const LaurentPoly& den) {
  LaurentPoly inner = 1 - mono(2 * N - 2, 0) - mono(2 * N + 2, 2) + mono(2 * N + 4, 2) +
                      mono(2 * N + 4, 3) - mono(4 * N, 3);
  return frac(op(2 * N, 1) * inner, den);
}

RationalFunction homfly_series(const std::string& t, bool reduced) {
  const LaurentPoly X0 = op(0, 1, 2), X1 = op(2, 3, 2), X2 = op(4, 5, 2), T1 = op(-2, 1, 2),
                    T2 = op(-4, 1, 2);
  const LaurentPoly x0 = om(2, 0), x1 = om(4, 2), x2 = om(6, 4), a1 = om(-4, -2), a2 = om(-6, -2),
                    b2 = om(-6, -4), hx2 = om(6, 2);
  if (t == "[1]") return reduced ? frac(1, 1) : frac(X0, x0);
  if (t == "[12]") return reduced ? frac(X1, x1) : frac(X0 * X1, x0 * x1);
  if (t == "[1,2]") return reduced ? frac(T1, a1) : frac(X0 * T1, x0 * a1);
  if (t == "[123]") return reduced ? frac(X1 * X2, x1 * x2) : frac(X0 * X1 * X2, x0 * x1 * x2);
  if (t == "[1,2,3]") return reduced ? frac(T1 * T2, a1 * a2) : frac(X0 * T1 * T2, x0 * a1 * a2);
  if (t == "[12,3]") return reduced ? frac(T1 * X1, x1 * b2) : frac(X0 * T1 * X1, x0 * x1 * b2);
  if (t == "[13,2]") return reduced ? frac(T1 * X1, a1 * hx2) : frac(X0 * T1 * X1, x0 * a1 * hx2);
  throw std::invalid_argument("unknown tableau " + t);
}

RationalFunction dN_series(const std::string& t, int N, bool reduced, bool as_printed) {
  require_N(N);
  const LaurentPoly x0 = om(2, 0), x1 = om(4, 2), x2 = om(6, 4), a1 = om(-4, -2), a2 = om(-6, -2),
                    b2 = om(-6, -4), hx2 = om(6, 2);
  if (t == "[1]") return reduced ? frac(1, 1) : frac(om(2 * N, 0), x0);
  if (t == "[12]") return reduced ? frac(op(2 * N + 2, 3), x1) : p2_dN(N);
  if (t == "[1,2]")
    return reduced ? frac(op(2 * N - 2, 1), a1)
                   : frac(om(2 * N - 2, 0) * op(2 * N, 1), x0 * a1);
  if (t == "[123]") {
    if (!reduced) return p3_dN(N);
    if (N == 2) return frac(om(8, 4) * op(6, 3), x1 * x2);
    return frac(op(2 * N + 2, 3) * op(2 * N + 4, 5), x1 * x2);
  }
  if (t == "[1,2,3]") {
    if (!reduced) return frac(om(2 * N - 4, 0) * op(2 * N - 2, 1) * op(2 * N, 1), x0 * a1 * a2);
    if (as_printed) return frac(op(2 * N - 2, 1) * op(2 * N, 1), a1 * a2);
    if (N == 2) return frac(0, 1);
    return frac(op(2 * N - 4, 1) * op(2 * N - 2, 1), a1 * a2);
  }
  if (t == "[12,3]") {
    if (!reduced) return hook_numerator_over(N, x0 * x1 * b2);
    if (N == 2) return frac(om(2, 0) * op(6, 3), x1 * b2);
    return frac(op(2 * N - 2, 1) * op(2 * N + 2, 3), x1 * b2);
  }
  if (t == "[13,2]") {
    if (!reduced) return hook_numerator_over(N, x0 * a1 * hx2);
    if (N == 2) return frac(op(2, 1), a1);
    return frac(op(2 * N - 2, 1) * op(2 * N + 2, 3), a1 * hx2);
  }
  throw std::invalid_argument("unknown tableau " + t);
}

RationalFunction d0_series(const std::string& t) {
  RationalFunction r;
  if (t == "[123]")
    r = frac(op(2, 3, 2), om(6, 4));
  else if (t == "[1,2,3]")
    r = frac(op(-2, 1, 2), om(-6, -2));
  else if (t == "[12,3]")
    r = frac(om(-2, -2) * op(2, 3, 2), om(4, 2) * om(-6, -4));
  else if (t == "[13,2]")
    r = frac(om(2, 0) * op(-2, 1, 2), om(-4, -2) * om(6, 2));
  else
    throw std::invalid_argument("no d_0 series for tableau " + t);
  return r.substitute_a_tinv();
}

LaurentPoly sl3_p4_numerator(bool as_printed) {
  return LaurentPoly::parse(
      std::string("1 - q^6 - q^8*t^2 + ") + (as_printed ? "q*t^2" : "q^10*t^2") +
      " + q^10*t^3 - q^14*t^3 - q^10*t^4 + q^12*t^4 + q^12*t^5 - q^16*t^5 - q^12*t^6"
      " + q^14*t^6 + q^14*t^7 - 2*q^18*t^7 + q^22*t^7 + q^22*t^8 - q^24*t^8 - q^20*t^9"
      " + q^24*t^9 + q^24*t^10 - q^26*t^10 - q^22*t^11 + q^26*t^11 + q^26*t^12"
      " - q^28*t^12 - q^30*t^14 + q^36*t^14");
}

LaurentPoly sl3_p5_numerator() {
  return LaurentPoly::parse(
      "1 - q^6 - q^8*t^2 + q^10*t^2 + q^10*t^3 - q^14*t^3 - q^10*t^4 + q^12*t^4 + q^12*t^5"
      " - q^16*t^5 - q^12*t^6 + q^14*t^6 + q^14*t^7 - 2*q^18*t^7 + q^22*t^7 - q^14*t^8"
      " + q^16*t^8 + q^22*t^8 - q^24*t^8 + q^16*t^9 - 2*q^20*t^9 + q^24*t^9 + q^24*t^10"
      " - q^26*t^10 - 2*q^22*t^11 + 2*q^26*t^11 + 2*q^26*t^12 - 2*q^28*t^12 - q^24*t^13"
      " + q^28*t^13 + q^26*t^14 - 2*q^30*t^14 + q^36*t^14 - q^28*t^15 + q^30*t^15"
      " + q^32*t^15 - q^34*t^15 + q^30*t^16 - q^32*t^16 - q^34*t^16 + q^38*t^16"
      " + q^34*t^17 - q^36*t^17 - q^36*t^18 + 2*q^40*t^18 - q^42*t^18 + q^36*t^19"
      " - q^38*t^19 + q^40*t^19 - q^42*t^19 - q^38*t^20 + 2*q^42*t^20 - q^44*t^20"
      " + q^42*t^21 - q^44*t^21 + q^44*t^22 - q^46*t^22 - q^46*t^23 + q^50*t^23");
}

LaurentPoly stable_denominator(int n) {
  LaurentPoly d = 1;
  for (int k = 0; k < n; ++k) d *= om(2 * k + 2, 2 * k);
  return d;
}

LaurentPoly reduced_denominator(int n) {
  LaurentPoly d = 1;
  for (int k = 1; k < n; ++k) d *= om(2 * k + 2, 2 * k);
  return d;
}

void check_torus3_m(int m) {
  if (m < 1 || m % 3 == 0)
    throw std::invalid_argument("T(3,m) needs m >= 1 not divisible by 3, got " + std::to_string(m));
}

// The weights attached to the four projector terms of T(3, m).
std::vector<std::pair<std::string, Degree>> torus3_terms(int m) {
  int k = m / 3;
  if (m % 3 == 1)
    return {{"[123]", {0, 0, 0}},
            {"[12,3]", {6 * k, 4 * k, 0}},
            {"[13,2]", {6 * k, 4 * k, 0}},
            {"[1,2,3]", {12 * k, 6 * k, 0}}};
  return {{"[123]", {0, 0, 0}},
          {"[12,3]", {6 * k, 4 * k, 0}},
          {"[13,2]", {6 * k + 4, 4 * k + 2, 0}},
          {"[1,2,3]", {12 * k + 4, 6 * k + 2, 0}}};
}

RationalFunction torus3_display_d2(int m) {
  check_torus3_m(m);
  RationalFunction A = frac(LaurentPoly::parse("1 + q^2 + q^4*t^2 + q^8*t^3 + q^10*t^5 + q^12*t^5"),
                            om(6, 4));
  RationalFunction B = frac(om(6, 2) * op(4, 1), om(4, 2) * om(-6, -4));
  RationalFunction C = frac(op(4, 1), om(-4, -2));
  int k = m / 3;
  Degree c_shift = m % 3 == 1 ? Degree{6 * k, 4 * k, 0} : Degree{6 * k + 4, 4 * k + 2, 0};
  return A + B.shifted({6 * k, 4 * k, 0}) + C.shifted(c_shift);
}

RationalFunction torus3_display_d0(int m) {
  check_torus3_m(m);
  std::vector<RationalFunction> parts = {
      frac(op(2, 1), om(6, 4)),
      frac(om(-2, -2) * op(2, 1), om(4, 2) * om(-6, -4)),
      frac(om(2, 0) * op(-2, -1), om(-4, -2) * om(6, 2)),
      frac(op(-2, -1), om(-6, -2)),
  };
  auto terms = torus3_terms(m);
  RationalFunction r;
  for (std::size_t i = 0; i < parts.size(); ++i) r += parts[i].shifted(terms[i].second);
  return r;
}

}  // namespace

RationalFunction projector_series(const std::string& tableau, SeriesLevel level, int N,
                                  bool reduced, bool as_printed) {
  switch (level) {
    case SeriesLevel::Homfly:
      return homfly_series(tableau, reduced);
    case SeriesLevel::SlN:
      return dN_series(tableau, N, reduced, as_printed);
    case SeriesLevel::D0:
      if (!reduced) throw std::invalid_argument("d_0 series are defined for reduced homology only");
      return d0_series(tableau);
  }
  throw std::invalid_argument("bad series level");
}

Degree projector_expansion_weights(Tableau tableau, SeriesLevel level, int N, bool reduced) {
  ProjectorLevel pl = level == SeriesLevel::Homfly ? ProjectorLevel::Homfly
                      : level == SeriesLevel::SlN  ? ProjectorLevel::SlN
                                                   : ProjectorLevel::D0;
  ProjectorOptions opt;
  opt.reduced = reduced;
  auto w = positive_functional(projector_presentation(tableau, pl, N, opt));
  if (!w) throw NoExpansionRegionError("projector algebra " + tableau_name(tableau) +
                                       " has no positive weight functional");
  return *w;
}

const std::vector<CatalogueEntry>& catalogue() {
  static const std::vector<CatalogueEntry> entries = {
      {"P2_dN", "N", "stable two-strand d_N homology, single fraction"},
      {"P2_dN_sum", "N", "stable two-strand d_N homology, from the monomial basis"},
      {"P2_red_dN", "N", "reduced stable two-strand d_N homology"},
      {"P3_dN", "N", "stable three-strand d_N homology"},
      {"P3_dN_levels", "N", "stable three-strand d_N homology summed over odd degree 0, 1, 2"},
      {"P3_red_dN", "N", "reduced stable three-strand d_N homology"},
      {"P_ZN", "n, N prime", "stable n-strand homology with Z/N coefficients"},
      {"SL3_P2", "", "stable two-strand SL(3) homology"},
      {"SL3_P2_red", "", "reduced stable two-strand SL(3) homology"},
      {"SL3_P3", "", "stable three-strand SL(3) homology"},
      {"SL3_P3_red", "", "reduced stable three-strand SL(3) homology"},
      {"SL3_P4", "as_printed", "stable four-strand SL(3) homology (q^10 t^2 term restored)"},
      {"SL3_P4_red", "", "reduced stable four-strand SL(3) homology"},
      {"SL3_P5", "", "stable five-strand SL(3) homology"},
      {"SL3_P5_red", "", "reduced stable five-strand SL(3) homology"},
      {"proj:[1]", "level, N, reduced", "single strand"},
      {"proj:[12]", "level, N, reduced", "two-strand symmetric projector"},
      {"proj:[1,2]", "level, N, reduced", "two-strand antisymmetric projector"},
      {"proj:[123]", "level, N, reduced", "three-strand symmetric projector"},
      {"proj:[1,2,3]", "level, N, reduced, as_printed",
       "three-strand antisymmetric projector (reduced d_N numerator uses theta2's degree)"},
      {"proj:[12,3]", "level, N, reduced", "hook projector [12,3]"},
      {"proj:[13,2]", "level, N, reduced", "hook projector [13,2]"},
      {"T3_d2", "m", "displayed SL(2) homology of T(3,m)"},
      {"T3_d0_red", "m", "displayed reduced d_0 (Heegaard-Floer) homology of T(3,m)"},
  };
  return entries;
}

RationalFunction formula(const std::string& name, const FormulaParams& p) {
  if (name.starts_with("proj:"))
    return projector_series(name.substr(5), p.level, p.N, p.reduced, p.as_printed);
  if (name == "P2_dN") return (require_N(p.N), p2_dN(p.N));
  if (name == "P2_dN_sum") {
    require_N(p.N);
    int N = p.N;
    return frac(mono(2 * N - 2, 0), 1) +
           frac(om(2 * N - 2, 0) * op(2 * N + 4, 3), om(2, 0) * om(4, 2));
  }
  if (name == "P2_red_dN") return dN_series("[12]", p.N, true, false);
  if (name == "P3_dN") return (require_N(p.N), p3_dN(p.N));
  if (name == "P3_dN_levels") {
    require_N(p.N);
    int N = p.N;
    LaurentPoly den = om(2, 0) * om(4, 2) * om(6, 4);
    RationalFunction level0 = frac(1 - mono(2 * N, 0) - mono(2 * N + 2, 2) - mono(2 * N + 4, 4) +
                                       mono(2 * N + 4, 2) + mono(2 * N + 6, 4),
                                   den);
    RationalFunction level1 =
        frac(om(2 * N - 2, 0) * (mono(2 * N + 4, 3) + mono(2 * N + 6, 5)) -
                 mono(4 * N + 6, 7) * om(4, 0),
             den);
    RationalFunction level2 = frac(mono(4 * N + 10, 8) * om(2 * N - 4, 0), den);
    return level0 + level1 + level2;
  }
  if (name == "P3_red_dN") return dN_series("[123]", p.N, true, false);
  if (name == "P_ZN") {
    if (p.n < 1) throw std::invalid_argument("P_ZN needs n >= 1");
    if (!is_prime(p.N)) throw std::invalid_argument("P_ZN needs a prime N");
    int N = p.N;
    LaurentPoly num = 1, den = 1;
    for (int k = 0; k < p.n; ++k) {
      num *= op(2 * N + 2 * k, 2 * k + 1);
      den *= om(2 * k + 2, 2 * k);
    }
    for (int i = 0; i <= (p.n - 1) / N; ++i) {
      num *= om(2 * N + 2 * i * N, 2 * i * N);
      den *= op(2 * N + 2 * i * N, 2 * i * N + 1);
    }
    return frac(num, den);
  }
  if (name == "SL3_P2")
    return frac(LaurentPoly::parse("1 - q^6 - q^8*t^2 + q^10*t^2 + q^10*t^3 - q^14*t^3"),
                stable_denominator(2));
  if (name == "SL3_P2_red") return frac(op(8, 3), reduced_denominator(2));
  if (name == "SL3_P3")
    return frac(LaurentPoly::parse("1 - q^6 - q^8*t^2 + q^10*t^2 + q^10*t^3 - q^14*t^3 - q^10*t^4"
                                   " + q^12*t^4 + q^12*t^5 - q^16*t^5 - q^18*t^7 + q^22*t^7"
                                   " + q^22*t^8 - q^24*t^8"),
                stable_denominator(3));
  if (name == "SL3_P3_red") return frac(op(8, 3) * op(10, 5), reduced_denominator(3));
  if (name == "SL3_P4") return frac(sl3_p4_numerator(p.as_printed), stable_denominator(4));
  if (name == "SL3_P4_red")
    return frac(op(8, 3) * op(10, 5) * om(12, 6), reduced_denominator(4));
  if (name == "SL3_P5") return frac(sl3_p5_numerator(), stable_denominator(5));
  if (name == "SL3_P5_red")
    return frac(op(8, 3) * op(10, 5) *
                    LaurentPoly::parse("1 - q^12*t^6 - q^14*t^8 + q^18*t^10 + q^18*t^11 - q^26*t^15"),
                reduced_denominator(5));
  if (name == "T3_d2") return torus3_display_d2(p.m);
  if (name == "T3_d0_red") return torus3_display_d0(p.m);
  throw std::invalid_argument("unknown formula '" + name + "'");
}

Assembly assemble_torus3(int m, SeriesLevel level, int N, bool reduced) {
  check_torus3_m(m);
  if (level == SeriesLevel::D0) reduced = true;
  Assembly out;
  for (const auto& [t, shift] : torus3_terms(m))
    out.function += projector_series(t, level, N, reduced).shifted(shift);
  out.polynomial = out.function.as_polynomial();
  if (level == SeriesLevel::SlN) {
    int k = m / 3;
    out.stated_q_shift = m % 3 == 1 ? 3 * k * (N - 1) - 2 : 3 * k * (N - 1) - 3;
  }
  return out;
}

Assembly assemble_torus2(int m, SeriesLevel level, int N, bool reduced) {
  if (m < 1 || m % 2 == 0)
    throw std::invalid_argument("T(2,m) needs odd m >= 1, got " + std::to_string(m));
  if (level == SeriesLevel::D0) throw std::invalid_argument("no d_0 series for two strands");
  int k = (m - 1) / 2;
  Assembly out;
  out.function = projector_series("[12]", level, N, reduced) +
                 projector_series("[1,2]", level, N, reduced).shifted({4 * k, 2 * k, 0});
  out.polynomial = out.function.as_polynomial();
  return out;
}

LaurentPoly normalize_lowest_q(const LaurentPoly& p, int target) {
  if (p.is_zero()) return p;
  return p.shifted({target - p.min_degree().q, 0, 0});
}

}  // namespace koszul
