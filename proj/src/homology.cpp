#include "koszul/homology.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "koszul/errors.hpp"

namespace koszul {

std::size_t GradedBasis::index_of(const Monomial& m) const {
  auto it = std::lower_bound(monomials.begin(), monomials.end(), m);
  if (it == monomials.end() || !(*it == m)) return npos;
  return static_cast<std::size_t>(it - monomials.begin());
}

namespace {

int apply(const Degree& f, const Degree& d) { return f.q * d.q + f.t * d.t + f.a * d.a; }

std::vector<Degree> even_degrees(const Presentation& pres) {
  std::vector<Degree> e;
  const auto& g = *pres.generators();
  for (std::size_t i = 0; i < g.even_count(); ++i) e.push_back(g.even(i).degree);
  return e;
}

}  // namespace

std::optional<Degree> positive_functional(const Presentation& pres) {
  auto e = even_degrees(pres);
  if (e.empty()) return Degree{1, 0, 0};
  for (int s = 1; s <= 40; ++s)
    for (int wq = -s; wq <= s; ++wq)
      for (int wt = -(s - std::abs(wq)); wt <= s - std::abs(wq); ++wt) {
        int rest = s - std::abs(wq) - std::abs(wt);
        for (int wa : {rest, -rest}) {
          Degree f{wq, wt, wa};
          if (std::all_of(e.begin(), e.end(), [&](const Degree& d) { return apply(f, d) > 0; }))
            return f;
          if (rest == 0) break;
        }
      }
  return std::nullopt;
}

std::optional<std::string> degree_zero_witness(const Presentation& pres) {
  if (positive_functional(pres)) return std::nullopt;
  auto e = even_degrees(pres);
  const auto& gens = *pres.generators();
  std::vector<int> c(e.size(), 0);
  std::optional<std::string> found;
  std::function<void(std::size_t, int, Degree)> rec = [&](std::size_t i, int left, Degree sum) {
    if (found) return;
    if (i + 1 == e.size()) {
      c[i] = left;
      if (sum + left * e[i] == Degree{})
        found = to_string(Monomial(gens, c, 0), gens);
      c[i] = 0;
      return;
    }
    for (int k = 0; k <= left; ++k) {
      c[i] = k;
      rec(i + 1, left - k, sum + k * e[i]);
    }
    c[i] = 0;
  };
  for (int s = 1; s <= 24 && !found && !e.empty(); ++s) rec(0, s, Degree{});
  return found ? found : std::optional<std::string>("(no witness of multiplicity <= 24)");
}

namespace {

class BasisEnumerator {
 public:
  BasisEnumerator(const Presentation& pres, std::optional<int> bound)
      : gens_(*pres.generators()), e_(even_degrees(pres)), bound_(bound) {
    f_ = positive_functional(pres);
    if (!f_ && !bound_) {
      auto w = degree_zero_witness(pres);
      throw NonProperGradingError(pres.name() + " has products of even generators in degree 0 (" +
                                      *w + "); an exponent cap is required",
                                  *w);
    }
    if (f_) {
      std::size_t m = e_.size();
      lo_.assign(m + 1, {0, 0, 0});
      hi_.assign(m + 1, {0, 0, 0});
      for (std::size_t i = m; i-- > 0;) {
        for (int g = 0; g < 3; ++g) {
          double r = coord(e_[i], g) / static_cast<double>(apply(*f_, e_[i]));
          lo_[i][g] = (i + 1 == m) ? r : std::min(lo_[i + 1][g], r);
          hi_[i][g] = (i + 1 == m) ? r : std::max(hi_[i + 1][g], r);
        }
      }
    }
  }

  GradedBasis run(const Degree& deg) {
    GradedBasis out{deg, {}};
    out_ = &out.monomials;
    std::size_t odd = gens_.odd_count();
    for (OddSet s = 0; s < (OddSet{1} << odd); ++s) {
      Degree rem = deg;
      for (OddSet r = s; r; r &= r - 1) rem -= gens_.odd(std::countr_zero(r)).degree;
      int cap = bound_ ? *bound_ - std::popcount(s) : -1;
      if (bound_ && cap < 0) continue;
      odd_ = s;
      exps_.assign(e_.size(), 0);
      if (e_.empty()) {
        if (rem == Degree{}) emit();
        continue;
      }
      if (!feasible(0, rem)) continue;
      rec(0, rem, cap);
    }
    std::sort(out.monomials.begin(), out.monomials.end());
    return out;
  }

 private:
  static int coord(const Degree& d, int g) { return g == 0 ? d.q : g == 1 ? d.t : d.a; }

  // Can rem be a nonnegative combination of e_[i..]? Necessary conditions
  // from the positive functional and the coordinate ratios.
  bool feasible(std::size_t i, const Degree& rem) const {
    if (!f_) return true;
    int F = apply(*f_, rem);
    if (F < 0) return false;
    if (F == 0) return rem == Degree{};
    for (int g = 0; g < 3; ++g) {
      double v = coord(rem, g);
      if (v < F * lo_[i][g] - 1e-9 || v > F * hi_[i][g] + 1e-9) return false;
    }
    return true;
  }

  void rec(std::size_t i, const Degree& rem, int cap) {
    const Degree& ei = e_[i];
    if (i + 1 == e_.size()) {
      if (ei == Degree{}) {
        if (rem != Degree{}) return;
        int top = bound_ ? cap : 0;
        for (int c = 0; c <= top; ++c) {
          exps_[i] = c;
          emit();
        }
        exps_[i] = 0;
        return;
      }
      int c = -1;
      for (int g = 0; g < 3; ++g)
        if (coord(ei, g) != 0) {
          if (coord(rem, g) % coord(ei, g) != 0) return;
          c = coord(rem, g) / coord(ei, g);
          break;
        }
      if (c < 0 || rem != c * ei) return;
      if (bound_ && c > cap) return;
      exps_[i] = c;
      emit();
      exps_[i] = 0;
      return;
    }
    int maxc;
    if (f_) {
      maxc = apply(*f_, rem) / apply(*f_, ei);
      if (bound_) maxc = std::min(maxc, cap);
    } else {
      maxc = cap;
    }
    Degree r = rem;
    for (int c = 0; c <= maxc; ++c, r -= ei) {
      if (!feasible(i + 1, r)) continue;
      exps_[i] = c;
      rec(i + 1, r, bound_ ? cap - c : -1);
    }
    exps_[i] = 0;
  }

  void emit() { out_->emplace_back(gens_, exps_, odd_); }

  const GeneratorSet& gens_;
  std::vector<Degree> e_;
  std::optional<int> bound_;
  std::optional<Degree> f_;
  std::vector<std::array<double, 3>> lo_, hi_;
  std::vector<int> exps_;
  OddSet odd_ = 0;
  std::vector<Monomial>* out_ = nullptr;
};

}  // namespace

GradedBasis basis_at(const Presentation& pres, const Degree& deg, std::optional<int> bound) {
  return BasisEnumerator(pres, bound).run(deg);
}

namespace {

IntegerMatrix build_d_matrix(const Presentation& pres, const GradedBasis& source,
                             const GradedBasis& target) {
  IntegerMatrix m(target.size(), source.size());
  for (std::size_t c = 0; c < source.size(); ++c)
    for (const auto& [mono, v] : apply_d_monomial(pres, source.monomials[c])) {
      std::size_t r = target.index_of(mono);
      // Rows missing from a capped target basis are dropped.
      if (r != GradedBasis::npos) m.set(r, c, v);
    }
  return m;
}

}  // namespace

IntegerMatrix d_matrix(const Presentation& pres, const Degree& deg, std::optional<int> bound) {
  BasisEnumerator en(pres, bound);
  GradedBasis src = en.run(deg);
  GradedBasis dst = en.run(deg + kDifferentialDegree);
  return build_d_matrix(pres, src, dst);
}

std::vector<std::pair<long, int>> elementary_divisors(const std::vector<mpz_class>& factors) {
  std::vector<std::pair<long, int>> out;
  for (mpz_class n : factors) {
    if (n < 0) n = -n;
    for (long p = 2; n > 1; ++p) {
      if (mpz_class(p) * p > n) {
        if (!n.fits_slong_p()) throw std::overflow_error("torsion coefficient too large to factor");
        out.push_back({n.get_si(), 1});
        break;
      }
      int e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        n /= p;
        ++e;
      }
      if (e) out.push_back({p, e});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<long, int>> HomologyGroup::elementary_divisors() const {
  return koszul::elementary_divisors(torsion);
}

int HomologyGroup::p_primary_count(long p) const {
  int n = 0;
  for (const auto& [q, e] : elementary_divisors())
    if (q == p) ++n;
  return n;
}

std::string HomologyGroup::to_string() const {
  std::ostringstream os;
  os << "rank=" << free_rank;
  if (!torsion.empty()) {
    os << ", torsion=[";
    for (std::size_t i = 0; i < torsion.size(); ++i) os << (i ? "," : "") << torsion[i];
    os << "]";
  }
  return os.str();
}

ChainComplex::ChainComplex(const Presentation& pres, std::optional<int> bound)
    : pres_(pres), bound_(bound) {
  BasisEnumerator probe(pres_, bound_);  // fails early on non-proper gradings
}

std::shared_ptr<const GradedBasis> ChainComplex::basis(const Degree& deg) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = bases_.find(deg); it != bases_.end()) return it->second;
  }
  auto b = std::make_shared<const GradedBasis>(BasisEnumerator(pres_, bound_).run(deg));
  std::lock_guard lock(mutex_);
  return bases_.try_emplace(deg, b).first->second;
}

std::shared_ptr<const IntegerMatrix> ChainComplex::differential(const Degree& deg) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = matrices_.find(deg); it != matrices_.end()) return it->second;
  }
  auto src = basis(deg);
  auto dst = basis(deg + kDifferentialDegree);
  auto m = std::make_shared<const IntegerMatrix>(build_d_matrix(pres_, *src, *dst));
  std::lock_guard lock(mutex_);
  return matrices_.try_emplace(deg, m).first->second;
}

HomologyGroup ChainComplex::homology(const Degree& deg, const CoefficientRing& ring) {
  HomologyGroup h;
  auto b = basis(deg);
  if (b->size() == 0) return h;
  auto out = differential(deg);
  auto in = differential(deg - kDifferentialDegree);
  long dim = static_cast<long>(b->size());
  switch (ring.kind()) {
    case CoefficientRing::Kind::Rationals:
      h.free_rank = dim - static_cast<long>(rank_over_rationals(*out) + rank_over_rationals(*in));
      break;
    case CoefficientRing::Kind::PrimeField: {
      long p = ring.characteristic();
      h.free_rank = dim - static_cast<long>(rank_mod_p(*out, p) + rank_mod_p(*in, p));
      break;
    }
    case CoefficientRing::Kind::Integers: {
      // Torsion is placed at the source of the map that exposes it: the
      // invariant factors of the outgoing differential, i.e. the torsion
      // of the dual complex's cohomology at deg. The free part is the same
      // either way.
      SmithForm snf = smith_normal_form(*out);
      h.free_rank = dim - static_cast<long>(snf.rank() + rank_over_rationals(*in));
      for (const auto& d : snf.factors)
        if (d > 1) h.torsion.push_back(d);
      break;
    }
  }
  return h;
}

HomologyGroup homology_at(const Presentation& pres, const Degree& deg, const CoefficientRing& ring,
                          std::optional<int> bound) {
  ChainComplex c(pres, bound);
  return c.homology(deg, ring);
}

HomologyGroup HomologyTable::at(int q, int t) const {
  auto it = cells.find(Degree{q, t, 0});
  return it == cells.end() ? HomologyGroup{} : it->second;
}

long HomologyTable::total_rank() const {
  long s = 0;
  for (const auto& [d, h] : cells) s += h.free_rank;
  return s;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& f) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < threads; ++k)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

namespace {

void require_flat(const Presentation& pres) {
  for (const auto& g : pres.generators()->all())
    if (g.degree.a != 0)
      throw std::invalid_argument(pres.name() +
                                  " keeps an a-grading; tables need a regraded presentation");
}

}  // namespace

HomologyTable homology_table(const Presentation& pres, const CoefficientRing& ring,
                             const Window& window, std::optional<int> bound, unsigned threads) {
  require_flat(pres);
  HomologyTable table;
  table.label = pres.name();
  table.ring = ring;
  table.window = window;
  table.bound = bound;
  if (window.empty()) return table;
  ChainComplex complex(pres, bound);
  std::vector<Degree> degrees;
  for (int t = window.tmin; t <= window.tmax; ++t)
    for (int q = window.qmin; q <= window.qmax; ++q) degrees.push_back({q, t, 0});
  std::vector<HomologyGroup> groups(degrees.size());
  parallel_for(degrees.size(), threads,
               [&](std::size_t i) { groups[i] = complex.homology(degrees[i], ring); });
  for (std::size_t i = 0; i < degrees.size(); ++i)
    if (!groups[i].is_zero()) table.cells.emplace(degrees[i], std::move(groups[i]));
  return table;
}

HomologyTable stabilized_homology_table(const Presentation& pres, const CoefficientRing& ring,
                                        const Window& window, const std::vector<int>& caps,
                                        unsigned threads) {
  if (caps.empty()) throw std::invalid_argument("stabilization needs at least one cap");
  std::vector<int> sorted = caps;
  std::sort(sorted.begin(), sorted.end());
  std::optional<HomologyTable> previous;
  HomologyTable current;
  std::set<Degree> unstable;
  for (int cap : sorted) {
    current = homology_table(pres, ring, window, cap, threads);
    if (previous) {
      std::set<Degree> keys;
      for (const auto& [d, h] : previous->cells) keys.insert(d);
      for (const auto& [d, h] : current.cells) keys.insert(d);
      for (const Degree& d : keys)
        if (!(previous->at(d.q, d.t) == current.at(d.q, d.t))) unstable.insert(d);
    }
    previous = current;
  }
  current.unstable = std::move(unstable);
  return current;
}

std::map<int, long> euler_characteristic_of_chains(const Presentation& pres, const Window& window,
                                                   std::optional<int> bound) {
  require_flat(pres);
  BasisEnumerator en(pres, bound);
  std::map<int, long> chi;
  for (int q = window.qmin; q <= window.qmax; ++q) {
    long s = 0;
    for (int t = window.tmin; t <= window.tmax; ++t) {
      long n = static_cast<long>(en.run({q, t, 0}).size());
      s += (t % 2 == 0) ? n : -n;
    }
    chi[q] = s;
  }
  return chi;
}

}  // namespace koszul
