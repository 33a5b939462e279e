// koszul-kr: homology tables, closed-form series, certificates and table
// comparison for the stable Koszul model.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "koszul/certify.hpp"
#include "koszul/errors.hpp"
#include "koszul/homology.hpp"
#include "koszul/presentations.hpp"
#include "koszul/series.hpp"
#include "koszul/tables.hpp"

using namespace koszul;

namespace {

constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PresentationArgs {
  int n = 0;
  int N = 0;
  bool reduced = false;
  std::string tableau;
  std::string level = "sln";
};

void add_presentation_flags(CLI::App* cmd, PresentationArgs& a) {
  cmd->add_option("--n", a.n, "number of strands (stable model)");
  cmd->add_option("--N", a.N, "rank N of SL(N)");
  cmd->add_flag("--reduced", a.reduced, "reduced version");
  cmd->add_option("--tableau", a.tableau, "projector shape: [12] [1,2] [123] [1,2,3] [12,3] [13,2]");
  cmd->add_option("--level", a.level, "projector level: homfly, sln or d0")
      ->check(CLI::IsMember({"homfly", "sln", "d0"}));
}

ProjectorLevel projector_level(const std::string& s) {
  return s == "homfly" ? ProjectorLevel::Homfly : s == "d0" ? ProjectorLevel::D0 : ProjectorLevel::SlN;
}

SeriesLevel series_level(const std::string& s) {
  return s == "homfly" ? SeriesLevel::Homfly : s == "d0" ? SeriesLevel::D0 : SeriesLevel::SlN;
}

Presentation build_presentation(const PresentationArgs& a) {
  if (!a.tableau.empty()) {
    ProjectorOptions opt;
    opt.reduced = a.reduced;
    ProjectorLevel lv = projector_level(a.level);
    if (lv == ProjectorLevel::SlN && a.N < 1) throw UsageError("--N is required at level sln");
    return projector_presentation(parse_tableau(a.tableau), lv, a.N, opt);
  }
  if (a.n < 1 || a.N < 1) throw UsageError("--n and --N are required without --tableau");
  return a.reduced ? reduced_presentation(a.n, a.N) : stable_presentation(a.n, a.N);
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw UsageError("cannot write " + out);
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string series_rows(const std::string& label, const std::map<Degree, mpz_class>& coeffs,
                        const SeriesWindow& w) {
  std::ostringstream os;
  os << "label=" << label << "\ncoeff=Z\n";
  os << "window=t:" << w.tmin << ".." << w.tmax << ", q:" << w.qmin << ".." << w.qmax << "\n";
  for (const auto& [d, c] : coeffs) {
    os << "q=" << d.q << ", t=" << d.t;
    if (d.a) os << ", a=" << d.a;
    os << ", rank=" << c << "\n";
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable Koszul model of torus-knot homology"};
  app.require_subcommand(1);

  // homology
  PresentationArgs hp;
  std::string coeff = "Q", out;
  std::optional<int> tmin, tmax, qmin, qmax, bound;
  std::vector<int> caps;
  unsigned threads = 0;
  auto* hom = app.add_subcommand("homology", "homology table of a presentation");
  add_presentation_flags(hom, hp);
  hom->add_option("--coeff", coeff, "Q, Z or Fp:<p>");
  hom->add_option("--tmin", tmin);
  hom->add_option("--tmax", tmax)->required();
  hom->add_option("--qmin", qmin);
  hom->add_option("--qmax", qmax);
  hom->add_option("--bound", bound, "cap on total multiplicity");
  hom->add_option("--caps", caps, "stabilization caps, e.g. --caps 12 16");
  hom->add_option("--threads", threads, "worker threads, 0 = all cores");
  hom->add_option("--out", out, "write the table to a file");

  // presentation
  PresentationArgs pp;
  auto* pres_cmd = app.add_subcommand("presentation", "print generators and differential");
  add_presentation_flags(pres_cmd, pp);

  // series
  std::string formula_name, slevel = "sln";
  std::optional<int> torus2, torus3, expand_tmax;
  int sN = 0, sn = 0, sm = 0;
  bool sreduced = false, as_printed = false, check_ids = false, list = false, raw = false;
  std::optional<int> sqmin, sqmax;
  auto* ser = app.add_subcommand("series", "closed-form Poincare series");
  auto* f_opt = ser->add_option("--formula", formula_name, "catalogue name (see --list)");
  auto* t2_opt = ser->add_option("--torus2", torus2, "T(2,m) projector assembly, m odd");
  auto* t3_opt = ser->add_option("--torus3", torus3, "T(3,m) projector assembly, 3 does not divide m");
  f_opt->excludes(t2_opt)->excludes(t3_opt);
  t2_opt->excludes(t3_opt);
  ser->add_option("--N", sN);
  ser->add_option("--n", sn);
  ser->add_option("--m", sm);
  ser->add_option("--level", slevel, "homfly, sln or d0")->check(CLI::IsMember({"homfly", "sln", "d0"}));
  ser->add_flag("--reduced", sreduced);
  ser->add_flag("--as-printed", as_printed, "displayed version where the catalogue corrects it");
  ser->add_option("--expand", expand_tmax, "expand up to this t");
  ser->add_option("--qmin", sqmin);
  ser->add_option("--qmax", sqmax);
  ser->add_flag("--check-identities", check_ids, "projector sum identities");
  ser->add_flag("--list", list, "list the catalogue");
  ser->add_flag("--raw", raw, "no q normalization of reduced assemblies");

  // certify
  std::vector<std::string> names;
  bool skip_integral = false;
  int ctmax = 12;
  std::optional<int> cqmax;
  auto* cert = app.add_subcommand("certify", "run certificates");
  cert->add_option("--name", names, "tp:<p>,<N> | A | B | reduced:<n>,<N> | generators:<n>,<N>")
      ->required();
  cert->add_flag("--skip-integral", skip_integral, "skip Smith normal form checks");
  cert->add_option("--tmax", ctmax, "window for reduced/generators");
  cert->add_option("--qmax", cqmax);

  // compare
  std::string model_path, data_path, shift_text = "auto";
  auto* cmp = app.add_subcommand("compare", "compare a model table with external data");
  cmp->add_option("--model", model_path, "homology table written by 'homology --out'")->required();
  cmp->add_option("--data", data_path, "external (t, dd) table")->required();
  cmp->add_option("--shift", shift_text, "auto or an integer added to the data's q");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*hom) {
      Presentation pres = build_presentation(hp);
      CoefficientRing ring = CoefficientRing::parse(coeff);
      bool projector = !hp.tableau.empty();
      int span = 2 * *tmax + 2 * std::max(hp.N, 1);
      Window w{tmin.value_or(projector ? -*tmax : 0), *tmax,
               qmin.value_or(projector ? -2 * span : 0), qmax.value_or(projector ? 2 * span : span)};
      HomologyTable table = caps.empty() ? homology_table(pres, ring, w, bound, threads)
                                         : stabilized_homology_table(pres, ring, w, caps, threads);
      emit(serialize(table), out);
      return 0;
    }
    if (*pres_cmd) {
      std::cout << build_presentation(pp).serialize();
      return 0;
    }
    if (*ser) {
      if (list) {
        for (const auto& e : catalogue())
          std::cout << e.name << "  [" << e.parameters << "]  " << e.description << "\n";
        return 0;
      }
      SeriesLevel lv = series_level(slevel);
      if (check_ids) {
        std::vector<int> Ns = sN ? std::vector<int>{sN} : std::vector<int>{2, 3, 4, 5};
        bool ok = true;
        auto run = [&](SeriesLevel level, int N, bool red, const std::string& tag) {
          auto P = [&](const char* t) { return projector_series(t, level, N, red); };
          struct Id {
            const char *a, *b, *sum;
          };
          for (Id id : {Id{"[12]", "[1,2]", "[1]"}, Id{"[123]", "[12,3]", "[12]"},
                        Id{"[1,2,3]", "[13,2]", "[1,2]"}}) {
            bool holds = P(id.a) + P(id.b) == P(id.sum);
            ok = ok && holds;
            std::cout << (holds ? "PASS " : "FAIL ") << tag << ": P" << id.a << " + P" << id.b
                      << " = P" << id.sum << "\n";
          }
        };
        for (bool red : {false, true}) {
          run(SeriesLevel::Homfly, 0, red, std::string("homfly") + (red ? " reduced" : ""));
          for (int N : Ns)
            run(SeriesLevel::SlN, N, red, "N=" + std::to_string(N) + (red ? " reduced" : ""));
        }
        return ok ? 0 : 1;
      }
      if (torus2 || torus3) {
        int m = torus2 ? *torus2 : *torus3;
        Assembly a = torus2 ? assemble_torus2(m, lv, sN, sreduced) : assemble_torus3(m, lv, sN, sreduced);
        std::cout << "assembly: T(" << (torus2 ? 2 : 3) << "," << m << ") level=" << slevel;
        if (lv == SeriesLevel::SlN) std::cout << " N=" << sN;
        std::cout << (sreduced || lv == SeriesLevel::D0 ? " reduced" : "") << "\n";
        std::cout << "function: " << a.function.to_string() << "\n";
        if (!a.polynomial) {
          std::cout << "polynomial: none\n";
          return 1;
        }
        LaurentPoly p = *a.polynomial;
        if (lv == SeriesLevel::SlN && sreduced && !raw) {
          p = normalize_lowest_q(p, 2 * sN - 2);
          std::cout << "normalization: lowest term at q^" << 2 * sN - 2 << "\n";
        }
        std::cout << "polynomial: " << p.to_string() << "\n";
        if (a.stated_q_shift) std::cout << "stated-q-shift: " << *a.stated_q_shift << "\n";
        bool nonneg = p.has_nonnegative_coefficients();
        std::cout << "nonnegative: " << (nonneg ? "yes" : "no") << "\n";
        return nonneg ? 0 : 1;
      }
      if (formula_name.empty()) throw UsageError("series needs --formula, --torus2, --torus3, --list or --check-identities");
      FormulaParams fp{lv, sN, sn, sm, sreduced, as_printed};
      RationalFunction f = formula(formula_name, fp);
      std::cout << "formula: " << formula_name << "\n";
      std::cout << "function: " << f.to_string() << "\n";
      if (auto p = f.as_polynomial()) std::cout << "polynomial: " << p->to_string() << "\n";
      if (expand_tmax) {
        int T = *expand_tmax;
        SeriesWindow w{formula_name.starts_with("proj:") ? -T : 0, T,
                       sqmin.value_or(-4 * T - 10), sqmax.value_or(4 * T + 4 * sN + 10), 0,
                       lv == SeriesLevel::Homfly ? 2 * (T + 2) : 0};
        std::optional<Degree> weights;
        if (formula_name.starts_with("proj:") && formula_name != "proj:[1]")
          weights = projector_expansion_weights(parse_tableau(formula_name.substr(5)), lv, sN, sreduced);
        std::cout << series_rows(formula_name, expand(f, w, weights), w);
      }
      return 0;
    }
    if (*cert) {
      Window w{0, ctmax, 0, cqmax.value_or(4 * ctmax + 20)};
      bool all = true;
      for (const auto& name : names) {
        CertificateReport r = run_certificate(name, w, !skip_integral);
        std::cout << r.to_string();
        all = all && r.passed();
      }
      return all ? 0 : 1;
    }
    if (*cmp) {
      HomologyTable model = parse_homology_table(read_file(model_path));
      ExternalTable data = parse_table(read_file(data_path));
      std::optional<int> shift;
      if (shift_text != "auto") {
        try {
          std::size_t used = 0;
          shift = std::stoi(shift_text, &used);
          if (used != shift_text.size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
          throw UsageError("--shift must be auto or an integer");
        }
      }
      DiffReport r = compare(model, data, shift);
      std::cout << r.to_string();
      return r.agrees() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
