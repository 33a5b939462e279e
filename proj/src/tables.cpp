#include "koszul/tables.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

long to_long(std::string_view s, std::size_t line, std::string_view what) {
  s = trim(s);
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError("non-integer " + std::string(what) + " '" + std::string(s) + "'", line);
  return v;
}

std::pair<long, int> prime_power(std::string_view s, std::size_t line) {
  auto caret = s.find('^');
  long p = to_long(s.substr(0, caret), line, "torsion prime");
  long e = caret == std::string_view::npos ? 1 : to_long(s.substr(caret + 1), line, "torsion exponent");
  if (!is_prime(p) || e < 1) throw ParseError("bad torsion entry '" + std::string(s) + "'", line);
  return {p, static_cast<int>(e)};
}

// Fields of one row: key=value pairs, with bare prime powers after tor=
// appended to the torsion list.
struct Row {
  std::map<std::string, long> ints;
  PrimePowers torsion;
};

Row parse_row(std::string_view text, std::size_t line) {
  Row row;
  bool in_tor = false;
  for (std::string_view field : split(text, ',')) {
    if (field.empty()) throw ParseError("empty field", line);
    auto eq = field.find('=');
    if (eq == std::string_view::npos) {
      if (!in_tor) throw ParseError("expected key=value, got '" + std::string(field) + "'", line);
      row.torsion.push_back(prime_power(field, line));
      continue;
    }
    std::string key(trim(field.substr(0, eq)));
    std::string_view value = trim(field.substr(eq + 1));
    in_tor = key == "tor";
    if (in_tor) {
      row.torsion.push_back(prime_power(value, line));
      continue;
    }
    if (key != "t" && key != "dd" && key != "q" && key != "a" && key != "rank")
      throw ParseError("unknown field '" + key + "'", line);
    if (row.ints.count(key)) throw ParseError("repeated field '" + key + "'", line);
    row.ints[key] = to_long(value, line, key);
  }
  std::sort(row.torsion.begin(), row.torsion.end());
  return row;
}

std::string torsion_text(const PrimePowers& tor) {
  std::string s;
  for (const auto& [p, e] : tor) s += (s.empty() ? "" : ",") + std::to_string(p) + "^" + std::to_string(e);
  return s;
}

std::string cell_text(const ExternalCell& c) {
  std::string s = "rank=" + std::to_string(c.rank);
  if (!c.torsion.empty()) s += ", tor=" + torsion_text(c.torsion);
  return s;
}

bool is_header(std::string_view line, std::string_view key) {
  return line.starts_with(key) && line.size() > key.size() && line[key.size()] == '=';
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t lineno = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++lineno;
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) f(line, lineno);
    start = end + 1;
  }
}

}  // namespace

ExternalTable parse_table(std::string_view text) {
  ExternalTable table;
  for_each_line(text, [&](std::string_view line, std::size_t no) {
    if (is_header(line, "knot")) {
      auto parts = split(line.substr(5), ',');
      if (parts.size() != 2) throw ParseError("knot header needs n,m", no);
      table.knot = {static_cast<int>(to_long(parts[0], no, "knot n")),
                    static_cast<int>(to_long(parts[1], no, "knot m"))};
      return;
    }
    if (is_header(line, "coeff")) {
      try {
        table.ring = CoefficientRing::parse(trim(line.substr(6)));
      } catch (const std::exception& e) {
        throw ParseError(e.what(), no);
      }
      return;
    }
    if (is_header(line, "tor-primes")) {
      std::set<long> primes;
      for (auto p : split(line.substr(11), ',')) primes.insert(to_long(p, no, "prime"));
      table.tor_primes = primes;
      return;
    }
    Row row = parse_row(line, no);
    if (!row.ints.count("t") || !row.ints.count("rank"))
      throw ParseError("row needs t= and rank=", no);
    if (row.ints.count("dd") == row.ints.count("q"))
      throw ParseError("row needs exactly one of dd= and q=", no);
    long t = row.ints["t"];
    long dd = row.ints.count("dd") ? row.ints["dd"] : row.ints["q"] - 2 * t;
    if (row.ints["rank"] < 0) throw ParseError("negative rank", no);
    auto key = std::pair{static_cast<int>(t), static_cast<int>(dd)};
    if (table.cells.count(key))
      throw ParseError("duplicate cell t=" + std::to_string(t) + ", dd=" + std::to_string(dd), no);
    table.cells[key] = ExternalCell{row.ints["rank"], row.torsion};
  });
  return table;
}

ExternalTable read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_table(ss.str());
}

std::string serialize(const ExternalTable& table) {
  std::ostringstream os;
  if (table.knot) os << "knot=" << table.knot->first << "," << table.knot->second << "\n";
  os << "coeff=" << table.ring.name() << "\n";
  if (table.tor_primes) {
    os << "tor-primes=";
    bool first = true;
    for (long p : *table.tor_primes) os << (std::exchange(first, false) ? "" : ",") << p;
    os << "\n";
  }
  for (const auto& [key, cell] : table.cells)
    os << "t=" << key.first << ", dd=" << key.second << ", " << cell_text(cell) << "\n";
  return os.str();
}

ExternalTable to_external(const HomologyTable& table) {
  ExternalTable out;
  out.ring = table.ring;
  for (const auto& [d, g] : table.cells)
    if (!g.is_zero()) out.cells[{d.t, d.q - 2 * d.t}] = ExternalCell{g.free_rank, g.elementary_divisors()};
  return out;
}

std::vector<mpz_class> invariant_factors(const PrimePowers& powers) {
  std::map<long, std::vector<int>> by_prime;
  for (const auto& [p, e] : powers) by_prime[p].push_back(e);
  std::size_t count = 0;
  for (auto& [p, es] : by_prime) {
    std::sort(es.rbegin(), es.rend());
    count = std::max(count, es.size());
  }
  // Largest factor collects the largest power of each prime, and so on.
  std::vector<mpz_class> out(count, 1);
  for (const auto& [p, es] : by_prime)
    for (std::size_t i = 0; i < es.size(); ++i) {
      mpz_class pe;
      mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(es[i]));
      out[count - 1 - i] *= pe;
    }
  return out;
}

std::string serialize(const HomologyTable& table) {
  std::ostringstream os;
  os << "label=" << table.label << "\n";
  os << "coeff=" << table.ring.name() << "\n";
  os << "window=t:" << table.window.tmin << ".." << table.window.tmax << ", q:" << table.window.qmin
     << ".." << table.window.qmax << "\n";
  if (table.bound) os << "bound=" << *table.bound << "\n";
  for (const auto& [d, g] : table.cells) {
    os << "q=" << d.q << ", t=" << d.t;
    if (d.a) os << ", a=" << d.a;
    os << ", rank=" << g.free_rank;
    if (!g.torsion.empty()) os << ", tor=" << torsion_text(g.elementary_divisors());
    os << "\n";
  }
  for (const auto& d : table.unstable) {
    os << "unstable q=" << d.q << ", t=" << d.t;
    if (d.a) os << ", a=" << d.a;
    os << "\n";
  }
  return os.str();
}

HomologyTable parse_homology_table(std::string_view text) {
  HomologyTable table;
  table.cells.clear();
  for_each_line(text, [&](std::string_view line, std::size_t no) {
    if (is_header(line, "label")) {
      table.label = std::string(trim(line.substr(6)));
      return;
    }
    if (is_header(line, "coeff")) {
      try {
        table.ring = CoefficientRing::parse(trim(line.substr(6)));
      } catch (const std::exception& e) {
        throw ParseError(e.what(), no);
      }
      return;
    }
    if (is_header(line, "window")) {
      std::string w(line.substr(7));
      Window win;
      if (std::sscanf(w.c_str(), "t:%d..%d, q:%d..%d", &win.tmin, &win.tmax, &win.qmin, &win.qmax) != 4)
        throw ParseError("window header must read t:<a>..<b>, q:<c>..<d>", no);
      table.window = win;
      return;
    }
    if (is_header(line, "bound")) {
      table.bound = static_cast<int>(to_long(line.substr(6), no, "bound"));
      return;
    }
    bool unstable = line.starts_with("unstable ");
    Row row = parse_row(unstable ? line.substr(9) : line, no);
    if (!row.ints.count("q") || !row.ints.count("t")) throw ParseError("record needs q= and t=", no);
    Degree d{static_cast<int>(row.ints["q"]), static_cast<int>(row.ints["t"]),
             static_cast<int>(row.ints.count("a") ? row.ints["a"] : 0)};
    if (unstable) {
      table.unstable.insert(d);
      return;
    }
    if (!row.ints.count("rank")) throw ParseError("record needs rank=", no);
    if (table.cells.count(d)) throw ParseError("duplicate cell " + to_string(d), no);
    table.cells[d] = HomologyGroup{row.ints["rank"], invariant_factors(row.torsion)};
  });
  return table;
}

std::string DiffReport::to_string() const {
  std::ostringstream os;
  os << "shift: " << shift << (auto_shift ? " (auto)" : "") << "\n";
  os << "compared: t=" << tmin << ".." << tmax << ", " << compared_cells << " cells";
  if (ignored_cells) os << ", " << ignored_cells << " data cells outside the model window";
  os << "\n";
  if (first_divergence)
    os << "first-divergence: t=" << first_divergence->first << ", q=" << first_divergence->second
       << "\n";
  else
    os << "first-divergence: none\n";
  for (const auto& m : mismatches)
    os << "mismatch: t=" << m.t << ", q=" << m.q << " | model " << cell_text(m.model) << " | data "
       << cell_text(m.data) << (m.model_unstable ? " | model cell unstable" : "") << "\n";
  os << "result: " << (agrees() ? "AGREE" : "DIVERGE") << "\n";
  return os.str();
}

DiffReport compare(const HomologyTable& model, const ExternalTable& data, std::optional<int> shift) {
  if (!(model.ring == data.ring))
    throw std::invalid_argument("coefficient ring mismatch: model " + model.ring.name() + ", data " +
                                data.ring.name());
  auto keep = [&](PrimePowers tor) {
    if (data.tor_primes)
      std::erase_if(tor, [&](const auto& pe) { return !data.tor_primes->count(pe.first); });
    return tor;
  };
  // (t, q) -> cell on both sides, zero cells dropped.
  std::map<std::pair<int, int>, ExternalCell> lhs, rhs;
  for (const auto& [d, g] : model.cells) {
    ExternalCell c{g.free_rank, keep(g.elementary_divisors())};
    if (c.rank || !c.torsion.empty()) lhs[{d.t, d.q}] = c;
  }
  DiffReport r;
  if (shift) {
    r.shift = *shift;
  } else {
    r.auto_shift = true;
    if (!lhs.empty() && !data.cells.empty()) {
      auto [t0, dd0] = data.cells.begin()->first;
      r.shift = lhs.begin()->first.second - (dd0 + 2 * t0);
    }
  }
  int data_tmin = data.cells.empty() ? 0 : data.cells.begin()->first.first;
  int data_tmax = data.cells.empty() ? -1 : data.cells.rbegin()->first.first;
  r.tmin = std::max(model.window.tmin, data_tmin);
  r.tmax = std::min(model.window.tmax, data_tmax);
  for (const auto& [key, cell] : data.cells) {
    int t = key.first, q = key.second + 2 * t + r.shift;
    if (!model.window.contains(q, t)) {
      ++r.ignored_cells;
      continue;
    }
    ExternalCell c{cell.rank, keep(cell.torsion)};
    if (c.rank || !c.torsion.empty()) rhs[{t, q}] = c;
  }
  std::set<std::pair<int, int>> keys;
  for (const auto& [k, c] : lhs)
    if (k.first >= r.tmin && k.first <= r.tmax) keys.insert(k);
  for (const auto& [k, c] : rhs)
    if (k.first >= r.tmin && k.first <= r.tmax) keys.insert(k);
  r.compared_cells = keys.size();
  for (const auto& k : keys) {
    ExternalCell a = lhs.count(k) ? lhs[k] : ExternalCell{};
    ExternalCell b = rhs.count(k) ? rhs[k] : ExternalCell{};
    if (a == b) continue;
    bool unstable = model.unstable.count(Degree{k.second, k.first, 0}) > 0;
    r.mismatches.push_back({k.first, k.second, a, b, unstable});
  }
  if (!r.mismatches.empty()) r.first_divergence = std::pair{r.mismatches[0].t, r.mismatches[0].q};
  return r;
}

}  // namespace koszul
