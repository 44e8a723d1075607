#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "symbpow/containment.hpp"
#include "symbpow/decomposition.hpp"
#include "symbpow/determinantal.hpp"
#include "symbpow/errors.hpp"
#include "symbpow/frobenius.hpp"
#include "symbpow/io.hpp"
#include "symbpow/parallel.hpp"
#include "symbpow/symbolic.hpp"

namespace symbpow::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  json doc;
  Table table;
  std::optional<std::string> csv;
  bool negative = false;
};

struct Options {
  std::string ideal;
  std::string vars;
  std::string gens;
  std::vector<unsigned> star;
  std::string other;
  std::string monomial;
  std::string format = "table";
  std::string out_path;
  bool assert_results = false;
  bool allow_any_q = false;
  unsigned n = 2;
  unsigned n_max = 3;
  unsigned a = 1;
  unsigned b = 1;
  unsigned p = 2;
  unsigned e = 1;
  unsigned e_max = 4;
  unsigned q = 2;
  std::string c;
  std::string lemma;
  unsigned t = 1;
  unsigned k = 0;
  unsigned d = 1;
  unsigned k_max = 0;
  unsigned v = 0;
  unsigned h = 1;
  unsigned search_bound = 0;
  std::string regime;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_names(std::string_view text) {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    names.push_back(trim(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return names;
}

MonomialIdeal read_ideal_source(const std::string& source, const std::string& flag) {
  const std::string trimmed = trim(source);
  std::string text;
  std::string label = flag;
  if (!trimmed.empty() && trimmed.front() == '{') {
    text = trimmed;
  } else {
    std::ifstream in(source);
    if (!in) throw UsageError(flag + ": cannot read '" + source + "'");
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    label = source;
  }
  try {
    return io::parse_ideal(text);
  } catch (const ParseError& e) {
    throw ParseError(label + ": " + e.what());
  }
}

MonomialIdeal load_ideal(const Options& o) {
  const int sources = !o.ideal.empty() + !o.gens.empty() + !o.star.empty();
  if (sources != 1) throw UsageError("give exactly one of --ideal, --gens, --star");
  if (!o.star.empty()) return star_configuration(o.star[0], o.star[1]);
  if (!o.gens.empty()) {
    if (o.vars.empty()) throw UsageError("--gens requires --vars");
    const ContextPtr ctx = make_context(split_names(o.vars));
    return io::parse_generator_list(ctx, o.gens);
  }
  return read_ideal_source(o.ideal, "--ideal");
}

unsigned resolve_q(const CLI::App& sub, const Options& o) {
  const bool has_q = sub.count("--q") > 0;
  const bool has_p = sub.count("--p") > 0;
  if (has_q && has_p) throw UsageError("give either --q or --p/--e, not both");
  if (!has_q && !has_p) throw UsageError("missing --q or --p");
  std::uint64_t q = o.q;
  if (has_p) {
    if (!o.allow_any_q && !is_prime(o.p)) {
      throw UsageError("p = " + std::to_string(o.p) + " is not prime (use --allow-any-q to override)");
    }
    q = 1;
    for (unsigned i = 0; i < o.e; ++i) {
      q *= o.p;
      if (q > kMaxFrobeniusQ) throw UsageError("q = p^e exceeds " + std::to_string(kMaxFrobeniusQ));
    }
  }
  if (q > kMaxFrobeniusQ) throw UsageError("q exceeds " + std::to_string(kMaxFrobeniusQ));
  if (!o.allow_any_q && !is_prime_power(q)) {
    throw UsageError("q = " + std::to_string(q) + " is not a prime power (use --allow-any-q to override)");
  }
  return static_cast<unsigned>(q);
}

std::string opt_string(const std::optional<Monomial>& m) { return m ? m->to_string() : ""; }

void write_table(std::ostream& out, const Table& t) {
  std::vector<std::size_t> width(t.header.size(), 0);
  auto measure = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  };
  measure(t.header);
  for (const auto& row : t.rows) measure(row);
  auto emit = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << '\n';
  };
  emit(t.header);
  for (const auto& row : t.rows) emit(row);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

void write_csv_table(std::ostream& out, const Table& t) {
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
    out << '\n';
  };
  emit(t.header);
  for (const auto& row : t.rows) emit(row);
}

Report ideal_report(const std::string& verb, json params, const MonomialIdeal& input,
                    const MonomialIdeal& result) {
  Report r;
  r.doc = std::move(params);
  r.doc["verb"] = verb;
  r.doc["input"] = io::to_json(input);
  r.doc["result"] = io::to_json(result);
  r.table.header = {"generator"};
  for (const auto& g : result.generators()) r.table.rows.push_back({g.to_string()});
  std::ostringstream csv;
  const auto& names = result.context()->var_names();
  for (std::size_t i = 0; i < names.size(); ++i) csv << (i ? "," : "") << names[i];
  csv << '\n';
  for (const auto& g : result.generators()) {
    const auto e = g.exponents();
    for (std::size_t i = 0; i < e.size(); ++i) csv << (i ? "," : "") << e[i];
    csv << '\n';
  }
  r.csv = csv.str();
  return r;
}

Report verdict_report(const std::string& verb, json params, const Verdict& v) {
  Report r;
  r.doc = std::move(params);
  r.doc["verb"] = verb;
  r.doc["verdict"] = io::to_json(v);
  r.table.header = {"field", "value"};
  for (const auto& [key, value] : r.doc.items()) {
    if (key == "verdict" || key == "verb" || value.is_object()) continue;
    r.table.rows.push_back({key, value.is_string() ? value.get<std::string>() : value.dump()});
  }
  r.table.rows.push_back({"holds", yes_no(v.holds)});
  r.table.rows.push_back({"counterexample", opt_string(v.counterexample)});
  if (v.below_threshold) r.table.rows.push_back({"below_threshold", "true"});
  r.negative = !v.holds;
  return r;
}

Report criterion_report(const std::string& verb, json params,
                        const std::vector<CriterionReport>& rows) {
  Report r;
  r.doc = std::move(params);
  r.doc["verb"] = verb;
  r.doc["rows"] = json::array();
  const bool with_c = !rows.empty() && rows.front().multiplier.has_value();
  r.table.header = {"q", "passed", "witness"};
  if (with_c) r.table.header.insert(r.table.header.begin() + 1, "c");
  for (const auto& row : rows) {
    r.doc["rows"].push_back(io::to_json(row));
    std::vector<std::string> line{std::to_string(row.q), yes_no(row.passed), opt_string(row.witness)};
    if (with_c) line.insert(line.begin() + 1, opt_string(row.multiplier));
    r.table.rows.push_back(std::move(line));
    if (!row.passed) r.negative = true;
  }
  return r;
}

Report containment_rows_report(const std::string& verb, json params,
                               const std::vector<ContainmentReport>& rows) {
  Report r;
  r.doc = std::move(params);
  r.doc["verb"] = verb;
  r.doc["rows"] = json::array();
  r.table.header = {"n", "a", "b", "holds", "counterexample", "minimal_a"};
  for (const auto& row : rows) {
    r.doc["rows"].push_back(io::to_json(row));
    r.table.rows.push_back({std::to_string(row.n), std::to_string(row.a), std::to_string(row.b),
                            yes_no(row.holds), opt_string(row.counterexample),
                            row.minimal_a ? std::to_string(*row.minimal_a) : ""});
    if (!row.holds) r.negative = true;
  }
  std::ostringstream csv;
  io::write_csv(csv, rows);
  r.csv = csv.str();
  return r;
}

Report run_decompose(const Options& o) {
  const MonomialIdeal ideal = load_ideal(o);
  const auto components = irreducible_decomposition(ideal);
  const PrimeDecomposition primes = minimal_primes(ideal);
  Report r;
  r.doc = io::to_json(primes, *ideal.context());
  r.doc["verb"] = "decompose";
  r.doc["input"] = io::to_json(ideal);
  r.doc["irreducible_components"] = io::to_json(components);
  r.table.header = {"kind", "ideal"};
  for (const auto& c : components) r.table.rows.push_back({"component", c.to_string()});
  for (const auto& p : primes.minimal_primes) {
    r.table.rows.push_back({"minimal_prime", p.to_string(*ideal.context())});
  }
  r.table.rows.push_back({"big_height", std::to_string(primes.big_height)});
  return r;
}

Report run_colon(const Options& o) {
  const MonomialIdeal ideal = load_ideal(o);
  if (o.monomial.empty() == o.other.empty()) throw UsageError("give exactly one of --monomial, --other");
  if (!o.monomial.empty()) {
    const Monomial m = parse_monomial(ideal.context(), o.monomial);
    return ideal_report("colon", json{{"monomial", m.to_string()}}, ideal, colon(ideal, m));
  }
  const MonomialIdeal other = read_ideal_source(o.other, "--other");
  return ideal_report("colon", json{{"other", io::to_json(other)}}, ideal, colon_ideal(ideal, other));
}

Report run_contains(const CLI::App& sub, const Options& o) {
  const MonomialIdeal ideal = load_ideal(o);
  if (!o.other.empty()) {
    if (sub.count("--a") || sub.count("--b")) throw UsageError("--other cannot be combined with --a/--b");
    const MonomialIdeal other = read_ideal_source(o.other, "--other");
    return verdict_report("contains", json{{"other", io::to_json(other)}}, check_containment(other, ideal));
  }
  if (!sub.count("--a") || !sub.count("--b")) throw UsageError("contains needs --a and --b, or --other");
  const ContainmentReport c = contains_symbolic_in_power(ideal, o.a, o.b);
  Report r;
  r.doc = io::to_json(c);
  r.doc["verb"] = "contains";
  r.table.header = {"a", "b", "holds", "counterexample"};
  r.table.rows.push_back({std::to_string(c.a), std::to_string(c.b), yes_no(c.holds), opt_string(c.counterexample)});
  r.negative = !c.holds;
  return r;
}

Report run_sweep(const Options& o, unsigned threads) {
  const MonomialIdeal ideal = load_ideal(o);
  if (o.n_max == 0) throw UsageError("--n-max must be positive");
  const auto rows = harbourne_sweep(ideal, o.n_max, threads);
  return containment_rows_report("sweep", json{{"n_max", o.n_max}, {"input", io::to_json(ideal)}}, rows);
}

Report run_fedder(const CLI::App& sub, const Options& o, unsigned threads) {
  const MonomialIdeal ideal = load_ideal(o);
  std::vector<CriterionReport> rows;
  if (sub.count("--p") && !sub.count("--e") && !sub.count("--q")) {
    if (!o.allow_any_q && !is_prime(o.p)) {
      throw UsageError("p = " + std::to_string(o.p) + " is not prime (use --allow-any-q to override)");
    }
    if (o.e_max == 0) throw UsageError("--e-max must be positive");
    rows = fedder_scan(ideal, o.p, o.e_max, threads);
  } else {
    rows.push_back(fedder_check(ideal, resolve_q(sub, o)));
  }
  return criterion_report("fedder", json{{"input", io::to_json(ideal)}}, rows);
}

Report run_glassbrenner(const CLI::App& sub, const Options& o) {
  const MonomialIdeal ideal = load_ideal(o);
  if (o.c.empty()) throw UsageError("glassbrenner needs --c");
  const Monomial c = parse_monomial(ideal.context(), o.c);
  const unsigned q = resolve_q(sub, o);
  return criterion_report("glassbrenner", json{{"input", io::to_json(ideal)}},
                          {glassbrenner_check(ideal, c, q)});
}

Report run_lemma(const CLI::App& sub, const Options& o) {
  const MonomialIdeal ideal = load_ideal(o);
  json params{{"lemma", o.lemma}};
  if (o.lemma == "inclusion") {
    params["t"] = o.t;
    params["k"] = o.k;
    return verdict_report("lemma-check", params, lemma_inclusion_check(ideal.generators(), o.t, o.k));
  }
  if (o.lemma == "sfr-step") {
    params["d"] = o.d;
    return verdict_report("lemma-check", params, sfr_step_check(ideal, o.d));
  }
  if (o.lemma == "fpure-key" && !sub.count("--q") && !sub.count("--p")) {
    const auto h = squarefree_primes(ideal).big_height;
    const auto q = smallest_prime_power_at_least(fpure_key_threshold(h, o.n));
    if (q > kMaxFrobeniusQ) throw UsageError("smallest admissible q exceeds " + std::to_string(kMaxFrobeniusQ));
    params["n"] = o.n;
    params["q"] = q;
    return verdict_report("lemma-check", params, lemma_fpure_key_check(ideal, o.n, static_cast<unsigned>(q)));
  }
  const unsigned q = resolve_q(sub, o);
  params["q"] = q;
  if (o.lemma == "qcomparison") {
    params["k"] = o.k;
    return verdict_report("lemma-check", params, lemma_qcomparison_check(ideal, o.k, q));
  }
  if (o.lemma == "fpure-key") {
    params["n"] = o.n;
    return verdict_report("lemma-check", params, lemma_fpure_key_check(ideal, o.n, q));
  }
  params["d"] = o.d;
  return verdict_report("lemma-check", params, lemma_sfr_key_check(ideal, o.d, q));
}

Report run_star(const CLI::App& sub, const Options& o) {
  const MonomialIdeal ideal = star_configuration(o.v, o.h);
  if (!sub.count("--n")) return ideal_report("star", json{{"v", o.v}, {"h", o.h}}, ideal, ideal);
  if (o.h < 2 || o.n < 2) throw UsageError("sharpness needs h >= 2 and n >= 2");
  const unsigned a = o.h * o.n - o.h;
  const std::vector<ContainmentReport> rows{contains_symbolic_in_power(ideal, a, o.n),
                                            contains_symbolic_in_power(ideal, a + 1, o.n)};
  Report r;
  r.doc = json{{"verb", "star"}, {"v", o.v}, {"h", o.h}, {"n", o.n}, {"input", io::to_json(ideal)}};
  r.doc["sharp"] = !rows[0].holds && rows[1].holds;
  r.doc["rows"] = json::array();
  r.table.header = {"a", "b", "holds", "counterexample"};
  for (const auto& row : rows) {
    r.doc["rows"].push_back(io::to_json(row));
    r.table.rows.push_back({std::to_string(row.a), std::to_string(row.b), yes_no(row.holds),
                            opt_string(row.counterexample)});
  }
  r.negative = !r.doc["sharp"].get<bool>();
  return r;
}

Report run_det_sharp(const CLI::App& sub, const Options& o, unsigned threads) {
  const bool has_k = sub.count("--k") > 0;
  const bool has_k_max = sub.count("--k-max") > 0;
  if (has_k == has_k_max) throw UsageError("give exactly one of --k, --k-max");
  std::vector<unsigned> ks;
  if (has_k) {
    ks.push_back(o.k);
  } else {
    for (unsigned k = 1; k <= o.k_max; ++k) ks.push_back(k);
  }
  if (ks.empty() || ks.front() == 0) throw UsageError("k must be positive");
  std::optional<unsigned> bound;
  if (sub.count("--search-bound")) bound = o.search_bound;
  const auto rows = parallel_map(ks.size(), threads, [&](std::size_t i) {
    return det::sharp_containment(o.n, o.t, ks[i], bound);
  });
  Report r;
  r.doc = json{{"verb", "det-sharp"}, {"rows", json::array()}};
  r.table.header = {"n", "t", "k", "sharp_m", "formula_m", "matches_formula", "witness"};
  for (const auto& row : rows) {
    r.doc["rows"].push_back(io::to_json(row));
    r.table.rows.push_back({std::to_string(row.n), std::to_string(row.t), std::to_string(row.k),
                            std::to_string(row.sharp_m), std::to_string(row.formula_m),
                            yes_no(row.matches_formula()), row.witness ? row.witness->to_string() : ""});
    if (!row.matches_formula()) r.negative = true;
  }
  return r;
}

Report run_bound(const CLI::App& sub, const Options& o) {
  if (sub.count("--k") && o.k == 0) throw UsageError("--k must be positive");
  std::vector<Regime> regimes;
  if (o.regime.empty()) {
    regimes = {Regime::ELS, Regime::FPURE, Regime::SFR, Regime::EQUALITY, Regime::LICCI};
  } else if (const auto parsed = parse_regime(o.regime)) {
    regimes.push_back(*parsed);
  } else {
    throw UsageError("unknown regime '" + o.regime + "'");
  }
  Report r;
  r.doc = json{{"verb", "bound"}, {"rows", json::array()}};
  r.table.header = {"regime", "h", "b", "k", "a"};
  for (Regime regime : regimes) {
    if (o.regime.empty() && regime == Regime::SFR && o.h < 2) continue;
    const BoundQuery query{regime, o.h, o.b, o.k == 0 ? 1u : o.k};
    const std::uint64_t a = bound(query);
    const std::string name(regime_name(regime));
    r.doc["rows"].push_back(json{{"regime", name}, {"h", query.h}, {"b", query.b}, {"k", query.k}, {"a", a}});
    r.table.rows.push_back({name, std::to_string(query.h), std::to_string(query.b),
                            std::to_string(query.k), std::to_string(a)});
  }
  return r;
}

void add_input(CLI::App* sub, Options& o) {
  sub->add_option("--ideal", o.ideal, "Ideal as a JSON file path or inline JSON");
  sub->add_option("--vars", o.vars, "Comma-separated variable names for --gens");
  sub->add_option("--gens", o.gens, "Comma-separated generators, e.g. \"x*y, x*z\"");
  sub->add_option("--star", o.star, "Star configuration V H")->expected(2);
}

void add_output(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  sub->add_option("--out", o.out_path, "Write the report to this file");
  sub->add_flag("--assert", o.assert_results, "Exit 1 when the mathematical result is negative");
}

void add_q(CLI::App* sub, Options& o) {
  sub->add_option("--p", o.p, "Characteristic");
  sub->add_option("--e", o.e, "Frobenius exponent, q = p^e");
  sub->add_option("--q", o.q, "q directly");
  sub->add_flag("--allow-any-q", o.allow_any_q, "Accept q that is not a prime power");
}

}  // namespace

unsigned thread_budget() {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SYMB_THREADS")) {
    char* end = nullptr;
    const unsigned long cap = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) threads = std::min<unsigned long>(threads, cap);
  }
  return threads;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Symbolic and ordinary powers of monomial ideals", "symbpow"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  auto* decompose = app.add_subcommand("decompose", "Irreducible components and minimal primes");
  auto* symb_pow = app.add_subcommand("symb-pow", "Symbolic power of a squarefree ideal");
  auto* pow_cmd = app.add_subcommand("pow", "Ordinary power");
  auto* bracket = app.add_subcommand("bracket-pow", "Frobenius bracket power");
  auto* colon_cmd = app.add_subcommand("colon", "Colon by a monomial or an ideal");
  auto* contains = app.add_subcommand("contains", "Test I^(a) in I^b, or --other in I");
  auto* sweep = app.add_subcommand("sweep", "Harbourne sweep over n = 1..n-max");
  auto* fedder = app.add_subcommand("fedder", "Fedder F-purity criterion");
  auto* glass = app.add_subcommand("glassbrenner", "Glassbrenner criterion with multiplier c");
  auto* lemma = app.add_subcommand("lemma-check", "Check one of the supporting containments");
  auto* star = app.add_subcommand("star", "Star configuration ideal and sharpness");
  auto* det_sharp = app.add_subcommand("det-sharp", "Sharp containment for determinantal ideals");
  auto* bound_cmd = app.add_subcommand("bound", "Symbolic power needed for containment in I^b");

  for (auto* sub : {decompose, symb_pow, pow_cmd, bracket, colon_cmd, contains, sweep, fedder, glass, lemma}) {
    add_input(sub, o);
  }
  for (auto* sub : app.get_subcommands({})) add_output(sub, o);
  for (auto* sub : {bracket, fedder, glass, lemma}) add_q(sub, o);

  symb_pow->add_option("--n", o.n, "Exponent")->required();
  pow_cmd->add_option("--n", o.n, "Exponent")->required();
  colon_cmd->add_option("--monomial", o.monomial, "Monomial divisor");
  colon_cmd->add_option("--other", o.other, "Divisor ideal as path or inline JSON");
  contains->add_option("--a", o.a, "Symbolic exponent");
  contains->add_option("--b", o.b, "Ordinary exponent");
  contains->add_option("--other", o.other, "Ideal to test for containment");
  sweep->add_option("--n-max", o.n_max, "Largest n");
  fedder->add_option("--e-max", o.e_max, "Largest e when scanning with --p alone");
  glass->add_option("--c", o.c, "Multiplier monomial");
  lemma->add_option("--lemma", o.lemma, "Which containment")
      ->required()
      ->check(CLI::IsMember({"inclusion", "qcomparison", "fpure-key", "sfr-key", "sfr-step"}));
  lemma->add_option("--t", o.t, "t");
  lemma->add_option("--k", o.k, "k");
  lemma->add_option("--n", o.n, "n");
  lemma->add_option("--d", o.d, "d");
  star->add_option("--v", o.v, "Number of variables")->required();
  star->add_option("--h", o.h, "Codimension")->required();
  star->add_option("--n", o.n, "Check sharpness of I^(hn-h) in I^n");
  det_sharp->add_option("--n", o.n, "Matrix size")->required();
  det_sharp->add_option("--t", o.t, "Minor size")->required();
  det_sharp->add_option("--k", o.k, "Symbolic exponent");
  det_sharp->add_option("--k-max", o.k_max, "Rows for k = 1..k-max");
  det_sharp->add_option("--search-bound", o.search_bound, "Longest product of minors searched");
  bound_cmd->add_option("--regime", o.regime, "ELS, FPURE, SFR, EQUALITY or LICCI (default: all)");
  bound_cmd->add_option("--h", o.h, "Big height")->required();
  bound_cmd->add_option("--b", o.b, "Ordinary exponent")->required();
  bound_cmd->add_option("--k", o.k, "Equality index k");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const unsigned threads = thread_budget();
  CLI::App* sub = app.get_subcommands().front();
  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    if (sub == decompose) {
      report = run_decompose(o);
    } else if (sub == symb_pow) {
      const MonomialIdeal ideal = load_ideal(o);
      report = ideal_report("symb-pow", json{{"n", o.n}}, ideal, symbolic_power(ideal, o.n));
    } else if (sub == pow_cmd) {
      const MonomialIdeal ideal = load_ideal(o);
      report = ideal_report("pow", json{{"n", o.n}}, ideal, power(ideal, o.n));
    } else if (sub == bracket) {
      const MonomialIdeal ideal = load_ideal(o);
      const unsigned q = resolve_q(*sub, o);
      report = ideal_report("bracket-pow", json{{"q", q}}, ideal, bracket_power(ideal, q));
    } else if (sub == colon_cmd) {
      report = run_colon(o);
    } else if (sub == contains) {
      report = run_contains(*sub, o);
    } else if (sub == sweep) {
      report = run_sweep(o, threads);
    } else if (sub == fedder) {
      report = run_fedder(*sub, o, threads);
    } else if (sub == glass) {
      report = run_glassbrenner(*sub, o);
    } else if (sub == lemma) {
      report = run_lemma(*sub, o);
    } else if (sub == star) {
      report = run_star(*sub, o);
    } else if (sub == det_sharp) {
      report = run_det_sharp(*sub, o, threads);
    } else {
      report = run_bound(*sub, o);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ContextMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "computation error: " << e.what() << '\n';
    return kComputation;
  } catch (const std::bad_alloc&) {
    err << "computation error: out of memory\n";
    return kComputation;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);

  std::ostringstream text;
  if (o.format == "json") {
    text << report.doc.dump(2) << '\n';
  } else if (o.format == "csv") {
    if (report.csv) {
      text << *report.csv;
    } else {
      write_csv_table(text, report.table);
    }
  } else {
    write_table(text, report.table);
  }

  if (o.out_path.empty()) {
    out << text.str();
  } else {
    std::ofstream file(o.out_path);
    if (!(file << text.str())) {
      err << "error: cannot write '" << o.out_path << "'\n";
      return kUsage;
    }
  }
  err << sub->get_name() << ": " << report.table.rows.size() << " rows in " << elapsed.count() << " ms\n";
  return report.negative && o.assert_results ? kAssertFailed : kOk;
}

}  // namespace symbpow::cli
