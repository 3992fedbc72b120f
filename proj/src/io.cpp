#include "hipp/io.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "hipp/init.hpp"

namespace hipp {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

bool is_separator(char c, bool foreign) {
  if (c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f') return true;
  return foreign && (c == ',' || c == ';');
}

// Non-blank lines with comments stripped, split into tokens.
std::vector<Line> tokenize(std::string_view text, bool foreign = false) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(pos, end - pos);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    Line parsed{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_separator(line[i], foreign)) ++i;
      const std::size_t start = i;
      while (i < line.size() && !is_separator(line[i], foreign)) ++i;
      if (i > start) parsed.tokens.push_back({line.substr(start, i - start), start + 1});
    }
    if (!parsed.tokens.empty()) out.push_back(std::move(parsed));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

bool is_unsigned(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

bool is_genotype_symbol(std::string_view s) {
  return s.size() == 1 && (s[0] == '0' || s[0] == '1' || s[0] == '2');
}

std::size_t to_size(std::string_view s, std::size_t line, std::size_t column) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("bad number '" + std::string(s) + "'", line, column);
  return value;
}

// Sites of a data row, validated symbol by symbol.
std::string row_symbols(const Line& line) {
  std::string row;
  if (line.tokens.size() == 1) {
    const Token& t = line.tokens[0];
    for (std::size_t i = 0; i < t.text.size(); ++i) {
      if (!is_genotype_symbol(t.text.substr(i, 1)))
        throw ParseError("bad genotype symbol '" + std::string(1, t.text[i]) + "'", line.number,
                         t.column + i);
      row.push_back(t.text[i]);
    }
    return row;
  }
  for (const Token& t : line.tokens) {
    if (!is_genotype_symbol(t.text)) {
      std::size_t off = 0;
      while (off < t.text.size() && is_genotype_symbol(t.text.substr(off, 1))) ++off;
      throw ParseError("bad genotype symbol '" + std::string(t.text) + "'", line.number,
                       t.column + (off < t.text.size() ? off : 0));
    }
    row.push_back(t.text[0]);
  }
  return row;
}

std::size_t row_length(const Line& line) {
  return line.tokens.size() == 1 ? line.tokens[0].text.size() : line.tokens.size();
}

Instance build_instance(const std::vector<Line>& lines, std::size_t first) {
  std::vector<Genotype> genotypes;
  std::size_t m = 0;
  for (std::size_t r = first; r < lines.size(); ++r) {
    const std::string row = row_symbols(lines[r]);
    if (genotypes.empty()) {
      m = row.size();
    } else if (row.size() != m) {
      throw ParseError("inconsistent number of sites: expected " + std::to_string(m) + ", found " +
                           std::to_string(row.size()),
                       lines[r].number, 1);
    }
    genotypes.push_back(Genotype::from_string(row));
  }
  if (genotypes.empty())
    throw ParseError("instance has no genotypes", lines.empty() ? 1 : lines.back().number, 0);
  return Instance(std::move(genotypes));
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError("instance has no genotypes", 1, 0);

  // A first line of two numbers is a header unless both are genotype symbols
  // and the remaining rows do not match them.
  const Line& head = lines[0];
  bool header = false;
  std::size_t hn = 0, hm = 0;
  if (head.tokens.size() == 2 && is_unsigned(head.tokens[0].text) &&
      is_unsigned(head.tokens[1].text)) {
    hn = to_size(head.tokens[0].text, head.number, head.tokens[0].column);
    hm = to_size(head.tokens[1].text, head.number, head.tokens[1].column);
    if (!is_genotype_symbol(head.tokens[0].text) || !is_genotype_symbol(head.tokens[1].text)) {
      header = true;
    } else {
      header = lines.size() - 1 == hn;
      for (std::size_t r = 1; header && r < lines.size(); ++r)
        header = row_length(lines[r]) == hm;
    }
  }
  if (!header) return build_instance(lines, 0);

  if (hn == 0) throw ParseError("header declares n = 0 genotypes", head.number, 1);
  if (hm == 0) throw ParseError("header declares m = 0 sites", head.number, head.tokens[1].column);
  Instance instance = build_instance(lines, 1);
  if (instance.sites() != hm)
    throw ParseError("header declares m = " + std::to_string(hm) + " but rows have " +
                         std::to_string(instance.sites()) + " sites",
                     head.number, head.tokens[1].column);
  if (instance.size() != hn)
    throw ParseError("header declares n = " + std::to_string(hn) + " but " +
                         std::to_string(instance.size()) + " genotypes follow",
                     head.number, head.tokens[0].column);
  return instance;
}

std::string serialize_instance(const Instance& instance) {
  std::string out = std::to_string(instance.size()) + " " + std::to_string(instance.sites()) + "\n";
  for (const Genotype& g : instance.genotypes()) out += g.to_string() + "\n";
  return out;
}

Instance import_genotypes(std::string_view text) {
  const std::vector<Line> lines = tokenize(text, true);
  if (lines.empty()) throw ParseError("table has no rows", 1, 0);
  const std::size_t columns = lines[0].tokens.size();
  for (const Line& line : lines)
    if (line.tokens.size() != columns)
      throw ParseError("row has " + std::to_string(line.tokens.size()) + " columns, expected " +
                           std::to_string(columns),
                       line.number, 1);
  // Columns are decided on the rows after the first; the first row is a header
  // when it has a non-genotype entry in one of those columns.
  std::vector<bool> keep(columns, true);
  for (std::size_t r = 1; r < lines.size(); ++r)
    for (std::size_t c = 0; c < columns; ++c)
      if (!is_genotype_symbol(lines[r].tokens[c].text)) keep[c] = false;
  bool header = false;
  for (std::size_t c = 0; c < columns; ++c)
    if (keep[c] && !is_genotype_symbol(lines[0].tokens[c].text)) header = true;
  if (lines.size() == 1) header = false;
  if (!header)
    for (std::size_t c = 0; c < columns; ++c)
      if (!is_genotype_symbol(lines[0].tokens[c].text)) keep[c] = false;
  std::vector<Genotype> genotypes;
  for (std::size_t r = header ? 1 : 0; r < lines.size(); ++r) {
    std::string row;
    for (std::size_t c = 0; c < columns; ++c)
      if (keep[c]) row.push_back(lines[r].tokens[c].text[0]);
    if (row.empty()) throw ParseError("no genotype columns left after import", lines[r].number, 0);
    genotypes.push_back(Genotype::from_string(row));
  }
  if (genotypes.empty()) throw ParseError("table has no data rows", lines[0].number, 0);
  return Instance(std::move(genotypes));
}

Instance generate_instance(std::size_t n, std::size_t m, std::size_t pool, Rng& rng,
                           std::size_t max_het) {
  if (n == 0) throw InputError("n must be at least 1");
  if (m == 0) throw InputError("m must be at least 1");
  if (pool < 2) throw InputError("haplotype pool size must be at least 2");
  std::vector<Haplotype> haps;
  for (std::size_t p = 0; p < pool; ++p) {
    Haplotype h(m);
    for (std::size_t j = 0; j < m; ++j) h.set(j, rng.coin());
    haps.push_back(std::move(h));
  }
  // Ordered pairs with replacement; self pairs always qualify.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < pool; ++a)
    for (std::size_t b = 0; b < pool; ++b)
      if (max_het == 0 || Genotype::from_pair(haps[a], haps[b]).het_count() <= max_het)
        pairs.emplace_back(a, b);
  std::vector<Genotype> genotypes;
  for (std::size_t i = 0; i < n; ++i) {
    const auto [a, b] = pairs[rng.below(pairs.size())];
    genotypes.push_back(Genotype::from_pair(haps[a], haps[b]));
  }
  return Instance(std::move(genotypes));
}

std::string serialize_solution(const CompleteSolution& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto [h, k] = s.pair(i);
    if (k < h) std::swap(h, k);
    out += std::to_string(i + 1) + "\t" + h.to_string() + "\t" + k.to_string() + "\n";
  }
  return out;
}

std::string serialize_solution(const IncompleteSolution& s) {
  std::string out;
  for (std::size_t i = 0; i < s.instance().size(); ++i) {
    out += std::to_string(i + 1) + "\t";
    if (const auto pair = s.resolving_pair(i))
      out += pair->first.to_string() + "\t" + pair->second.to_string() + "\n";
    else
      out += "-\t-\n";
  }
  return out;
}

CompleteSolution parse_solution(std::string_view text, const InstancePtr& instance) {
  const Instance& inst = *instance;
  std::vector<std::optional<Haplotype>> reps(inst.size());
  const auto parse_hap = [&](const Line& line, const Token& t) {
    if (t.text == "-")
      throw ParseError("genotype is unresolved; a complete solution is required", line.number,
                       t.column);
    if (t.text.size() != inst.sites())
      throw ParseError("haplotype has " + std::to_string(t.text.size()) + " sites, expected " +
                           std::to_string(inst.sites()),
                       line.number, t.column);
    for (std::size_t j = 0; j < t.text.size(); ++j)
      if (t.text[j] != '0' && t.text[j] != '1')
        throw ParseError("bad haplotype symbol '" + std::string(1, t.text[j]) + "'", line.number,
                         t.column + j);
    return Haplotype::from_string(t.text);
  };
  for (const Line& line : tokenize(text)) {
    if (line.tokens.size() != 3)
      throw ParseError("expected 'genotype-id haplotype haplotype'", line.number, 1);
    const Token& id = line.tokens[0];
    if (!is_unsigned(id.text)) throw ParseError("bad genotype id", line.number, id.column);
    const std::size_t i = to_size(id.text, line.number, id.column);
    if (i == 0 || i > inst.size())
      throw ParseError("unknown genotype id " + std::string(id.text), line.number, id.column);
    if (reps[i - 1])
      throw ParseError("genotype " + std::to_string(i) + " listed twice", line.number, id.column);
    const Haplotype h = parse_hap(line, line.tokens[1]);
    const Haplotype k = parse_hap(line, line.tokens[2]);
    const Genotype& g = inst[i - 1];
    for (std::size_t j = 0; j < g.size(); ++j) {
      const int want = g.at(j);
      const bool ok = want == 2 ? h.at(j) != k.at(j) : (h.at(j) == (want == 1) && k.at(j) == h.at(j));
      if (!ok)
        throw ParseError("pair does not resolve genotype " + std::to_string(i) + " at site " +
                             std::to_string(j + 1),
                         line.number, line.tokens[1].column);
    }
    reps[i - 1] = h;
  }
  std::vector<Haplotype> out;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (!reps[i]) throw InputError("solution lacks genotype " + std::to_string(i + 1));
    out.push_back(std::move(*reps[i]));
  }
  return CompleteSolution(instance, std::move(out));
}

std::string format_stats(const Stats& stats) {
  std::string out;
  for (const auto& [k, v] : stats) out += k + "=" + v + "\n";
  return out;
}

std::optional<std::string> stat_value(const Stats& stats, const std::string& key) {
  for (const auto& [k, v] : stats)
    if (k == key) return v;
  return std::nullopt;
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string to_string(Task task) {
  switch (task) {
    case Task::ils:
      return "ils";
    case Task::dls:
      return "dls";
    case Task::adaptive:
      return "adaptive";
    case Task::kfix:
      return "kfix";
    case Task::exact:
      return "exact";
    case Task::reduce:
      return "reduce";
  }
  return "ils";
}

Task parse_task(const std::string& name) {
  for (Task t : {Task::ils, Task::dls, Task::adaptive, Task::kfix, Task::exact, Task::reduce})
    if (to_string(t) == name) return t;
  throw InputError("unknown algorithm '" + name + "' (ils|dls|adaptive|kfix|exact|reduce)");
}

Representation RunConfig::effective_representation() const {
  if (representation) return *representation;
  return task == Task::exact || task == Task::reduce ? Representation::complete
                                                     : Representation::incomplete;
}

void RunConfig::validate() const {
  const Representation rep = effective_representation();
  if (task == Task::reduce && rep != Representation::complete)
    throw InputError("reduce requires the complete representation");
  if ((task == Task::dls || task == Task::adaptive || task == Task::kfix) &&
      rep != Representation::incomplete)
    throw InputError(to_string(task) + " requires the incomplete representation");
  if (restarts == 0) throw InputError("restarts must be at least 1");
  if (threads == 0) throw InputError("threads must be at least 1");
  SearchParams p = params;
  p.representation = rep;
  if (alpha1 || alpha2 || alpha3) {
    CostWeights w = rep == Representation::complete ? CostWeights::complete_defaults()
                                                    : CostWeights::incomplete_defaults(1);
    if (alpha1) w.alpha1 = *alpha1;
    if (alpha2) w.alpha2 = *alpha2;
    if (alpha3) w.alpha3 = *alpha3;
    p.weights = w;
  }
  p.validate();
}

namespace {

template <class T>
T parse_integer(const std::string& key, const std::string& value) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size())
    throw InputError("option " + key + ": expected a non-negative integer, got '" + value + "'");
  return out;
}

double parse_real(const std::string& key, const std::string& value) {
  double out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size() || !std::isfinite(out))
    throw InputError("option " + key + ": expected a number, got '" + value + "'");
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true" || value == "yes" || value == "on") return true;
  if (value == "0" || value == "false" || value == "no" || value == "off") return false;
  throw InputError("option " + key + ": expected true or false, got '" + value + "'");
}

std::string trim(std::string_view s) {
  const std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) return {};
  const std::size_t b = s.find_last_not_of(" \t\r");
  return std::string(s.substr(a, b - a + 1));
}

CostWeights resolve_weights(const RunConfig& config, Representation rep, std::size_t n) {
  CostWeights w = rep == Representation::complete ? CostWeights::complete_defaults()
                                                  : CostWeights::incomplete_defaults(n);
  if (config.params.weights) w = *config.params.weights;
  if (config.alpha1) w.alpha1 = *config.alpha1;
  if (config.alpha2) w.alpha2 = *config.alpha2;
  if (config.alpha3) w.alpha3 = *config.alpha3;
  return w;
}

std::string format_trace(const std::vector<TraceRow>& rows) {
  std::string out = "iter F f1 f2 f3p feasible\n";
  for (const TraceRow& r : rows)
    out += std::to_string(r.iteration) + " " + format_number(r.cost) + " " + std::to_string(r.f1) +
           " " + std::to_string(r.f2) + " " + std::to_string(r.f3_prime) + " " +
           (r.feasible ? "1" : "0") + "\n";
  return out;
}

Algorithm engine_of(Task task) {
  switch (task) {
    case Task::ils:
      return Algorithm::ils;
    case Task::dls:
      return Algorithm::dls;
    case Task::adaptive:
      return Algorithm::adaptive;
    case Task::kfix:
      return Algorithm::kfix;
    default:
      break;
  }
  throw InputError(to_string(task) + " is not a search engine");
}

}  // namespace

void set_option(RunConfig& c, const std::string& key, const std::string& value) {
  SearchParams& p = c.params;
  if (key == "algo" || key == "algorithm") c.task = parse_task(value);
  else if (key == "rep" || key == "representation") c.representation = parse_representation(value);
  else if (key == "seed") p.seed = parse_integer<std::uint64_t>(key, value);
  else if (key == "restarts") c.restarts = parse_integer<std::size_t>(key, value);
  else if (key == "threads") c.threads = parse_integer<std::size_t>(key, value);
  else if (key == "alpha1") c.alpha1 = parse_real(key, value);
  else if (key == "alpha2") c.alpha2 = parse_real(key, value);
  else if (key == "alpha3") c.alpha3 = parse_real(key, value);
  else if (key == "max-iters") p.max_iterations = parse_integer<std::uint64_t>(key, value);
  else if (key == "time-limit") p.time_limit = parse_real(key, value);
  else if (key == "init") p.initializer = parse_initializer(value);
  else if (key == "stagnation") p.stagnation = parse_integer<std::size_t>(key, value);
  else if (key == "tabu-tenure") p.tabu_tenure = parse_integer<std::size_t>(key, value);
  else if (key == "acceptance") p.acceptance = parse_acceptance(value);
  else if (key == "restart-after") p.restart_after = parse_integer<std::size_t>(key, value);
  else if (key == "perturbation") p.perturbation_moves = parse_integer<std::size_t>(key, value);
  else if (key == "candidates") p.candidate_size = parse_integer<std::size_t>(key, value);
  else if (key == "candidate-policy") p.candidate_policy = parse_candidate_policy(value);
  else if (key == "streak") p.feasible_streak = parse_integer<std::size_t>(key, value);
  else if (key == "gamma-lo") p.gamma_lo = parse_real(key, value);
  else if (key == "gamma-hi") p.gamma_hi = parse_real(key, value);
  else if (key == "w1") p.w1 = parse_real(key, value);
  else if (key == "w2") p.w2 = parse_real(key, value);
  else if (key == "adapt") p.adapt_weights = parse_bool(key, value);
  else if (key == "max-card") p.max_card = parse_integer<std::size_t>(key, value);
  else if (key == "deletion-batch") p.deletion_batch = parse_integer<std::size_t>(key, value);
  else if (key == "t0") p.t0 = parse_real(key, value);
  else if (key == "cooling") p.cooling = parse_real(key, value);
  else if (key == "t-min") p.t_min = parse_real(key, value);
  else if (key == "max-states") c.max_states = parse_integer<std::uint64_t>(key, value);
  else if (key == "policy") c.reduce_policy = parse_reduce_policy(value);
  else if (key == "timing") c.timing = parse_bool(key, value);
  else if (key == "import") c.import_input = parse_bool(key, value);
  else if (key == "in" || key == "input") c.input_path = value;
  else if (key == "out" || key == "output") c.output_path = value;
  else if (key == "stats") c.stats_path = value;
  else if (key == "solution") c.solution_path = value;
  else if (key == "log") c.log_path = value;
  else if (key == "trace") c.trace_path = value;
  else throw InputError("unknown option '" + key + "'");
}

void load_config(RunConfig& config, std::string_view text) {
  std::size_t number = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++number;
    std::string line = raw.substr(0, raw.find('#'));
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value", number, 1);
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    try {
      set_option(config, key, value);
    } catch (const InputError& e) {
      throw ParseError(e.what(), number, 1);
    }
  }
}

RunOutput execute(const RunConfig& config, const InstancePtr& instance,
                  const std::optional<std::string>& start) {
  config.validate();
  const Representation rep = config.effective_representation();
  const CostWeights w = resolve_weights(config, rep, instance->size());
  SearchParams params = config.params;
  params.representation = rep;
  params.weights = w;
  if (!config.trace_path.empty()) params.trace = true;

  RunOutput out;
  Stats& st = out.values;
  st.emplace_back("algorithm", to_string(config.task));
  st.emplace_back("seed", std::to_string(params.seed));
  st.emplace_back("n", std::to_string(instance->size()));
  st.emplace_back("m", std::to_string(instance->sites()));
  Stats extra;
  double ms = 0;
  bool feasible = true;

  if (config.task == Task::exact) {
    const auto t0 = std::chrono::steady_clock::now();
    ExactResult er = exact_min_haplotypes(instance, {config.max_states});
    ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out.solution = serialize_solution(er.witness);
    st.emplace_back("best_F", format_number(er.witness.terms().total(w)));
    st.emplace_back("best_H", std::to_string(er.optimum));
    st.emplace_back("feasible", "true");
    st.emplace_back("iterations", std::to_string(er.nodes));
    extra.emplace_back("resolution_space", std::to_string(resolution_space_size(*instance)));
  } else if (config.task == Task::reduce) {
    const auto t0 = std::chrono::steady_clock::now();
    CompleteSolution initial = start ? parse_solution(*start, instance) : greedy_clark_init(instance);
    const std::size_t initial_h = initial.distinct_count();
    ReduceResult rr = reduce(std::move(initial), config.reduce_policy);
    ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out.solution = serialize_solution(rr.solution);
    out.log = format_reduce_log(rr.log);
    st.emplace_back("best_F", format_number(rr.solution.terms().total(w)));
    st.emplace_back("best_H", std::to_string(rr.solution.distinct_count()));
    st.emplace_back("feasible", "true");
    st.emplace_back("iterations", std::to_string(rr.log.size()));
    extra.emplace_back("initial_H", std::to_string(initial_h));
    extra.emplace_back("policy", to_string(config.reduce_policy));
  } else {
    const Algorithm algo = engine_of(config.task);
    SearchReport r = config.restarts > 1 || config.threads > 1
                         ? solve_with_restarts(instance, algo, params, config.restarts,
                                               config.threads)
                         : solve(instance, algo, params);
    ms = r.wall_ms;
    feasible = r.feasible;
    out.solution = r.complete ? serialize_solution(*r.complete) : serialize_solution(*r.incomplete);
    st.emplace_back("best_F", format_number(r.best_cost));
    st.emplace_back("best_H", std::to_string(r.best_size));
    st.emplace_back("feasible", feasible ? "true" : "false");
    st.emplace_back("iterations", std::to_string(r.iterations));
    extra = r.extra;
    if (params.trace) out.trace = format_trace(r.trace);
  }
  if (config.timing) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    st.emplace_back("time_ms", buf);
  }
  st.insert(st.end(), extra.begin(), extra.end());
  out.stats = format_stats(st);
  out.exit_code = feasible ? 0 : 2;
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("error writing '" + path + "'");
}

int run(const RunConfig& config) {
  std::string where;
  try {
    config.validate();
    if (config.input_path.empty()) throw InputError("no input file given");
    where = config.input_path + ": ";
    const std::string text = read_file(config.input_path);
    auto instance = std::make_shared<const Instance>(config.import_input ? import_genotypes(text)
                                                                         : parse_instance(text));
    std::optional<std::string> start;
    if (!config.solution_path.empty()) {
      where = config.solution_path + ": ";
      start = read_file(config.solution_path);
    }
    where.clear();
    const RunOutput out = execute(config, instance, start);
    if (config.output_path.empty())
      std::cout << out.solution;
    else
      write_file(config.output_path, out.solution);
    if (config.stats_path.empty())
      std::cout << out.stats;
    else
      write_file(config.stats_path, out.stats);
    if (!config.log_path.empty()) write_file(config.log_path, out.log);
    if (!config.trace_path.empty()) write_file(config.trace_path, out.trace);
    std::cout.flush();
    return out.exit_code;
  } catch (const ParseError& e) {
    std::cerr << "error: " << where << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 1;
}

std::string run_bench(const BenchSpec& spec) {
  if (spec.tasks.empty()) throw InputError("bench needs at least one algorithm");
  std::string out = "instance\tseed\ttask\tn\tm\tbest_H\tbest_F\tfeasible\titerations\toptimum\tmatch";
  if (spec.base.timing) out += "\ttime_ms";
  out += "\n";
  for (std::size_t i = 0; i < spec.instances; ++i) {
    Rng rng(derive_seed(spec.seed, i));
    auto instance = std::make_shared<const Instance>(
        generate_instance(spec.n, spec.m, spec.pool, rng, spec.max_het));
    std::optional<std::size_t> optimum;
    if (spec.oracle) {
      try {
        optimum = exact_min_haplotypes(instance, {spec.base.max_states}).optimum;
      } catch (const CapacityError&) {
      }
    }
    for (Task task : spec.tasks) {
      RunConfig cfg = spec.base;
      cfg.task = task;
      cfg.trace_path.clear();
      const RunOutput r = execute(cfg, instance);
      const std::string best_h = *stat_value(r.values, "best_H");
      const bool feasible = *stat_value(r.values, "feasible") == "true";
      out += std::to_string(i + 1) + "\t" + std::to_string(cfg.params.seed) + "\t" +
             to_string(task) + "\t" + std::to_string(instance->size()) + "\t" +
             std::to_string(instance->sites()) + "\t" + best_h + "\t" +
             *stat_value(r.values, "best_F") + "\t" + (feasible ? "1" : "0") + "\t" +
             *stat_value(r.values, "iterations") + "\t" +
             (optimum ? std::to_string(*optimum) : "-") + "\t" +
             (optimum ? (feasible && best_h == std::to_string(*optimum) ? "1" : "0") : "-");
      if (cfg.timing) out += "\t" + *stat_value(r.values, "time_ms");
      out += "\n";
    }
  }
  return out;
}

}  // namespace hipp
