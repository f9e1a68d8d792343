#include "germ/cli/germ_file.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "germ/poly/parse.hpp"

namespace germ {

GermFileError::GermFileError(const std::string& message, std::size_t line, std::size_t column)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      message_(message),
      line_(line),
      column_(column) {}

namespace {

struct Entry {
  std::string key;
  std::string value;
  std::size_t line = 0;
  /// 1-based column of value[0].
  std::size_t column = 0;
};

std::size_t skip_space(std::string_view s, std::size_t pos) {
  while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r')) ++pos;
  return pos;
}

std::string_view trim_right(std::string_view s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<Entry> split_entries(std::string_view text) {
  std::vector<Entry> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim_right(line);
    std::size_t k = skip_space(line, 0);
    if (k < line.size()) {
      std::size_t colon = line.find(':', k);
      if (colon == std::string_view::npos) throw GermFileError("expected 'key: value'", line_no, k + 1);
      std::string_view key = trim_right(line.substr(k, colon - k));
      if (key.empty()) throw GermFileError("missing key before ':'", line_no, k + 1);
      std::size_t v = skip_space(line, colon + 1);
      out.push_back({std::string(key), std::string(line.substr(v)), line_no, v + 1});
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::vector<std::string> words(const Entry& e) {
  std::vector<std::string> out;
  std::istringstream in(e.value);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

// Polynomial list at `offset` within the entry's value.
std::vector<Polynomial> parse_list_at(const Entry& e, std::string_view text, std::size_t offset, const Variables& vars,
                                      bool complex_mode) {
  try {
    return parse_polynomial_list(text, vars, complex_mode);
  } catch (const ParseError& err) {
    std::string msg = err.what();
    if (auto at = msg.rfind(" at column "); at != std::string::npos) msg = msg.substr(0, at);
    throw GermFileError(msg, e.line, e.column + offset + err.column() - 1);
  } catch (const Error& err) {
    throw GermFileError(err.what(), e.line, e.column + offset);
  }
}

StratumSpec parse_stratum(const Entry& e, const Variables& vars, bool complex_mode) {
  StratumSpec s;
  bool closure_seen = false;
  std::size_t pos = 0;
  const std::string& v = e.value;
  while (pos <= v.size()) {
    std::size_t semi = v.find(';', pos);
    if (semi == std::string::npos) semi = v.size();
    std::size_t k = skip_space(v, pos);
    if (k < semi) {
      std::size_t eq = v.find('=', k);
      if (eq == std::string::npos || eq > semi) {
        throw GermFileError("expected 'closure = ...' or 'exclude = ...'", e.line, e.column + k);
      }
      std::string key(trim_right(std::string_view(v).substr(k, eq - k)));
      std::size_t body = skip_space(v, eq + 1);
      std::string_view list = trim_right(std::string_view(v).substr(body, semi - body));
      auto polys = parse_list_at(e, list, body, vars, complex_mode);
      if (key == "closure") {
        if (closure_seen) throw GermFileError("closure given twice", e.line, e.column + k);
        closure_seen = true;
        s.closure = std::move(polys);
      } else if (key == "exclude") {
        if (polys.empty()) throw GermFileError("empty exclude", e.line, e.column + k);
        s.excluded.push_back(std::move(polys));
      } else {
        throw GermFileError("unknown stratum clause '" + key + "'", e.line, e.column + k);
      }
    }
    if (semi == v.size()) break;
    pos = semi + 1;
  }
  return s;
}

const std::set<std::string> kNumericKeys = {"seed",  "starts",     "tolerance", "max_iterations", "tau",
                                            "directions", "radius_ladder", "target_ladder", "policy"};

template <class T>
T parse_number(const std::string& s, const std::string& key) {
  T value{};
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) throw Error("numeric." + key + ": not a number: '" + s + "'");
  return value;
}

std::vector<double> parse_ladder(const std::string& s, const std::string& key) {
  std::istringstream in(s);
  std::string first;
  in >> first;
  if (first == "geometric") {
    std::string a, r, k;
    in >> a >> r >> k;
    return NumericConfig::geometric(parse_number<double>(a, key), parse_number<double>(r, key),
                                    parse_number<int>(k, key));
  }
  std::vector<double> out;
  std::string item;
  std::istringstream list(s);
  while (std::getline(list, item, ',')) {
    std::istringstream w(item);
    std::string token;
    w >> token;
    out.push_back(parse_number<double>(token, key));
  }
  return out;
}

void apply_numeric(NumericConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "seed") {
    cfg.seed = parse_number<std::uint64_t>(value, key);
  } else if (key == "starts") {
    cfg.starts = parse_number<int>(value, key);
  } else if (key == "tolerance") {
    cfg.tolerance = parse_number<double>(value, key);
  } else if (key == "max_iterations") {
    cfg.max_iterations = parse_number<int>(value, key);
  } else if (key == "tau") {
    cfg.tau = parse_number<double>(value, key);
  } else if (key == "directions") {
    cfg.directions = parse_number<int>(value, key);
  } else if (key == "radius_ladder") {
    cfg.radius_ladder = parse_ladder(value, key);
  } else if (key == "target_ladder") {
    cfg.target_ladder = parse_ladder(value, key);
  } else if (key == "policy") {
    if (value == "serial") {
      cfg.policy = ExecutionPolicy::Serial;
    } else if (value == "parallel") {
      cfg.policy = ExecutionPolicy::Parallel;
    } else {
      throw Error("numeric.policy must be serial or parallel");
    }
  } else {
    throw Error("unknown numeric key '" + key + "'");
  }
}

const std::set<std::string> kProvenances = {"symbolic", "empirical", "indeterminate"};

std::string list_string(const std::vector<Polynomial>& polys) {
  std::string out;
  for (std::size_t i = 0; i < polys.size(); ++i) out += (i ? ", " : "") + polys[i].to_string();
  return out;
}

std::string words_string(const std::vector<std::string>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? " " : "") + w[i];
  return out;
}

}  // namespace

MapGerm GermSpec::germ() const {
  return MapGerm::make(name, field, kind, Variables(vars), components, targets, real_vars);
}

Variables GermSpec::strata_vars() const {
  if (kind != GermKind::Fbarg) return Variables(vars);
  return realify(germ()).real_vars;
}

GermSpec parse_germ_file(std::string_view text) {
  std::vector<Entry> entries = split_entries(text);
  GermSpec spec;
  std::map<std::string, const Entry*> single;
  std::vector<const Entry*> strata;
  std::vector<const Entry*> expects;
  for (const auto& e : entries) {
    if (e.key == "stratum") {
      strata.push_back(&e);
    } else if (e.key.rfind("expect.", 0) == 0) {
      expects.push_back(&e);
    } else if (e.key.rfind("numeric.", 0) == 0) {
      std::string k = e.key.substr(8);
      if (!kNumericKeys.count(k)) throw GermFileError("unknown numeric key '" + k + "'", e.line, 1);
      if (spec.numeric.count(k)) throw GermFileError("duplicate key '" + e.key + "'", e.line, 1);
      spec.numeric[k] = e.value;
      NumericConfig probe;
      try {
        apply_numeric(probe, k, e.value);
      } catch (const Error& err) {
        throw GermFileError(err.what(), e.line, e.column);
      }
    } else {
      static const std::set<std::string> known = {"name", "field", "vars", "kind", "f", "g", "map", "targets",
                                                  "realvars"};
      if (!known.count(e.key)) throw GermFileError("unknown key '" + e.key + "'", e.line, 1);
      if (single.count(e.key)) throw GermFileError("duplicate key '" + e.key + "'", e.line, 1);
      single[e.key] = &e;
    }
  }
  auto require = [&](const std::string& key) -> const Entry& {
    auto it = single.find(key);
    if (it == single.end()) {
      throw GermFileError("missing '" + key + ":'", entries.empty() ? 1 : entries.back().line + 1, 1);
    }
    return *it->second;
  };
  spec.name = single.count("name") ? single["name"]->value : "unnamed";
  const Entry& field = require("field");
  if (field.value == "R") {
    spec.field = Field::Real;
  } else if (field.value == "C") {
    spec.field = Field::Complex;
  } else {
    throw GermFileError("field must be R or C", field.line, field.column);
  }
  if (single.count("kind")) {
    const Entry& k = *single["kind"];
    if (k.value == "general") {
      spec.kind = GermKind::General;
    } else if (k.value == "pair") {
      spec.kind = GermKind::Pair;
    } else if (k.value == "fbarg") {
      spec.kind = GermKind::Fbarg;
    } else {
      throw GermFileError("kind must be general, pair or fbarg", k.line, k.column);
    }
  }
  const Entry& vars_entry = require("vars");
  spec.vars = words(vars_entry);
  if (spec.vars.empty()) throw GermFileError("no variables", vars_entry.line, vars_entry.column);
  Variables vars;
  try {
    vars = Variables(spec.vars);
  } catch (const Error& err) {
    throw GermFileError(err.what(), vars_entry.line, vars_entry.column);
  }
  if (single.count("targets")) spec.targets = words(*single["targets"]);
  if (single.count("realvars")) spec.real_vars = words(*single["realvars"]);
  const bool complex_mode = spec.field == Field::Complex;
  const Entry* component_entry = nullptr;
  if (spec.kind == GermKind::General) {
    if (single.count("f") || single.count("g")) {
      const Entry& e = single.count("f") ? *single["f"] : *single["g"];
      throw GermFileError("f: and g: need kind pair or fbarg", e.line, 1);
    }
    const Entry& m = require("map");
    component_entry = &m;
    spec.components = parse_list_at(m, m.value, 0, vars, complex_mode);
    if (spec.components.empty()) throw GermFileError("empty map", m.line, m.column);
  } else {
    if (single.count("map")) throw GermFileError("kind pair and fbarg use f: and g:", single["map"]->line, 1);
    for (const char* key : {"f", "g"}) {
      const Entry& e = require(key);
      component_entry = &e;
      auto polys = parse_list_at(e, e.value, 0, vars, complex_mode);
      if (polys.size() != 1) throw GermFileError(std::string(key) + ": needs exactly one polynomial", e.line, e.column);
      if (!polys[0].constant_term().is_zero()) {
        throw GermFileError("component does not vanish at origin (not a map germ through the origin)", e.line,
                            e.column);
      }
      spec.components.push_back(polys[0]);
    }
  }
  for (const auto& c : spec.components) {
    if (!c.constant_term().is_zero()) {
      throw GermFileError("component does not vanish at origin (not a map germ through the origin)",
                          component_entry->line, component_entry->column);
    }
  }
  MapGerm germ;
  try {
    germ = spec.germ();
  } catch (const Error& err) {
    throw GermFileError(err.what(), component_entry->line, component_entry->column);
  }
  if (!strata.empty()) {
    Variables svars = spec.strata_vars();
    const bool strata_complex = complex_mode && spec.kind != GermKind::Fbarg;
    for (const auto* e : strata) spec.strata.push_back(parse_stratum(*e, svars, strata_complex));
  }
  Variables target_ring = germ.target_ring();
  if (spec.kind == GermKind::Fbarg) {
    target_ring = MapGerm::make(spec.name, Field::Complex, GermKind::Pair, germ.source, germ.components).target_ring();
  }
  for (const auto* e : expects) {
    std::string field_name = e->key.substr(7);
    if (field_name == "disc") {
      std::vector<std::vector<Polynomial>> comps;
      std::size_t pos = 0;
      const std::string& v = e->value;
      while (pos <= v.size()) {
        std::size_t bar = v.find('|', pos);
        if (bar == std::string::npos) bar = v.size();
        std::size_t b = skip_space(v, pos);
        comps.push_back(parse_list_at(*e, trim_right(std::string_view(v).substr(b, bar - b)), b, target_ring, complex_mode));
        if (bar == v.size()) break;
        pos = bar + 1;
      }
      spec.expect_disc = std::move(comps);
      continue;
    }
    Expectation x;
    auto slash = e->value.find('/');
    x.value = e->value.substr(0, slash);
    if (slash != std::string::npos) {
      x.provenance = e->value.substr(slash + 1);
      if (!kProvenances.count(*x.provenance)) {
        throw GermFileError("unknown provenance '" + *x.provenance + "'", e->line, e->column + slash + 1);
      }
    }
    if (spec.expect.count(field_name)) throw GermFileError("duplicate key '" + e->key + "'", e->line, 1);
    spec.expect[field_name] = x;
  }
  return spec;
}

GermSpec load_germ_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_germ_file(buf.str());
  } catch (const GermFileError& e) {
    throw Error(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.message());
  }
}

std::string render_germ_file(const GermSpec& spec) {
  std::ostringstream out;
  out << "name: " << spec.name << "\n";
  out << "field: " << to_string(spec.field) << "\n";
  out << "kind: " << to_string(spec.kind) << "\n";
  out << "vars: " << words_string(spec.vars) << "\n";
  if (!spec.targets.empty()) out << "targets: " << words_string(spec.targets) << "\n";
  if (!spec.real_vars.empty()) out << "realvars: " << words_string(spec.real_vars) << "\n";
  if (spec.kind == GermKind::General) {
    out << "map: " << list_string(spec.components) << "\n";
  } else {
    out << "f: " << spec.components[0].to_string() << "\n";
    out << "g: " << spec.components[1].to_string() << "\n";
  }
  for (const auto& s : spec.strata) {
    out << "stratum: closure = " << list_string(s.closure);
    for (const auto& e : s.excluded) out << "; exclude = " << list_string(e);
    out << "\n";
  }
  for (const auto& [k, v] : spec.numeric) out << "numeric." << k << ": " << v << "\n";
  for (const auto& [k, x] : spec.expect) {
    out << "expect." << k << ": " << x.value;
    if (x.provenance) out << "/" << *x.provenance;
    out << "\n";
  }
  if (spec.expect_disc) {
    out << "expect.disc: ";
    for (std::size_t i = 0; i < spec.expect_disc->size(); ++i) {
      out << (i ? " | " : "") << list_string((*spec.expect_disc)[i]);
    }
    out << "\n";
  }
  return out.str();
}

bool same_spec(const GermSpec& a, const GermSpec& b) {
  auto same_exp = [](const std::map<std::string, Expectation>& x, const std::map<std::string, Expectation>& y) {
    if (x.size() != y.size()) return false;
    for (const auto& [k, v] : x) {
      auto it = y.find(k);
      if (it == y.end() || it->second.value != v.value || it->second.provenance != v.provenance) return false;
    }
    return true;
  };
  if (a.name != b.name || a.field != b.field || a.kind != b.kind || a.vars != b.vars || a.targets != b.targets ||
      a.real_vars != b.real_vars || a.components != b.components || a.numeric != b.numeric ||
      !same_exp(a.expect, b.expect) || a.expect_disc != b.expect_disc || a.strata.size() != b.strata.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.strata.size(); ++i) {
    if (a.strata[i].closure != b.strata[i].closure || a.strata[i].excluded != b.strata[i].excluded) return false;
  }
  return true;
}

NumericConfig numeric_config(const GermSpec& spec, NumericConfig base) {
  for (const auto& [k, v] : spec.numeric) apply_numeric(base, k, v);
  base.validate();
  return base;
}

std::optional<Stratification> stratification(const GermSpec& spec, std::uint64_t seed) {
  if (spec.strata.empty()) return std::nullopt;
  MapGerm g = spec.germ();
  Variables vars = spec.strata_vars();
  std::vector<Polynomial> comps = g.kind == GermKind::Fbarg ? realify(g).components : g.components;
  const bool allow_complex = g.field == Field::Complex && g.kind != GermKind::Fbarg;
  std::mt19937_64 rng(seed);
  Stratification out;
  out.provenance = Stratification::Provenance::UserSupplied;
  for (const auto& s : spec.strata) {
    Stratum st;
    st.closure = Ideal(vars, s.closure);
    for (const auto& e : s.excluded) st.excluded.push_back(Ideal(vars, e));
    st.label = "stratum " + (st.closure.is_zero() ? std::string("open") : st.closure.to_string());
    for (const auto& e : st.excluded) st.label += " minus " + e.to_string();
    st.generic_rank = generic_rank(comps, st, rng, allow_complex);
    out.strata.push_back(std::move(st));
  }
  return out;
}

}  // namespace germ
