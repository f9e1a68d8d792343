#include "germ/cli/report.hpp"

#include <chrono>
#include <sstream>

namespace germ {

using nlohmann::json;

namespace {

json generators(const Ideal& ideal) {
  json out = json::array();
  for (const auto& g : ideal.generators()) out.push_back(g.to_string());
  return out;
}

std::string policy_string(ExecutionPolicy p) { return p == ExecutionPolicy::Serial ? "serial" : "parallel"; }

}  // namespace

json to_json(const NumericConfig& cfg) {
  return json{{"seed", cfg.seed},
              {"radius_ladder", cfg.radius_ladder},
              {"target_ladder", cfg.target_ladder},
              {"starts", cfg.starts},
              {"tolerance", cfg.tolerance},
              {"max_iterations", cfg.max_iterations},
              {"tau", cfg.tau},
              {"directions", cfg.directions},
              {"policy", policy_string(cfg.policy)}};
}

json to_json(const NumericCertificate& cert) {
  json witnesses = json::array();
  for (const auto& w : cert.witnesses) {
    witnesses.push_back({{"point", w.point}, {"residual", w.residual}, {"norm", w.norm}, {"label", w.label}});
  }
  json rungs = json::array();
  for (const auto& r : cert.rungs) {
    rungs.push_back({{"radius", r.radius}, {"found", r.found}, {"statistic", r.statistic}});
  }
  json traces = json::array();
  for (const auto& t : cert.traces) traces.push_back({{"direction", t.direction}, {"norms", t.norms}});
  return json{{"test", cert.test},       {"verdict", cert.verdict}, {"subject", cert.subject},
              {"witnesses", witnesses},  {"rungs", rungs},          {"traces", traces},
              {"config", to_json(cert.config)}, {"notes", cert.notes}};
}

json to_json(const Verdict& v) {
  json out{{"value", v.value}, {"provenance", to_string(v.provenance)}, {"citation", v.citation}, {"detail", v.detail}};
  if (!v.germ.empty()) out["germ"] = v.germ;
  return out;
}

std::vector<std::pair<std::string, const Verdict*>> verdict_fields(const VerdictReport& r) {
  std::vector<std::pair<std::string, const Verdict*>> out = {
      {"image_germ", &r.image_germ},
      {"sing_image_germ", &r.sing_image_germ},
      {"nmg", &r.nmg},
      {"tame", &r.tame},
      {"icis", &r.icis},
      {"fibration.tube", &r.fibration.tube},
      {"fibration.milnor_hamm", &r.fibration.milnor_hamm},
      {"fibration.thom_regular_sufficient", &r.fibration.thom_regular_sufficient},
  };
  if (r.unit_multiple) out.emplace_back("unit_multiple", &*r.unit_multiple);
  if (r.singular_values_dim) out.emplace_back("singular_values_dim", &*r.singular_values_dim);
  return out;
}

json to_json(const VerdictReport& r) {
  const MapGerm& g = r.germ;
  json components = json::array();
  for (const auto& c : g.components) components.push_back(c.to_string());
  json germ{{"name", g.name},
            {"field", to_string(g.field)},
            {"kind", to_string(g.kind)},
            {"vars", g.source.names()},
            {"components", components},
            {"targets", g.targets}};
  json verdicts = json::object();
  json provenance = json::object();
  for (const auto& [name, v] : verdict_fields(r)) {
    json jv = to_json(*v);
    if (v->provenance == Provenance::Empirical) jv["seed"] = r.numeric_config.seed;
    if (name.rfind("fibration.", 0) == 0) {
      verdicts["fibration"][name.substr(10)] = jv;
    } else {
      verdicts[name] = jv;
    }
    provenance[name] = to_string(v->provenance);
  }
  json disc_components = json::array();
  for (const auto& c : r.disc) {
    disc_components.push_back({{"generators", generators(c.image)},
                               {"source", generators(c.source)},
                               {"point", c.point},
                               {"unsplit", c.unsplit},
                               {"tangents", c.tangents}});
  }
  json certs = json::array();
  for (const auto& c : r.certificates) certs.push_back(to_json(c));
  return json{{"germ", germ},
              {"verdicts", verdicts},
              {"provenance", provenance},
              {"sing_ideal", generators(r.sing_ideal)},
              {"disc", {{"description", r.disc_description}, {"components", disc_components}}},
              {"stratification", r.stratification},
              {"numeric", {{"ran", r.numeric_ran}, {"config", to_json(r.numeric_config)}, {"certificates", certs}}},
              {"notes", r.notes},
              {"warnings", r.warnings},
              {"invariant_violations", check_invariants(r)}};
}

std::string render_text(const VerdictReport& r) {
  std::ostringstream out;
  const MapGerm& g = r.germ;
  out << "germ " << g.name << " (" << to_string(g.field) << ", " << to_string(g.kind) << ")\n";
  out << "  map: ";
  for (std::size_t i = 0; i < g.components.size(); ++i) out << (i ? ", " : "") << g.components[i].to_string();
  out << "\n";
  for (const auto& [name, v] : verdict_fields(r)) {
    out << name << ": " << v->value << " [" << to_string(v->provenance) << "]";
    if (!v->germ.empty()) out << " " << v->germ;
    out << "\n";
    if (!v->citation.empty()) out << "    by: " << v->citation << "\n";
    if (!v->detail.empty()) out << "    " << v->detail << "\n";
  }
  out << "sing ideal: " << r.sing_ideal.to_string() << "\n";
  out << "disc: " << r.disc_description << "\n";
  out << "stratification: " << r.stratification << "\n";
  for (const auto& c : r.certificates) {
    out << "numeric " << c.test << " (" << c.subject << "): " << c.verdict << "\n";
  }
  if (r.numeric_ran) out << "numeric seed: " << r.numeric_config.seed << "\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  for (const auto& v : check_invariants(r)) out << "invariant violated: " << v << "\n";
  return out.str();
}

FixtureResult run_fixture(const GermSpec& spec, AnalyzeOptions opts) {
  FixtureResult res;
  res.name = spec.name;
  auto start = std::chrono::steady_clock::now();
  opts.numeric_config = numeric_config(spec, opts.numeric_config);
  opts.stratification = stratification(spec, opts.seed);
  VerdictReport r = analyze(spec.germ(), opts);
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  auto fields = verdict_fields(r);
  for (const auto& [key, x] : spec.expect) {
    auto it = std::find_if(fields.begin(), fields.end(), [&](const auto& f) { return f.first == key; });
    if (it == fields.end()) {
      res.mismatches.push_back(key + ": expected " + x.value + ", field absent");
      continue;
    }
    const Verdict& v = *it->second;
    const std::string prov = to_string(v.provenance);
    if (v.value != x.value || (x.provenance && *x.provenance != prov)) {
      res.mismatches.push_back(key + ": expected " + x.value + (x.provenance ? "/" + *x.provenance : "") +
                               ", got " + v.value + "/" + prov);
    }
  }
  if (spec.expect_disc) {
    bool ok = spec.expect_disc->size() == r.disc.size();
    for (const auto& gens : *spec.expect_disc) {
      if (!ok) break;
      const Variables& ring = r.disc.front().image.variables();
      std::vector<Polynomial> mapped;
      for (const auto& p : gens) mapped.push_back(remap(p, ring));
      Ideal want(ring, mapped);
      ok = std::any_of(r.disc.begin(), r.disc.end(), [&](const DiscComponent& c) { return same_ideal(c.image, want); });
    }
    if (!ok) res.mismatches.push_back("disc: got " + r.disc_description);
  }
  for (const auto& v : check_invariants(r)) res.mismatches.push_back("invariant: " + v);
  res.passed = res.mismatches.empty();
  res.report = std::move(r);
  return res;
}

}  // namespace germ
