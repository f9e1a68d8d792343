#include "germ/loci/map_germ.hpp"

namespace germ {

std::string to_string(Field f) { return f == Field::Real ? "R" : "C"; }

std::string to_string(GermKind k) {
  switch (k) {
    case GermKind::General:
      return "general";
    case GermKind::Pair:
      return "pair";
    case GermKind::Fbarg:
      return "fbarg";
  }
  return "";
}

MapGerm MapGerm::make(std::string name, Field field, GermKind kind, Variables source,
                      std::vector<Polynomial> components, std::vector<std::string> targets,
                      std::vector<std::string> real_names) {
  if (components.empty()) throw Error("a map germ needs at least one component");
  if (kind != GermKind::General) {
    if (components.size() != 2) throw Error("kind " + to_string(kind) + " needs exactly two components f, g");
    if (field != Field::Complex) throw Error("kind " + to_string(kind) + " requires field C");
  }
  MapGerm g;
  g.name = std::move(name);
  g.field = field;
  g.kind = kind;
  g.source = std::move(source);
  for (auto& c : components) {
    Polynomial p = remap(c, g.source);
    if (!p.constant_term().is_zero()) throw Error("component does not vanish at origin: " + p.to_string());
    if (field == Field::Real && !p.is_real()) throw Error("complex coefficient in a real germ: " + p.to_string());
    g.components.push_back(std::move(p));
  }
  if (targets.empty()) {
    static const char* kDefault[] = {"u", "v", "w"};
    for (std::size_t k = 0; k < g.components.size(); ++k) {
      std::string t = k < 3 ? kDefault[k] : "y" + std::to_string(k + 1);
      while (g.source.index_of(t)) t += "_";
      targets.push_back(t);
    }
  }
  if (targets.size() != g.components.size()) throw Error("number of target names does not match the components");
  for (const auto& t : targets) {
    if (g.source.index_of(t)) throw Error("target name '" + t + "' clashes with a source variable");
  }
  g.targets = std::move(targets);
  if (!real_names.empty() && real_names.size() != 2 * g.source.size()) {
    throw Error("realvars needs two names per source variable");
  }
  g.real_names = std::move(real_names);
  return g;
}

Ideal MapGerm::fibre_ideal() const {
  if (kind == GermKind::Fbarg) return Ideal(source, {components[0] * components[1]});
  return Ideal(source, components);
}

Variables MapGerm::target_ring() const { return Variables(targets); }

}  // namespace germ
