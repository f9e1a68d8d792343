#pragma once

#include <string>
#include <utility>
#include <vector>

#include "germ/ideal/ideal.hpp"

namespace germ {

enum class Field { Real, Complex };
/// general: the components themselves; pair: holomorphic (f, g);
/// fbarg: the mixed function f * conj(g) built from a holomorphic pair.
enum class GermKind { General, Pair, Fbarg };

std::string to_string(Field f);
std::string to_string(GermKind k);

struct MapGerm {
  std::string name;
  Field field = Field::Real;
  GermKind kind = GermKind::General;
  Variables source;
  /// Map components; for pair and fbarg exactly (f, g).
  std::vector<Polynomial> components;
  /// Target coordinate names (default u, v, w, ...).
  std::vector<std::string> targets;
  /// Names of the real coordinates used when realifying (two per source
  /// variable, real part first). Empty means <name>_re, <name>_im.
  std::vector<std::string> real_names;

  /// Validates the invariants and fills default target names.
  static MapGerm make(std::string name, Field field, GermKind kind, Variables source,
                      std::vector<Polynomial> components, std::vector<std::string> targets = {},
                      std::vector<std::string> real_names = {});

  /// Target dimension of the analysed map: 2 for pairs, 1 complex (2 real) for fbarg.
  std::size_t target_dim() const { return kind == GermKind::Fbarg ? 1 : components.size(); }
  std::size_t source_dim() const { return source.size(); }
  Ideal fibre_ideal() const;
  Variables target_ring() const;
};

}  // namespace germ
