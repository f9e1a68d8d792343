#pragma once

#include <string>
#include <vector>

#include "germ/classify/classify.hpp"

namespace germ::detail {

/// Ideal of the Zariski closure of G(V(source_ideal)) in the target ring.
Ideal graph_image(const Ideal& source_ideal, const std::vector<Polynomial>& components,
                  const std::vector<std::string>& targets);

bool is_origin_ideal(const Ideal& ideal);

/// The holomorphic pair (f, g) behind an f conj(g) germ.
MapGerm pair_of(const MapGerm& g);

std::string join(const std::vector<std::string>& parts, const std::string& sep);

}  // namespace germ::detail
