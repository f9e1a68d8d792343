#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "germ/classify/classify.hpp"

namespace germ {

/// Problem in a germ file, with a 1-based line and column.
class GermFileError : public Error {
 public:
  GermFileError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

struct StratumSpec {
  std::vector<Polynomial> closure;
  /// Each entry is one ideal; its zero set is removed from the stratum.
  std::vector<std::vector<Polynomial>> excluded;
};

/// Expected verdict of a corpus fixture: a value token and optionally the
/// provenance it must carry.
struct Expectation {
  std::string value;
  std::optional<std::string> provenance;
};

struct GermSpec {
  std::string name;
  Field field = Field::Real;
  GermKind kind = GermKind::General;
  std::vector<std::string> vars;
  std::vector<std::string> targets;
  std::vector<std::string> real_vars;
  std::vector<Polynomial> components;
  std::vector<StratumSpec> strata;
  /// numeric.<key> overrides, applied on top of the defaults.
  std::map<std::string, std::string> numeric;
  /// expect.<field> entries of corpus fixtures.
  std::map<std::string, Expectation> expect;
  /// expect.disc: one generator list per component.
  std::optional<std::vector<std::vector<Polynomial>>> expect_disc;

  MapGerm germ() const;
  /// Variables of the stratification blocks (realified for f conj(g)).
  Variables strata_vars() const;
};

GermSpec parse_germ_file(std::string_view text);
GermSpec load_germ_file(const std::string& path);
/// Canonical text that parses back to an equal spec.
std::string render_germ_file(const GermSpec& spec);
bool same_spec(const GermSpec& a, const GermSpec& b);

/// Numeric config with the file's overrides applied.
NumericConfig numeric_config(const GermSpec& spec, NumericConfig base = {});
/// The user stratification, with generic ranks computed, if any blocks exist.
std::optional<Stratification> stratification(const GermSpec& spec, std::uint64_t seed = 1);

}  // namespace germ
