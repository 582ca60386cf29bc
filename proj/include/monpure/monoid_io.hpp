#pragma once

#include "monpure/purity.hpp"

#include <string>

namespace monpure {

/// On-disk description of a monoid: a single JSON object with ambient_dim,
/// generators, optional name and optional budget overrides.
struct MonoidFile {
  std::string name;
  std::size_t ambient_dim = 0;
  std::vector<IntVector> generators;
  Budgets budgets;
};

MonoidFile parse_monoid_text(const std::string& text, const Budgets& defaults = {});
MonoidFile parse_monoid_file(const std::string& path, const Budgets& defaults = {});

}  // namespace monpure
