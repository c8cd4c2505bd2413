#pragma once

#include <string>

#include "indres/finite_group.hpp"
#include "indres/fixtures.hpp"

inline indres::FiniteGroup::Ptr named(const std::string& name) {
  auto s = indres::named_group(name);
  return indres::FiniteGroup::make(s.degree, s.gens, s.name);
}
