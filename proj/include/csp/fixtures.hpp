#pragma once

#include "csp/enumerate.hpp"

#include <string>
#include <vector>

namespace csp {

// Built-in example catalogs, each entry validated and certified at build time.
std::vector<std::string> fixture_names();
bool has_fixture(const std::string& name);
ModelCatalog get_fixture(const std::string& name);

}  // namespace csp
