#ifndef WCLIE_CATALOG_HPP
#define WCLIE_CATALOG_HPP

#include "wclie/lie_algebra.hpp"

#include <map>
#include <string>
#include <vector>

namespace wclie {

struct ExpectedValue {
  std::size_t value;
  std::string provenance;  // "published", "derived" or "closed-form"
};

// keys: dim_chi, dim_W, dim_R, dim_H2
using ExpectedValues = std::map<std::string, ExpectedValue>;

struct CatalogEntry {
  std::string name;
  std::vector<std::string> params;
  std::string description;
};

const std::vector<CatalogEntry>& catalog_entries();

// Errors: UnknownName, BadParams.
LieAlgebra build(const std::string& name, const std::vector<long long>& params = {});

// Known dimensions for an instance; empty when none are recorded.
ExpectedValues expected_values(const std::string& name, const std::vector<long long>& params = {});

struct CatalogInstance {
  std::string name;
  std::vector<long long> params;
};

// Instances exercised end-to-end by the acceptance suite.
std::vector<CatalogInstance> standard_instances();

std::string instance_name(const std::string& name, const std::vector<long long>& params);

}  // namespace wclie

#endif
