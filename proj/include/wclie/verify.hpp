#ifndef WCLIE_VERIFY_HPP
#define WCLIE_VERIFY_HPP

#include "wclie/chi.hpp"
#include "wclie/homology.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace wclie {

enum class CheckStatus { Pass, Fail, Skip };

const char* to_string(CheckStatus s);

struct CheckResult {
  std::string id;  // "C1" .. "C12"
  std::string desc;
  CheckStatus status = CheckStatus::Skip;
  nlohmann::json witness;  // offending data on failure, skip reason on skip, null otherwise
};

struct VerificationReport {
  std::string algebra;
  std::vector<CheckResult> checks;  // sorted by numeric id
  bool all_passed = false;          // no check failed

  const CheckResult& check(const std::string& id) const;
};

// Errors: InputMismatch if h was not computed for c.base.
VerificationReport run_checks(const ChiAlgebra& c, const HomologyReport& h);

}  // namespace wclie

#endif
