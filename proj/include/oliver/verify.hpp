#ifndef OLIVER_VERIFY_HPP
#define OLIVER_VERIFY_HPP

#include <string>

#include "json.hpp"
#include "oliver/group.hpp"

namespace oliver {

/// Re-checks every claim of an exclusion report from scratch: direct set
/// arithmetic on element index lists plus character evaluation. Does not
/// touch the subgroup lattice, class tags, triple streams or any cached
/// fixed-dimension tables. Returns true iff all certificates and the verdict
/// hold; on failure `diagnostics` names the first violated condition.
bool verify_report(const Group& G, const nlohmann::json& report, std::string* diagnostics);

}  // namespace oliver

#endif
