#pragma once

#include <string_view>

#include "absaf/model.hpp"

namespace absaf::fixtures {

/// Canadian electoral-reform discussion: 8 arguments, 187 voters.
extern const std::string_view canada_apx;
extern const std::string_view canada_ballots;
ABSAF canada();

/// Two voters, one of whom approves two undefendable arguments.
ABSAF undefendable();

/// Four voters whose size-2 groups {1,2},{1,3},{1,4} are each 1-representable but no
/// size-2 outcome covers all three.
ABSAF sjr_counterexample();

/// Four voters on which every OWA rule with k = 2 picks an outcome failing JR.
ABSAF owa_jr_counterexample();

}  // namespace absaf::fixtures
