#pragma once

#include <iosfwd>

namespace phecke {

// Runs the full verification suite (relations, ranks, basis changes,
// multiplication tables, character identities, rationality certificates,
// center, quotient, property checks) and prints one PASS/FAIL line per
// criterion.  Returns true when every criterion passed.
bool run_verification(std::ostream& out);

}  // namespace phecke
