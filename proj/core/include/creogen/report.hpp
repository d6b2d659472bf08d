#ifndef CREOGEN_REPORT_HPP
#define CREOGEN_REPORT_HPP

#include <string>
#include <vector>

#include "creogen/errors.hpp"
#include "creogen/generator.hpp"

namespace creogen::report {

// Machine-readable account of a successful generation: per sentence the
// surface text, each token with its attachment and origin, and the full
// derivation recipe.
std::string generation_json(const gen::GenerationResult& r);

// Same shape for failures: the diagnostics with their stable names.
std::string error_json(const std::string& fixture,
                       const std::vector<Error>& errors);

}  // namespace creogen::report

#endif
