#ifndef FANO_BUILTIN_HPP
#define FANO_BUILTIN_HPP

#include <string>
#include <vector>

#include "fano/scenario.hpp"

namespace fano {

// embedded verification cases; every scenario is stored as source text and
// goes through the ordinary scenario parser
std::vector<std::string> builtin_names();
const std::string& builtin_text(const std::string& name);
Scenario builtin_scenario(const std::string& name);

}  // namespace fano

#endif
