#ifndef STC_BUNDLED_HPP
#define STC_BUNDLED_HPP

#include <optional>
#include <string>
#include <vector>

namespace stc {

/// Names of the scenarios shipped with the library:
/// epr, vaidman, ghz-fig1, ghz-fig2, divergence.
const std::vector<std::string>& bundled_scenario_names();

/// Scenario file text for a bundled name, or nullopt.
std::optional<std::string> bundled_scenario_text(const std::string& name);

}  // namespace stc

#endif
