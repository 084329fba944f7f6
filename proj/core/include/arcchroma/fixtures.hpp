#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "arcchroma/coloring.hpp"

namespace arcchroma::fixtures {

// Hand-recorded colorings that the toolkit treats as ground truth.  They are
// kept verbatim so independent sources can be checked against them; nothing
// here is rederived at runtime.
struct Fixture {
  std::string name;
  std::string summary;
  Coloring coloring;
};

const std::vector<Fixture>& all();
const Fixture& by_name(std::string_view name);
std::vector<std::string> names();

}  // namespace arcchroma::fixtures
