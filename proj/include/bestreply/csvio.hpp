#pragma once

#include <string>
#include <vector>

namespace bestreply {

// Round-trippable decimal form (printf %.17g); all CSV output goes through
// this so runs are byte-reproducible.
std::string fmt_double(double v);

std::string csv_row(const std::vector<std::string>& cells);

} // namespace bestreply
