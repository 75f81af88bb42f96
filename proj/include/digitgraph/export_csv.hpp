#pragma once

#include <cstdint>
#include <string>

#include "digitgraph/family.hpp"

namespace digitgraph {

// Seeded sample of the graph: `points` random dyadic abscissas with `xbits`
// digits, each paired with the level-N truncation of F.  Rows are sorted by
// x and carry both exact fields and 12-place decimal renderings:
//   x_num,x_den,y_mantissa,y_scale,x_decimal,y_decimal
std::string export_graph_csv(const FunctionFamily& fam, std::uint64_t points,
                             std::uint64_t N, std::uint64_t xbits,
                             std::uint64_t seed);

}  // namespace digitgraph
