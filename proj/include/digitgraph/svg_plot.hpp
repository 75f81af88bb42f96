#pragma once

#include <string>

namespace digitgraph {

// Renders a CSV produced by export_graph_csv as a self-contained SVG
// scatter plot over unit-square axes: one marker per data row, (0,0) at
// the bottom-left corner of the frame.  Throws std::invalid_argument
// naming the offending row when the CSV is malformed.
std::string render_scatter_svg(const std::string& csv);

}  // namespace digitgraph
