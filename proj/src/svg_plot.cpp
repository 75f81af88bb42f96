#include "digitgraph/svg_plot.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace digitgraph {

namespace {

constexpr double kSize = 640.0;
constexpr double kMargin = 40.0;
constexpr double kSpan = kSize - 2 * kMargin;
constexpr const char* kHeader = "x_num,x_den,y_mantissa,y_scale,x_decimal,y_decimal";

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

double parse_coord(const std::string& field, std::size_t data_row) {
    const char* begin = field.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
        throw std::invalid_argument("row " + std::to_string(data_row) +
                                    ": not a decimal coordinate: \"" + field + "\"");
    }
    return v;
}

void append(std::string& out, const char* fmt, double a, double b) {
    char buf[96];
    std::snprintf(buf, sizeof buf, fmt, a, b);
    out += buf;
}

}  // namespace

std::string render_scatter_svg(const std::string& csv) {
    // Header line first, data rows after; a trailing newline is fine.
    std::vector<std::pair<double, double>> pts;
    std::size_t start = 0;
    std::size_t data_row = 0;
    bool saw_header = false;
    while (start < csv.size()) {
        std::size_t nl = csv.find('\n', start);
        if (nl == std::string::npos) nl = csv.size();
        const std::string line = csv.substr(start, nl - start);
        start = nl + 1;
        if (line.empty()) continue;
        if (!saw_header) {
            if (line != kHeader) {
                throw std::invalid_argument("row 0: expected header \"" +
                                            std::string(kHeader) + "\"");
            }
            saw_header = true;
            continue;
        }
        ++data_row;
        const std::vector<std::string> f = split_fields(line);
        if (f.size() != 6) {
            throw std::invalid_argument("row " + std::to_string(data_row) + ": expected 6 fields, got " +
                                        std::to_string(f.size()));
        }
        pts.emplace_back(parse_coord(f[4], data_row), parse_coord(f[5], data_row));
    }
    if (!saw_header) {
        throw std::invalid_argument("row 0: missing header line");
    }

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
           "viewBox=\"0 0 640 640\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"640\" fill=\"white\"/>\n";
    append(svg, "<rect x=\"%.2f\" y=\"%.2f\" ", kMargin, kMargin);
    append(svg, "width=\"%.2f\" height=\"%.2f\" fill=\"none\" stroke=\"black\"/>\n",
           kSpan, kSpan);
    // Unit-square tick labels.
    append(svg, "<text x=\"%.2f\" y=\"%.2f\" font-size=\"12\">0</text>\n",
           kMargin - 14.0, kSize - kMargin + 14.0);
    append(svg, "<text x=\"%.2f\" y=\"%.2f\" font-size=\"12\">1</text>\n",
           kSize - kMargin - 3.0, kSize - kMargin + 14.0);
    append(svg, "<text x=\"%.2f\" y=\"%.2f\" font-size=\"12\">1</text>\n",
           kMargin - 14.0, kMargin + 4.0);
    for (const auto& [x, y] : pts) {
        append(svg, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"1.2\" fill=\"black\"/>\n",
               kMargin + x * kSpan, kSize - kMargin - y * kSpan);
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace digitgraph
