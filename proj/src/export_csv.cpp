#include "digitgraph/export_csv.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "digitgraph/construction.hpp"
#include "digitgraph/rng.hpp"

namespace digitgraph {

std::string export_graph_csv(const FunctionFamily& fam, std::uint64_t points,
                             std::uint64_t N, std::uint64_t xbits,
                             std::uint64_t seed) {
    if (points < 1) throw std::invalid_argument("need at least one point");
    if (N < 1) throw std::invalid_argument("need at least one digit of F");
    if (xbits < 1) throw std::invalid_argument("need at least one digit of x");

    std::vector<Rational> xs;
    xs.reserve(points);
    SplitMix64 rng(seed);
    for (std::uint64_t k = 0; k < points; ++k) xs.push_back(rng.dyadic(xbits));
    std::sort(xs.begin(), xs.end());

    std::string out = "x_num,x_den,y_mantissa,y_scale,x_decimal,y_decimal\n";
    for (const Rational& x : xs) {
        const TruncatedValue y = eval_F(x, N, fam);
        out += x.num().str() + "," + x.den().str() + "," +
               y.value.mantissa().str() + "," + std::to_string(y.value.scale()) +
               "," + x.to_decimal(12) + "," + y.lower().to_decimal(12) + "\n";
    }
    return out;
}

}  // namespace digitgraph
