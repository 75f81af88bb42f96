// Command-line front end: evaluation, digit windows, partition queries,
// verification campaigns, box counting, projection checks, graph export,
// and scatter plots.  Exit codes: 0 = success / all checks passed,
// 1 = a check reported failures, 2 = usage, parse, or domain errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "digitgraph/bitstring.hpp"
#include "digitgraph/construction.hpp"
#include "digitgraph/dimension.hpp"
#include "digitgraph/export_csv.hpp"
#include "digitgraph/family.hpp"
#include "digitgraph/partition.hpp"
#include "digitgraph/rational.hpp"
#include "digitgraph/svg_plot.hpp"
#include "digitgraph/verification.hpp"

namespace {

using namespace digitgraph;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + path);
}

FunctionFamily load_family(const std::string& path) {
    return parse_family(read_file(path));
}

// Counts accept plain integers or the shorthand AeB = A * 10^B ("1e6").
std::uint64_t parse_count(const std::string& text) {
    const auto bad = [&] {
        throw std::invalid_argument("bad count \"" + text + "\": use digits or AeB");
    };
    std::uint64_t mant = 0;
    std::size_t k = 0;
    if (k == text.size()) bad();
    for (; k < text.size() && text[k] != 'e' && text[k] != 'E'; ++k) {
        if (text[k] < '0' || text[k] > '9') bad();
        mant = mant * 10 + static_cast<std::uint64_t>(text[k] - '0');
    }
    if (k == 0) bad();
    if (k == text.size()) return mant;
    std::uint64_t exp = 0;
    if (++k == text.size()) bad();
    for (; k < text.size(); ++k) {
        if (text[k] < '0' || text[k] > '9') bad();
        exp = exp * 10 + static_cast<std::uint64_t>(text[k] - '0');
    }
    for (; exp > 0; --exp) mant *= 10;
    return mant;
}

// "A..B" inclusive level range, or a single level "A".
std::pair<std::uint64_t, std::uint64_t> parse_levels(const std::string& text) {
    const std::size_t dots = text.find("..");
    if (dots == std::string::npos) {
        const std::uint64_t n = parse_count(text);
        return {n, n};
    }
    const std::uint64_t lo = parse_count(text.substr(0, dots));
    const std::uint64_t hi = parse_count(text.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("empty level range " + text);
    return {lo, hi};
}

Rational parse_unit_point(const std::string& text) {
    const Rational x = Rational::from_string(text);
    if (x < Rational(0) || x >= Rational(1)) {
        throw std::domain_error("x = " + text + " outside [0,1)");
    }
    return x;
}

int run(int argc, char** argv) {
    CLI::App app{"exact evaluation and verification of a plane-filling digit graph"};
    app.require_subcommand(1);

    std::string family_path, out_path, x_text;
    std::uint64_t seed = 0;

    // eval
    auto* eval = app.add_subcommand("eval", "print F(x) truncated to N digits");
    std::uint64_t eval_bits = 32;
    eval->add_option("--x", x_text, "point in [0,1) as p/q")->required();
    eval->add_option("--bits", eval_bits, "digits of F to compute");
    eval->add_option("--family", family_path, "family JSON file")->required();

    // digits
    auto* digits = app.add_subcommand("digits", "print a window of binary digits");
    std::uint64_t from = 1, to = 16;
    std::string digits_x;
    digits->add_option("--x", digits_x, "rational as p/q")->required();
    digits->add_option("--from", from, "first position (1-based)");
    digits->add_option("--to", to, "last position, inclusive");

    // partition
    auto* part = app.add_subcommand("partition", "query the T/triple position split");
    std::uint64_t classify_n = 0, countT_N = 0;
    auto* copt = part->add_option("--classify", classify_n, "classify a position");
    auto* topt = part->add_option("--count-T", countT_N, "count T ∩ [1,N]");

    // check
    auto* check = app.add_subcommand("check", "run a verification campaign");
    check->require_subcommand(1);
    auto* reading = check->add_subcommand("reading", "two-digit reading intervals");
    auto* injective = check->add_subcommand("injective", "pair separation readings");
    std::string trials_text = "1000";
    std::uint64_t max_s = 64, pair_bits = 24;
    for (auto* c : {reading, injective}) {
        c->add_option("--trials", trials_text, "number of cases");
        c->add_option("--seed", seed, "campaign seed");
    }
    reading->add_option("--max-s", max_s, "largest reader position");
    injective->add_option("--family", family_path, "family JSON file")->required();
    injective->add_option("--bits", pair_bits, "digits of the random dyadic points");

    // boxcount
    auto* boxcount = app.add_subcommand("boxcount", "occupied-cell counts per level");
    std::string levels_text = "4..10", mode = "exhaustive", samples_text = "0";
    boxcount->add_option("--levels", levels_text, "level or range A..B");
    boxcount->add_option("--mode", mode, "exhaustive|random")
        ->check(CLI::IsMember({"exhaustive", "random"}));
    boxcount->add_option("--samples", samples_text, "random-mode samples (AeB ok)");
    boxcount->add_option("--seed", seed, "sampler seed");
    boxcount->add_option("--family", family_path, "family JSON file")->required();
    boxcount->add_option("--out", out_path, "write the CSV report here")->required();

    // projection
    auto* projection = app.add_subcommand("projection", "column-measure bound for one cell");
    std::uint64_t proj_N = 9, proj_col = 0, proj_row = 0;
    std::string proj_samples = "1e4";
    projection->add_option("--N", proj_N, "grid level")->required();
    projection->add_option("--col", proj_col, "cell column")->required();
    projection->add_option("--row", proj_row, "cell row")->required();
    projection->add_option("--samples", proj_samples, "sample budget (AeB ok)");
    projection->add_option("--seed", seed, "sampler seed");
    projection->add_option("--family", family_path, "family JSON file")->required();

    // export
    auto* exportc = app.add_subcommand("export", "sample the graph into a CSV");
    std::string points_text = "1000";
    std::uint64_t export_bits = 64, export_xbits = 30;
    exportc->add_option("--points", points_text, "number of sample points (AeB ok)");
    exportc->add_option("--bits", export_bits, "digits of F per point");
    exportc->add_option("--xbits", export_xbits, "digits of each random x");
    exportc->add_option("--seed", seed, "sampler seed");
    exportc->add_option("--family", family_path, "family JSON file")->required();
    exportc->add_option("--out", out_path, "output CSV path")->required();

    // plot
    auto* plot = app.add_subcommand("plot", "render an exported CSV as SVG");
    std::string plot_in;
    plot->add_option("--in", plot_in, "input CSV path")->required();
    plot->add_option("--out", out_path, "output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (eval->parsed()) {
        const FunctionFamily fam = load_family(family_path);
        const TruncatedValue v = eval_F(parse_unit_point(x_text), eval_bits, fam);
        std::cout << v.value.to_string() << " | " << v.lower().to_decimal(12)
                  << " | " << v.digits() << "\n";
        return 0;
    }

    if (digits->parsed()) {
        std::cout << bits_window(Rational::from_string(digits_x), from, to).to_string()
                  << "\n";
        return 0;
    }

    if (part->parsed()) {
        if (!*copt && !*topt) {
            throw std::invalid_argument("partition needs --classify or --count-T");
        }
        if (*copt) {
            const Classification c = classify(classify_n);
            nlohmann::json j{{"n", classify_n}, {"in_T", c.in_T}};
            if (!c.in_T) {
                j["i"] = c.i;
                j["j"] = c.j;
                j["position"] = c.position;
                j["s"] = classify_n - static_cast<std::uint64_t>(c.position);
            }
            std::cout << j.dump() << "\n";
        }
        if (*topt) {
            nlohmann::json j{{"N", countT_N}, {"count", count_T(countT_N)}};
            std::cout << j.dump() << "\n";
        }
        return 0;
    }

    if (reading->parsed()) {
        const CampaignReport rep = reading_campaign(parse_count(trials_text), seed, max_s);
        std::cout << rep.to_json() << "\n";
        return rep.failures == 0 ? 0 : 1;
    }

    if (injective->parsed()) {
        const FunctionFamily fam = load_family(family_path);
        const CampaignReport rep =
            injectivity_campaign(parse_count(trials_text), seed, fam, pair_bits);
        std::cout << rep.to_json() << "\n";
        return rep.failures == 0 ? 0 : 1;
    }

    if (boxcount->parsed()) {
        const FunctionFamily fam = load_family(family_path);
        const auto [lo, hi] = parse_levels(levels_text);
        const std::uint64_t samples = parse_count(samples_text);
        BoxCountReport report;
        for (std::uint64_t N = lo; N <= hi; ++N) {
            BoxCountRow row;
            row.level = N;
            row.mode = mode;
            if (mode == "exhaustive") {
                row.samples = std::uint64_t(1) << relevant_bits(N);
                row.cells = box_count_exhaustive(N, fam);
            } else {
                row.samples = samples;
                row.cells = box_count_random(N, samples, seed, fam);
            }
            report.rows.push_back(row);
        }
        write_file(out_path, report.to_csv());
        if (report.rows.size() >= 2) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.6f", slope_fit(report));
            std::cout << "slope " << buf << "\n";
        }
        return 0;
    }

    if (projection->parsed()) {
        const FunctionFamily fam = load_family(family_path);
        const ProjectionReport rep =
            projection_check(proj_N, proj_col, proj_row, parse_count(proj_samples), seed, fam);
        std::cout << rep.to_json() << "\n";
        return rep.passed() ? 0 : 1;
    }

    if (exportc->parsed()) {
        const FunctionFamily fam = load_family(family_path);
        write_file(out_path, export_graph_csv(fam, parse_count(points_text),
                                              export_bits, export_xbits, seed));
        return 0;
    }

    if (plot->parsed()) {
        write_file(out_path, render_scatter_svg(read_file(plot_in)));
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
