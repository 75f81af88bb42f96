#include "digitgraph/family.hpp"

#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace digitgraph {

FamilyFunction::FamilyFunction(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("family function needs at least one coefficient");
    }
}

int FamilyFunction::degree() const {
    for (std::size_t k = coeffs_.size(); k-- > 1;) {
        if (coeffs_[k] != Rational(0)) return static_cast<int>(k);
    }
    return 0;
}

Rational FamilyFunction::eval(const Rational& x) const {
    Rational acc = coeffs_.back();
    for (std::size_t k = coeffs_.size() - 1; k-- > 0;) {
        acc = acc * x + coeffs_[k];
    }
    return acc;
}

FunctionFamily::FunctionFamily(std::vector<FamilyFunction> functions)
    : functions_(std::move(functions)) {
    if (functions_.empty()) {
        throw std::invalid_argument("a family must contain at least one function");
    }
}

const FamilyFunction& FunctionFamily::at(std::uint64_t i) const {
    if (i < 1 || i > functions_.size()) {
        throw std::out_of_range("family index " + std::to_string(i) +
                                " out of range 1.." + std::to_string(functions_.size()));
    }
    return functions_[i - 1];
}

Rational FunctionFamily::eval(std::uint64_t i, const Rational& x) const {
    if (x < Rational(0) || x >= Rational(1)) {
        throw std::domain_error("family argument " + x.to_string() +
                                " outside [0,1)");
    }
    return at(i).eval(x);
}

bool FunctionFamily::all_constant() const {
    for (const auto& f : functions_) {
        if (!f.is_constant()) return false;
    }
    return true;
}

FunctionFamily parse_family(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("family JSON is malformed: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("functions")) {
        throw std::invalid_argument("family JSON needs a top-level \"functions\" array");
    }
    const auto& list = doc["functions"];
    if (!list.is_array() || list.empty()) {
        throw std::invalid_argument("\"functions\" must be a non-empty array");
    }

    std::vector<FamilyFunction> fns;
    fns.reserve(list.size());
    for (std::size_t idx = 0; idx < list.size(); ++idx) {
        const auto& entry = list[idx];
        const std::string where = "functions[" + std::to_string(idx) + "]";
        if (!entry.is_object() || !entry.contains("coeffs")) {
            throw std::invalid_argument(where + " needs a \"coeffs\" array");
        }
        const auto& raw = entry["coeffs"];
        if (!raw.is_array() || raw.empty()) {
            throw std::invalid_argument(where + ".coeffs must be a non-empty array");
        }
        std::vector<Rational> coeffs;
        coeffs.reserve(raw.size());
        for (std::size_t k = 0; k < raw.size(); ++k) {
            if (!raw[k].is_string()) {
                throw std::invalid_argument(where + ".coeffs[" + std::to_string(k) +
                                            "] must be a fraction string");
            }
            try {
                coeffs.push_back(Rational::from_string(raw[k].get<std::string>()));
            } catch (const std::exception& e) {
                throw std::invalid_argument(where + ".coeffs[" + std::to_string(k) +
                                            "]: " + e.what());
            }
        }
        fns.emplace_back(std::move(coeffs));
    }
    return FunctionFamily(std::move(fns));
}

std::string serialize_family(const FunctionFamily& fam) {
    nlohmann::json list = nlohmann::json::array();
    for (std::uint64_t i = 1; i <= fam.size(); ++i) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& c : fam.at(i).coeffs()) {
            coeffs.push_back(c.to_string());
        }
        list.push_back(nlohmann::json{{"coeffs", coeffs}});
    }
    return nlohmann::json{{"functions", list}}.dump();
}

}  // namespace digitgraph
