#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "digitgraph/rational.hpp"

namespace digitgraph {

// One polynomial with rational coefficients, constant term first.
// eval uses Horner's rule, so every intermediate stays exact.
class FamilyFunction {
public:
    FamilyFunction() : coeffs_{Rational(0)} {}
    explicit FamilyFunction(std::vector<Rational> coeffs);

    // Highest index with a nonzero coefficient (0 for constants,
    // including the zero polynomial).
    int degree() const;
    bool is_constant() const { return degree() == 0; }

    Rational eval(const Rational& x) const;

    const std::vector<Rational>& coeffs() const { return coeffs_; }

private:
    std::vector<Rational> coeffs_;  // coeffs_[k] multiplies x^k
};

// An indexed list f_1, ..., f_m of functions.  Indices are 1-based
// everywhere because that is how every downstream formula refers to
// them; size() is m.
class FunctionFamily {
public:
    explicit FunctionFamily(std::vector<FamilyFunction> functions);

    std::uint64_t size() const { return functions_.size(); }

    const FamilyFunction& at(std::uint64_t i) const;

    // f_i(x) with the domain restricted to [0,1).
    Rational eval(std::uint64_t i, const Rational& x) const;

    // True when every member is a constant polynomial.  Several of the
    // counting routines are only exact in that case.
    bool all_constant() const;

private:
    std::vector<FamilyFunction> functions_;
};

// JSON round-trip.  The wire format is
//   {"functions": [{"coeffs": ["1/3", "0", "2"]}, ...]}
// with coefficients as fraction strings, constant term first.
FunctionFamily parse_family(const std::string& text);
std::string serialize_family(const FunctionFamily& fam);

}  // namespace digitgraph
