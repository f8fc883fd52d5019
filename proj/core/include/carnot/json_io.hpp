#ifndef CARNOT_JSON_IO_HPP
#define CARNOT_JSON_IO_HPP

#include <string>
#include <vector>

#include "carnot/carnot_algebra.hpp"
#include "carnot/report.hpp"
#include "carnot/vector_field.hpp"

namespace carnot {

/// JSON serialization. All emitters are byte-deterministic: terms in
/// canonical order, object keys in fixed order, compact formatting.
///
/// Schemas:
///   Polynomial   {"n":N,"terms":[{"c":"num/den","e":[e1,...,eN]},...]}
///   VectorField  {"n":N,"components":[Polynomial,...]}   (all N components)
///   Frame        {"n":N,"names":[...],"fields":[VectorField,...]}
///   CarnotAlgebra {"n":..,"d":..,"r":..,"layers":[...],
///                  "brackets":[{"i":1,"j":2,"out":[{"k":3,"c":"1"}]},...]}
/// Coefficient strings are reduced fractions, "num" when the denominator is
/// one, with an optional leading minus.
std::string to_json(const Polynomial& p, bool pretty = false);
std::string to_json(const VectorField& v, bool pretty = false);
std::string to_json(const Frame& f, bool pretty = false);
std::string to_json(const CarnotAlgebra& alg, bool pretty = false);
std::string to_json(const VerificationReport& report, bool pretty = false);

Polynomial polynomial_from_json(const std::string& text);
VectorField vector_field_from_json(const std::string& text);
Frame frame_from_json(const std::string& text);
CarnotAlgebra carnot_algebra_from_json(const std::string& text);

/// {"d":..,"rows":[{"i":1,"l":"2","cum":"2"},...]} with exact decimal strings.
std::string dims_table_json(int d, int max_step, bool pretty = false);

std::string growth_vector_json(const std::vector<int>& ranks, bool pretty = false);

}  // namespace carnot

#endif
