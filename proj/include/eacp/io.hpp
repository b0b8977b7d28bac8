#ifndef EACP_IO_HPP
#define EACP_IO_HPP

#include "eacp/algebra.hpp"

#include <json.hpp>

#include <string>

namespace eacp {

using Json = nlohmann::ordered_json;

/// Bad user input; `where` is a JSON pointer or a character offset.
class InputError : public std::invalid_argument {
public:
    InputError(const std::string& where, const std::string& what)
        : std::invalid_argument(where.empty() ? what : where + ": " + what), where_(where) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

/// Field names in files: "rational", "gaussian", "quadratic" (with "d"),
/// "float" (with optional "epsilon").
Field field_from_json(const Json& doc);

/// Rational "p/q" or "p"; gaussian {"re","im"}; quadratic {"a","b"} with an
/// optional "d" that must match; float as a decimal string or {"re","im"}.
Scalar scalar_from_json(const Json& v, const Field& field, const std::string& pointer);
Json scalar_to_json(const Scalar& s);

/// {"n": 2, "field": "rational", "A": [[...]], "b": [...], "label": "..."}
Algebra algebra_from_json(const Json& doc);
Json algebra_to_json(const Algebra& alg);
Algebra load_algebra(const std::string& path);

Json matrix_to_json(const Matrix& m);
Json vector_to_json(const Vector& v);
/// {"h": [...], "r": ...}
Json element_to_json(const Element& x);
Element element_from_json(const Json& v, const Field& field, std::size_t n, const std::string& pointer = "");

/// Linear expression over h1..hn and r with rational coefficients:
///   expr := ["+"|"-"] term {("+"|"-") term} | "0"
///   term := [coef ["*"]] gen
///   coef := digits ["/" digits]
///   gen  := "h" digits | "r" | "h" (only when n = 1)
Element parse_element(const std::string& text, std::size_t n);
/// "1/2 h1 + 1/2 r", "h" when n = 1, "0" for zero.
std::string format_element(const Element& x);

}  // namespace eacp

#endif  // EACP_IO_HPP
