#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "glam/diffop.hpp"
#include "glam/lambda_poly.hpp"
#include "glam/rational.hpp"
#include "glam/symbol_poly.hpp"
#include "glam/uea.hpp"

namespace glam {

using Json = nlohmann::ordered_json;

/// Any value an expression can elaborate to.
using Value = std::variant<DiffOp, UEAElement, SymbolPoly>;

enum class OutputFormat { json, latex };

// JSON schemas:
//   LambdaPoly  ["c0","c1",...]  ascending powers of λ, rationals as "p/q"
//   DiffOp      {"type":"diffop","terms":[{"x":m,"d":n,"coeff":[...]}]}   (d desc, x asc)
//   SymbolPoly  {"type":"symbol","terms":[{"x":m,"xi":p,"coeff":[...]}]} (xi desc, x asc)
//   UEAElement  {"type":"uea","terms":[{"word":"e0e1","coeff":[...]}]}    (words lexicographic)

Json to_json(const LambdaPoly& p);
Json to_json(const DiffOp& A);
Json to_json(const SymbolPoly& S);
Json to_json(const UEAElement& u);
Json to_json(const Value& v);

/// Throw std::invalid_argument on schema violations.
LambdaPoly lambda_poly_from_json(const Json& j);
DiffOp diffop_from_json(const Json& j);
SymbolPoly symbol_from_json(const Json& j);
UEAElement uea_from_json(const Json& j);
/// Dispatches on the "type" tag.
Value value_from_json(const Json& j);

/// Compact single-line JSON.
std::string dump(const Json& j);

std::string to_latex(const LambdaPoly& p);
std::string to_latex(const DiffOp& A);
std::string to_latex(const SymbolPoly& S);
std::string to_latex(const UEAElement& u);

std::string emit(const Value& v, OutputFormat format);
std::string emit(const LambdaPoly& p, OutputFormat format);

}  // namespace glam
