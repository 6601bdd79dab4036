#pragma once

#include <json.hpp>

#include <cstddef>
#include <string>

#include "bezout/glue.hpp"

namespace bezout {

/// Insertion-ordered JSON keeps the emitted field order stable, which makes
/// every serialization here bit-exact round-trippable.
using Json = nlohmann::ordered_json;

// Writers. Terms are emitted highest graded-lex monomial first with no zero
// coefficients; antisymmetric matrices are emitted as their strict upper
// triangle only, zero entries omitted, so invalid matrices have no wire form.
Json poly_to_json(const MultiPoly& p);
Json tuple_to_json(const PolyTuple& t);
Json upper_to_json(const AntisymMatrix& m);    // bare "(j,k)" -> poly map, 1-based keys
Json antisym_to_json(const AntisymMatrix& m);  // {"N": ..., "upper": {...}}
Json certificate_to_json(const BezoutCertificate& c);
Json trace_to_json(const GlueTrace& t);

// Readers. Polynomial nodes may be canonical objects or polynomial text in
// the parse_poly syntax; n fixes the ambient variable count. Readers throw
// parse_error on malformed shapes and dimension_mismatch on conflicting
// variable counts.
Rational rational_from_json(const Json& node);
MultiPoly poly_from_json(const Json& node, std::size_t n);
PolyTuple tuple_from_json(const Json& node, std::size_t n);
AntisymMatrix upper_from_json(const Json& node, std::size_t count, std::size_t n);
AntisymMatrix antisym_from_json(const Json& node, std::size_t expected_count, std::size_t n);
GlueTrace trace_from_json(const Json& node);

/// Variable count a polynomial-bearing node commits to: the "n" field of a
/// canonical object, the highest variable mentioned in polynomial text, the
/// max over an array. 0 when the node does not constrain it.
std::size_t infer_var_count(const Json& node);

const char* policy_name(BoundPolicy policy);
BoundPolicy policy_from_name(const std::string& name);

}  // namespace bezout
