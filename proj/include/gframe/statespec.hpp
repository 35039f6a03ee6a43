#pragma once

#include <json.hpp>

#include "gframe/spaces.hpp"

// JSON config <-> library objects: the state mini-language used by the CLI
// plus matrix/vector serialization for result files. Matrices are emitted as
// nested arrays of [re, im] pairs.

namespace gframe {

using json = nlohmann::ordered_json;

/// Parse a group element: an array of per-factor coordinates, or a bare
/// integer for cyclic groups (negative values wrap).
GroupElement parse_element(const json& j, const FiniteAbelianGroup& g);

/// State mini-language:
///   {"type":"basis","config":[g1,...,gN]}
///   {"type":"superposition","terms":[{"amplitude":[re,im],"config":[...]},...]}
///   {"type":"paradox","a":..,"b":..,"c":..,"theta":..}        (3 particles)
///   {"type":"example1"}                                        (3 particles)
/// Superpositions are normalized. The paradox and example1 constructors
/// validate that the space matches their shape.
StateVector parse_state(const json& spec, const KinSpace& space);

json complex_to_json(const cd& z);
json vector_to_json(const CVec& v);
json matrix_to_json(const Matrix& m);

}  // namespace gframe
