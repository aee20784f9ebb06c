#pragma once

#include <string>

#include "conformal/lie_algebra.hpp"

namespace conformal {

/// Loads a structure-constants file:
///
///   { "name": string, "dim": integer,
///     "brackets": [ { "i": int, "j": int,
///                     "terms": [ { "k": int, "c": number } ] } ] }
///
/// Indices are 0-based and only i < j entries are permitted; missing pairs
/// mean a zero bracket. Duplicate (i, j) pairs, out-of-range indices and
/// malformed JSON raise InputError with a field diagnostic.
LieAlgebraSpec parse_algebra_file(const std::string& path);

/// Same contract on an in-memory JSON document.
LieAlgebraSpec parse_algebra_json(const std::string& text);

} // namespace conformal
