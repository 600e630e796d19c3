#pragma once

#include <string>

#include "algeo/algebra.hpp"

namespace algeo {

/// Loads an algebra file (json: name, field, dimension, basis, mu triples,
/// optional bracket triples or "commutator"), or resolves a builtin name.
AlgebraPtr load_algebra(const std::string &path_or_builtin);

/// Parses the json document text (ParseError reports the byte position).
AlgebraPtr parse_algebra(const std::string &text);

/// Stable FNV-1a digest of the canonical algebra serialization, hex.
std::string input_digest(const AlgebraPtr &alg);

} // namespace algeo
