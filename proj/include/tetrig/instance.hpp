#pragma once

#include <string>

#include "tetrig/tetra.hpp"

namespace tetrig {

/// Instance files are JSON documents:
///
///   {
///     "field": "rational" | "prime:<p>",
///     "form":   3 rows of 3 scalar strings (symmetric),
///     "points": 4 rows of 3 scalar strings
///   }
///
/// Scalars use the exact text grammar of Scalar::parse. render_instance
/// emits the canonical two-space-indented rendering, so parse followed by
/// render is the identity on canonical files.
Tetrahedron parse_instance(const std::string& text);
Tetrahedron load_instance(const std::string& path);  // IoError
std::string render_instance(const Tetrahedron&);

}  // namespace tetrig
