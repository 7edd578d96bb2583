#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "core/module.hpp"

namespace zprmod {

/// Module file format:
///   header line "p r n" (three base-10 integers),
///   one generator per subsequent non-empty line (n integers),
///   lines starting with '#' are comments.
/// Entries are canonicalized mod p^r on load; negative and oversized values
/// are accepted.
struct ParsedModule {
  Ring ring;
  std::size_t n = 0;
  std::vector<Vec> generators;  // as listed in the file, canonicalized
};

ParsedModule parse_module_text(std::string_view text);

/// "x1 x2 ... xn" -> canonical vector.
Vec parse_vector_literal(const Ring& ring, std::size_t n, std::string_view text);

/// Canonical serialization: header plus the standard-form rows in original
/// column order. Re-parsing yields an equal module.
std::string format_module_file(const Module& m);

/// Header plus the given rows, one per line, order preserved.
std::string format_vectors_file(const Ring& ring, std::size_t n,
                                const std::vector<Vec>& rows);

std::string format_vector(const Vec& v);

}  // namespace zprmod
