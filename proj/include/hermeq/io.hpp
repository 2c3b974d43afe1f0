#pragma once

#include <string>

#include "hermeq/matrix.hpp"

namespace hermeq {

// Matrix files are JSON objects {"rows": r, "cols": c, "entries": [...]}
// where entries is the row-major list of [re, im] pairs and each part is an
// exact rational string "p" or "p/q". Anything else — wrong counts, zero
// denominators, non-string parts, junk text — raises ParseError.
Matrix parseMatrixJson(const std::string& text);
Matrix loadMatrixFile(const std::string& path);

// Canonical text form: two-space-indented JSON with alphabetical keys and a
// trailing newline. parse(serialize(M)) == M for every matrix, and
// serialize(parse(f)) is byte-identical for files already in this form.
std::string serializeMatrix(const Matrix& m);

std::string readFileBytes(const std::string& path);  // ParseError when unreadable
void writeFileBytes(const std::string& path, const std::string& bytes);

// FNV-1a 64-bit content digest, rendered "fnv1a64:<16 hex digits>"; used to
// pin report inputs without pulling in a crypto dependency.
std::string fnv1a64(const std::string& bytes);

}  // namespace hermeq
