#ifndef TRIPOTENT_MATRIX_JSON_HPP
#define TRIPOTENT_MATRIX_JSON_HPP

#include <string>

#include "tripotent/matrix.hpp"

namespace tripotent {

// Wire format: {"rows": R, "cols": C, "re": [[...]], "im": [[...]]} with
// nested R x C arrays of finite doubles. The writer emits 17 significant
// digits so a write/read round trip reproduces every entry bit-exactly.
std::string matrix_to_json(const ComplexMatrix& a);

// Throws InvalidInputError on malformed text, wrong field types, ragged or
// mis-sized arrays, and non-finite values.
ComplexMatrix matrix_from_json(const std::string& text);

// Reads a whole file and parses it. Throws InvalidInputError if the file
// cannot be opened.
ComplexMatrix load_matrix(const std::string& path);

} // namespace tripotent

#endif
