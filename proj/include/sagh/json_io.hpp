#pragma once

#include <string>
#include <vector>

#include "sagh/fn_element.hpp"
#include "sagh/projection.hpp"
#include "sagh/states.hpp"
#include "sagh/sym_matrix.hpp"
#include "sagh/tribe.hpp"

namespace sagh {

/// Decimal with 17 significant digits; the fixed formatting for every
/// CLI-facing real.
std::string format_real(double v);

/// {"dim": n, "entries": [[...], ...], "tol": t}; tol defaults when absent.
/// A positive tol_override replaces the file's tolerance before validation.
SymMatrix parse_matrix_json(const std::string& text, double tol_override = 0.0);
SymMatrix load_matrix_file(const std::string& path, double tol_override = 0.0);
std::string matrix_to_json(const SymMatrix& m);

/// Matrix schema plus "rank"; refuses inputs whose idempotence defect
/// exceeds tol.
Projection parse_projection_json(const std::string& text);
Projection load_projection_file(const std::string& path);
std::string projection_to_json(const Projection& p);

/// {"space": ["x1", ...], "values": [...]}
FnElement parse_fn_element_json(const std::string& text);
std::string fn_element_to_json(const FnElement& f);

/// Function-element schema plus "set", the labels carrying value 1. On
/// parse the set must match the support.
CharElement parse_char_element_json(const std::string& text);
std::string char_element_to_json(const CharElement& e);

/// {"kind":"trace","w":matrix} or {"kind":"weights","space":[...],"p":[...]}
State parse_state_json(const std::string& text);
State load_state_file(const std::string& path);

/// {"atoms": [...], "null": [...]}
GroundSet parse_ground_set_json(const std::string& text);
GroundSet load_ground_set_file(const std::string& path);

/// Function on a ground set as a label -> value map.
GroundFunction parse_ground_function_json(const GroundSet& ground, const std::string& text);

/// {"intervals": [[lo, hi], ...], "points": [...]} with "-inf"/"inf"
/// sentinels for unbounded endpoints.
BorelSetExpr parse_borel_json(const std::string& text);

std::string read_text_file(const std::string& path);

} // namespace sagh
