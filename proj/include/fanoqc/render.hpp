#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "fanoqc/gw.hpp"

namespace fanoqc::render {

/// One line per row: "[entry, entry, ...]" with canonical polynomial entries.
std::string matrix_text(const PolyMatrix& m);
std::string matrix_latex(const PolyMatrix& m);
nlohmann::ordered_json matrix_json(const PolyMatrix& m);

std::string poly_latex(const QHPoly& p);
std::string operator_latex(const DiffOperator& op);

std::string gw_table_text(const GWTable& t);
std::string gw_table_latex(const GWTable& t);
nlohmann::ordered_json gw_table_json(const GWTable& t);
/// Inverse of gw_table_json (schema round-trip).
GWTable gw_table_from_json(const nlohmann::ordered_json& j, bool allow_small = false);

/// "Q_3^1 = diag_5(120)" lines in solve order, then the assembled Q_0.
std::string qsystem_text(const QSystem& s);
std::string qsystem_latex(const QSystem& s);
nlohmann::ordered_json qsystem_json(const QSystem& s);

}  // namespace fanoqc::render
