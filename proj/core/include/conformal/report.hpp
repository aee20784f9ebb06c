#pragma once

#include <string>

#include "conformal/analysis.hpp"

namespace conformal {

/// Report section filter, from the CLI's --report flag.
enum class ReportSection : unsigned {
  Connection = 1u << 0,
  Curvature = 1u << 1,
  Riemannian = 1u << 2,
  Holonomy = 1u << 3,
  All = (1u << 4) - 1,
};

inline ReportSection operator|(ReportSection a, ReportSection b) {
  return static_cast<ReportSection>(static_cast<unsigned>(a) | static_cast<unsigned>(b));
}
inline bool has_section(ReportSection set, ReportSection s) {
  return (static_cast<unsigned>(set) & static_cast<unsigned>(s)) != 0;
}

/// JSON rendering with a fixed field order and 17-significant-digit floats;
/// two renderings of the same report are byte-identical.
std::string render_json(const AnalysisReport& report, ReportSection sections = ReportSection::All);

/// Fixed-order human-readable table.
std::string render_text(const AnalysisReport& report, ReportSection sections = ReportSection::All);

} // namespace conformal
