#include "conformal/report.hpp"

#include <cstdio>
#include <sstream>

namespace conformal {

namespace {

// locale-independent float rendering with 17 significant digits; the same
// double always produces the same bytes
std::string format_double(double v) {
  if (v == 0.0)
    v = 0.0; // fold negative zero
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out;
}

std::string json_matrix(const Eigen::MatrixXd& m) {
  std::string out = "[";
  for (int r = 0; r < m.rows(); ++r) {
    if (r > 0)
      out += ",";
    out += "[";
    for (int c = 0; c < m.cols(); ++c) {
      if (c > 0)
        out += ",";
      out += format_double(m(r, c));
    }
    out += "]";
  }
  out += "]";
  return out;
}

std::string causal_list_json(const std::vector<CausalType>& types) {
  std::string out = "[";
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (i > 0)
      out += ",";
    out += std::string("\"") + to_string(types[i]) + "\"";
  }
  out += "]";
  return out;
}

} // namespace

std::string render_json(const AnalysisReport& report, ReportSection sections) {
  std::ostringstream os;
  os << "{";
  os << "\"algebra\":{\"name\":\"" << escape(report.algebra_name)
     << "\",\"dim\":" << report.dim << "}";

  if (has_section(sections, ReportSection::Connection)) {
    os << ",\"frame\":{\"theta\":" << json_matrix(report.theta) << "}";
    os << ",\"lambda\":" << format_double(report.lambda);
    os << ",\"residuals\":{"
       << "\"jacobi\":" << format_double(report.residuals.jacobi)
       << ",\"torsion\":" << format_double(report.residuals.torsion)
       << ",\"trace_free\":" << format_double(report.residuals.trace_free)
       << ",\"gamma0_jacobi\":" << format_double(report.residuals.gamma0_jacobi)
       << ",\"normal_extension\":" << format_double(report.residuals.normal_extension)
       << ",\"weyl_cross_check\":" << format_double(report.residuals.weyl_cross_check)
       << "}";
  }

  if (has_section(sections, ReportSection::Riemannian)) {
    os << ",\"riemannian\":{"
       << "\"scal\":" << format_double(report.riemannian.scal)
       << ",\"einstein_residual\":" << format_double(report.riemannian.einstein_residual)
       << ",\"sectional_range\":[" << format_double(report.riemannian.sectional_min)
       << "," << format_double(report.riemannian.sectional_max) << "]}";
  }

  if (has_section(sections, ReportSection::Curvature)) {
    os << ",\"curvature\":{"
       << "\"dim_q\":" << report.curvature.dim_q
       << ",\"kappa_minus1_max\":" << format_double(report.curvature.kappa_minus1_max)
       << ",\"kappa1_max\":" << format_double(report.curvature.kappa1_max) << "}";
  }

  if (has_section(sections, ReportSection::Holonomy)) {
    os << ",\"holonomy\":{"
       << "\"algebra_dim\":" << report.holonomy.algebra_dim
       << ",\"closed_under_bracket\":"
       << (report.holonomy.closed_under_bracket ? "true" : "false")
       << ",\"stabilized_tractor_dim\":" << report.holonomy.stabilized_tractor_dim
       << ",\"tractor_causal_types\":" << causal_list_json(report.holonomy.tractor_causal_types)
       << ",\"killing_signature\":[" << report.holonomy.killing_signature[0] << ","
       << report.holonomy.killing_signature[1] << ","
       << report.holonomy.killing_signature[2] << "]"
       << ",\"candidate_name\":";
    if (report.holonomy.candidate_name.empty())
      os << "null";
    else
      os << "\"" << escape(report.holonomy.candidate_name) << "\"";
    os << "}";
    os << ",\"riemannian_holonomy_dim\":" << report.riemannian_holonomy_dim;
  }

  os << "}";
  return os.str();
}

std::string render_text(const AnalysisReport& report, ReportSection sections) {
  std::ostringstream os;
  os << "algebra                 " << report.algebra_name << "\n";
  os << "dim                     " << report.dim << "\n";

  if (has_section(sections, ReportSection::Connection)) {
    os << "lambda                  " << format_double(report.lambda) << "\n";
    os << "frame theta (" << report.theta.rows() << "x" << report.theta.cols() << ")\n";
    for (int r = 0; r < report.theta.rows(); ++r) {
      os << " ";
      for (int c = 0; c < report.theta.cols(); ++c)
        os << " " << format_double(report.theta(r, c));
      os << "\n";
    }
    os << "residuals\n";
    os << "  jacobi                " << format_double(report.residuals.jacobi) << "\n";
    os << "  torsion               " << format_double(report.residuals.torsion) << "\n";
    os << "  trace_free            " << format_double(report.residuals.trace_free) << "\n";
    os << "  gamma0_jacobi         " << format_double(report.residuals.gamma0_jacobi) << "\n";
    os << "  normal_extension      " << format_double(report.residuals.normal_extension)
       << "\n";
    os << "  weyl_cross_check      " << format_double(report.residuals.weyl_cross_check)
       << "\n";
  }

  if (has_section(sections, ReportSection::Riemannian)) {
    os << "riemannian\n";
    os << "  scal                  " << format_double(report.riemannian.scal) << "\n";
    os << "  einstein_residual     " << format_double(report.riemannian.einstein_residual)
       << "\n";
    os << "  sectional_range       [" << format_double(report.riemannian.sectional_min)
       << ", " << format_double(report.riemannian.sectional_max) << "]\n";
  }

  if (has_section(sections, ReportSection::Curvature)) {
    os << "curvature\n";
    os << "  dim_q                 " << report.curvature.dim_q << "\n";
    os << "  kappa_minus1_max      " << format_double(report.curvature.kappa_minus1_max)
       << "\n";
    os << "  kappa1_max            " << format_double(report.curvature.kappa1_max) << "\n";
  }

  if (has_section(sections, ReportSection::Holonomy)) {
    os << "holonomy\n";
    os << "  algebra_dim           " << report.holonomy.algebra_dim << "\n";
    os << "  closed_under_bracket  "
       << (report.holonomy.closed_under_bracket ? "true" : "false") << "\n";
    os << "  stabilized_tractor_dim " << report.holonomy.stabilized_tractor_dim << "\n";
    os << "  tractor_causal_types  ";
    for (std::size_t i = 0; i < report.holonomy.tractor_causal_types.size(); ++i) {
      if (i > 0)
        os << ", ";
      os << to_string(report.holonomy.tractor_causal_types[i]);
    }
    os << "\n";
    os << "  killing_signature     (" << report.holonomy.killing_signature[0] << ", "
       << report.holonomy.killing_signature[1] << ", "
       << report.holonomy.killing_signature[2] << ")\n";
    os << "  candidate_name        "
       << (report.holonomy.candidate_name.empty() ? "(none)" : report.holonomy.candidate_name)
       << "\n";
    os << "riemannian_holonomy_dim " << report.riemannian_holonomy_dim << "\n";
  }

  return os.str();
}

} // namespace conformal
