#pragma once

#include <stdexcept>
#include <string>

namespace vrglue {

enum class Errc {
  invalid_input,
  asymmetric_matrix,
  negative_distance,
  nonzero_diagonal,
  triangle_violation,
  disconnected_graph,
  non_isometric_a,
  empty_a,
  unknown_basepoint,
  empty_y0,
  too_few_points,
  unknown_landmark,
  vertex_clash,
  simplex_not_in_complex,
  not_a_free_face,
  hypothesis_violation,
  sigma_not_collapsible,
  precond_diameter_exceeded,
  subgraph_not_in_graph,
  not_a_path,
  not_a_gluing,
  hypothesis_failed,
  dimension_cap_too_low,
  invalid_filtration,
  inadmissible_step,
  recipe_not_admissible,
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_input: return "InvalidInput";
    case Errc::asymmetric_matrix: return "AsymmetricMatrix";
    case Errc::negative_distance: return "NegativeDistance";
    case Errc::nonzero_diagonal: return "NonzeroDiagonal";
    case Errc::triangle_violation: return "TriangleViolation";
    case Errc::disconnected_graph: return "DisconnectedGraph";
    case Errc::non_isometric_a: return "NonIsometricA";
    case Errc::empty_a: return "EmptyA";
    case Errc::unknown_basepoint: return "UnknownBasepoint";
    case Errc::empty_y0: return "EmptyY0";
    case Errc::too_few_points: return "TooFewPoints";
    case Errc::unknown_landmark: return "UnknownLandmark";
    case Errc::vertex_clash: return "VertexClash";
    case Errc::simplex_not_in_complex: return "SimplexNotInComplex";
    case Errc::not_a_free_face: return "NotAFreeFace";
    case Errc::hypothesis_violation: return "HypothesisViolation";
    case Errc::sigma_not_collapsible: return "SigmaNotCollapsible";
    case Errc::precond_diameter_exceeded: return "PrecondDiameterExceeded";
    case Errc::subgraph_not_in_graph: return "SubgraphNotInGraph";
    case Errc::not_a_path: return "NotAPath";
    case Errc::not_a_gluing: return "NotAGluing";
    case Errc::hypothesis_failed: return "HypothesisFailed";
    case Errc::dimension_cap_too_low: return "DimensionCapTooLow";
    case Errc::invalid_filtration: return "InvalidFiltration";
    case Errc::inadmissible_step: return "InadmissibleStep";
    case Errc::recipe_not_admissible: return "RecipeNotAdmissible";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace vrglue
