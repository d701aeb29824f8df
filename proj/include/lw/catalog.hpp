#ifndef LW_CATALOG_HPP
#define LW_CATALOG_HPP

#include <vector>

#include "lw/elastica.hpp"
#include "lw/io.hpp"

// The classification catalog of rotational sigma-model solutions: one row
// per (symmetry group, surface causal character) combination, carrying the
// generating-curve model and family parameters the library implements.

namespace lw {

struct CatalogRow {
  const char* group;
  const char* axis;
  const char* orbits;
  const char* surface_character;
  const char* generating_curve;
  ModelKind model;
  int eps1;  // tangent causal sign of the generating curve in its model
  int eps2;  // equation sign of the cn family
};

inline const std::vector<CatalogRow>& solution_catalog() {
  static const std::vector<CatalogRow> rows = {
      {"A1", "time-like", "circles", "Riemannian",
       "space-like free elastic curve in the anti de Sitter plane", ModelKind::AdS_A1,
       +1, -1},
      {"A1", "time-like", "circles", "Lorentzian",
       "time-like free elastic curve in the anti de Sitter plane", ModelKind::AdS_A1,
       -1, +1},
      {"A2", "space-like", "hyperbolas", "Riemannian",
       "space-like free elastic curve in the de Sitter plane", ModelKind::DeSitter_R,
       +1, +1},
      {"A2", "space-like", "hyperbolas", "Lorentzian",
       "time-like free elastic curve in the de Sitter plane", ModelKind::DeSitter_R,
       -1, -1},
      {"A2", "space-like", "hyperbolas", "Lorentzian",
       "free elastic curve in the hyperbolic plane", ModelKind::Hyperbolic_Q, +1, -1},
      {"A3", "light-like", "parabolas", "Riemannian",
       "space-like free elastic curve in the anti de Sitter plane", ModelKind::AdS_A3,
       +1, -1},
      {"A3", "light-like", "parabolas", "Lorentzian",
       "time-like free elastic curve in the anti de Sitter plane", ModelKind::AdS_A3,
       -1, +1},
  };
  return rows;
}

inline Json catalog_json() {
  Json::Array arr;
  for (const auto& row : solution_catalog()) {
    Json j = Json::object();
    HalfPlaneModel m{row.model, HalfSign::Plus};
    j.set("group", row.group)
        .set("axis", row.axis)
        .set("orbits", row.orbits)
        .set("surface_character", row.surface_character)
        .set("generating_curve", row.generating_curve)
        .set("model", m.name())
        .set("eps1", static_cast<Real>(row.eps1))
        .set("eps2", static_cast<Real>(row.eps2));
    arr.push_back(std::move(j));
  }
  Json out = Json::object();
  out.set("rows", Json(std::move(arr)));
  return out;
}

}  // namespace lw

#endif  // LW_CATALOG_HPP
