#pragma once

// JSON import/export for tensors, diagram sums, Kirby colors, and surface
// presentations. Term order follows the in-memory canonical order (exponent
// vectors lexicographically; diagrams by matching then dotting), so exports
// are deterministic and round-trip exactly through the scalar text format.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "frobskein/dtl.hpp"
#include "frobskein/frobenius.hpp"
#include "frobskein/solidtorus.hpp"
#include "frobskein/surfaces.hpp"

namespace frobskein {

using Json = nlohmann::ordered_json;

// --- algebras --------------------------------------------------------------

inline Json algebra_to_json(const AlgebraPtr& A) {
  Json j;
  if (A->name().rfind("beta", 0) == 0) {
    j["name"] = "beta";
    j["N"] = A->rank();
  } else {
    j["name"] = A->name();
    if (A->name() == "trivial") j["u"] = A->counit(A->unit()).render();
  }
  return j;
}

inline AlgebraPtr algebra_from_json(const Json& j) {
  if (j.is_string()) return builtin_algebra(j.get<std::string>());
  const std::string name = j.at("name").get<std::string>();
  Scalar u = Scalar(1);
  std::size_t N = 2;
  if (j.contains("u")) u = Scalar::parse(j.at("u").get<std::string>());
  if (j.contains("N")) N = j.at("N").get<std::size_t>();
  return builtin_algebra(name, u, N);
}

// --- tensors ---------------------------------------------------------------

inline Json tensor_to_json(const TensorElement& t) {
  Json j;
  j["algebra"] = algebra_to_json(t.algebra());
  j["slots"] = t.slots();
  Json terms = Json::array();
  for (const auto& [e, c] : t.terms()) {
    Json term;
    term["exps"] = std::vector<int>(e.begin(), e.end());
    term["coeff"] = c.render();
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

inline TensorElement tensor_from_json(const Json& j) {
  const AlgebraPtr A = algebra_from_json(j.at("algebra"));
  TensorElement t(A, j.at("slots").get<std::size_t>());
  for (const auto& term : j.at("terms")) {
    TensorElement::Exps e;
    for (const auto& v : term.at("exps"))
      e.push_back(static_cast<std::uint8_t>(v.get<int>()));
    t.add_term(e, Scalar::parse(term.at("coeff").get<std::string>()));
  }
  return t;
}

// --- diagram sums ----------------------------------------------------------

inline Json diagram_sum_to_json(const DiagramSum& d) {
  Json j;
  j["algebra"] = algebra_to_json(d.algebra());
  j["bottom"] = d.bottom();
  j["top"] = d.top();
  Json terms = Json::array();
  for (const auto& [diagram, coeff] : d.terms()) {
    Json term;
    term["diagram"] = diagram.render();
    term["coeff"] = coeff.render();
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

inline DiagramSum diagram_sum_from_json(const Json& j) {
  const AlgebraPtr A = algebra_from_json(j.at("algebra"));
  DiagramSum d(A, j.at("bottom").get<int>(), j.at("top").get<int>());
  for (const auto& term : j.at("terms"))
    d.accumulate(Diagram::parse(term.at("diagram").get<std::string>()),
                 Scalar::parse(term.at("coeff").get<std::string>()));
  return d;
}

// --- Kirby colors ----------------------------------------------------------

/// The Kirby color stratified by the dot weight |z|.
inline Json kirby_to_json(const KirbyColor& w) {
  Json j;
  j["n"] = w.n;
  std::vector<Json> strata(static_cast<std::size_t>(w.n) + 1);
  for (std::size_t k = 0; k < strata.size(); ++k) {
    strata[k]["weight"] = 2 * k;
    strata[k]["terms"] = Json::array();
  }
  for (const auto& [e, c] : w.tensor.terms()) {
    int weight = 0;
    for (auto b : e) weight += b;
    Json term;
    term["exps"] = std::vector<int>(e.begin(), e.end());
    term["coeff"] = c.render();
    strata[static_cast<std::size_t>(weight / 2)]["terms"].push_back(
        std::move(term));
  }
  j["strata"] = strata;
  if (w.dtl) {
    Json dtl = Json::array();
    for (const auto& [diagram, coeff] : w.dtl->terms()) {
      Json term;
      term["diagram"] = diagram.render();
      term["coeff"] = coeff.render();
      dtl.push_back(std::move(term));
    }
    j["dtl"] = std::move(dtl);
  }
  return j;
}

inline KirbyColor kirby_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  const AlgebraPtr A = builtin_alpha();
  TensorElement t(A, 2 * static_cast<std::size_t>(n));
  for (const auto& stratum : j.at("strata"))
    for (const auto& term : stratum.at("terms")) {
      TensorElement::Exps e;
      for (const auto& v : term.at("exps"))
        e.push_back(static_cast<std::uint8_t>(v.get<int>()));
      t.add_term(e, Scalar::parse(term.at("coeff").get<std::string>()));
    }
  KirbyColor w(n, std::move(t));
  if (j.contains("dtl")) {
    DiagramSum d(A, 0, 2 * n);
    for (const auto& term : j.at("dtl"))
      d.accumulate(Diagram::parse(term.at("diagram").get<std::string>()),
                   Scalar::parse(term.at("coeff").get<std::string>()));
    w.dtl = std::move(d);
  }
  return w;
}

// --- surface presentations ---------------------------------------------------

inline Json surface_to_json(const SurfacePresentation& S) {
  Json j;
  j["algebra"] = algebra_to_json(S.algebra());
  Json comps = Json::array();
  for (const auto& c : S.components()) {
    Json comp;
    comp["chi"] = c.euler_char();
    comp["boundary"] = c.boundary_count();
    comp["orientable"] = c.orientable();
    comp["label"] = c.label().render();
    comp["punctures"] = c.punctures();
    comps.push_back(std::move(comp));
  }
  j["components"] = std::move(comps);
  j["boundary_slots"] = S.boundary_slots();
  j["puncture_slots"] = S.puncture_slots();
  return j;
}

inline SurfacePresentation surface_from_json(const Json& j) {
  const AlgebraPtr A = j.contains("algebra")
                           ? algebra_from_json(j.at("algebra"))
                           : builtin_alpha();
  std::vector<SurfaceComponent> comps;
  for (const auto& comp : j.at("components")) {
    const int punctures =
        comp.contains("punctures") ? comp.at("punctures").get<int>() : 0;
    comps.push_back(SurfaceComponent(
        comp.at("chi").get<int>(), comp.at("boundary").get<int>(),
        comp.at("orientable").get<bool>(),
        parse_element(A, comp.at("label").get<std::string>()), punctures));
  }
  std::optional<SurfacePresentation::SlotMap> bmap, pmap;
  if (j.contains("boundary_slots"))
    bmap = j.at("boundary_slots").get<SurfacePresentation::SlotMap>();
  if (j.contains("puncture_slots"))
    pmap = j.at("puncture_slots").get<SurfacePresentation::SlotMap>();
  return SurfacePresentation(A, std::move(comps), std::move(bmap),
                             std::move(pmap));
}

}  // namespace frobskein
