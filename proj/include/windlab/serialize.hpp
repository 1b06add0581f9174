#pragma once

#include <string>

#include <json.hpp>

#include "windlab/coloring.hpp"
#include "windlab/invariant.hpp"
#include "windlab/laurent.hpp"
#include "windlab/quotient.hpp"
#include "windlab/subgroup.hpp"

namespace windlab {

using nlohmann::json;

/// [[i, j, c], ...] in (i, j)-lexicographic order.  Coefficients that do not
/// fit a 64-bit integer are emitted as decimal strings.
inline json poly_to_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) {
    json triple = json::array({e.first, e.second});
    if (c.fits_ll())
      triple.push_back(c.to_ll());
    else
      triple.push_back(c.to_string());
    out.push_back(std::move(triple));
  }
  return out;
}

inline json coloring_to_json(const TwoColoring& c) {
  json out = json::array();
  for (CellColor col : c.colors()) out.push_back(col == CellColor::black ? "B" : "W");
  return out;
}

inline json coloring_to_json(const PGoodColoring& c) {
  json out = json::array();
  for (long long v : c.colors()) out.push_back(v);
  return out;
}

inline json spec_to_json(const InvariantSpec& spec) {
  json out{{"n", spec.n},
           {"phi", {spec.phi_x, spec.phi_y}},
           {"translate", {spec.translate.first, spec.translate.second}}};
  if (const auto* two = std::get_if<TwoColoring>(&spec.coloring)) {
    out["coloring"] = {{"type", "good"}, {"colors", coloring_to_json(*two)}};
  } else {
    const auto& pg = std::get<PGoodColoring>(spec.coloring);
    out["coloring"] = {{"type", "p-good"}, {"p", pg.p()}, {"colors", coloring_to_json(pg)}};
  }
  return out;
}

inline json invariant_report_json(const InvariantSpec& spec, long long value) {
  return {{"spec", spec_to_json(spec)}, {"value", value}, {"modulus", spec.n}};
}

inline json omega_to_json(const OmegaVector& o) {
  return {{"n", o.n}, {"h", o.h}, {"v", o.v}};
}

inline json quotient_summary_json(const QuotientSummary& s) {
  return {{"n", s.n},
          {"relators", s.relators},
          {"elementary_divisors", s.elementary_divisors},
          {"finite", s.finite},
          {"order", s.order.to_string()},
          {"order_factored", s.factored.to_string()}};
}

inline json order_json(const SubgroupOrderResult& r) {
  return {{"order", r.order.to_string()}, {"order_factored", r.factored.to_string()}};
}

inline json bounds_json(const ClosedFormBounds& b) {
  json entries = json::array();
  for (const auto& e : b.entries) {
    json row{{"name", e.name}, {"formula", e.formula}, {"applicable", e.applicable}};
    if (e.applicable && !e.value.is_zero()) row["value"] = e.value.to_string();
    if (!e.note.empty()) row["note"] = e.note;
    entries.push_back(std::move(row));
  }
  return {{"d", b.d}, {"n", b.n}, {"p", b.p}, {"k", b.k}, {"bounds", entries}};
}

inline json restricted_burnside_json(const RestrictedBurnsideReport& r) {
  return {{"omega_z", r.omega_z},
          {"conjugate_tuples", r.conjugate_tuples},
          {"tuples_match_published", r.tuples_match_published},
          {"subgroup_order", r.subgroup_order.to_string()},
          {"subgroup_order_log2", r.subgroup_order_log2},
          {"published_subgroup_order_log2", r.published_subgroup_order_log2},
          {"subgroup_order_matches_published", r.subgroup_order_matches_published},
          {"schreier_rank", r.schreier_rank},
          {"base_exponent", r.base_exponent},
          {"total_exponent", r.total_exponent},
          {"published_total_exponent", r.published_total_exponent},
          {"bound_factored", "2^" + std::to_string(r.total_exponent)}};
}

inline json order_bound_image_json(const OrderBoundImageReport& r) {
  return {{"n", r.n},
          {"family_size", r.family_size},
          {"image_order", r.image_order.to_string()},
          {"lower_bound", r.lower_bound.to_string()},
          {"meets_bound", r.meets_bound}};
}

}  // namespace windlab
