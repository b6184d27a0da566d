#include "sl2rep/json_io.hpp"

#include <cmath>
#include <cstdio>

#include "sl2rep/errors.hpp"

namespace sl2rep {

std::string report_schema_version() { return "1.0.0"; }

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const Mat2& m) {
  return json::array({to_json(m.a), to_json(m.b), to_json(m.c), to_json(m.d)});
}

json to_json(const Sl2Vector& v) {
  return json::array({to_json(v.h), to_json(v.e), to_json(v.f)});
}

json to_json(const Word& w, const std::vector<std::string>& names) {
  return word_to_string(w, names);
}

json to_json(const Presentation& p) {
  json relators = json::array();
  for (const Word& r : p.relators) relators.push_back(word_to_string(r, p.generator_names));
  return {{"generators", p.generator_names},
          {"relators", relators},
          {"text", presentation_to_string(p)}};
}

json to_json(const AbelianizationResult& a) {
  return {{"invariant_factors", a.invariant_factors}, {"rank_free", a.rank_free}};
}

json to_json(const Representation& rho) { return representation_to_json(rho); }

json representation_to_json(const Representation& rho) {
  json images = json::array();
  for (const SL2Element& g : rho.images) images.push_back(to_json(g.m));
  return {{"presentation", presentation_to_string(rho.presentation)},
          {"images", images},
          {"residual", rho.residual}};
}

json to_json(const CharacterSample& s, const std::vector<std::string>& names) {
  json words = json::array(), traces = json::array();
  for (const Word& w : s.words) words.push_back(word_to_string(w, names));
  for (cplx t : s.traces) traces.push_back(to_json(t));
  return {{"words", words}, {"traces", traces}};
}

json to_json(const RankDecision& d) {
  json j{{"rank", d.rank},
         {"singular_values", d.singular_values},
         {"ill_conditioned", d.ill_conditioned}};
  if (std::isfinite(d.gap))
    j["gap"] = d.gap;
  else
    j["gap"] = "inf";
  return j;
}

json to_json(const CohomologyReport& r) {
  return {{"dim_Z1", r.dim_Z1},
          {"dim_B1", r.dim_B1},
          {"dim_H1", r.dim_H1},
          {"dim_centralizer", r.dim_centralizer},
          {"cocycle_rank", to_json(r.cocycle_rank)},
          {"coboundary_rank", to_json(r.coboundary_rank)}};
}

json to_json(const DriftReport& r) {
  return {{"lengths", r.lengths},
          {"min_drift", r.min_drift},
          {"mean_drift", r.mean_drift},
          {"element_counts", r.element_counts}};
}

json to_json(const Verdict& v) {
  json j{{"verdict", to_string(v.kind)}, {"rationale", v.rationale}};
  if (v.hermitian_certificate) j["hermitian_certificate"] = to_json(*v.hermitian_certificate);
  if (v.conjugacy_certificate) j["conjugacy_certificate"] = to_json(v.conjugacy_certificate->m);
  if (v.drift) j["drift"] = to_json(*v.drift);
  return j;
}

namespace {

cplx cplx_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw InvalidInputError("expected complex number as [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Mat2 mat2_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4)
    throw InvalidInputError("expected matrix as row-major array of 4 [re, im] entries");
  return {cplx_from_json(j[0]), cplx_from_json(j[1]), cplx_from_json(j[2]),
          cplx_from_json(j[3])};
}

}  // namespace

Representation representation_from_json(const json& j) {
  if (!j.contains("presentation") || !j.contains("images"))
    throw InvalidInputError("representation JSON needs 'presentation' and 'images'");
  Presentation p = parse_presentation(j["presentation"].get<std::string>());
  std::vector<SL2Element> images;
  for (const json& m : j["images"]) images.push_back(make_sl2(mat2_from_json(m), 1e-6));
  return make_representation(std::move(p), std::move(images));
}

namespace {

void dump_value(const json& j, std::string& out, int depth);

void indent(std::string& out, int depth) { out.append(static_cast<std::size_t>(2 * depth), ' '); }

void dump_value(const json& j, std::string& out, int depth) {
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        indent(out, depth + 1);
        out += json(it.key()).dump();
        out += ": ";
        dump_value(it.value(), out, depth + 1);
      }
      out += "\n";
      indent(out, depth);
      out += "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const json& e : j) {
        if (!first) out += ",\n";
        first = false;
        indent(out, depth + 1);
        dump_value(e, out, depth + 1);
      }
      out += "\n";
      indent(out, depth);
      out += "]";
      return;
    }
    case json::value_t::number_float: {
      double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string canonical_dump(const json& j) {
  std::string out;
  dump_value(j, out, 0);
  out += "\n";
  return out;
}

}  // namespace sl2rep
