#include "goeritz/serialize.hpp"

namespace goeritz {

namespace {

Json window_json(const std::optional<TypeWindow>& w) {
  if (!w) return nullptr;
  return Json{{"m", w->m}, {"r", w->r}};
}

Json orientation_json(const Orientation& o) {
  return Json{{"swap", o.swap}, {"sx", o.sx}, {"sy", o.sy}};
}

}  // namespace

Json to_json(const PrimitivityVerdict& v) {
  Json j;
  j["isPrimitive"] = v.is_primitive;
  j["isPrimitivePower"] = v.is_primitive_power;
  j["powerRoot"] = v.power_root ? Json(format_word(*v.power_root)) : Json(nullptr);
  j["powerExponent"] = v.power_exponent;
  j["minimalLength"] = v.minimal_length;
  Json trace = Json::array();
  for (const TraceStep& s : v.reduction_trace) {
    trace.push_back({{"move", s.move_id}, {"name", whitehead_moves()[static_cast<std::size_t>(s.move_id)].name},
                     {"power", s.power}, {"length", s.length}});
  }
  j["reductionTrace"] = std::move(trace);
  return j;
}

Json to_json(const Obstruction& o) {
  Json j;
  j["rule"] = rule_name(o.rule);
  if (o.rule == Rule::KEY1) j["clause"] = o.clause;
  j["orientation"] = orientation_json(o.orientation);
  Json spans = Json::array();
  for (const LetterSpan& s : o.witness) spans.push_back({{"start", s.start}, {"length", s.length}});
  j["witness"] = std::move(spans);
  j["values"] = o.values;
  return j;
}

Json lens_report(const LensSpace& L) {
  const LensInvariants inv = invariants(L);
  const DiffPi1Report pi = pi1_diff(L);
  Json j;
  j["p"] = L.p();
  j["q"] = L.q();
  j["qPrime"] = inv.q_prime;
  j["qSquaredIsOne"] = inv.q_squared_is_one;
  j["classification"] = to_string(inv.classification);
  j["perType"] = {{"q", window_json(inv.window_q)}, {"qPrime", window_json(inv.window_q_prime)}};
  j["pi1Diff"] = to_string(pi.group);
  j["smaleConditional"] = pi.smale_conditional;
  return j;
}

Json to_json(const Shell& s) {
  Json j;
  j["p"] = s.p;
  j["qbar"] = s.qbar;
  j["center"] = format_word(s.center);
  Json words = Json::array();
  for (std::size_t k = 0; k < s.words.size(); ++k) {
    const bool prim = is_primitive(CyclicWord(s.words[k])).is_primitive;
    words.push_back({{"k", k}, {"word", format_word(s.words[k])}, {"primitive", prim}});
  }
  j["words"] = std::move(words);
  j["primitiveIndices"] = s.primitive_indices;
  return j;
}

Json to_json(const Bridge& b) {
  const EndHomology h = bridge_end_homology(b);
  Json j;
  j["qbar"] = b.qbar;
  j["m"] = b.m;
  j["r"] = b.r;
  j["w"] = b.w;
  j["dWord"] = format_word(b.d_word);
  j["simplexCount"] = b.simplex_count;
  j["homology"] = {{"E", h.class_e}, {"D", h.class_d}};
  j["corridor"] = b.corridor;
  j["tie"] = b.tie;
  return j;
}

Json to_json(const GoeritzResult& g) {
  if (const auto* stub = std::get_if<ConnectedCaseStub>(&g)) {
    return Json{{"connectedCase", true}, {"manifold", stub->manifold}, {"note", stub->note}};
  }
  const GroupPresentation& gp = std::get<GroupPresentation>(g);
  Json j = Json::parse(export_json(gp));
  j["abelianization"] = to_string(abelianization(gp));
  return j;
}

Json to_json(const HeegaardSpaceReport& r) {
  Json j;
  j["manifold"] = r.manifold;
  j["sequence"] = r.sequence;
  j["kernel"] = to_string(r.kernel.group);
  j["smaleConditional"] = r.kernel.smale_conditional;
  j["quotientDescription"] = r.quotient_description;
  j["quotient"] = to_json(r.quotient);
  j["conclusion"] = r.conclusion;
  return j;
}

}  // namespace goeritz
