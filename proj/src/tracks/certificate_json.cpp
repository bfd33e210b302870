#include "tic/certificate_json.hpp"

namespace tic {

Json to_json(const Claim& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["expr"] = format(c.expr);
  if (c.domain) j["domain"] = c.domain->str();
  if (c.point) j["point"] = c.point->str();
  if (c.limit) j["limit"] = c.limit->str();
  return j;
}

Json to_json(const Witness& w) {
  Json j;
  j["point"] = to_json(w.point);
  j["delta"] = to_json(w.delta);
  j["increment"] = to_json(w.increment);
  j["magnitude"] = to_string(w.magnitude);
  j["st"] = w.standard_part ? Json(w.standard_part->str()) : Json(nullptr);
  return j;
}

Json to_json(const LimitResult& r) {
  Json j;
  switch (r.tag) {
    case LimitResult::Tag::Value: j["value"] = r.value->str(); break;
    case LimitResult::Tag::Diverges: j["value"] = "diverges"; break;
    case LimitResult::Tag::Undetermined: j["value"] = "undetermined"; break;
  }
  Json probes = Json::array();
  for (const LimitProbe& p : r.probes) {
    Json pj;
    pj["index"] = to_json(p.index);
    pj["magnitude"] = to_string(p.magnitude);
    pj["st"] = p.standard_part ? Json(p.standard_part->str()) : Json(nullptr);
    probes.push_back(std::move(pj));
  }
  j["probes"] = std::move(probes);
  j["diagnostics"] = r.diagnostics;
  return j;
}

namespace {

Json violations_json(const Certificate& c) {
  const Falsification& f = *c.falsification;
  Json j;
  j["epsilon"] = f.epsilon.str();
  Json list = Json::array();
  for (const Violation& v : f.violations) {
    Json vj;
    if (c.claim.kind == ClaimKind::LimitOfSequence) {
      vj["n"] = v.x.str();
    } else {
      vj["delta"] = v.radius.str();
      vj["x"] = v.x.str();
      if (v.x_prime) vj["x_prime"] = v.x_prime->str();
    }
    vj["gap"] = v.gap.str();
    list.push_back(std::move(vj));
  }
  j["violations"] = std::move(list);
  return j;
}

}  // namespace

Json to_json(const Certificate& c) {
  Json j;
  j["claim"] = to_json(c.claim);
  j["track"] = to_string(c.track);
  j["outcome"] = to_string(c.outcome);
  j["decision_grade"] = to_string(c.grade);
  if (c.verdict && c.verdict->witness) {
    j["witness"] = to_json(*c.verdict->witness);
  } else if (c.limit) {
    j["witness"] = to_json(*c.limit);
  } else if (c.falsification) {
    j["witness"] = violations_json(c);
  } else {
    j["witness"] = nullptr;
  }
  if (c.modulus) {
    Json m;
    m["kind"] = c.modulus->kind == Modulus::Kind::DeltaOfEpsilon ? "delta_of_epsilon" : "N_of_epsilon";
    m["formula"] = c.modulus->formula();
    j["modulus"] = std::move(m);
  } else {
    j["modulus"] = nullptr;
  }
  j["narrative"] = c.narrative;
  return j;
}

}  // namespace tic
