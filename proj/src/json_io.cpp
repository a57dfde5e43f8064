#include "artin/json_io.hpp"

#include "artin/errors.hpp"

namespace artin {

Json to_json(const ForbiddenPattern& p) {
  return Json{{"type", to_string(p.kind)}, {"vertices", p.vertices}, {"labels", p.labels}};
}

ForbiddenPattern pattern_from_json(const Json& j) {
  try {
    const auto kind = pattern_kind_from_string(j.at("type").get<std::string>());
    if (!kind) throw ParseError("unknown pattern type");
    return {*kind, j.at("vertices").get<std::vector<std::string>>(),
            j.at("labels").get<std::vector<int>>()};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed pattern JSON: ") + e.what());
  }
}

Json to_json(const DecompositionTree& t) {
  using K = DecompositionTree::Kind;
  Json j{{"kind", to_string(t.kind)}};
  switch (t.kind) {
    case K::Trivial: break;
    case K::Z:
    case K::DirectZ: j["vertex"] = t.vertices.front(); break;
    case K::Dihedral:
      j["vertices"] = t.vertices;
      j["label"] = t.label;
      break;
    case K::FreeProduct: break;
  }
  if (!t.children.empty()) {
    Json kids = Json::array();
    for (const auto& c : t.children) kids.push_back(to_json(c));
    j["children"] = std::move(kids);
  }
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  j["problems"] = Json{{"rational_subset", to_string(v.rational_subset)},
                       {"submonoid", to_string(v.submonoid)},
                       {"subgroup_separable", to_string(v.subgroup_separable)}};
  if (const auto* p = std::get_if<ForbiddenPattern>(&v.evidence)) {
    j["evidence"] = to_json(*p);
  } else {
    const auto& t = std::get<DecompositionTree>(v.evidence);
    j["evidence"] = Json{{"decomposition", to_json(t)}, {"description", tree_describe(t)}};
  }
  j["notes"] = v.notes;
  return j;
}

Json to_json(const WitnessReport& r) {
  Json j;
  j["pattern"] = to_json(r.pattern);
  j["target"] = to_string(r.target);
  Json assignment = Json::array();
  for (std::size_t i = 0; i < r.assignment.size(); ++i)
    assignment.push_back(
        Json{{"position", i}, {"name", r.assignment[i].first}, {"word", to_text(r.assignment[i].second)}});
  j["assignment"] = std::move(assignment);
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"edge", {c.first, c.second}},
                          {"pair", {r.assignment[c.first].first, r.assignment[c.second].first}},
                          {"support", c.support},
                          {"label", c.label},
                          {"method", c.method},
                          {"verified", c.verified}});
  }
  j["checks"] = std::move(checks);
  j["verified"] = r.verified;
  j["citation"] = r.citation;
  return j;
}

Json to_json(const GarsideNF& nf) {
  Json simples = Json::array();
  for (const auto& s : nf.simples)
    simples.push_back(Json{{"first", s.first == 0 ? "a" : "b"}, {"length", s.length}});
  return Json{{"m", nf.m}, {"delta_power", nf.delta_power}, {"simples", std::move(simples)},
              {"text", render(nf)}};
}

Json to_json(const MembershipResult& r) {
  Json j{{"outcome", r.member() ? "member" : "unknown"}};
  if (r.member()) {
    j["certificate"] = Json{{"word", to_text(r.certificate)}};
    if (r.factorization) j["certificate"]["factorization"] = *r.factorization;
  } else {
    j["certificate"] = nullptr;
  }
  j["bound"] = r.bound;
  j["explored"] = r.explored;
  return j;
}

}  // namespace artin
