#include "fourfold/json_io.hpp"

#include <fstream>

namespace fourfold {

using nlohmann::json;

namespace {

json knowledge_int_to_json(const Knowledge<std::int64_t>& k) {
  if (k.is_unknown()) return "unknown";
  if (k.is_known()) return json{{"known", k.value()}};
  return json{{"bounded", {{"lo", k.lo()}, {"hi", k.hi()}}}};
}

Knowledge<std::int64_t> knowledge_int_from_json(const json& j, const char* field) {
  if (j.is_string()) {
    if (j.get<std::string>() == "unknown") return Knowledge<std::int64_t>::unknown();
    throw ParseError(std::string(field) + ": expected \"unknown\" or an object");
  }
  if (j.contains("known")) return Knowledge<std::int64_t>::known(j.at("known").get<std::int64_t>());
  if (j.contains("bounded")) {
    const auto& b = j.at("bounded");
    return Knowledge<std::int64_t>::bounded(b.at("lo").get<std::int64_t>(),
                                            b.at("hi").get<std::int64_t>());
  }
  throw ParseError(std::string(field) + ": malformed knowledge value");
}

json knowledge_pq_to_json(const Knowledge<PiQuantity>& k) {
  if (k.is_unknown()) return "unknown";
  if (k.is_known()) return json{{"known", pq_to_json(k.value())}};
  return json{{"bounded", {{"lo", pq_to_json(k.lo())}, {"hi", pq_to_json(k.hi())}}}};
}

Knowledge<PiQuantity> knowledge_pq_from_json(const json& j, const char* field) {
  if (j.is_string()) {
    if (j.get<std::string>() == "unknown") return Knowledge<PiQuantity>::unknown();
    throw ParseError(std::string(field) + ": expected \"unknown\" or an object");
  }
  if (j.contains("known")) return Knowledge<PiQuantity>::known(pq_from_json(j.at("known")));
  if (j.contains("bounded")) {
    const auto& b = j.at("bounded");
    return Knowledge<PiQuantity>::bounded(pq_from_json(b.at("lo")), pq_from_json(b.at("hi")));
  }
  throw ParseError(std::string(field) + ": malformed knowledge value");
}

json pi1_to_json(const Pi1Tag& t) {
  json j;
  switch (t.kind) {
    case Pi1Tag::Kind::Trivial: j["kind"] = "trivial"; break;
    case Pi1Tag::Kind::FreeAbelian:
      j["kind"] = "free_abelian";
      j["rank"] = t.rank;
      break;
    case Pi1Tag::Kind::Cyclic:
      j["kind"] = "cyclic";
      j["p"] = t.p;
      break;
    case Pi1Tag::Kind::SurfaceProduct:
      j["kind"] = "surface_product";
      j["g"] = t.g;
      j["h"] = t.h;
      break;
    case Pi1Tag::Kind::Other:
      j["kind"] = "other";
      j["label"] = t.label;
      break;
  }
  if (!t.torsion.empty()) j["torsion"] = t.torsion;
  return j;
}

Pi1Tag pi1_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  Pi1Tag t;
  if (kind == "trivial") {
    t = Pi1Tag::trivial();
  } else if (kind == "free_abelian") {
    t = Pi1Tag::free_abelian(j.at("rank").get<std::int64_t>());
  } else if (kind == "cyclic") {
    t = Pi1Tag::cyclic(j.at("p").get<std::int64_t>());
  } else if (kind == "surface_product") {
    t = Pi1Tag::surface_product(j.at("g").get<std::int64_t>(), j.at("h").get<std::int64_t>());
  } else if (kind == "other") {
    t = Pi1Tag::other(j.at("label").get<std::string>());
  } else {
    throw ParseError("pi1: unknown kind '" + kind + "'");
  }
  if (j.contains("torsion")) t.torsion = j.at("torsion").get<std::vector<std::int64_t>>();
  return t;
}

W2Type w2_from_json(const json& j) {
  const std::string s = j.get<std::string>();
  if (s == "spin") return W2Type::Spin;
  if (s == "nonspin") return W2Type::NonSpin;
  if (s == "unknown") return W2Type::Unknown;
  throw ParseError("w2: unknown value '" + s + "'");
}

}  // namespace

json pq_to_json(const PiQuantity& q) {
  return json{{"c0", q.c0().str()}, {"c2", q.c2().str()}, {"cm2", q.cm2().str()}};
}

PiQuantity pq_from_json(const json& j) {
  return PiQuantity(Rational::parse(j.at("c0").get<std::string>()),
                    Rational::parse(j.at("c2").get<std::string>()),
                    Rational::parse(j.at("cm2").get<std::string>()));
}

json descriptor_to_json(const ManifoldDescriptor& d) {
  json certs = json::array();
  for (const auto& c : d.certificates) {
    json jc{{"kind", certificate_kind_str(c.kind)}, {"provenance", c.provenance}};
    if (c.kind == CertificateKind::SmoothFamilyIndex) jc["m"] = c.family_index;
    certs.push_back(std::move(jc));
  }
  return json{
      {"name", d.name},
      {"euler", d.euler},
      {"signature", d.signature},
      {"b1", knowledge_int_to_json(d.b1)},
      {"pi1", pi1_to_json(d.pi1)},
      {"w2", w2_str(d.w2)},
      {"simplicial_volume", knowledge_int_to_json(d.simplicial_volume)},
      {"entropy4", knowledge_pq_to_json(d.entropy4)},
      {"certificates", std::move(certs)},
      {"trace", d.trace},
  };
}

ManifoldDescriptor descriptor_from_json(const json& j) {
  try {
    ManifoldDescriptor d;
    d.name = j.at("name").get<std::string>();
    d.euler = j.at("euler").get<std::int64_t>();
    d.signature = j.at("signature").get<std::int64_t>();
    d.b1 = knowledge_int_from_json(j.at("b1"), "b1");
    d.pi1 = pi1_from_json(j.at("pi1"));
    d.w2 = w2_from_json(j.at("w2"));
    d.simplicial_volume = knowledge_int_from_json(j.at("simplicial_volume"), "simplicial_volume");
    d.entropy4 = knowledge_pq_from_json(j.at("entropy4"), "entropy4");
    for (const auto& jc : j.at("certificates")) {
      const std::string kind_str = jc.at("kind").get<std::string>();
      const auto kind = certificate_kind_parse(kind_str);
      if (!kind) throw ParseError("certificates: unknown kind '" + kind_str + "'");
      Certificate c{*kind, jc.at("provenance").get<std::string>()};
      if (*kind == CertificateKind::SmoothFamilyIndex) c.family_index = jc.at("m").get<std::int64_t>();
      d.certificates.push_back(std::move(c));
    }
    d.trace = j.at("trace").get<std::vector<std::string>>();
    return d;
  } catch (const json::exception& e) {
    throw ParseError(std::string("descriptor: ") + e.what());
  }
}

json verdict_to_json(const Verdict& v) {
  json j{{"verdict", verdict_state_str(v.state)}, {"reasons", v.reasons}};
  if (v.margin) j["margin"] = pq_to_json(*v.margin);
  return j;
}

ManifoldDescriptor load_descriptor_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open descriptor file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
  return descriptor_from_json(j);
}

}  // namespace fourfold
