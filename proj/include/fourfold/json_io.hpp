#ifndef FOURFOLD_JSON_IO_HPP
#define FOURFOLD_JSON_IO_HPP

#include <json.hpp>

#include "fourfold/manifold.hpp"

namespace fourfold {

// Descriptor JSON schema (field names and nesting are the wire contract):
// {
//   "name": str, "euler": int, "signature": int,
//   "b1": {"known": n} | {"bounded": {"lo": n, "hi": n}} | "unknown",
//   "pi1": {"kind": ..., ...},
//   "w2": "spin" | "nonspin" | "unknown",
//   "simplicial_volume": like b1,
//   "entropy4": {"known": PQ} | {"bounded": {"lo": PQ, "hi": PQ}} | "unknown",
//   "certificates": [{"kind": str, "provenance": str, "m"?: int}],
//   "trace": [str]
// }
// where PQ = {"c0": "p/q", "c2": "p/q", "cm2": "p/q"}.

nlohmann::json pq_to_json(const PiQuantity& q);
PiQuantity pq_from_json(const nlohmann::json& j);

nlohmann::json descriptor_to_json(const ManifoldDescriptor& d);
ManifoldDescriptor descriptor_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const Verdict& v);

ManifoldDescriptor load_descriptor_file(const std::string& path);

}  // namespace fourfold

#endif
