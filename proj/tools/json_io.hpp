// json_io.hpp - JSON forms of parameters, multipartitions and result tables.
#pragma once

#include <string>

#include "json.hpp"

#include "cyclo/crystal.hpp"
#include "cyclo/heisenberg.hpp"
#include "cyclo/params.hpp"

namespace cyclo::io {

using nlohmann::json;

// {"level":2, "kappa":{"num":-1,"den":2} | "irrational", "s":[[a,b],...]}
// where a, b are integers or "p/q" strings and each charge means a + b/kappa.
// A bare number stands for [a, 0].
CherednikParams params_from_json(const json& j);
CherednikParams load_params(const std::string& path);
json to_json(const CherednikParams& p);

json to_json(const Partition& p);
json to_json(const Multipartition& m);
Multipartition multipartition_from_json(const json& j);

json to_json(const Residue& z);
json to_json(const WallDescriptor& w);
json to_json(const SupportDescriptor& s);

}  // namespace cyclo::io
