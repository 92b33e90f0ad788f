// json_io.cpp
#include "json_io.hpp"

#include <fstream>

#include "cyclo/errors.hpp"

namespace cyclo::io {

namespace {

Rational rational_from(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected an integer or a \"p/q\" string, got " + j.dump());
}

json rational_json(const Rational& r) {
  if (is_integer(r) && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return to_string(r);
}

}  // namespace

CherednikParams params_from_json(const json& j) {
  if (!j.is_object()) throw InputError("parameter file must hold a JSON object");
  if (!j.contains("level") || !j.contains("kappa") || !j.contains("s"))
    throw InputError("parameter file needs \"level\", \"kappa\" and \"s\"");
  const json& lv = j.at("level");
  if (!lv.is_number_integer() || lv.get<long>() < 1) throw InputError("\"level\" must be a positive integer");
  const int level = lv.get<int>();

  const json& k = j.at("kappa");
  Kappa kappa = Kappa::irrational();
  if (k.is_string()) {
    if (k.get<std::string>() != "irrational") kappa = Kappa::rational(parse_rational(k.get<std::string>()));
  } else if (k.is_object()) {
    if (!k.contains("num") || !k.contains("den")) throw InputError("kappa needs \"num\" and \"den\"");
    const Rational num = rational_from(k.at("num"));
    const Rational den = rational_from(k.at("den"));
    if (den == 0) throw InputError("kappa denominator is zero");
    kappa = Kappa::rational(num / den);
  } else {
    throw InputError("unrecognized kappa: " + k.dump());
  }

  const json& s = j.at("s");
  if (!s.is_array()) throw InputError("\"s\" must be an array");
  std::vector<Charge> charges;
  for (const json& c : s) {
    if (c.is_array()) {
      if (c.size() != 2) throw InputError("a charge is [a, b]: " + c.dump());
      charges.push_back({rational_from(c[0]), rational_from(c[1])});
    } else {
      charges.push_back({rational_from(c), Rational(0)});
    }
  }
  return CherednikParams(level, std::move(kappa), std::move(charges));
}

CherednikParams load_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open parameter file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& ex) {
    throw InputError(std::string("malformed parameter file: ") + ex.what());
  }
  return params_from_json(j);
}

json to_json(const CherednikParams& p) {
  json out;
  out["level"] = p.level();
  if (p.kappa().is_rational()) {
    const Rational& k = p.kappa().value();
    out["kappa"] = {{"num", k.get_num().get_si()}, {"den", k.get_den().get_si()}};
  } else {
    out["kappa"] = "irrational";
  }
  json s = json::array();
  for (const auto& c : p.charges()) s.push_back({rational_json(c.a), rational_json(c.b)});
  out["s"] = s;
  return out;
}

json to_json(const Partition& p) { return p.parts(); }

json to_json(const Multipartition& m) {
  json out = json::array();
  for (const auto& c : m.components()) out.push_back(to_json(c));
  return out;
}

Multipartition multipartition_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InputError("a multipartition is a nonempty array of arrays");
  std::vector<Partition> comps;
  for (const json& c : j) {
    if (!c.is_array()) throw InputError("component is not an array: " + c.dump());
    std::vector<int> parts;
    for (const json& x : c) {
      if (!x.is_number_integer()) throw InputError("part is not an integer: " + x.dump());
      parts.push_back(x.get<int>());
    }
    comps.emplace_back(std::move(parts));
  }
  return Multipartition(std::move(comps));
}

json to_json(const Residue& z) { return {{"class", z.class_id}, {"value", z.value}}; }

json to_json(const WallDescriptor& w) {
  if (w.kind == WallDescriptor::Kind::kappa_denominator)
    return {{"kind", "kappa_denominator"}, {"d", w.denominator}};
  return {{"kind", "charge_difference"}, {"i", w.i}, {"j", w.j}, {"m", w.m}};
}

json to_json(const SupportDescriptor& s) {
  return {{"p", s.p},
          {"q", s.q},
          {"dim", s.dim_support},
          {"finite_dim", s.finite_dimensional},
          {"stabilizer",
           {{"level", s.stabilizer.level},
            {"rank", s.stabilizer.rank},
            {"e", s.stabilizer.e},
            {"q", s.stabilizer.q}}}};
}

}  // namespace cyclo::io
