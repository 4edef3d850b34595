#include "schreier/json_io.hpp"

#include <string>

namespace schreier::json {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::ParseError, "malformed JSON: " + what);
}

}  // namespace

Json encode(const FinSet& f) { return Json(f.vec()); }

Json encode(const std::vector<FinSet>& sets) {
  Json out = Json::array();
  for (const auto& f : sets) out.push_back(encode(f));
  return out;
}

Json encode(const FinVector& x) {
  Json out = Json::object();
  for (const auto& [i, v] : x.coords()) out[std::to_string(i)] = to_string(v);
  return out;
}

Json encode(Ordinal a) { return to_string(a); }

Json encode(const Exponent& p) {
  if (p.is_exact()) return Json{{"exact", p.exact_power()}};
  return Json{{"approx", p.value().convert_to<double>()},
              {"tolerance", p.tolerance().convert_to<double>()}};
}

Json encode(const NormValue& v) {
  Json out = Json::object();
  out["approx"] = v.approx();
  if (v.p.is_exact()) {
    out["p"] = v.p.exact_power();
    out["pth_power"] = to_string(*v.pth_power);
  } else {
    out["p"] = v.p.value().convert_to<double>();
    out["pth_power"] = to_string(v.pth_power_approx);
  }
  return out;
}

Json encode(const SignSeq& theta) {
  Json out = Json::array();
  for (auto s : theta.raw()) out.push_back(static_cast<int>(s));
  return out;
}

Json encode(const OneSetReport& r) {
  Json out = Json::object();
  out["gap"] = to_string(r.gap);
  out["nonmaximal_one_set"] =
      r.nonmaximal_one_set ? encode(*r.nonmaximal_one_set) : Json(nullptr);
  out["one_sets"] = encode(r.one_sets);
  return out;
}

Json encode(const MapTable& t) {
  Json pairs = Json::array();
  for (const auto& [x, y] : t.pairs) pairs.push_back(Json::array({encode(x), encode(y)}));
  return Json{{"alpha", encode(t.alpha)}, {"p", encode(t.p)}, {"pairs", pairs}};
}

Json encode(const VerificationReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json item = Json::object();
    item["coordinate"] = v.coordinate ? Json(*v.coordinate) : Json(nullptr);
    item["deficit"] = v.deficit;
    item["entries"] = v.entries;
    item["kind"] = v.kind;
    item["lhs"] = v.lhs;
    item["rhs"] = v.rhs;
    violations.push_back(std::move(item));
  }
  Json out = Json::object();
  out["ok"] = r.ok;
  out["violations"] = violations;
  if (!r.witnesses.empty()) out["witnesses"] = encode(r.witnesses);
  return out;
}

Json encode(const CheckResult& c) {
  Json out = Json::object();
  out["holds"] = c.holds;
  out["in_scope"] = c.in_scope;
  out["lhs"] = c.lhs;
  if (!c.lhs_value.empty()) out["lhs_value"] = c.lhs_value;
  out["rhs"] = c.rhs;
  if (!c.rhs_value.empty()) out["rhs_value"] = c.rhs_value;
  return out;
}

Json encode(const Error& e) {
  // Details come in arbitrary order; nlohmann::json sorts its keys.
  nlohmann::json sorted = nlohmann::json::parse(e.details().dump());
  if (!sorted.is_object()) sorted = nlohmann::json::object();
  sorted["code"] = std::string(to_string(e.code()));
  sorted["message"] = e.what();
  return Json::parse(sorted.dump());
}

FinSet decode_set(const Json& j) {
  if (!j.is_array()) malformed("a set must be an integer array");
  std::vector<Index> out;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 1) {
      malformed("set elements must be positive integers");
    }
    if (!out.empty() && v.get<Index>() <= out.back()) malformed("set elements must increase");
    out.push_back(v.get<Index>());
  }
  return FinSet(std::move(out));
}

FinVector decode_vector(const Json& j) {
  if (!j.is_object()) malformed("a vector must be an object of index -> rational");
  FinVector x;
  for (const auto& [key, value] : j.items()) {
    Index i = 0;
    try {
      std::size_t used = 0;
      const unsigned long parsed = std::stoul(key, &used);
      if (used != key.size() || parsed == 0) throw std::invalid_argument(key);
      i = static_cast<Index>(parsed);
    } catch (const std::logic_error&) {
      malformed("vector index '" + key + "' is not a positive integer");
    }
    if (value.is_string()) {
      x.set(i, parse_rational(value.get<std::string>()));
    } else if (value.is_number_integer()) {
      x.set(i, Rational(value.get<long>()));
    } else {
      malformed("coordinate " + key + " must be a rational string");
    }
  }
  return x;
}

Ordinal decode_ordinal(const Json& j) {
  if (j.is_string()) return parse_ordinal(j.get<std::string>());
  if (j.is_number_unsigned()) return Ordinal::finite(j.get<std::uint32_t>());
  malformed("an ordinal must be a string such as \"w+2\"");
}

Exponent decode_exponent(const Json& j) {
  if (j.is_number_unsigned()) return Exponent::exact(j.get<unsigned>());
  if (j.is_object() && j.contains("exact")) return Exponent::exact(j["exact"].get<unsigned>());
  if (j.is_object() && j.contains("approx")) {
    const auto text = [](const Json& v) {
      return v.is_string() ? v.get<std::string>() : v.dump();
    };
    const Decimal tol = j.contains("tolerance") ? Decimal(text(j["tolerance"])) : Decimal("1e-12");
    return Exponent::approx(Decimal(text(j["approx"])), tol);
  }
  malformed("p must be {\"exact\": n} or {\"approx\": x}");
}

MapTable decode_table(const Json& j) {
  if (!j.is_object() || !j.contains("pairs") || !j["pairs"].is_array()) {
    malformed("a table needs alpha, p and a pairs array");
  }
  MapTable t;
  t.alpha = j.contains("alpha") ? decode_ordinal(j["alpha"]) : Ordinal::finite(1);
  t.p = j.contains("p") ? decode_exponent(j["p"]) : Exponent::exact(1);
  for (const auto& pr : j["pairs"]) {
    if (!pr.is_array() || pr.size() != 2) malformed("each pair must be [x, T(x)]");
    t.pairs.emplace_back(decode_vector(pr[0]), decode_vector(pr[1]));
  }
  return t;
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace schreier::json
