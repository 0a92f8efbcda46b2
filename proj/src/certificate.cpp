#include "json.hpp"

#include "halfgenus/verify.hpp"

namespace halfgenus {

namespace {

using ordered_json = nlohmann::ordered_json;

std::array<std::string, 5> column_names(const PrimeTriple& triple) {
  return {"real", "2", std::to_string(triple.p), std::to_string(triple.q),
          std::to_string(triple.r)};
}

ordered_json witness_to_json(const LocalWitness& w) {
  ordered_json j;
  j["t"] = w.t;
  switch (w.kind) {
    case LocalWitness::Kind::kRealDefinite:
      j["witness"] = "positive-definite";
      break;
    case LocalWitness::Kind::kGoodReduction:
      j["witness"] = "good-reduction";
      break;
    case LocalWitness::Kind::kConicPoint:
      j["witness"] = ordered_json::array({w.x, w.y, w.z});
      break;
    case LocalWitness::Kind::kUnitValue:
      j["witness"] = ordered_json::array({w.x, w.y});
      break;
  }
  j["modulus"] = w.modulus;
  return j;
}

LocalWitness witness_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("t") || !j.contains("witness") ||
      !j.contains("modulus"))
    throw ParseError("local witness must carry t, witness and modulus");
  LocalWitness w;
  w.t = j.at("t").get<long long>();
  w.modulus = j.at("modulus").get<long long>();
  const auto& body = j.at("witness");
  if (body.is_string()) {
    std::string s = body.get<std::string>();
    if (s == "positive-definite")
      w.kind = LocalWitness::Kind::kRealDefinite;
    else if (s == "good-reduction")
      w.kind = LocalWitness::Kind::kGoodReduction;
    else
      throw ParseError("unknown symbolic witness '" + s + "'");
  } else if (body.is_array() && body.size() == 3) {
    w.kind = LocalWitness::Kind::kConicPoint;
    w.x = body[0].get<long long>();
    w.y = body[1].get<long long>();
    w.z = body[2].get<long long>();
  } else if (body.is_array() && body.size() == 2) {
    w.kind = LocalWitness::Kind::kUnitValue;
    w.x = body[0].get<long long>();
    w.y = body[1].get<long long>();
  } else {
    throw ParseError("witness must be a 2- or 3-element point or a known string");
  }
  return w;
}

ordered_json places_to_json(const std::array<bool, 5>& flags,
                            const std::array<std::string, 5>& names) {
  ordered_json arr = ordered_json::array();
  for (size_t i = 0; i < 5; ++i)
    if (flags[i]) arr.push_back(names[i]);
  return arr;
}

std::array<bool, 5> places_from_json(const ordered_json& arr,
                                     const std::array<std::string, 5>& names) {
  if (!arr.is_array()) throw ParseError("place list must be an array");
  std::array<bool, 5> flags{};
  for (const auto& item : arr) {
    if (!item.is_string()) throw ParseError("place entries must be strings");
    std::string s = item.get<std::string>();
    bool known = false;
    for (size_t i = 0; i < 5; ++i) {
      if (names[i] == s) {
        flags[i] = true;
        known = true;
        break;
      }
    }
    if (!known) throw ParseError("unknown place '" + s + "' in table row");
  }
  return flags;
}

}  // namespace

std::string certificate_to_json(const Certificate& cert) {
  ordered_json j;
  j["schema_version"] = cert.schema_version;
  j["triple"] = {{"p", cert.triple.p}, {"q", cert.triple.q}, {"r", cert.triple.r}};
  j["form"] = ordered_json::array({cert.form.a, cert.form.b, cert.form.c});
  j["genus"] = {{"chi_num", cert.genus_report.chi_value.num()},
                {"chi_den", cert.genus_report.chi_value.den()},
                {"g_num", cert.genus_report.genus_value.num()},
                {"g_den", cert.genus_report.genus_value.den()}};

  ordered_json local = ordered_json::object();
  for (const auto& [key, w] : cert.local_report.entries)
    local[key] = witness_to_json(w);
  j["local"] = local;

  auto names = column_names(cert.triple);
  ordered_json rows = ordered_json::array();
  for (const auto& row : cert.obstruction_table.rows) {
    ordered_json rj;
    rj["t_exponents"] = ordered_json::array(
        {row.t_exponents[0], row.t_exponents[1], row.t_exponents[2],
         row.t_exponents[3], row.t_exponents[4]});
    rj["square_at"] = places_to_json(row.square_at, names);
    rj["fails_at"] = places_to_json(row.fails_at, names);
    rows.push_back(rj);
  }
  j["obstruction"] = rows;

  j["verdict"] = cert.verdict;
  j["mode"] = cert.mode == DecisionMode::kParanoid ? "paranoid" : "fast";
  return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    Certificate cert;
    cert.schema_version = j.at("schema_version").get<int>();
    cert.triple.p = j.at("triple").at("p").get<long long>();
    cert.triple.q = j.at("triple").at("q").get<long long>();
    cert.triple.r = j.at("triple").at("r").get<long long>();
    const auto& form = j.at("form");
    if (!form.is_array() || form.size() != 3)
      throw ParseError("form must be a 3-element array");
    cert.form = BinaryQuadraticForm{form[0].get<long long>(),
                                    form[1].get<long long>(),
                                    form[2].get<long long>()};
    const auto& genus = j.at("genus");
    cert.genus_report.chi_value = Rational(genus.at("chi_num").get<long long>(),
                                           genus.at("chi_den").get<long long>());
    cert.genus_report.genus_value = Rational(genus.at("g_num").get<long long>(),
                                             genus.at("g_den").get<long long>());

    const auto& local = j.at("local");
    if (!local.is_object()) throw ParseError("local section must be an object");
    for (auto it = local.begin(); it != local.end(); ++it)
      cert.local_report.entries.emplace_back(it.key(), witness_from_json(it.value()));
    const LocalWitness* rem = cert.local_report.find("remaining");
    cert.local_report.good_prime_bound = rem ? rem->modulus : 0;

    auto names = column_names(cert.triple);
    const auto& rows = j.at("obstruction");
    if (!rows.is_array()) throw ParseError("obstruction section must be an array");
    for (const auto& rj : rows) {
      ObstructionRow row;
      const auto& eps = rj.at("t_exponents");
      if (!eps.is_array() || eps.size() != 5)
        throw ParseError("t_exponents must be a 5-element array");
      for (size_t i = 0; i < 5; ++i) {
        int e = eps[i].get<int>();
        if (e != 0 && e != 1) throw ParseError("t_exponents entries must be 0 or 1");
        row.t_exponents[i] = e;
      }
      row.square_at = places_from_json(rj.at("square_at"), names);
      row.fails_at = places_from_json(rj.at("fails_at"), names);
      cert.obstruction_table.rows.push_back(row);
    }
    cert.obstruction_table.triple = cert.triple;

    cert.verdict = j.at("verdict").get<bool>();
    std::string mode = j.at("mode").get<std::string>();
    if (mode == "fast")
      cert.mode = DecisionMode::kFast;
    else if (mode == "paranoid")
      cert.mode = DecisionMode::kParanoid;
    else
      throw ParseError("mode must be 'fast' or 'paranoid'");
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace halfgenus
