#include "teamcomp/spec_io.hpp"

#include <fstream>
#include <sstream>

namespace teamcomp {
namespace {

using nlohmann::json;

// DOM builder that keeps floating-point literals as their source text so
// "0.1" becomes exactly 1/10.
class ExactNumberSax : public nlohmann::detail::json_sax_dom_parser<json> {
 public:
  using json_sax_dom_parser::json_sax_dom_parser;

  bool number_float(number_float_t /*val*/, const string_t& text) {
    string_t copy = text;
    return json_sax_dom_parser::string(copy);
  }
};

Rational rational_field(const json& v, const std::string& field) {
  try {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(mpq_class(mpz_class(std::to_string(v.get<long long>()), 10)));
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorCode::kParse, field + ": " + e.what());
  }
  throw Error(ErrorCode::kParse, field + ": expected a rational string or number");
}

}  // namespace

GameSpec parse_spec(std::string_view json_text) {
  json doc;
  ExactNumberSax sax(doc, false);
  const bool ok = json::sax_parse(json_text.begin(), json_text.end(), &sax);
  if (!ok || doc.is_discarded()) throw Error(ErrorCode::kParse, "document is not valid JSON");
  if (!doc.is_object()) throw Error(ErrorCode::kParse, "document must be a JSON object");

  GameSpec spec;
  if (!doc.contains("T") || !doc["T"].is_number_integer()) throw Error(ErrorCode::kParse, "T: expected an integer");
  const long long rounds = doc["T"].get<long long>();
  if (rounds < 0 || rounds > kMaxPlayers) throw Error(ErrorCode::kSize, "T: out of range");
  spec.rounds = static_cast<int>(rounds);

  if (!doc.contains("P") || !doc["P"].is_array()) throw Error(ErrorCode::kParse, "P: expected an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < doc["P"].size(); ++i) {
    const json& row = doc["P"][i];
    const std::string where = "P[" + std::to_string(i + 1) + "]";
    if (!row.is_array()) throw Error(ErrorCode::kParse, where + ": expected an array");
    std::vector<Rational> out;
    for (std::size_t j = 0; j < row.size(); ++j) {
      out.push_back(rational_field(row[j], where + "[" + std::to_string(j + 1) + "]"));
    }
    rows.push_back(std::move(out));
  }
  spec.strength = StrengthMatrix::from_rows(rows);

  if (!doc.contains("U")) throw Error(ErrorCode::kParse, "U: missing");
  const json& u = doc["U"];
  if (u.is_string()) {
    const auto name = u.get<std::string>();
    if (name == "UE") {
      spec.utility = utility_ue(spec.rounds);
    } else if (name == "UM") {
      spec.utility = utility_um(spec.rounds);
    } else {
      throw Error(ErrorCode::kParse, "U: expected \"UE\", \"UM\" or an array");
    }
  } else if (u.is_array()) {
    std::vector<Rational> values;
    for (std::size_t t = 0; t < u.size(); ++t) values.push_back(rational_field(u[t], "U[" + std::to_string(t) + "]"));
    spec.utility = UtilityTable(std::move(values));
  } else {
    throw Error(ErrorCode::kParse, "U: expected \"UE\", \"UM\" or an array");
  }
  return spec;
}

GameSpec load_spec(std::string_view json_text) { return validate_spec(parse_spec(json_text)).spec; }

GameSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_spec(buf.str());
}

json spec_to_json(const GameSpec& spec) {
  json doc;
  doc["T"] = spec.rounds;
  json rows = json::array();
  for (int i = 0; i < spec.m(); ++i) {
    json row = json::array();
    for (int j = 0; j < spec.n(); ++j) row.push_back(rational_json(spec.strength.at(i, j)));
    rows.push_back(std::move(row));
  }
  doc["P"] = std::move(rows);
  if (spec.rounds >= 1 && spec.utility == utility_ue(spec.rounds)) {
    doc["U"] = "UE";
  } else if (spec.rounds >= 1 && spec.utility == utility_um(spec.rounds)) {
    doc["U"] = "UM";
  } else {
    json values = json::array();
    for (const auto& v : spec.utility.values()) values.push_back(rational_json(v));
    doc["U"] = std::move(values);
  }
  return doc;
}

}  // namespace teamcomp
