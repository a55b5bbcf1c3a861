#include "skewbrace/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "skewbrace/errors.hpp"

namespace skewbrace {
namespace {

using nlohmann::json;

json table_to_json(const std::vector<uint16_t>& flat, int n) {
  json rows = json::array();
  for (int a = 0; a < n; ++a) {
    json row = json::array();
    for (int b = 0; b < n; ++b) row.push_back(static_cast<int>(flat[a * n + b]));
    rows.push_back(std::move(row));
  }
  return rows;
}

json set_to_json(const ElementSet& s) {
  json out = json::array();
  for (uint16_t x : s.elements()) out.push_back(static_cast<int>(x));
  return out;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw error(errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
}

std::vector<std::vector<int>> rows_from_json(const json& j, const char* key) {
  if (!j.is_array())
    throw error(errc::parse_error,
                std::string("field \"") + key + "\" must be an array of rows");
  std::vector<std::vector<int>> rows;
  rows.reserve(j.size());
  for (const auto& jr : j) {
    if (!jr.is_array())
      throw error(errc::parse_error,
                  std::string("field \"") + key + "\" must contain arrays");
    std::vector<int> row;
    row.reserve(jr.size());
    for (const auto& v : jr) {
      if (!v.is_number_integer())
        throw error(errc::parse_error,
                    std::string("non-integer entry in \"") + key + "\"");
      row.push_back(v.get<int>());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

const json& require_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw error(errc::parse_error,
                std::string("missing field \"") + key + "\"");
  return j.at(key);
}

// Identity element of a square table, or -1.
int table_identity(const std::vector<std::vector<int>>& rows) {
  int n = static_cast<int>(rows.size());
  for (int e = 0; e < n; ++e) {
    if (static_cast<int>(rows[e].size()) != n) return -1;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      if (static_cast<int>(rows[x].size()) != n) return -1;
      ok = rows[e][x] == x && rows[x][e] == x;
    }
    if (ok) return e;
  }
  return -1;
}

void relabel_in_place(std::vector<std::vector<int>>& rows, int e) {
  int n = static_cast<int>(rows.size());
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  perm[0] = e;
  perm[e] = 0;
  std::vector<std::vector<int>> out(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int v = rows[perm[a]][perm[b]];
      out[a][b] = v == e ? 0 : v == 0 ? e : v;
    }
  rows = std::move(out);
}

// Both tables must share one identity; relabels so it sits at 0.  Tables with
// no identity at all fall through to FiniteGroup validation for the witness.
SkewBrace brace_from_rows(std::vector<std::vector<int>> add_rows,
                          std::vector<std::vector<int>> mul_rows,
                          ValidationMode mode) {
  if (add_rows.size() != mul_rows.size())
    throw error(errc::parse_error, "additive and multiplicative tables differ in size");
  int e_add = table_identity(add_rows);
  int e_mul = table_identity(mul_rows);
  if (e_add >= 0 && e_mul >= 0 && e_add != e_mul)
    throw error(errc::identity_mismatch,
                "additive identity " + std::to_string(e_add) +
                    " differs from multiplicative identity " +
                    std::to_string(e_mul));
  if (e_add > 0 && e_mul == e_add) {
    relabel_in_place(add_rows, e_add);
    relabel_in_place(mul_rows, e_add);
  }
  return make_brace(FiniteGroup::from_table(add_rows),
                    FiniteGroup::from_table(mul_rows), mode);
}

json brace_json_obj(const SkewBrace& b) {
  json j;
  j["order"] = b.order();
  j["add"] = table_to_json(b.add().table(), b.order());
  j["mul"] = table_to_json(b.mul().table(), b.order());
  return j;
}

json map_to_json(const BraceMap& m) {
  json out = json::array();
  for (int x = 0; x < m.size(); ++x) out.push_back(static_cast<int>(m(x)));
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string group_to_json(const FiniteGroup& g) {
  json j;
  j["order"] = g.order();
  j["table"] = table_to_json(g.table(), g.order());
  return dump(j);
}

FiniteGroup group_from_json(const std::string& text) {
  json j = parse(text);
  auto rows = rows_from_json(require_field(j, "table"), "table");
  if (j.contains("order") && j.at("order").is_number_integer() &&
      j.at("order").get<int>() != static_cast<int>(rows.size()))
    throw error(errc::parse_error, "declared order does not match the table");
  return FiniteGroup::from_table_any_identity(rows);
}

std::string brace_to_json(const SkewBrace& b) { return dump(brace_json_obj(b)); }

SkewBrace brace_from_json(const std::string& text, ValidationMode mode) {
  json j = parse(text);
  auto add_rows = rows_from_json(require_field(j, "add"), "add");
  auto mul_rows = rows_from_json(require_field(j, "mul"), "mul");
  if (j.contains("order") && j.at("order").is_number_integer() &&
      j.at("order").get<int>() != static_cast<int>(add_rows.size()))
    throw error(errc::parse_error, "declared order does not match the tables");
  return brace_from_rows(std::move(add_rows), std::move(mul_rows), mode);
}

std::string brace_to_plain_text(const SkewBrace& b) {
  std::ostringstream out;
  int n = b.order();
  out << n << "\n";
  for (int a = 0; a < n; ++a) {
    for (int x = 0; x < n; ++x) {
      if (x) out << ' ';
      out << b.add().op(a, x) + 1;
    }
    out << "\n";
  }
  out << "\n";
  for (int a = 0; a < n; ++a) {
    for (int x = 0; x < n; ++x) {
      if (x) out << ' ';
      out << b.mul().op(a, x) + 1;
    }
    out << "\n";
  }
  return out.str();
}

SkewBrace brace_from_plain_text(const std::string& text, ValidationMode mode) {
  std::istringstream in(text);
  long long n = 0;
  if (!(in >> n) || n < 1 || n > 0xFFFF)
    throw error(errc::parse_error, "expected the order on the first line");
  auto read_table = [&](const char* which) {
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (long long a = 0; a < n; ++a)
      for (long long x = 0; x < n; ++x) {
        long long v = 0;
        if (!(in >> v) || v < 1 || v > n)
          throw error(errc::parse_error,
                      std::string("bad entry in the ") + which +
                          " table (expected 1-based values)");
        rows[a][x] = static_cast<int>(v - 1);
      }
    return rows;
  };
  auto add_rows = read_table("additive");
  auto mul_rows = read_table("multiplicative");
  std::string extra;
  if (in >> extra)
    throw error(errc::parse_error, "trailing data after the two tables");
  return brace_from_rows(std::move(add_rows), std::move(mul_rows), mode);
}

SkewBrace brace_from_file(const std::string& path, ValidationMode mode) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::parse_error, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  size_t i = text.find_first_not_of(" \t\r\n");
  if (i == std::string::npos)
    throw error(errc::parse_error, path + " is empty");
  if (text[i] == '{') return brace_from_json(text, mode);
  if (text[i] >= '0' && text[i] <= '9') return brace_from_plain_text(text, mode);
  throw error(errc::parse_error,
              path + ": expected JSON or the plain two-table format");
}

std::string semidirect_spec_to_json(const SemidirectSpec& spec) {
  json j;
  j["b1"] = brace_json_obj(spec.b1);
  j["b2"] = brace_json_obj(spec.b2);
  json action = json::array();
  for (const auto& row : spec.action) {
    json jr = json::array();
    for (uint16_t v : row) jr.push_back(static_cast<int>(v));
    action.push_back(std::move(jr));
  }
  j["action"] = std::move(action);
  return dump(j);
}

SemidirectSpec semidirect_spec_from_json(const std::string& text) {
  json j = parse(text);
  const json& jb1 = require_field(j, "b1");
  const json& jb2 = require_field(j, "b2");
  SkewBrace b1 = brace_from_rows(rows_from_json(require_field(jb1, "add"), "add"),
                                 rows_from_json(require_field(jb1, "mul"), "mul"),
                                 ValidationMode::automatic);
  SkewBrace b2 = brace_from_rows(rows_from_json(require_field(jb2, "add"), "add"),
                                 rows_from_json(require_field(jb2, "mul"), "mul"),
                                 ValidationMode::automatic);
  auto action_rows = rows_from_json(require_field(j, "action"), "action");
  std::vector<std::vector<uint16_t>> action;
  action.reserve(action_rows.size());
  for (const auto& row : action_rows) {
    std::vector<uint16_t> r;
    r.reserve(row.size());
    for (int v : row) {
      if (v < 0 || v >= b1.order())
        throw error(errc::parse_error, "action entry out of range");
      r.push_back(static_cast<uint16_t>(v));
    }
    action.push_back(std::move(r));
  }
  SemidirectSpec spec{std::move(b1), std::move(b2), std::move(action)};
  validate_semidirect_spec(spec);
  return spec;
}

std::string validation_report_json(const SkewBrace& b) {
  json j;
  j["order"] = b.order();
  j["valid"] = true;
  j["trivial"] = b.is_trivial();
  j["abelian_type"] = b.add().is_abelian();
  j["fingerprint"] = fingerprint(b).digest();
  return dump(j);
}

std::string ideal_report_json(const SkewBrace& b,
                              const std::vector<IdealHandle>& ideals) {
  json j;
  j["order"] = b.order();
  j["fingerprint"] = fingerprint(b).digest();
  j["count"] = static_cast<int>(ideals.size());
  json list = json::array();
  for (const auto& h : ideals) {
    json ji;
    ji["elements"] = set_to_json(h.set);
    ji["size"] = h.set.size();
    ji["left_ideal"] = h.left_ideal;
    ji["ideal"] = h.ideal;
    ji["minimal"] = h.minimal.value_or(false);
    list.push_back(std::move(ji));
  }
  j["ideals"] = std::move(list);
  return dump(j);
}

std::string primality_report_json(const SkewBrace& b, const std::string& property,
                                  const PropertyResult& result) {
  json j;
  j["order"] = b.order();
  j["fingerprint"] = fingerprint(b).digest();
  j["property"] = property;
  j["holds"] = result.holds;
  if (result.witness) {
    json w;
    json ideals = json::array();
    for (const auto& s : result.witness->ideals) ideals.push_back(set_to_json(s));
    w["ideals"] = std::move(ideals);
    json chain = json::array();
    for (const auto& step : result.witness->chain) {
      json js;
      js["left"] = set_to_json(step.left);
      js["right"] = set_to_json(step.right);
      js["result"] = set_to_json(step.result);
      chain.push_back(std::move(js));
    }
    w["chain"] = std::move(chain);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return dump(j);
}

std::string automorphism_report_json(const SkewBrace& b,
                                     const std::vector<BraceMap>& auts) {
  json j;
  j["order"] = b.order();
  j["fingerprint"] = fingerprint(b).digest();
  j["count"] = static_cast<int>(auts.size());
  json list = json::array();
  for (const auto& m : auts) list.push_back(map_to_json(m));
  j["automorphisms"] = std::move(list);
  return dump(j);
}

std::string isomorphism_report_json(const std::optional<BraceMap>& witness) {
  json j;
  j["isomorphic"] = witness.has_value();
  j["mapping"] = witness ? map_to_json(*witness) : json(nullptr);
  return dump(j);
}

std::string semidirect_report_json(const SemidirectProduct& product) {
  json j;
  j["order"] = product.brace.order();
  j["fingerprint"] = fingerprint(product.brace).digest();
  j["brace"] = brace_json_obj(product.brace);
  j["left_factor"] = set_to_json(product.left_factor);
  j["right_factor"] = set_to_json(product.right_factor);
  return dump(j);
}

std::string enumeration_report_json(const EnumerationResult& result,
                                    bool include_tables) {
  json j;
  j["order"] = result.order;
  j["additive_filter"] = result.additive_filter;
  j["complete"] = result.complete;
  j["count"] = result.count();
  j["raw_count"] = result.raw_count;
  json classes = json::array();
  for (const auto& c : result.classes) {
    json jc;
    jc["additive_name"] = c.additive_name;
    jc["orbit"] = c.orbit;
    jc["fingerprint"] = fingerprint(c.rep).digest();
    if (include_tables) {
      jc["add"] = table_to_json(c.rep.add().table(), c.rep.order());
      jc["mul"] = table_to_json(c.rep.mul().table(), c.rep.order());
    }
    classes.push_back(std::move(jc));
  }
  j["classes"] = std::move(classes);
  return dump(j);
}

}  // namespace skewbrace
