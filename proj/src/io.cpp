// SPDX-License-Identifier: Apache-2.0
#include "sumrank/io.hpp"

#include <charconv>
#include <string>

namespace sumrank {
namespace {

FieldPtr field_of(const Json& j, FieldPtr fallback) {
  if (j.is_object() && j.contains("field")) {
    try {
      return Field::parse(j.at("field").get<std::string>());
    } catch (const Json::exception& e) {
      throw ParseError(std::string("bad field entry: ") + e.what());
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("bad field descriptor: ") + e.what());
    }
  }
  if (!fallback) throw ParseError("no field given");
  return fallback;
}

Elem parse_entry(const Json& e, const Field& f) {
  if (e.is_number_unsigned() || e.is_number_integer()) {
    const auto v = e.get<std::int64_t>();
    if (v < 0 || static_cast<std::uint64_t>(v) >= f.order())
      throw ParseError("entry " + std::to_string(v) + " outside field of order " +
                       std::to_string(f.order()));
    return static_cast<Elem>(v);
  }
  if (e.is_string()) {
    const std::string s = e.get<std::string>();
    if (s == "0") return 0;
    if (s == "1") return 1;
    if (s == "a") return f.alpha();
    if (s.rfind("a^", 0) == 0) {
      std::uint64_t x = 0;
      const auto [p, ec] = std::from_chars(s.data() + 2, s.data() + s.size(), x);
      if (ec == std::errc() && p == s.data() + s.size()) return f.pow(f.alpha(), x);
    }
    throw ParseError("cannot parse entry '" + s + "'");
  }
  throw ParseError("matrix entries must be integers or strings");
}

template <class T>
T get_field(const Json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

Json field_json(const FieldPtr& f) { return f ? Json(f->descriptor()) : Json(nullptr); }

}  // namespace

Json to_json(const Matrix& m) {
  Json data = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Elem e : m.row(r)) row.push_back(e);
    data.push_back(std::move(row));
  }
  return {{"field", field_json(m.field())}, {"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

Matrix matrix_from_json(const Json& j, FieldPtr field) {
  if (!j.is_object()) throw ParseError("matrix must be a JSON object");
  const FieldPtr f = field_of(j, std::move(field));
  const Json& data = j.contains("data") ? j.at("data") : throw ParseError("matrix without 'data'");
  if (!data.is_array()) throw ParseError("'data' must be an array of rows");
  const std::size_t rows = j.contains("rows") ? get_field<std::size_t>(j, "rows") : data.size();
  std::size_t cols = j.contains("cols") ? get_field<std::size_t>(j, "cols")
                     : data.empty()     ? 0
                                        : data[0].size();
  if (data.size() != rows) throw ParseError("'data' row count does not match 'rows'");
  std::vector<Elem> entries;
  for (const auto& row : data) {
    if (!row.is_array() || row.size() != cols) throw ParseError("ragged matrix rows");
    for (const auto& e : row) entries.push_back(parse_entry(e, *f));
  }
  return Matrix(f, rows, cols, std::move(entries));
}

Json to_json(const SystematicBlockCode& code) {
  return {{"field", field_json(code.parity.field())},
          {"partition", code.partition.parts()},
          {"dims", code.dims},
          {"parity", to_json(code.parity)}};
}

SystematicBlockCode code_from_json(const Json& j, FieldPtr field) {
  if (!j.is_object()) throw ParseError("code must be a JSON object");
  const FieldPtr f = field_of(j, std::move(field));
  SystematicBlockCode code;
  try {
    code.partition = LengthPartition(get_field<std::vector<std::size_t>>(j, "partition"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  code.dims = get_field<std::vector<std::size_t>>(j, "dims");
  if (!j.contains("parity")) throw ParseError("code without 'parity'");
  code.parity = matrix_from_json(j.at("parity"), f);
  try {
    code.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return code;
}

Json to_json(const PolyEncoder& enc) {
  Json coeffs = Json::array();
  for (const auto& c : enc.stored()) coeffs.push_back(to_json(c));
  return {{"field", enc.field()->descriptor()}, {"n", enc.n()},
          {"k", enc.k()},                       {"m", enc.memory()},
          {"systematic", enc.is_systematic()},  {"coeffs", coeffs}};
}

PolyEncoder encoder_from_json(const Json& j, FieldPtr field) {
  if (!j.is_object()) throw ParseError("encoder must be a JSON object");
  const FieldPtr f = field_of(j, std::move(field));
  const auto n = get_field<std::size_t>(j, "n");
  const auto k = get_field<std::size_t>(j, "k");
  const bool systematic = j.value("systematic", true);
  if (!j.contains("coeffs") || !j.at("coeffs").is_array())
    throw ParseError("encoder needs a 'coeffs' array");
  std::vector<Matrix> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(matrix_from_json(c, f));
  if (j.contains("m") && get_field<std::size_t>(j, "m") + 1 != coeffs.size())
    throw ParseError("'m' does not match the number of coefficients");
  try {
    return systematic ? PolyEncoder::systematic(f, n, k, std::move(coeffs))
                      : PolyEncoder::general(f, n, k, std::move(coeffs));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const Witness& w) {
  Json j = {{"kind", w.kind}};
  Json transforms = Json::object();
  for (const auto& [name, m] : w.transforms) transforms[name] = to_json(m);
  j["transforms"] = transforms;
  if (w.subject) j["subject"] = to_json(*w.subject);
  if (w.selection) j["selection"] = {{"rows", w.selection->rows}, {"cols", w.selection->cols}};
  if (!w.message.empty()) {
    j["message"] = w.message;
    j["weight"] = w.weight;
  }
  if (w.level) j["level"] = *w.level;
  if (!w.profile.empty()) j["profile"] = w.profile;
  return j;
}

Witness witness_from_json(const Json& j, FieldPtr field) {
  if (!j.is_object()) throw ParseError("witness must be a JSON object");
  Witness w;
  w.kind = get_field<std::string>(j, "kind");
  if (j.contains("transforms"))
    for (const auto& [name, m] : j.at("transforms").items())
      w.transforms.emplace_back(name, matrix_from_json(m, field));
  if (j.contains("subject")) w.subject = matrix_from_json(j.at("subject"), field);
  if (j.contains("selection")) {
    RowColSelection sel;
    sel.rows = get_field<std::vector<std::size_t>>(j.at("selection"), "rows");
    sel.cols = get_field<std::vector<std::size_t>>(j.at("selection"), "cols");
    w.selection = sel;
  }
  if (j.contains("message")) w.message = get_field<std::vector<Elem>>(j, "message");
  if (j.contains("weight")) w.weight = get_field<std::uint64_t>(j, "weight");
  if (j.contains("level")) w.level = get_field<std::size_t>(j, "level");
  if (j.contains("profile")) w.profile = get_field<std::vector<std::size_t>>(j, "profile");
  return w;
}

Json to_json(const VerificationReport& r) {
  Json j = {{"verdict", to_string(r.verdict)},
            {"method", r.method},
            {"checked_count", r.checked_count},
            {"elapsed_ms", static_cast<double>(r.elapsed.count()) / 1e6},
            {"counters", r.counters}};
  if (!r.note.empty()) j["note"] = r.note;
  if (r.witness) j["witness"] = to_json(*r.witness);
  if (!r.levels.empty()) {
    Json levels = Json::array();
    for (const auto& l : r.levels) levels.push_back(to_json(l));
    j["levels"] = levels;
  }
  return j;
}

VerificationReport report_from_json(const Json& j, FieldPtr field) {
  VerificationReport r;
  const auto verdict = get_field<std::string>(j, "verdict");
  if (verdict == "true") r.verdict = Verdict::yes;
  else if (verdict == "false") r.verdict = Verdict::no;
  else if (verdict == "infeasible") r.verdict = Verdict::infeasible;
  else throw ParseError("unknown verdict '" + verdict + "'");
  r.method = j.value("method", "");
  r.checked_count = j.value("checked_count", std::uint64_t{0});
  r.elapsed = std::chrono::nanoseconds(static_cast<std::int64_t>(j.value("elapsed_ms", 0.0) * 1e6));
  r.note = j.value("note", "");
  if (j.contains("counters")) r.counters = j.at("counters").get<std::map<std::string, std::uint64_t>>();
  if (j.contains("witness")) r.witness = witness_from_json(j.at("witness"), field);
  if (j.contains("levels"))
    for (const auto& l : j.at("levels")) r.levels.push_back(report_from_json(l, field));
  return r;
}

Json to_json(const DistanceResult& d) {
  Json j = {{"feasible", d.feasible}, {"enumerated", d.enumerated}};
  if (d.feasible) {
    j["distance"] = d.distance;
    j["message"] = d.message;
  }
  if (!d.note.empty()) j["note"] = d.note;
  return j;
}

}  // namespace sumrank
