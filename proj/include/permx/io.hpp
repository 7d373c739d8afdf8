#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "json.hpp"

#include "permx/avoidance.hpp"
#include "permx/binary_matrix.hpp"
#include "permx/bounds.hpp"
#include "permx/extremal.hpp"
#include "permx/inflation.hpp"
#include "permx/numeric.hpp"
#include "permx/permutation.hpp"

// JSON forms of the library's values. Big integers and rationals are written
// as strings so no precision is lost; cells are 1-indexed.

namespace permx::io {

using nlohmann::json;

inline json to_json(const BinaryMatrix& m) {
  json ones = json::array();
  for (const auto& c : m.ones()) ones.push_back({c.row, c.col});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"ones", std::move(ones)}};
}

inline BinaryMatrix matrix_from_json(const json& j) {
  try {
    std::vector<Cell> ones;
    for (const auto& cell : j.at("ones")) {
      if (!cell.is_array() || cell.size() != 2) throw Error(Errc::MalformedInput, "cell must be [row, col]");
      ones.push_back({cell[0].get<std::size_t>(), cell[1].get<std::size_t>()});
    }
    return BinaryMatrix(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>(), ones);
  } catch (const json::exception& e) {
    throw Error(Errc::MalformedInput, std::string("matrix JSON: ") + e.what());
  }
}

inline BinaryMatrix parse_matrix(const std::string& text) {
  try {
    return matrix_from_json(json::parse(text));
  } catch (const json::parse_error& e) {
    throw Error(Errc::MalformedInput, std::string("matrix JSON: ") + e.what());
  }
}

inline json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

inline json to_json(const BlockDecomposition& d) {
  json blocks = json::array();
  for (const auto& b : d.blocks) blocks.push_back(b.to_string());
  return {{"skeleton", d.skeleton.to_string()}, {"blocks", std::move(blocks)}};
}

inline json to_json(const ExtremalResult& r) {
  return {{"value", r.value},
          {"witness", to_json(r.witness)},
          {"nodes", r.nodes_explored},
          {"proven_optimal", r.proven_optimal}};
}

inline json to_json(const FptsResult& r) {
  json j = {{"value", r.unbounded ? json("unbounded") : json(r.value)},
            {"unbounded", r.unbounded},
            {"witness", to_json(r.witness)},
            {"nodes", r.nodes_explored},
            {"proven_optimal", r.proven_optimal}};
  if (r.cap_exceeded) j["cap_exceeded"] = true;
  return j;
}

inline json to_json(const Lemma21Report& r, bool timing = false) {
  json hyp = json::array();
  for (auto [n, v] : r.hypothesis) hyp.push_back({{"n", n}, {"ex", v}});
  json j = {{"k", r.k},         {"a", r.a},
            {"t", r.t},         {"s", r.s},
            {"lhs", r.lhs.value}, {"rhs", to_string(r.rhs)},
            {"rhs_approx", to_double(r.rhs)}, {"pass", r.pass},
            {"nodes", r.nodes}, {"hypothesis", std::move(hyp)},
            {"witness", to_json(r.lhs.witness)}};
  if (timing) j["wall_ms"] = r.wall_ms;
  return j;
}

inline json to_json(const Lemma22Report& r, bool timing = false) {
  json j = {{"k", r.k},
            {"a", r.a},
            {"c", r.c},
            {"t", r.t},
            {"s", r.s},
            {"x", to_string(r.x)},
            {"y", to_string(r.y)},
            {"decomposition", to_json(r.decomposition)},
            {"floor_xc", r.terms.floor_xc},
            {"choose", to_string(r.terms.choose)},
            {"sub_t", r.terms.sub_t},
            {"sub_s", r.terms.sub_s},
            {"second_term", to_string(r.terms.second)},
            {"lhs", r.lhs.value},
            {"f_sub", r.vacuous ? json("unbounded") : json(r.f_sub.value)},
            {"rhs", r.vacuous ? json("unbounded") : json(to_string(r.rhs))},
            {"vacuous", r.vacuous},
            {"pass", r.pass},
            {"nodes", r.nodes}};
  if (!r.vacuous) j["rhs_approx"] = to_double(r.rhs);
  if (timing) j["wall_ms"] = r.wall_ms;
  return j;
}

inline json to_json(const JvReport& r) {
  json j = {{"avoided", r.avoided.to_string()},
            {"red_pattern", r.red_pattern.to_string()},
            {"blue_pattern", r.blue_pattern.to_string()},
            {"n", r.n},
            {"checked", r.checked},
            {"pass", r.pass}};
  j["counterexample"] = r.counterexample ? json(r.counterexample->to_string()) : json(nullptr);
  return j;
}

inline json to_json(const MergeCountReport& r) {
  return {{"n", r.n},
          {"lhs", to_string(r.lhs)},
          {"rhs", to_string(r.rhs)},
          {"pass", r.pass},
          {"rhs_values", to_string(r.rhs_values)},
          {"pass_values", r.pass_values}};
}

inline json to_json(const Check& c) {
  json j = {{"name", c.name}, {"holds", c.holds}, {"lhs", number_or_null(c.lhs)}, {"rhs", number_or_null(c.rhs)}};
  if (!c.note.empty()) j["note"] = c.note;
  if (c.informational) j["informational"] = true;
  return j;
}

inline json to_json(const CertReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"checks", std::move(checks)}, {"all_hold", r.all_hold()}};
}

inline json to_json(const Schedule& s, bool with_states = true) {
  json j = {{"params", {{"k", s.params.k}, {"a", s.params.a}, {"c", s.params.c}}},
            {"beta", s.beta},
            {"log2_beta_k", s.log2_beta_k},
            {"x_b", s.x_b},
            {"y_b", s.y_b},
            {"y_1", s.y_1},
            {"R_A", s.R_A},
            {"floored", s.floored}};
  if (with_states) {
    json states = json::array();
    for (const auto& st : s.states) {
      states.push_back({{"i", st.step},
                        {"log2_t", st.log2_t},
                        {"log2_s", st.log2_s},
                        {"y", st.y ? json(*st.y) : json(nullptr)}});
    }
    j["states"] = std::move(states);
  }
  return j;
}

}  // namespace permx::io
