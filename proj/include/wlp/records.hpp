#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include <nlohmann/json.hpp>

#include "wlp/syzygy_gap.hpp"
#include "wlp/verdict.hpp"
#include "wlp/version.hpp"

namespace wlp {

// CLI record schema. Field names and order are fixed: "command", "inputs"
// (integers only), payload fields in documented order, then "version" last.
// Serialization is canonical single-line JSON, so identical invocations
// emit identical bytes.

using Json = nlohmann::ordered_json;

inline Json witness_json(const WlpWitness& w) {
  struct Visitor {
    Json operator()(std::monostate) const { return nullptr; }
    Json operator()(const CriterionWitness& c) const {
      return Json{{"kind", "criterion_pair"},
                  {"part", c.part == CriterionPart::even_d ? "even" : "odd"},
                  {"n", c.n},
                  {"k", c.k}};
    }
    Json operator()(const FailingDegree& f) const {
      return Json{{"kind", "failing_degree"}, {"m", f.m}, {"rank", f.rank},
                  {"max_rank", f.max_rank}};
    }
    Json operator()(const ClosedForm& c) const {
      return Json{{"kind", "closed_form"}, {"tag", c.tag}};
    }
  };
  return std::visit(Visitor{}, w);
}

inline Json verdict_json(const WlpVerdict& v) {
  return Json{{"holds", v.holds}, {"witness", witness_json(v.witness)}};
}

inline Json gap_json(const GapCertificate& g) {
  return Json{{"d1", g.degrees[0]}, {"d2", g.degrees[1]}, {"d3", g.degrees[2]},
              {"p", g.p.value()},   {"alpha", g.alpha},   {"beta", g.beta},
              {"delta", g.delta}};
}

inline Json han_json(const HanCertificate& h) {
  Json w = nullptr;
  if (h.witness)
    w = Json{{"s", h.witness->s},
             {"u", {h.witness->u[0], h.witness->u[1], h.witness->u[2]}},
             {"m_numerator", h.witness->m_numerator}};
  return Json{{"v", {h.v[0], h.v[1], h.v[2]}},
              {"p", h.p.value()},
              {"delta_star", h.delta_star},
              {"witness", std::move(w)}};
}

inline Json make_record(std::string_view command,
                        std::initializer_list<std::pair<std::string_view, std::int64_t>> inputs) {
  Json r;
  r["command"] = command;
  Json in = Json::object();
  for (const auto& [key, value] : inputs) in[std::string(key)] = value;
  r["inputs"] = std::move(in);
  return r;
}

/// Appends the version field (always last) and serializes canonically.
inline std::string finalize_record(Json r) {
  r["version"] = kVersion;
  return r.dump();
}

inline constexpr std::string_view kTableCsvHeader = "d,p,wlp,witness_n,witness_k";

/// One CSV row of the criterion table; witness columns are empty when WLP
/// holds.
inline std::string table_csv_row(std::int64_t d, std::int64_t p, const WlpVerdict& v) {
  std::string row = std::to_string(d) + "," + std::to_string(p) + "," +
                    (v.holds ? "true" : "false");
  if (const auto* w = std::get_if<CriterionWitness>(&v.witness))
    row += "," + std::to_string(w->n) + "," + std::to_string(w->k);
  else
    row += ",,";
  return row;
}

}  // namespace wlp
