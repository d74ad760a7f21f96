#include "hypercert/module_io.hpp"

#include <json.hpp>

namespace hypercert {

using nlohmann::ordered_json;

std::string serialize_module(const RationalModule& m) {
  ordered_json j;
  j["format"] = "hypercert.module/1";
  j["name"] = m.name();
  j["field"] = {{"p", m.field()->characteristic()},
                {"m", m.field()->degree()},
                {"modulus", m.field()->modulus()}};
  j["tag"] = m.tag().name();
  j["r"] = m.r();
  j["q"] = m.q();
  j["dim"] = m.dim();
  j["has_weights"] = m.has_weights();
  ordered_json weights = ordered_json::array();
  for (const auto& w : m.weights()) weights.push_back(w.coords);
  j["weights"] = std::move(weights);
  ordered_json ops = ordered_json::object();
  for (std::size_t root = 0; root < m.tag().num_roots(); ++root) {
    ordered_json list = ordered_json::array();
    for (const auto& a : m.ops(root)) {
      ordered_json rows = ordered_json::array();
      for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(std::vector<elem_t>(a.row(i).begin(), a.row(i).end()));
      list.push_back(std::move(rows));
    }
    ops[m.tag().negative_roots()[root]] = std::move(list);
  }
  j["operators"] = std::move(ops);
  return j.dump(1) + "\n";
}

namespace {

RationalModule parse_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  if (j.at("format") != "hypercert.module/1") throw std::invalid_argument("unsupported module format");
  const auto& jf = j.at("field");
  FieldPtr field = build_field(jf.at("p").get<std::uint32_t>(), jf.at("m").get<std::uint32_t>());
  if (jf.at("modulus").get<std::vector<std::uint32_t>>() != field->modulus())
    throw std::invalid_argument("stored modulus does not match the canonical field");
  const RootSystemTag tag = RootSystemTag::from_name(j.at("tag").get<std::string>());
  const auto r = j.at("r").get<std::uint32_t>();
  const auto dim = j.at("dim").get<std::size_t>();
  std::vector<Weight> weights;
  for (const auto& w : j.at("weights")) weights.push_back(Weight{w.get<std::vector<int>>()});
  if (weights.size() != dim) throw std::invalid_argument("weight count does not match dim");
  std::vector<std::vector<Matrix>> ops;
  for (const auto& label : tag.negative_roots()) {
    std::vector<Matrix> list;
    for (const auto& jm : j.at("operators").at(label)) {
      std::vector<elem_t> data;
      for (const auto& row : jm)
        for (const auto& x : row) {
          const auto v = x.get<elem_t>();
          if (v >= field->order()) throw std::invalid_argument("matrix entry outside the field");
          data.push_back(v);
        }
      list.emplace_back(field, dim, dim, std::move(data));
    }
    ops.push_back(std::move(list));
  }
  return RationalModule(field, tag, r, std::move(weights), std::move(ops), j.at("has_weights").get<bool>(),
                        j.at("name").get<std::string>());
}

}  // namespace

RationalModule parse_module(const std::string& text) {
  try {
    return parse_json(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed module file: ") + e.what());
  }
}

}  // namespace hypercert
