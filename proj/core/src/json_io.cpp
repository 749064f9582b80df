#include "propalloc/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <initializer_list>
#include <optional>
#include <set>

#include "json.hpp"
#include "propalloc/error.hpp"

namespace propalloc::json {

namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
}

void expect_keys(const Json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) throw ParseError(where + ": unknown key '" + key + "'");
  }
  for (const char* key : keys) {
    if (!obj.contains(key)) throw ParseError(where + ": missing key '" + key + "'");
  }
}

const Json& array_at(const Json& obj, const char* key, const std::string& where) {
  const Json& v = obj.at(key);
  if (!v.is_array()) throw ParseError(where + ": '" + key + "' must be an array");
  return v;
}

std::string string_of(const Json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + ": expected a string");
  return v.get<std::string>();
}

std::int64_t integer_of(const Json& v, const std::string& where) {
  if (v.is_number_unsigned() &&
      v.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw ParseError(where + ": integer out of range");
  }
  if (v.is_number_integer()) return v.get<std::int64_t>();
  throw ParseError(where + ": expected an integer");
}

double number_of(const Json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where + ": expected a number");
  return v.get<double>();
}

std::vector<std::pair<std::string, std::string>> parse_edges(const Json& arr,
                                                             const std::string& where) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string at = where + "[" + std::to_string(k) + "]";
    const Json& e = arr[k];
    if (!e.is_array() || e.size() != 2) throw ParseError(at + ": edge must be a 2-element array");
    edges.emplace_back(string_of(e[0], at), string_of(e[1], at));
  }
  return edges;
}

template <class Writer>
OrderedJson edges_json(std::size_t count, Writer&& endpoint_ids) {
  OrderedJson arr = OrderedJson::array();
  for (std::size_t e = 0; e < count; ++e) {
    auto [a, b] = endpoint_ids(e);
    arr.push_back(OrderedJson::array({a, b}));
  }
  return arr;
}

std::size_t right_index(const Instance& g, const std::string& id, const std::string& where) {
  auto j = g.find_right(id);
  if (!j) throw ParseError(where + ": unknown right node '" + id + "'");
  return *j;
}

}  // namespace

std::string write_instance(const Instance& g) {
  OrderedJson doc;
  OrderedJson left = OrderedJson::array();
  for (const auto& n : g.left()) left.push_back({{"id", n.id}, {"supply", n.supply}});
  OrderedJson right = OrderedJson::array();
  for (const auto& n : g.right()) right.push_back({{"id", n.id}, {"capacity", n.capacity}});
  doc["left"] = std::move(left);
  doc["right"] = std::move(right);
  doc["edges"] = edges_json(g.edge_count(), [&](std::size_t e) {
    const Edge edge = g.edges()[e];
    return std::pair{g.left()[edge.left].id, g.right()[edge.right].id};
  });
  return doc.dump();
}

RawInstance parse_instance_document(std::string_view text) {
  const Json doc = parse_text(text);
  expect_keys(doc, {"left", "right", "edges"}, "instance");
  RawInstance raw;
  const Json& left = array_at(doc, "left", "instance");
  for (std::size_t k = 0; k < left.size(); ++k) {
    const std::string at = "left[" + std::to_string(k) + "]";
    expect_keys(left[k], {"id", "supply"}, at);
    raw.left.push_back({string_of(left[k]["id"], at + ".id"), integer_of(left[k]["supply"], at + ".supply")});
  }
  const Json& right = array_at(doc, "right", "instance");
  for (std::size_t k = 0; k < right.size(); ++k) {
    const std::string at = "right[" + std::to_string(k) + "]";
    expect_keys(right[k], {"id", "capacity"}, at);
    raw.right.push_back(
        {string_of(right[k]["id"], at + ".id"), integer_of(right[k]["capacity"], at + ".capacity")});
  }
  raw.edges = parse_edges(array_at(doc, "edges", "instance"), "edges");
  return raw;
}

Instance read_instance(std::string_view text) { return validate(parse_instance_document(text)); }

std::string write_allocation(const Instance& g, const Allocation& x) {
  OrderedJson doc;
  OrderedJson arr = OrderedJson::array();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge edge = g.edges()[e];
    arr.push_back(OrderedJson::array({g.left()[edge.left].id, g.right()[edge.right].id, x.x.at(e)}));
  }
  doc["x"] = std::move(arr);
  doc["value"] = allocation_value(g, x);
  return doc.dump();
}

Allocation read_allocation(const Instance& g, std::string_view text) {
  const Json doc = parse_text(text);
  if (!doc.is_object()) throw ParseError("allocation: expected an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "x" && key != "value") throw ParseError("allocation: unknown key '" + key + "'");
  }
  if (!doc.contains("x")) throw ParseError("allocation: missing key 'x'");
  const Json& arr = array_at(doc, "x", "allocation");
  Allocation out{std::vector<double>(g.edge_count(), 0.0)};
  std::vector<bool> seen(g.edge_count(), false);
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string at = "x[" + std::to_string(k) + "]";
    const Json& t = arr[k];
    if (!t.is_array() || t.size() != 3) throw ParseError(at + ": expected [left, right, amount]");
    const std::string l = string_of(t[0], at);
    const std::string r = string_of(t[1], at);
    const double amount = number_of(t[2], at);
    auto i = g.find_left(l);
    auto j = g.find_right(r);
    std::optional<std::size_t> e;
    if (i && j) e = g.find_edge(*i, *j);
    if (!e) throw ParseError(at + ": ('" + l + "', '" + r + "') is not an edge of the instance");
    if (seen[*e]) throw ParseError(at + ": edge listed twice");
    if (!std::isfinite(amount) || amount < 0.0) throw ParseError(at + ": amount must be >= 0");
    seen[*e] = true;
    out.x[*e] = amount;
  }
  return out;
}

std::string write_strategy(const Instance& g, const RankedStrategy& s) {
  OrderedJson ranks = OrderedJson::object();
  OrderedJson weights = OrderedJson::object();
  for (std::size_t j = 0; j < g.right_count(); ++j) {
    ranks[g.right()[j].id] = s.ranks.at(j);
    weights[g.right()[j].id] = s.weights[j];
  }
  OrderedJson doc;
  doc["ranks"] = std::move(ranks);
  doc["weights"] = std::move(weights);
  return doc.dump();
}

RankedStrategy read_strategy(const Instance& g, std::string_view text) {
  const Json doc = parse_text(text);
  expect_keys(doc, {"ranks", "weights"}, "strategy");
  const Json& ranks = doc["ranks"];
  const Json& weights = doc["weights"];
  if (!ranks.is_object() || !weights.is_object()) {
    throw ParseError("strategy: 'ranks' and 'weights' must be objects");
  }
  std::vector<std::size_t> r(g.right_count(), 0);
  for (const auto& [id, v] : ranks.items()) {
    const std::int64_t rank = integer_of(v, "ranks." + id);
    if (rank < 1) throw ParseError("ranks." + id + ": rank must be >= 1");
    r[right_index(g, id, "ranks")] = static_cast<std::size_t>(rank);
  }
  for (std::size_t j = 0; j < g.right_count(); ++j) {
    if (r[j] == 0) throw ParseError("strategy: no rank for '" + g.right()[j].id + "'");
  }
  std::vector<std::string> ids;
  for (const auto& n : g.right()) ids.push_back(n.id);
  return {std::move(r), read_weights(ids, weights.dump())};
}

WeightVector read_weights(const std::vector<std::string>& ids, std::string_view text) {
  Json doc = parse_text(text);
  if (!doc.is_object()) throw ParseError("weights: expected an object");
  if (doc.contains("weights") && doc["weights"].is_object()) doc = doc["weights"];
  std::vector<double> alpha(ids.size(), 0.0);
  std::vector<bool> seen(ids.size(), false);
  for (const auto& [id, v] : doc.items()) {
    auto it = std::find(ids.begin(), ids.end(), id);
    if (it == ids.end()) throw ParseError("weights: unknown node '" + id + "'");
    const auto j = static_cast<std::size_t>(it - ids.begin());
    alpha[j] = number_of(v, "weights." + id);
    seen[j] = true;
  }
  for (std::size_t j = 0; j < ids.size(); ++j) {
    if (!seen[j]) throw ParseError("weights: missing weight for '" + ids[j] + "'");
  }
  try {
    return WeightVector(std::move(alpha));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("weights: ") + e.what());
  }
}

std::string write_twocap(const TwoCapInstance& g) {
  OrderedJson doc;
  OrderedJson items = OrderedJson::array();
  for (const auto& it : g.items()) items.push_back({{"id", it.id}, {"c", it.weight}, {"v", it.volume}});
  OrderedJson bins = OrderedJson::array();
  for (const auto& b : g.bins()) {
    bins.push_back({{"id", b.id}, {"C", b.weight_capacity}, {"V", b.volume_capacity}});
  }
  doc["items"] = std::move(items);
  doc["bins"] = std::move(bins);
  doc["edges"] = edges_json(g.edges().size(), [&](std::size_t e) {
    const Edge edge = g.edges()[e];
    return std::pair{g.items()[edge.left].id, g.bins()[edge.right].id};
  });
  return doc.dump();
}

TwoCapInstance read_twocap(std::string_view text) {
  const Json doc = parse_text(text);
  expect_keys(doc, {"items", "bins", "edges"}, "twocap");
  RawTwoCapInstance raw;
  const Json& items = array_at(doc, "items", "twocap");
  for (std::size_t k = 0; k < items.size(); ++k) {
    const std::string at = "items[" + std::to_string(k) + "]";
    expect_keys(items[k], {"id", "c", "v"}, at);
    raw.items.push_back({string_of(items[k]["id"], at + ".id"), number_of(items[k]["c"], at + ".c"),
                         number_of(items[k]["v"], at + ".v")});
  }
  const Json& bins = array_at(doc, "bins", "twocap");
  for (std::size_t k = 0; k < bins.size(); ++k) {
    const std::string at = "bins[" + std::to_string(k) + "]";
    expect_keys(bins[k], {"id", "C", "V"}, at);
    raw.bins.push_back({string_of(bins[k]["id"], at + ".id"), number_of(bins[k]["C"], at + ".C"),
                        number_of(bins[k]["V"], at + ".V")});
  }
  raw.edges = parse_edges(array_at(doc, "edges", "twocap"), "edges");
  return validate_twocap(std::move(raw));
}

}  // namespace propalloc::json
