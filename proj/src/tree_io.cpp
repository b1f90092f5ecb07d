#include "alternator/tree_io.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace alternator {

namespace {

using nlohmann::json;

json node_to_json(const StrategyNode& node) {
  if (node.is_leaf()) return json{{"alternator", node.coin()}};
  if (node.is_unreachable()) return json{{"unreachable", true}};
  return json{
      {"weigh", {{"left", node.weighing().left}, {"right", node.weighing().right}}},
      {"on_equal", node_to_json(node.child(Outcome::Equal))},
      {"on_left_light", node_to_json(node.child(Outcome::LeftLight))},
      {"on_right_light", node_to_json(node.child(Outcome::RightLight))},
  };
}

[[noreturn]] void malformed(const std::string& what) {
  throw TreeFormatError("malformed tree document: " + what);
}

void expect_keys(const json& object, std::initializer_list<const char*> keys,
                 const std::string& where) {
  if (!object.is_object()) malformed(where + " is not an object");
  if (object.size() != keys.size()) {
    malformed(where + " has unexpected keys: " + object.dump());
  }
  for (const char* key : keys) {
    if (!object.contains(key)) malformed(where + " lacks \"" + key + "\"");
  }
}

int as_int(const json& value, const std::string& where) {
  if (!value.is_number_integer()) malformed(where + " must be an integer");
  const auto wide = value.get<std::int64_t>();
  if (wide < std::numeric_limits<int>::min() ||
      wide > std::numeric_limits<int>::max()) {
    malformed(where + " is out of range");
  }
  return static_cast<int>(wide);
}

std::vector<CoinId> as_pan(const json& value, const std::string& where) {
  if (!value.is_array()) malformed(where + " must be an array");
  std::vector<CoinId> pan;
  for (const json& id : value) pan.push_back(as_int(id, where + " entry"));
  return pan;
}

StrategyNode node_from_json(const json& node, const std::string& where) {
  if (!node.is_object()) malformed(where + " is not an object");
  if (node.contains("alternator")) {
    expect_keys(node, {"alternator"}, where);
    return StrategyNode::leaf(as_int(node["alternator"], where + ".alternator"));
  }
  if (node.contains("unreachable")) {
    expect_keys(node, {"unreachable"}, where);
    if (node["unreachable"] != true) malformed(where + ".unreachable must be true");
    return StrategyNode::unreachable();
  }
  expect_keys(node, {"weigh", "on_equal", "on_left_light", "on_right_light"},
              where);
  const json& weigh = node["weigh"];
  expect_keys(weigh, {"left", "right"}, where + ".weigh");
  Weighing weighing{as_pan(weigh["left"], where + ".weigh.left"),
                    as_pan(weigh["right"], where + ".weigh.right")};
  return StrategyNode::weigh(
      std::move(weighing), node_from_json(node["on_equal"], where + ".on_equal"),
      node_from_json(node["on_left_light"], where + ".on_left_light"),
      node_from_json(node["on_right_light"], where + ".on_right_light"));
}

}  // namespace

std::string serialize_tree(const StrategyTree& tree) {
  const json document{
      {"format_version", kTreeFormatVersion},
      {"n_coins", tree.n_coins},
      {"initial_state", std::string(1, to_char(tree.initial_state))},
      {"root", node_to_json(tree.root)},
  };
  return document.dump(2) + "\n";
}

StrategyTree parse_tree(std::string_view text) {
  json document;
  try {
    document = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(e.what());
  }
  expect_keys(document, {"format_version", "n_coins", "initial_state", "root"},
              "document");
  if (document["format_version"] != kTreeFormatVersion) {
    malformed("unsupported format_version " + document["format_version"].dump());
  }
  if (!document["initial_state"].is_string()) {
    malformed("initial_state must be a string");
  }

  StrategyTree tree;
  tree.n_coins = as_int(document["n_coins"], "n_coins");
  if (tree.n_coins < 1 || tree.n_coins > kMaxDocumentCoins) {
    malformed("n_coins must lie in [1, " + std::to_string(kMaxDocumentCoins) + "]");
  }
  try {
    tree.initial_state =
        parse_initial_state(document["initial_state"].get<std::string>());
  } catch (const std::invalid_argument& e) {
    malformed(e.what());
  }
  tree.root = node_from_json(document["root"], "root");
  try {
    validate_tree(tree);
  } catch (const std::invalid_argument& e) {
    malformed(e.what());
  }
  return tree;
}

StrategyTree read_tree_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TreeFormatError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_tree(buffer.str());
}

void write_tree_file(const std::string& path, const StrategyTree& tree) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize_tree(tree);
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace alternator
