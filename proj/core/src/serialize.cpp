#include "antoine/serialize.hpp"

#include <set>
#include <utility>

#include <nlohmann/json.hpp>

namespace antoine {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kFormatName = "antoine-chain-tree";
constexpr int kFormatVersion = 1;

const char* shape_word(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::Cycle: return "cycle";
    case ShapeKind::Path: return "path";
    case ShapeKind::BiInfinite: return "biinfinite";
  }
  return "?";
}

ordered_json node_to_json(const ChainNode& node) {
  ordered_json j;
  j["shape"] = shape_word(node.shape.kind);
  if (node.shape.kind == ShapeKind::BiInfinite) {
    j["period"] = node.shape.size;
    if (node.pinch) {
      // The standard two-sided pinch named "w" serializes as `true`; the
      // general form spells out name and side count.
      if (node.pinch->name == "w" && node.pinch->sides == 2) {
        j["pinch"] = true;
      } else {
        j["pinch"] = ordered_json{{"name", node.pinch->name}, {"sides", node.pinch->sides}};
      }
    } else {
      j["pinch"] = false;
    }
  } else {
    j["n"] = node.shape.size;
    if (node.pinch) {
      j["pinch"] = ordered_json{{"name", node.pinch->name}, {"sides", node.pinch->sides}};
    }
  }
  ordered_json slots = ordered_json::array();
  for (const auto& slot : node.slots) {
    if (is_subnode(slot)) {
      slots.push_back(node_to_json(subnode(slot)));
    } else if (is_rigid(slot)) {
      slots.push_back(ordered_json{{"rigid", rigid(slot).id}});
    } else {
      slots.push_back(ordered_json{{"truncation", true}});
    }
  }
  j["slots"] = std::move(slots);
  return j;
}

[[noreturn]] void fail(const std::string& message) { throw ParseError(message); }

void expect_keys(const ordered_json& j, const std::set<std::string>& allowed,
                 const char* what) {
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key())) {
      fail(std::string("unknown field '") + item.key() + "' in " + what);
    }
  }
}

long long get_count(const ordered_json& j, const char* key, const char* what) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    fail(std::string(what) + " needs an integer '" + key + "' field");
  }
  return j[key].get<long long>();
}

NodePtr node_from_json(const ordered_json& j) {
  if (!j.is_object()) fail("chain node must be a JSON object");
  if (!j.contains("shape") || !j["shape"].is_string()) {
    fail("chain node needs a 'shape' string");
  }
  const std::string shape_name = j["shape"].get<std::string>();
  ChainShape shape;
  std::optional<PinchMarker> pinch;
  if (shape_name == "cycle" || shape_name == "path") {
    expect_keys(j, {"shape", "n", "slots"}, "a finite chain node");
    shape = shape_name == "cycle" ? ChainShape::cycle(get_count(j, "n", "finite chain"))
                                  : ChainShape::path(get_count(j, "n", "finite chain"));
  } else if (shape_name == "biinfinite") {
    expect_keys(j, {"shape", "period", "pinch", "slots"}, "a bi-infinite chain node");
    shape = ChainShape::bi_infinite(get_count(j, "period", "bi-infinite chain"));
    if (!j.contains("pinch")) fail("bi-infinite chain needs a 'pinch' field");
    const auto& p = j["pinch"];
    if (p.is_boolean()) {
      if (p.get<bool>()) pinch = PinchMarker{};
    } else if (p.is_object()) {
      expect_keys(p, {"name", "sides"}, "a pinch marker");
      PinchMarker marker;
      if (p.contains("name")) {
        if (!p["name"].is_string()) fail("pinch 'name' must be a string");
        marker.name = p["name"].get<std::string>();
      }
      if (p.contains("sides")) {
        if (!p["sides"].is_number_integer()) fail("pinch 'sides' must be an integer");
        marker.sides = p["sides"].get<int>();
      }
      pinch = marker;
    } else {
      fail("'pinch' must be a boolean or an object");
    }
  } else {
    fail("unknown chain shape '" + shape_name + "'");
  }

  if (!j.contains("slots") || !j["slots"].is_array()) {
    fail("chain node needs a 'slots' array");
  }
  std::vector<SlotContent> slots;
  slots.reserve(j["slots"].size());
  for (const auto& s : j["slots"]) {
    if (!s.is_object()) fail("slot entries must be JSON objects");
    if (s.contains("rigid")) {
      expect_keys(s, {"rigid"}, "a rigid leaf");
      if (!s["rigid"].is_string()) fail("'rigid' must carry the class id string");
      slots.push_back(RigidClass{s["rigid"].get<std::string>(), ""});
    } else if (s.contains("truncation")) {
      expect_keys(s, {"truncation"}, "a truncation marker");
      if (!s["truncation"].is_boolean() || !s["truncation"].get<bool>()) {
        fail("'truncation' must be `true`");
      }
      slots.push_back(Truncation{});
    } else {
      slots.push_back(node_from_json(s));
    }
  }
  return make_node(shape, std::move(slots), std::move(pinch));
}

}  // namespace

std::string canonical_serialize(const DefiningSequence& seq) {
  ordered_json j;
  j["format"] = kFormatName;
  j["version"] = kFormatVersion;
  j["approx"] = seq.approximate();
  ordered_json universe = ordered_json::array();
  for (const auto& c : seq.universe()) {
    universe.push_back(ordered_json{{"id", c.id}, {"name", c.display_name}});
  }
  j["universe"] = std::move(universe);
  j["root"] = node_to_json(seq.root());
  return j.dump();
}

DefiningSequence deserialize(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!j.is_object()) fail("top level must be a JSON object");
  expect_keys(j, {"format", "version", "approx", "universe", "root"}, "the document");
  if (!j.contains("format") || j["format"] != kFormatName) {
    fail(std::string("expected format '") + kFormatName + "'");
  }
  if (!j.contains("version") || j["version"] != kFormatVersion) {
    fail("unsupported format version");
  }
  if (!j.contains("universe") || !j["universe"].is_array()) {
    fail("document needs a 'universe' array");
  }
  std::vector<RigidClass> universe;
  for (const auto& c : j["universe"]) {
    if (!c.is_object()) fail("universe entries must be objects");
    expect_keys(c, {"id", "name"}, "a universe entry");
    if (!c.contains("id") || !c["id"].is_string()) fail("universe entry needs an 'id' string");
    RigidClass rc;
    rc.id = c["id"].get<std::string>();
    if (c.contains("name")) {
      if (!c["name"].is_string()) fail("universe 'name' must be a string");
      rc.display_name = c["name"].get<std::string>();
    }
    universe.push_back(std::move(rc));
  }
  if (!j.contains("root")) fail("document needs a 'root' node");
  NodePtr root = node_from_json(j["root"]);

  DefiningSequence seq(std::move(root), std::move(universe));
  if (j.contains("approx")) {
    if (!j["approx"].is_boolean()) fail("'approx' must be a boolean");
    if (j["approx"].get<bool>() != seq.approximate()) {
      fail("'approx' flag disagrees with the presence of truncation markers");
    }
  } else {
    fail("document needs an 'approx' flag");
  }
  return seq;
}

std::string canonical_node_key(const ChainNode& node) {
  return node_to_json(node).dump();
}

bool structurally_equal(const ChainNode& a, const ChainNode& b) {
  return canonical_node_key(a) == canonical_node_key(b);
}

}  // namespace antoine
