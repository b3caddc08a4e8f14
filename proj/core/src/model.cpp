#include "antoine/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace antoine {

namespace {

long long floor_mod(long long i, long long m) {
  long long r = i % m;
  return r < 0 ? r + m : r;
}

std::string join_path(const std::vector<long long>& path) {
  std::string out = "root";
  for (long long p : path) {
    out += '/';
    out += std::to_string(p);
  }
  return out;
}

}  // namespace

bool ChainShape::adjacent(long long i, long long j) const {
  switch (kind) {
    case ShapeKind::Cycle: {
      if (size < 3) return false;
      long long d = floor_mod(i - j, size);
      return d == 1 || d == size - 1;
    }
    case ShapeKind::Path:
      return i >= 0 && j >= 0 && i < size && j < size &&
             (i - j == 1 || j - i == 1);
    case ShapeKind::BiInfinite:
      return i - j == 1 || j - i == 1;
  }
  return false;
}

std::string ChainShape::to_string() const {
  switch (kind) {
    case ShapeKind::Cycle:
      return "cycle(" + std::to_string(size) + ")";
    case ShapeKind::Path:
      return "path(" + std::to_string(size) + ")";
    case ShapeKind::BiInfinite:
      return "biinfinite(period " + std::to_string(size) + ")";
  }
  return "?";
}

bool is_subnode(const SlotContent& c) { return std::holds_alternative<NodePtr>(c); }
bool is_rigid(const SlotContent& c) { return std::holds_alternative<RigidClass>(c); }
bool is_truncation(const SlotContent& c) { return std::holds_alternative<Truncation>(c); }

const ChainNode& subnode(const SlotContent& c) {
  const auto* p = std::get_if<NodePtr>(&c);
  if (!p || !*p) throw PathError("slot does not hold a sub-node");
  return **p;
}

const RigidClass& rigid(const SlotContent& c) {
  const auto* p = std::get_if<RigidClass>(&c);
  if (!p) throw PathError("slot does not hold a rigid leaf");
  return *p;
}

NodePtr make_node(ChainShape shape, std::vector<SlotContent> slots,
                  std::optional<PinchMarker> pinch) {
  auto node = std::make_shared<ChainNode>();
  node->shape = shape;
  node->slots = std::move(slots);
  node->pinch = std::move(pinch);
  return node;
}

std::string ValidationReport::to_string() const {
  if (ok()) return "ok";
  std::ostringstream out;
  for (const auto& v : violations) {
    out << v.code << " at " << v.where << ": " << v.message << '\n';
  }
  return out.str();
}

namespace {

bool contains_truncation(const ChainNode& node) {
  for (const auto& slot : node.slots) {
    if (is_truncation(slot)) return true;
    if (is_subnode(slot) && contains_truncation(subnode(slot))) return true;
  }
  return false;
}

}  // namespace

DefiningSequence::DefiningSequence(NodePtr root, std::vector<RigidClass> universe)
    : root_(std::move(root)), universe_(std::move(universe)) {
  if (!root_) throw DomainError("defining sequence needs a root node");
  std::sort(universe_.begin(), universe_.end(),
            [](const RigidClass& a, const RigidClass& b) {
              return a.id < b.id || (a.id == b.id && a.display_name < b.display_name);
            });
  approximate_ = contains_truncation(*root_);
}

const RigidClass* DefiningSequence::find_class(std::string_view id) const {
  for (const auto& c : universe_) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

PointAddress PointAddress::leaf(std::vector<long long> path, std::string rigid_id,
                                std::string sub_address) {
  PointAddress a;
  a.path = std::move(path);
  a.terminal = InRigidLeaf{std::move(rigid_id), std::move(sub_address)};
  return a;
}

PointAddress PointAddress::pinch(std::vector<long long> path, std::string name) {
  PointAddress a;
  a.path = std::move(path);
  a.terminal = PinchPoint{std::move(name)};
  return a;
}

std::string PointAddress::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(path[i]);
  }
  out += "]";
  if (const auto* leaf = std::get_if<InRigidLeaf>(&terminal)) {
    out += " in " + leaf->rigid_id;
    if (!leaf->sub_address.empty()) out += "@" + leaf->sub_address;
  } else if (const auto* pinch = std::get_if<PinchPoint>(&terminal)) {
    out += " pinch " + pinch->name;
  } else {
    out += " truncation frontier";
  }
  return out;
}

ValidationReport validate(const DefiningSequence& seq) {
  ValidationReport report;
  auto flag = [&report](std::string code, const std::vector<long long>& path,
                        std::string message) {
    report.violations.push_back({std::move(code), join_path(path), std::move(message)});
  };

  {
    std::set<std::string> seen;
    for (const auto& c : seq.universe()) {
      if (!seen.insert(c.id).second) {
        flag("duplicate_universe_id", {}, "rigid class id '" + c.id + "' declared twice");
      }
    }
  }

  walk_nodes(seq.root(), [&](const ChainNode& node, const std::vector<long long>& path) {
    const long long n = node.shape.size;
    switch (node.shape.kind) {
      case ShapeKind::Cycle:
        if (n < 4) {
          flag("cycle_too_short", path,
               "cycle length " + std::to_string(n) + " < 4; an Antoine chain needs at least four linked tori");
        }
        break;
      case ShapeKind::Path:
        if (n < 1) flag("path_empty", path, "path chain needs at least one torus");
        break;
      case ShapeKind::BiInfinite:
        if (n < 3) {
          flag("period_too_short", path,
               "bi-infinite chain period " + std::to_string(n) + " < 3");
        }
        if (!node.pinch) {
          flag("missing_pinch", path, "bi-infinite chain has no pinch point marker");
        }
        break;
    }
    if (static_cast<long long>(node.slots.size()) != n) {
      flag(node.shape.kind == ShapeKind::BiInfinite ? "non_periodic_slots"
                                                    : "slot_count_mismatch",
           path,
           "declared " + node.shape.to_string() + " but " +
               std::to_string(node.slots.size()) + " slot contents are stored");
    }
    if (node.pinch) {
      if (node.shape.kind != ShapeKind::BiInfinite) {
        flag("pinch_on_finite_chain", path, "pinch markers belong to bi-infinite chains only");
      } else if (node.pinch->sides != 1 && node.pinch->sides != 2) {
        flag("invalid_pinch_sides", path,
             "pinch point has " + std::to_string(node.pinch->sides) + " sides; expected 1 or 2");
      }
    }
    for (std::size_t i = 0; i < node.slots.size(); ++i) {
      if (is_rigid(node.slots[i])) {
        const auto& leaf = rigid(node.slots[i]);
        if (!seq.find_class(leaf.id)) {
          auto where = path;
          where.push_back(static_cast<long long>(i));
          flag("dangling_rigid_class", where,
               "rigid class '" + leaf.id + "' is not declared in the universe");
        }
      }
    }
  });
  return report;
}

long long resolve_slot_index(const ChainShape& shape, long long i) {
  if (shape.kind == ShapeKind::BiInfinite) {
    if (shape.size <= 0) throw PathError("bi-infinite chain has no period");
    return floor_mod(i, shape.size);
  }
  if (i < 0 || i >= shape.size) {
    throw PathError("slot index " + std::to_string(i) + " out of range for " +
                    shape.to_string());
  }
  return i;
}

SlotContent navigate(const DefiningSequence& seq, std::span<const long long> path) {
  SlotContent current = SlotContent{seq.root_ptr()};
  for (std::size_t step = 0; step < path.size(); ++step) {
    if (!is_subnode(current)) {
      throw PathError("step " + std::to_string(step) + " descends into a leaf");
    }
    const ChainNode& node = subnode(current);
    long long slot = resolve_slot_index(node.shape, path[step]);
    if (slot >= static_cast<long long>(node.slots.size())) {
      throw PathError("slot " + std::to_string(slot) + " missing at step " +
                      std::to_string(step));
    }
    current = node.slots[static_cast<std::size_t>(slot)];
  }
  return current;
}

void walk_nodes(const ChainNode& root,
                const std::function<void(const ChainNode&, const std::vector<long long>&)>& fn) {
  std::vector<long long> path;
  auto rec = [&](auto&& self, const ChainNode& node) -> void {
    fn(node, path);
    for (std::size_t i = 0; i < node.slots.size(); ++i) {
      if (is_subnode(node.slots[i])) {
        path.push_back(static_cast<long long>(i));
        self(self, subnode(node.slots[i]));
        path.pop_back();
      }
    }
  };
  rec(rec, root);
}

}  // namespace antoine
