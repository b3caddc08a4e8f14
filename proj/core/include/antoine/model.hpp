#pragma once

// Combinatorial model of Antoine-type defining sequences: chain shapes,
// labeled chain nodes, rigid leaves, pinch markers, and point addresses.
// All values are immutable after construction and safe to share.

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "antoine/errors.hpp"

namespace antoine {

enum class ShapeKind { Cycle, Path, BiInfinite };

/// Chain shape of one stage. `size` is the torus count for Cycle/Path and
/// the labeling period for BiInfinite. Adjacency: Cycle links slot i with
/// i±1 mod n, Path links i with i±1 without wraparound, BiInfinite links
/// every integer index i with i±1 (slot contents repeat with the period).
struct ChainShape {
  ShapeKind kind = ShapeKind::Cycle;
  long long size = 0;

  static ChainShape cycle(long long n) { return {ShapeKind::Cycle, n}; }
  static ChainShape path(long long n) { return {ShapeKind::Path, n}; }
  static ChainShape bi_infinite(long long period) {
    return {ShapeKind::BiInfinite, period};
  }

  bool finite() const { return kind != ShapeKind::BiInfinite; }
  bool adjacent(long long i, long long j) const;
  std::string to_string() const;

  friend bool operator==(const ChainShape&, const ChainShape&) = default;
};

/// Opaque stand-in for a rigid Cantor set. Two values denote the same
/// (equivalently embedded) set iff their ids are equal; the display name is
/// cosmetic. A rigid class admits exactly one self-equivalence, the
/// identity — the contract every group computation relies on.
struct RigidClass {
  std::string id;
  std::string display_name;

  friend bool operator==(const RigidClass& a, const RigidClass& b) {
    return a.id == b.id;
  }
};

/// Limit-point marker of a bi-infinite chain. `sides` is 2 for the standard
/// two-sided chain and 1 for the degenerate half-infinite chain used in
/// tests; the local genus at the marked point is the number of sides.
struct PinchMarker {
  std::string name = "w";
  int sides = 2;

  friend bool operator==(const PinchMarker&, const PinchMarker&) = default;
};

struct ChainNode;
using NodePtr = std::shared_ptr<const ChainNode>;

/// Marks a slot whose subtree was cut off to keep a finite approximation of
/// an infinite tower. Analyses that need full towers reject sequences
/// containing it.
struct Truncation {
  friend bool operator==(const Truncation&, const Truncation&) { return true; }
};

using SlotContent = std::variant<NodePtr, RigidClass, Truncation>;

bool is_subnode(const SlotContent& c);
bool is_rigid(const SlotContent& c);
bool is_truncation(const SlotContent& c);

/// Throws PathError when the slot does not hold a sub-node.
const ChainNode& subnode(const SlotContent& c);
/// Throws PathError when the slot does not hold a rigid leaf.
const RigidClass& rigid(const SlotContent& c);

/// One stage of a defining sequence: a chain of tori indexed by slot.
/// For BiInfinite shapes `slots` stores one period of contents (index i of
/// the infinite chain resolves to slot i mod period) and `pinch` names the
/// limit point of the chain.
struct ChainNode {
  ChainShape shape;
  std::vector<SlotContent> slots;
  std::optional<PinchMarker> pinch;
};

NodePtr make_node(ChainShape shape, std::vector<SlotContent> slots,
                  std::optional<PinchMarker> pinch = std::nullopt);

struct Violation {
  std::string code;
  std::string where;  // slash path from the root, e.g. "root/2/0"
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

/// A rooted chain tree plus the universe of rigid classes it may use.
/// `approximate()` is true when a Truncation marker appears anywhere.
class DefiningSequence {
 public:
  DefiningSequence(NodePtr root, std::vector<RigidClass> universe);

  const ChainNode& root() const { return *root_; }
  const NodePtr& root_ptr() const { return root_; }
  /// Declared rigid classes, sorted by id.
  const std::vector<RigidClass>& universe() const { return universe_; }
  bool approximate() const { return approximate_; }

  /// Looks up a declared class; nullptr when the id was never declared.
  const RigidClass* find_class(std::string_view id) const;

 private:
  NodePtr root_;
  std::vector<RigidClass> universe_;
  bool approximate_ = false;
};

/// Symbolic address of a point of the Cantor set: a finite slot path from
/// the root plus a terminal descriptor. Slot indices stepping into a
/// BiInfinite node may be any integer; they resolve mod the period.
struct PointAddress {
  struct InRigidLeaf {
    std::string rigid_id;
    std::string sub_address;  // opaque refinement inside the leaf; may be empty
  };
  struct PinchPoint {
    std::string name = "w";
  };
  struct TruncationFrontier {};

  using Terminal = std::variant<InRigidLeaf, PinchPoint, TruncationFrontier>;

  std::vector<long long> path;
  Terminal terminal;

  static PointAddress leaf(std::vector<long long> path, std::string rigid_id,
                           std::string sub_address = "");
  static PointAddress pinch(std::vector<long long> path, std::string name = "w");

  std::string to_string() const;
};

/// Structural checks: chain-size rules, periodic slot counts, pinch marker
/// presence, dangling rigid classes. Violations are data, not exceptions.
ValidationReport validate(const DefiningSequence& seq);

/// Resolves `i` to a storage slot of `shape`; throws PathError when out of
/// range (BiInfinite indices reduce mod the period and never fail).
long long resolve_slot_index(const ChainShape& shape, long long i);

/// Walks `path` from the root and returns the content reached. The empty
/// path returns the root wrapped as a sub-node.
SlotContent navigate(const DefiningSequence& seq, std::span<const long long> path);

/// Depth-first visit of every chain node; `path` holds the slot indices
/// leading to the node (empty for the root).
void walk_nodes(const ChainNode& root,
                const std::function<void(const ChainNode&, const std::vector<long long>&)>& fn);

}  // namespace antoine
