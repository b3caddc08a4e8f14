#pragma once

// Geometric-index calculus over declared index facts: composition along
// nested tori (the product rule), the evenness constraint for unions of
// unknotted index-0 tori, the index-1 parallelism certificate, and the
// fixed stage index of an Antoine chain. Index values are declared facts
// validated against these laws, never computed from geometry.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "antoine/bigint.hpp"
#include "antoine/model.hpp"

namespace antoine {

/// Declares N(child_union, parent): the geometric index of a finite union
/// of disjoint solid tori inside a parent torus. Knottedness flags default
/// to unknotted; `child_knotted` may be left empty for all-unknotted.
struct IndexDecl {
  std::string parent;
  std::vector<std::string> children;
  std::uint64_t value = 0;
  bool parent_knotted = false;
  std::vector<bool> child_knotted;

  bool child_is_knotted(std::size_t i) const {
    return i < child_knotted.size() && child_knotted[i];
  }
};

/// Product rule along a nested chain T_0 ⊂ T_1 ⊂ … ⊂ T_r: decls[i] declares
/// the index of stage i's union inside T_{i+1}, and each decl above the
/// first must have exactly decls[i-1].parent as its child union. Throws
/// NestingError when the chain is not properly nested.
BigInt compose_index(std::span<const IndexDecl> decls);

/// Evenness law: when every member of the child union is unknotted and has
/// individual index 0 in the parent (`unknotted_index0[i]` per member), the
/// declared union index must be even. Violations are reported, not thrown.
ValidationReport check_evenness(const IndexDecl& decl,
                                const std::vector<bool>& unknotted_index0);

/// Witness that the region between the child and parent boundary tori is a
/// product collar (boundary × [0,1]).
struct ParallelCertificate {
  std::string parent;
  std::string child;
  std::string description;
};

/// For a single unknotted torus inside an unknotted parent: a parallelism
/// certificate iff the declared index is 1. Throws HypothesisError when the
/// child union is not a single unknotted torus (or the parent is knotted).
std::optional<ParallelCertificate> mark_parallel(const IndexDecl& decl);

/// The geometric index of the union of a validated Antoine stage's tori in
/// its parent torus; always 2. Throws ShapeError for non-cycle nodes.
int antoine_stage_index(const ChainNode& node);

}  // namespace antoine
