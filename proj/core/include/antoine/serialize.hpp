#pragma once

// Canonical JSON serialization of defining sequences. Equal sequences (same
// tree, same rigid ids and names) produce identical bytes, and serialized
// output round-trips through deserialize. docs/format.md documents the
// schema.

#include <string>
#include <string_view>

#include "antoine/model.hpp"

namespace antoine {

std::string canonical_serialize(const DefiningSequence& seq);

/// Accepts any JSON formatting of the documented schema; unknown or missing
/// fields raise ParseError. The result may still fail validate().
DefiningSequence deserialize(std::string_view text);

/// Canonical bytes of one subtree (no universe); usable as a structural
/// equality key. Display names are not part of the key.
std::string canonical_node_key(const ChainNode& node);

bool structurally_equal(const ChainNode& a, const ChainNode& b);

}  // namespace antoine
