#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "apir/ir.hpp"
#include "apir/shape.hpp"

namespace apir {

using EClassId = std::uint32_t;

/// One operator application over e-class children. Literals are part of
/// node identity.
struct ENode {
  Tag tag;
  Payload payload;
  std::vector<EClassId> children;

  bool operator==(const ENode& o) const {
    return tag == o.tag && payload == o.payload && children == o.children;
  }
};

struct ENodeHash {
  std::size_t operator()(const ENode& n) const;
};

/// Raised on internal soundness violations, most importantly an attempt
/// to merge e-classes whose shape analyses differ.
struct EGraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Hashconsed e-nodes partitioned into e-classes by a union-find. Every
/// e-class carries an AccessPatternShape analysis value, computed when the
/// class is created and asserted equal on every merge. Congruence repair
/// is deferred: mutations mark classes dirty and `rebuild` restores the
/// invariants.
class EGraph {
 public:
  explicit EGraph(ShapeEnv env) : env_(std::move(env)) {}

  /// Adds a node (children must be valid ids). Returns the existing class
  /// when the canonicalized node is already hashconsed. Throws ShapeError
  /// if the node is ill-shaped; the graph is left unchanged.
  EClassId add(ENode n);

  /// Recursively adds an expression tree.
  EClassId add_expr(const Expr& e);

  /// Merges two classes. Throws EGraphError when their analyses differ.
  EClassId merge(EClassId a, EClassId b);

  /// Restores congruence and hashcons canonicality. Idempotent.
  void rebuild();

  EClassId find(EClassId id) const;
  bool clean() const { return worklist_.empty(); }

  const AccessPatternShape& shape_of(EClassId id) const;
  const std::vector<ENode>& nodes_of(EClassId id) const;

  /// Canonical class ids in ascending order.
  std::vector<EClassId> class_ids() const;
  std::size_t num_nodes() const { return hashcons_.size(); }
  std::size_t num_classes() const;

  /// Bumped by every effective mutation; unchanged across an operation
  /// means the graph did not change.
  std::uint64_t version() const { return version_; }

  const ShapeEnv& shape_env() const { return env_; }

  /// One line per class: `classId : shape : node*`. Debugging aid; the
  /// format is documented but not stability-guaranteed.
  void dump(std::ostream& os) const;

  /// Full-scan check of the hashcons and congruence invariants; throws
  /// EGraphError on any violation. Requires a clean graph.
  void check_invariants() const;

 private:
  struct EClass {
    std::vector<ENode> nodes;
    std::vector<std::pair<ENode, EClassId>> parents;
    AccessPatternShape shape;
  };

  void canonicalize(ENode& n) const;
  void repair(EClassId id);

  ShapeEnv env_;
  mutable std::vector<EClassId> uf_;  // mutable: find performs path halving
  std::unordered_map<EClassId, EClass> classes_;
  std::unordered_map<ENode, EClassId, ENodeHash> hashcons_;
  std::vector<EClassId> worklist_;
  std::uint64_t version_ = 0;
};

}  // namespace apir
