#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apir/egraph.hpp"
#include "apir/ir.hpp"

namespace apir {

struct PatternNode;
using PatternPtr = std::shared_ptr<const PatternNode>;

/// Expression-shaped pattern. Leaves may be variables (`?x`), and a
/// construct's literal payload may itself be a variable, e.g.
/// `(access ?a ?n)` or `(reshape ?a ?shape)`.
struct PatternNode {
  std::string var;                 // nonempty: variable leaf, rest unused
  Tag tag = Tag::TensorRef;
  std::optional<Payload> payload;  // concrete literal to match
  std::string payload_var;         // nonempty: bind the whole literal
  std::vector<PatternPtr> children;

  bool is_var() const { return !var.empty(); }
};

/// Same grammar as `parse`, plus `?name` variables in expression position
/// and in the literal positions of access/squeeze/concat/transpose/reshape.
PatternPtr parse_pattern(std::string_view text);

struct Substitution {
  std::map<std::string, EClassId> classes;
  std::map<std::string, Payload> literals;

  EClassId cls(const std::string& name) const;
  const Payload& literal(const std::string& name) const;
};

struct Match {
  EClassId root;
  Substitution subst;
};

/// Complete enumeration of matches of `p` modulo the graph's equalities,
/// one entry per distinct (root class, substitution). Repeated variables
/// must resolve to the same canonical class. The graph must be clean
/// (rebuilt) for the enumeration to be complete.
std::vector<Match> ematch(const EGraph& g, const PatternNode& p);

}  // namespace apir
