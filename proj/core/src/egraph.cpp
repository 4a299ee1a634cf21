#include "apir/egraph.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_set>

#include "apir/infer.hpp"

namespace apir {

std::size_t ENodeHash::operator()(const ENode& n) const {
  std::size_t h = static_cast<std::size_t>(n.tag);
  h = h * 1000003 + payload_hash(n.payload);
  for (EClassId c : n.children) h = h * 1000003 + c;
  return h;
}

EClassId EGraph::find(EClassId id) const {
  while (uf_[id] != id) {
    uf_[id] = uf_[uf_[id]];
    id = uf_[id];
  }
  return id;
}

void EGraph::canonicalize(ENode& n) const {
  for (EClassId& c : n.children) c = find(c);
}

EClassId EGraph::add(ENode n) {
  canonicalize(n);
  if (auto it = hashcons_.find(n); it != hashcons_.end()) return find(it->second);

  std::vector<AccessPatternShape> childShapes;
  childShapes.reserve(n.children.size());
  for (EClassId c : n.children) childShapes.push_back(classes_.at(c).shape);
  // Throws before any mutation, so an ill-shaped node leaves the graph
  // unchanged.
  AccessPatternShape shape = infer_node(n.tag, n.payload, childShapes, env_);

  EClassId id = static_cast<EClassId>(uf_.size());
  uf_.push_back(id);
  for (EClassId c : n.children) classes_.at(c).parents.emplace_back(n, id);
  EClass cls;
  cls.nodes.push_back(n);
  cls.shape = std::move(shape);
  classes_.emplace(id, std::move(cls));
  hashcons_.emplace(std::move(n), id);
  ++version_;
  return id;
}

EClassId EGraph::add_expr(const Expr& e) {
  ENode n;
  n.tag = e.tag;
  n.payload = e.payload;
  n.children.reserve(e.children.size());
  for (const auto& c : e.children) n.children.push_back(add_expr(*c));
  return add(std::move(n));
}

EClassId EGraph::merge(EClassId a, EClassId b) {
  a = find(a);
  b = find(b);
  if (a == b) return a;
  const EClass& ca = classes_.at(a);
  const EClass& cb = classes_.at(b);
  if (!(ca.shape == cb.shape))
    throw EGraphError("merge of e-classes with different shapes: " + to_string(ca.shape) +
                      " vs " + to_string(cb.shape));
  if (ca.parents.size() < cb.parents.size()) std::swap(a, b);
  uf_[b] = a;
  EClass dead = std::move(classes_.at(b));
  classes_.erase(b);
  EClass& root = classes_.at(a);
  root.nodes.insert(root.nodes.end(), std::make_move_iterator(dead.nodes.begin()),
                    std::make_move_iterator(dead.nodes.end()));
  root.parents.insert(root.parents.end(), std::make_move_iterator(dead.parents.begin()),
                      std::make_move_iterator(dead.parents.end()));
  worklist_.push_back(a);
  ++version_;
  return a;
}

void EGraph::rebuild() {
  while (!worklist_.empty()) {
    std::vector<EClassId> todo;
    todo.swap(worklist_);
    for (EClassId& id : todo) id = find(id);
    std::sort(todo.begin(), todo.end());
    todo.erase(std::unique(todo.begin(), todo.end()), todo.end());
    for (EClassId id : todo) repair(find(id));
  }
}

void EGraph::repair(EClassId id) {
  std::vector<std::pair<ENode, EClassId>> parents;
  parents.swap(classes_.at(id).parents);

  // Drop stale hashcons entries under their old keys before re-inserting
  // canonicalized ones; insertion may discover congruent classes to merge.
  for (auto& [pn, pc] : parents) hashcons_.erase(pn);

  std::vector<std::pair<ENode, EClassId>> fresh;
  fresh.reserve(parents.size());
  std::unordered_set<ENode, ENodeHash> seen;
  for (auto& [pn, pc] : parents) {
    canonicalize(pn);
    pc = find(pc);
    if (auto it = hashcons_.find(pn); it != hashcons_.end()) {
      EClassId other = find(it->second);
      if (other != pc) pc = merge(pc, other);
      it->second = find(pc);
    } else {
      hashcons_.emplace(pn, pc);
    }
    if (seen.insert(pn).second) fresh.emplace_back(std::move(pn), find(pc));
  }

  // `id` itself may have been absorbed by a congruence merge above.
  EClass& cls = classes_.at(find(id));
  cls.parents.insert(cls.parents.end(), std::make_move_iterator(fresh.begin()),
                     std::make_move_iterator(fresh.end()));

  std::unordered_set<ENode, ENodeHash> nodeSet;
  std::vector<ENode> nodes;
  nodes.reserve(cls.nodes.size());
  for (ENode& n : cls.nodes) {
    canonicalize(n);
    if (nodeSet.insert(n).second) nodes.push_back(std::move(n));
  }
  cls.nodes = std::move(nodes);
}

const AccessPatternShape& EGraph::shape_of(EClassId id) const {
  return classes_.at(find(id)).shape;
}

const std::vector<ENode>& EGraph::nodes_of(EClassId id) const {
  return classes_.at(find(id)).nodes;
}

std::vector<EClassId> EGraph::class_ids() const {
  std::vector<EClassId> out;
  out.reserve(classes_.size());
  for (EClassId id = 0; id < static_cast<EClassId>(uf_.size()); ++id)
    if (find(id) == id) out.push_back(id);
  return out;
}

std::size_t EGraph::num_classes() const {
  std::size_t n = 0;
  for (EClassId id = 0; id < static_cast<EClassId>(uf_.size()); ++id)
    if (find(id) == id) ++n;
  return n;
}

void EGraph::dump(std::ostream& os) const {
  for (EClassId id : class_ids()) {
    const EClass& cls = classes_.at(id);
    os << id << " : " << to_string(cls.shape) << " :";
    for (const ENode& n : cls.nodes) {
      os << " (" << tag_name(n.tag);
      std::string brief = payload_brief(n.payload);
      if (!brief.empty()) os << ' ' << brief;
      for (EClassId c : n.children) os << " $" << find(c);
      os << ')';
    }
    os << '\n';
  }
}

void EGraph::check_invariants() const {
  if (!worklist_.empty()) throw EGraphError("check_invariants: graph has pending repairs");
  std::unordered_map<ENode, EClassId, ENodeHash> seen;
  for (EClassId id : class_ids()) {
    for (ENode n : classes_.at(id).nodes) {
      canonicalize(n);
      auto [it, inserted] = seen.emplace(n, id);
      if (!inserted && it->second != id)
        throw EGraphError("hashcons violation: identical node in classes " +
                          std::to_string(it->second) + " and " + std::to_string(id));
      auto hc = hashcons_.find(n);
      if (hc == hashcons_.end())
        throw EGraphError("congruence violation: class node missing from hashcons");
      if (find(hc->second) != id)
        throw EGraphError("congruence violation: hashcons maps node to class " +
                          std::to_string(find(hc->second)) + ", expected " +
                          std::to_string(id));
    }
  }
  for (const auto& [n, id] : hashcons_) {
    ENode canon = n;
    canonicalize(canon);
    if (!(canon == n))
      throw EGraphError("hashcons violation: stale (non-canonical) key present");
    if (!seen.count(canon))
      throw EGraphError("hashcons violation: entry not present in any class node list");
  }
}

}  // namespace apir
