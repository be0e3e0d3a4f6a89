#pragma once

// Types of the object language: the individual type `i`, the truth-value
// type `o`, and function types whose codomain is always a predicate type.
// The grammar never produces a codomain `i`; the fun() builder enforces it.

#include <cassert>
#include <memory>
#include <stdexcept>
#include <string>

namespace nl {

enum class TypeKind { Iota, O, Fun };

class Type {
 public:
  Type() : node_(o_node()) {}

  static Type iota() { return Type(iota_node()); }
  static Type o() { return Type(o_node()); }

  // Throws std::invalid_argument when cod is Iota: no well-formed type has
  // codomain `i`.
  static Type fun(Type dom, Type cod) {
    if (cod.kind() == TypeKind::Iota)
      throw std::invalid_argument("function type with codomain i");
    auto n = std::make_shared<Node>();
    n->kind = TypeKind::Fun;
    n->dom = dom.node_;
    n->cod = cod.node_;
    return Type(std::shared_ptr<const Node>(std::move(n)));
  }

  TypeKind kind() const { return node_->kind; }
  bool is_fun() const { return kind() == TypeKind::Fun; }

  Type dom() const {
    assert(is_fun());
    return Type(node_->dom);
  }
  Type cod() const {
    assert(is_fun());
    return Type(node_->cod);
  }

  friend bool operator==(const Type& a, const Type& b) {
    return eq(a.node_.get(), b.node_.get());
  }
  friend bool operator!=(const Type& a, const Type& b) { return !(a == b); }

  // Total order, used for deterministic containers.
  friend int compare(const Type& a, const Type& b) {
    return cmp(a.node_.get(), b.node_.get());
  }
  friend bool operator<(const Type& a, const Type& b) {
    return compare(a, b) < 0;
  }

 private:
  struct Node {
    TypeKind kind = TypeKind::O;
    std::shared_ptr<const Node> dom, cod;
  };

  explicit Type(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static const std::shared_ptr<const Node>& iota_node() {
    static const auto n = [] {
      auto m = std::make_shared<Node>();
      m->kind = TypeKind::Iota;
      return std::shared_ptr<const Node>(m);
    }();
    return n;
  }
  static const std::shared_ptr<const Node>& o_node() {
    static const auto n = std::make_shared<const Node>();
    return n;
  }

  static bool eq(const Node* a, const Node* b) {
    if (a == b) return true;
    if (a->kind != b->kind) return false;
    if (a->kind != TypeKind::Fun) return true;
    return eq(a->dom.get(), b->dom.get()) && eq(a->cod.get(), b->cod.get());
  }

  static int cmp(const Node* a, const Node* b) {
    if (a == b) return 0;
    if (a->kind != b->kind)
      return static_cast<int>(a->kind) < static_cast<int>(b->kind) ? -1 : 1;
    if (a->kind != TypeKind::Fun) return 0;
    if (int c = cmp(a->dom.get(), b->dom.get())) return c;
    return cmp(a->cod.get(), b->cod.get());
  }

  std::shared_ptr<const Node> node_;
};

inline bool is_predicate_type(const Type& t) {
  return t.kind() != TypeKind::Iota;
}

// `i i o` style rendering: juxtaposition associates to the right, a
// function-typed domain gets parentheses.
inline std::string to_string(const Type& t) {
  switch (t.kind()) {
    case TypeKind::Iota:
      return "i";
    case TypeKind::O:
      return "o";
    case TypeKind::Fun: {
      std::string d = to_string(t.dom());
      if (t.dom().is_fun()) d = "(" + d + ")";
      return d + " " + to_string(t.cod());
    }
  }
  return {};
}

// Arity of a predicate type tau_1 ... tau_n o; 0 for `o`, unset for `i`.
inline int type_arity(const Type& t) {
  int n = 0;
  Type cur = t;
  while (cur.is_fun()) {
    ++n;
    cur = cur.cod();
  }
  return n;
}

}  // namespace nl
