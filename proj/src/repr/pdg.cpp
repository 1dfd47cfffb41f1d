#include "scpd/repr/pdg.hpp"

#include <map>
#include <set>
#include <sstream>

namespace scpd::repr {

using namespace scpd::lang;

namespace {

// Collects variable names referenced by expressions, in first-seen order.
class NameCollector {
 public:
  std::vector<std::string> names;

  void add(const std::string& name) {
    if (seen_.insert(name).second) names.push_back(name);
  }

  void expr(const Expr& e) {
    std::visit([this](const auto& n) { node(n); }, e.node);
  }

  void declarators(const std::vector<Declarator>& ds) {
    for (const auto& d : ds) {
      add(d.name);
      if (d.init) expr(*d.init);
    }
  }

 private:
  void node(const Literal&) {}
  void node(const Name& n) { add(n.id); }
  void node(const FieldAccess& n) { expr(*n.target); }
  void node(const Call& n) {
    if (n.target) expr(**n.target);
    for (const auto& a : n.args) expr(a);
  }
  void node(const ArrayAccess& n) {
    expr(*n.array);
    expr(*n.index);
  }
  void node(const NewObject& n) {
    for (const auto& a : n.args) expr(a);
  }
  void node(const NewArray& n) {
    for (const auto& s : n.sizes) expr(s);
  }
  void node(const Unary& n) { expr(*n.operand); }
  void node(const Binary& n) {
    expr(*n.lhs);
    expr(*n.rhs);
  }
  void node(const Assign& n) {
    expr(*n.target);
    expr(*n.value);
  }
  void node(const CompoundAssign& n) {
    expr(*n.target);
    expr(*n.value);
  }
  void node(const Paren& n) { expr(*n.inner); }

  std::set<std::string> seen_;
};

// Names a statement touches in its own header/expression, excluding nested
// statements.
std::vector<std::string> own_names(const Stmt& s) {
  NameCollector c;
  if (const auto* d = s.as<LocalVarDecl>()) {
    c.declarators(d->declarators);
  } else if (const auto* e = s.as<ExprStmt>()) {
    c.expr(e->expr);
  } else if (const auto* i = s.as<If>()) {
    c.expr(i->cond);
  } else if (const auto* w = s.as<While>()) {
    c.expr(w->cond);
  } else if (const auto* f = s.as<For>()) {
    if (const auto* fd = std::get_if<ForDecl>(&f->init)) c.declarators(fd->declarators);
    if (const auto* es = std::get_if<std::vector<Expr>>(&f->init)) {
      for (const auto& e : *es) c.expr(e);
    }
    if (f->cond) c.expr(*f->cond);
    for (const auto& e : f->update) c.expr(e);
  } else if (const auto* r = s.as<Return>()) {
    if (r->value) c.expr(*r->value);
  }
  return std::move(c.names);
}

class PdgBuilder {
 public:
  explicit PdgBuilder(std::string method) { pdg_.method = std::move(method); }

  Pdg build(const Block& body) {
    pdg_.nodes.push_back({PdgNodeKind::Entry, "entry"});
    governed(body.stmts, 0);
    for (const auto& [stmt_node, name] : pending_data_) {
      auto it = data_ids_.find(name);
      if (it == data_ids_.end()) {
        it = data_ids_.emplace(name, pdg_.nodes.size()).first;
        pdg_.nodes.push_back({PdgNodeKind::Data, "data:" + name});
      }
      pdg_.data_edges.emplace_back(stmt_node, it->second);
    }
    return std::move(pdg_);
  }

 private:
  // Adds statement nodes for `stmts` (flattening nested blocks) under the
  // controlling node `parent`.
  void governed(const std::vector<Stmt>& stmts, std::size_t parent) {
    for (const auto& s : stmts) governed(s, parent);
  }

  void governed(const Stmt& s, std::size_t parent) {
    if (const auto* b = s.as<Block>()) {
      governed(b->stmts, parent);
      return;
    }
    const std::size_t id = pdg_.nodes.size();
    pdg_.nodes.push_back({PdgNodeKind::Statement, "stmt:" + std::string(kind_name(s))});
    pdg_.control_edges.emplace_back(parent, id);
    for (auto& name : own_names(s)) pending_data_.emplace_back(id, std::move(name));

    if (const auto* i = s.as<If>()) {
      governed(*i->then_branch, id);
      if (i->else_branch) governed(**i->else_branch, id);
    } else if (const auto* w = s.as<While>()) {
      governed(*w->body, id);
    } else if (const auto* f = s.as<For>()) {
      governed(*f->body, id);
    }
  }

  Pdg pdg_;
  std::vector<std::pair<std::size_t, std::string>> pending_data_;
  std::map<std::string, std::size_t> data_ids_;
};

}  // namespace

Pdg pdg_of(const MethodDecl& method) { return PdgBuilder(method.name).build(method.body); }

std::vector<Pdg> pdgs_of(const CompilationUnit& unit) {
  std::vector<Pdg> out;
  for (const auto& cls : unit.type_decls) {
    for (const auto& member : cls.members) {
      if (const auto* m = std::get_if<MethodDecl>(&member)) out.push_back(pdg_of(*m));
    }
  }
  return out;
}

std::string to_text(const Pdg& pdg) {
  std::ostringstream os;
  os << "pdg " << pdg.method << '\n';
  for (std::size_t i = 0; i < pdg.nodes.size(); ++i) {
    os << "node " << i << ' ' << pdg.nodes[i].label << '\n';
  }
  for (const auto& [from, to] : pdg.control_edges) os << "control " << from << ' ' << to << '\n';
  for (const auto& [from, to] : pdg.data_edges) os << "data " << from << ' ' << to << '\n';
  return os.str();
}

}  // namespace scpd::repr
