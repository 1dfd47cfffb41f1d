#include "scpd/mutate/transforms.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <type_traits>

#include "scpd/lang/formatter.hpp"

namespace scpd::mutate {

using namespace lang;

namespace {

template <typename T, typename... Us>
inline constexpr bool is_any = (std::is_same_v<T, Us> || ...);

// ------------------------------------------------------------------ walkers

template <typename F>
void each_child_expr(Expr& e, F&& f) {
  std::visit(
      [&](auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, FieldAccess>) {
          f(*n.target);
        } else if constexpr (std::is_same_v<T, Call>) {
          if (n.target) f(**n.target);
          for (auto& a : n.args) f(a);
        } else if constexpr (std::is_same_v<T, ArrayAccess>) {
          f(*n.array);
          f(*n.index);
        } else if constexpr (std::is_same_v<T, NewObject>) {
          for (auto& a : n.args) f(a);
        } else if constexpr (std::is_same_v<T, NewArray>) {
          for (auto& a : n.sizes) f(a);
        } else if constexpr (std::is_same_v<T, Unary>) {
          f(*n.operand);
        } else if constexpr (std::is_same_v<T, Binary>) {
          f(*n.lhs);
          f(*n.rhs);
        } else if constexpr (is_any<T, Assign, CompoundAssign>) {
          f(*n.target);
          f(*n.value);
        } else if constexpr (std::is_same_v<T, Paren>) {
          f(*n.inner);
        }
      },
      e.node);
}

// Post-order, so a rewrite never revisits the copies it makes.
template <typename F>
void walk_expr(Expr& e, F& f) {
  each_child_expr(e, [&](Expr& c) { walk_expr(c, f); });
  f(e);
}

void declarator_inits(std::vector<Declarator>& ds, const auto& f) {
  for (auto& d : ds) {
    if (d.init) f(*d.init);
  }
}

// Expressions owned by the statement itself, not by nested statements.
template <typename F>
void stmt_exprs(Stmt& s, F&& f) {
  if (auto* d = s.as<LocalVarDecl>()) {
    declarator_inits(d->declarators, f);
  } else if (auto* e = s.as<ExprStmt>()) {
    f(e->expr);
  } else if (auto* i = s.as<If>()) {
    f(i->cond);
  } else if (auto* w = s.as<While>()) {
    f(w->cond);
  } else if (auto* fo = s.as<For>()) {
    if (auto* fd = std::get_if<ForDecl>(&fo->init)) {
      declarator_inits(fd->declarators, f);
    } else if (auto* es = std::get_if<std::vector<Expr>>(&fo->init)) {
      for (auto& x : *es) f(x);
    }
    if (fo->cond) f(*fo->cond);
    for (auto& x : fo->update) f(x);
  } else if (auto* r = s.as<Return>()) {
    if (r->value) f(*r->value);
  }
}

template <typename F>
void each_child_stmt(Stmt& s, F&& f) {
  if (auto* b = s.as<Block>()) {
    for (auto& c : b->stmts) f(c);
  } else if (auto* i = s.as<If>()) {
    f(*i->then_branch);
    if (i->else_branch) f(**i->else_branch);
  } else if (auto* w = s.as<While>()) {
    f(*w->body);
  } else if (auto* fo = s.as<For>()) {
    f(*fo->body);
  }
}

// Pre-order over every statement.
template <typename F>
void walk_stmts(Stmt& s, F& f) {
  f(s);
  each_child_stmt(s, [&](Stmt& c) { walk_stmts(c, f); });
}

template <typename F>
void walk_block(Block& b, F& f) {
  for (auto& s : b.stmts) walk_stmts(s, f);
}

std::string member_name(const Member& m) {
  if (const auto* f = std::get_if<FieldDecl>(&m)) {
    return f->declarators.empty() ? std::string() : f->declarators.front().name;
  }
  return std::get<MethodDecl>(m).name;
}

// Rolls and records for one filter pass.
struct Pass {
  std::string_view kind;
  const std::string& file;
  double chance;
  Rng& rng;
  std::string cls;
  std::string member;
  std::vector<ModificationRecord> records;

  bool roll() { return rng.roll(chance); }

  void hit(NodeId anchor) {
    std::string path = cls;
    if (!member.empty()) path += "." + member;
    path += "#" + std::to_string(anchor);
    records.push_back({std::string(kind), false, file, std::move(path), 1, 0});
  }

  // f(ClassDecl&) then g(Member&) for each member, with the context set.
  template <typename C, typename M>
  void classes(CompilationUnit& u, C&& on_class, M&& on_member) {
    for (auto& c : u.type_decls) {
      cls = c.name;
      member.clear();
      on_class(c);
      for (auto& m : c.members) {
        cls = c.name;
        member = member_name(m);
        on_member(m);
      }
    }
    cls.clear();
    member.clear();
  }

  // f(Expr& root, NodeId anchor) for every top-level expression.
  template <typename F>
  void expr_roots(CompilationUnit& u, F&& f) {
    classes(
        u, [](ClassDecl&) {},
        [&](Member& m) {
          if (auto* fd = std::get_if<FieldDecl>(&m)) {
            declarator_inits(fd->declarators, [&](Expr& e) { f(e, fd->id); });
            return;
          }
          auto on_stmt = [&](Stmt& s) { stmt_exprs(s, [&](Expr& e) { f(e, s.id); }); };
          walk_block(std::get<MethodDecl>(m).body, on_stmt);
        });
  }

  // g(Expr&) post-order over every expression node.
  template <typename G>
  void exprs(CompilationUnit& u, G&& g) {
    expr_roots(u, [&](Expr& root, NodeId) { walk_expr(root, g); });
  }
};

// ------------------------------------------------------------------ comments

constexpr std::string_view kAddedComment = "// TODO: check this";

constexpr std::array<std::string_view, 24> kLorem = {
    "lorem", "ipsum", "dolor", "sit",   "amet",  "consectetur", "adipiscing", "elit",
    "sed",   "do",    "eiusmod", "tempor", "incididunt", "ut", "labore",    "et",
    "dolore", "magna", "aliqua", "enim",  "ad",    "minim",       "veniam",     "quis"};

std::size_t word_count(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::size_t n = 0;
  std::string w;
  while (in >> w) ++n;
  return n;
}

Comment mutate_comment(const Comment& c, Rng& rng) {
  std::string_view inner = c.text;
  if (c.block) {
    inner.remove_prefix(2);
    if (inner.size() >= 2) inner.remove_suffix(2);
  } else {
    inner.remove_prefix(2);
  }
  const std::size_t n = std::max<std::size_t>(1, word_count(inner));
  std::string words;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) words += ' ';
    words += kLorem[rng.below(kLorem.size())];
  }
  return {c.block, c.block ? "/* " + words + " */" : "// " + words};
}

std::vector<ModificationRecord> add_comments(CompilationUnit& u, Pass& p) {
  auto add = [&](Comments& cs, NodeId id) {
    if (!p.roll()) return;
    cs.push_back({false, std::string(kAddedComment)});
    p.hit(id);
  };
  p.classes(
      u, [&](ClassDecl& c) { add(c.comments, c.id); },
      [&](Member& m) {
        if (auto* f = std::get_if<FieldDecl>(&m)) {
          add(f->comments, f->id);
          return;
        }
        auto& md = std::get<MethodDecl>(m);
        add(md.comments, md.id);
        auto on_stmt = [&](Stmt& s) {
          if (s.as<Block>() == nullptr) add(s.comments, s.id);
        };
        walk_block(md.body, on_stmt);
      });
  return std::move(p.records);
}

// Shared walk for tRC and tMC: every node that carries comments, together
// with its closing-brace comments.
template <typename F>
std::vector<ModificationRecord> commented_nodes(CompilationUnit& u, Pass& p, F&& apply) {
  auto visit = [&](Comments& own, Comments* trailing, NodeId id) {
    if (own.empty() && (trailing == nullptr || trailing->empty())) return;
    if (!p.roll()) return;
    apply(own);
    if (trailing != nullptr) apply(*trailing);
    p.hit(id);
  };
  p.classes(
      u, [&](ClassDecl& c) { visit(c.comments, &c.trailing, c.id); },
      [&](Member& m) {
        if (auto* f = std::get_if<FieldDecl>(&m)) {
          visit(f->comments, nullptr, f->id);
          return;
        }
        auto& md = std::get<MethodDecl>(m);
        visit(md.comments, &md.body.trailing, md.id);
        auto on_stmt = [&](Stmt& s) {
          auto* b = s.as<Block>();
          visit(s.comments, b != nullptr ? &b->trailing : nullptr, s.id);
        };
        walk_block(md.body, on_stmt);
      });
  return std::move(p.records);
}

// ------------------------------------------------------------------ renaming

enum Category : unsigned { kClass = 1, kField = 2, kMethod = 4, kVar = 8 };

enum class Role { ClassDecl, TypeName, FieldDecl, MethodDecl, VarDecl, NameRef, CallName, MemberRef };

struct Where {
  std::string cls;
  std::string member;
  NodeId anchor = 0;
};

template <typename F>
void type_name(TypeRef& t, const Where& w, F& f) {
  if (!t.is_primitive()) f(t.name, Role::TypeName, w);
}

template <typename F>
void expr_identifiers(Expr& root, const Where& w, F& f) {
  auto g = [&](Expr& e) {
    if (auto* n = e.as<Name>()) {
      f(n->id, Role::NameRef, w);
    } else if (auto* c = e.as<Call>()) {
      f(c->name, Role::CallName, w);
    } else if (auto* fa = e.as<FieldAccess>()) {
      f(fa->member, Role::MemberRef, w);
    } else if (auto* no = e.as<NewObject>()) {
      f(no->type, Role::TypeName, w);
    } else if (auto* na = e.as<NewArray>()) {
      type_name(na->element, w, f);
    }
  };
  walk_expr(root, g);
}

// Every identifier occurrence in pre-order of declarations, with its role.
template <typename F>
void each_identifier(CompilationUnit& u, F&& f) {
  for (auto& c : u.type_decls) {
    Where w{c.name, "", c.id};
    f(c.name, Role::ClassDecl, w);
    for (auto& m : c.members) {
      w.cls = c.name;
      w.member = member_name(m);
      if (auto* fd = std::get_if<FieldDecl>(&m)) {
        w.anchor = fd->id;
        type_name(fd->type, w, f);
        for (auto& d : fd->declarators) {
          f(d.name, Role::FieldDecl, w);
          if (d.init) expr_identifiers(*d.init, w, f);
        }
        continue;
      }
      auto& md = std::get<MethodDecl>(m);
      w.anchor = md.id;
      if (md.return_type) type_name(*md.return_type, w, f);
      f(md.name, Role::MethodDecl, w);
      for (auto& prm : md.params) {
        type_name(prm.type, w, f);
        f(prm.name, Role::VarDecl, w);
      }
      auto on_stmt = [&](Stmt& s) {
        Where sw = w;
        sw.anchor = s.id;
        auto decls = [&](TypeRef& t, std::vector<Declarator>& ds) {
          type_name(t, sw, f);
          for (auto& d : ds) {
            f(d.name, Role::VarDecl, sw);
            if (d.init) expr_identifiers(*d.init, sw, f);
          }
        };
        if (auto* d = s.as<LocalVarDecl>()) {
          decls(d->type, d->declarators);
          return;
        }
        if (auto* fo = s.as<For>()) {
          if (auto* fd = std::get_if<ForDecl>(&fo->init)) {
            decls(fd->type, fd->declarators);
            if (fo->cond) expr_identifiers(*fo->cond, sw, f);
            for (auto& x : fo->update) expr_identifiers(x, sw, f);
            return;
          }
        }
        stmt_exprs(s, [&](Expr& e) { expr_identifiers(e, sw, f); });
      };
      walk_block(md.body, on_stmt);
    }
  }
}

unsigned categories_of(Role r) {
  switch (r) {
    case Role::ClassDecl:
    case Role::TypeName:
      return kClass;
    case Role::FieldDecl:
    case Role::MemberRef:
      return kField;
    case Role::MethodDecl:
    case Role::CallName:
      return kMethod;
    case Role::VarDecl:
      return kVar;
    case Role::NameRef:
      return kClass | kField | kVar;
  }
  return 0;
}

bool is_declaration(Role r) {
  return r == Role::ClassDecl || r == Role::FieldDecl || r == Role::MethodDecl ||
         r == Role::VarDecl;
}

std::vector<ModificationRecord> rename_identifiers(CompilationUnit& u, Pass& p) {
  struct Declared {
    std::string name;
    unsigned cats = 0;
    Where where;
  };
  std::vector<Declared> declared;
  std::map<std::string, std::size_t> index;
  std::set<std::string> taken;
  each_identifier(u, [&](std::string& id, Role role, const Where& w) {
    taken.insert(id);
    if (!is_declaration(role) || (role == Role::MethodDecl && id == "main")) return;
    auto [it, fresh] = index.emplace(id, declared.size());
    if (fresh) declared.push_back({id, 0, w});
    declared[it->second].cats |= categories_of(role);
  });

  std::size_t counter = 0;
  for (const auto& d : declared) {
    if (!p.roll()) continue;
    std::string fresh;
    do {
      fresh = "v" + std::to_string(++counter);
    } while (taken.count(fresh) != 0);
    taken.insert(fresh);
    each_identifier(u, [&](std::string& id, Role role, const Where&) {
      if (id == d.name && (categories_of(role) & d.cats) != 0) id = fresh;
    });
    p.cls = d.where.cls;
    p.member = d.where.member;
    p.hit(d.where.anchor);
  }
  return std::move(p.records);
}

// ------------------------------------------------------------------ reordering

std::vector<ModificationRecord> shuffle_statements(CompilationUnit& u, Pass& p) {
  auto shuffle = [&](Block& b, NodeId id) {
    if (b.stmts.size() < 2 || !p.roll()) return;
    p.rng.shuffle(b.stmts);
    p.hit(id);
  };
  p.classes(
      u, [](ClassDecl&) {},
      [&](Member& m) {
        auto* md = std::get_if<MethodDecl>(&m);
        if (md == nullptr) return;
        shuffle(md->body, md->id);
        auto on_stmt = [&](Stmt& s) {
          if (auto* b = s.as<Block>()) shuffle(*b, s.id);
        };
        walk_block(md->body, on_stmt);
      });
  return std::move(p.records);
}

std::vector<ModificationRecord> shuffle_members(CompilationUnit& u, Pass& p) {
  for (auto& c : u.type_decls) {
    if (c.members.size() < 2 || !p.roll()) continue;
    p.rng.shuffle(c.members);
    p.cls = c.name;
    p.member.clear();
    p.hit(c.id);
  }
  return std::move(p.records);
}

std::vector<ModificationRecord> swap_operands(CompilationUnit& u, Pass& p, bool safe) {
  p.exprs(u, [&](Expr& e) {
    auto* b = e.as<Binary>();
    if (b == nullptr || (safe && !is_commutative(b->op)) || !p.roll()) return;
    std::swap(b->lhs, b->rhs);
    p.hit(e.id);
  });
  return std::move(p.records);
}

// ------------------------------------------------------------------ types

template <typename F>
void each_type(CompilationUnit& u, Pass& p, F&& f) {
  auto in_expr = [&](Expr& root, NodeId anchor) {
    auto g = [&](Expr& e) {
      if (auto* na = e.as<NewArray>()) f(na->element, anchor);
    };
    walk_expr(root, g);
  };
  p.classes(
      u, [](ClassDecl&) {},
      [&](Member& m) {
        if (auto* fd = std::get_if<FieldDecl>(&m)) {
          f(fd->type, fd->id);
          declarator_inits(fd->declarators, [&](Expr& e) { in_expr(e, fd->id); });
          return;
        }
        auto& md = std::get<MethodDecl>(m);
        if (md.return_type) f(*md.return_type, md.id);
        for (auto& prm : md.params) f(prm.type, md.id);
        auto on_stmt = [&](Stmt& s) {
          if (auto* d = s.as<LocalVarDecl>()) f(d->type, s.id);
          if (auto* fo = s.as<For>()) {
            if (auto* fd = std::get_if<ForDecl>(&fo->init)) f(fd->type, s.id);
          }
          stmt_exprs(s, [&](Expr& e) { in_expr(e, s.id); });
        };
        walk_block(md.body, on_stmt);
      });
}

std::vector<ModificationRecord> widen_types(CompilationUnit& u, Pass& p) {
  each_type(u, p, [&](TypeRef& t, NodeId anchor) {
    const char* wider = t.name == "int" ? "long" : t.name == "float" ? "double" : nullptr;
    if (wider == nullptr || !p.roll()) return;
    t.name = wider;
    p.hit(anchor);
  });
  return std::move(p.records);
}

// ------------------------------------------------------------------ expansions

Expr literal_one() { return Expr(Literal{LiteralKind::Int, "1"}); }

// Duplicating the target is only safe when evaluating it twice changes nothing.
bool pure(Expr& e) {
  bool ok = true;
  auto check = [&](const Expr& x) {
    if (x.as<Call>() != nullptr || x.as<Assign>() != nullptr ||
        x.as<CompoundAssign>() != nullptr || x.as<NewObject>() != nullptr ||
        x.as<NewArray>() != nullptr) {
      ok = false;
    }
    const auto* un = x.as<Unary>();
    if (un != nullptr && (un->op == UnaryOp::Inc || un->op == UnaryOp::Dec)) {
      ok = false;
    }
  };
  walk_expr(e, check);
  return ok;
}

std::vector<ModificationRecord> expand_compound(CompilationUnit& u, Pass& p) {
  p.exprs(u, [&](Expr& e) {
    auto* ca = e.as<CompoundAssign>();
    if (ca == nullptr || !pure(*ca->target) || !p.roll()) return;
    p.hit(e.id);
    Binary rhs{binary_of(ca->op), *ca->target, std::move(ca->value)};
    Assign a{std::move(ca->target), Expr(std::move(rhs))};
    e.node = std::move(a);
  });
  return std::move(p.records);
}

// Top-level expressions whose value is thrown away: expression statements
// and for init/update lists.
std::set<const Expr*> discarded_roots(CompilationUnit& u) {
  std::set<const Expr*> out;
  auto on_stmt = [&](Stmt& s) {
    if (auto* es = s.as<ExprStmt>()) out.insert(&es->expr);
    if (auto* fo = s.as<For>()) {
      for (auto& x : fo->update) out.insert(&x);
      if (auto* xs = std::get_if<std::vector<Expr>>(&fo->init)) {
        for (auto& x : *xs) out.insert(&x);
      }
    }
  };
  for (auto& c : u.type_decls) {
    for (auto& m : c.members) {
      if (auto* md = std::get_if<MethodDecl>(&m)) walk_block(md->body, on_stmt);
    }
  }
  return out;
}

std::vector<ModificationRecord> expand_unary(CompilationUnit& u, Pass& p) {
  // `i = i + 1` yields the new value, so a postfix use whose value matters
  // is left alone.
  const auto discarded = discarded_roots(u);
  p.exprs(u, [&](Expr& e) {
    auto* un = e.as<Unary>();
    if (un == nullptr || (un->op != UnaryOp::Inc && un->op != UnaryOp::Dec)) return;
    if (un->postfix && discarded.count(&e) == 0) return;
    if (!pure(*un->operand) || !p.roll()) return;
    p.hit(e.id);
    const BinaryOp op = un->op == UnaryOp::Inc ? BinaryOp::Add : BinaryOp::Sub;
    Binary rhs{op, *un->operand, literal_one()};
    Assign a{std::move(un->operand), Expr(std::move(rhs))};
    e.node = std::move(a);
  });
  return std::move(p.records);
}

// ------------------------------------------------------------------ splicing

using Replacement = std::optional<std::vector<Stmt>>;

template <typename F>
void splice_children(Stmt& s, F& fn);

// A non-list position (if/while/for body) gets a block when the rewrite
// yields several statements.
template <typename F>
void splice_body(Box<Stmt>& body, F& fn) {
  splice_children(*body, fn);
  if (body->as<Block>() != nullptr) return;
  Replacement rep = fn(*body);
  if (!rep) return;
  if (rep->size() == 1) {
    *body = std::move(rep->front());
    return;
  }
  Block b;
  b.stmts = std::move(*rep);
  *body = Stmt(std::move(b));
}

template <typename F>
void splice_block(Block& b, F& fn) {
  std::vector<Stmt> out;
  out.reserve(b.stmts.size());
  for (auto& s : b.stmts) {
    splice_children(s, fn);
    Replacement rep = s.as<Block>() != nullptr ? std::nullopt : fn(s);
    if (!rep) {
      out.push_back(std::move(s));
      continue;
    }
    for (auto& r : *rep) out.push_back(std::move(r));
  }
  b.stmts = std::move(out);
}

template <typename F>
void splice_children(Stmt& s, F& fn) {
  if (auto* b = s.as<Block>()) {
    splice_block(*b, fn);
  } else if (auto* i = s.as<If>()) {
    splice_body(i->then_branch, fn);
    if (i->else_branch) splice_body(*i->else_branch, fn);
  } else if (auto* w = s.as<While>()) {
    splice_body(w->body, fn);
  } else if (auto* fo = s.as<For>()) {
    splice_body(fo->body, fn);
  }
}

template <typename F>
void splice_methods(CompilationUnit& u, Pass& p, F&& fn) {
  p.classes(
      u, [](ClassDecl&) {},
      [&](Member& m) {
        if (auto* md = std::get_if<MethodDecl>(&m)) splice_block(md->body, fn);
      });
}

std::vector<ModificationRecord> for_to_while(CompilationUnit& u, Pass& p) {
  splice_methods(u, p, [&](Stmt& s) -> Replacement {
    auto* f = s.as<For>();
    if (f == nullptr || !p.roll()) return std::nullopt;
    p.hit(s.id);
    std::vector<Stmt> out;
    if (auto* fd = std::get_if<ForDecl>(&f->init)) {
      out.emplace_back(LocalVarDecl{false, std::move(fd->type), std::move(fd->declarators)});
    } else if (auto* es = std::get_if<std::vector<Expr>>(&f->init)) {
      for (auto& e : *es) out.emplace_back(ExprStmt{std::move(e)});
    }
    Block body;
    Stmt& old = *f->body;
    if (old.as<Block>() != nullptr && old.comments.empty()) {
      body = std::move(*old.as<Block>());
    } else {
      body.stmts.push_back(std::move(old));
    }
    for (auto& e : f->update) body.stmts.emplace_back(ExprStmt{std::move(e)});
    Expr cond = f->cond ? std::move(*f->cond) : Expr(Literal{LiteralKind::Boolean, "true"});
    out.emplace_back(While{std::move(cond), Stmt(std::move(body))});
    out.front().comments = std::move(s.comments);
    return out;
  });
  return std::move(p.records);
}

std::vector<ModificationRecord> split_groups(CompilationUnit& u, Pass& p) {
  // Fields first: group field declarations become one field per name.
  for (auto& c : u.type_decls) {
    std::vector<Member> out;
    for (auto& m : c.members) {
      auto* fd = std::get_if<FieldDecl>(&m);
      p.cls = c.name;
      p.member = member_name(m);
      if (fd == nullptr || fd->declarators.size() < 2 || !p.roll()) {
        out.push_back(std::move(m));
        continue;
      }
      p.hit(fd->id);
      for (std::size_t i = 0; i < fd->declarators.size(); ++i) {
        FieldDecl single;
        if (i == 0) single.comments = std::move(fd->comments);
        single.modifiers = fd->modifiers;
        single.type = fd->type;
        single.declarators.push_back(std::move(fd->declarators[i]));
        out.emplace_back(std::move(single));
      }
    }
    c.members = std::move(out);
  }
  splice_methods(u, p, [&](Stmt& s) -> Replacement {
    auto* d = s.as<LocalVarDecl>();
    if (d == nullptr || d->declarators.size() < 2 || !p.roll()) return std::nullopt;
    p.hit(s.id);
    std::vector<Stmt> out;
    for (auto& decl : d->declarators) {
      LocalVarDecl single{d->is_final, d->type, {}};
      single.declarators.push_back(std::move(decl));
      out.emplace_back(std::move(single));
    }
    out.front().comments = std::move(s.comments);
    return out;
  });
  return std::move(p.records);
}

std::vector<ModificationRecord> assign_defaults(CompilationUnit& u, Pass& p) {
  auto fill = [&](const TypeRef& t, std::vector<Declarator>& ds, NodeId anchor) {
    for (auto& d : ds) {
      if (d.init || !p.roll()) continue;
      d.init = Expr(default_value(t, d.extra_dims));
      p.hit(anchor);
    }
  };
  p.classes(
      u, [](ClassDecl&) {},
      [&](Member& m) {
        if (auto* fd = std::get_if<FieldDecl>(&m)) {
          fill(fd->type, fd->declarators, fd->id);
          return;
        }
        auto on_stmt = [&](Stmt& s) {
          if (auto* d = s.as<LocalVarDecl>()) fill(d->type, d->declarators, s.id);
        };
        walk_block(std::get<MethodDecl>(m).body, on_stmt);
      });
  return std::move(p.records);
}

std::vector<ModificationRecord> split_initializers(CompilationUnit& u, Pass& p) {
  splice_methods(u, p, [&](Stmt& s) -> Replacement {
    auto* d = s.as<LocalVarDecl>();
    if (d == nullptr) return std::nullopt;
    std::vector<Stmt> assignments;
    for (auto& decl : d->declarators) {
      if (!decl.init || !p.roll()) continue;
      p.hit(s.id);
      Assign a{Expr(Name{decl.name}), std::move(*decl.init)};
      decl.init.reset();
      assignments.emplace_back(ExprStmt{Expr(std::move(a))});
    }
    if (assignments.empty()) return std::nullopt;
    std::vector<Stmt> out;
    out.push_back(std::move(s));
    for (auto& a : assignments) out.push_back(std::move(a));
    return out;
  });
  return std::move(p.records);
}

}  // namespace

Literal default_value(const TypeRef& type, int extra_dims) {
  if (type.dims + extra_dims > 0) return {LiteralKind::Null, "null"};
  if (type.name == "int") return {LiteralKind::Int, "0"};
  if (type.name == "long") return {LiteralKind::Int, "0L"};
  if (type.name == "float") return {LiteralKind::Float, "0.0f"};
  if (type.name == "double") return {LiteralKind::Float, "0.0"};
  if (type.name == "boolean") return {LiteralKind::Boolean, "false"};
  if (type.name == "char") return {LiteralKind::Char, "'\\0'"};
  return {LiteralKind::Null, "null"};
}

std::vector<ModificationRecord> apply_transform(TransformId t, CompilationUnit& unit,
                                                double chance, Rng& rng,
                                                const std::string& file,
                                                const TransformOptions& options) {
  assign_ids(unit);
  Pass p{name_of(t), file, chance, rng, {}, {}, {}};
  std::vector<ModificationRecord> out;
  switch (t) {
    case TransformId::tAC:
      out = add_comments(unit, p);
      break;
    case TransformId::tRC:
      out = commented_nodes(unit, p, [](Comments& cs) { cs.clear(); });
      break;
    case TransformId::tMC:
      out = commented_nodes(unit, p, [&](Comments& cs) {
        for (auto& c : cs) c = mutate_comment(c, rng);
      });
      break;
    case TransformId::tRI:
      out = rename_identifiers(unit, p);
      break;
    case TransformId::tRS:
      out = shuffle_statements(unit, p);
      break;
    case TransformId::tRM:
      out = shuffle_members(unit, p);
      break;
    case TransformId::tSO:
      out = swap_operands(unit, p, options.safe_swap);
      break;
    case TransformId::tUD:
      out = widen_types(unit, p);
      break;
    case TransformId::tFW:
      out = for_to_while(unit, p);
      break;
    case TransformId::tEA:
      out = expand_compound(unit, p);
      break;
    case TransformId::tEU:
      out = expand_unary(unit, p);
      break;
    case TransformId::tSV:
      out = split_groups(unit, p);
      break;
    case TransformId::tAD:
      out = assign_defaults(unit, p);
      break;
    case TransformId::tSD:
      out = split_initializers(unit, p);
      break;
  }
  normalize_parens(unit);
  assign_ids(unit);
  return out;
}

std::vector<ModificationRecord> apply_all_transforms(const std::vector<TransformId>& enabled,
                                                     CompilationUnit& unit, double chance,
                                                     Rng& rng, const std::string& file,
                                                     const TransformOptions& options) {
  std::vector<ModificationRecord> out;
  for (auto t : kAllTransforms) {
    if (std::find(enabled.begin(), enabled.end(), t) == enabled.end()) continue;
    for (auto& r : apply_transform(t, unit, chance, rng, file, options)) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace scpd::mutate
