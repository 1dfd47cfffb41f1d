#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "scpd/lang/ast.hpp"

namespace scpd::repr {

enum class PdgNodeKind { Entry, Statement, Data };

struct PdgNode {
  PdgNodeKind kind = PdgNodeKind::Statement;
  std::string label;  // "entry", "stmt:<Kind>" or "data:<name>"
};

using PdgEdge = std::pair<std::size_t, std::size_t>;

/// Program dependence graph of one method.
///
/// Node 0 is the method entry. Statement nodes follow in pre-order, then
/// data nodes in order of first reference. Control edges run from the entry
/// or from an if/while/for statement to each statement it directly governs;
/// data edges run from a statement to each variable it reads or writes.
struct Pdg {
  std::string method;
  std::vector<PdgNode> nodes;
  std::vector<PdgEdge> control_edges;
  std::vector<PdgEdge> data_edges;

  [[nodiscard]] std::size_t edge_count() const noexcept {
    return control_edges.size() + data_edges.size();
  }
  /// Nodes plus edges.
  [[nodiscard]] std::size_t size() const noexcept { return nodes.size() + edge_count(); }
};

Pdg pdg_of(const lang::MethodDecl& method);

/// One graph per method, in declaration order.
std::vector<Pdg> pdgs_of(const lang::CompilationUnit& unit);

/// Plain text dump: `pdg <method>`, then `node <id> <label>`,
/// `control <from> <to>` and `data <from> <to>` lines.
std::string to_text(const Pdg& pdg);

}  // namespace scpd::repr
