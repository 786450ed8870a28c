#pragma once

#include <span>
#include <string>
#include <vector>

#include "weylbool/root_set.hpp"
#include "weylbool/root_system.hpp"
#include "weylbool/weyl_element.hpp"

namespace weylbool {

/// Phi' = Phi ∩ E' for a subspace E' spanned by roots, with positive roots
/// inherited from the parent.
///
/// The sub-system also carries its own intrinsic RootSystem whose simple roots
/// are the indecomposable members of Phi'^+, in parent canonical order.
class SubRootSystem {
 public:
  static SubRootSystem spanned_by(RootSystemPtr parent, std::span<const Root> generators);
  static SubRootSystem spanned_by_indices(RootSystemPtr parent, std::span<const int> indices);
  static SubRootSystem whole(RootSystemPtr parent);

  const RootSystemPtr& parent() const { return parent_; }
  const RootSystemPtr& system() const { return system_; }
  int rank() const { return static_cast<int>(simple_.size()); }

  // Parent indices.
  const RootSet& positive_roots() const { return positive_; }
  const std::vector<int>& simple_roots() const { return simple_; }

  // Parent index of the intrinsic positive root with the given index.
  int to_parent(int own_index) const { return to_parent_[own_index]; }

  // e.g. "A2", "B2", "A1xA1".
  const std::string& label() const { return system_->label(); }

 private:
  friend class SubRootSystemBuilder;
  SubRootSystem() = default;

  RootSystemPtr parent_;
  RootSystemPtr system_;
  RootSet positive_;
  std::vector<int> simple_;
  std::vector<int> to_parent_;
};

// w|_{Phi'}: the element of W(Phi') whose inversion set is I(w) ∩ Phi'^+.
WeylElement restrict(const WeylElement& w, const SubRootSystem& sub);

// Indecomposable members of a positive root subset (parent indices, sorted).
std::vector<int> indecomposable_roots(const RootSystem& rs, const RootSet& roots);

// Label built from the component types of a system, e.g. "A1xB2".
std::string describe_components(const RootSystem& rs);

struct SubspaceRecord {
  RootSet roots;            // Phi'^+ as parent indices
  std::vector<int> simple;  // parent indices of the simple roots of Phi'
};

/// Every distinct sub-root-system Phi ∩ span(S) of rank 1..max_rank, obtained
/// from spans of linearly independent subsets of Phi^+ and deduplicated by
/// their root sets. Immutable after construction.
class SubsystemCatalog {
 public:
  SubsystemCatalog(RootSystemPtr parent, int max_rank);

  const RootSystemPtr& parent() const { return parent_; }
  int max_rank() const { return static_cast<int>(levels_.size()); }
  // Records of exactly rank k (empty when k exceeds max_rank).
  std::span<const SubspaceRecord> of_rank(int k) const;

  SubRootSystem materialize(const SubspaceRecord& rec) const;

 private:
  RootSystemPtr parent_;
  std::vector<std::vector<SubspaceRecord>> levels_;
};

}  // namespace weylbool
