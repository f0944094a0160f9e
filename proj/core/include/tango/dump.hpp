#pragma once

#include <iosfwd>

#include "tango/forest.hpp"
#include "tango/pathsim.hpp"
#include "tango/typicality.hpp"

namespace tango {

/// Sparse similarity entries as `i,j,value` rows, one per unordered pair,
/// ascending (i, j).
void dump_similarity(std::ostream& out, const SimilarityGraph& sim);

/// `point,leader,rank,weight` rows; roots are encoded as leader=-1, rank=0,
/// weight=0.
void dump_forest(std::ostream& out, const DependencyForest& forest);

/// `point,T,is_mode,assigned_mode` rows.
void dump_typicality(std::ostream& out, const TypicalityVector& T,
                     const SubClustering& sc);

/// First row lists the mode point ids; each following row is one matrix row.
void dump_pbsim(std::ostream& out, const PBSimMatrix& pb);

}  // namespace tango
