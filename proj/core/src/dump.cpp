#include "tango/dump.hpp"

#include <cstdio>
#include <ostream>

namespace tango {
namespace {

const char* fmt(double v, char (&buf)[64]) {
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void dump_similarity(std::ostream& out, const SimilarityGraph& sim) {
  char buf[64];
  for (std::size_t i = 0; i < sim.n; ++i) {
    // Re-emit in ascending j for a stable, diff-friendly file.
    const auto ids = sim.neighbors_of(i);
    const auto vals = sim.values_of(i);
    std::vector<std::pair<PointId, double>> row;
    for (std::size_t t = 0; t < ids.size(); ++t) {
      if (ids[t] > static_cast<PointId>(i)) row.emplace_back(ids[t], vals[t]);
    }
    std::sort(row.begin(), row.end());
    for (const auto& [j, v] : row) {
      out << i << ',' << j << ',' << fmt(v, buf) << '\n';
    }
  }
}

void dump_forest(std::ostream& out, const DependencyForest& forest) {
  char buf[64];
  for (std::size_t i = 0; i < forest.n; ++i) {
    out << i << ',' << forest.leader[i] << ',' << forest.rank[i] << ','
        << fmt(forest.weight[i], buf) << '\n';
  }
}

void dump_typicality(std::ostream& out, const TypicalityVector& T,
                     const SubClustering& sc) {
  char buf[64];
  for (std::size_t i = 0; i < T.size(); ++i) {
    out << i << ',' << fmt(T[i], buf) << ',' << int(sc.is_mode[i]) << ','
        << sc.assignment[i] << '\n';
  }
}

void dump_pbsim(std::ostream& out, const PBSimMatrix& pb) {
  char buf[64];
  for (std::size_t t = 0; t < pb.q; ++t) {
    out << (t ? "," : "") << pb.modes[t];
  }
  out << '\n';
  for (std::size_t a = 0; a < pb.q; ++a) {
    for (std::size_t b = 0; b < pb.q; ++b) {
      out << (b ? "," : "") << fmt(pb.at(a, b), buf);
    }
    out << '\n';
  }
}

}  // namespace tango
