#ifndef WEYL_COXETER_HPP
#define WEYL_COXETER_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "weyl/error.hpp"

namespace weyl {

// Subset of generators, bit i = generator with index i.
using GenSet = std::uint32_t;

// Label value used for m_st = infinity.
inline constexpr int kInfLabel = std::numeric_limits<int>::max();

inline bool finite_label(int m) { return m != kInfLabel; }

int popcount(GenSet s);
GenSet full_set(int n);

// Compares subsets as sorted index sequences ({0,3} < {1,2}), used for all
// deterministic subset orderings.
bool subset_lex_less(GenSet a, GenSet b);

// Orders by cardinality first, then lexicographically.
bool subset_size_lex_less(GenSet a, GenSet b);

enum class DiagramKind { Coxeter, Presentation };

struct DiagramEdge {
  int u;
  int v;
  int label;
};

struct DiagramGraph {
  DiagramKind kind;
  int rank;
  std::vector<DiagramEdge> edges;  // u < v, in generator order
};

// A Coxeter system (W,S): named generators plus the symmetric label matrix.
// Immutable after construction. An empty system (rank 0, the trivial group)
// is allowed as the result of restricting to the empty subset.
class CoxeterSystem {
 public:
  // Builds from names and full symmetric matrix; validates all invariants.
  static CoxeterSystem from_matrix(std::vector<std::string> names,
                                   std::vector<std::vector<int>> labels);

  // Parses the JSON input document (see README for the format).
  static CoxeterSystem parse(const std::string& text);

  // Emits the canonical JSON form: labels for all pairs with m != 2, pair
  // keys in generator order. parse(serialize(sys)) == sys.
  std::string serialize() const;

  int rank() const { return static_cast<int>(names_.size()); }
  bool empty() const { return names_.empty(); }
  const std::vector<std::string>& generators() const { return names_; }
  const std::string& name(int i) const { return names_[i]; }
  int index_of(const std::string& name) const;  // throws UnknownGenerator

  int label(int i, int j) const { return labels_[i][j]; }

  GenSet all() const { return full_set(rank()); }

  // Induced subsystem on J; generator order inherited.
  CoxeterSystem restrict_to(GenSet J) const;

  DiagramGraph diagram(DiagramKind kind) const;

  // Connected components of the Coxeter diagram (edges where m != 2),
  // in first-seen generator order.
  std::vector<GenSet> irreducible_components() const;

  // True when every label between the two sets equals 2.
  bool perpendicular(GenSet a, GenSet b) const;

  bool same_matrix(const CoxeterSystem& other) const;

  std::string subset_to_string(GenSet J) const;

 private:
  CoxeterSystem() = default;

  std::vector<std::string> names_;
  std::vector<std::vector<int>> labels_;
};

}  // namespace weyl

#endif
