#ifndef BOSON_DIAGRAMS_HPP
#define BOSON_DIAGRAMS_HPP

#include <boson/counting.hpp>
#include <boson/rational.hpp>

#include <array>
#include <functional>
#include <vector>

namespace boson {

/// Set partition of {1..n}, stored as blocks of 1-based elements. Blocks are
/// kept sorted by minimum element (canonical order).
using SetPartition = std::vector<std::vector<unsigned>>;

/// All set partitions of {1..n} (restricted-growth enumeration; Bell(n) of them).
std::vector<SetPartition> all_set_partitions(unsigned n);

/// One graph with n labeled lines: lines grouped by origin (white dot) and
/// by vertex (black dot).
struct LineDiagram {
    unsigned n = 0;
    SetPartition origins;
    SetPartition vertices;
};

inline constexpr unsigned kDefaultEnumerationCap = 8;

/// Override via the BOSON_ENUM_CAP environment variable.
unsigned enumeration_cap();

/// Streams every (origin partition, vertex partition) pair exactly once;
/// Bell(n)² visits. Throws if n exceeds the enumeration cap.
void enumerate(unsigned n, const std::function<void(const LineDiagram&)>& visit);

/// Product over origin blocks of L_{|block|} times product over vertex
/// blocks of V_{|block|}. Throws if a block size exceeds the model truncation.
Rational diagram_weight(const LineDiagram& d, const ModelSpec& model);

/// Sum of weights over all diagrams with n lines; equals A_n of count().
Rational weighted_total(unsigned n, const ModelSpec& model);

/// Isomorphism class of the induced white->black bipartite multigraph.
struct DiagramClass {
    /// Sorted (origin-block size, vertex-block size, shared-line count)
    /// triples over all intersecting block pairs.
    std::vector<std::array<unsigned, 3>> signature;
    unsigned long long multiplicity = 0;
    Rational weight;

    bool operator==(const DiagramClass&) const = default;
};

std::vector<std::array<unsigned, 3>> diagram_signature(const LineDiagram& d);

/// Groups all n-line diagrams by signature; sum of multiplicity·weight
/// equals weighted_total. Classes are sorted by signature.
std::vector<DiagramClass> diagram_classes(unsigned n, const ModelSpec& model);

}  // namespace boson

#endif
