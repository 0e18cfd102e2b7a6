#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "khov/algebra.hpp"
#include "khov/complex.hpp"
#include "khov/cube.hpp"
#include "khov/lattice.hpp"

namespace khov {

struct Symbol {
  enum Kind { Arrow, Vertex } kind = Arrow;
  int index = 0;  // crossing for an arrow, circle for a vertex
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

// a_{i1} ... a_{im}; evaluates to ev(a_{i1}) ∘ ... ∘ ev(a_{im}).
struct ArrowMonomial {
  std::vector<Symbol> symbols;
  friend bool operator==(const ArrowMonomial&, const ArrowMonomial&) = default;
};

IntMatrix ev(const Resolution& r, const ArrowMonomial& w, RingParams p = RingParams::even());
// ev(w) applied to 1^{⊗k} without forming matrices.
Tensor ev_unit(const Resolution& r, const ArrowMonomial& w, RingParams p = RingParams::even());

// Operator applied to 1^{⊗k}.
std::vector<Int> e1(const IntMatrix& op, int k);

// O_I = im(ev_I), stored through e1 (injective on O_I). Each x-degree holds
// its own Hermite lattice over the basis tensors of that degree; basis
// elements are listed degree by degree in canonical row order.
class OperatorLattice {
 public:
  OperatorLattice() = default;
  OperatorLattice(const Resolution& r, RingParams p);

  Vertex index() const noexcept { return index_; }
  int k() const noexcept { return k_; }
  std::size_t rank() const noexcept { return basis_.size(); }

  struct Element {
    int degree;          // x-degree of e1(element)
    std::size_t row;     // row of that degree's lattice
  };
  const std::vector<Element>& basis() const noexcept { return basis_; }
  const HermiteLattice& lattice(int degree) const { return lattices_[degree]; }
  // Monomials registered as generators of each degree's lattice.
  const std::vector<ArrowMonomial>& words(int degree) const { return words_[degree]; }

  Tensor basis_vector(std::size_t b) const;           // e1 of basis element b
  IntMatrix materialize(const Resolution& r, std::size_t b) const;  // the operator itself
  // Coordinates of a homogeneous tensor in the basis; nullopt if outside O_I.
  std::optional<std::vector<Int>> express(const Tensor& v) const;

 private:
  Vertex index_ = 0;
  int k_ = 0;
  RingParams p_;
  std::vector<HermiteLattice> lattices_;
  std::vector<std::vector<ArrowMonomial>> words_;
  std::vector<Element> basis_;
  std::vector<std::size_t> first_of_degree_;
};

OperatorLattice operator_lattice(const Resolution& r, RingParams p = RingParams::even());

// Image of monomial w of D(I) under the arrow differential along crossing i,
// read in D(J): unchanged across a merge, prefixed by a_i across a split.
ArrowMonomial transform_monomial(const Resolution& rI, const Resolution& rJ, const ArrowMonomial& w, int i);

// Induced map O_I -> O_J in lattice coordinates (unsigned).
SparseMatrix induced_map(const Resolution& rI, const OperatorLattice& oI, const Resolution& rJ,
                         const OperatorLattice& oJ, int i, RingParams p);

struct ReducedCube {
  std::vector<Resolution> resolutions;
  std::vector<OperatorLattice> lattices;
  std::vector<SparseMatrix> maps;  // index I * n + i
  SignAssignment signs;
  BigradedComplex complex;
};

ReducedCube build_reduced_cube(const Diagram& d, RingParams p = RingParams::even(),
                               ArrowConvention conv = ArrowConvention::Normal, Exec exec = Exec::Parallel);
BigradedComplex build_reduced(const Diagram& d, RingParams p = RingParams::even(),
                              ArrowConvention conv = ArrowConvention::Normal, Exec exec = Exec::Parallel);

struct SquareViolation {
  Vertex from;
  int crossing;
  std::size_t element;
  std::string detail;
};

struct CommutingSquareReport {
  std::size_t edges = 0;
  std::size_t elements = 0;
  std::vector<SquareViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

// e1 ∘ induced map == unreduced edge map ∘ e1 on every lattice basis element.
// The even preset must agree exactly; other presets up to one sign per edge.
CommutingSquareReport check_commuting_square(const Diagram& d, RingParams p = RingParams::even(),
                                             Exec exec = Exec::Parallel);

// Arrow multigraph subgraph with marked vertices.
struct AdmissibleSubgraph {
  std::vector<int> arrows;         // crossings
  std::vector<int> distinguished;  // circles
};

constexpr int kMaxGraphCircles = 8;
constexpr int kMaxGraphArrows = 12;

std::vector<AdmissibleSubgraph> enumerate_admissible(const Resolution& r);
IntMatrix psi(const AdmissibleSubgraph& g, const Resolution& r);

struct GraphSpanReport {
  std::size_t subgraphs = 0;
  std::size_t span_rank = 0;
  std::size_t lattice_rank = 0;
  std::size_t kernel_rank = 0;  // subgraphs - span_rank
  bool equal = false;
};

GraphSpanReport check_graph_span(const Resolution& r);

// The two cycle relations, checked on generated cycles of the given lengths.
struct CycleRelationReport {
  std::size_t instances = 0;
  std::vector<std::string> failures;
  bool ok() const noexcept { return failures.empty(); }
};

CycleRelationReport check_cycle_relations(int max_length = 7);

}  // namespace khov
