#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "khov/algebra.hpp"
#include "khov/cube.hpp"
#include "khov/matrix.hpp"
#include "khov/parallel.hpp"

namespace khov {

enum class Grading { Paper, Standard };

// Largest diagram the complex builders accept.
constexpr int kMaxHomologyCrossings = 12;

// Cohomological complex C^{h_min} -> C^{h_min+1} -> ...; quantum degrees are
// stored in the standard convention (paper q = -standard q).
struct BigradedComplex {
  int h_min = 0;
  std::vector<std::vector<int>> q;  // q[t][g]: generator g of C^{h_min+t}
  std::vector<SparseMatrix> d;      // d[t]: C^{h_min+t} -> C^{h_min+t+1}

  std::size_t degrees() const noexcept { return q.size(); }
  std::size_t rank(std::size_t t) const { return q[t].size(); }
  std::size_t total_rank() const;
};

// Checks d[t+1] * d[t] == 0 and that every entry joins equal quantum degrees.
bool is_complex(const BigradedComplex& c);
bool preserves_q(const BigradedComplex& c);

// Unsigned Khovanov map along the cube edge I -> J changing crossing i.
SparseMatrix edge_map(const Resolution& rI, const Resolution& rJ, int i, RingParams p);

class SignAssignment {
 public:
  SignAssignment() = default;
  explicit SignAssignment(int n) : n_(n), bits_(static_cast<std::size_t>(n) << n, 0) {}
  int operator()(Vertex I, int i) const { return bits_[index(I, i)] ? -1 : 1; }
  void set(Vertex I, int i, int sign) { bits_[index(I, i)] = sign < 0; }
  int n() const noexcept { return n_; }

 private:
  std::size_t index(Vertex I, int i) const { return static_cast<std::size_t>(I) * n_ + i; }
  int n_ = 0;
  std::vector<std::uint8_t> bits_;
};

using EdgeMapLookup = std::function<const SparseMatrix&(Vertex, int)>;

// Signs making every 2-face anticommute. Faces whose two paths are both zero
// impose nothing; free variables are the spanning-tree edges and are set to +1.
SignAssignment solve_signs(int n, const std::vector<CubeFace>& faces, const EdgeMapLookup& edge,
                           Exec exec = Exec::Parallel);

// Glues per-vertex generators and signed edge maps into a complex.
BigradedComplex assemble_complex(int n, int h_min, const std::vector<std::vector<int>>& vertex_q,
                                 const EdgeMapLookup& edge, const SignAssignment& signs);

BigradedComplex build_unreduced(const Diagram& d, RingParams p = RingParams::even(),
                                ArrowConvention conv = ArrowConvention::Normal, Exec exec = Exec::Parallel);

}  // namespace khov
