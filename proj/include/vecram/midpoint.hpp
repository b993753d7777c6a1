#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vecram/qlinalg.hpp"
#include "vecram/rational.hpp"

namespace vecram {

// 2y = x + z, exact.
bool midpoint_nat(std::int64_t x, std::int64_t y, std::int64_t z);
bool midpoint_q(const QVec& x, const QVec& y, const QVec& z);

// Finite relational structure (elements 0..m-1, ordered triples) meant to
// resemble the midpoint relation of an abelian group.  The diagonal is always
// present and add() closes under reversal; raw() bypasses both so that the
// validator can be exercised on broken inputs.
class MidpointStructure {
 public:
  explicit MidpointStructure(int size);
  static MidpointStructure raw(int size, std::set<std::array<int, 3>> triples);

  // Text form: first token m, then x y z triples.  Reversal closure is
  // applied while reading; the diagonal is implied.
  static MidpointStructure read(std::istream& in);
  static MidpointStructure read_file(const std::string& path);

  int size() const { return m_; }
  const std::set<std::array<int, 3>>& triples() const { return mu_; }
  void add(int x, int y, int z);
  bool related(int x, int y, int z) const;

 private:
  int m_;
  std::set<std::array<int, 3>> mu_;
};

struct LawViolation {
  std::string law;
  std::array<int, 3> triple;
};

// Necessary conditions for being an induced midpoint relation: reversal
// closure, full diagonal, and the two degeneracy laws ((x,y,x) forces y=x,
// (x,x,z) and (x,z,z) force x=z).  Empty result means consistent.
std::vector<LawViolation> validate_midpoint_laws(const MidpointStructure& r);

// Structure induced on a list of points by the actual midpoint relation.
MidpointStructure induced_structure(const std::vector<QVec>& pts);
MidpointStructure induced_structure_nat(const std::vector<std::int64_t>& pts);

// Base-k flattening of finite F in N^width with k = 2*(max coordinate)+1,
// which keeps all digit sums carry-free so the midpoint relation transfers in
// both directions.  Verified on every triple before returning.
struct SigmaEmbedding {
  std::int64_t radix = 1;
  std::vector<std::vector<std::int64_t>> points;
  std::vector<BigInt> images;
};

SigmaEmbedding sigma_embed(
    const std::vector<std::vector<std::int64_t>>& points);

// Quotient construction: one generator x + z - 2y per nondiagonal relation
// triple, elements mapped to their residues in the non-pivot coordinates.
struct EmbeddingMap {
  int quotient_dim = 0;
  std::vector<QVec> images;  // one per element, dimension quotient_dim
  QSubspace kernel;          // the relation space the quotient divides out
};

struct CollapseWitness {
  // Two elements with equal images, or an unrelated triple whose images are
  // midpoint-related; exactly one is set.
  std::optional<std::array<int, 2>> pair;
  std::optional<std::array<int, 3>> triple;
};

struct UniversalResult {
  std::optional<EmbeddingMap> map;
  std::optional<CollapseWitness> collapse;
};

// Residue images of all elements in the quotient by the relation space,
// before any injectivity or reflection scan.
EmbeddingMap quotient_images(const MidpointStructure& r);

UniversalResult embed_universal(const MidpointStructure& r);

// x -> rows*x + offset over Q.
struct AffineMap {
  std::vector<QVec> rows;
  QVec offset;

  QVec apply(const QVec& x) const;
  int source_dim() const { return rows.empty() ? 0 : int(rows[0].size()); }
  int target_dim() const { return int(rows.size()); }
};

// Injective as a linear-plus-offset map, i.e. the matrix columns are
// independent.
bool full_column_rank(const AffineMap& m);

struct TransportReport {
  bool injective = false;
  std::optional<std::array<QVec, 3>> preserve_failure;
  std::optional<std::array<QVec, 3>> reflect_failure;
  bool ok() const { return !preserve_failure && !reflect_failure; }
};

// Checks on a sample of source triples that the map carries the midpoint
// relation forward, and (when injective) backward.
TransportReport midpoint_transport_check(
    const AffineMap& m, const std::vector<std::array<QVec, 3>>& sample);

// Two 3-AP-free integer tuples whose index bijection extends to no affine
// map: solving scale and offset on the first two points fails on a later one.
struct NonHomogWitness {
  std::vector<std::int64_t> tuple_a, tuple_b;
  Rat scale, offset;
  int fail_index = 0;
  Rat image, expected;
};

NonHomogWitness non_homogeneity_witness(int n);

}  // namespace vecram
