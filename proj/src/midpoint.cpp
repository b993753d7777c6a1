#include "vecram/midpoint.hpp"

#include <fstream>
#include <istream>
#include <stdexcept>

#include "vecram/hitting.hpp"

namespace vecram {

bool midpoint_nat(std::int64_t x, std::int64_t y, std::int64_t z) {
  return 2 * y == x + z;
}

bool midpoint_q(const QVec& x, const QVec& y, const QVec& z) {
  if (x.size() != y.size() || x.size() != z.size())
    throw std::invalid_argument("vector dimensions differ");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (2 * y[i] != x[i] + z[i]) return false;
  return true;
}

MidpointStructure::MidpointStructure(int size) : m_(size) {
  if (size < 0) throw std::invalid_argument("size must be nonnegative");
  for (int x = 0; x < size; ++x) mu_.insert({x, x, x});
}

MidpointStructure MidpointStructure::raw(int size,
                                         std::set<std::array<int, 3>> triples) {
  MidpointStructure r(size);
  for (const auto& t : triples)
    for (int v : t)
      if (v < 0 || v >= size)
        throw std::invalid_argument("triple element out of range");
  r.mu_ = std::move(triples);
  return r;
}

void MidpointStructure::add(int x, int y, int z) {
  for (int v : {x, y, z})
    if (v < 0 || v >= m_)
      throw std::invalid_argument("triple element out of range");
  mu_.insert({x, y, z});
  mu_.insert({z, y, x});
}

bool MidpointStructure::related(int x, int y, int z) const {
  return mu_.count({x, y, z}) != 0;
}

MidpointStructure MidpointStructure::read(std::istream& in) {
  int m = -1;
  if (!(in >> m) || m < 0)
    throw std::invalid_argument("structure file must start with the size");
  MidpointStructure r(m);
  int x, y, z;
  while (in >> x) {
    if (!(in >> y >> z))
      throw std::invalid_argument("incomplete triple in structure file");
    r.add(x, y, z);
  }
  if (!in.eof()) {
    in.clear();
    std::string rest;
    in >> rest;
    if (!rest.empty())
      throw std::invalid_argument("unreadable token in structure file: " + rest);
  }
  return r;
}

MidpointStructure MidpointStructure::read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open structure file: " + path);
  return read(in);
}

std::vector<LawViolation> validate_midpoint_laws(const MidpointStructure& r) {
  std::vector<LawViolation> out;
  for (int x = 0; x < r.size(); ++x)
    if (!r.related(x, x, x)) out.push_back({"diagonal missing", {x, x, x}});
  for (const auto& t : r.triples()) {
    int x = t[0], y = t[1], z = t[2];
    if (!r.related(z, y, x)) out.push_back({"reversal missing", t});
    if (x == z && y != x) out.push_back({"equal ends force the middle", t});
    if (x == y && y != z) out.push_back({"repeated start forces the end", t});
    if (y == z && x != y) out.push_back({"repeated end forces the start", t});
  }
  return out;
}

MidpointStructure induced_structure(const std::vector<QVec>& pts) {
  int m = int(pts.size());
  MidpointStructure r(m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = x; z < m; ++z)
        if (midpoint_q(pts[x], pts[y], pts[z])) r.add(x, y, z);
  return r;
}

MidpointStructure induced_structure_nat(const std::vector<std::int64_t>& pts) {
  int m = int(pts.size());
  MidpointStructure r(m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = x; z < m; ++z)
        if (midpoint_nat(pts[x], pts[y], pts[z])) r.add(x, y, z);
  return r;
}

SigmaEmbedding sigma_embed(
    const std::vector<std::vector<std::int64_t>>& points) {
  SigmaEmbedding out;
  out.points = points;
  if (points.empty()) return out;
  std::size_t width = points[0].size();
  std::int64_t max_coord = 0;
  for (const auto& p : points) {
    if (p.size() != width)
      throw std::invalid_argument("points must share one dimension");
    for (std::int64_t c : p) {
      if (c < 0)
        throw std::invalid_argument("coordinates must be nonnegative");
      if (c > (std::int64_t(1) << 40))
        throw std::invalid_argument("coordinate too large");
      max_coord = std::max(max_coord, c);
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw std::invalid_argument("points must be distinct");
  out.radix = 2 * max_coord + 1;
  for (const auto& p : points) {
    BigInt image = 0, power = 1;
    for (std::size_t i = 0; i < width; ++i) {
      image += BigInt(p[i]) * power;
      power *= out.radix;
    }
    out.images.push_back(image);
  }
  auto mid_point = [&](std::size_t x, std::size_t y, std::size_t z) {
    for (std::size_t i = 0; i < width; ++i)
      if (2 * points[y][i] != points[x][i] + points[z][i]) return false;
    return true;
  };
  for (std::size_t x = 0; x < points.size(); ++x)
    for (std::size_t y = 0; y < points.size(); ++y)
      for (std::size_t z = 0; z < points.size(); ++z) {
        bool before = mid_point(x, y, z);
        bool after = 2 * out.images[y] == out.images[x] + out.images[z];
        if (before != after)
          throw std::logic_error("carry-free radix failed to transfer a triple");
      }
  return out;
}

EmbeddingMap quotient_images(const MidpointStructure& r) {
  int m = r.size();
  std::vector<QVec> gens;
  for (const auto& t : r.triples()) {
    int x = t[0], y = t[1], z = t[2];
    if (x == y && y == z) continue;  // diagonal: zero generator
    if (x > z) continue;             // reversal duplicate
    QVec g(m, Rat(0));
    g[x] += 1;
    g[z] += 1;
    g[y] -= 2;
    gens.push_back(std::move(g));
  }
  QSubspace w = qspan(m, gens);
  std::vector<bool> is_pivot(m, false);
  for (int p : w.pivots) is_pivot[p] = true;
  std::vector<int> coords;
  for (int i = 0; i < m; ++i)
    if (!is_pivot[i]) coords.push_back(i);

  std::vector<QVec> images;
  for (int e = 0; e < m; ++e) {
    QVec delta(m, Rat(0));
    delta[e] = 1;
    QVec residue = qreduce(w, delta);
    QVec image(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i)
      image[i] = residue[coords[i]];
    images.push_back(std::move(image));
  }

  for (const auto& t : r.triples())
    if (!midpoint_q(images[t[0]], images[t[1]], images[t[2]]))
      throw std::logic_error("quotient images dropped a relation triple");

  return EmbeddingMap{int(coords.size()), std::move(images), std::move(w)};
}

UniversalResult embed_universal(const MidpointStructure& r) {
  auto violations = validate_midpoint_laws(r);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw std::invalid_argument(
        "structure violates a midpoint law: " + v.law + " at (" +
        std::to_string(v.triple[0]) + "," + std::to_string(v.triple[1]) + "," +
        std::to_string(v.triple[2]) + ")");
  }
  int m = r.size();
  EmbeddingMap qm = quotient_images(r);
  const std::vector<QVec>& images = qm.images;

  UniversalResult out;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (images[a] == images[b]) {
        out.collapse = CollapseWitness{std::array<int, 2>{a, b}, {}};
        return out;
      }
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        if (midpoint_q(images[x], images[y], images[z]) && !r.related(x, y, z)) {
          out.collapse = CollapseWitness{{}, std::array<int, 3>{x, y, z}};
          return out;
        }
  out.map = std::move(qm);
  return out;
}

QVec AffineMap::apply(const QVec& x) const {
  if (int(x.size()) != source_dim() && !rows.empty())
    throw std::invalid_argument("vector dimension mismatch");
  QVec out = offset;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < x.size(); ++c) out[r] += rows[r][c] * x[c];
  return out;
}

bool full_column_rank(const AffineMap& m) {
  int src = m.source_dim();
  std::vector<QVec> cols;
  for (int c = 0; c < src; ++c) {
    QVec col(m.rows.size());
    for (std::size_t r = 0; r < m.rows.size(); ++r) col[r] = m.rows[r][c];
    cols.push_back(std::move(col));
  }
  return qrank(int(m.rows.size()), cols) == src;
}

TransportReport midpoint_transport_check(
    const AffineMap& m, const std::vector<std::array<QVec, 3>>& sample) {
  TransportReport rep;
  rep.injective = full_column_rank(m);
  for (const auto& t : sample) {
    bool before = midpoint_q(t[0], t[1], t[2]);
    bool after = midpoint_q(m.apply(t[0]), m.apply(t[1]), m.apply(t[2]));
    if (before && !after && !rep.preserve_failure) rep.preserve_failure = t;
    if (rep.injective && after && !before && !rep.reflect_failure)
      rep.reflect_failure = t;
  }
  return rep;
}

NonHomogWitness non_homogeneity_witness(int n) {
  if (n < 3)
    throw std::invalid_argument("two points always extend to an affine map");
  if (n > 62) throw std::invalid_argument("tuple length overflows the encoding");
  NonHomogWitness out;
  for (int i = 0; i < n; ++i)
    out.tuple_a.push_back((std::int64_t(1) << i) - 1);
  out.tuple_b = out.tuple_a;
  out.tuple_b[n - 1] = std::int64_t(1) << (n - 1);
  if (!three_ap_free(out.tuple_a) || !three_ap_free(out.tuple_b))
    throw std::logic_error("witness tuples are not progression-free");
  out.scale = Rat(out.tuple_b[1] - out.tuple_b[0], out.tuple_a[1] - out.tuple_a[0]);
  out.offset = Rat(out.tuple_b[0]) - out.scale * out.tuple_a[0];
  out.fail_index = -1;
  for (int i = 0; i < n; ++i) {
    Rat image = out.scale * out.tuple_a[i] + out.offset;
    if (image != out.tuple_b[i]) {
      out.fail_index = i;
      out.image = image;
      out.expected = out.tuple_b[i];
      break;
    }
  }
  if (out.fail_index < 0)
    throw std::logic_error("the affine map unexpectedly matched every point");
  return out;
}

}  // namespace vecram
