#include "vecram/qlinalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace vecram {

namespace {

int first_nonzero(const QVec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return int(i);
  return -1;
}

void insert_row(QSubspace& s, QVec v) {
  v = qreduce(s, std::move(v));
  int p = first_nonzero(v);
  if (p < 0) return;
  Rat lead = v[p];
  for (Rat& x : v) x /= lead;
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    Rat c = s.rows[i][p];
    if (c != 0) s.rows[i] = qvec_sub(s.rows[i], qvec_scaled(v, c));
  }
  auto pos = std::upper_bound(s.pivots.begin(), s.pivots.end(), p) -
             s.pivots.begin();
  s.pivots.insert(s.pivots.begin() + pos, p);
  s.rows.insert(s.rows.begin() + pos, std::move(v));
}

}  // namespace

QSubspace qspan(int n, const std::vector<QVec>& generators) {
  if (n < 0) throw std::invalid_argument("ambient dimension must be nonnegative");
  QSubspace s;
  s.ambient = n;
  for (const QVec& g : generators) {
    if (int(g.size()) != n)
      throw std::invalid_argument("generator dimension mismatch");
    insert_row(s, g);
  }
  return s;
}

QVec qreduce(const QSubspace& s, QVec v) {
  if (int(v.size()) != s.ambient)
    throw std::invalid_argument("vector dimension mismatch");
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    Rat c = v[s.pivots[i]];
    if (c != 0) v = qvec_sub(v, qvec_scaled(s.rows[i], c));
  }
  return v;
}

bool qcontains(const QSubspace& s, const QVec& v) {
  return qvec_is_zero(qreduce(s, v));
}

int qrank(int n, const std::vector<QVec>& vectors) {
  return qspan(n, vectors).dim();
}

QSubspace qshift_support(const QSubspace& w, int x) {
  if (x < -1) throw std::invalid_argument("coordinate index below range");
  // Kernel of the map sending a coefficient vector to the first x+1
  // coordinates of the corresponding member.
  int d = w.dim();
  std::vector<QVec> rows;  // (x+1) x d restriction matrix
  for (int r = 0; r <= x && r < w.ambient; ++r) {
    QVec row(d);
    for (int j = 0; j < d; ++j) row[j] = w.rows[j][r];
    rows.push_back(row);
  }
  QSubspace rs = qspan(d, rows);
  // Free coordinates of the reduced system give a kernel basis.
  std::vector<bool> is_pivot(d, false);
  for (int p : rs.pivots) is_pivot[p] = true;
  std::vector<QVec> gens;
  for (int fcol = 0; fcol < d; ++fcol) {
    if (is_pivot[fcol]) continue;
    QVec coeff(d, Rat(0));
    coeff[fcol] = 1;
    for (std::size_t i = 0; i < rs.rows.size(); ++i)
      coeff[rs.pivots[i]] = -rs.rows[i][fcol];
    QVec member(w.ambient, Rat(0));
    for (int j = 0; j < d; ++j)
      if (coeff[j] != 0)
        member = qvec_add(member, qvec_scaled(w.rows[j], coeff[j]));
    gens.push_back(member);
  }
  return qspan(w.ambient, gens);
}

}  // namespace vecram
