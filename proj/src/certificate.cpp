#include "vecram/certificate.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vecram {
namespace {

std::int64_t int_at(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (!v.is_number_integer())
    throw std::invalid_argument(std::string(key) + " must be an integer");
  return v.get<std::int64_t>();
}

int bounded_at(const Json& j, const char* key, std::int64_t lo,
               std::int64_t hi) {
  std::int64_t v = int_at(j, key);
  if (v < lo || v > hi)
    throw std::invalid_argument(std::string(key) + " out of range");
  return int(v);
}

std::vector<std::uint8_t> code_list(const Json& arr, int limit,
                                    const char* what) {
  if (!arr.is_array())
    throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<std::uint8_t> out;
  for (const Json& e : arr) {
    if (!e.is_number_integer())
      throw std::invalid_argument(std::string(what) +
                                  " entries must be integers");
    std::int64_t v = e.get<std::int64_t>();
    if (v < 0 || v >= limit)
      throw std::invalid_argument(std::string(what) + " entry out of range");
    out.push_back(std::uint8_t(v));
  }
  return out;
}

FqVec vec_at(const Json& arr, const Field& f, int n, const char* what) {
  auto codes = code_list(arr, f.q(), what);
  if (int(codes.size()) != n)
    throw std::invalid_argument(std::string(what) +
                                " has the wrong dimension");
  return FqVec(f, std::move(codes));
}

Json vec_json(const FqVec& v) {
  Json a = Json::array();
  for (int i = 0; i < v.dim(); ++i) a.push_back(int(v[i]));
  return a;
}

std::vector<std::int64_t> int_list_at(const Json& arr, const char* what) {
  if (!arr.is_array())
    throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<std::int64_t> out;
  for (const Json& e : arr) {
    if (!e.is_number_integer())
      throw std::invalid_argument(std::string(what) +
                                  " entries must be integers");
    out.push_back(e.get<std::int64_t>());
  }
  return out;
}

Rat rat_at(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (!v.is_string())
    throw std::invalid_argument(std::string(key) + " must be a string");
  return rat_parse(v.get<std::string>());
}

QVec qvec_at(const Json& arr, int n, const char* what) {
  if (!arr.is_array() || int(arr.size()) != n)
    throw std::invalid_argument(std::string(what) +
                                " must be an array of length n");
  QVec out(n);
  for (int i = 0; i < n; ++i) {
    const Json& e = arr[i];
    if (!e.is_string())
      throw std::invalid_argument(std::string(what) +
                                  " entries must be strings");
    out[i] = rat_parse(e.get<std::string>());
  }
  return out;
}

Json qvec_json(const QVec& v) {
  Json a = Json::array();
  for (const Rat& r : v) a.push_back(rat_str(r));
  return a;
}

Json header(const char* kind) {
  Json j;
  j["format"] = "cert_v1";
  j["kind"] = kind;
  return j;
}

void require_format(const Json& cert) {
  if (!cert.contains("format") || !cert.at("format").is_string() ||
      cert.at("format").get<std::string>() != "cert_v1")
    throw std::invalid_argument("unrecognized certificate format");
}

// Field and ambient dimension of the colouring must agree with the recorded
// values, or the claim is about a different space altogether.
void require_domain(const Colouring& c, int q, int n) {
  if (c.field().q() != q)
    throw std::invalid_argument("colouring field does not match certificate");
  if (c.domain().ambient() != n)
    throw std::invalid_argument(
        "colouring dimension does not match certificate");
}

VerifyOutcome pass(std::string detail) { return {true, std::move(detail)}; }

VerifyOutcome check_mono_flat(const Json& cert, const Colouring& c) {
  int q = bounded_at(cert, "q", 2, 256);
  int n = bounded_at(cert, "n", 0, 62);
  int d = bounded_at(cert, "d", 0, 62);
  require_domain(c, q, n);
  int colour = bounded_at(cert, "colour", 0, c.colours() - 1);
  AffineFlat flat = flat_from_json(cert.at("flat"), c.field(), n);
  if (flat.dim() != d)
    return {false, "flat dimension does not match the recorded d"};
  for (std::uint64_t t = 0; t < flat.size(); ++t)
    if (c.at_point(flat.point_at(t)) != colour)
      return {false, "flat point " + std::to_string(t) +
                         " does not have the claimed colour"};
  return pass("all " + std::to_string(flat.size()) + " points have colour " +
              std::to_string(colour));
}

VerifyOutcome check_blue_flat(const Json& cert, const Colouring& c) {
  int q = bounded_at(cert, "q", 2, 256);
  int n = bounded_at(cert, "n", 0, 62);
  bounded_at(cert, "k", 1, 62);
  require_domain(c, q, n);
  if (c.colours() != 2) return {false, "colouring is not a two-colouring"};
  AffineFlat flat = flat_from_json(cert.at("flat"), c.field(), n);
  for (std::uint64_t t = 0; t < flat.size(); ++t)
    if (c.at_point(flat.point_at(t)) != kBlue)
      return {false,
              "flat point " + std::to_string(t) + " is not blue"};
  return pass("all " + std::to_string(flat.size()) + " points are blue");
}

VerifyOutcome check_line_profile(const Json& cert, const Colouring& c) {
  int q = bounded_at(cert, "q", 2, 256);
  int n = bounded_at(cert, "n", 0, 62);
  require_domain(c, q, n);
  const Field& f = c.field();
  FqVec base = vec_at(cert.at("base"), f, n, "base");
  Subspace space = space_from_json(cert.at("basis"), f, n);
  auto profile = code_list(cert.at("profile"), c.colours(), "profile");
  if (int(profile.size()) != q - 1)
    return {false, "profile length must be q-1"};
  for (const FqVec& gen : lines_of(space))
    if (line_profile(c, base, gen) != profile)
      return {false, "line through " + to_literal(gen) +
                         " does not match the recorded profile"};
  return pass("every line of the subspace shares the recorded profile");
}

VerifyOutcome check_sum_system(const Json& cert, const Colouring& c) {
  int q = bounded_at(cert, "q", 2, 2);
  int n = bounded_at(cert, "n", 0, 62);
  require_domain(c, q, n);
  int m = bounded_at(cert, "m", 1, 30);
  int colour = bounded_at(cert, "colour", 0, c.colours() - 1);
  const Json& vecs = cert.at("vectors");
  if (!vecs.is_array() || int(vecs.size()) != m)
    return {false, "vector count does not match the recorded m"};
  std::vector<FqVec> vs;
  for (const Json& e : vecs) vs.push_back(vec_at(e, c.field(), n, "vectors"));
  for (const FqVec& v : vs)
    if (v.is_zero()) return {false, "system contains the zero vector"};
  for (int i = 0; i + 1 < m; ++i)
    if (!precedes(vs[i], vs[i + 1]))
      return {false, "supports are not strictly increasing"};
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask) {
    FqVec sum(c.field(), n);
    for (int i = 0; i < m; ++i)
      if (mask & (std::uint64_t(1) << i)) sum = sum + vs[i];
    if (c.at_point(sum) != colour)
      return {false, "subset sum " + std::to_string(mask) +
                         " does not have the claimed colour"};
  }
  return pass("all " + std::to_string((std::uint64_t(1) << m) - 1) +
              " subset sums have colour " + std::to_string(colour));
}

VerifyOutcome check_vdw(const Json& cert, const IntervalColouring& ic) {
  std::int64_t n_pts = int_at(cert, "N");
  if (n_pts != ic.N)
    return {false, "interval length does not match certificate"};
  int len = bounded_at(cert, "len", 1, 1 << 20);
  std::int64_t a = int_at(cert, "a");
  std::int64_t x = int_at(cert, "x");
  int colour = bounded_at(cert, "colour", 0, ic.colours - 1);
  if (a < 0 || x < 1) return {false, "progression parameters out of range"};
  if (a + std::int64_t(len - 1) * x >= n_pts)
    return {false, "progression leaves the interval"};
  for (int i = 0; i < len; ++i)
    if (ic.values[std::size_t(a + std::int64_t(i) * x)] != colour)
      return {false, "progression entry " + std::to_string(i) +
                         " does not have the claimed colour"};
  return pass("length-" + std::to_string(len) + " progression has colour " +
              std::to_string(colour));
}

VerifyOutcome check_osc_witness(const Json& cert) {
  int q = bounded_at(cert, "q", 3, 256);
  int n_dim = bounded_at(cert, "n", 1, 4096);
  Field f = Field::make(q);
  const Json& rows = cert.at("chain");
  if (!rows.is_array() || rows.size() < 2)
    return {false, "chain needs at least two vectors"};
  std::vector<FqVec> chain;
  for (const Json& e : rows) chain.push_back(vec_at(e, f, n_dim, "chain"));
  int len = int(chain.size());
  auto coeffs = code_list(cert.at("coeffs"), q, "coeffs");
  if (int(coeffs.size()) != len)
    return {false, "coefficient count does not match the chain length"};
  for (int i = 0; i < len; ++i) {
    if (chain[i].is_zero()) return {false, "chain contains the zero vector"};
    if (coeffs[i] == 0) return {false, "coefficients must be nonzero"};
  }
  for (int i = 0; i + 1 < len; ++i) {
    if (!precedes(chain[i], chain[i + 1]))
      return {false, "chain supports are not strictly increasing"};
    if (support_stats(chain[i]).hat != support_stats(chain[i + 1]).check)
      return {false, "chain ends are not matched"};
    if (coeffs[i] == coeffs[i + 1])
      return {false, "consecutive coefficients must differ"};
  }

  FqVec total(f, n_dim);
  for (const FqVec& v : chain) total = total + v;
  int s = osc(total);
  if (int_at(cert, "s") != s)
    return {false, "recorded s does not match the oscillation of the sum"};

  const Json& wits = cert.at("witnesses");
  auto claimed = int_list_at(cert.at("osc_values"), "osc_values");
  if (!wits.is_array() || int(wits.size()) != len - 1 ||
      int(claimed.size()) != len - 1)
    return {false, "expected exactly n-1 witnesses"};

  std::vector<FqVec> suffix(len + 1, FqVec(f, n_dim));
  for (int i = len - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + chain[i];
  FqVec prefix(f, n_dim);
  for (int j = 0; j + 1 < len; ++j) {
    prefix = prefix + chain[j].scaled(coeffs[j]);
    FqVec g = prefix + suffix[j + 1].scaled(coeffs[j + 1]);
    if (vec_at(wits[j], f, n_dim, "witnesses") != g)
      return {false, "witness " + std::to_string(j) +
                         " does not match its recomputation"};
    if (osc(g) != s + j + 1 || claimed[std::size_t(j)] != s + j + 1)
      return {false, "witness " + std::to_string(j) +
                         " misses oscillation " + std::to_string(s + j + 1)};
  }
  return pass("oscillations sweep [" + std::to_string(s + 1) + ", " +
              std::to_string(s + len - 1) + "]");
}

VerifyOutcome check_dodge(const Json& cert) {
  int n = bounded_at(cert, "n", 2, 64);
  std::string scheme = cert.at("scheme").get<std::string>();
  std::uint64_t seed = cert.at("seed").get<std::uint64_t>();
  int lines = bounded_at(cert, "lines", 0, 1 << 20);
  const Json& pts = cert.at("points");
  if (!pts.is_array()) return {false, "points must be an array"};
  std::vector<QVec> points;
  for (const Json& e : pts) points.push_back(qvec_at(e, n, "points"));
  auto owner = int_list_at(cert.at("owner"), "owner");
  if (int(owner.size()) != lines)
    return {false, "owner list does not cover the recorded lines"};
  LineEnum en(n, scheme, seed);
  for (int i = 0; i < lines; ++i) {
    std::int64_t o = owner[std::size_t(i)];
    if (o < 0 || o >= std::int64_t(points.size()))
      return {false, "owner index out of range at line " + std::to_string(i)};
    if (!en.at(std::size_t(i)).contains(points[std::size_t(o)]))
      return {false, "line " + std::to_string(i) +
                         " misses its assigned point"};
  }
  if (auto bad = first_collinear_triple(points))
    return {false, "points " + std::to_string((*bad)[0]) + ", " +
                       std::to_string((*bad)[1]) + ", " +
                       std::to_string((*bad)[2]) + " are collinear"};
  return pass(std::to_string(points.size()) + " points meet all " +
              std::to_string(lines) + " lines with no collinear triple");
}

VerifyOutcome check_hitting(const Json& cert) {
  std::string scheme = cert.at("scheme").get<std::string>();
  if (scheme != "diag_aps_v1") return {false, "unknown progression scheme"};
  int aps = bounded_at(cert, "aps", 0, 1 << 20);
  auto elements = int_list_at(cert.at("elements"), "elements");
  auto chosen = int_list_at(cert.at("chosen"), "chosen");
  if (int(chosen.size()) != aps)
    return {false, "chosen list does not cover the recorded progressions"};
  for (int i = 0; i < aps; ++i) {
    ApSpec spec = ap_at(std::size_t(i), scheme);
    std::int64_t y = chosen[std::size_t(i)];
    if (y < spec.a || (y - spec.a) % spec.x != 0)
      return {false, "chosen value misses progression " + std::to_string(i)};
    if (std::find(elements.begin(), elements.end(), y) == elements.end())
      return {false, "chosen value for progression " + std::to_string(i) +
                         " is not in the set"};
  }
  if (auto ap = first_three_ap(elements))
    return {false, "set contains the progression " +
                       std::to_string((*ap)[0]) + ", " +
                       std::to_string((*ap)[1]) + ", " +
                       std::to_string((*ap)[2])};
  return pass(std::to_string(elements.size()) + " elements meet all " +
              std::to_string(aps) + " progressions, no 3-term progression");
}

VerifyOutcome check_sigma(const Json& cert) {
  int width = bounded_at(cert, "width", 1, 64);
  std::int64_t radix = int_at(cert, "radix");
  const Json& pts = cert.at("points");
  if (!pts.is_array() || pts.empty())
    return {false, "points must be a nonempty array"};
  std::vector<std::vector<std::int64_t>> points;
  std::int64_t max_coord = 0;
  for (const Json& e : pts) {
    auto p = int_list_at(e, "points");
    if (int(p.size()) != width)
      return {false, "point width does not match the recorded width"};
    for (std::int64_t c : p) {
      if (c < 0 || c > (std::int64_t(1) << 40))
        return {false, "coordinate out of range"};
      max_coord = std::max(max_coord, c);
    }
    points.push_back(std::move(p));
  }
  if (radix != 2 * max_coord + 1)
    return {false, "radix is not 2*max+1 for these points"};
  const Json& imgs = cert.at("images");
  if (!imgs.is_array() || imgs.size() != points.size())
    return {false, "image count does not match the points"};
  std::vector<BigInt> images;
  for (const Json& e : imgs) {
    if (!e.is_string()) return {false, "images must be strings"};
    images.emplace_back(e.get<std::string>());
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    BigInt expect = 0, power = 1;
    for (int j = 0; j < width; ++j) {
      expect += BigInt(points[i][std::size_t(j)]) * power;
      power *= radix;
    }
    if (images[i] != expect)
      return {false, "image " + std::to_string(i) +
                         " does not match its base-k recomputation"};
  }
  auto mid = [&](std::size_t x, std::size_t y, std::size_t z) {
    for (int j = 0; j < width; ++j)
      if (2 * points[y][std::size_t(j)] !=
          points[x][std::size_t(j)] + points[z][std::size_t(j)])
        return false;
    return true;
  };
  for (std::size_t x = 0; x < points.size(); ++x)
    for (std::size_t y = 0; y < points.size(); ++y)
      for (std::size_t z = 0; z < points.size(); ++z)
        if (mid(x, y, z) != (2 * images[y] == images[x] + images[z]))
          return {false, "midpoint relation not preserved and reflected"};
  return pass("relation transfers exactly on all " +
              std::to_string(points.size()) + " points");
}

VerifyOutcome check_embedding(const Json& cert, const MidpointStructure& r) {
  int size = bounded_at(cert, "size", 1, 4096);
  if (size != r.size())
    return {false, "structure size does not match certificate"};
  int qdim = bounded_at(cert, "quotient_dim", 0, 4096);
  const Json& imgs = cert.at("images");
  if (!imgs.is_array() || int(imgs.size()) != size)
    return {false, "image count does not match the structure"};
  std::vector<QVec> images;
  for (const Json& e : imgs) images.push_back(qvec_at(e, qdim, "images"));
  for (int a = 0; a < size; ++a)
    for (int b = a + 1; b < size; ++b)
      if (images[std::size_t(a)] == images[std::size_t(b)])
        return {false, "images of " + std::to_string(a) + " and " +
                           std::to_string(b) + " coincide"};
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y)
      for (int z = 0; z < size; ++z) {
        bool img = midpoint_q(images[std::size_t(x)], images[std::size_t(y)],
                              images[std::size_t(z)]);
        if (img != r.related(x, y, z))
          return {false, "triple (" + std::to_string(x) + "," +
                             std::to_string(y) + "," + std::to_string(z) +
                             ") is not carried faithfully"};
      }
  return pass("injective, preserves and reflects all " +
              std::to_string(std::int64_t(size) * size * size) + " triples");
}

VerifyOutcome check_collapse(const Json& cert, const MidpointStructure& r) {
  int size = bounded_at(cert, "size", 1, 4096);
  if (size != r.size())
    return {false, "structure size does not match certificate"};
  EmbeddingMap qm = quotient_images(r);
  if (cert.contains("pair")) {
    auto p = int_list_at(cert.at("pair"), "pair");
    if (p.size() != 2 || p[0] < 0 || p[1] < 0 || p[0] >= size ||
        p[1] >= size || p[0] == p[1])
      return {false, "pair is not two distinct elements"};
    if (qm.images[std::size_t(p[0])] != qm.images[std::size_t(p[1])])
      return {false, "quotient keeps the pair apart"};
    return pass("elements " + std::to_string(p[0]) + " and " +
                std::to_string(p[1]) + " collapse in the quotient");
  }
  if (cert.contains("triple")) {
    auto t = int_list_at(cert.at("triple"), "triple");
    if (t.size() != 3 ||
        std::any_of(t.begin(), t.end(),
                    [&](std::int64_t v) { return v < 0 || v >= size; }))
      return {false, "triple indices out of range"};
    int x = int(t[0]), y = int(t[1]), z = int(t[2]);
    if (r.related(x, y, z))
      return {false, "triple is already related in the structure"};
    if (!midpoint_q(qm.images[std::size_t(x)], qm.images[std::size_t(y)],
                    qm.images[std::size_t(z)]))
      return {false, "quotient does not force the triple"};
    return pass("unrelated triple becomes a midpoint in the quotient");
  }
  return {false, "collapse certificate carries neither pair nor triple"};
}

VerifyOutcome check_nonhomog(const Json& cert) {
  int len = bounded_at(cert, "len", 3, 62);
  auto ta = int_list_at(cert.at("tuple_a"), "tuple_a");
  auto tb = int_list_at(cert.at("tuple_b"), "tuple_b");
  if (int(ta.size()) != len || int(tb.size()) != len)
    return {false, "tuple lengths do not match len"};
  for (int i = 0; i + 1 < len; ++i)
    if (ta[std::size_t(i)] >= ta[std::size_t(i + 1)] ||
        tb[std::size_t(i)] >= tb[std::size_t(i + 1)])
      return {false, "tuples must be strictly increasing"};
  if (!three_ap_free(ta) || !three_ap_free(tb))
    return {false, "a tuple contains a 3-term progression"};
  Rat scale = rat_at(cert, "scale");
  Rat offset = rat_at(cert, "offset");
  Rat want_scale = Rat(tb[1] - tb[0]) / Rat(ta[1] - ta[0]);
  if (scale != want_scale || offset != Rat(tb[0]) - scale * Rat(ta[0]))
    return {false, "scale and offset do not fit the first two points"};
  int fail = bounded_at(cert, "fail_index", 2, len - 1);
  for (int i = 0; i < fail; ++i)
    if (scale * Rat(ta[std::size_t(i)]) + offset != Rat(tb[std::size_t(i)]))
      return {false, "map already fails before the recorded index"};
  Rat image = rat_at(cert, "image");
  Rat expected = rat_at(cert, "expected");
  if (image != scale * Rat(ta[std::size_t(fail)]) + offset)
    return {false, "recorded image does not match the affine map"};
  if (expected != Rat(tb[std::size_t(fail)]))
    return {false, "recorded expectation does not match the tuple"};
  if (image == expected)
    return {false, "map does not actually fail at the recorded index"};
  return pass("no affine map matches index " + std::to_string(fail));
}

}  // namespace

Json flat_to_json(const AffineFlat& flat) {
  Json j;
  j["base"] = vec_json(flat.base());
  Json rows = Json::array();
  for (const FqVec& r : flat.direction().rows()) rows.push_back(vec_json(r));
  j["basis"] = rows;
  return j;
}

Subspace space_from_json(const Json& rows, const Field& f, int n) {
  if (!rows.is_array())
    throw std::invalid_argument("basis must be an array of rows");
  std::vector<FqVec> basis;
  for (const Json& e : rows) basis.push_back(vec_at(e, f, n, "basis"));
  Subspace space = Subspace::span(f, n, basis);
  if (space.rows() != basis)
    throw std::invalid_argument("basis rows are not in reduced echelon form");
  return space;
}

AffineFlat flat_from_json(const Json& j, const Field& f, int n) {
  FqVec base = vec_at(j.at("base"), f, n, "base");
  Subspace space = space_from_json(j.at("basis"), f, n);
  AffineFlat flat(base, space);
  if (flat.base() != base)
    throw std::invalid_argument("base point is not reduced against the basis");
  return flat;
}

Json mono_flat_certificate(int q, int n, int d, std::uint8_t colour,
                           const AffineFlat& flat) {
  Json j = header("mono_flat");
  j["q"] = q;
  j["n"] = n;
  j["d"] = d;
  j["colour"] = int(colour);
  j["flat"] = flat_to_json(flat);
  return j;
}

Json blue_flat_certificate(int q, int n, int k, const AffineFlat& flat) {
  Json j = header("blue_flat");
  j["q"] = q;
  j["n"] = n;
  j["k"] = k;
  j["flat"] = flat_to_json(flat);
  return j;
}

Json line_profile_certificate(int q, int n, const FqVec& base,
                              const Subspace& space,
                              const std::vector<std::uint8_t>& profile) {
  Json j = header("line_profile");
  j["q"] = q;
  j["n"] = n;
  j["base"] = vec_json(base);
  Json rows = Json::array();
  for (const FqVec& r : space.rows()) rows.push_back(vec_json(r));
  j["basis"] = rows;
  Json prof = Json::array();
  for (std::uint8_t c : profile) prof.push_back(int(c));
  j["profile"] = prof;
  return j;
}

Json sum_system_certificate(int n, const SumSystem& sys) {
  Json j = header("sum_system");
  j["q"] = 2;
  j["n"] = n;
  j["m"] = int(sys.vectors.size());
  j["colour"] = int(sys.colour);
  Json rows = Json::array();
  for (const FqVec& v : sys.vectors) rows.push_back(vec_json(v));
  j["vectors"] = rows;
  return j;
}

Json vdw_certificate(std::int64_t n_points, int len, const VdwWitness& w) {
  Json j = header("vdw");
  j["N"] = n_points;
  j["len"] = len;
  j["a"] = w.a;
  j["x"] = w.x;
  j["colour"] = int(w.colour);
  return j;
}

Json osc_witness_certificate(const FlagChain& chain,
                             const std::vector<std::uint8_t>& coeffs,
                             const OscWitnesses& w) {
  Json j = header("osc_witness");
  const Field& f = chain.vectors.front().field();
  j["q"] = f.q();
  j["n"] = chain.vectors.front().dim();
  Json rows = Json::array();
  for (const FqVec& v : chain.vectors) rows.push_back(vec_json(v));
  j["chain"] = rows;
  Json cs = Json::array();
  for (std::uint8_t c : coeffs) cs.push_back(int(c));
  j["coeffs"] = cs;
  j["s"] = w.s;
  Json wits = Json::array();
  for (const FqVec& v : w.vectors) wits.push_back(vec_json(v));
  j["witnesses"] = wits;
  j["osc_values"] = w.osc_values;
  return j;
}

Json dodge_certificate(const DodgeSet& set, int lines) {
  Json j = header("dodge_set");
  j["n"] = set.n;
  j["scheme"] = set.scheme;
  j["seed"] = set.seed;
  j["lines"] = lines;
  Json pts = Json::array();
  for (const QVec& p : set.points) pts.push_back(qvec_json(p));
  j["points"] = pts;
  Json own = Json::array();
  for (std::size_t o : set.owner) own.push_back(std::uint64_t(o));
  j["owner"] = own;
  return j;
}

Json hitting_certificate(const HittingSet& set, int aps) {
  Json j = header("hitting_set");
  j["scheme"] = set.scheme;
  j["seed"] = set.seed;
  j["aps"] = aps;
  j["elements"] = set.elements;
  j["chosen"] = set.chosen;
  return j;
}

Json sigma_certificate(const SigmaEmbedding& emb) {
  Json j = header("sigma_embed");
  j["width"] = emb.points.empty() ? 0 : int(emb.points.front().size());
  j["radix"] = emb.radix;
  j["points"] = emb.points;
  Json imgs = Json::array();
  for (const BigInt& b : emb.images) imgs.push_back(b.str());
  j["images"] = imgs;
  return j;
}

Json embedding_certificate(const EmbeddingMap& map, int size) {
  Json j = header("embedding_map");
  j["size"] = size;
  j["quotient_dim"] = map.quotient_dim;
  Json imgs = Json::array();
  for (const QVec& v : map.images) imgs.push_back(qvec_json(v));
  j["images"] = imgs;
  return j;
}

Json collapse_certificate(const CollapseWitness& w, int size) {
  Json j = header("collapse_witness");
  j["size"] = size;
  if (w.pair) j["pair"] = std::vector<int>{(*w.pair)[0], (*w.pair)[1]};
  if (w.triple)
    j["triple"] =
        std::vector<int>{(*w.triple)[0], (*w.triple)[1], (*w.triple)[2]};
  return j;
}

Json nonhomog_certificate(const NonHomogWitness& w) {
  Json j = header("non_homog");
  j["len"] = int(w.tuple_a.size());
  j["tuple_a"] = w.tuple_a;
  j["tuple_b"] = w.tuple_b;
  j["scale"] = rat_str(w.scale);
  j["offset"] = rat_str(w.offset);
  j["fail_index"] = w.fail_index;
  j["image"] = rat_str(w.image);
  j["expected"] = rat_str(w.expected);
  return j;
}

VerifyInput verify_requirement(const std::string& kind) {
  if (kind == "mono_flat" || kind == "blue_flat" || kind == "line_profile" ||
      kind == "sum_system")
    return VerifyInput::PointColouring;
  if (kind == "vdw") return VerifyInput::IntervalColouring;
  if (kind == "embedding_map" || kind == "collapse_witness")
    return VerifyInput::Structure;
  if (kind == "osc_witness" || kind == "dodge_set" || kind == "hitting_set" ||
      kind == "sigma_embed" || kind == "non_homog")
    return VerifyInput::None;
  throw std::invalid_argument("unknown certificate kind: " + kind);
}

VerifyOutcome verify_certificate(const Json& cert, const Colouring* colouring,
                                 const IntervalColouring* interval,
                                 const MidpointStructure* structure) {
  if (!cert.is_object() || !cert.contains("kind") ||
      !cert.at("kind").is_string())
    throw std::invalid_argument("certificate has no kind");
  const std::string kind = cert.at("kind").get<std::string>();
  switch (verify_requirement(kind)) {
    case VerifyInput::PointColouring:
      if (!colouring)
        throw std::invalid_argument("certificate kind " + kind +
                                    " needs a point colouring");
      break;
    case VerifyInput::IntervalColouring:
      if (!interval)
        throw std::invalid_argument("certificate kind " + kind +
                                    " needs an interval colouring");
      break;
    case VerifyInput::Structure:
      if (!structure)
        throw std::invalid_argument("certificate kind " + kind +
                                    " needs a structure file");
      break;
    case VerifyInput::None:
      break;
  }
  try {
    require_format(cert);
    if (kind == "mono_flat") return check_mono_flat(cert, *colouring);
    if (kind == "blue_flat") return check_blue_flat(cert, *colouring);
    if (kind == "line_profile") return check_line_profile(cert, *colouring);
    if (kind == "sum_system") return check_sum_system(cert, *colouring);
    if (kind == "vdw") return check_vdw(cert, *interval);
    if (kind == "osc_witness") return check_osc_witness(cert);
    if (kind == "dodge_set") return check_dodge(cert);
    if (kind == "hitting_set") return check_hitting(cert);
    if (kind == "sigma_embed") return check_sigma(cert);
    if (kind == "embedding_map") return check_embedding(cert, *structure);
    if (kind == "collapse_witness") return check_collapse(cert, *structure);
    return check_nonhomog(cert);
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
}

}  // namespace vecram
