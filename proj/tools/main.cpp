#include <omp.h>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vecram/blueflat.hpp"
#include "vecram/certificate.hpp"
#include "vecram/colouring.hpp"
#include "vecram/dodge.hpp"
#include "vecram/errors.hpp"
#include "vecram/hitting.hpp"
#include "vecram/midpoint.hpp"
#include "vecram/oscwitness.hpp"
#include "vecram/search.hpp"

namespace {

using vecram::Json;

constexpr const char* kToolVersion = "vecram 1.0.0";

struct Opts {
  std::string colouring, structure, cert, points, out;
  std::vector<std::string> vecs;
  std::string coeffs;
  std::string scheme;
  int q = 2, n = 0, d = 1, k = 1, colours = 2, len = 3, m = 2, t = 0;
  std::int64_t line_count = 0;  // --N
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  int threads = 1;
  bool exhaustive = false;

  bool parallel() const { return threads != 1; }
  vecram::Budget budget_caps() const {
    vecram::Budget b;
    if (budget) {
      b.max_colourings = budget;
      b.max_nodes = budget;
    }
    return b;
  }
};

Json report_head(const std::string& sub) {
  Json j;
  j["report"] = "report_v1";
  j["tool"] = kToolVersion;
  j["subcommand"] = sub;
  return j;
}

void emit(const Json& rep) { std::cout << rep.dump(2) << "\n"; }

// Runs the in-process verifier, folds certificate and verdict into the
// report, and optionally writes the bare certificate for a separate check.
int finish_with_certificate(Json rep, const Json& cert,
                            const vecram::Colouring* col,
                            const vecram::IntervalColouring* ic,
                            const vecram::MidpointStructure* st,
                            const Opts& o) {
  vecram::VerifyOutcome v = vecram::verify_certificate(cert, col, ic, st);
  rep["certificate"] = cert;
  rep["verifier"] = Json{{"valid", v.ok}, {"detail", v.detail}};
  emit(rep);
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) throw std::invalid_argument("cannot open output file: " + o.out);
    f << cert.dump(2) << "\n";
  }
  return v.ok ? 0 : 1;
}

std::vector<std::uint8_t> parse_coeffs(const std::string& s, int q) {
  std::vector<std::uint8_t> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    int v = std::stoi(tok);
    if (v < 0 || v >= q)
      throw std::invalid_argument("coefficient out of field range");
    out.push_back(std::uint8_t(v));
  }
  return out;
}

int run_mono_flat(const Opts& o) {
  vecram::Colouring c = vecram::Colouring::read_file(o.colouring);
  Json rep = report_head("mono-flat");
  rep["parameters"] = Json{{"colouring", o.colouring}, {"d", o.d}};
  auto hit = vecram::find_mono_flat(c, o.d, o.parallel());
  if (!hit) {
    rep["outcome"] = "none";
    rep["detail"] = "no monochromatic flat of dimension " + std::to_string(o.d);
    emit(rep);
    return 1;
  }
  rep["outcome"] = "certificate";
  Json cert = vecram::mono_flat_certificate(c.field().q(),
                                            c.domain().ambient(), o.d,
                                            hit->colour, hit->flat);
  return finish_with_certificate(std::move(rep), cert, &c, nullptr, nullptr,
                                 o);
}

int run_glr(const Opts& o) {
  int cap = o.n > 0 ? o.n : 4;
  vecram::Field f = vecram::Field::make(o.q);
  Json rep = report_head("glr");
  rep["parameters"] = Json{{"q", o.q},
                           {"colours", o.colours},
                           {"d", o.d},
                           {"t", o.t},
                           {"n", cap},
                           {"budget", o.budget_caps().max_colourings}};
  vecram::GlrResult res = vecram::glr_number_empirical(
      f, o.colours, o.d, o.t, cap, o.budget_caps(), o.parallel());
  Json ev = Json::array();
  for (const auto& e : res.evidence) {
    Json row;
    row["n"] = e.n;
    row["colourings"] = e.colourings;
    if (e.least_failing)
      row["least_failing"] = *e.least_failing;
    else
      row["least_failing"] = nullptr;
    ev.push_back(row);
  }
  rep["outcome"] = res.value ? "value" : "unknown";
  if (res.value)
    rep["value"] = *res.value;
  else
    rep["value"] = nullptr;
  rep["evidence"] = ev;
  emit(rep);
  return res.value ? 0 : 1;
}

int run_blue_flat(const Opts& o) {
  vecram::Colouring c = vecram::Colouring::read_file(o.colouring);
  Json rep = report_head("blue-flat");
  rep["parameters"] = Json{{"colouring", o.colouring}, {"k", o.k}};
  vecram::GrowthResult res = vecram::grow_blue_flat(c, o.k);
  int q = c.field().q(), n = c.domain().ambient();
  if (res.red_flat) {
    rep["outcome"] = "red_flat";
    Json cert = vecram::mono_flat_certificate(q, n, res.red_flat->dim(),
                                              vecram::kRed, *res.red_flat);
    return finish_with_certificate(std::move(rep), cert, &c, nullptr, nullptr,
                                   o);
  }
  rep["outcome"] = "blue_flat";
  Json dims = Json::array();
  for (const auto& f : res.trace) dims.push_back(f.dim());
  rep["trace_dims"] = dims;
  Json cert = vecram::blue_flat_certificate(q, n, o.k, *res.blue_flat);
  return finish_with_certificate(std::move(rep), cert, &c, nullptr, nullptr,
                                 o);
}

int run_hindman(const Opts& o) {
  Json rep = report_head("hindman");
  if (o.exhaustive) {
    rep["parameters"] = Json{{"q", 2},
                             {"n", o.n},
                             {"m", o.m},
                             {"colours", o.colours},
                             {"budget", o.budget_caps().max_colourings}};
    vecram::Field f = vecram::Field::make(2);
    vecram::ExhaustiveVerdict v = vecram::hindman_exhaustive(
        f, o.n, o.m, o.colours, o.budget_caps(), o.parallel());
    rep["outcome"] = v.holds ? "holds" : "refuted";
    rep["colourings"] = v.total;
    if (v.least_failing)
      rep["least_failing"] = *v.least_failing;
    else
      rep["least_failing"] = nullptr;
    emit(rep);
    return v.holds ? 0 : 1;
  }
  vecram::Colouring c = vecram::Colouring::read_file(o.colouring);
  rep["parameters"] = Json{{"colouring", o.colouring}, {"m", o.m}};
  auto sys = vecram::hindman_sums_search(c, o.m, o.budget_caps());
  if (!sys) {
    rep["outcome"] = "none";
    rep["detail"] =
        "no monochromatic sum system of length " + std::to_string(o.m);
    emit(rep);
    return 1;
  }
  rep["outcome"] = "certificate";
  Json cert = vecram::sum_system_certificate(c.domain().ambient(), *sys);
  return finish_with_certificate(std::move(rep), cert, &c, nullptr, nullptr,
                                 o);
}

int run_vdw(const Opts& o) {
  Json rep = report_head("vdw");
  if (o.exhaustive) {
    rep["parameters"] = Json{{"N", o.line_count},
                             {"len", o.len},
                             {"colours", o.colours},
                             {"budget", o.budget_caps().max_colourings}};
    vecram::ExhaustiveVerdict v =
        vecram::vdw_exhaustive(int(o.line_count), o.len, o.colours,
                               o.budget_caps(), o.parallel());
    rep["outcome"] = v.holds ? "holds" : "refuted";
    rep["colourings"] = v.total;
    if (v.least_failing)
      rep["least_failing"] = *v.least_failing;
    else
      rep["least_failing"] = nullptr;
    emit(rep);
    return v.holds ? 0 : 1;
  }
  vecram::IntervalColouring ic =
      vecram::read_interval_colouring(o.colouring);
  rep["parameters"] = Json{{"colouring", o.colouring}, {"len", o.len}};
  auto w = vecram::vdw_search(ic.values, o.len);
  if (!w) {
    rep["outcome"] = "none";
    rep["detail"] = "no monochromatic progression of length " +
                    std::to_string(o.len);
    emit(rep);
    return 1;
  }
  rep["outcome"] = "certificate";
  Json cert = vecram::vdw_certificate(ic.N, o.len, *w);
  return finish_with_certificate(std::move(rep), cert, nullptr, &ic, nullptr,
                                 o);
}

int run_osc_witness(const Opts& o) {
  if (o.vecs.empty())
    throw std::invalid_argument("provide the chain with repeated --vec");
  std::vector<vecram::FqVec> vs;
  for (const std::string& lit : o.vecs) {
    vecram::FqVec v = vecram::parse_literal(lit);
    if (!vs.empty() && v.field() != vs.front().field())
      throw std::invalid_argument("chain vectors use different fields");
    vs.push_back(std::move(v));
  }
  vecram::FlagChain chain = vecram::make_flag_chain(vs);
  if (!chain.matched) chain = vecram::match_ends(chain);
  int q = chain.vectors.front().field().q();
  std::vector<std::uint8_t> coeffs;
  if (!o.coeffs.empty()) {
    coeffs = parse_coeffs(o.coeffs, q);
  } else {
    for (std::size_t i = 0; i < chain.vectors.size(); ++i)
      coeffs.push_back(i % 2 == 0 ? 1 : 2);
  }
  Json rep = report_head("osc-witness");
  Json lits = Json::array();
  for (const std::string& s : o.vecs) lits.push_back(s);
  rep["parameters"] = Json{{"vectors", lits}};
  vecram::OscWitnesses w = vecram::osc_interval_witness(chain, coeffs);
  rep["outcome"] = "certificate";
  Json cert = vecram::osc_witness_certificate(chain, coeffs, w);
  return finish_with_certificate(std::move(rep), cert, nullptr, nullptr,
                                 nullptr, o);
}

int run_dodge_lines(const Opts& o) {
  std::string scheme = o.scheme.empty() ? "diag_lines_v1" : o.scheme;
  Json rep = report_head("dodge-lines");
  rep["parameters"] = Json{{"n", o.n},
                           {"N", o.line_count},
                           {"scheme", scheme},
                           {"seed", o.seed}};
  vecram::DodgeSet set =
      vecram::dodge_lines(o.n, int(o.line_count), scheme, o.seed);
  rep["outcome"] = "certificate";
  Json cert = vecram::dodge_certificate(set, int(o.line_count));
  return finish_with_certificate(std::move(rep), cert, nullptr, nullptr,
                                 nullptr, o);
}

int run_ap_hitting(const Opts& o) {
  std::string scheme = o.scheme.empty() ? "diag_aps_v1" : o.scheme;
  Json rep = report_head("ap-hitting");
  rep["parameters"] =
      Json{{"N", o.line_count}, {"scheme", scheme}, {"seed", o.seed}};
  vecram::HittingSet set =
      vecram::ap_hitting_set(int(o.line_count), scheme, o.seed);
  rep["outcome"] = "certificate";
  Json cert = vecram::hitting_certificate(set, int(o.line_count));
  return finish_with_certificate(std::move(rep), cert, nullptr, nullptr,
                                 nullptr, o);
}

std::vector<std::vector<std::int64_t>> read_points_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open points file: " + path);
  std::int64_t count = 0, width = 0;
  if (!(in >> count >> width) || count < 1 || width < 1)
    throw std::invalid_argument("points file needs a `count width` header");
  std::vector<std::vector<std::int64_t>> pts;
  for (std::int64_t i = 0; i < count; ++i) {
    std::vector<std::int64_t> p;
    for (std::int64_t j = 0; j < width; ++j) {
      std::int64_t v;
      if (!(in >> v))
        throw std::invalid_argument("points file ends before all rows");
      p.push_back(v);
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

int run_sigma_embed(const Opts& o) {
  auto pts = read_points_file(o.points);
  Json rep = report_head("sigma-embed");
  rep["parameters"] = Json{{"points", o.points}};
  vecram::SigmaEmbedding emb = vecram::sigma_embed(pts);
  rep["outcome"] = "certificate";
  Json cert = vecram::sigma_certificate(emb);
  return finish_with_certificate(std::move(rep), cert, nullptr, nullptr,
                                 nullptr, o);
}

int run_quotient_embed(const Opts& o) {
  vecram::MidpointStructure r =
      vecram::MidpointStructure::read_file(o.structure);
  Json rep = report_head("quotient-embed");
  rep["parameters"] = Json{{"structure", o.structure}};
  vecram::UniversalResult res = vecram::embed_universal(r);
  if (res.map) {
    rep["outcome"] = "embedding";
    Json cert = vecram::embedding_certificate(*res.map, r.size());
    return finish_with_certificate(std::move(rep), cert, nullptr, nullptr, &r,
                                   o);
  }
  rep["outcome"] = "collapse";
  Json cert = vecram::collapse_certificate(*res.collapse, r.size());
  return finish_with_certificate(std::move(rep), cert, nullptr, nullptr, &r,
                                 o);
}

int run_witness_nonhomog(const Opts& o) {
  Json rep = report_head("witness-nonhomog");
  rep["parameters"] = Json{{"len", o.len}};
  vecram::NonHomogWitness w = vecram::non_homogeneity_witness(o.len);
  rep["outcome"] = "certificate";
  Json cert = vecram::nonhomog_certificate(w);
  return finish_with_certificate(std::move(rep), cert, nullptr, nullptr,
                                 nullptr, o);
}

int run_verify(const Opts& o) {
  std::ifstream in(o.cert);
  if (!in)
    throw std::invalid_argument("cannot open certificate file: " + o.cert);
  Json cert = Json::parse(in);
  if (!cert.is_object() || !cert.contains("kind") ||
      !cert.at("kind").is_string())
    throw std::invalid_argument("certificate has no kind");
  vecram::VerifyInput need =
      vecram::verify_requirement(cert.at("kind").get<std::string>());

  std::optional<vecram::Colouring> col;
  std::optional<vecram::IntervalColouring> ic;
  std::optional<vecram::MidpointStructure> st;
  switch (need) {
    case vecram::VerifyInput::PointColouring:
      if (o.colouring.empty())
        throw std::invalid_argument(
            "this certificate kind needs --colouring");
      col = vecram::Colouring::read_file(o.colouring);
      break;
    case vecram::VerifyInput::IntervalColouring:
      if (o.colouring.empty())
        throw std::invalid_argument(
            "this certificate kind needs --colouring");
      ic = vecram::read_interval_colouring(o.colouring);
      break;
    case vecram::VerifyInput::Structure:
      if (o.structure.empty())
        throw std::invalid_argument(
            "this certificate kind needs --structure");
      st = vecram::MidpointStructure::read_file(o.structure);
      break;
    case vecram::VerifyInput::None:
      break;
  }
  vecram::VerifyOutcome v = vecram::verify_certificate(
      cert, col ? &*col : nullptr, ic ? &*ic : nullptr,
      st ? &*st : nullptr);
  Json rep = report_head("verify");
  Json params;
  params["cert"] = o.cert;
  if (!o.colouring.empty()) params["colouring"] = o.colouring;
  if (!o.structure.empty()) params["structure"] = o.structure;
  rep["parameters"] = params;
  rep["outcome"] = v.ok ? "valid" : "invalid";
  rep["verifier"] = Json{{"valid", v.ok}, {"detail", v.detail}};
  emit(rep);
  return v.ok ? 0 : 1;
}

void add_common(CLI::App* sub, Opts& o) {
  sub->add_option("--threads", o.threads,
                  "worker threads: 1 = serial, 0 = library default");
  sub->add_option("--budget", o.budget,
                  "cap on enumerated colourings / search nodes");
  sub->add_option("--out", o.out, "write the bare certificate to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"searches and certificate checks over finite vector spaces"};
  app.require_subcommand(1);
  Opts o;
  std::function<int()> task;

  auto* mono = app.add_subcommand(
      "mono-flat", "least monochromatic d-flat of a point colouring");
  mono->add_option("--colouring", o.colouring, "point colouring file")
      ->required();
  mono->add_option("--d", o.d, "flat dimension")->required();
  add_common(mono, o);
  mono->callback([&] { task = [&] { return run_mono_flat(o); }; });

  auto* glr = app.add_subcommand(
      "glr", "empirical least sufficient dimension by full exhaustion");
  glr->add_option("--q", o.q, "field size")->required();
  glr->add_option("--colours", o.colours, "number of colours")->required();
  glr->add_option("--d", o.d, "target dimension")->required();
  glr->add_option("--t", o.t, "0 = point colourings, 1 = line colourings");
  glr->add_option("--n", o.n, "largest ambient dimension to scan");
  add_common(glr, o);
  glr->callback([&] { task = [&] { return run_glr(o); }; });

  auto* blue = app.add_subcommand(
      "blue-flat", "red k-flat or grown blue flat for a two-colouring");
  blue->add_option("--colouring", o.colouring, "point colouring file")
      ->required();
  blue->add_option("--k", o.k, "red flat dimension sought")->required();
  add_common(blue, o);
  blue->callback([&] { task = [&] { return run_blue_flat(o); }; });

  auto* hind = app.add_subcommand(
      "hindman", "monochromatic subset-sum systems over GF(2)");
  hind->add_option("--colouring", o.colouring, "point colouring file");
  hind->add_option("--m", o.m, "system length")->required();
  hind->add_flag("--exhaustive", o.exhaustive,
                 "scan every colouring instead of one file");
  hind->add_option("--n", o.n, "ambient dimension (exhaustive mode)");
  hind->add_option("--colours", o.colours, "colour count (exhaustive mode)");
  add_common(hind, o);
  hind->callback([&] { task = [&] { return run_hindman(o); }; });

  auto* vdw = app.add_subcommand(
      "vdw", "monochromatic arithmetic progressions on an interval");
  vdw->add_option("--colouring", o.colouring, "interval colouring file");
  vdw->add_option("--len", o.len, "progression length")->required();
  vdw->add_flag("--exhaustive", o.exhaustive,
                "scan every colouring of [0, N)");
  vdw->add_option("--N", o.line_count, "interval length (exhaustive mode)");
  vdw->add_option("--colours", o.colours, "colour count (exhaustive mode)");
  add_common(vdw, o);
  vdw->callback([&] { task = [&] { return run_vdw(o); }; });

  auto* oscw = app.add_subcommand(
      "osc-witness", "combinations sweeping an oscillation interval");
  oscw->add_option("--vec", o.vecs,
                   "chain vector literal q:n:c0,c1,... (repeat in order)")
      ->required();
  oscw->add_option("--coeffs", o.coeffs,
                   "comma-separated nonzero coefficients");
  add_common(oscw, o);
  oscw->callback([&] { task = [&] { return run_osc_witness(o); }; });

  auto* dodge = app.add_subcommand(
      "dodge-lines", "point per line with no three points collinear");
  dodge->add_option("--n", o.n, "ambient dimension over the rationals")
      ->required();
  dodge->add_option("--N", o.line_count, "number of enumerated lines to hit")
      ->required();
  dodge->add_option("--scheme", o.scheme, "line enumeration scheme");
  dodge->add_option("--seed", o.seed, "enumeration seed (recorded)");
  add_common(dodge, o);
  dodge->callback([&] { task = [&] { return run_dodge_lines(o); }; });

  auto* hit = app.add_subcommand(
      "ap-hitting", "progression-free set meeting arithmetic progressions");
  hit->add_option("--N", o.line_count, "number of progressions to hit")
      ->required();
  hit->add_option("--scheme", o.scheme, "progression enumeration scheme");
  hit->add_option("--seed", o.seed, "enumeration seed (recorded)");
  add_common(hit, o);
  hit->callback([&] { task = [&] { return run_ap_hitting(o); }; });

  auto* sigma = app.add_subcommand(
      "sigma-embed", "carry-free radix flattening of natural points");
  sigma->add_option("--points", o.points,
                    "file: `count width` header then integer rows")
      ->required();
  add_common(sigma, o);
  sigma->callback([&] { task = [&] { return run_sigma_embed(o); }; });

  auto* quot = app.add_subcommand(
      "quotient-embed", "rational embedding or collapse of a structure");
  quot->add_option("--structure", o.structure, "structure file")->required();
  add_common(quot, o);
  quot->callback([&] { task = [&] { return run_quotient_embed(o); }; });

  auto* nonh = app.add_subcommand(
      "witness-nonhomog", "index bijection that no affine map extends");
  nonh->add_option("--len", o.len, "tuple length, at least 3")->required();
  add_common(nonh, o);
  nonh->callback([&] { task = [&] { return run_witness_nonhomog(o); }; });

  auto* ver = app.add_subcommand("verify",
                                 "recheck a certificate against its input");
  ver->add_option("--cert", o.cert, "certificate JSON file")->required();
  ver->add_option("--colouring", o.colouring,
                  "point or interval colouring file");
  ver->add_option("--structure", o.structure, "structure file");
  add_common(ver, o);
  ver->callback([&] { task = [&] { return run_verify(o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (o.threads > 1) omp_set_num_threads(o.threads);
  int used = o.parallel() ? omp_get_max_threads() : 1;

  auto t0 = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    rc = task();
  } catch (const vecram::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    rc = 2;
  } catch (const vecram::AmbientError& e) {
    std::cerr << "ambient space too small: " << e.what() << "\n";
    rc = 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    rc = 2;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    rc = 2;
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::cerr << "elapsed_ms=" << ms << " threads=" << used << "\n";
  return rc;
}
