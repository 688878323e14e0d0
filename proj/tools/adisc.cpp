// adisc: signed supports, Gale duals, signed reduced A-discriminants,
// tropical curves and the bivariate 5-nomial classifier.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "adisc/discriminant.hpp"
#include "adisc/io.hpp"
#include "adisc/pentanomial.hpp"
#include "adisc/separation.hpp"
#include "adisc/support.hpp"
#include "adisc/svg.hpp"
#include "adisc/tropical.hpp"
#include "adisc/zeroset.hpp"

using adisc::Errc;
using adisc::Error;
using adisc::GaleDual;
using adisc::QVec;
using adisc::Rat;
using adisc::SignedSupport;
using Json = adisc::io::Json;

namespace {

constexpr const char* kSchema = "adisc-1";

SignedSupport load_support(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open input file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return adisc::io::parse_support_text(ss.str());
}

void write_file(const std::filesystem::path& dir, const std::string& name,
                const std::string& content) {
  std::filesystem::create_directories(dir);
  std::ofstream out(dir / name, std::ios::binary);
  out << content;
}

std::string fmt(double v) { return adisc::io::format_double(v); }

Json hyperplane_json(const adisc::separation::Hyperplane& h) {
  Json j;
  j["v"] = adisc::io::qvec_json(h.v);
  j["a"] = h.a.to_string();
  switch (h.kind) {
    case adisc::separation::Hyperplane::Kind::kVeryStrict: j["kind"] = "very-strict"; break;
    case adisc::separation::Hyperplane::Kind::kNonTrivial: j["kind"] = "non-trivial"; break;
    default: j["kind"] = "separating";
  }
  return j;
}

Json interval_json(const adisc::discriminant::Interval& iv) {
  Json j;
  j["lo"] = iv.lo ? Json(iv.lo->to_string()) : Json(nullptr);
  j["hi"] = iv.hi ? Json(iv.hi->to_string()) : Json(nullptr);
  return j;
}

Json critical_points_json(const adisc::discriminant::CriticalPoints& cps) {
  Json arr = Json::array();
  for (const auto& cp : cps.points) {
    Json j;
    j["mu"] = fmt(cp.mu);
    j["exact"] = cp.root.exact ? Json(cp.root.exact->to_string()) : Json(nullptr);
    j["image"] = {fmt(cp.image[0]), fmt(cp.image[1])};
    arr.push_back(j);
  }
  return arr;
}

struct DiscriminantPipeline {
  SignedSupport oriented;
  bool flipped = false;
  GaleDual gale;
  adisc::discriminant::ParamDomain domain;
  adisc::discriminant::CriticalPoints crit;
};

DiscriminantPipeline run_discriminant(const SignedSupport& s) {
  DiscriminantPipeline p;
  auto [os, flipped] = adisc::oriented_for_discriminant(s);
  p.oriented = os;
  p.flipped = flipped;
  p.gale = adisc::gale_dual(adisc::build_ahat(os));
  p.domain = adisc::discriminant::domain_intervals(p.gale, os.signs);
  p.crit = adisc::discriminant::critical_points(p.gale, os.signs);
  return p;
}

std::string curve_svg(const adisc::discriminant::DiscriminantCurve& curve) {
  adisc::svg::Canvas canvas(curve.window);
  canvas.axes();
  for (const auto& pl : curve.polylines) {
    std::vector<std::array<double, 2>> pts;
    for (const auto& p : pl.pts) pts.push_back({p.x, p.y});
    canvas.polyline(pts, "#1f4e9c", 1.5);
  }
  for (const auto& cp : curve.cusps) canvas.circle({cp.image[0], cp.image[1]}, 5, "#c02020");
  return canvas.str();
}

std::string samples_csv(const adisc::discriminant::DiscriminantCurve& curve) {
  std::string csv = "mu,x,y,interval\n";
  for (const auto& pl : curve.polylines)
    for (const auto& p : pl.pts)
      csv += fmt(p.mu) + "," + fmt(p.x) + "," + fmt(p.y) + "," + std::to_string(pl.interval_id) +
             "\n";
  return csv;
}

Json signatures_json(const adisc::tropical::PatchworkReport& rep) {
  Json arr = Json::array();
  for (const auto& [sig, count] : rep.signatures) {
    Json j;
    j["components"] = sig.components;
    j["bounded"] = sig.bounded;
    j["count"] = count;
    arr.push_back(j);
  }
  return arr;
}

Json classification_json(const adisc::pentanomial::Classification& c) {
  using V = adisc::pentanomial::Classification::Verdict;
  Json j;
  switch (c.verdict) {
    case V::kEmptyDiscriminant: j["verdict"] = "empty-discriminant"; break;
    case V::kZeroCritical: j["verdict"] = "0-critical-points"; break;
    case V::kOneCritical: j["verdict"] = "1-critical-point"; break;
    case V::kTwoCritical: j["verdict"] = "2-critical-points"; break;
    case V::kBoundaryCase: j["verdict"] = "boundary-case"; break;
  }
  j["case"] = c.case_label;
  if (c.exact_count >= 0) j["critical_points"] = c.exact_count;
  if (c.standardized &&
      c.standardized->state == adisc::pentanomial::StandardizedPentanomial::State::kStandard) {
    Json st;
    st["x1"] = c.standardized->x1.to_string();
    st["y1"] = c.standardized->y1.to_string();
    st["x2"] = c.standardized->x2.to_string();
    st["y2"] = c.standardized->y2.to_string();
    st["flipped"] = c.standardized->flipped;
    j["standardized"] = st;
  }
  if (c.qb) {
    j["qb"] = {{"a", c.qb->a.to_string()}, {"b", c.qb->b.to_string()},
               {"c", c.qb->c.to_string()}};
  }
  j["inequalities"] = {{"satisfied", c.inequalities_satisfied},
                       {"violated", c.inequalities_violated}};
  return j;
}

QVec parse_rat_list(const std::string& csv) {
  QVec out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rat::parse(item));
  return out;
}

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

// ---- subcommand bodies -----------------------------------------------------

int cmd_separate(const std::string& input) {
  SignedSupport s = load_support(input);
  Json out;
  out["schema"] = kSchema;
  adisc::separation::StiemkeResult st = adisc::separation::stiemke(s);
  out["nontrivial"] = st.hyperplane ? hyperplane_json(*st.hyperplane) : Json(nullptr);
  out["trivially_separable"] = st.trivially_separable;
  if (!st.separable()) out["kernel_witness"] = adisc::io::qvec_json(st.kernel_witness);
  auto vs = adisc::separation::has_very_strict_separating_hyperplane(s);
  out["very_strict"] = vs ? hyperplane_json(*vs) : Json(nullptr);
  if (s.n <= 3) {
    Json faces = Json::array();
    adisc::separation::FaceReport fr = adisc::separation::all_faces_separable(s);
    for (const auto& fv : fr.verdicts) {
      Json f;
      f["indices"] = fv.face.indices;
      f["dim"] = fv.face.dim;
      f["proper"] = fv.face.proper;
      f["separable"] = fv.separable;
      faces.push_back(f);
    }
    out["faces"] = faces;
    out["all_faces_separable"] = fr.all_separable;
  } else {
    out["faces"] = Json(nullptr);
  }
  if (s.count() <= 14) {
    adisc::separation::SeparabilityReport rep =
        adisc::separation::count_nonseparable_sign_vectors(s);
    out["zonotope"] = {{"count", rep.count}, {"bound", rep.bound.to_string()}};
  } else {
    out["zonotope"] = Json(nullptr);
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_discriminant(const std::string& input, const std::string& outdir, double step,
                     const std::vector<double>& window) {
  SignedSupport s = load_support(input);
  DiscriminantPipeline p = run_discriminant(s);
  Json out;
  out["schema"] = kSchema;
  out["flipped_signs"] = p.flipped;
  out["k"] = p.gale.k();
  Json dom = Json::array();
  for (const auto& iv : p.domain.intervals) dom.push_back(interval_json(iv));
  out["domain"] = dom;
  out["critical_points"] = critical_points_json(p.crit);
  out["qb_is_zero"] = p.crit.qb_is_zero;
  if (!p.domain.empty()) {
    adisc::discriminant::CurveQuality q;
    q.step = step;
    if (window.size() == 4) q.window = {window[0], window[1], window[2], window[3]};
    adisc::discriminant::DiscriminantCurve curve =
        adisc::discriminant::sample_curve(p.gale, p.oriented.signs, q);
    write_file(outdir, "discriminant_samples.csv", samples_csv(curve));
    write_file(outdir, "discriminant.svg", curve_svg(curve));
    Json cps;
    cps["schema"] = kSchema;
    cps["critical_points"] = out["critical_points"];
    write_file(outdir, "critical_points.json", cps.dump(2) + "\n");
    out["window"] = {fmt(curve.window[0]), fmt(curve.window[1]), fmt(curve.window[2]),
                     fmt(curve.window[3])};
    out["files"] = {outdir + "/discriminant_samples.csv", outdir + "/discriminant.svg",
                    outdir + "/critical_points.json"};
  } else {
    out["empty"] = true;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_chambers(const std::string& input, size_t resolution, double step,
                 const std::vector<double>& window) {
  SignedSupport s = load_support(input);
  DiscriminantPipeline p = run_discriminant(s);
  Json out;
  out["schema"] = kSchema;
  if (p.domain.empty()) {
    out["total"] = 1;
    out["bounded"] = 0;
    out["empty_discriminant"] = true;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  adisc::discriminant::CurveQuality q;
  q.step = step;
  if (window.size() == 4) q.window = {window[0], window[1], window[2], window[3]};
  adisc::discriminant::DiscriminantCurve curve =
      adisc::discriminant::sample_curve(p.gale, p.oriented.signs, q);
  adisc::discriminant::ChamberReport rep = adisc::discriminant::chamber_count(curve, resolution);
  out["total"] = rep.total;
  out["bounded"] = rep.bounded;
  out["resolution"] = rep.resolution;
  out["window"] = {fmt(rep.window[0]), fmt(rep.window[1]), fmt(rep.window[2]),
                   fmt(rep.window[3])};
  Json reps = Json::array();
  for (size_t i = 0; i < rep.representatives.size(); ++i) {
    Json r;
    r["point"] = {fmt(rep.representatives[i][0]), fmt(rep.representatives[i][1])};
    r["bounded"] = static_cast<bool>(rep.representative_bounded[i]);
    reps.push_back(r);
  }
  out["representatives"] = reps;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_tropical(const std::string& input, const std::string& lift, const std::string& outdir) {
  SignedSupport s = load_support(input);
  QVec h = parse_rat_list(lift);
  adisc::tropical::RegularSubdivision sub = adisc::tropical::regular_subdivision(s, h);
  Json out;
  out["schema"] = kSchema;
  out["generic"] = sub.generic;
  out["triangles"] = sub.cells.size();
  out["edges"] = sub.edges.size();
  out["vertices"] = sub.vertices.size();
  Json cells = Json::array();
  for (size_t i = 0; i < sub.cells.size(); ++i) {
    Json c;
    c["points"] = sub.cells[i];
    c["dual"] = {sub.cell_dual[i][0].to_string(), sub.cell_dual[i][1].to_string()};
    cells.push_back(c);
  }
  out["cells"] = cells;

  // window: support points plus (when generic) the dual vertices, padded
  double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
  auto grow = [&](double x, double y) {
    x0 = std::min(x0, x);
    y0 = std::min(y0, y);
    x1 = std::max(x1, x);
    y1 = std::max(y1, y);
  };
  for (const QVec& p : s.points) grow(p[0].to_double(), p[1].to_double());
  for (const auto& d : sub.cell_dual) grow(d[0].to_double(), d[1].to_double());
  double pad = std::max({1.0, (x1 - x0) * 0.25, (y1 - y0) * 0.25});
  double lo = std::min(x0, y0) - pad, hi = std::max(x1, y1) + pad;
  adisc::svg::Canvas canvas({lo, lo, hi, hi});
  canvas.axes();
  for (const auto& corners : sub.cell_hull) {
    std::vector<std::array<double, 2>> poly;
    for (size_t v : corners)
      poly.push_back({s.points[v][0].to_double(), s.points[v][1].to_double()});
    poly.push_back(poly.front());
    canvas.polyline(poly, "#999999", 1.0);
  }
  if (sub.generic) {
    adisc::tropical::SignedCurveReport scr = adisc::tropical::signed_tropical_curve(s, h);
    out["tropical_vertices"] = scr.curve.vertices.size();
    out["tropical_edges"] = scr.curve.edges.size();
    out["rays"] = scr.curve.ray_count();
    out["signed_components"] = scr.components;
    out["signed_bounded_components"] = scr.bounded_components;
    double reach = 2.0 * (hi - lo);
    auto vpos = [&](size_t vi) {
      return std::array<double, 2>{scr.curve.vertices[vi].pos[0].to_double(),
                                   scr.curve.vertices[vi].pos[1].to_double()};
    };
    for (size_t ei = 0; ei < scr.curve.edges.size(); ++ei) {
      const auto& e = scr.curve.edges[ei];
      std::array<double, 2> a = vpos(e.a), b;
      if (e.b) {
        b = vpos(*e.b);
      } else {
        double dx = e.ray_dir[0].to_double(), dy = e.ray_dir[1].to_double();
        double norm = std::hypot(dx, dy);
        b = {a[0] + reach * dx / norm, a[1] + reach * dy / norm};
      }
      canvas.segment(a, b, e.is_signed ? "#c02020" : "#1f4e9c", e.is_signed ? 2.5 : 1.2);
    }
    for (size_t vi = 0; vi < scr.curve.vertices.size(); ++vi)
      canvas.circle(vpos(vi), 3, "#1f4e9c");
  }
  for (size_t i = 0; i < s.count(); ++i)
    canvas.circle({s.points[i][0].to_double(), s.points[i][1].to_double()}, 4,
                  s.signs[i] > 0 ? "#c02020" : "#2040c0", s.signs[i] > 0);
  write_file(outdir, "tropical.svg", canvas.str());
  write_file(outdir, "subdivision.json", out.dump(2) + "\n");
  out["files"] = {outdir + "/tropical.svg", outdir + "/subdivision.json"};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_patchwork(const std::string& input, size_t sweep, uint64_t seed) {
  SignedSupport s = load_support(input);
  adisc::tropical::PatchworkReport rep = adisc::tropical::patchwork_report(s, sweep, seed);
  Json out;
  out["schema"] = kSchema;
  out["sweep"] = rep.sweep;
  out["seed"] = rep.seed;
  out["retries"] = rep.retries;
  out["signatures"] = signatures_json(rep);
  out["any_bounded"] = rep.any_bounded();
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_classify5(const std::string& input) {
  SignedSupport s = load_support(input);
  adisc::pentanomial::Classification c = adisc::pentanomial::classify(s);
  Json out;
  out["schema"] = kSchema;
  out.update(classification_json(c));
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_cusps(const std::string& mu_list, const std::string& outdir) {
  QVec mus = parse_rat_list(mu_list);
  adisc::pentanomial::CuspFamily fam = adisc::pentanomial::cusp_family(mus);
  Json out;
  out["schema"] = kSchema;
  Json rows = Json::array();
  for (size_t i = 0; i < fam.gale.b.rows(); ++i)
    rows.push_back({fam.gale.b.at(i, 0).to_string(), fam.gale.b.at(i, 1).to_string()});
  out["B"] = rows;
  out["eps"] = fam.eps;
  adisc::discriminant::CriticalPoints cps =
      adisc::discriminant::critical_points(fam.gale, fam.eps);
  out["critical_points"] = critical_points_json(cps);
  adisc::discriminant::DiscriminantCurve curve =
      adisc::discriminant::sample_curve(fam.gale, fam.eps);
  write_file(outdir, "cusps.svg", curve_svg(curve));
  out["files"] = {outdir + "/cusps.svg"};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_region(const std::string& x1s, const std::string& y1s, size_t grid,
               const std::string& outdir) {
  Rat x1 = Rat::parse(x1s), y1 = Rat::parse(y1s);
  adisc::pentanomial::RegionScan scan = adisc::pentanomial::region_scan(x1, y1, grid);
  std::string csv = "x2,y2,feasible\n";
  for (size_t iy = 0; iy < scan.ys.size(); ++iy)
    for (size_t ix = 0; ix < scan.xs.size(); ++ix)
      csv += scan.xs[ix].to_string() + "," + scan.ys[iy].to_string() + "," +
             (scan.feasible[iy][ix] ? "1" : "0") + "\n";
  write_file(outdir, "region.csv", csv);
  adisc::svg::Canvas canvas({-0.2, -2.2, 1.2, 1.2});
  canvas.axes();
  double cw = scan.xs.size() > 1 ? (scan.xs[1] - scan.xs[0]).to_double() : 0.01;
  double ch = scan.ys.size() > 1 ? (scan.ys[1] - scan.ys[0]).to_double() : 0.01;
  for (size_t iy = 0; iy < scan.ys.size(); ++iy)
    for (size_t ix = 0; ix < scan.xs.size(); ++ix) {
      if (!scan.feasible[iy][ix]) continue;
      double x = scan.xs[ix].to_double(), y = scan.ys[iy].to_double();
      canvas.cell({x - cw / 2, y - ch / 2}, {x + cw / 2, y + ch / 2}, "#7799ee");
    }
  canvas.polyline({{0, 0}, {1, 0}, {0, 1}, {0, 0}}, "#c02020", 1.5);
  canvas.circle({x1.to_double(), y1.to_double()}, 4, "#2040c0");
  write_file(outdir, "region.svg", canvas.str());
  Json out;
  out["schema"] = kSchema;
  out["grid"] = grid;
  out["feasible_count"] = scan.feasible_count;
  out["files"] = {outdir + "/region.csv", outdir + "/region.svg"};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_zeroset(const std::string& input, const std::string& coeffs, const std::string& window,
                size_t resolution, const std::string& outdir) {
  SignedSupport s = load_support(input);
  std::vector<double> c = parse_double_list(coeffs);
  adisc::zeroset::EvalContext ctx = adisc::zeroset::EvalContext::from(s, c);
  std::optional<std::array<double, 4>> win;
  if (window != "auto") {
    std::vector<double> w = parse_double_list(window);
    if (w.size() != 4) throw Error(Errc::InvalidInput, "--window needs x0,y0,x1,y1 or auto");
    win = {w[0], w[1], w[2], w[3]};
  }
  adisc::zeroset::ZeroSetReport rep = adisc::zeroset::zero_set_2d(ctx, win, resolution);
  std::string csv = "polyline,x,y\n";
  for (size_t i = 0; i < rep.polylines.size(); ++i)
    for (const auto& p : rep.polylines[i])
      csv += std::to_string(i) + "," + fmt(p[0]) + "," + fmt(p[1]) + "\n";
  write_file(outdir, "zeroset.csv", csv);
  adisc::svg::Canvas canvas(rep.window);
  canvas.axes();
  for (const auto& pl : rep.polylines) canvas.polyline(pl, "#1f4e9c", 1.5);
  write_file(outdir, "zeroset.svg", canvas.str());
  Json out;
  out["schema"] = kSchema;
  out["components"] = rep.components;
  out["bounded"] = rep.bounded;
  out["resolution"] = rep.resolution;
  out["window"] = {fmt(rep.window[0]), fmt(rep.window[1]), fmt(rep.window[2]),
                   fmt(rep.window[3])};
  out["files"] = {outdir + "/zeroset.csv", outdir + "/zeroset.svg"};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_analyze(const std::string& input, size_t resolution, size_t sweep, uint64_t seed) {
  SignedSupport s = load_support(input);
  Json out;
  out["schema"] = kSchema;
  out["support"] = adisc::io::support_to_json(s);

  adisc::separation::StiemkeResult st = adisc::separation::stiemke(s);
  Json sep;
  sep["separable"] = st.separable();
  sep["trivially_separable"] = st.trivially_separable;
  sep["nontrivial"] = st.hyperplane ? hyperplane_json(*st.hyperplane) : Json(nullptr);
  auto vs = adisc::separation::has_very_strict_separating_hyperplane(s);
  sep["very_strict"] = vs.has_value();
  if (s.n <= 3)
    sep["all_faces_separable"] = adisc::separation::all_faces_separable(s).all_separable;
  out["separation"] = sep;

  adisc::AhatMatrix ahat = adisc::build_ahat(s);
  out["n"] = s.n;
  out["codimension"] = ahat.codim;

  if (ahat.full_dimensional() && ahat.codim == 2) {
    DiscriminantPipeline p = run_discriminant(s);
    Json disc;
    disc["flipped_signs"] = p.flipped;
    disc["empty"] = p.domain.empty();
    Json dom = Json::array();
    for (const auto& iv : p.domain.intervals) dom.push_back(interval_json(iv));
    disc["domain"] = dom;
    disc["critical_points"] =
        p.crit.qb_is_zero ? Json(nullptr) : Json(p.crit.points.size());
    out["discriminant"] = disc;
    if (!p.domain.empty()) {
      adisc::discriminant::DiscriminantCurve curve =
          adisc::discriminant::sample_curve(p.gale, p.oriented.signs);
      adisc::discriminant::ChamberReport rep =
          adisc::discriminant::chamber_count(curve, resolution);
      out["chambers"] = {{"total", rep.total}, {"bounded", rep.bounded}};
    } else {
      out["chambers"] = {{"total", 1}, {"bounded", 0}};
    }
  }
  if (s.n == 2) {
    adisc::tropical::PatchworkReport rep = adisc::tropical::patchwork_report(s, sweep, seed);
    Json pw;
    pw["sweep"] = rep.sweep;
    pw["seed"] = rep.seed;
    pw["signatures"] = signatures_json(rep);
    pw["any_bounded"] = rep.any_bounded();
    out["patchwork"] = pw;
  }
  if (s.n == 2 && s.count() == 5) {
    out["classifier"] = classification_json(adisc::pentanomial::classify(s));
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signed supports: separation, discriminants, tropical curves, classification"};
  app.require_subcommand(1);

  std::string input, outdir = "out", lift, mu_list = "5,6,7,8", coeffs, window = "auto";
  std::string x1 = "-0.1", y1 = "0.3";
  size_t resolution = 1024, zres = 256, sweep = 100, grid = 400;
  uint64_t seed = 0;
  double step = 0.02;
  std::string dwindow;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "support JSON file")->required();
  };

  CLI::App* sep = app.add_subcommand("separate", "separating-hyperplane report");
  add_input(sep);

  CLI::App* disc = app.add_subcommand("discriminant", "sample the signed reduced A-discriminant");
  add_input(disc);
  disc->add_option("--out", outdir, "output directory");
  disc->add_option("--quality-step", step, "target sample spacing");
  disc->add_option("--window", dwindow, "x0,y0,x1,y1 sampling window override");

  CLI::App* cham = app.add_subcommand("chambers", "chamber decomposition of the complement");
  add_input(cham);
  cham->add_option("--resolution", resolution, "flood-fill grid resolution");
  cham->add_option("--quality-step", step, "target sample spacing");
  cham->add_option("--window", dwindow, "x0,y0,x1,y1 sampling window override");

  CLI::App* trop = app.add_subcommand("tropical", "regular subdivision and tropical curve");
  add_input(trop);
  trop->add_option("--lift", lift, "comma-separated rational lifting values")->required();
  trop->add_option("--out", outdir, "output directory");

  CLI::App* pw = app.add_subcommand("patchwork", "signed tropical signature sweep");
  add_input(pw);
  pw->add_option("--sweep", sweep, "number of random liftings");
  pw->add_option("--seed", seed, "sweep seed");

  CLI::App* cls = app.add_subcommand("classify5", "bivariate 5-nomial classifier");
  add_input(cls);

  CLI::App* cusps = app.add_subcommand("cusps", "n-cusp family from positive parameters");
  cusps->add_option("--mu", mu_list, "comma-separated distinct positive rationals != 1");
  cusps->add_option("--out", outdir, "output directory");

  CLI::App* region = app.add_subcommand("region", "two-critical-point region scan");
  region->add_option("--x1", x1, "first negative x coordinate");
  region->add_option("--y1", y1, "first negative y coordinate");
  region->add_option("--grid", grid, "grid resolution");
  region->add_option("--out", outdir, "output directory");

  CLI::App* zs = app.add_subcommand("zeroset", "marching-squares zero set");
  add_input(zs);
  zs->add_option("--coeffs", coeffs, "comma-separated coefficients")->required();
  zs->add_option("--window", window, "auto or x0,y0,x1,y1");
  zs->add_option("--resolution", zres, "marching-squares resolution");
  zs->add_option("--out", outdir, "output directory");

  CLI::App* ana = app.add_subcommand("analyze", "full pipeline report");
  add_input(ana);
  ana->add_option("--resolution", resolution, "chamber grid resolution");
  ana->add_option("--sweep", sweep, "patchwork sweep size");
  ana->add_option("--seed", seed, "sweep seed");

  CLI11_PARSE(app, argc, argv);

  try {
    std::vector<double> dwin;
    if (!dwindow.empty()) dwin = parse_double_list(dwindow);
    if (sep->parsed()) return cmd_separate(input);
    if (disc->parsed()) return cmd_discriminant(input, outdir, step, dwin);
    if (cham->parsed()) return cmd_chambers(input, resolution, step, dwin);
    if (trop->parsed()) return cmd_tropical(input, lift, outdir);
    if (pw->parsed()) return cmd_patchwork(input, sweep, seed);
    if (cls->parsed()) return cmd_classify5(input);
    if (cusps->parsed()) return cmd_cusps(mu_list, outdir);
    if (region->parsed()) return cmd_region(x1, y1, grid, outdir);
    if (zs->parsed()) return cmd_zeroset(input, coeffs, window, zres, outdir);
    if (ana->parsed()) return cmd_analyze(input, resolution, sweep, seed);
  } catch (const Error& e) {
    Json err;
    err["error"] = {{"code", adisc::errc_name(e.code())}, {"message", e.what()}};
    std::cerr << err.dump(2) << "\n";
    return e.code() == Errc::ResolutionTooCoarse ? 3 : 2;
  } catch (const std::exception& e) {
    Json err;
    err["error"] = {{"code", "Unexpected"}, {"message", e.what()}};
    std::cerr << err.dump(2) << "\n";
    return 2;
  }
  return 0;
}
