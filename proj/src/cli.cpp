#include "polyft/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <iostream>
#include <sstream>

#include "polyft/builtin.hpp"
#include "polyft/io.hpp"
#include "polyft/svg.hpp"

namespace polyft {

namespace {

struct Options {
  std::string ball;
  std::string sites;
  std::string scene;
  std::string out;
  std::string svg;
  std::string point;
  std::string criterion = "general";
  std::string filter = "general";
  std::string case_name;
  int n = -1;
  std::optional<double> tolerance;
  double h = 0.01;
  int levels = 3;
  long budget = 2'000'000;
  bool all = false;
  bool cones = false;
};

Json read_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot read scene file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  const Json j = parse_json(ss.str());
  if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "scene must be a JSON object");
  return j;
}

double parse_tolerance(const std::string& text, const std::string& origin) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0' || !std::isfinite(v) || v <= 0.0) {
    throw Error(ErrorCode::InvalidInput, origin + " must be a positive number");
  }
  return v;
}

class Context {
 public:
  explicit Context(const Options& o) : o_(o) {
    if (!o.scene.empty()) scene_ = read_scene(o.scene);
    tol_ = 1e-9;
    if (scene_.contains("tolerance")) {
      if (!scene_["tolerance"].is_number() || !(scene_["tolerance"].get<double>() > 0.0)) {
        throw Error(ErrorCode::InvalidInput, "scene tolerance must be a positive number");
      }
      tol_ = scene_["tolerance"].get<double>();
    }
    if (const char* env = std::getenv("FT_TOLERANCE"); env && *env) tol_ = parse_tolerance(env, "FT_TOLERANCE");
    if (o.tolerance) {
      if (!(*o.tolerance > 0.0) || !std::isfinite(*o.tolerance)) {
        throw Error(ErrorCode::InvalidInput, "--tolerance must be a positive number");
      }
      tol_ = *o.tolerance;
    }
  }

  std::string ball_name() const {
    if (!o_.ball.empty()) return o_.ball;
    if (scene_.contains("ball") && scene_["ball"].is_string()) return scene_["ball"].get<std::string>();
    return scene_.contains("ball") ? "inline" : "";
  }

  PolytopeBall ball() const {
    if (!o_.ball.empty()) return builtin_ball(o_.ball, tol_);
    if (scene_.contains("ball")) return ball_from_json(scene_["ball"], tol_);
    throw Error(ErrorCode::InvalidInput, "no ball given (use --ball or a scene)");
  }

  Instance instance() const {
    Instance inst{ball(), {}};
    if (!o_.sites.empty()) {
      inst.sites = points_from_json(parse_json(o_.sites), inst.ball.dim());
    } else if (scene_.contains("sites")) {
      inst.sites = points_from_json(scene_["sites"], inst.ball.dim());
    } else {
      throw Error(ErrorCode::InvalidInput, "no sites given (use --sites or a scene)");
    }
    validate(inst);
    return inst;
  }

  int n() const {
    if (o_.n != -1) return o_.n;
    if (scene_.contains("n") && scene_["n"].is_number_integer()) return scene_["n"].get<int>();
    throw Error(ErrorCode::InvalidInput, "no n given (use --n or a scene)");
  }

  Vector point(int dim) const {
    if (!o_.point.empty()) return vector_from_json(parse_json(o_.point), dim);
    if (scene_.contains("point")) return vector_from_json(scene_["point"], dim);
    throw Error(ErrorCode::InvalidInput, "no point given (use --point or a scene)");
  }

  double tolerance() const { return tol_; }

 private:
  const Options& o_;
  Json scene_ = Json::object();
  double tol_;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidInput, "cannot write '" + path + "'");
  f << text;
}

void emit(const Options& o, const Json& j, std::ostream& out) {
  if (o.out.empty()) {
    out << dump(j);
  } else {
    write_text(o.out, dump(j));
  }
}

std::vector<Cone> cones_of(const Instance& inst, const FTSet& set) {
  std::vector<Cone> cones;
  if (!set.certificate || set.certificate->extension_mode) return cones;
  for (std::size_t i = 0; i < inst.sites.size(); ++i) {
    cones.push_back(cone(inst.ball, inst.sites[i], set.certificate->functionals[i]));
  }
  return cones;
}

SpanFilter parse_filter(const std::string& s) {
  if (s == "none") return SpanFilter::None;
  if (s == "general") return SpanFilter::General;
  if (s == "space3d") return SpanFilter::Space3d;
  if (s == "plane") return SpanFilter::Plane;
  throw Error(ErrorCode::InvalidInput, "unknown filter '" + s + "'");
}

int cmd_solve(const Options& o, std::ostream& out) {
  const Context ctx(o);
  const Instance inst = ctx.instance();
  const FTPoint p = find_ft_point(inst);
  const Verification v = verify_ft_point(inst, p.point);
  Json j;
  j["command"] = "solve";
  j["ball"] = ctx.ball_name();
  j["tolerance"] = ctx.tolerance();
  j["sites"] = to_json(inst.sites);
  j["point"] = to_json(p.point);
  j["value"] = round12(p.value);
  j["certified"] = v.certified();
  if (v.certificate) j["certificate"] = to_json(*v.certificate);
  emit(o, j, out);
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Context ctx(o);
  const Instance inst = ctx.instance();
  const Vector x = ctx.point(inst.ball.dim());
  Json j;
  j["command"] = "verify";
  j["ball"] = ctx.ball_name();
  j["tolerance"] = ctx.tolerance();
  j["sites"] = to_json(inst.sites);
  j["point"] = to_json(x);
  j["value"] = round12(objective(inst, x));
  j.update(to_json(verify_ft_point(inst, x)));
  emit(o, j, out);
  return 0;
}

int cmd_locus(const Options& o, std::ostream& out) {
  const Context ctx(o);
  const Instance inst = ctx.instance();
  const FTSet set = ft_locus(inst);
  Json j;
  j["command"] = "locus";
  j["ball"] = ctx.ball_name();
  j["tolerance"] = ctx.tolerance();
  j["sites"] = to_json(inst.sites);
  j["ft_set"] = to_json(set);
  if (!o.svg.empty()) {
    write_text(o.svg, render_svg(inst, &set, o.cones ? cones_of(inst, set) : std::vector<Cone>{}));
  }
  emit(o, j, out);
  return 0;
}

int cmd_audit(const Options& o, std::ostream& out) {
  const Context ctx(o);
  const PolytopeBall ball = ctx.ball();
  const int n = ctx.n();
  UniquenessReport r;
  if (o.criterion == "general") {
    r = uniqueness_audit(ball, n, ctx.ball_name());
  } else if (o.criterion == "plane") {
    r = plane_criterion_check(ball, n, ctx.ball_name());
  } else if (o.criterion == "space3d") {
    r = space3d_criterion_check(ball, n, ctx.ball_name());
  } else {
    throw Error(ErrorCode::InvalidInput, "unknown criterion '" + o.criterion + "'");
  }
  Json j;
  j["command"] = "audit";
  j["criterion"] = o.criterion;
  j.update(to_json(r));
  emit(o, j, out);
  return 0;
}

int cmd_consistent_sets(const Options& o, std::ostream& out) {
  const Context ctx(o);
  const PolytopeBall ball = ctx.ball();
  const int n = ctx.n();
  EnumerateOptions opt;
  opt.filter = parse_filter(o.filter);
  opt.use_symmetry = !o.all;
  opt.budget = o.budget;
  const auto sets = enumerate_consistent_sets(ball, n, opt);
  Json list = Json::array();
  for (const auto& s : sets) list.push_back(to_json(ball, s));
  Json j;
  j["command"] = "consistent-sets";
  j["ball"] = ctx.ball_name();
  j["n"] = n;
  j["filter"] = std::string(to_string(opt.filter));
  j["up_to_symmetry"] = opt.use_symmetry;
  j["count"] = sets.size();
  j["sets"] = list;
  emit(o, j, out);
  return 0;
}

Json case_json(const Options& o, const CaseReport& r) {
  Json j;
  j["command"] = "case";
  j.update(to_json(r));
  const FTSet* set = r.ft_set ? &*r.ft_set : nullptr;
  if (r.instance.ball.dim() == 2 && !r.instance.sites.empty()) {
    const std::string svg = render_svg(r.instance, set);
    j["svg"] = svg;
    if (!o.svg.empty()) write_text(o.svg, svg);
  } else if (!r.instance.sites.empty()) {
    j["vertex_dump"] = vertex_dump(r.instance, set);
  }
  return j;
}

int cmd_case(const Options& o, std::ostream& out) {
  const int n = o.n == -1 ? 3 : o.n;
  try {
    emit(o, case_json(o, reproduce_case(o.case_name, n)), out);
    return 0;
  } catch (const CaseFailure& f) {
    emit(o, case_json(o, f.report()), out);
    throw;
  }
}

int cmd_oracle_check(const Options& o, std::ostream& out) {
  const Context ctx(o);
  const Instance inst = ctx.instance();
  if (!(o.h > 0.0) || o.levels < 1) throw Error(ErrorCode::InvalidInput, "--spacing must be positive and --levels >= 1");
  const FTSet set = ft_locus(inst);
  const GridSpec grid = default_grid(inst, o.h, o.levels);
  Json j;
  j["command"] = "oracle-check";
  j["ball"] = ctx.ball_name();
  j["tolerance"] = ctx.tolerance();
  j["sites"] = to_json(inst.sites);
  j["ft_set"] = to_json(set);
  j["grid"] = Json{{"lo", to_json(grid.lo)}, {"hi", to_json(grid.hi)}, {"h", grid.h}, {"levels", grid.levels}};
  j["confirmation"] = to_json(confirm_ft_set(inst, set, grid));
  if (set.affine_dim >= 1) {
    const auto ev = confirm_non_unique(inst, grid);
    j["non_unique_evidence"] = ev ? to_json(*ev) : Json(nullptr);
  }
  emit(o, j, out);
  return 0;
}

int exit_code(ErrorCode code) {
  if (code == ErrorCode::CaseFailed) return 3;
  return is_numerical_failure(code) ? 2 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Fermat-Torricelli points in polyhedral normed spaces"};
  app.require_subcommand(1);

  auto scene_opts = [&](CLI::App* sub) {
    sub->add_option("--ball", o.ball, "builtin ball name");
    sub->add_option("--sites", o.sites, "sites as a JSON array of points");
    sub->add_option("--scene", o.scene, "scene JSON file");
    sub->add_option("--tolerance", o.tolerance, "epsilon (overrides FT_TOLERANCE)");
    sub->add_option("--out", o.out, "write the JSON result here instead of stdout");
  };

  CLI::App* solve = app.add_subcommand("solve", "one minimizer with its certificate");
  scene_opts(solve);
  CLI::App* verify = app.add_subcommand("verify", "check whether a point is a minimizer");
  scene_opts(verify);
  verify->add_option("--point", o.point, "candidate point as a JSON array");
  CLI::App* locus = app.add_subcommand("locus", "the full set of minimizers");
  scene_opts(locus);
  locus->add_option("--svg", o.svg, "render a planar scene");
  locus->add_flag("--cones", o.cones, "draw the cones in the SVG");
  CLI::App* audit = app.add_subcommand("audit", "uniqueness verdict for n points");
  scene_opts(audit);
  audit->add_option("--n", o.n, "number of points");
  audit->add_option("--criterion", o.criterion, "general | plane | space3d");
  CLI::App* sets = app.add_subcommand("consistent-sets", "enumerate consistent face sets");
  scene_opts(sets);
  sets->add_option("--n", o.n, "set size");
  sets->add_option("--filter", o.filter, "none | general | space3d | plane");
  sets->add_flag("--all", o.all, "no symmetry reduction");
  sets->add_option("--budget", o.budget, "maximum number of consistency LPs");
  CLI::App* cs = app.add_subcommand("case", "reproduce a worked case");
  cs->add_option("name", o.case_name, "case name")->required();
  cs->add_option("--n", o.n, "number of points (prism cases)");
  cs->add_option("--svg", o.svg, "write the SVG of a planar case");
  cs->add_option("--out", o.out, "write the JSON result here instead of stdout");
  CLI::App* oracle = app.add_subcommand("oracle-check", "brute-force confirmation of the solution set");
  scene_opts(oracle);
  oracle->add_option("--spacing", o.h, "finest grid spacing h");
  oracle->add_option("--levels", o.levels, "refinement levels");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (*solve) return cmd_solve(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*locus) return cmd_locus(o, out);
    if (*audit) return cmd_audit(o, out);
    if (*sets) return cmd_consistent_sets(o, out);
    if (*cs) return cmd_case(o, out);
    if (*oracle) return cmd_oracle_check(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace polyft
