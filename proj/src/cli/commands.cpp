#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "flopkit/cli/cli.hpp"
#include "flopkit/cli/report.hpp"
#include "flopkit/cli/reproduce.hpp"
#include "flopkit/detgeo/lines.hpp"
#include "flopkit/detgeo/projection.hpp"
#include "flopkit/fourfold/fourfold.hpp"
#include "flopkit/lattice/chamber.hpp"
#include "flopkit/lattice/represent.hpp"
#include "flopkit/lattice/svg.hpp"
#include "flopkit/schubert/schubert.hpp"
#include "flopkit/segre3/segre3.hpp"
#include "flopkit/surf27/surf27.hpp"

namespace flopkit {

namespace {

// Bad argument values found after parsing; reported like a parse error.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::uint64_t seed = 1;
  int precision = kDefaultPrecisionBits;
  bool json = false;
  bool timings = false;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  app->add_option("--precision", c.precision, "Working precision in bits")
      ->check(CLI::Range(64, 65536))
      ->capture_default_str();
  app->add_flag("--json", c.json, "Print the report as JSON");
  app->add_flag("--timings", c.timings, "Include timings in the JSON report");
}

RunReport start(const std::string& command, const Common& c) {
  RunReport r;
  r.command = command;
  r.seed = c.seed;
  r.precision = c.precision;
  return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) out.push_back(item);
  return out;
}

Integer parse_integer(const std::string& s) {
  try {
    return Integer(s);
  } catch (const std::invalid_argument&) {
    throw UsageError("not an integer: '" + s + "'");
  }
}

std::vector<Integer> parse_integers(const std::string& s, std::size_t count) {
  const auto parts = split(s, ',');
  if (parts.size() != count)
    throw UsageError("expected " + std::to_string(count) + " comma-separated integers, got '" + s + "'");
  std::vector<Integer> out;
  for (const auto& p : parts) out.push_back(parse_integer(p));
  return out;
}

RatVector to_ratvector(const std::vector<Integer>& v) {
  RatVector out;
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

Json num(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json class_json(const LatticeClass& v) { return Json::array({num(v.x), num(v.y)}); }

void write_file(const std::string& path, const std::string& content, RunReport& r) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << content;
  r.artifacts.push_back(path);
}

Json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  try {
    return Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

DeterminantalInstance load_instance(const std::string& path, std::uint64_t seed) {
  if (path.empty()) return make_instance(seed);
  return instance_from_json(read_json_file(path));
}

// ---------------------------------------------------------------- lattice

RunReport lattice_orbit(const Common& c, const std::string& kind_name, int count) {
  RunReport r = start("lattice orbit", c);
  const OrbitKind kind = parse_orbit_kind(kind_name);
  const auto classes = orbit_classes(kind, count);
  const LatticeClass g(1, 0);
  Json arr = Json::array(), pairings = Json::array();
  for (int i = 0; i < count; ++i) {
    arr.push_back(class_json(classes[i]));
    pairings.push_back(num(eval_form(classes[i], g)));
    r.text.push_back(to_string(kind) + "_" + std::to_string(i + 1) + " = " + classes[i].str());
  }
  r.data["kind"] = to_string(kind);
  r.data["classes"] = arr;
  r.data["g_pairings"] = pairings;
  if (kind == OrbitKind::rho || kind == OrbitKind::rho_dual) {
    bool ok = true;
    for (const auto& v : classes) ok = ok && self_pairing(v) == -10 && divisibility(v) == 2;
    r.check("(-10)-classes of divisibility 2", ok);
  } else {
    const auto walls = orbit_classes(kind == OrbitKind::alpha ? OrbitKind::rho : OrbitKind::rho_dual, count);
    bool ok = true;
    for (int i = 0; i < count; ++i) ok = ok && eval_form(classes[i], walls[i]) == 0;
    r.check("orthogonal to the matching (-10)-classes", ok);
  }
  return r;
}

RunReport lattice_chamber(const Common& c, const std::string& cls) {
  RunReport r = start("lattice chamber", c);
  const auto xy = parse_integers(cls, 2);
  const LatticeClass v(xy[0], xy[1]);
  const ChamberLocation loc = chamber_locate(v);
  Json word = Json::array();
  for (Reflection w : loc.word) word.push_back(w == Reflection::R1 ? "R1" : "R2");
  r.data["class"] = class_json(v);
  r.data["chamber"] = loc.k;
  r.data["model"] = model_label(loc.k);
  r.data["wall_neighbor"] = loc.wall_neighbor ? Json(*loc.wall_neighbor) : Json(nullptr);
  r.data["coordinates"] = {loc.coord_first.get_str(), loc.coord_second.get_str()};
  r.data["word"] = word;
  r.data["base_chamber"] = loc.base_chamber;
  r.text.push_back(v.str() + " lies in chamber " + std::to_string(loc.k) + " (" + model_label(loc.k) + ")");
  if (loc.wall_neighbor) r.text.push_back("on the wall shared with chamber " + std::to_string(*loc.wall_neighbor));
  r.check("nef for its model", nef_test(v, loc.k));
  r.check("word maps it to the base chamber", chamber_locate(apply_word(loc.word, v)).k == loc.base_chamber);
  return r;
}

RunReport lattice_represent(const Common& c, const std::string& n_str, long bound) {
  RunReport r = start("lattice represent", c);
  const Integer n = parse_integer(n_str);
  const RepresentResult res = represents(n, bound);
  r.data["n"] = num(n);
  r.data["status"] = to_string(res.status);
  if (res.witness) {
    r.data["witness"] = class_json(*res.witness);
    r.data["divisibility"] = num(divisibility(*res.witness));
    r.text.push_back("Q(" + res.witness->str() + ") = " + n.get_str());
    r.check("witness has the requested square", self_pairing(*res.witness) == n);
  }
  if (res.certificate) {
    r.data["certificate"] = {{"obstruction", res.certificate->obstruction},
                             {"modulus", res.certificate->modulus},
                             {"detail", res.certificate->detail},
                             {"searched_bound", num(res.certificate->searched_bound)}};
    r.text.push_back("not represented: " + res.certificate->detail);
  }
  r.check("conclusive", res.status != RepresentStatus::inconclusive, to_string(res.status));
  return r;
}

RunReport lattice_transfer(const Common& c, const std::string& gram) {
  RunReport r = start("lattice transfer", c);
  const auto e = parse_integers(gram, 4);
  if (e[1] != e[2]) throw UsageError("the Gram matrix must be symmetric");
  const GramContext k({{{e[0], e[1]}, {e[2], e[3]}}});
  const TransferResult t = transfer_K_to_J(k);
  Json rows = Json::array();
  for (int i = 0; i < 2; ++i) rows.push_back({num(t.gram(i, 0)), num(t.gram(i, 1))});
  r.data["J"] = rows;
  r.data["det"] = num(t.gram.det());
  r.data["degenerate"] = t.degenerate;
  r.data["special_discriminant"] = special_discriminant(t.gram.det());
  r.text.push_back("J = [[" + t.gram(0, 0).get_str() + "," + t.gram(0, 1).get_str() + "],[" + t.gram(1, 0).get_str() +
                   "," + t.gram(1, 1).get_str() + "]], det " + t.gram.det().get_str());
  r.check("det J = -2 det K", t.gram.det() == -2 * k.det());
  return r;
}

RunReport lattice_svg(const Common& c, int k, const std::string& out, std::ostream& raw, bool& raw_written) {
  RunReport r = start("lattice svg", c);
  if (k < 1) throw UsageError("--range must be at least 1");
  const std::string svg = emit_cone_svg(k);
  r.data["range"] = k;
  r.check("well-formed document", svg.rfind("<svg", 0) == 0 || svg.rfind("<?xml", 0) == 0);
  if (!out.empty()) {
    write_file(out, svg, r);
  } else if (c.json) {
    r.data["svg"] = svg;
  } else {
    raw << svg;
    raw_written = true;
  }
  return r;
}

// ---------------------------------------------------------------- instance

void report_instance(const InstanceReport& rep, RunReport& r) {
  r.check("dimensions 4 + 5", rep.dimensions);
  r.check("trace-orthogonal complement", rep.orthogonal);
  r.check("cubic is the determinant", rep.cubic_matches);
  r.check("six rank-1 nodes on Y, singular there", rep.nodes_rank_one && rep.nodes_on_y && rep.nodes_singular);
  r.check("ordinary double points", rep.nodes_odp);
  r.check("linear general position", rep.general_position);
  r.check("S smooth (Macaulay certificate nonzero)", rep.s_smooth);
}

RunReport instance_new(const Common& c, const std::string& out) {
  RunReport r = start("instance new", c);
  const DeterminantalInstance inst = make_instance(c.seed);
  report_instance(check_instance(inst), r);
  const Json j = to_json(inst);
  if (!out.empty()) write_file(out, j.dump(2) + "\n", r);
  r.data["instance"] = j;
  r.text.push_back("instance for seed " + std::to_string(c.seed) + " after " + std::to_string(inst.attempts) +
                   " attempt(s)");
  return r;
}

RunReport instance_check(const Common& c, const std::string& in) {
  RunReport r = start("instance check", c);
  const DeterminantalInstance inst = load_instance(in, c.seed);
  const InstanceReport rep = check_instance(inst);
  report_instance(rep, r);
  r.data["seed"] = inst.seed;
  r.data["certificate_sign"] = sgn(rep.certificate);
  return r;
}

RunReport instance_lines(const Common& c, const std::string& in, int points) {
  RunReport r = start("instance lines", c);
  if (points < 1) throw UsageError("--points must be positive");
  const DeterminantalInstance inst = load_instance(in, c.seed);
  std::mt19937_64 rng(c.seed);
  const Real tol("1e-40"), rank_tol("1e-30");
  Json pts = Json::array();
  int split_ok = 0, residual_ok = 0, total = 0;
  for (int k = 0; k < points; ++k) {
    const RatVector y = random_y_point(inst, rng);
    const auto res = lines_through_point(inst.cubicY, y, {}, c.precision);
    Json lines = Json::array();
    int p = 0, pd = 0, s = 0;
    for (const auto& l : res.lines) {
      const LineClass cl = l.exact ? classify_line(inst, *l.exact) : classify_line(inst, l.line, rank_tol);
      p += cl.family == LineFamily::P;
      pd += cl.family == LineFamily::Pdual;
      s += cl.family == LineFamily::S;
      residual_ok += l.eliminant_residual < tol && l.direction_residual < tol;
      ++total;
      lines.push_back({{"family", to_string(cl.family)},
                       {"exact", l.exact.has_value()},
                       {"eliminant_residual", sci(l.eliminant_residual)},
                       {"direction_residual", sci(l.direction_residual)}});
    }
    split_ok += res.lines.size() == 6 && p == 1 && pd == 1 && s == 4;
    r.text.push_back("point " + std::to_string(k + 1) + ": " + std::to_string(p) + " P, " + std::to_string(pd) +
                     " P-dual, " + std::to_string(s) + " S");
    pts.push_back({{"y", to_json(y)}, {"lines", lines}});
  }
  r.data["points"] = pts;
  r.check("family split 1 + 1 + 4", split_ok == points, std::to_string(split_ok) + "/" + std::to_string(points));
  r.check("residuals below 1e-40", residual_ok == total && total == 6 * points,
          std::to_string(residual_ok) + "/" + std::to_string(total));
  return r;
}

RunReport instance_project(const Common& c, const std::string& in, int node) {
  RunReport r = start("instance project", c);
  const DeterminantalInstance inst = load_instance(in, c.seed);
  std::vector<int> which;
  if (node > 0) {
    if (node > 6) throw UsageError("--node must be in 1..6");
    which.push_back(node - 1);
  } else {
    which = {0, 1, 2, 3, 4, 5};
  }
  Json arr = Json::array();
  for (int i : which) {
    const NodeProjection p = project_from_node(inst, i);
    const std::string tag = "node " + std::to_string(i + 1);
    r.check(tag + ": images on C6 and singular there", p.images_on_curve && p.images_singular);
    r.check(tag + ": tangent cone of rank 4", p.quadric_rank == 4);
    r.check(tag + ": images distinct, on no common ruling, no four coplanar",
            p.distinct && p.no_common_ruling && p.no_four_coplanar);
    Json images = Json::array();
    for (const auto& v : p.images) images.push_back(to_json(v));
    arr.push_back({{"node", i + 1}, {"A2", to_json(p.a2)}, {"A3", to_json(p.a3)}, {"images", images}});
  }
  r.data["projections"] = arr;
  return r;
}

// ---------------------------------------------------------------- surf27, segre, schubert

RunReport surf27_enumerate(const Common& c) {
  RunReport r = start("surf27 enumerate", c);
  const auto lines = line_classes();
  const auto sextuples = disjoint_sextuples();
  const auto ds = double_sixes();
  Json jl = Json::array(), js = Json::array(), jd = Json::array();
  for (const auto& l : lines) jl.push_back(l.str());
  auto sextuple_json = [](const Sextuple& s) {
    Json a = Json::array();
    for (const auto& l : s) a.push_back(l.str());
    return a;
  };
  for (const auto& s : sextuples) js.push_back(sextuple_json(s));
  for (const auto& d : ds) jd.push_back({{"a", sextuple_json(d.a)}, {"b", sextuple_json(d.b)}});
  r.data["lines"] = jl;
  r.data["sextuples"] = js;
  r.data["double_sixes"] = jd;
  r.check("27 line classes", lines.size() == 27, std::to_string(lines.size()));
  r.check("72 disjoint sextuples", sextuples.size() == 72, std::to_string(sextuples.size()));
  r.check("36 double-sixes", ds.size() == 36, std::to_string(ds.size()));
  bool inv = true;
  for (const auto& s : sextuples) {
    const PicIsometry t = double_six_involution(s);
    inv = inv && t.preserves_form() && (t * t).is_identity() && t(canonical_class()) == canonical_class();
  }
  r.check("involutions are order-2 isometries fixing K", inv);
  r.text.push_back(std::to_string(lines.size()) + " lines, " + std::to_string(sextuples.size()) + " sextuples, " +
                   std::to_string(ds.size()) + " double-sixes");
  return r;
}

RunReport segre_identity(const Common& c, const std::string& variant) {
  RunReport r = start("segre identity", c);
  std::vector<SegreVariant> which;
  if (variant == "both") {
    which = {SegreVariant::printed, SegreVariant::cyclic};
  } else {
    try {
      which = {parse_segre_variant(variant)};
    } catch (const PreconditionError& e) {
      throw UsageError(e.what());
    }
  }
  int holding = 0;
  for (SegreVariant v : which) {
    const SegreForms f = segre_forms(v);
    const bool holds = f.relation_holds();
    bool doubled = true;
    for (const auto& y : f.y) doubled = doubled && double_at_points(y, standard_points());
    holding += holds;
    Json forms = Json::array();
    for (const auto& y : f.y) forms.push_back(to_json(y));
    r.data[to_string(v)] = {{"relation_holds", holds}, {"double_at_points", doubled}, {"forms", forms}};
    r.text.push_back(to_string(v) + ": quintic relation " + (holds ? "holds" : "fails") +
                     (doubled ? ", double at all six points" : ", not double at all six points"));
    if (which.size() == 1) {
      r.check("quintic relation holds", holds);
      r.check("double at the six standard points", doubled);
    }
  }
  if (which.size() == 2) r.check("exactly one variant satisfies the relation", holding == 1);
  return r;
}

RunReport segre_jmap(const Common& c, const std::string& in, int samples) {
  RunReport r = start("segre jmap", c);
  if (samples < 1) throw UsageError("--samples must be positive");
  const DeterminantalInstance inst = load_instance(in, c.seed);
  std::mt19937_64 rng(c.seed);
  int agree = 0, accepted = 0, rejected = 0;
  Json pts = Json::array();
  while (accepted < samples && rejected < 100 * samples) {
    const RatVector s = random_s_point(inst, rng);
    try {
      s_open_point(inst, s);
    } catch (const PreconditionError&) {
      ++rejected;
      continue;
    }
    ++accepted;
    const bool ok = jmap_agree(inst, s);
    agree += ok;
    pts.push_back({{"s", to_json(s)}, {"agree", ok}, {"stability", to_string(semistable_6tuple(jmap(inst, s)))}});
  }
  r.data["samples"] = pts;
  r.data["rejected_on_lines"] = rejected;
  r.check("j(s) and j-dual(s) agree", agree == samples, std::to_string(agree) + "/" + std::to_string(samples));
  return r;
}

RunReport schubert_deg_fano(const Common& c, int ambient) {
  RunReport r = start("schubert deg-fano", c);
  if (ambient != 4 && ambient != 5) throw UsageError("--ambient must be 4 or 5");
  const SchubertCycle c4 = chern_sym3(ambient);
  r.text.push_back("c4(Sym^3 S*) = 9 sigma_11 (2 sigma_1^2 + sigma_11) = " + c4.str());
  SchubertCycle top = c4;
  if (ambient == 5) {
    const auto s1 = SchubertCycle::sigma(5, 1);
    top = c4 * s1 * s1;
    r.text.push_back("c4(Sym^3 S*) sigma_1^2 = " + top.str());
  }
  const Integer deg = integrate(top);
  r.text.push_back(deg.get_str());
  r.data["ambient"] = ambient;
  r.data["chern_class"] = c4.str();
  r.data["top_class"] = top.str();
  r.data["degree"] = num(deg);
  r.check(ambient == 4 ? "27 lines on a cubic surface" : "degree of the Fano surface is 45",
          deg == (ambient == 4 ? 27 : 45), deg.get_str());
  return r;
}

// ---------------------------------------------------------------- fourfold

CubicFourfold fourfold_for(const Common& c, const std::string& in) {
  FourfoldOptions fo;
  fo.bits = c.precision;
  return extend_to_fourfold(load_instance(in, c.seed), c.seed, fo);
}

RunReport fourfold_extend(const Common& c, const std::string& in, const std::string& out) {
  RunReport r = start("fourfold extend", c);
  const CubicFourfold x = fourfold_for(c, in);
  const Json j = to_json(x);
  if (!out.empty()) write_file(out, j.dump(2) + "\n", r);
  r.data["fourfold"] = j;
  const MPoly restricted = restrict_to_subspace(x.cubic, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
                                                          {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}});
  r.check("X restricts to Y on x5 = 0", restricted == x.instance.cubicY);
  r.check("no singular point among the spot checks", x.spot_checks > 0, std::to_string(x.spot_checks) + " points");
  r.text.push_back("quadric accepted after " + std::to_string(x.attempts) + " attempt(s)");
  return r;
}

RunReport fourfold_iota(const Common& c, const std::string& in, std::uint64_t line_seed, bool involution,
                        const std::string& scroll) {
  RunReport r = start("fourfold iota", c);
  std::optional<RatVector> v;
  if (!scroll.empty()) v = to_ratvector(parse_integers(scroll, 3));
  if (v && is_zero_vector(*v)) throw UsageError("--check-scroll needs a nonzero vector");
  const CubicFourfold x = fourfold_for(c, in);
  const FourfoldLine m = sample_line(x, line_seed, c.precision);
  const IotaResult res = iota_detail(x, m);
  r.data["line"] = to_json(m);
  r.data["image"] = to_json(res.image);
  r.data["remainder"] = sci(res.remainder);
  r.check("image lies on X", res.image.residual < Real("1e-30"), sci(res.image.residual));
  if (involution) {
    const Real d = line_distance(iota(x, res.image).line, m.line);
    r.data["involution_distance"] = sci(d);
    r.check("iota(iota(m)) = m", d < Real("1e-30"), sci(d));
  }
  if (v) {
    const IncidenceReport inc = scroll_incidence_invariance(x, m, *v);
    r.data["scroll"] = {{"v", to_json(*v)},
                        {"m_meets", inc.m_meets},
                        {"image_meets", inc.image_meets},
                        {"marginal", inc.marginal}};
    r.check("scroll incidence preserved", inc.invariant(),
            std::string(inc.m_meets ? "both meet" : "neither meets") + (inc.marginal ? ", marginal" : ""));
  }
  return r;
}

// ---------------------------------------------------------------- reproduce

RunReport reproduce_cmd(const Common& c, bool all, const std::vector<int>& criteria, int instances,
                        const std::string& out) {
  if (!all && criteria.empty()) throw UsageError("reproduce needs --all or --criterion");
  ReproduceOptions o;
  o.seed = c.seed;
  o.bits = c.precision;
  o.instances = instances;
  if (!all) o.criteria = criteria;
  RunReport r = reproduce(o);
  r.command = all ? "reproduce --all" : "reproduce";
  if (!out.empty()) write_file(out, to_json(r, c.timings).dump(2) + "\n", r);
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"flopkit: computations around a determinantal cubic threefold and its flops", "flopkit"};
  app.require_subcommand(1);
  Common common;
  common.precision = default_precision_bits();
  std::function<RunReport()> action;
  std::ostringstream raw;  // commands with a non-report primary output
  bool raw_written = false;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* sc = parent->add_subcommand(name, help);
    add_common(sc, common);
    return sc;
  };

  // lattice
  CLI::App* lattice = app.add_subcommand("lattice", "Rank-2 lattice, (-10)-classes and chambers");
  lattice->require_subcommand(1);
  std::string kind = "rho";
  int count = 3;
  auto* orbit = leaf(lattice, "orbit", "List the first classes of an orbit");
  orbit->add_option("--kind", kind, "rho, rho_dual, alpha or alpha_dual")
      ->check(CLI::IsMember({"rho", "rho_dual", "alpha", "alpha_dual"}))
      ->capture_default_str();
  orbit->add_option("--count", count, "Number of classes")->check(CLI::Range(1, 10000))->capture_default_str();
  orbit->callback([&] { action = [&] { return lattice_orbit(common, kind, count); }; });

  std::string cls;
  auto* chamber = leaf(lattice, "chamber", "Locate a class in the chamber decomposition");
  chamber->add_option("--class", cls, "Coordinates x,y of x g + y tau")->required();
  chamber->callback([&] { action = [&] { return lattice_chamber(common, cls); }; });

  std::string n_str;
  long bound = kDefaultRepresentBound;
  auto* represent = leaf(lattice, "represent", "Represent an integer by the form, or certify that it cannot be");
  represent->add_option("--n", n_str, "Target value")->required();
  represent->add_option("--bound", bound, "Search bound")->check(CLI::PositiveNumber)->capture_default_str();
  represent->callback([&] { action = [&] { return lattice_represent(common, n_str, bound); }; });

  std::string gram = "3,3,3,7";
  auto* transfer = leaf(lattice, "transfer", "Transfer a Gram matrix on (h^2, T) to (g, tau)");
  transfer->add_option("--gram", gram, "Entries a,b,c,d of [[a,b],[c,d]]")->capture_default_str();
  transfer->callback([&] { action = [&] { return lattice_transfer(common, gram); }; });

  int range = 1;
  std::string svg_out;
  auto* svg = leaf(lattice, "svg", "Draw the chamber decomposition");
  svg->add_option("--range,-k", range, "Rays from -k to k")->capture_default_str();
  svg->add_option("--out", svg_out, "Write the SVG to this file");
  svg->callback([&] { action = [&] { return lattice_svg(common, range, svg_out, raw, raw_written); }; });

  // instance
  CLI::App* instance = app.add_subcommand("instance", "Determinantal cubic threefolds");
  instance->require_subcommand(1);
  std::string inst_out, inst_in;
  int points = 5, node = 0;
  auto* inew = leaf(instance, "new", "Generate and verify an instance");
  inew->add_option("--out", inst_out, "Write the instance JSON to this file");
  inew->callback([&] { action = [&] { return instance_new(common, inst_out); }; });
  auto* icheck = leaf(instance, "check", "Verify an instance");
  icheck->add_option("--in", inst_in, "Instance JSON (default: generate from --seed)");
  icheck->callback([&] { action = [&] { return instance_check(common, inst_in); }; });
  auto* ilines = leaf(instance, "lines", "Lines through random smooth points");
  ilines->add_option("--in", inst_in, "Instance JSON (default: generate from --seed)");
  ilines->add_option("--points", points, "Number of points")->capture_default_str();
  ilines->callback([&] { action = [&] { return instance_lines(common, inst_in, points); }; });
  auto* iproject = leaf(instance, "project", "Projection from the nodes");
  iproject->add_option("--in", inst_in, "Instance JSON (default: generate from --seed)");
  iproject->add_option("--node", node, "Node 1..6 (default: all)");
  iproject->callback([&] { action = [&] { return instance_project(common, inst_in, node); }; });

  // surf27
  CLI::App* surf = app.add_subcommand("surf27", "Lines on a cubic surface");
  surf->require_subcommand(1);
  std::string format = "text";
  auto* enumerate = leaf(surf, "enumerate", "Line classes, sextuples and double-sixes");
  enumerate->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  enumerate->callback([&] {
    if (format == "json") common.json = true;
    action = [&] { return surf27_enumerate(common); };
  });

  // segre
  CLI::App* segre = app.add_subcommand("segre", "Segre cubic and the j-map");
  segre->require_subcommand(1);
  std::string variant = "both";
  int samples = 5;
  auto* identity = leaf(segre, "identity", "Check the quintic relation among the Segre cubics");
  identity->add_option("--variant", variant, "printed, cyclic or both")->capture_default_str();
  identity->callback([&] { action = [&] { return segre_identity(common, variant); }; });
  auto* jm = leaf(segre, "jmap", "Compare j and j-dual at random points of S");
  jm->add_option("--instance", inst_in, "Instance JSON (default: generate from --seed)");
  jm->add_option("--samples", samples, "Number of points")->capture_default_str();
  jm->callback([&] { action = [&] { return segre_jmap(common, inst_in, samples); }; });

  // fourfold
  CLI::App* fourfold = app.add_subcommand("fourfold", "The cubic fourfold X and the involution iota");
  fourfold->require_subcommand(1);
  std::string ff_out, scroll;
  std::uint64_t line_seed = 1;
  bool check_involution = false;
  auto* extend = leaf(fourfold, "extend", "Extend Y to a smooth cubic fourfold");
  extend->add_option("--instance", inst_in, "Instance JSON (default: generate from --seed)");
  extend->add_option("--out", ff_out, "Write the fourfold JSON to this file");
  extend->callback([&] { action = [&] { return fourfold_extend(common, inst_in, ff_out); }; });
  auto* iota_cmd = leaf(fourfold, "iota", "Apply iota to a sampled line");
  iota_cmd->add_option("--instance", inst_in, "Instance JSON (default: generate from --seed)");
  iota_cmd->add_option("--line-seed", line_seed, "Seed of the sampled line")->capture_default_str();
  iota_cmd->add_flag("--check-involution", check_involution, "Check iota(iota(m)) = m");
  iota_cmd->add_option("--check-scroll", scroll, "v0,v1,v2: check incidence with T_v");
  iota_cmd->callback(
      [&] { action = [&] { return fourfold_iota(common, inst_in, line_seed, check_involution, scroll); }; });

  // schubert
  CLI::App* schubert = app.add_subcommand("schubert", "Schubert calculus on G(2, n)");
  schubert->require_subcommand(1);
  int ambient = 5;
  auto* deg = leaf(schubert, "deg-fano", "Degree of the Fano scheme of lines");
  deg->add_option("--ambient", ambient, "4 (cubic surface) or 5 (cubic threefold)")->capture_default_str();
  deg->callback([&] { action = [&] { return schubert_deg_fano(common, ambient); }; });

  // reproduce
  bool all = false;
  std::vector<int> criteria;
  int instances = 20;
  std::string rep_out;
  auto* rep = leaf(&app, "reproduce", "Run the acceptance suite");
  rep->add_flag("--all", all, "Run every criterion");
  rep->add_option("--criterion", criteria, "Run selected criteria (repeatable)")->check(CLI::Range(1, kCriteria));
  rep->add_option("--instances", instances, "Number of instance seeds")->check(CLI::Range(1, 1000))
      ->capture_default_str();
  rep->add_option("--out", rep_out, "Write the JSON report to this file");
  rep->callback([&] { action = [&] { return reproduce_cmd(common, all, criteria, instances, rep_out); }; });

  std::vector<std::string> storage = {"flopkit"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    PrecisionScope scope(common.precision);
    const auto t0 = std::chrono::steady_clock::now();
    RunReport report = action();
    report.timings["total"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (common.json) {
      out << to_json(report, common.timings).dump(2) << '\n';
    } else if (raw_written) {
      out << raw.str();
    } else {
      out << render_text(report);
    }
    return report.exit_code();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailure;
  }
}

}  // namespace flopkit
