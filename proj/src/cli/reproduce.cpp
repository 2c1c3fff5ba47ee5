#include "flopkit/cli/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "flopkit/detgeo/lines.hpp"
#include "flopkit/detgeo/projection.hpp"
#include "flopkit/fourfold/fourfold.hpp"
#include "flopkit/lattice/lattice.hpp"
#include "flopkit/lattice/represent.hpp"
#include "flopkit/schubert/schubert.hpp"
#include "flopkit/segre3/segre3.hpp"
#include "flopkit/surf27/surf27.hpp"

namespace flopkit {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Json num(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json class_json(const LatticeClass& v) { return Json::array({num(v.x), num(v.y)}); }

int small(std::mt19937_64& rng, int bound) { return static_cast<int>(rng() % (2 * bound + 1)) - bound; }

RatVector random_vector(std::mt19937_64& rng, int n, int bound) {
  RatVector v(n);
  do
    for (auto& x : v) x = small(rng, bound);
  while (is_zero_vector(v));
  return v;
}

// Seeds for samplers inside one criterion: distinct per criterion and per instance.
std::uint64_t stream(std::uint64_t seed, int criterion, std::uint64_t unit = 0) {
  return seed * 1000003ULL + static_cast<std::uint64_t>(criterion) * 7919ULL + unit;
}

std::vector<std::uint64_t> instance_seeds(const ReproduceOptions& o) {
  std::vector<std::uint64_t> out;
  for (int i = 0; i < o.instances; ++i) out.push_back(o.seed + static_cast<std::uint64_t>(i));
  return out;
}

void lattice_tables(const ReproduceOptions&, SuiteResult& r) {
  const LatticeClass g(1, 0);
  const auto rho = orbit_classes(OrbitKind::rho, 50);
  const auto rho_dual = orbit_classes(OrbitKind::rho_dual, 50);
  const auto alpha = orbit_classes(OrbitKind::alpha, 50);

  const std::vector<LatticeClass> rho_table = {{3, -2}, {7, -4}, {29, -16}};
  r.check("rho_1..rho_3", std::equal(rho_table.begin(), rho_table.end(), rho.begin()),
          rho[0].str() + ", " + rho[1].str() + ", " + rho[2].str());
  std::vector<long> gp;
  for (int i = 0; i < 3; ++i) gp.push_back(eval_form(rho[i], g).get_si());
  r.check("(g, rho_i) = 6, 18, 78", gp == std::vector<long>{6, 18, 78});
  const long ga1 = eval_form(alpha[0], g).get_si(), ga2 = eval_form(alpha[1], g).get_si();
  r.check("(g, alpha_i) = 24, 48", ga1 == 24 && ga2 == 48);
  r.check("alpha_2 = 17g - 9tau", alpha[1] == LatticeClass(17, -9), alpha[1].str());
  r.check("R3(alpha_1) = alpha_2", apply_isometry(named_isometry("R3"), alpha[0]) == alpha[1]);

  int dual_ok = 0, walls_ok = 0;
  for (int i = 0; i < 50; ++i) {
    dual_ok += apply_isometry(named_isometry("R1"), rho[i]) == rho_dual[i];
    walls_ok += self_pairing(rho[i]) == -10 && divisibility(rho[i]) == 2 && self_pairing(rho_dual[i]) == -10 &&
                divisibility(rho_dual[i]) == 2;
  }
  r.check("R1(rho_i) = rho_i dual for i <= 50", dual_ok == 50, std::to_string(dual_ok) + "/50");
  r.check("rho_i are (-10)-classes of divisibility 2", walls_ok == 50, std::to_string(walls_ok) + "/50");

  Json classes = Json::array();
  for (int i = 0; i < 5; ++i) classes.push_back(class_json(rho[i]));
  r.data["rho"] = classes;
  r.data["alpha"] = Json::array({class_json(alpha[0]), class_json(alpha[1])});
}

void non_representation(const ReproduceOptions&, SuiteResult& r) {
  for (long n : {-2L, 0L}) {
    const RepresentResult res = represents(n);
    const bool ok = res.status == RepresentStatus::none && res.certificate &&
                    res.certificate->searched_bound >= kDefaultRepresentBound;
    r.check("no class with Q = " + std::to_string(n), ok,
            res.certificate ? res.certificate->obstruction + ", |x| <= " + res.certificate->searched_bound.get_str()
                            : to_string(res.status));
    if (res.certificate)
      r.data["Q=" + std::to_string(n)] = {{"obstruction", res.certificate->obstruction},
                                          {"modulus", res.certificate->modulus},
                                          {"detail", res.certificate->detail}};
  }
  r.check("n = -2 obstruction is a congruence mod 3",
          represents(-2).certificate && represents(-2).certificate->obstruction == "congruence" &&
              represents(-2).certificate->modulus == 3);
  const RepresentResult w = represents(-10);
  const bool ok = w.status == RepresentStatus::witness && w.witness && self_pairing(*w.witness) == -10 &&
                  divisibility(*w.witness) == 2;
  r.check("witness for Q = -10 of divisibility 2", ok, w.witness ? w.witness->str() : "none");
  if (w.witness) r.data["witness"] = class_json(*w.witness);
}

void transfer(const ReproduceOptions& o, SuiteResult& r) {
  const TransferResult t = transfer_K_to_J(GramContext({{{3, 3}, {3, 7}}}));
  r.check("transfer [[3,3],[3,7]] = [[6,6],[6,2]]", t.gram == GramContext({{{6, 6}, {6, 2}}}));
  r.check("det = -24", t.gram.det() == -24);
  std::mt19937_64 rng(stream(o.seed, 3));
  int trials = 0, ok = 0;
  while (trials < 100) {
    const long a = small(rng, 20), tt = small(rng, 20);
    if (3 * tt - a * a == 0) continue;
    ++trials;
    const GramContext k({{{3, a}, {a, tt}}});
    ok += transfer_K_to_J(k).gram.det() == -2 * k.det();
  }
  r.check("det J = -2 det K on 100 random K", ok == 100, std::to_string(ok) + "/100");
}

void schubert(const ReproduceOptions& o, SuiteResult& r) {
  const Integer lines = integrate(chern_sym3(4));
  const auto s1 = SchubertCycle::sigma(5, 1);
  const Integer fano = integrate(chern_sym3(5) * s1 * s1);
  r.check("c4(Sym^3 S*) on G(2,4) = 27", lines == 27, lines.get_str());
  r.check("c4(Sym^3 S*) sigma_1^2 on G(2,5) = 45", fano == 45, fano.get_str());
  // The two planes of lines on Y are images of P^2 under the cubic Plucker forms: degree d^2.
  const int d = plucker_fromV_symbolic(make_instance(o.seed)).front().degree();
  const Integer plane = d * d;
  r.check("45 = 9 + 27 + 9", fano == plane + lines + plane, "plane degree " + plane.get_str());
  r.data["G(2,4)"] = chern_sym3(4).str();
  r.data["G(2,5)"] = (chern_sym3(5) * s1 * s1).str();
}

void combinatorics(const ReproduceOptions&, SuiteResult& r) {
  const auto lines = line_classes();
  const auto sextuples = disjoint_sextuples();
  const auto ds = double_sixes();
  r.check("27 line classes", lines.size() == 27, std::to_string(lines.size()));
  r.check("72 disjoint sextuples", sextuples.size() == 72, std::to_string(sextuples.size()));
  r.check("36 double-sixes", ds.size() == 36, std::to_string(ds.size()));
  int ok = 0;
  for (const auto& a : sextuples) {
    const PicIsometry t = double_six_involution(a);
    ok += t.preserves_form() && (t * t).is_identity() && !t.is_identity() && t(canonical_class()) == canonical_class();
  }
  r.check("double-six involutions are order-2 isometries fixing K", ok == 72, std::to_string(ok) + "/72");
}

void segre_identity(const ReproduceOptions&, SuiteResult& r) {
  int holding = 0;
  std::optional<SegreForms> good;
  for (SegreVariant v : {SegreVariant::printed, SegreVariant::cyclic}) {
    SegreForms f = segre_forms(v);
    const bool holds = f.relation_holds();
    r.data[to_string(v)] = holds;
    if (holds) {
      ++holding;
      good = f;
    }
  }
  r.check("exactly one variant satisfies the quintic relation", holding == 1);
  bool doubled = good.has_value();
  if (good)
    for (const auto& y : good->y) doubled = doubled && double_at_points(y, standard_points());
  r.check("its five cubics are double at the six standard points", doubled);
}

void instance_pipeline(const ReproduceOptions& o, SuiteResult& r) {
  int ok_nodes = 0, ok_gp = 0, ok_odp = 0, ok_smooth = 0, ok_special = 0;
  Json per = Json::array();
  for (std::uint64_t seed : instance_seeds(o)) {
    const auto t0 = Clock::now();
    const DeterminantalInstance inst = make_instance(seed);
    const InstanceReport rep = check_instance(inst);
    ok_nodes += rep.nodes_rank_one && rep.nodes_on_y && rep.nodes_singular && inst.nodes.size() == 6;
    ok_gp += rep.general_position;
    ok_odp += rep.nodes_odp;
    ok_smooth += rep.s_smooth && sgn(inst.smoothness_certificate) != 0;

    std::mt19937_64 rng(stream(seed, 7));
    bool special = true;
    for (int k = 0; k < 3; ++k) {
      const RatVector v = random_vector(rng, 3, 6), vd = random_vector(rng, 3, 6);
      const RatVector s = random_s_point(inst, rng);
      const ProjLine a = special_line(inst, SpecialKind::fromV, v);
      const ProjLine b = special_line(inst, SpecialKind::fromVdual, vd);
      const ProjLine c = special_line(inst, SpecialKind::fromS, s);
      for (const ProjLine* l : {&a, &b, &c})
        special = special && restrict_to_subspace(inst.cubicY, {l->a(), l->b()}).is_zero();
      const LineClass ca = classify_line(inst, a), cb = classify_line(inst, b), cc = classify_line(inst, c);
      special = special && ca.family == LineFamily::P && proportional(*ca.witness, v);
      special = special && cb.family == LineFamily::Pdual && proportional(*cb.witness, vd);
      special = special && cc.family == LineFamily::S && proportional(*cc.witness, s);
    }
    ok_special += special;
    r.slowest_unit = std::max(r.slowest_unit, seconds_since(t0));
    per.push_back({{"seed", seed},
                   {"attempts", inst.attempts},
                   {"certificate_sign", sgn(inst.smoothness_certificate)},
                   {"ok", rep.ok() && special}});
  }
  const std::string of = "/" + std::to_string(o.instances);
  r.check("six rational rank-1 nodes", ok_nodes == o.instances, std::to_string(ok_nodes) + of);
  r.check("nodes in linear general position", ok_gp == o.instances, std::to_string(ok_gp) + of);
  r.check("every node is an ordinary double point", ok_odp == o.instances, std::to_string(ok_odp) + of);
  r.check("Macaulay certificate of S nonzero", ok_smooth == o.instances, std::to_string(ok_smooth) + of);
  r.check("special lines lie on Y and classify back", ok_special == o.instances, std::to_string(ok_special) + of);
  r.data["instances"] = per;
}

void projection(const ReproduceOptions& o, SuiteResult& r) {
  int ok = 0, total = 0;
  for (std::uint64_t seed : instance_seeds(o)) {
    const DeterminantalInstance inst = make_instance(seed);
    for (int i = 0; i < 6; ++i) {
      const NodeProjection p = project_from_node(inst, i);
      ++total;
      ok += p.ok() && p.images.size() == 5;
    }
  }
  r.check("node images on C6, singular there, in the generic configuration", ok == total,
          std::to_string(ok) + "/" + std::to_string(total));
}

void lines_through_points(const ReproduceOptions& o, SuiteResult& r) {
  const Real tol("1e-40"), rank_tol("1e-30");
  int split_ok = 0, points = 0, residual_ok = 0, lines = 0;
  Real worst = 0;
  for (std::uint64_t seed : instance_seeds(o)) {
    const DeterminantalInstance inst = make_instance(seed);
    std::mt19937_64 rng(stream(seed, 9));
    for (int k = 0; k < 5; ++k) {
      const RatVector y = random_y_point(inst, rng);
      const auto res = lines_through_point(inst.cubicY, y, {}, o.bits);
      int p = 0, pd = 0, s = 0;
      for (const auto& l : res.lines) {
        const LineClass c = l.exact ? classify_line(inst, *l.exact) : classify_line(inst, l.line, rank_tol);
        p += c.family == LineFamily::P;
        pd += c.family == LineFamily::Pdual;
        s += c.family == LineFamily::S;
        ++lines;
        residual_ok += l.eliminant_residual < tol && l.direction_residual < tol;
        worst = std::max({worst, l.eliminant_residual, l.direction_residual});
      }
      ++points;
      split_ok += res.lines.size() == 6 && p == 1 && pd == 1 && s == 4;
    }
  }
  r.check("family split 1 + 1 + 4", split_ok == points, std::to_string(split_ok) + "/" + std::to_string(points));
  r.check("residuals below 1e-40", residual_ok == lines && lines == 6 * points,
          std::to_string(residual_ok) + "/" + std::to_string(lines) + ", worst " + sci(worst));
  r.data["points"] = points;
}

Rational bracket(const SixTupleOnLine& t, int i, int j) {
  return t.points[i][0] * t.points[j][1] - t.points[i][1] * t.points[j][0];
}

Rational cross_ratio(const SixTupleOnLine& t, int a, int b, int c, int d) {
  return bracket(t, a, c) * bracket(t, b, d) / (bracket(t, a, d) * bracket(t, b, c));
}

void jmap_suite(const ReproduceOptions& o, SuiteResult& r) {
  int agree = 0, cross = 0, samples = 0, rejected = 0;
  for (std::uint64_t seed : instance_seeds(o)) {
    const DeterminantalInstance inst = make_instance(seed);
    std::mt19937_64 rng(stream(seed, 10));
    int accepted = 0;
    for (int draws = 0; accepted < 5 && draws < 200; ++draws) {
      const RatVector s = random_s_point(inst, rng);
      try {
        s_open_point(inst, s);
      } catch (const PreconditionError&) {
        ++rejected;  // on one of the 27 lines of S
        continue;
      }
      ++accepted;
      agree += jmap_agree(inst, s);
      const SixTupleOnLine j = jmap(inst, s), jd = jmap_dual(inst, s);
      bool same = true;
      for (int k = 3; k < 6; ++k) same = same && cross_ratio(j, 0, 1, 2, k) == cross_ratio(jd, 0, 1, 2, k);
      cross += same;
    }
    samples += 5;
  }
  r.check("jmap_agree at 5 points of S per instance", agree == samples,
          std::to_string(agree) + "/" + std::to_string(samples));
  r.check("cross-ratios of j and j-dual equal exactly", cross == samples,
          std::to_string(cross) + "/" + std::to_string(samples));
  r.data["rejected_on_lines"] = rejected;
}

void involution(const ReproduceOptions& o, SuiteResult& r) {
  const DeterminantalInstance inst = make_instance(o.seed);
  FourfoldOptions fo;
  fo.bits = o.bits;
  const CubicFourfold x = extend_to_fourfold(inst, o.seed, fo);
  const Real tol("1e-30");
  int inv_ok = 0;
  Real worst = 0;
  for (int k = 0; k < 10; ++k) {
    const FourfoldLine m = sample_line(x, stream(o.seed, 11, k), o.bits);
    const Real d = line_distance(iota(x, iota(x, m)).line, m.line);
    inv_ok += d < tol;
    worst = std::max(worst, d);
  }
  r.check("iota(iota(m)) = m on 10 lines", inv_ok == 10, std::to_string(inv_ok) + "/10, worst " + sci(worst));

  // Half of the pairs are planted so that m meets T_v: m passes through a point of a ruling of T_v.
  std::mt19937_64 rng(stream(o.seed, 11, 100));
  const auto grad = gradient(inst.cubicY);
  int invariant = 0, meeting = 0, pairs = 0;
  for (int k = 0; pairs < 10 && k < 100; ++k) {
    const RatVector v = random_vector(rng, 3, 5);
    std::optional<RatVector> y;
    if (pairs % 2 == 1) {
      RatVector vd = cross(v, random_vector(rng, 3, 5));
      if (is_zero_vector(vd)) continue;
      const ProjLine ruling = special_line(inst, SpecialKind::fromVdual, vd);
      const RatVector p = ruling.point(Rational(2 + static_cast<int>(rng() % 9)), Rational(3));
      bool smooth = false;
      for (const auto& g : grad) smooth = smooth || sgn(g(p)) != 0;
      if (!smooth) continue;
      y = p;
    }
    const FourfoldLine m = sample_line(x, stream(o.seed, 11, 200 + k), o.bits, y);
    const IncidenceReport rep = scroll_incidence_invariance(x, m, v);
    invariant += rep.invariant();
    meeting += rep.m_meets;
    ++pairs;
  }
  r.check("scroll incidence preserved on 10 pairs", invariant == 10 && pairs == 10,
          std::to_string(invariant) + "/" + std::to_string(pairs) + ", " + std::to_string(meeting) + " meeting");
  r.data["fourfold_attempts"] = x.attempts;
  r.data["meeting_pairs"] = meeting;
}

}  // namespace

Check& SuiteResult::check(std::string name_, bool pass_, std::string detail) {
  checks.push_back({std::move(name_), pass_, std::move(detail)});
  return checks.back();
}

bool SuiteResult::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

bool SuiteResult::within_budget() const {
  if (!budget) return true;
  return (budget_per_unit ? slowest_unit : seconds) < *budget;
}

std::string criterion_name(int c) {
  static const char* names[] = {"lattice tables",       "non-representation", "transfer",
                                "schubert",             "combinatorics",      "segre identity",
                                "instance pipeline",    "projection from nodes", "six lines through a point",
                                "j-map",                "involution",         "determinism"};
  if (c < 1 || c > kCriteria) throw PreconditionError("criterion must be in 1..12");
  return names[c - 1];
}

SuiteResult run_criterion(int c, const ReproduceOptions& opts) {
  SuiteResult r;
  r.criterion = c;
  r.name = criterion_name(c);
  static const std::optional<double> budgets[] = {1, 1, 1, 1, 10, 5, 60, 30, {}, {}, {}, {}};
  r.budget = budgets[c - 1];
  r.budget_per_unit = c == 7;
  PrecisionScope scope(opts.bits);
  const auto t0 = Clock::now();
  try {
    switch (c) {
      case 1: lattice_tables(opts, r); break;
      case 2: non_representation(opts, r); break;
      case 3: transfer(opts, r); break;
      case 4: schubert(opts, r); break;
      case 5: combinatorics(opts, r); break;
      case 6: segre_identity(opts, r); break;
      case 7: instance_pipeline(opts, r); break;
      case 8: projection(opts, r); break;
      case 9: lines_through_points(opts, r); break;
      case 10: jmap_suite(opts, r); break;
      case 11: involution(opts, r); break;
      case 12: {
        ReproduceOptions inner = opts;
        inner.criteria.clear();
        for (int k = 1; k < kCriteria; ++k) inner.criteria.push_back(k);
        const std::string first = suites_json(run_suites(inner)).dump();
        const std::string second = suites_json(run_suites(inner)).dump();
        r.check("two runs of criteria 1-11 serialize identically", first == second,
                std::to_string(first.size()) + " bytes");
        break;
      }
      default: throw PreconditionError("unknown criterion " + std::to_string(c));
    }
  } catch (const Error& e) {
    r.check("completed without error", false, e.what());
  }
  r.seconds = seconds_since(t0);
  return r;
}

std::vector<SuiteResult> run_suites(const ReproduceOptions& opts) {
  std::vector<int> which = opts.criteria;
  if (which.empty())
    for (int k = 1; k <= kCriteria; ++k) which.push_back(k);
  std::sort(which.begin(), which.end());
  which.erase(std::unique(which.begin(), which.end()), which.end());
  std::vector<SuiteResult> out;
  for (int c : which) out.push_back(run_criterion(c, opts));
  return out;
}

Json suites_json(const std::vector<SuiteResult>& suites) {
  Json arr = Json::array();
  for (const auto& s : suites) {
    Json checks = Json::array();
    for (const auto& c : s.checks) checks.push_back(to_json(c));
    arr.push_back({{"criterion", s.criterion}, {"name", s.name}, {"pass", s.pass()}, {"checks", checks},
                   {"data", s.data}});
  }
  return arr;
}

RunReport reproduce(const ReproduceOptions& opts) {
  RunReport rep;
  rep.command = "reproduce";
  rep.seed = opts.seed;
  rep.precision = opts.bits;
  const auto suites = run_suites(opts);
  for (const auto& s : suites) {
    rep.check("criterion " + std::to_string(s.criterion) + ": " + s.name, s.pass());
    rep.timings[s.name] = s.seconds;
  }
  rep.data["instances"] = opts.instances;
  rep.data["suites"] = suites_json(suites);
  return rep;
}

}  // namespace flopkit
