// g2k: command-line front end. Every subcommand prints one report ("schema":"1") and
// exits 0 on success, 1 when a verification fails, 2 on a usage error.

#include <cctype>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json_io.hpp"

#include "g2k/acceptance.hpp"
#include "g2k/branch.hpp"
#include "g2k/charts.hpp"
#include "g2k/covering.hpp"
#include "g2k/interpolation.hpp"
#include "g2k/jacobian.hpp"
#include "g2k/sampling.hpp"

namespace {

using namespace g2k;
using io::json;

struct Config {
  std::string command;
  std::string curve = "2,3,5";
  std::string field;  // empty: the subcommand's default
  std::uint64_t seed = 42;
  std::string format = "json";
  int samples = -1;
  bool full = false;
  std::string points, cubic, d1, d2, expect;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A report and whether the command's own check passed.
struct Verdict {
  json report;
  bool ok = true;
};

bool is_input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
    case ErrorCode::NotOnCurve:
    case ErrorCode::DuplicateBranchPoint:
    case ErrorCode::Unsupported:
    case ErrorCode::CurveMismatch:
    case ErrorCode::ZeroCubic:
    case ErrorCode::MultiplicityUnsupported:
      return true;
    default:
      return false;
  }
}

void emit(const Config& cfg, const json& j) {
  if (cfg.format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  if (j.contains("criteria")) {
    for (const auto& c : j["criteria"]) std::cout << c["line"].get<std::string>() << "\n";
    return;
  }
  for (const auto& [k, v] : j.items()) {
    if (k == "schema") continue;
    std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

int samples_or(const Config& cfg, int dflt) {
  if (cfg.samples == 0 || cfg.samples < -1) throw UsageError("--samples must be positive");
  return cfg.samples > 0 ? cfg.samples : dflt;
}

// ---------------------------------------------------------------------------------

template <FieldDescriptor F>
Verdict curve_info(const Config&, const CurveGenus2<F>& C) {
  auto j = io::report();
  j["curve"] = io::curve_json(C);
  j["field"] = C.field().name();
  j["f_affine"] = io::unipoly_json(C.f_affine());
  j["discriminant"] = io::elem<F>(discriminant(C.f_affine()));
  json w = json::array();
  for (const auto& p : C.weierstrass_points()) w.push_back(io::point_json(p));
  j["weierstrass_points"] = w;
  return {j, true};
}

template <FieldDescriptor F>
void require_finite(const char* what) {
  if constexpr (!F::is_finite) throw UsageError(std::string(what) + " samples at random and needs a prime field (--field p)");
}

template <FieldDescriptor F>
Verdict interpolate(const Config& cfg, const CurveGenus2<F>& C) {
  WeightedPoints<F> xi;
  bool sampled = cfg.points.empty();
  if (sampled) {
    require_finite<F>("interpolate without --points");
    if constexpr (F::is_finite) {
      Rng rng(cfg.seed);
      do xi = random_split_cubic(C, rng).second;
      while (xi.max_mult() > 2);
    }
  } else {
    xi = io::parse_points(C, io::load_json(cfg.points));
  }
  if (xi.total() != 6) throw UsageError("interpolate needs six points counted with multiplicity");
  const auto rank = restriction_matrix(C, xi).rank();
  auto g = cubic_through_six(C, xi);
  const bool aj = aj_sum_mumford(C, xi).is_identity();
  auto j = io::report();
  j["points"] = io::weighted_json(xi);
  j["sampled"] = sampled;
  j["rank"] = rank;
  j["cubic"] = g ? io::cubic_json(*g) : json(nullptr);
  j["aj_zero"] = aj;
  const bool ok = (rank == 4) == g.has_value() && g.has_value() == aj;
  j["consistent"] = ok;
  return {j, ok};
}

template <FieldDescriptor F>
Verdict complete_four_cmd(const Config& cfg, const CurveGenus2<F>& C) {
  auto run = [&](const WeightedPoints<F>& xi) {
    auto j = io::report();
    j["points"] = io::weighted_json(xi);
    auto c = complete_four(C, xi);
    if (const auto* u = std::get_if<UniqueCompletion<F>>(&c)) {
      j["kind"] = "unique";
      j["cubic"] = io::cubic_json(u->cubic);
      j["residual"] = io::weighted_json(u->residual);
    } else {
      const auto& p = std::get<PencilCompletion<F>>(c);
      j["kind"] = "pencil";
      j["first"] = io::cubic_json(p.first);
      j["second"] = io::cubic_json(p.second);
    }
    return j;
  };
  if (!cfg.points.empty()) {
    auto xi = io::parse_points(C, io::load_json(cfg.points));
    if (xi.total() != 4) throw UsageError("complete-four needs four points counted with multiplicity");
    return {run(xi), true};
  }
  require_finite<F>("complete-four without --points");
  if constexpr (F::is_finite) {
    Rng rng(cfg.seed);
    for (;;) {
      WeightedPoints<F> xi(random_points(C, 4, rng));
      if (xi.max_mult() > 2) continue;
      try {
        return {run(xi), true};
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotSplit) throw;
      }
    }
  }
  return {};
}

template <FieldDescriptor F>
Verdict intersect(const Config& cfg, const CurveGenus2<F>& C) {
  std::optional<CubicForm<F>> g;
  WeightedPoints<F> div;
  if (!cfg.cubic.empty()) {
    g = io::parse_cubic(C.field(), io::load_json(cfg.cubic));
    div = intersection_divisor(C, *g);
  } else {
    require_finite<F>("intersect without --cubic");
    if constexpr (F::is_finite) {
      Rng rng(cfg.seed);
      auto [h, d] = random_split_cubic(C, rng);
      g = h;
      div = d;
    }
  }
  const bool aj = aj_sum_mumford(C, div).is_identity();
  auto j = io::report();
  j["cubic"] = io::cubic_json(*g);
  j["divisor"] = io::weighted_json(div);
  j["total"] = div.total();
  j["aj_zero"] = aj;
  return {j, div.total() == 6 && aj};
}

template <FieldDescriptor F>
Verdict jac_add(const Config& cfg, const CurveGenus2<F>& C) {
  std::optional<DivisorClass<F>> a, b;
  if (!cfg.d1.empty()) a = io::parse_divisor(C, io::load_json(cfg.d1));
  if (!cfg.d2.empty()) b = io::parse_divisor(C, io::load_json(cfg.d2));
  if (!a || !b) {
    require_finite<F>("jac-add without --d1 and --d2");
    if constexpr (F::is_finite) {
      Rng rng(cfg.seed);
      if (!a) a = random_divisor_class(C, rng);
      if (!b) b = random_divisor_class(C, rng);
    }
  }
  auto m = cantor_add(C, to_mumford(C, *a), to_mumford(C, *b));
  auto j = io::report();
  j["d1"] = io::divisor_json(*a);
  j["d2"] = io::divisor_json(*b);
  j["cantor"] = io::mumford_json(m);
  bool ok = true;
  try {
    auto r = add(C, *a, *b);
    j["sum"] = io::divisor_json(r.sum);
    j["method"] = r.used_geometric ? "interpolation" : "cantor";
    const bool agree = to_mumford(C, r.sum) == m;
    j["agrees_with_cantor"] = agree;
    ok = agree;
    if (!cfg.expect.empty()) {
      const bool match = io::parse_divisor(C, io::load_json(cfg.expect)) == r.sum;
      j["matches_expected"] = match;
      ok = ok && match;
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotSplit) throw;
    // the sum has no rational support; the Mumford form is still the answer
    j["sum"] = nullptr;
    j["method"] = "cantor";
    j["note"] = "the sum is a conjugate pair over this field";
    if (!cfg.expect.empty()) {
      j["matches_expected"] = false;
      ok = false;
    }
  }
  return {j, ok};
}

template <FieldDescriptor F>
Verdict jac_selftest(const Config& cfg, const CurveGenus2<F>& C) {
  require_finite<F>("jac-selftest");
  if constexpr (F::is_finite) {
    const int n = samples_or(cfg, 1000);
    auto v = acceptance::check_addition(C, n, n, cfg.seed);
    auto j = io::report();
    j["curve"] = io::curve_json(C);
    j["pairs"] = n;
    j["pass"] = v.pass;
    j["detail"] = v.detail;
    return {j, v.pass};
  }
  return {};
}

template <FieldDescriptor F>
Verdict fiber_cmd(const Config& cfg, const CurveGenus2<F>& C) {
  std::vector<PointP113<F>> pts;
  if (!cfg.points.empty()) {
    pts = io::parse_points(C, io::load_json(cfg.points)).expanded();
  } else {
    require_finite<F>("fiber without --points");
    if constexpr (F::is_finite) {
      Rng rng(cfg.seed);
      pts = acceptance::distinct_points(C, rng, 6);
    }
  }
  if (pts.size() != 6) throw UsageError("fiber needs six points counted with multiplicity");
  auto fib = fiber(pts);
  json list = json::array();
  int degree = 0;
  for (const auto& t : fib) {
    auto c = classify(t);
    degree += c.local_degree;
    list.push_back(json{{"pairs", io::pairing_json(t)},
                        {"kind", ramification_name(c.kind)},
                        {"local_degree", c.local_degree},
                        {"ftype", ftype_name(classify_F(C, t))}});
  }
  // at most one coincidence: the local degrees add up to the covering degree
  std::map<PointP113<F>, int> count;
  for (const auto& p : pts) ++count[p];
  int excess = 0;
  for (const auto& [p, k] : count) excess += k - 1;
  auto j = io::report();
  j["size"] = fib.size();
  j["degree_sum"] = degree;
  j["pairings"] = list;
  return {j, excess > 1 || degree == 15};
}

Verdict group_h() {
  auto r = group_H_report();
  auto j = io::report();
  j["order"] = r.order;
  j["index"] = r.index;
  j["normal"] = r.normal;
  j["orbit"] = r.orbit_size;
  j["orbit_is_all_partitions"] = r.orbit_is_all_partitions;
  j["is_stabilizer"] = r.is_stabilizer;
  json parts = json::array();
  for (const auto& p : pair_partitions()) parts.push_back(to_string(p));
  j["partitions"] = parts;
  return {j, r.order == 48 && r.index == 15 && !r.normal && r.orbit_size == 15 && r.orbit_is_all_partitions && r.is_stabilizer};
}

template <FieldDescriptor F>
Verdict branch_line(const Config& cfg, const CurveGenus2<F>& C) {
  require_finite<F>("branch-line");
  if constexpr (F::is_finite) {
    auto degs = acceptance::line_degrees(C, samples_or(cfg, 50), cfg.seed);
    bool ok = true;
    for (int d : degs) ok = ok && d == 14;
    auto j = io::report();
    j["line_degrees"] = degs;
    j["claimed_total"] = 14;
    j["pass"] = ok;
    return {j, ok};
  }
  return {};
}

template <FieldDescriptor F>
Verdict branch_pencil(const Config&, const CurveGenus2<F>& C) {
  auto r = pencil_branch_degree(C);
  auto j = io::report();
  j["affine"] = r.affine_degree;
  j["infinity"] = r.infinity_mult;
  j["total"] = r.total();
  j["centre"] = r.centre;
  j["pencil"] = json{{"affine", r.affine_degree}, {"infinity", r.infinity_mult}};
  j["centre0"] = json{{"affine", r.centre0_affine}, {"infinity", r.centre0_infinity}};
  j["claimed_total"] = 14;
  return {j, r.total() == 14 && r.centre0_affine + r.centre0_infinity == 14};
}

template <FieldDescriptor F>
Verdict branch_full(const Config& cfg, const CurveGenus2<F>& C) {
  if (!cfg.full) throw UsageError("branch-full interpolates 15^4 values; pass --full to run it");
  require_finite<F>("branch-full");
  if constexpr (F::is_finite) {
    const F& K = C.field();
    auto B = full_branch_poly(C);
    Rng rng(cfg.seed);
    const int n = samples_or(cfg, 100);
    bool agree = true, vanish = true;
    for (int i = 0; i < n; ++i) {
      P4Point<F> a{K.random_nonzero(rng), K.random(rng), K.random(rng), K.random(rng), K.random_nonzero(rng)};
      agree = agree && B.eval({a[0], a[1], a[2], a[3], a[4]}) == branch_value(C, a);
    }
    for (int i = 0; i < 50; ++i) {
      const auto g = random_tangent_cubic(C, rng).first;
      const auto& a = g.alpha();
      vanish = vanish && B.eval({a[0], a[1], a[2], a[3], a[4]}).is_zero();
    }
    auto j = io::report();
    j["terms"] = B.size();
    j["degree"] = B.total_degree();
    j["homogeneous"] = B.is_homogeneous();
    j["agrees_with_branch_value"] = agree;
    j["vanishes_on_tangent_cubics"] = vanish;
    j["poly"] = io::poly_json(B);
    return {j, agree && vanish && B.is_homogeneous() && B.total_degree() == 14};
  }
  return {};
}

Verdict charts_verify() {
  auto j = io::report();
  bool ok = true;
  auto step = [&](const char* key, auto&& fn) {
    try {
      fn();
      j[key] = "ok";
    } catch (const Error& e) {
      j[key] = std::string("failed: ") + e.what();
      ok = false;
    }
  };
  std::string locus = "?";
  step("tilde_a", [&] { locus = verify_tilde_a().locus_G; });
  step("chart21_relations", [] { verify_chart21_relations(); });
  step("kummer_eq", [] { verify_kummer_111_symbolic(); });
  step("contraction_F1", [] { (void)verify_contraction_F1(); });
  step("f2_fragment", [] { verify_f2_fragment(); });
  j["locus_G"] = locus;
  return {j, ok};
}

Verdict selftest(const Config& cfg) {
  AcceptanceOptions opt;
  opt.seed = cfg.seed;
  opt.full = cfg.full;
  auto results = run_acceptance(opt);
  auto j = io::report();
  json list = json::array();
  int passed = 0, failed = 0;
  for (const auto& r : results) {
    list.push_back(json{{"id", r.id},
                        {"name", r.name},
                        {"status", r.skipped ? "skip" : r.pass ? "pass" : "fail"},
                        {"detail", r.detail},
                        {"line", format_result(r, false)}});
    if (!r.skipped) (r.pass ? passed : failed)++;
  }
  j["criteria"] = list;
  j["passed"] = passed;
  j["failed"] = failed;
  return {j, failed == 0};
}

// ---------------------------------------------------------------------------------

template <FieldDescriptor F>
Verdict dispatch(const Config& cfg, const F& K, const io::CurveSpec& spec) {
  auto C = io::build_curve(K, spec);
  const auto& c = cfg.command;
  if (c == "curve-info") return curve_info(cfg, C);
  if (c == "interpolate") return interpolate(cfg, C);
  if (c == "complete-four") return complete_four_cmd(cfg, C);
  if (c == "intersect") return intersect(cfg, C);
  if (c == "jac-add") return jac_add(cfg, C);
  if (c == "jac-selftest") return jac_selftest(cfg, C);
  if (c == "fiber") return fiber_cmd(cfg, C);
  if (c == "branch-line") return branch_line(cfg, C);
  if (c == "branch-pencil") return branch_pencil(cfg, C);
  if (c == "branch-full") return branch_full(cfg, C);
  throw UsageError("unknown subcommand " + c);
}

/// "Q", or a prime written as "1009", "F_1009" or "Fp1009".
std::optional<std::uint64_t> parse_field(const std::string& s) {
  if (s == "Q" || s == "q" || s == "QQ") return std::nullopt;
  std::string digits = s;
  for (const std::string prefix : {"F_", "Fp", "GF"})
    if (digits.rfind(prefix, 0) == 0) digits = digits.substr(prefix.size());
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char ch) { return std::isdigit(ch); }))
    throw UsageError("--field must be Q or a prime, got '" + s + "'");
  return std::stoull(digits);
}

Verdict run(const Config& cfg) {
  if (cfg.format != "json" && cfg.format != "text") throw UsageError("--format must be json or text");
  if (cfg.command == "group-h") return group_h();
  if (cfg.command == "charts-verify") return charts_verify();
  if (cfg.command == "selftest") return selftest(cfg);

  auto spec = io::parse_curve_spec(cfg.curve);
  std::string field = cfg.field;
  if (field.empty()) field = spec.field.value_or(cfg.command == "branch-pencil" ? "Q" : "1009");
  auto p = parse_field(field);
  if (!p) return dispatch(cfg, RationalField{}, spec);
  return dispatch(cfg, PrimeField(*p), spec);
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Genus-2 curves, their Jacobians, the degree-15 covering of the cubics and the branch form."};
  app.set_help_all_flag("--help-all", "Show help for every subcommand");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--curve", cfg.curve, "curve JSON (inline or file) or lambdas such as 2,3,5")->capture_default_str();
  app.add_option("--field", cfg.field, "Q or a prime p (default F_1009; Q for branch-pencil)");
  app.add_option("--seed", cfg.seed, "seed for every random choice")->capture_default_str();
  app.add_option("--format", cfg.format, "json or text")->capture_default_str();
  app.add_option("--samples", cfg.samples, "sample count for the sampling subcommands");
  app.add_flag("--full", cfg.full, "run full_branch_poly (branch-full, selftest)");

  const std::vector<std::pair<const char*, const char*>> commands{
      {"curve-info", "curve data, branch points and Weierstrass points"},
      {"interpolate", "the cubic through six points (--points)"},
      {"complete-four", "complete four points (--points) by a cubic"},
      {"intersect", "intersection divisor of a cubic (--cubic) with the curve"},
      {"jac-add", "add two divisor classes (--d1, --d2, optional --expect)"},
      {"jac-selftest", "interpolation addition against Cantor, and the group axioms"},
      {"fiber", "the pairings over six points (--points) and their ramification"},
      {"group-h", "the stabiliser H of a pair partition inside S_6"},
      {"branch-line", "degrees of the branch form on random lines"},
      {"branch-pencil", "degree count of the branch form along a pencil"},
      {"branch-full", "the full degree-14 branch form over F_p (needs --full)"},
      {"charts-verify", "Hilbert-scheme chart identities"},
      {"selftest", "the whole acceptance suite"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&cfg, n = std::string(name)] { cfg.command = n; });
    const std::string n = name;
    if (n == "interpolate" || n == "complete-four" || n == "fiber")
      sub->add_option("--points", cfg.points, "list of points (inline JSON or file)");
    if (n == "intersect") sub->add_option("--cubic", cfg.cubic, "{\"alpha\": [...]} (inline JSON or file)");
    if (n == "jac-add") {
      sub->add_option("--d1", cfg.d1, "divisor class {\"points\": [...]}");
      sub->add_option("--d2", cfg.d2, "divisor class {\"points\": [...]}");
      sub->add_option("--expect", cfg.expect, "expected sum; a mismatch exits 1");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    auto v = run(cfg);
    emit(cfg, v.report);
    return v.ok ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    auto j = io::report();
    j["error"] = std::string(error_name(e.code()));
    j["message"] = e.what();
    emit(cfg, j);
    std::cerr << e.what() << "\n";
    return is_input_error(e.code()) ? 2 : 1;
  }
}
