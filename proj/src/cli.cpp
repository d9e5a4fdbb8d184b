#include "cherednik/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cherednik/euler.hpp"
#include "cherednik/graded_quotient.hpp"
#include "cherednik/singular.hpp"
#include "cherednik/text.hpp"

namespace cherednik::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  Json data = Json::object();
  Table table;
  // Set when an invariant check inside the command failed; the report is
  // still printed and the exit status is kExitIntegrity.
  std::string integrity_failure;
};

struct Common {
  std::string format = "json";
  std::optional<unsigned> cutoff;
  std::uint64_t seed = 1;
  bool parallel = false;
  int threads = 0;

  Execution exec() const { return parallel ? Execution::parallel : Execution::serial; }
};

// Options shared by the commands that take a group and parameters.
struct ModelOptions {
  std::string group;
  std::string k;
  std::string c;
  std::optional<int> tau;
  std::optional<int> r;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string plain(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void emit(const Report& report, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << report.data.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    if (report.table.columns.empty()) {
      out << "key,value\n";
      for (const auto& [key, value] : report.data.items()) out << csv_field(key) << "," << csv_field(plain(value)) << "\n";
      return;
    }
    for (std::size_t i = 0; i < report.table.columns.size(); ++i) out << (i ? "," : "") << csv_field(report.table.columns[i]);
    out << "\n";
    for (const auto& row : report.table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
      out << "\n";
    }
    return;
  }
  for (const auto& [key, value] : report.data.items()) {
    if (value.is_array() && !value.empty() && value.front().is_object()) continue;
    out << key << ": " << plain(value) << "\n";
  }
  if (!report.table.columns.empty()) {
    out << "\n";
    for (std::size_t i = 0; i < report.table.columns.size(); ++i) out << (i ? "  " : "") << report.table.columns[i];
    out << "\n";
    for (const auto& row : report.table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "  " : "") << row[i];
      out << "\n";
    }
  }
}

unsigned resolve_cutoff(const Common& common, unsigned fallback) {
  if (common.cutoff) return *common.cutoff;
  if (const char* env = std::getenv(kCutoffVariable); env != nullptr && *env != '\0') {
    const std::string text(env);
    if (text.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError(std::string(kCutoffVariable) + " must be a non-negative integer");
    }
    return static_cast<unsigned>(std::stoul(text));
  }
  return fallback;
}

std::string describe(const GroupElement& g) {
  std::string out = "[";
  for (std::size_t i = 0; i < g.perm.size(); ++i) out += (i ? "," : "") + std::to_string(g.perm[i] + 1);
  out += "|";
  for (std::size_t i = 0; i < g.weights.size(); ++i) out += (i ? "," : "") + std::to_string(g.weights[i]);
  return out + "]";
}

Json scalars(const std::vector<Scalar>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

Json polynomial_json(const Polynomial& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exponents", e}, {"coefficient", c.to_string()}});
  return {{"text", format_polynomial(f)}, {"terms", terms}};
}

Json hilbert_json(const std::vector<std::size_t>& h) {
  Json out = Json::array();
  for (auto d : h) out.push_back(d);
  return out;
}

ParameterFunction make_params(const ReflectionGroup& group, const ModelOptions& m) {
  const Scalar k = m.k.empty() ? Scalar(0) : parse_scalar(m.k, group.l());
  auto c = parse_scalar_list(m.c, group.l());
  if (group.l() == 1) {
    if (!c.empty()) throw PreconditionError("S(n) takes only --k");
    return ParameterFunction::type_a(k);
  }
  if (c.size() > static_cast<std::size_t>(group.l() - 1)) throw PreconditionError("too many values in --c");
  if (group.n() == 1) return ParameterFunction::rank1(std::move(c));
  return ParameterFunction::wreath(k, std::move(c));
}

LinearCharacter make_tau(const ModelOptions& m) { return m.tau ? LinearCharacter::eta(*m.tau) : LinearCharacter::trivial(); }

std::vector<Vector> directions_for(const ReflectionGroup& group) {
  return group.is_symmetric() ? type_a_directions(static_cast<std::size_t>(group.n())) : std::vector<Vector>{};
}

void describe_model(Json& data, const ReflectionGroup& group, const ParameterFunction& params) {
  data["group"] = group.descriptor();
  data["order"] = group.order();
  data["parameters"] = params.to_string();
}

void require_singular(const DunklSystem& system, const std::vector<Polynomial>& generators) {
  for (const auto& f : generators) {
    for (std::size_t i = 0; i < system.nvars(); ++i) {
      if (!system.apply(i, f).is_zero()) throw IntegrityError("generator " + format_polynomial(f) + " is not singular");
    }
  }
}

// M_c / (singular vectors of degree r): V_k for S(n), the wreath quotient
// otherwise (with c_1 solved onto E_r when --c is absent).
struct BuiltQuotient {
  std::optional<DunklSystem> system;
  std::vector<Polynomial> generators;
  std::optional<GradedQuotient> quotient;
  int r = 0;
  Json description = Json::object();
};

BuiltQuotient build_quotient(const ModelOptions& m, const Common& common, unsigned minimum_cutoff = 0) {
  if (m.group.empty()) throw PreconditionError("--group is required");
  if (!m.r) throw PreconditionError("--r is required");
  const auto group = ReflectionGroup::parse(m.group);
  BuiltQuotient out;
  out.r = *m.r;
  const std::size_t n = static_cast<std::size_t>(group.n());
  const unsigned cutoff = std::max(minimum_cutoff, resolve_cutoff(common, default_finite_cutoff(group.n(), *m.r)));
  ClosureOptions options;
  options.exec = common.exec();
  if (group.is_symmetric()) {
    const auto tp = TypeAParams::make(group.n(), *m.r);
    if (!m.k.empty() && !(parse_scalar(m.k, 1) == Scalar(tp.k()))) throw PreconditionError("S(n) quotient needs k = r/n");
    out.system.emplace(group, tp.params());
    out.generators = typeA_singular(tp);
    options.directions = type_a_directions(n);
    Polynomial e1(n);
    for (std::size_t i = 0; i < n; ++i) e1 += Polynomial::variable(n, i);
    options.ideal_only = {e1};
    out.description["k"] = to_string(tp.k());
  } else {
    const Scalar k = m.k.empty() ? Scalar(0) : parse_scalar(m.k, group.l());
    auto c = parse_scalar_list(m.c, group.l());
    if (c.empty()) {
      c.assign(static_cast<std::size_t>(group.l() - 1), Scalar(0));
      c[0] = solve_on_er(group.l(), group.n(), *m.r, k, c, 1);
    }
    const auto w = WreathParams::make(group.l(), group.n(), *m.r, k, c);
    if (!er_residual(w).is_zero()) throw PreconditionError("parameters are not on E_r (residual " + er_residual(w).to_string() + ")");
    out.system.emplace(group, w.params());
    out.generators = wreath_singular(w);
    out.description["k"] = w.k.to_string();
    out.description["c"] = scalars(w.c);
    out.description["sigma_r_contains_k"] = sigma_r_contains(w.k, w);
  }
  require_singular(*out.system, out.generators);
  out.quotient.emplace(submodule_closure(*out.system, out.generators, cutoff, options));
  describe_model(out.description, group, out.system->params());
  out.description["r"] = *m.r;
  out.description["cutoff"] = cutoff;
  return out;
}

void add_finite(Json& data, const GradedQuotient& q) {
  const auto decision = finite_dim_decide(q);
  data["hilbert"] = hilbert_json(q.hilbert_series());
  if (decision.status == FiniteStatus::finite) {
    data["status"] = "finite";
    data["dimension"] = decision.dimension;
  } else {
    data["status"] = "unknown_at_cutoff";
  }
}

Table hilbert_table(const GradedQuotient& q) {
  Table t{{"degree", "dimension"}, {}};
  const auto h = q.hilbert_series();
  for (std::size_t m = 0; m < h.size(); ++m) t.rows.push_back({std::to_string(m), std::to_string(h[m])});
  return t;
}

void add_model_options(CLI::App* sub, ModelOptions& m, bool with_r) {
  sub->add_option("--group", m.group, "S(n), Z(l) or G(l,1,n)");
  sub->add_option("--k", m.k, "parameter on the transposition-type reflections");
  sub->add_option("--c", m.c, "comma-separated c_1,..,c_{l-1}");
  sub->add_option("--tau", m.tau, "lowest weight eta^p (one-dimensional)");
  if (with_r) sub->add_option("--r", m.r, "degree of the singular vectors");
}

// ---- commands ----

Report cmd_dunkl(const ModelOptions& m, const std::string& poly, std::optional<int> direction) {
  if (m.group.empty()) throw PreconditionError("--group is required");
  const auto group = ReflectionGroup::parse(m.group);
  const DunklSystem system(group, make_params(group, m), make_tau(m));
  const std::size_t n = system.nvars();
  const Polynomial f = parse_polynomial(poly, n, group.l());
  Report report;
  describe_model(report.data, group, system.params());
  report.data["input"] = format_polynomial(f);
  report.table.columns = {"direction", "value"};
  Json results = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    if (direction && static_cast<std::size_t>(*direction) != i + 1) continue;
    const Polynomial value = system.apply(i, f);
    results.push_back({{"direction", i + 1}, {"value", polynomial_json(value)}});
    report.table.rows.push_back({std::to_string(i + 1), format_polynomial(value)});
  }
  if (direction && (*direction < 1 || static_cast<std::size_t>(*direction) > n)) throw PreconditionError("--direction out of range");
  report.data["results"] = results;
  return report;
}

Report singular_report(const DunklSystem& system, const std::vector<Polynomial>& vectors, Json data) {
  require_singular(system, vectors);
  Report report;
  report.data = std::move(data);
  report.table.columns = {"index", "polynomial"};
  Json list = Json::array();
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    list.push_back(polynomial_json(vectors[i]));
    report.table.rows.push_back({std::to_string(i + 1), format_polynomial(vectors[i])});
  }
  report.data["singular_vectors"] = list;
  return report;
}

Report cmd_singular_typea(int n, int r) {
  const auto tp = TypeAParams::make(n, r);
  const DunklSystem system(tp.group(), tp.params());
  Json data;
  describe_model(data, system.group(), system.params());
  data["r"] = r;
  return singular_report(system, typeA_singular(tp), data);
}

Report cmd_singular_wreath(int l, int n, int r, const std::string& k_text, const std::string& c_text) {
  const Scalar k = k_text.empty() ? Scalar(0) : parse_scalar(k_text, l);
  auto c = parse_scalar_list(c_text, l);
  if (c.empty()) {
    c.assign(static_cast<std::size_t>(l - 1), Scalar(0));
    c[0] = solve_on_er(l, n, r, k, c, 1);
  }
  const auto w = WreathParams::make(l, n, r, k, c);
  if (!er_residual(w).is_zero()) throw PreconditionError("parameters are not on E_r");
  const DunklSystem system(w.group(), w.params());
  Json data;
  describe_model(data, system.group(), system.params());
  data["r"] = r;
  data["p"] = w.p;
  data["q"] = w.q;
  data["s"] = w.s;
  return singular_report(system, wreath_singular(w), data);
}

Report cmd_singular_solve(const ModelOptions& m, unsigned degree, const Common& common) {
  if (m.group.empty()) throw PreconditionError("--group is required");
  const auto group = ReflectionGroup::parse(m.group);
  const DunklSystem system(group, make_params(group, m), make_tau(m));
  Json data;
  describe_model(data, group, system.params());
  data["degree"] = degree;
  auto report = singular_report(system, generic_singular_solver(system, degree, common.exec()), data);
  report.data["dimension"] = report.table.rows.size();
  return report;
}

Report cmd_quotient(const ModelOptions& m, const Common& common) {
  auto built = build_quotient(m, common);
  Report report;
  report.data = built.description;
  add_finite(report.data, *built.quotient);
  report.table = hilbert_table(*built.quotient);
  return report;
}

Report cmd_hilbert(const ModelOptions& m, const Common& common, bool irreducible) {
  Report report;
  if (irreducible) {
    if (m.group.empty()) throw PreconditionError("--group is required");
    const auto group = ReflectionGroup::parse(m.group);
    const DunklSystem system(group, make_params(group, m), make_tau(m));
    const unsigned cutoff = resolve_cutoff(common, kDefaultCutoff);
    const auto q = irreducible_quotient(system, cutoff, directions_for(group), common.exec());
    describe_model(report.data, group, system.params());
    report.data["cutoff"] = cutoff;
    report.data["hilbert"] = hilbert_json(q.hilbert_series());
    report.table = hilbert_table(q);
    return report;
  }
  auto built = build_quotient(m, common);
  report.data = built.description;
  report.data["hilbert"] = hilbert_json(built.quotient->hilbert_series());
  report.table = hilbert_table(*built.quotient);
  return report;
}

Report cmd_radical(const ModelOptions& m, const Common& common) {
  if (m.group.empty()) throw PreconditionError("--group is required");
  const auto group = ReflectionGroup::parse(m.group);
  const DunklSystem system(group, make_params(group, m), make_tau(m));
  const unsigned cutoff = resolve_cutoff(common, kDefaultCutoff);
  const auto q = irreducible_quotient(system, cutoff, directions_for(group), common.exec());
  Report report;
  describe_model(report.data, group, system.params());
  report.data["lowest_eigenvalue"] = system.lowest_eigenvalue().to_string();
  report.data["cutoff"] = cutoff;
  add_finite(report.data, q);
  Json radical = Json::array();
  for (unsigned d = 0; d <= cutoff; ++d) radical.push_back(q.relations(d).dimension());
  report.data["radical_dimensions"] = radical;
  report.table = hilbert_table(q);
  return report;
}

Report cmd_character(const ModelOptions& m, const Common& common) {
  auto built = build_quotient(m, common);
  const auto& group = built.system->group();
  Report report;
  report.data = built.description;
  report.data["lowest_eigenvalue"] = built.system->lowest_eigenvalue().to_string();
  report.table.columns = {"element", "class_size", "degree", "trace"};
  Json classes = Json::array();
  for (const auto& g : group.conjugacy_class_reps()) {
    const auto series = character_series(*built.quotient, g);
    classes.push_back({{"element", describe(g)}, {"class_size", group.class_size(g)}, {"traces", scalars(series.coefficients)}});
    for (std::size_t d = 0; d < series.coefficients.size(); ++d) {
      report.table.rows.push_back(
          {describe(g), std::to_string(group.class_size(g)), std::to_string(d), series.coefficients[d].to_string()});
    }
  }
  report.data["classes"] = classes;
  return report;
}

Report cmd_gorenstein(const ModelOptions& m, const Common& common) {
  auto built = build_quotient(m, common);
  Report report;
  report.data = built.description;
  add_finite(report.data, *built.quotient);
  report.data["gorenstein"] = gorenstein_check(*built.quotient);
  report.data["irreducible"] = gram_radical_vanishes_on(*built.quotient, common.exec());
  return report;
}

Report cmd_locus_sigma(int l, int n, int r, const std::string& k_text) {
  Report report;
  report.data["l"] = l;
  report.data["n"] = n;
  report.data["r"] = r;
  Json set = Json::array();
  report.table.columns = {"element"};
  for (const auto& x : sigma_r(l, n, r)) {
    set.push_back(to_string(x));
    report.table.rows.push_back({to_string(x)});
  }
  report.data["sigma_r"] = set;
  if (!k_text.empty()) {
    const Scalar k = parse_scalar(k_text, l);
    report.data["k"] = k.to_string();
    report.data["contains"] = k.is_rational() && sigma_r_contains(k.to_rational(), l, n, r);
  }
  return report;
}

Report cmd_locus_er(int l, int n, int r, const std::string& k_text, const std::string& c_text) {
  const Scalar k = k_text.empty() ? Scalar(0) : parse_scalar(k_text, l);
  auto c = parse_scalar_list(c_text, l);
  Report report;
  report.data["l"] = l;
  report.data["n"] = n;
  report.data["r"] = r;
  report.data["k"] = k.to_string();
  if (c.empty()) {
    c.assign(static_cast<std::size_t>(l - 1), Scalar(0));
    c[0] = solve_on_er(l, n, r, k, c, 1);
    report.data["solved_c1"] = c[0].to_string();
  }
  const auto w = WreathParams::make(l, n, r, k, c);
  report.data["c"] = scalars(w.c);
  report.data["residual"] = er_residual(w).to_string();
  report.data["on_locus"] = er_residual(w).is_zero();
  return report;
}

Report cmd_support(int n, int r, const std::string& point_text, unsigned samples, const Common& common) {
  const auto tp = TypeAParams::make(n, r);
  std::vector<std::vector<Scalar>> points;
  if (!point_text.empty()) {
    points.push_back(parse_scalar_list(point_text, 1));
  } else {
    std::mt19937_64 rng(common.seed);
    for (unsigned i = 0; i < samples; ++i) points.push_back(sample_support_point(tp, rng));
  }
  Report report;
  report.data["n"] = n;
  report.data["r"] = r;
  report.data["d"] = tp.d();
  if (point_text.empty()) report.data["seed"] = common.seed;
  report.table.columns = {"point", "support", "pattern"};
  Json rows = Json::array();
  bool agree = true;
  for (const auto& p : points) {
    const bool s = support_member(p, tp);
    const bool pat = pattern_member(p, tp);
    agree = agree && s == pat;
    rows.push_back({{"point", scalars(p)}, {"support", s}, {"pattern", pat}});
    std::string text;
    for (std::size_t i = 0; i < p.size(); ++i) text += (i ? " " : "") + p[i].to_string();
    report.table.rows.push_back({text, s ? "true" : "false", pat ? "true" : "false"});
  }
  report.data["points"] = rows;
  report.data["agree"] = agree;
  if (!agree) report.integrity_failure = ("support and pattern predicates disagree");
  return report;
}

Json rank1_point(const Rank1Data& data, bool brute, unsigned order, bool& consistent) {
  Json out = Json::object();
  out["c"] = scalars(data.c());
  Json modules = Json::array();
  for (int p = 0; p < data.l(); ++p) {
    Json mod = Json::object();
    mod["p"] = p;
    mod["lowest_eigenvalue"] = data.lowest_eigenvalue(p).to_string();
    const auto b = data.b(p);
    mod["b"] = b ? Json(*b) : Json(nullptr);
    std::vector<int> mult;
    for (int m = 0; m < data.l(); ++m) mult.push_back(data.multiplicity(p, m));
    mod["multiplicity"] = mult;
    const unsigned top = b ? static_cast<unsigned>(2 * *b) : order;
    Json characters = Json::array();
    for (int j = 0; j < data.l(); ++j) characters.push_back(scalars(data.character(p, j, top)));
    mod["character"] = characters;
    if (brute) {
      const auto bf = rank1_brute_force(data, p, top);
      bool ok = bf.multiplicity == mult;
      const auto system = data.system(p);
      const auto& group = system.group();
      for (int j = 0; j < data.l() && ok; ++j) {
        const auto series = character_series(bf.quotient, group.power(group.generators().front(), j));
        ok = series.coefficients == data.character(p, j, top) && series.shift == data.lowest_eigenvalue(p);
      }
      mod["brute_force_agrees"] = ok;
      consistent = consistent && ok;
    }
    modules.push_back(mod);
  }
  out["modules"] = modules;
  return out;
}

Report cmd_rank1(int l, const std::string& c_text, bool brute, const Common& common) {
  const Rank1Data data(l, parse_scalar_list(c_text, l));
  const unsigned order = resolve_cutoff(common, 10);
  bool consistent = true;
  Report report;
  report.data["l"] = l;
  report.data["cutoff"] = order;
  const Json point = rank1_point(data, brute, order, consistent);
  report.data["c"] = point["c"];
  report.data["modules"] = point["modules"];
  report.table.columns = {"p", "m", "multiplicity", "gap", "b", "dim_L"};
  for (int p = 0; p < l; ++p) {
    const auto b = data.b(p);
    for (int m = 0; m < l; ++m) {
      const auto gap = data.gap(p, m);
      report.table.rows.push_back({std::to_string(p), std::to_string(m), std::to_string(data.multiplicity(p, m)),
                                   gap ? std::to_string(*gap) : "", b ? std::to_string(*b) : "inf",
                                   b ? std::to_string(*b) : "inf"});
    }
  }
  if (!consistent) report.integrity_failure = ("rank one brute force disagrees with the classification");
  return report;
}

// Runs the points of a sweep, concurrently when OpenMP is on; a failing
// point records its error and the others carry on. Records come back in grid
// order.
std::vector<Json> run_points(std::size_t count, const std::function<Json(std::size_t)>& point) {
  std::vector<Json> records(count);
  const auto total = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < total; ++i) {
    const auto u = static_cast<std::size_t>(i);
    try {
      records[u] = point(u);
    } catch (const std::exception& e) {
      records[u] = Json{{"error", e.what()}};
    }
  }
  return records;
}

Report cmd_sweep_sigma(int l, int n, int r, const std::string& k_list, const Common& common) {
  const auto ks = parse_scalar_list(k_list, l);
  const unsigned cutoff = resolve_cutoff(common, kDefaultCutoff);
  auto records = run_points(ks.size(), [&](std::size_t i) {
    const Scalar& k = ks[i];
    std::vector<Scalar> c(static_cast<std::size_t>(l - 1));
    c[0] = solve_on_er(l, n, r, k, c, 1);
    const auto w = WreathParams::make(l, n, r, k, c);
    const DunklSystem system(w.group(), w.params());
    const auto q = submodule_closure(system, wreath_singular(w), cutoff);
    const auto decision = finite_dim_decide(q);
    const bool in_sigma = sigma_r_contains(k, w);
    const bool finite = decision.status == FiniteStatus::finite;
    Json rec = {{"k", k.to_string()}, {"c", scalars(c)}, {"in_sigma_r", in_sigma},
                {"status", finite ? "finite" : "unknown_at_cutoff"}};
    if (finite) rec["dimension"] = decision.dimension;
    rec["hilbert"] = hilbert_json(q.hilbert_series());
    rec["consistent"] = in_sigma != finite;
    return rec;
  });
  Report report;
  report.data["kind"] = "sigma";
  report.data["l"] = l;
  report.data["n"] = n;
  report.data["r"] = r;
  report.data["cutoff"] = cutoff;
  report.table.columns = {"k", "in_sigma_r", "status", "dimension", "consistent"};
  bool consistent = true;
  for (const auto& rec : records) {
    if (rec.contains("error")) {
      report.table.rows.push_back({"", "", "error", "", rec["error"].get<std::string>()});
      continue;
    }
    consistent = consistent && rec["consistent"].get<bool>();
    report.table.rows.push_back({rec["k"], rec["in_sigma_r"].get<bool>() ? "true" : "false", rec["status"],
                                 rec.contains("dimension") ? std::to_string(rec["dimension"].get<std::size_t>()) : "",
                                 rec["consistent"].get<bool>() ? "true" : "false"});
  }
  report.data["points"] = records;
  report.data["consistent"] = consistent;
  if (!consistent) report.integrity_failure = ("finite-dimensionality disagrees with the sigma_r criterion");
  return report;
}

Report cmd_sweep_rank1(int l, long b_max, const Common& common) {
  struct Point {
    int p, m;
    long b;
  };
  std::vector<Point> grid;
  for (int p = 0; p < l; ++p) {
    for (int m = 0; m < l; ++m) {
      if (m == p) continue;
      for (long b = 1; b <= b_max; ++b) {
        if (((b - (p - m)) % l + l) % l == 0) grid.push_back({p, m, b});
      }
    }
  }
  const unsigned order = resolve_cutoff(common, 10);
  auto records = run_points(grid.size(), [&](std::size_t i) {
    const auto& pt = grid[i];
    // Fixed background values for the other c_j; the first c_j that moves
    // f_c(e^p) - f_c(e^m) is solved for.
    std::vector<Scalar> base;
    for (int j = 1; j < l; ++j) base.emplace_back(Rational(1, j + 4));
    std::vector<Scalar> c;
    for (int j = 1; j < l && c.empty(); ++j) {
      try {
        c = rank1_resonant_parameters(l, pt.p, pt.m, pt.b, base, j);
      } catch (const DomainError&) {
      }
    }
    if (c.empty()) throw DomainError("no parameter moves this gap");
    bool consistent = true;
    Json rec = rank1_point(Rank1Data(l, c), true, order, consistent);
    rec["p"] = pt.p;
    rec["m"] = pt.m;
    rec["b"] = pt.b;
    rec["consistent"] = consistent;
    return rec;
  });
  Report report;
  report.data["kind"] = "rank1";
  report.data["l"] = l;
  report.data["b_max"] = b_max;
  report.table.columns = {"p", "m", "b", "c", "consistent"};
  bool consistent = true;
  for (const auto& rec : records) {
    if (rec.contains("error")) {
      report.table.rows.push_back({"", "", "", "error", rec["error"].get<std::string>()});
      continue;
    }
    consistent = consistent && rec["consistent"].get<bool>();
    report.table.rows.push_back({std::to_string(rec["p"].get<int>()), std::to_string(rec["m"].get<int>()),
                                 std::to_string(rec["b"].get<long>()), rec["c"].dump(),
                                 rec["consistent"].get<bool>() ? "true" : "false"});
  }
  report.data["points"] = records;
  report.data["consistent"] = consistent;
  if (!consistent) report.integrity_failure = ("rank one brute force disagrees with the classification");
  return report;
}

Report cmd_euler(const ModelOptions& m, unsigned order, const Common& common) {
  auto built = build_quotient(m, common, order);
  const auto result = euler_character_identity(*built.quotient, built.generators, static_cast<unsigned>(built.r), order);
  Report report;
  report.data = built.description;
  report.data["order"] = order;
  report.data["h0"] = result.h0.to_string();
  report.data["exterior_shifts"] = scalars(result.exterior_shifts);
  report.table.columns = {"element", "matches"};
  Json classes = Json::array();
  for (const auto& row : result.classes) {
    std::vector<Scalar> residual;
    for (std::size_t i = 0; i < row.computed.size(); ++i) residual.push_back(row.computed[i] - row.closed_form[i]);
    classes.push_back({{"element", describe(row.element)},
                       {"computed", scalars(row.computed)},
                       {"alternating_sum", scalars(row.alternating)},
                       {"closed_form", scalars(row.closed_form)},
                       {"residual", scalars(residual)},
                       {"matches", row.matches}});
    report.table.rows.push_back({describe(row.element), row.matches ? "true" : "false"});
  }
  report.data["classes"] = classes;
  report.data["ok"] = result.ok;
  if (!result.ok) report.integrity_failure = ("Euler character identity fails");
  return report;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with rational Cherednik algebras of S_n, G(l,1,n) and Z/l"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--format", common.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--cutoff", common.cutoff, std::string("top degree computed; default from ") + kCutoffVariable);
  app.add_option("--seed", common.seed, "seed for randomized sampling");
  app.add_flag("--parallel", common.parallel, "use the OpenMP kernels");
  app.add_option("--threads", common.threads, "OpenMP thread count");

  ModelOptions model;
  std::string poly;
  std::optional<int> direction;
  auto* dunkl = app.add_subcommand("dunkl", "apply Dunkl operators to a polynomial");
  add_model_options(dunkl, model, false);
  dunkl->add_option("--poly", poly, "polynomial, e.g. 3/2*x1^2*x2 - x3")->required();
  dunkl->add_option("--direction", direction, "coordinate direction (1-based); all when absent");

  int n = 0, r = 0, l = 0;
  std::string k_text, c_text;
  unsigned degree = 1;
  auto* singular = app.add_subcommand("singular", "singular vectors");
  singular->require_subcommand(1);
  singular->fallthrough();
  auto* sing_a = singular->add_subcommand("typeA", "residue formula for S(n) at k = r/n");
  sing_a->add_option("--n", n)->required();
  sing_a->add_option("--r", r)->required();
  auto* sing_w = singular->add_subcommand("wreath", "residue formula for G(l,1,n) on E_r");
  sing_w->add_option("--l", l)->required();
  sing_w->add_option("--n", n)->required();
  sing_w->add_option("--r", r)->required();
  sing_w->add_option("--k", k_text);
  sing_w->add_option("--c", c_text, "c_1,..,c_{l-1}; c_1 is solved onto E_r when absent");
  auto* sing_s = singular->add_subcommand("solve", "kernel of all Dunkl operators in one degree");
  add_model_options(sing_s, model, false);
  sing_s->add_option("--degree", degree)->required();

  auto* quotient = app.add_subcommand("quotient", "M_c modulo the degree-r singular vectors");
  add_model_options(quotient, model, true);
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of a quotient");
  add_model_options(hilbert, model, true);
  bool irreducible = false;
  hilbert->add_flag("--irreducible", irreducible, "use the irreducible quotient L_c instead");
  auto* radical = app.add_subcommand("radical", "irreducible quotient from the Gram radicals");
  add_model_options(radical, model, false);
  auto* character = app.add_subcommand("character", "graded traces of conjugacy class representatives");
  add_model_options(character, model, true);
  auto* gorenstein = app.add_subcommand("gorenstein", "Gorenstein and irreducibility tests of a finite quotient");
  add_model_options(gorenstein, model, true);

  auto* locus = app.add_subcommand("locus", "parameter loci");
  locus->require_subcommand(1);
  locus->fallthrough();
  auto* sigma = locus->add_subcommand("sigma", "the set Sigma_r");
  sigma->add_option("--l", l)->required();
  sigma->add_option("--n", n)->required();
  sigma->add_option("--r", r)->required();
  sigma->add_option("--k", k_text);
  auto* er = locus->add_subcommand("er", "residual of the E_r equation");
  er->add_option("--l", l)->required();
  er->add_option("--n", n)->required();
  er->add_option("--r", r)->required();
  er->add_option("--k", k_text);
  er->add_option("--c", c_text);

  std::string point;
  unsigned samples = 100;
  auto* support = app.add_subcommand("support", "support predicates for S(n) at k = r/n");
  support->add_option("--n", n)->required();
  support->add_option("--r", r)->required();
  support->add_option("--point", point, "comma-separated coordinates; random sample when absent");
  support->add_option("--samples", samples, "number of random points");

  bool brute = false;
  auto* rank1 = app.add_subcommand("rank1", "rank one classification");
  rank1->add_option("--l", l)->required();
  rank1->add_option("--c", c_text);
  rank1->add_flag("--brute", brute, "cross-check against the Gram radical");

  std::string kind;
  std::string k_list;
  long b_max = 4;
  auto* sweep = app.add_subcommand("sweep", "parameter grids");
  sweep->add_option("kind", kind, "sigma or rank1")->required()->check(CLI::IsMember({"sigma", "rank1"}));
  sweep->add_option("--l", l)->required();
  sweep->add_option("--n", n);
  sweep->add_option("--r", r);
  sweep->add_option("--k", k_list, "comma-separated k values");
  sweep->add_option("--b-max", b_max, "largest gap in the rank one grid");

  unsigned order = 12;
  auto* euler = app.add_subcommand("euler-check", "Euler characteristic identity for the standard resolution");
  add_model_options(euler, model, true);
  euler->add_option("--order", order, "series order");

  std::vector<std::string> argv_storage{"cherednik"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

#ifdef _OPENMP
  if (common.threads > 0) omp_set_num_threads(common.threads);
#endif

  try {
    Report report;
    if (dunkl->parsed()) {
      report = cmd_dunkl(model, poly, direction);
    } else if (sing_a->parsed()) {
      report = cmd_singular_typea(n, r);
    } else if (sing_w->parsed()) {
      report = cmd_singular_wreath(l, n, r, k_text, c_text);
    } else if (sing_s->parsed()) {
      report = cmd_singular_solve(model, degree, common);
    } else if (quotient->parsed()) {
      report = cmd_quotient(model, common);
    } else if (hilbert->parsed()) {
      report = cmd_hilbert(model, common, irreducible);
    } else if (radical->parsed()) {
      report = cmd_radical(model, common);
    } else if (character->parsed()) {
      report = cmd_character(model, common);
    } else if (gorenstein->parsed()) {
      report = cmd_gorenstein(model, common);
    } else if (sigma->parsed()) {
      report = cmd_locus_sigma(l, n, r, k_text);
    } else if (er->parsed()) {
      report = cmd_locus_er(l, n, r, k_text, c_text);
    } else if (support->parsed()) {
      report = cmd_support(n, r, point, samples, common);
    } else if (rank1->parsed()) {
      report = cmd_rank1(l, c_text, brute, common);
    } else if (sweep->parsed()) {
      report = kind == "sigma" ? cmd_sweep_sigma(l, n, r, k_list, common) : cmd_sweep_rank1(l, b_max, common);
    } else if (euler->parsed()) {
      report = cmd_euler(model, order, common);
    }
    emit(report, common.format, out);
    if (!report.integrity_failure.empty()) {
      err << "integrity failure: " << report.integrity_failure << "\n";
      return kExitIntegrity;
    }
    return kExitOk;
  } catch (const IntegrityError& e) {
    err << "integrity failure: " << e.what() << "\n";
    return kExitIntegrity;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace cherednik::cli
