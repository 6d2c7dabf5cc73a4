#include "app.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "goodline/cartier.hpp"
#include "goodline/cover.hpp"
#include "goodline/cubic.hpp"
#include "goodline/error.hpp"
#include "goodline/quadrics.hpp"
#include "goodline/zeta.hpp"

namespace goodline::cli {

namespace {

using json = nlohmann::json;

struct Options {
  std::string field = "GF(2)";
  std::string over;
  std::string cubic;
  std::string line;
  std::string quintic;
  std::string quadric;
  std::size_t hyperbolic = 0;
  unsigned m_max = 0;
  unsigned identity_m = 4;
  int threads = 0;
  std::optional<std::uint64_t> budget;
  bool text = false;
};

struct Context {
  Options opt;
  FieldPtr field;
  json inputs = json::object();
};

json element_list(const Field& f, const std::vector<Field::Value>& v) {
  json out = json::array();
  for (auto x : v) out.push_back(f.format(x));
  return out;
}

json matrix_json(const Field& f, const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(element_list(f, m.row(r)));
  return out;
}

json big_list(const std::vector<BigInt>& v) {
  json out = json::array();
  for (const auto& x : v) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
      out.push_back(static_cast<std::int64_t>(x));
    else
      out.push_back(x.str());
  }
  return out;
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw Error(ErrorKind::Usage, "missing_option", std::string("missing required option ") + flag);
}

CubicThreefold cubic(Context& c) {
  require(c.opt.cubic, "--cubic");
  c.inputs["cubic"] = c.opt.cubic;
  return CubicThreefold::parse(c.opt.cubic, c.field);
}

// Field for lines: --over if given, else --field.
FieldPtr line_field(Context& c) {
  if (c.opt.over.empty()) return c.field;
  auto f = parse_field_literal(c.opt.over);
  c.inputs["over"] = f->describe();
  return f;
}

LineInP4 line(Context& c) {
  require(c.opt.line, "--line");
  c.inputs["line"] = c.opt.line;
  return parse_line(c.opt.line, line_field(c));
}

GoodLineFrame frame(Context& c, const CubicThreefold& x) { return good_line_frame(x, line(c)); }

json frame_json(const GoodLineFrame& fr) {
  const auto& y = default_variables(3, "y");
  return {{"Q0", fr.q0.str(y)},
          {"Q1", fr.q1.str(y)},
          {"R", fr.r.str(y)},
          {"change", matrix_json(*fr.field, fr.change)}};
}

json counts_json(const CountTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows) rows.push_back({{"m", r.m}, {"N", r.n}, {"Ntilde", r.ntilde}});
  return {{"q", t.field->cardinality()}, {"counts", rows}};
}

json identity_json(const std::vector<IdentityRow>& rows) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back({{"m", r.m}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"N", r.n}, {"Ntilde", r.ntilde}, {"pass", r.pass}});
  return out;
}

json weil_json(const LPolynomial& l) {
  const auto w = weil_check(l);
  return {{"pass", w.pass}, {"max_deviation", static_cast<double>(w.max_deviation)},
          {"distinct_roots", w.roots.size()}};
}

CountTable counts(Context& c, const GoodLineFrame& fr, unsigned default_m) {
  const unsigned m = c.opt.m_max ? c.opt.m_max : default_m;
  c.inputs["m_max"] = m;
  CoverBudget b;
  if (c.opt.budget) b.max_extension_size = *c.opt.budget;
  return count_curve_and_cover(fr, m, b);
}

struct ZetaData {
  LPolynomial lc, lct;
  CountTable table;
};

ZetaData zeta_data(Context& c, const GoodLineFrame& fr) {
  auto table = counts(c, fr, 11);
  std::vector<std::uint64_t> n, nt;
  for (const auto& r : table.rows) {
    n.push_back(r.n);
    nt.push_back(r.ntilde);
  }
  const std::uint64_t q = fr.field->cardinality();
  // Smooth plane quintic: g = 6; the étale double cover has genus 2g - 1.
  return {l_polynomial_from_counts(q, 6, n), l_polynomial_from_counts(q, 11, nt), std::move(table)};
}

json l_json(const LPolynomial& l, std::uint64_t p) {
  return {{"coefficients", big_list(l.coeffs)},
          {"degree", l.degree()},
          {"functional_equation", l.satisfies_functional_equation()},
          {"p_rank", p_rank_from_l(l, p)},
          {"weil", weil_json(l)}};
}

std::vector<Field::Value> parse_elements(const std::string& text, const FieldPtr& f) {
  std::vector<Field::Value> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i)
    if (i == text.size() || text[i] == ',') {
      out.push_back(parse_element(std::string_view(text).substr(start, i - start), f));
      start = i + 1;
    }
  return out;
}

using Handler = std::function<json(Context&)>;

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> h{
      {"smooth", [](Context& c) { return json{{"smooth", is_smooth_cubic(cubic(c))}}; }},
      {"hermitian",
       [](Context& c) {
         const auto x = cubic(c);
         json r{{"hermitian", is_hermitian(x)}};
         if (!x.field()->is_char2()) r["note"] = "Hermitian cubics are defined in characteristic 2 only";
         return r;
       }},
      {"lines",
       [](Context& c) {
         const auto x = cubic(c);
         LineBudget b;
         if (c.opt.budget) b.max_field_size = *c.opt.budget;
         const auto f = line_field(c);
         json lines = json::array();
         for (const auto& l : enumerate_lines(x, f, b)) lines.push_back(l.str());
         return json{{"count", lines.size()}, {"lines", lines}};
       }},
      {"classify-line",
       [](Context& c) {
         const auto x = cubic(c);
         const auto cls = classify_line(x, line(c));
         return json{{"class", to_string(cls.tag)}, {"reason", to_string(cls.reason)}};
       }},
      {"discriminant",
       [](Context& c) {
         const auto x = cubic(c);
         const auto fr = frame(c, x);
         const Form h = discriminant_quintic(fr);
         json r = frame_json(fr);
         r["discriminant"] = h.str(default_variables(3, "y"));
         r["degree"] = h.degree();
         r["smooth"] = !h.is_zero() && projective_is_empty(jacobian_ideal(h));
         r["etale"] = is_etale(fr);
         return r;
       }},
      {"cover-count",
       [](Context& c) {
         const auto x = cubic(c);
         return counts_json(counts(c, frame(c, x), 6));
       }},
      {"zeta",
       [](Context& c) {
         const auto x = cubic(c);
         const auto fr = frame(c, x);
         const auto z = zeta_data(c, fr);
         const auto p = fr.field->characteristic();
         return json{{"L_C", big_list(z.lc.coeffs)},
                     {"L_Ctilde", big_list(z.lct.coeffs)},
                     {"C", l_json(z.lc, p)},
                     {"Ctilde", l_json(z.lct, p)},
                     {"counts", counts_json(z.table)["counts"]}};
       }},
      {"prym",
       [](Context& c) {
         const auto x = cubic(c);
         const auto fr = frame(c, x);
         const auto z = zeta_data(c, fr);
         const auto lp = prym_l_polynomial(z.lc, z.lct);
         const auto p = fr.field->characteristic();
         ThreefoldBudget tb;
         c.inputs["identity_m"] = c.opt.identity_m;
         return json{{"L_C", big_list(z.lc.coeffs)},
                     {"L_Ctilde", big_list(z.lct.coeffs)},
                     {"L_Prym", big_list(lp.coeffs)},
                     {"Prym", l_json(lp, p)},
                     {"prym_dimension", lp.genus},
                     {"identity", identity_json(verify_ij_identity(x, fr, c.opt.identity_m, tb))}};
       }},
      {"verify-identity",
       [](Context& c) {
         const auto x = cubic(c);
         const auto fr = frame(c, x);
         const unsigned m = c.opt.m_max ? c.opt.m_max : 4;
         c.inputs["m_max"] = m;
         ThreefoldBudget tb;
         if (c.opt.budget) tb.max_points = *c.opt.budget;
         const auto rows = verify_ij_identity(x, fr, m, tb);
         bool pass = true;
         for (const auto& r : rows) pass = pass && r.pass;
         return json{{"identity", identity_json(rows)}, {"pass", pass}};
       }},
      {"cartier",
       [](Context& c) {
         Form h(c.field, 3);
         if (!c.opt.quintic.empty()) {
           c.inputs["quintic"] = c.opt.quintic;
           h = parse_homogeneous_form(c.opt.quintic, c.field, default_variables(3, "y"));
         } else {
           const auto x = cubic(c);
           h = discriminant_quintic(frame(c, x));
         }
         const PlaneQuintic pq(h);
         const Matrix m = cartier_matrix(pq);
         const auto& f = *h.field();
         const auto fwd = cartier_ranks(f, m, TwistOrder::Frobenius);
         const auto opp = cartier_ranks(f, m, TwistOrder::Opposite);
         json basis = json::array();
         for (const auto& [k, l] : cartier_basis()) basis.push_back({k, l});
         const auto& ch = pq.chart();
         return json{{"matrix", matrix_json(f, m)},
                     {"basis", basis},
                     {"chart", {{"fixed", ch.fixed}, {"x", ch.xvar}, {"y", ch.yvar}}},
                     {"p_rank", fwd.p_rank},
                     {"p_rank_opposite_twist", opp.p_rank},
                     {"a_number", fwd.a_number}};
       }},
      {"quadric-parity",
       [](Context& c) {
         std::vector<Field::Value> upper;
         std::size_t dim = 0;
         if (c.opt.hyperbolic) {
           dim = 2 * c.opt.hyperbolic;
           c.inputs["hyperbolic"] = c.opt.hyperbolic;
           for (std::size_t i = 0; i < dim; ++i)
             for (std::size_t j = i; j < dim; ++j) upper.push_back(i % 2 == 0 && j == i + 1 ? 1 : 0);
         } else {
           require(c.opt.quadric, "--quadric or --hyperbolic");
           c.inputs["quadric"] = c.opt.quadric;
           upper = parse_elements(c.opt.quadric, c.field);
           while (dim * (dim + 1) / 2 < upper.size()) ++dim;
         }
         const QuadraticSpace q(c.field, dim, upper);
         const auto pr = polar_and_smoothness(q);
         QuadricBudget b;
         if (c.opt.budget) b.max_field_size = *c.opt.budget;
         const auto gens = enumerate_generators(q, b);
         const auto rep = verify_generator_parity(*c.field, gens);
         json viol = json::array();
         for (const auto& v : rep.violations) viol.push_back({{"i", v.i}, {"j", v.j}, {"dim", v.dim}});
         return json{{"dimension", dim},
                     {"smooth", pr.smooth},
                     {"generators", gens.size()},
                     {"class_sizes", rep.class_sizes},
                     {"violations", viol},
                     {"pass", rep.pass()}};
       }},
  };
  return h;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--field", o.field, "base field, e.g. GF(2) or GF(2^2)");
  sub->add_option("--threads", o.threads, "OpenMP threads (0 = default)")->check(CLI::NonNegativeNumber);
  sub->add_option("--budget", o.budget, "override the enumeration budget of the command");
  auto* j = sub->add_flag("--json", "JSON output (default)");
  auto* t = sub->add_flag("--text", o.text, "plain key: value output");
  j->excludes(t);
}

void print_text(const json& j, std::ostream& out, const std::string& prefix = "") {
  for (const auto& [k, v] : j.items()) {
    if (v.is_object())
      print_text(v, out, prefix + k + ".");
    else
      out << prefix << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

const std::map<std::string, std::string>& descriptions() {
  static const std::map<std::string, std::string> d{
      {"smooth", "test the cubic threefold for smoothness"},
      {"hermitian", "test whether the cubic is Hermitian"},
      {"lines", "enumerate the lines on the cubic over a field"},
      {"classify-line", "classify a line as Good, InF0 or NotGood"},
      {"discriminant", "conic bundle frame and discriminant quintic of a good line"},
      {"cover-count", "point counts of the discriminant curve and its double cover"},
      {"zeta", "L-polynomials of the curve and its cover"},
      {"prym", "L-polynomial of the Prym variety and the point-count identity"},
      {"verify-identity", "compare #X with the cover counts over GF(q^m)"},
      {"cartier", "Cartier-Manin matrix, p-rank and a-number of a plane quintic"},
      {"quadric-parity", "maximal isotropic subspaces of a quadric and their two classes"}};
  return d;
}

json error_json(const std::string& command, const std::string& kind, const std::string& code,
                const std::string& message) {
  return {{"command", command},
          {"error", {{"kind", kind}, {"code", code}, {"message", message}}},
          {"version", kVersion}};
}

}  // namespace

Outcome run_command(const std::vector<std::string>& args, std::ostream& out) {
  Options opt;
  CLI::App app{"Cubic threefolds, good lines and their Prym varieties over finite fields", "goodline"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  for (const auto& [name, handler] : handlers()) {
    auto* sub = app.add_subcommand(name, descriptions().at(name));
    add_common(sub, opt);
    if (name == "quadric-parity") {
      sub->add_option("--quadric", opt.quadric, "upper-triangular coefficients c00,c01,...,c11,...");
      sub->add_option("--hyperbolic", opt.hyperbolic, "use x0 x1 + ... + x(2n-2) x(2n-1)");
      continue;
    }
    if (name == "cartier") sub->add_option("--quintic", opt.quintic, "plane quintic in y0, y1, y2");
    sub->add_option("--cubic", opt.cubic, "cubic form in x0..x4");
    if (name == "lines" || name == "classify-line" || name == "discriminant" || name == "cover-count" ||
        name == "zeta" || name == "prym" || name == "verify-identity" || name == "cartier")
      sub->add_option("--over", opt.over, "field of the line (default --field)");
    if (name != "smooth" && name != "hermitian" && name != "lines")
      sub->add_option("--line", opt.line, "a0,...,a4;b0,...,b4");
    if (name == "cover-count" || name == "zeta" || name == "prym" || name == "verify-identity")
      sub->add_option("--m-max", opt.m_max, "largest extension degree")->check(CLI::PositiveNumber);
    if (name == "prym") sub->add_option("--identity-m", opt.identity_m, "extension degrees for the identity table");
  }

  std::vector<const char*> argv{"goodline"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::string command = args.empty() ? "" : args.front();
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return {0, nullptr};
  } catch (const CLI::Success&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return {0, nullptr};
  } catch (const CLI::ParseError& e) {
    auto j = error_json(command, "usage", "usage", e.what());
    out << j.dump(2) << "\n";
    return {exit_code(ErrorKind::Usage), j};
  }

  const auto subs = app.get_subcommands();
  command = subs.front()->get_name();
  Context ctx{opt, nullptr};
  const auto start = std::chrono::steady_clock::now();
  json results;
  try {
    kernels::set_threads(opt.threads);
    ctx.field = parse_field_literal(opt.field);
    for (const auto& [name, handler] : handlers())
      if (name == command) results = handler(ctx);
    kernels::set_threads(0);
  } catch (const Error& e) {
    kernels::set_threads(0);
    auto j = error_json(command, kind_name(e.kind()), e.code(), e.what());
    out << j.dump(2) << "\n";
    return {exit_code(e.kind()), j};
  } catch (const std::exception& e) {
    kernels::set_threads(0);
    auto j = error_json(command, "invariant", "internal", e.what());
    out << j.dump(2) << "\n";
    return {exit_code(ErrorKind::Invariant), j};
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  json report{{"command", command},
              {"field", ctx.field->describe()},
              {"inputs", ctx.inputs},
              {"results", results},
              {"timing_ms", ms},
              {"version", kVersion}};
  if (opt.text)
    print_text(report, out);
  else
    out << report.dump(2) << "\n";
  return {0, report};
}

}  // namespace goodline::cli
