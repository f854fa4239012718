#include "atoric_cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "atoric/ingredients.hpp"
#include "atoric/io.hpp"
#include "atoric/labels.hpp"
#include "atoric/numerics.hpp"

namespace atoric::cli {

namespace {

/// Bad input detected after argument parsing: reported, exit 1.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

io::IngredientDocument load_document(const std::string& path) {
  try {
    return io::parse_document(read_file(path));
  } catch (const io::DocumentError& e) {
    throw InputError(path + ": " + e.what());
  }
}

CompleteIngredient load_valid(const std::string& path) {
  io::IngredientDocument doc = load_document(path);
  ValidationReport report = io::validate_document(doc);
  if (!report.ok()) throw InputError(path + ": " + report.to_string());
  return io::to_ingredient(doc);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

long parse_long(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw InputError(std::string("bad ") + what + " entry '" + s + "'");
  }
}

std::string fmt_double(double v) {
  std::ostringstream out;
  out << std::setprecision(12) << v;
  return out.str();
}

std::string fmt_vec(const std::array<double, 2>& v) { return "(" + fmt_double(v[0]) + ", " + fmt_double(v[1]) + ")"; }

int cmd_validate(const std::string& path, std::ostream& out) {
  ValidationReport report = io::validate_document(load_document(path));
  out << report.to_string();
  return report.ok() ? kExitOk : kExitInvalid;
}

int cmd_label_verify(const std::string& path, int order, std::ostream& out) {
  io::IngredientDocument doc = load_document(path);
  if (order > doc.order) {
    throw InputError("--order " + std::to_string(order) + " exceeds the file order " + std::to_string(doc.order));
  }
  const int n = order > 0 ? order : doc.order;
  bool all_ok = true;
  for (std::size_t i = 0; i < doc.labels.size(); ++i) {
    const io::RawLabel& raw = doc.labels[i];
    std::vector<Jet2> s, g;
    for (const auto& j : raw.s) s.push_back(j.truncated(n));
    for (const auto& j : raw.g) g.push_back(j.truncated(n));
    out << "label " << i + 1 << " (m=" << raw.m << ", order " << n << "): ";
    try {
      LabelReport report = verify_label(raw.m, s, g);
      all_ok = all_ok && report.ok();
      out << (report.ok() ? "pass\n" : "fail\n");
      for (const auto& v : report.violations) out << "  " << to_string(v.condition) << " " << v.detail << "\n";
    } catch (const LabelShapeError& e) {
      all_ok = false;
      out << "fail\n  shape " << e.what() << "\n";
    }
  }
  return all_ok ? kExitOk : kExitInvalid;
}

int cmd_label_normalize(const std::string& path, std::ostream& out, std::ostream& err) {
  io::IngredientDocument doc = load_document(path);
  for (auto& raw : doc.labels) {
    try {
      FocusLabel normal = orbit_normal_form(FocusLabel::make(raw.m, raw.s, raw.g));
      raw.s = normal.s_reps();
      raw.g = normal.g_all();
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  err << "note: the normal form is the least cyclic rotation under a fixed coefficient order; "
         "it is a convention, not an invariant of its own\n";
  out << io::serialize_document(doc);
  return kExitOk;
}

int cmd_eq(const std::string& a, const std::string& b, int bound, std::ostream& out) {
  CompleteIngredient ia = load_valid(a);
  CompleteIngredient ib = load_valid(b);
  auto witness = ingredients_equivalent(ia, ib, bound);
  if (!witness) {
    out << "none within bound " << bound << "\n";
    return kExitInvalid;
  }
  out << "equivalent\nlinear " << to_string(witness->linear) << "\ntranslate " << to_string(witness->translate) << "\n";
  return kExitOk;
}

int cmd_act(const std::string& path, const std::string& perm, const std::string& sign, const std::string& delta,
            std::ostream& out, std::ostream& err) {
  CompleteIngredient ingredient = load_valid(path);
  const std::size_t f = ingredient.node_count();
  CompleteIngredient result;
  if (!perm.empty()) {
    Permutation rho;
    for (const auto& p : split(perm, ',')) {
      long v = parse_long(p, "--perm");
      if (v < 1) throw InputError("--perm entries are 1-based");
      rho.push_back(static_cast<std::size_t>(v - 1));
    }
    try {
      require_permutation(rho, f);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    result = act_perm(rho, ingredient);
  } else {
    SignVector sv;
    for (const auto& s : split(sign, ',')) {
      if (s != "+" && s != "-") throw InputError("--sign entries must be + or -");
      sv.sigma.push_back(s == "+" ? 1 : -1);
    }
    if (sv.sigma.size() != f) throw InputError("--sign needs " + std::to_string(f) + " entries");
    if (delta.empty()) {
      sv.delta_k.assign(f, 0);
    } else {
      for (const auto& d : split(delta, ',')) sv.delta_k.push_back(parse_long(d, "--delta"));
      if (sv.delta_k.size() != f) throw InputError("--delta needs " + std::to_string(f) + " entries");
    }
    if (!sign_action_admissible(sv, ingredient)) {
      err << "warning: the sign action is not admissible here; the flipped diagram fails validation\n";
    }
    result = act_sign(sv, ingredient);
  }
  out << io::serialize_ingredient(result);
  return kExitOk;
}

int cmd_lattice(int m, const std::string& z, std::ostream& out) {
  auto parts = split(z, ',');
  if (parts.size() != 2) throw InputError("--z expects X,Y");
  double x = 0, y = 0;
  try {
    x = std::stod(parts[0]);
    y = std::stod(parts[1]);
  } catch (const std::logic_error&) {
    throw InputError("--z expects two numbers");
  }
  LatticeBasis basis;
  try {
    basis = standard_lattice(m, {x, y});
  } catch (const std::logic_error& e) {
    throw InputError(e.what());
  }
  out << "v1 " << fmt_vec(basis.v1) << "\nv2 " << fmt_vec(basis.v2) << "\n";
  return kExitOk;
}

int cmd_monodromy(int m, int steps, std::ostream& out) {
  MonodromyResult r = node_monodromy(m, LoopDirection::kCounterclockwise, 0.5, steps);
  IntMatrix2 shifted{r.matrix.a - 1, r.matrix.b, r.matrix.c, r.matrix.d - 1};
  SmithForm2 snf = smith_normal_form(shifted);
  out << to_string(r.matrix) << "\n";
  out << "max deviation " << fmt_double(r.max_deviation) << "\n";
  out << "elementary divisors of M - I: " << snf.d1 << ", " << snf.d2 << "\n";
  return kExitOk;
}

/// Splits "X;Y+1/2X^2" into the two components of a polynomial map.
JetMap parse_map(const std::string& text, int order) {
  auto parts = split(text, ';');
  if (parts.size() != 2) throw InputError("--e expects two components separated by ';'");
  return {io::parse_polynomial(parts[0], order), io::parse_polynomial(parts[1], order)};
}

int cmd_roundtrip(const std::string& stilde, int order, const std::string& e_text, double h, std::ostream& out) {
  if (order < 1 || order > 4) throw InputError("--order must be in 1..4");
  if (!(h > 0.0) || h > 1e-2) throw InputError("--spacing must be in (0, 1e-2]");
  // The exact reference needs terms up to the working order of the maps.
  constexpr int kWork = 8;
  Jet2 s_tilde(kWork);
  JetMap e = JetMap::identity(kWork);
  try {
    s_tilde = io::parse_polynomial(stilde, kWork);
    if (!e_text.empty()) e = parse_map(e_text, kWork);
  } catch (const std::invalid_argument& ex) {
    throw InputError(ex.what());
  }
  std::vector<JetMap> e_list{e};
  numerics::GridSpec grid{h, 0.1};
  auto a2 = numerics::regularized_action(s_tilde, e_list, grid);
  auto recovered = numerics::extract_relative_series(a2, e_list, order);
  Jet2 expected = compose(s_tilde, inverse(e)).truncated(order);
  expected.set(0, 0, Coeff(0));
  const double error = numerics::max_coefficient_error(recovered.front().rep(), expected);
  const double tolerance = order <= 2 ? 1e-3 : order == 3 ? 1e-2 : 1e-1;
  out << "expected  " << expected.to_string() << "\n";
  out << "recovered " << recovered.front().rep().to_string() << "\n";
  out << "max coefficient error " << fmt_double(error) << " (tolerance " << fmt_double(tolerance) << ")\n";
  return error < tolerance ? kExitOk : kExitInvalid;
}

int cmd_render(const std::string& path, const std::string& output, std::ostream& out) {
  io::IngredientDocument doc = load_document(path);
  std::string svg = io::render_svg(doc.base);
  std::ofstream file(output, std::ios::binary);
  if (!file) throw InputError("cannot write " + output);
  file << svg;
  out << "wrote " << output << "\n";
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Almost-toric ingredients: labels, base diagrams, equivalence and numerics", "atoric"};
  app.require_subcommand(1);

  std::string file, file2, output, perm, sign, delta, z, stilde, e_map;
  int order = 0, bound = 3, m = 1, steps = 3600, k_order = 2;
  double h = 1e-2;

  auto* validate = app.add_subcommand("validate", "Check a document and print the full report");
  validate->add_option("file", file, "Ingredient document")->required();

  auto* label_verify = app.add_subcommand("label-verify", "Check the label axioms of every label in a document");
  label_verify->add_option("file", file, "Ingredient document")->required();
  label_verify->add_option("--order", order, "Verify at a lower truncation order")->check(CLI::PositiveNumber);

  auto* label_normalize = app.add_subcommand("label-normalize", "Rewrite every label in its orbit normal form");
  label_normalize->add_option("file", file, "Ingredient document")->required();

  auto* eq = app.add_subcommand("eq", "Search for an equivalence between two ingredients");
  eq->add_option("file1", file, "First ingredient")->required();
  eq->add_option("file2", file2, "Second ingredient")->required();
  eq->add_option("--bound", bound, "Entry bound for the linear part")->check(CLI::NonNegativeNumber);

  auto* act = app.add_subcommand("act", "Apply a node permutation or a sign vector");
  act->add_option("file", file, "Ingredient document")->required();
  auto* perm_opt = act->add_option("--perm", perm, "1-based permutation, e.g. 2,1,3");
  auto* sign_opt = act->add_option("--sign", sign, "Signs, e.g. +,-,+");
  auto* delta_opt = act->add_option("--delta", delta, "Twisting index corrections, e.g. 0,1,0");
  perm_opt->excludes(sign_opt);
  delta_opt->needs(sign_opt);

  auto* lattice = app.add_subcommand("lattice", "Print the standard period lattice basis near a node");
  lattice->add_option("--m", m, "Multiplicity")->required()->check(CLI::PositiveNumber);
  lattice->add_option("--z", z, "Point X,Y with 0 < |z| < 1")->required();

  auto* monodromy = app.add_subcommand("monodromy", "Transport the lattice once around a node");
  monodromy->add_option("--m", m, "Multiplicity")->required()->check(CLI::PositiveNumber);
  monodromy->add_option("--steps", steps, "Loop subdivisions")->check(CLI::Range(8, 10000000));

  auto* roundtrip = app.add_subcommand("roundtrip", "Recover a relative action series from sampled values");
  roundtrip->add_option("--stilde", stilde, "Polynomial such as 2tY+X^2")->required();
  roundtrip->add_option("--order", k_order, "Order of the recovered series (1..4)")->required();
  roundtrip->add_option("--e", e_map, "Chart as two components, e.g. \"X;Y+1/2X^2\"");
  roundtrip->add_option("--spacing", h, "Grid spacing");

  auto* render = app.add_subcommand("render", "Draw the base diagram as SVG");
  render->add_option("file", file, "Ingredient document")->required();
  render->add_option("-o,--output", output, "Output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(file, out);
    if (label_verify->parsed()) return cmd_label_verify(file, order, out);
    if (label_normalize->parsed()) return cmd_label_normalize(file, out, err);
    if (eq->parsed()) return cmd_eq(file, file2, bound, out);
    if (act->parsed()) {
      if (perm.empty() && sign.empty()) {
        err << "error: act needs --perm or --sign\n";
        return kExitUsage;
      }
      return cmd_act(file, perm, sign, delta, out, err);
    }
    if (lattice->parsed()) return cmd_lattice(m, z, out);
    if (monodromy->parsed()) return cmd_monodromy(m, steps, out);
    if (roundtrip->parsed()) return cmd_roundtrip(stilde, k_order, e_map, h, out);
    if (render->parsed()) return cmd_render(file, output, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace atoric::cli
