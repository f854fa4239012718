#include "atoric/io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

namespace atoric::io {

using nlohmann::json;

namespace {

[[noreturn]] void structural(const std::string& path, const std::string& message) {
  throw DocumentError(path + ": " + message, 0, 0, path);
}

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) structural(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) structural(path, std::string("missing field '") + key + "'");
  return *it;
}

long as_integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) structural(path, "expected an integer");
  return j.get<long>();
}

Rational as_rational(const json& j, const std::string& path) {
  if (!j.is_string()) structural(path, "expected an exact rational written as a string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    structural(path, e.what());
  }
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) structural(path, "expected an array");
  return j;
}

Point as_point(const json& j, const std::string& path) {
  const json& arr = as_array(j, path);
  if (arr.size() != 2) structural(path, "expected [x, y]");
  return {as_rational(arr[0], path + "[0]"), as_rational(arr[1], path + "[1]")};
}

Jet2 as_jet(const json& j, int order, const std::string& path) {
  Jet2 jet(order);
  const json& terms = as_array(j, path);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string tp = path + "[" + std::to_string(i) + "]";
    const json& t = as_array(terms[i], tp);
    if (t.size() != 4) structural(tp, "expected [p, q, rational_part, tau_part]");
    long p = as_integer(t[0], tp + "[0]");
    long q = as_integer(t[1], tp + "[1]");
    if (p < 0 || q < 0 || p + q > order) structural(tp, "monomial outside truncation order " + std::to_string(order));
    if (!jet.coeff(static_cast<int>(p), static_cast<int>(q)).is_zero()) structural(tp, "duplicate monomial");
    jet.set(static_cast<int>(p), static_cast<int>(q), Coeff(as_rational(t[2], tp + "[2]"), as_rational(t[3], tp + "[3]")));
  }
  return jet;
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < std::min(byte > 0 ? byte - 1 : 0, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::string quoted(const Rational& r) { return "\"" + rational_to_string(r) + "\""; }

void write_jet(std::ostringstream& out, const Jet2& jet, const std::string& indent) {
  auto terms = jet.terms();
  if (terms.empty()) {
    out << "[]";
    return;
  }
  out << "[\n";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    out << indent << "  [" << t.p << ", " << t.q << ", " << quoted(t.c.rational_part()) << ", "
        << quoted(t.c.tau_part()) << "]" << (i + 1 < terms.size() ? "," : "") << "\n";
  }
  out << indent << "]";
}

}  // namespace

DocumentError::DocumentError(const std::string& message, std::size_t line, std::size_t column, std::string path)
    : std::runtime_error(message), line_(line), column_(column), path_(std::move(path)) {}

IngredientDocument parse_document(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte);
    std::ostringstream msg;
    msg << "syntax error at line " << line << ", column " << col << ": " << e.what();
    throw DocumentError(msg.str(), line, col);
  }

  IngredientDocument doc;
  const json& format = field(root, "format", "$");
  if (!format.is_string() || format.get<std::string>() != kFormatName) {
    structural("$.format", std::string("expected \"") + kFormatName + "\"");
  }
  doc.version = static_cast<int>(as_integer(field(root, "version", "$"), "$.version"));
  if (doc.version != kFormatVersion) structural("$.version", "unsupported version " + std::to_string(doc.version));
  long order = as_integer(field(root, "order", "$"), "$.order");
  if (order < 1 || order > 64) structural("$.order", "truncation order must be in 1..64");
  doc.order = static_cast<int>(order);

  const json& base = field(root, "base", "$");
  const json& polygon = as_array(field(base, "polygon", "$.base"), "$.base.polygon");
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    doc.base.polygon.push_back(as_point(polygon[i], "$.base.polygon[" + std::to_string(i) + "]"));
  }
  const json& nodes = as_array(field(base, "nodes", "$.base"), "$.base.nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string np = "$.base.nodes[" + std::to_string(i) + "]";
    Node node;
    node.pos = as_point(field(nodes[i], "pos", np), np + ".pos");
    node.mult = static_cast<int>(as_integer(field(nodes[i], "mult", np), np + ".mult"));
    const json& eigen = as_array(field(nodes[i], "eigen", np), np + ".eigen");
    if (eigen.size() != 2) structural(np + ".eigen", "expected [ex, ey]");
    node.eigen = {as_integer(eigen[0], np + ".eigen[0]"), as_integer(eigen[1], np + ".eigen[1]")};
    const json& cut = field(nodes[i], "cut", np);
    if (!cut.is_string() || (cut != "+" && cut != "-")) structural(np + ".cut", "expected \"+\" or \"-\"");
    node.cut = cut == "+" ? CutSign::kPlus : CutSign::kMinus;
    doc.base.nodes.push_back(node);
  }

  const json& labels = as_array(field(root, "labels", "$"), "$.labels");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::string lp = "$.labels[" + std::to_string(i) + "]";
    RawLabel raw;
    long m = as_integer(field(labels[i], "m", lp), lp + ".m");
    if (m < 1 || m > 1024) structural(lp + ".m", "multiplicity must be in 1..1024");
    raw.m = static_cast<int>(m);
    const json& s = as_array(field(labels[i], "s", lp), lp + ".s");
    for (std::size_t u = 0; u < s.size(); ++u) {
      raw.s.push_back(as_jet(s[u], doc.order, lp + ".s[" + std::to_string(u) + "]"));
    }
    const json& g = as_array(field(labels[i], "g", lp), lp + ".g");
    for (std::size_t u = 0; u < g.size(); ++u) {
      const std::string rp = lp + ".g[" + std::to_string(u) + "]";
      const json& row = as_array(g[u], rp);
      if (row.size() != static_cast<std::size_t>(raw.m)) structural(rp, "row length must equal m");
      for (std::size_t v = 0; v < row.size(); ++v) {
        raw.g.push_back(as_jet(row[v], doc.order, rp + "[" + std::to_string(v) + "]"));
      }
    }
    if (raw.s.size() != static_cast<std::size_t>(raw.m)) structural(lp + ".s", "needs m action series");
    if (g.size() != static_cast<std::size_t>(raw.m)) structural(lp + ".g", "needs m rows");
    doc.labels.push_back(std::move(raw));
  }

  const json& k = as_array(field(root, "k", "$"), "$.k");
  for (std::size_t i = 0; i < k.size(); ++i) doc.k.push_back(as_integer(k[i], "$.k[" + std::to_string(i) + "]"));
  return doc;
}

std::string serialize_document(const IngredientDocument& doc) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"format\": \"" << kFormatName << "\",\n";
  out << "  \"version\": " << doc.version << ",\n";
  out << "  \"order\": " << doc.order << ",\n";
  out << "  \"base\": {\n";
  out << "    \"polygon\": [";
  for (std::size_t i = 0; i < doc.base.polygon.size(); ++i) {
    const Point& p = doc.base.polygon[i];
    out << (i ? ", " : "") << "[" << quoted(p.x) << ", " << quoted(p.y) << "]";
  }
  out << "],\n";
  out << "    \"nodes\": [";
  for (std::size_t i = 0; i < doc.base.nodes.size(); ++i) {
    const Node& n = doc.base.nodes[i];
    out << (i ? "," : "") << "\n      {\"pos\": [" << quoted(n.pos.x) << ", " << quoted(n.pos.y)
        << "], \"mult\": " << n.mult << ", \"eigen\": [" << n.eigen.x << ", " << n.eigen.y << "], \"cut\": \""
        << (n.cut == CutSign::kPlus ? "+" : "-") << "\"}";
  }
  out << (doc.base.nodes.empty() ? "]\n" : "\n    ]\n");
  out << "  },\n";
  out << "  \"labels\": [";
  for (std::size_t i = 0; i < doc.labels.size(); ++i) {
    const RawLabel& l = doc.labels[i];
    out << (i ? "," : "") << "\n    {\n      \"m\": " << l.m << ",\n      \"s\": [";
    for (std::size_t u = 0; u < l.s.size(); ++u) {
      out << (u ? ", " : "") << "\n        ";
      write_jet(out, l.s[u], "        ");
    }
    out << "\n      ],\n      \"g\": [";
    for (int u = 0; u < l.m; ++u) {
      out << (u ? "," : "") << "\n        [";
      for (int v = 0; v < l.m; ++v) {
        out << (v ? ", " : "") << "\n          ";
        write_jet(out, l.g[static_cast<std::size_t>(u * l.m + v)], "          ");
      }
      out << "\n        ]";
    }
    out << "\n      ]\n    }";
  }
  out << (doc.labels.empty() ? "],\n" : "\n  ],\n");
  out << "  \"k\": [";
  for (std::size_t i = 0; i < doc.k.size(); ++i) out << (i ? ", " : "") << doc.k[i];
  out << "]\n}\n";
  return out.str();
}

ValidationReport validate_document(const IngredientDocument& doc) {
  ValidationReport report = validate_diagram(doc.base);
  const std::size_t f = doc.base.nodes.size();
  if (doc.labels.size() != f) {
    report.add("ingredient", "compatibility", std::to_string(doc.labels.size()) + " labels for " + std::to_string(f) + " nodes");
  }
  if (doc.k.size() != f) {
    report.add("ingredient", "compatibility",
               std::to_string(doc.k.size()) + " twisting indices for " + std::to_string(f) + " nodes");
  }
  for (std::size_t i = 0; i < doc.labels.size(); ++i) {
    const RawLabel& raw = doc.labels[i];
    const std::string src = "label " + std::to_string(i + 1);
    try {
      LabelReport lr = verify_label(raw.m, raw.s, raw.g);
      for (const auto& v : lr.violations) report.add(src, to_string(v.condition), v.detail);
    } catch (const LabelShapeError& e) {
      report.add(src, "shape", e.what());
    }
    if (i < f && raw.m != doc.base.nodes[i].mult) {
      report.add(src, "compatibility",
                 "multiplicity " + std::to_string(raw.m) + " but node " + std::to_string(i + 1) + " has multiplicity " +
                     std::to_string(doc.base.nodes[i].mult));
    }
  }
  return report;
}

CompleteIngredient to_ingredient(const IngredientDocument& doc) {
  CompleteIngredient out;
  out.base = doc.base;
  out.k = doc.k;
  for (const auto& raw : doc.labels) out.labels.push_back(FocusLabel::make(raw.m, raw.s, raw.g));
  return out;
}

IngredientDocument to_document(const CompleteIngredient& ingredient) {
  IngredientDocument doc;
  doc.base = ingredient.base;
  doc.k = ingredient.k;
  doc.order = ingredient.labels.empty() ? kDefaultOrder : ingredient.labels.front().order();
  for (const auto& label : ingredient.labels) {
    doc.labels.push_back({label.multiplicity(), label.s_reps(), label.g_all()});
  }
  return doc;
}

CompleteIngredient parse_ingredient(const std::string& text) { return to_ingredient(parse_document(text)); }

std::string serialize_ingredient(const CompleteIngredient& ingredient) {
  return serialize_document(to_document(ingredient));
}

Jet2 parse_polynomial(const std::string& text, int order) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  Jet2 out(order);
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("polynomial '" + text + "' at offset " + std::to_string(i) + ": " + why);
  };
  auto read_uint = [&]() {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) fail("expected digits");
    return s.substr(start, i - start);
  };
  if (s == "0") return out;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail("expected + or -");
    }
    first = false;
    Rational coeff = 1;
    bool have_factor = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::string num = read_uint();
      std::string den = "1";
      if (i < s.size() && s[i] == '/') {
        ++i;
        den = read_uint();
      }
      coeff = parse_rational(num + "/" + den);
      have_factor = true;
    }
    bool tau = false;
    int p = 0, q = 0;
    while (i < s.size() && s[i] != '+' && s[i] != '-') {
      if (s[i] == '*') {
        ++i;
        continue;
      }
      char c = s[i++];
      if (c == 't') {
        if (tau) fail("tau appears twice in one term");
        tau = true;
      } else if (c == 'X' || c == 'Y') {
        int power = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          power = std::stoi(read_uint());
        }
        (c == 'X' ? p : q) += power;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      have_factor = true;
    }
    if (!have_factor) fail("empty term");
    Coeff c = tau ? Coeff(0, sign * coeff) : Coeff(sign * coeff);
    if (p + q <= order) out.add(p, q, c);
  }
  return out;
}

namespace {

struct Viewport {
  double min_x, min_y, span, size;
  double sx(const Rational& x) const { return (x.get_d() - min_x) / span * size; }
  double sy(const Rational& y) const { return size - (y.get_d() - min_y) / span * size; }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string render_svg(const BaseDiagram& d) {
  constexpr double kSize = 400.0;
  double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
  if (!d.polygon.empty()) {
    min_x = max_x = d.polygon[0].x.get_d();
    min_y = max_y = d.polygon[0].y.get_d();
    for (const auto& p : d.polygon) {
      min_x = std::min(min_x, p.x.get_d());
      max_x = std::max(max_x, p.x.get_d());
      min_y = std::min(min_y, p.y.get_d());
      max_y = std::max(max_y, p.y.get_d());
    }
  }
  double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
  const double margin = 0.05 * span;
  Viewport vp{min_x - margin, min_y - margin, span + 2 * margin, kSize};

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";
  out << "<path class=\"polygon\" fill=\"#eef3fb\" stroke=\"#1a1a1a\" stroke-width=\"1.5\" d=\"";
  for (std::size_t i = 0; i < d.polygon.size(); ++i) {
    out << (i ? " L " : "M ") << fmt(vp.sx(d.polygon[i].x)) << " " << fmt(vp.sy(d.polygon[i].y));
  }
  out << (d.polygon.empty() ? "" : " Z") << "\"/>\n";

  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    const Node& node = d.nodes[i];
    const double cx = vp.sx(node.pos.x);
    const double cy = vp.sy(node.pos.y);
    auto segment = [&](const IntVec& dir, const char* cls, const char* dash) {
      auto hit = ray_exit(d.polygon, node.pos, dir);
      if (!hit) return;
      out << "<line class=\"" << cls << "\" x1=\"" << fmt(cx) << "\" y1=\"" << fmt(cy) << "\" x2=\""
          << fmt(vp.sx(hit->point.x)) << "\" y2=\"" << fmt(vp.sy(hit->point.y))
          << "\" stroke=\"#555555\" stroke-width=\"1\" stroke-dasharray=\"" << dash << "\"/>\n";
    };
    segment(node.cut_direction(), "cut", "6,4");
    segment(-node.cut_direction(), "eigenline", "1,3");
    constexpr double r = 5.0;
    out << "<g class=\"node\" stroke=\"#b00020\" stroke-width=\"2\">"
        << "<line x1=\"" << fmt(cx - r) << "\" y1=\"" << fmt(cy - r) << "\" x2=\"" << fmt(cx + r) << "\" y2=\""
        << fmt(cy + r) << "\"/>"
        << "<line x1=\"" << fmt(cx - r) << "\" y1=\"" << fmt(cy + r) << "\" x2=\"" << fmt(cx + r) << "\" y2=\""
        << fmt(cy - r) << "\"/></g>\n";
    out << "<text class=\"node-label\" x=\"" << fmt(cx + 7) << "\" y=\"" << fmt(cy - 7)
        << "\" font-family=\"sans-serif\" font-size=\"11\">c" << i + 1 << " (m=" << node.mult << ")</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace atoric::io
