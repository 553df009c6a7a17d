#include "genusforms/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace genusforms::io {

json to_json(const Int& x) { return x.str(); }

std::string rat_to_string(const Rat& x) {
  if (is_integer(x)) return num(x).str();
  return num(x).str() + "/" + den(x).str();
}

json to_json(const Rat& x) { return rat_to_string(x); }

json to_json(const PolyQ& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
  return arr;
}

json to_json(const QuadFormZ& q) { return json::array({to_json(q.a), to_json(q.b), to_json(q.c)}); }

json to_json(const QuadFormP& q) { return json::array({to_json(q.a), to_json(q.b), to_json(q.c)}); }

json to_json(const Mat2Z& m) {
  return json::array({json::array({to_json(m.m00), to_json(m.m01)}),
                      json::array({to_json(m.m10), to_json(m.m11)})});
}

json to_json(const MumfordDiv& d) { return json{{"u", to_json(d.u)}, {"v", to_json(d.v)}}; }

json to_json(const GenusCoset& c) {
  json h0 = json::array();
  for (const auto& v : c.h0) h0.push_back(to_json(v));
  return json{{"modulus", to_json(c.modulus)}, {"rep", to_json(c.rep)}, {"h0", h0}};
}

json to_json(const PsiCertificate& c) {
  json arr = json::array();
  for (const auto& w : c.witnesses)
    arr.push_back(json{{"epsilon", to_json(w.eps)}, {"p", to_json(w.p)}, {"r", to_json(w.r)}});
  return arr;
}

json to_json(const DescentValue& v) {
  return json{{"rep", to_json(v.rep)}, {"sign_norm", to_json(v.sign_norm)}};
}

json to_json(const SieveCell& cell) {
  bool unknown = cell.method == CellMethod::Unknown;
  json j{{"n", to_json(cell.n)},
         {"f_of_n", to_json(cell.f_of_n)},
         {"classification", unknown ? "Unknown" : to_string(cell.cls)},
         {"method", to_string(cell.method)}};
  if (cell.witness) j["witness"] = to_json(*cell.witness);
  return j;
}

json to_json(const CongruenceClass& c) {
  return json{{"residue", to_json(c.residue)},
              {"modulus", to_json(c.modulus)},
              {"witnesses", to_json(c.witnesses)}};
}

json to_json(const CriterionResult& c) {
  json classes = json::array();
  for (const auto& cls : c.classes) classes.push_back(to_json(cls));
  json excluded = json::array();
  for (const auto& r : c.excluded_roots) excluded.push_back(to_json(r));
  return json{{"classes", classes}, {"excluded_roots", excluded}};
}

json to_json(const DensityReport& r) {
  json counts;
  for (const auto& [cls, cnt] : r.counts) counts[to_string(cls)] = to_json(cnt);
  counts["Unknown"] = to_json(r.unknown);
  json prefix = json::array();
  for (const auto& [bound, frac] : r.prefix)
    prefix.push_back(json{{"n", to_json(bound)}, {"trivial_fraction", to_json(frac)}});
  return json{{"n_max", to_json(r.n_max)},
              {"symmetric", r.symmetric},
              {"counts", counts},
              {"trivial_fraction", to_json(r.trivial_fraction)},
              {"prefix", prefix},
              {"monotone_nonincreasing", r.monotone_nonincreasing}};
}

Int parse_int(const std::string& s) {
  if (s.empty()) throw UsageError("empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw UsageError("bad integer literal: " + s);
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw UsageError("bad integer literal: " + s);
  }
  return Int(s);
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  Int n = parse_int(s.substr(0, slash));
  Int d = parse_int(s.substr(slash + 1));
  if (d == 0) throw UsageError("zero denominator: " + s);
  return Rat(n, d);
}

// ---- polynomial expression parser ------------------------------------------

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }

  PolyQ parse_expr() {
    PolyQ acc = parse_term();
    while (true) {
      if (eat('+'))
        acc = acc + parse_term();
      else if (eat('-'))
        acc = acc - parse_term();
      else
        break;
    }
    return acc;
  }

  PolyQ parse_term() {
    PolyQ acc = parse_unary();
    while (true) {
      if (eat('*')) {
        acc = acc * parse_unary();
      } else if (eat('/')) {
        PolyQ d = parse_unary();
        if (d.degree() != 0) throw UsageError("division requires a nonzero constant divisor");
        acc = acc * PolyQ(Rat(1) / d.coeff(0));
      } else {
        break;
      }
    }
    return acc;
  }

  // '^' binds tighter than unary minus: -x^2 == -(x^2).
  PolyQ parse_unary() {
    if (eat('-')) return PolyQ(0) - parse_unary();
    if (eat('+')) return parse_unary();
    return parse_power();
  }

  PolyQ parse_power() {
    PolyQ base = parse_primary();
    if (eat('^')) {
      Int e = parse_number();
      PolyQ acc(1);
      for (Int i = 0; i < e; ++i) acc = acc * base;
      return acc;
    }
    return base;
  }

  PolyQ parse_primary() {
    skip();
    if (pos >= s.size()) throw UsageError("unexpected end of polynomial expression");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      PolyQ inner = parse_expr();
      if (!eat(')')) throw UsageError("missing ')' in polynomial expression");
      return inner;
    }
    if (c == 'x' || c == 'X') {
      ++pos;
      return PolyQ::variable();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return PolyQ(Rat(parse_number()));
    throw UsageError(std::string("unexpected character '") + c + "' in polynomial expression");
  }

  Int parse_number() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw UsageError("expected a number in polynomial expression");
    return Int(s.substr(start, pos - start));
  }
};

}  // namespace

PolyQ parse_poly(const std::string& expr) {
  Parser p{expr};
  PolyQ out = p.parse_expr();
  p.skip();
  if (p.pos != expr.size()) throw UsageError("trailing input in polynomial expression: " + expr);
  return out;
}

QuadFormZ parse_form_z(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 3) throw UsageError("integer form must be 'a,b,c'");
  return {parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2])};
}

QuadFormP parse_form_poly(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) parts.push_back(item);
  if (parts.size() != 3) throw UsageError("polynomial form must be 'A;B;C'");
  return {parse_poly(parts[0]), parse_poly(parts[1]), parse_poly(parts[2])};
}

std::string poly_to_string(const PolyQ& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int d = p.degree(); d >= 0; --d) {
    Rat c = p.coeff(static_cast<std::size_t>(d));
    if (c == 0) continue;
    bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    bool unit = (a == 1) && d > 0;
    if (!unit) out += rat_to_string(a);
    if (d > 0) {
      if (!unit) out += "*";
      out += "x";
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  return out;
}

std::string cells_to_csv(const std::vector<SieveCell>& cells) {
  std::string out = "n,f_of_n,classification,method,witness\n";
  for (const auto& c : cells) {
    bool unknown = c.method == CellMethod::Unknown;
    out += c.n.str() + "," + c.f_of_n.str() + ",";
    out += unknown ? "Unknown" : to_string(c.cls);
    out += ",";
    out += to_string(c.method);
    out += ",";
    if (c.witness) {
      json w = to_json(*c.witness);
      std::string ws = w.dump();
      out += "\"" + ws + "\"";  // matrix JSON contains commas
    }
    out += "\n";
  }
  return out;
}

namespace {

const char* cell_color(const SieveCell& c) {
  if (c.method == CellMethod::Unknown) return "#b9b9b9";
  switch (c.cls) {
    case CellClass::Trivial: return "#d94f4f";
    case CellClass::NonTrivial: return "#f0d264";
    case CellClass::DegenerateSquare: return "#5b8fd9";
    case CellClass::RootOfF: return "#24356e";
  }
  return "#b9b9b9";
}

bool cell_hatched(const SieveCell& c) {
  return c.method != CellMethod::Unknown && c.cls == CellClass::Trivial;
}

bool cell_gridded(const SieveCell& c) {
  return c.method != CellMethod::Unknown &&
         (c.cls == CellClass::DegenerateSquare || c.cls == CellClass::RootOfF);
}

}  // namespace

std::string cells_to_svg(const std::vector<SieveCell>& cells, const Int& lo) {
  const int cell = 26, gap = 2, margin = 8;
  const int cols = 5;
  std::size_t rows = (cells.size() + cols - 1) / cols;
  int width = 2 * margin + cols * cell + (cols - 1) * gap;
  int height = 2 * margin + static_cast<int>(rows) * cell + (static_cast<int>(rows) - 1) * gap;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  svg << "<defs>\n"
      << "<pattern id=\"hatch\" width=\"6\" height=\"6\" patternTransform=\"rotate(45)\" "
         "patternUnits=\"userSpaceOnUse\"><line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" "
         "stroke=\"#7a1f1f\" stroke-width=\"1.5\"/></pattern>\n"
      << "<pattern id=\"grid\" width=\"6\" height=\"6\" patternUnits=\"userSpaceOnUse\">"
         "<path d=\"M 6 0 L 0 0 0 6\" fill=\"none\" stroke=\"#1d3557\" "
         "stroke-width=\"1\"/></pattern>\n"
      << "</defs>\n";

  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::size_t row = i / cols, col = i % cols;
    int x = margin + static_cast<int>(col) * (cell + gap);
    int y = margin + static_cast<int>(row) * (cell + gap);
    const SieveCell& c = cells[i];
    svg << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell << "\" height=\"" << cell
        << "\" fill=\"" << cell_color(c) << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    if (cell_hatched(c))
      svg << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell << "\" height=\"" << cell
          << "\" fill=\"url(#hatch)\" stroke=\"none\"/>\n";
    if (cell_gridded(c))
      svg << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell << "\" height=\"" << cell
          << "\" fill=\"url(#grid)\" stroke=\"none\"/>\n";
    Int n = lo + Int(static_cast<long long>(i));
    svg << "<text x=\"" << x + cell / 2 << "\" y=\"" << y + cell / 2 + 4
        << "\" font-size=\"9\" font-family=\"monospace\" text-anchor=\"middle\" "
           "fill=\"#111111\">"
        << n.str() << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file: " + path);
  out << contents;
}

}  // namespace genusforms::io
