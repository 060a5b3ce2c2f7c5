#pragma once

// Independent reference computations for tests. Nothing here calls into the
// library's quadrature, root finding or tables.

#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "thetakit/vec.hpp"

namespace oracle {

/// Composite midpoint rule with `panels` panels, Kahan-summed.
inline double midpoint_rule(const std::function<double(double)>& f, double a, double b,
                            long panels) {
  const double h = (b - a) / static_cast<double>(panels);
  double sum = 0.0, comp = 0.0;
  for (long i = 0; i < panels; ++i) {
    const double y = f(a + (static_cast<double>(i) + 0.5) * h) - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum * h;
}

/// RMS distance after the best proper rigid motion taking `a` onto `b`
/// (2D Procrustes without scaling or reflection).
inline double procrustes_rms(const std::vector<thetakit::Vec2>& a,
                             const std::vector<thetakit::Vec2>& b) {
  const std::size_t n = a.size();
  thetakit::Vec2 ca, cb;
  for (std::size_t i = 0; i < n; ++i) {
    ca = ca + a[i];
    cb = cb + b[i];
  }
  ca = ca * (1.0 / static_cast<double>(n));
  cb = cb * (1.0 / static_cast<double>(n));
  double sc = 0.0, ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const thetakit::Vec2 p = a[i] - ca, q = b[i] - cb;
    sc += p.x * q.x + p.y * q.y;
    ss += p.x * q.y - p.y * q.x;
  }
  const double phi = std::atan2(ss, sc);
  const double c = std::cos(phi), s = std::sin(phi);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const thetakit::Vec2 p = a[i] - ca, q = b[i] - cb;
    const thetakit::Vec2 r{c * p.x - s * p.y, s * p.x + c * p.y};
    const double dx = r.x - q.x, dy = r.y - q.y;
    acc += dx * dx + dy * dy;
  }
  return std::sqrt(acc / static_cast<double>(n));
}

/// Minimal XML well-formedness check: balanced tags, quoted attributes,
/// known entities, a single root. Returns an empty string when well-formed,
/// otherwise a description of the first problem.
inline std::string xml_problem(const std::string& doc) {
  std::vector<std::string> stack;
  std::size_t i = 0;
  int roots = 0;
  const auto is_name = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == ':' ||
           c == '.';
  };
  const auto check_text = [&](std::size_t from, std::size_t to) -> std::string {
    for (std::size_t k = from; k < to; ++k) {
      if (doc[k] == '<') return "stray '<' at " + std::to_string(k);
      if (doc[k] != '&') continue;
      const std::size_t semi = doc.find(';', k);
      if (semi == std::string::npos || semi > to) return "unterminated entity at " + std::to_string(k);
      const std::string ent = doc.substr(k + 1, semi - k - 1);
      if (ent != "amp" && ent != "lt" && ent != "gt" && ent != "quot" && ent != "apos" &&
          (ent.empty() || ent[0] != '#')) {
        return "unknown entity &" + ent + "; at " + std::to_string(k);
      }
    }
    return {};
  };
  while (i < doc.size()) {
    const std::size_t lt = doc.find('<', i);
    const std::size_t text_end = lt == std::string::npos ? doc.size() : lt;
    if (auto p = check_text(i, text_end); !p.empty()) return p;
    if (stack.empty()) {
      for (std::size_t k = i; k < text_end; ++k) {
        if (!std::isspace(static_cast<unsigned char>(doc[k]))) return "text outside root";
      }
    }
    if (lt == std::string::npos) break;
    if (doc.compare(lt, 4, "<!--") == 0) {
      const std::size_t end = doc.find("-->", lt + 4);
      if (end == std::string::npos) return "unterminated comment";
      i = end + 3;
      continue;
    }
    if (doc.compare(lt, 2, "<?") == 0) {
      const std::size_t end = doc.find("?>", lt + 2);
      if (end == std::string::npos) return "unterminated declaration";
      i = end + 2;
      continue;
    }
    if (doc.compare(lt, 2, "<!") == 0) {
      const std::size_t end = doc.find('>', lt);
      if (end == std::string::npos) return "unterminated doctype";
      i = end + 1;
      continue;
    }
    std::size_t k = lt + 1;
    const bool closing = k < doc.size() && doc[k] == '/';
    if (closing) ++k;
    const std::size_t name_start = k;
    while (k < doc.size() && is_name(doc[k])) ++k;
    const std::string name = doc.substr(name_start, k - name_start);
    if (name.empty()) return "empty tag name at " + std::to_string(lt);
    if (closing) {
      while (k < doc.size() && std::isspace(static_cast<unsigned char>(doc[k]))) ++k;
      if (k >= doc.size() || doc[k] != '>') return "malformed end tag " + name;
      if (stack.empty() || stack.back() != name) return "mismatched </" + name + ">";
      stack.pop_back();
      i = k + 1;
      continue;
    }
    std::vector<std::string> attrs;
    bool self_closing = false;
    for (;;) {
      while (k < doc.size() && std::isspace(static_cast<unsigned char>(doc[k]))) ++k;
      if (k >= doc.size()) return "unterminated tag " + name;
      if (doc[k] == '>') break;
      if (doc[k] == '/') {
        if (k + 1 >= doc.size() || doc[k + 1] != '>') return "bad '/' in tag " + name;
        self_closing = true;
        ++k;
        break;
      }
      const std::size_t an = k;
      while (k < doc.size() && is_name(doc[k])) ++k;
      const std::string attr = doc.substr(an, k - an);
      if (attr.empty()) return "bad attribute in tag " + name;
      for (const auto& seen : attrs) {
        if (seen == attr) return "duplicate attribute " + attr;
      }
      attrs.push_back(attr);
      if (k >= doc.size() || doc[k] != '=') return "attribute without value: " + attr;
      ++k;
      if (k >= doc.size() || (doc[k] != '"' && doc[k] != '\'')) return "unquoted attribute " + attr;
      const char q = doc[k];
      const std::size_t close = doc.find(q, k + 1);
      if (close == std::string::npos) return "unterminated attribute " + attr;
      if (auto p = check_text(k + 1, close); !p.empty()) return p;
      k = close + 1;
    }
    if (stack.empty()) ++roots;
    if (roots > 1) return "more than one root element";
    if (!self_closing) stack.push_back(name);
    i = k + 1;
  }
  if (!stack.empty()) return "unclosed <" + stack.back() + ">";
  if (roots != 1) return "no root element";
  return {};
}

/// Counts of a naive Wavefront OBJ parse: `v`, `l` and `f` records with
/// 1-based indices converted to 0-based.
struct ObjModel {
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::vector<long>> lines;
  std::vector<std::vector<long>> faces;
  std::vector<std::string> comments;
  bool indices_valid = true;
};

inline ObjModel read_obj(const std::string& text) {
  ObjModel m;
  std::istringstream in(text);
  std::string line;
  const auto read_indices = [&](std::istringstream& ls) {
    std::vector<long> idx;
    std::string tok;
    while (ls >> tok) {
      const long v = std::stol(tok.substr(0, tok.find('/')));
      idx.push_back(v - 1);
    }
    return idx;
  };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      m.comments.push_back(line);
      continue;
    }
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "v") {
      std::array<double, 3> p{};
      ls >> p[0] >> p[1] >> p[2];
      m.vertices.push_back(p);
    } else if (tag == "l") {
      m.lines.push_back(read_indices(ls));
    } else if (tag == "f") {
      m.faces.push_back(read_indices(ls));
    }
  }
  const long n = static_cast<long>(m.vertices.size());
  for (const auto* group : {&m.lines, &m.faces}) {
    for (const auto& e : *group) {
      for (long v : e) {
        if (v < 0 || v >= n) m.indices_valid = false;
      }
    }
  }
  return m;
}

/// Rows of a comma-separated file keyed by header name.
inline std::vector<std::map<std::string, double>> read_csv(const std::string& text,
                                                           std::vector<std::string>* header = nullptr) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> cols;
  if (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string c;
    while (std::getline(ls, c, ',')) cols.push_back(c);
  }
  if (header) *header = cols;
  std::vector<std::map<std::string, double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string cell;
    std::map<std::string, double> row;
    for (std::size_t k = 0; k < cols.size() && std::getline(ls, cell, ','); ++k) {
      row[cols[k]] = std::stod(cell);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace oracle
