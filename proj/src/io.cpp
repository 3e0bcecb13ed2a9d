#include "cm/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace cm {

namespace {

// Next line that is neither blank nor a comment.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] void bad(const std::string& what) { throw PreconditionError("malformed input: " + what); }

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  return in;
}

// Fill colors for up to 12 classes, then cycle.
const char* palette(int c) {
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
                                 "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939"};
  return colors[static_cast<std::size_t>(c) % std::size(colors)];
}

}  // namespace

PointSet read_points(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) bad("missing header line");
  long long n = 0, c = 0;
  {
    std::istringstream hs(line);
    std::string rest;
    if (!(hs >> n >> c) || (hs >> rest)) bad("header must be 'n c'");
  }
  if (n < 0 || c < 0) bad("negative n or c");
  PointSet ps;
  ps.num_colors = static_cast<int>(c);
  for (long long i = 0; i < n; ++i) {
    if (!next_line(in, line)) bad("expected " + std::to_string(n) + " points");
    std::istringstream ls(line);
    Point p;
    if (!(ls >> p.x >> p.y)) bad("point line " + std::to_string(i));
    long long col = 0;
    if (c > 0) {
      if (!(ls >> col) || col < 0 || col >= c) bad("color on point line " + std::to_string(i));
      ps.colors.push_back(static_cast<int>(col));
    }
    std::string rest;
    if (ls >> rest) bad("trailing data on point line " + std::to_string(i));
    ps.points.push_back(p);
  }
  if (next_line(in, line)) bad("more than " + std::to_string(n) + " points");
  return ps;
}

PointSet read_points_file(const std::string& path) {
  auto in = open(path);
  return read_points(in);
}

void write_points(std::ostream& out, const PointSet& ps) {
  out << ps.size() << ' ' << ps.num_colors << '\n';
  for (Index i = 0; i < ps.size(); ++i) {
    out << ps[i].x << ' ' << ps[i].y;
    if (ps.colored()) out << ' ' << ps.color(i);
    out << '\n';
  }
}

Matching read_matching(std::istream& in) {
  Matching m;
  std::string line;
  while (next_line(in, line)) {
    std::istringstream ls(line);
    long long a = 0, b = 0;
    std::string rest;
    if (!(ls >> a >> b) || (ls >> rest) || a < 0 || b < 0) bad("matching line '" + line + "'");
    m.edges.push_back({static_cast<Index>(a), static_cast<Index>(b)});
  }
  return m;
}

Matching read_matching_file(const std::string& path) {
  auto in = open(path);
  return read_matching(in);
}

void write_matching(std::ostream& out, const Matching& m) {
  for (const Segment& s : m.edges) out << s.a << ' ' << s.b << '\n';
  out << "# size=" << m.size() << '\n';
}

std::string render_svg(const PointSet& ps, const Matching* m, const Separator* sep) {
  Coord xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  if (ps.size() > 0) {
    xmin = xmax = ps[0].x;
    ymin = ymax = ps[0].y;
    for (const Point& p : ps.points) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
  }
  const Coord span = std::max<Coord>({xmax - xmin, ymax - ymin, 1});
  const Coord pad = span / 20 + 1;
  const double r = static_cast<double>(span) / 150.0 + 0.5;
  const double stroke = r / 3.0;
  // Flip y so the picture matches the usual orientation.
  const auto X = [](const Point& p) { return p.x; };
  const auto Y = [](const Point& p) { return -p.y; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << xmin - pad << ' '
      << -ymax - pad << ' ' << xmax - xmin + 2 * pad << ' ' << ymax - ymin + 2 * pad << "\">\n";
  if (sep != nullptr && sep->path.size() >= 2) {
    out << "<polyline fill=\"none\" stroke=\"#555\" stroke-width=\"" << stroke
        << "\" stroke-dasharray=\"" << 4 * stroke << ' ' << 2 * stroke << "\" points=\"";
    for (std::size_t i = 0; i < sep->path.size(); ++i) {
      out << (i ? " " : "") << X(ps[sep->path[i]]) << ',' << Y(ps[sep->path[i]]);
    }
    out << "\"/>\n";
  }
  if (m != nullptr) {
    for (const Segment& s : m->edges) {
      out << "<line x1=\"" << X(ps[s.a]) << "\" y1=\"" << Y(ps[s.a]) << "\" x2=\"" << X(ps[s.b])
          << "\" y2=\"" << Y(ps[s.b]) << "\" stroke=\"#000\" stroke-width=\"" << stroke << "\"/>\n";
    }
  }
  for (Index i = 0; i < ps.size(); ++i) {
    out << "<circle cx=\"" << X(ps[i]) << "\" cy=\"" << Y(ps[i]) << "\" r=\"" << r
        << "\" fill=\"" << (ps.colored() ? palette(ps.color(i)) : "#000") << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace cm
