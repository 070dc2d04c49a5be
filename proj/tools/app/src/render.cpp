#include "wbk/app/render.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

namespace wbk::app {

namespace {

// ---------------------------------------------------------------- geometry

struct Window {
  std::vector<Rational> lo, hi;  // per axis
};

/// Finite coordinates of all regions, padded by an eighth of the span.
Window window_for(std::size_t dim, const std::vector<const Region*>& regions) {
  Window w;
  for (std::size_t k = 0; k < dim; ++k) {
    std::optional<Rational> lo, hi;
    for (const Region* r : regions)
      for (const Box& b : r->boxes())
        for (const Scalar* s : {&b.iv[k].lo, &b.iv[k].hi}) {
          if (!s->is_finite()) continue;
          if (!lo || s->value() < *lo) lo = s->value();
          if (!hi || s->value() > *hi) hi = s->value();
        }
    if (!lo) lo = hi = Rational(0);
    Rational pad = (*hi - *lo) / 8;
    if (sgn(pad) == 0) pad = Rational(1, 2);
    Rational l = *lo - pad, h = *hi + pad;
    l.canonicalize();
    h.canonicalize();
    w.lo.push_back(l);
    w.hi.push_back(h);
  }
  return w;
}

Region clip(const Region& r, const Window& w) {
  Box frame;
  for (std::size_t k = 0; k < w.lo.size(); ++k) frame.iv.push_back(Interval::closed(w.lo[k], w.hi[k]));
  return intersect(r, Region::from_box(frame));
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

/// Maps world coordinates into a fixed pixel frame; y grows upwards.
class Canvas {
 public:
  static constexpr double kWidth = 480, kHeight = 360, kMargin = 40;

  Canvas(Rational x0, Rational x1, Rational y0, Rational y1)
      : x0_(x0.get_d()), x1_(x1.get_d()), y0_(y0.get_d()), y1_(y1.get_d()) {}

  double x(const Rational& v) const { return kMargin + (v.get_d() - x0_) / (x1_ - x0_) * kWidth; }
  double y(const Rational& v) const { return kMargin + kHeight - (v.get_d() - y0_) / (y1_ - y0_) * kHeight; }

  void raw(const std::string& s) { body_ << "  " << s << "\n"; }

  std::string finish(const std::string& title) const {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth + 2 * kMargin) << "\" height=\""
        << num(kHeight + 2 * kMargin + 20) << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
        << "  <title>" << xml_escape(title) << "</title>\n"
        << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << body_.str() << "</svg>\n";
    return out.str();
  }

 private:
  double x0_, x1_, y0_, y1_;
  std::ostringstream body_;
};

struct Style {
  std::string fill, stroke, extra;
};

void draw_boxes_2d(Canvas& c, const Region& r, const Style& s) {
  for (const Box& b : r.boxes()) {
    const double x0 = c.x(b.iv[0].lo.value()), x1 = c.x(b.iv[0].hi.value());
    const double y0 = c.y(b.iv[1].hi.value()), y1 = c.y(b.iv[1].lo.value());
    const std::string stroke = s.stroke.empty() ? s.fill : s.stroke;
    if (x0 == x1 && y0 == y1) {
      c.raw("<circle cx=\"" + num(x0) + "\" cy=\"" + num(y0) + "\" r=\"3\" fill=\"" + stroke + "\"/>");
    } else if (x0 == x1 || y0 == y1) {
      c.raw("<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x1) + "\" y2=\"" + num(y1) +
            "\" stroke=\"" + stroke + "\" stroke-width=\"2\"" + s.extra + "/>");
    } else {
      c.raw("<rect x=\"" + num(x0) + "\" y=\"" + num(y0) + "\" width=\"" + num(x1 - x0) + "\" height=\"" +
            num(y1 - y0) + "\" fill=\"" + (s.fill.empty() ? "none" : s.fill) + "\"" +
            (s.stroke.empty() ? "" : " stroke=\"" + s.stroke + "\"") + s.extra + "/>");
    }
  }
}

/// A 1D region as a row of segments at height `row`; closed endpoints are
/// filled dots, open ones hollow.
void draw_row_1d(Canvas& c, const Region& r, double row, const std::string& colour, const std::string& label) {
  c.raw("<text x=\"4\" y=\"" + num(row + 4) + "\">" + xml_escape(label) + "</text>");
  for (const Box& b : r.boxes()) {
    const Interval& iv = b.iv[0];
    const double x0 = c.x(iv.lo.value()), x1 = c.x(iv.hi.value());
    if (x0 != x1)
      c.raw("<line x1=\"" + num(x0) + "\" y1=\"" + num(row) + "\" x2=\"" + num(x1) + "\" y2=\"" + num(row) +
            "\" stroke=\"" + colour + "\" stroke-width=\"4\"/>");
    for (const auto& [x, open] : {std::pair{x0, iv.lo_open}, std::pair{x1, iv.hi_open}})
      c.raw("<circle cx=\"" + num(x) + "\" cy=\"" + num(row) + "\" r=\"4\" fill=\"" + (open ? "white" : colour) +
            "\" stroke=\"" + colour + "\"/>");
  }
}

// ---------------------------------------------------------------- regions

struct RegionPicture {
  const Region* k;
  const Region* v;
  const Region* u;
  Region closure_u;
  std::string title;
};

std::string svg_regions(const RegionPicture& p) {
  const std::size_t dim = p.k->dim();
  const Window w = window_for(dim, {p.k, p.v, p.u});
  const Region k = clip(*p.k, w), v = clip(*p.v, w), u = clip(*p.u, w), cl = clip(p.closure_u, w);
  if (dim == 1) {
    Canvas c(w.lo[0], w.hi[0], 0, 1);
    draw_row_1d(c, k, 80, "#888888", "K");
    draw_row_1d(c, v, 160, "#1d4ed8", "V");
    draw_row_1d(c, u, 240, "#ea580c", "U");
    draw_row_1d(c, cl, 320, "#b91c1c", "cl U");
    return c.finish(p.title);
  }
  Canvas c(w.lo[0], w.hi[0], w.lo[1], w.hi[1]);
  draw_boxes_2d(c, k, {"#eeeeee", "#999999", ""});
  draw_boxes_2d(c, u, {"#f4a261", "", " fill-opacity=\"0.7\""});
  draw_boxes_2d(c, cl, {"", "#b91c1c", " stroke-width=\"1.5\""});
  draw_boxes_2d(c, v, {"", "#1d4ed8", " stroke-dasharray=\"6 4\" stroke-width=\"1.5\""});
  return c.finish(p.title);
}

/// Vertices and midpoints of the compressed grid of all regions, one axis.
std::vector<Rational> axis_probes(std::size_t axis, const std::vector<const Region*>& regions) {
  std::set<Rational> cs;
  for (const Region* r : regions)
    for (const Box& b : r->boxes())
      for (const Scalar* s : {&b.iv[axis].lo, &b.iv[axis].hi})
        if (s->is_finite()) cs.insert(s->value());
  std::vector<Rational> pts(cs.begin(), cs.end());
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Rational mid = (pts[i] + pts[i + 1]) / 2;
    mid.canonicalize();
    pts.push_back(mid);
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::string csv_regions(const RegionPicture& p) {
  const std::size_t dim = p.k->dim();
  const std::vector<const Region*> all{p.k, p.v, p.u, &p.closure_u};
  std::ostringstream out;
  out << (dim == 1 ? "x" : "x,y") << ",in_K,in_V,in_U,in_closure_U\n";
  const auto xs = axis_probes(0, all);
  const auto ys = dim == 2 ? axis_probes(1, all) : std::vector<Rational>{Rational(0)};
  for (const Rational& x : xs) {
    for (const Rational& y : ys) {
      std::vector<Rational> pt{x};
      if (dim == 2) pt.push_back(y);
      out << format_rational(x);
      if (dim == 2) out << ',' << format_rational(y);
      for (const Region* r : all) out << ',' << (r->contains(pt) ? 1 : 0);
      out << '\n';
    }
  }
  return out.str();
}

// ---------------------------------------------------------------- functions

struct Curve {
  const PLFunction* f;
  std::string colour, label;
};

std::string svg_functions(const std::vector<Curve>& curves, const std::vector<Rational>& levels,
                          const std::vector<std::pair<Region, std::string>>& marks, const std::string& title) {
  const Region& space = curves.front().f->space().region();
  const Window w = window_for(1, {&space});
  Rational top = 0;
  for (const Curve& cv : curves) top = std::max(top, cv.f->sup());
  for (const Rational& l : levels) top = std::max(top, l);
  if (sgn(top) == 0) top = 1;
  Rational y1 = top * Rational(11, 10);
  y1.canonicalize();
  Canvas c(w.lo[0], w.hi[0], Rational(-1, 4) * top, y1);
  c.raw("<line x1=\"" + num(c.x(w.lo[0])) + "\" y1=\"" + num(c.y(0)) + "\" x2=\"" + num(c.x(w.hi[0])) + "\" y2=\"" +
        num(c.y(0)) + "\" stroke=\"#cccccc\"/>");
  for (const Rational& l : levels) {
    c.raw("<line x1=\"" + num(c.x(w.lo[0])) + "\" y1=\"" + num(c.y(l)) + "\" x2=\"" + num(c.x(w.hi[0])) + "\" y2=\"" +
          num(c.y(l)) + "\" stroke=\"#6b7280\" stroke-dasharray=\"4 3\"/>");
    c.raw("<text x=\"" + num(c.x(w.hi[0]) + 2) + "\" y=\"" + num(c.y(l) + 4) + "\">" + format_rational(l) + "</text>");
  }
  for (const Curve& cv : curves) {
    const PLFunction& f = *cv.f;
    // One polyline per maximal run of linear pieces; isolated points as dots.
    std::string pts;
    std::size_t last = f.breakpoints().size();
    auto flush = [&] {
      if (!pts.empty())
        c.raw("<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + cv.colour + "\" stroke-width=\"2\"/>");
      pts.clear();
    };
    f.for_each_piece([&](std::size_t i) {
      if (i != last) {
        flush();
        pts = num(c.x(f.breakpoints()[i])) + "," + num(c.y(f.values()[i]));
      }
      pts += " " + num(c.x(f.breakpoints()[i + 1])) + "," + num(c.y(f.values()[i + 1]));
      last = i + 1;
    });
    flush();
    for (const Box& b : f.space().region().boxes())
      if (b.iv[0].lo == b.iv[0].hi)
        c.raw("<circle cx=\"" + num(c.x(b.iv[0].lo.value())) + "\" cy=\"" + num(c.y(f.eval(b.iv[0].lo.value()))) +
              "\" r=\"3\" fill=\"" + cv.colour + "\"/>");
  }
  double row = c.y(0) + 16;
  for (const auto& [region, label] : marks) {
    draw_row_1d(c, region, row, "#0f766e", label);
    row += 16;
  }
  return c.finish(title);
}

std::string csv_functions(const std::vector<std::pair<std::string, PLFunction>>& columns) {
  std::set<Rational> xs;
  for (const auto& [name, f] : columns) xs.insert(f.breakpoints().begin(), f.breakpoints().end());
  std::vector<Rational> pts(xs.begin(), xs.end());
  const Region& space = columns.front().second.space().region();
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Rational mid = (pts[i] + pts[i + 1]) / 2;
    mid.canonicalize();
    const Rational probe[1] = {mid};
    if (space.contains(probe)) pts.push_back(mid);
  }
  std::sort(pts.begin(), pts.end());
  std::ostringstream out;
  out << "x";
  for (const auto& [name, f] : columns) out << ',' << name;
  out << '\n';
  for (const Rational& x : pts) {
    out << format_rational(x);
    for (const auto& [name, f] : columns) out << ',' << format_rational(f.eval(x));
    out << '\n';
  }
  return out.str();
}

std::string render_function(const FunctionInstance& fi, RenderFormat format) {
  std::vector<PLFunction> cuts;
  for (const Rational& l : fi.levels) {
    if (sgn(l) <= 0) throw UsageError("cutdown levels must be positive");
    cuts.push_back(cutdown(fi.f, l));
  }
  if (format == RenderFormat::csv) {
    std::vector<std::pair<std::string, PLFunction>> cols{{"f", fi.f}};
    for (std::size_t i = 0; i < cuts.size(); ++i) cols.emplace_back("cutdown_" + format_rational(fi.levels[i]), cuts[i]);
    return csv_functions(cols);
  }
  std::vector<Curve> curves{{&fi.f, "#1d4ed8", "f"}};
  std::vector<std::pair<Region, std::string>> marks{{open_support(fi.f), "supp f"}};
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    curves.push_back({&cuts[i], "#ea580c", "cutdown"});
    marks.emplace_back(superlevel(fi.f, fi.levels[i]), "f > " + format_rational(fi.levels[i]));
  }
  return svg_functions(curves, fi.levels, marks, "function and cutdowns");
}

std::string render_cuntz(const CuntzInstance& ci, RenderFormat format) {
  if (ci.a.dim() != ci.b.dim()) throw UsageError("elements have different tensor ranks");
  if (ci.a.dim() > 2) throw UsageError("cannot render more than two dimensions");
  const CuntzClass a(ci.a), b(ci.b);
  const Space k = ci.b.ambient();
  if (ci.a.dim() == 2) {
    RegionPicture p{&k.region(), &b.support(), &a.support(), relative_closure(a.support(), k), "supports of a and b"};
    return format == RenderFormat::svg ? svg_regions(p) : csv_regions(p);
  }
  const PLFunction& fa = ci.a.factors()[0];
  const PLFunction& fb = ci.b.factors()[0];
  if (format == RenderFormat::csv) return csv_functions({{"a", fa}, {"b", fb}});
  const auto eps = way_below_epsilon(a, b, k);
  std::vector<Rational> levels;
  std::vector<std::pair<Region, std::string>> marks{{a.support(), "supp a"}, {b.support(), "supp b"}};
  if (eps) {
    levels.push_back(*eps);
    marks.emplace_back(superlevel(fb, *eps), "b > eps");
  }
  return svg_functions({{&fa, "#ea580c", "a"}, {&fb, "#1d4ed8", "b"}}, levels, marks, "a and b");
}

}  // namespace

std::optional<RenderFormat> parse_format(std::string_view name) {
  if (name == "svg") return RenderFormat::svg;
  if (name == "csv") return RenderFormat::csv;
  return std::nullopt;
}

std::string render(const Instance& inst, RenderFormat format) {
  if (const auto* r = std::get_if<RegionInstance>(&inst)) {
    if (r->k.dim() > 2) throw UsageError("cannot render more than two dimensions");
    RegionPicture p{&r->k.region(), &r->v, &r->u, relative_closure(r->u, r->k), "U, closure of U, V in K"};
    return format == RenderFormat::svg ? svg_regions(p) : csv_regions(p);
  }
  if (const auto* i = std::get_if<IdealInstance>(&inst)) {
    const Space& k = i->i.ambient();
    if (k.dim() > 2) throw UsageError("cannot render more than two dimensions");
    if (k != i->j.ambient()) throw UsageError("ideals live on different ambients");
    RegionPicture p{&k.region(), &i->j.carrier(), &i->i.carrier(), relative_closure(i->i.carrier(), k),
                    "carriers of I and J"};
    return format == RenderFormat::svg ? svg_regions(p) : csv_regions(p);
  }
  if (const auto* f = std::get_if<FunctionInstance>(&inst)) return render_function(*f, format);
  if (const auto* c = std::get_if<CuntzInstance>(&inst)) return render_cuntz(*c, format);
  throw UsageError("poset instances have no picture");
}

}  // namespace wbk::app
