#include "lorsim/catalog.hpp"

#include <cmath>

#include "lorsim/errors.hpp"

namespace lorsim {

CurveSamples AnalyticCurve::sample(double start, double end, std::size_t n) const {
  if (!(start < end))
    throw GeometryError(Err::InvalidArgument, "sample range must be increasing");
  if (n < 7) throw GeometryError(Err::GridTooCoarse, "need at least 7 samples");
  CurveSamples out;
  out.param_kind = native_param;
  out.params.resize(n);
  out.points.resize(n);
  out.d1.resize(n);
  out.d2.resize(n);
  out.d3.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = start + (end - start) * static_cast<double>(i) / static_cast<double>(n - 1);
    out.params[i] = t;
    eval(t, out.points[i], out.d1[i], out.d2[i], out.d3[i]);
  }
  return out;
}

namespace {

double get_const(const std::map<std::string, double>& given,
                 const std::string& key, double fallback) {
  const auto it = given.find(key);
  return it == given.end() ? fallback : it->second;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw GeometryError(Err::InvalidConstants, what);
}

// sqrt(a^2 - 1), guarded; several entries need |a| > 1.
double n_of(double a) {
  require(a * a > 1.0, "constant a must satisfy a^2 > 1");
  return std::sqrt(a * a - 1.0);
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "example_or_i",    "example_or_ii", "example_or_iii",
      "example_log_shape", "self_similar_t", "self_similar_c",
      "self_similar_q",  "c_i2",          "c_i3",
      "c_i4"};
  return names;
}

AnalyticCurve builtin(const std::string& name,
                      const std::map<std::string, double>& constants) {
  AnalyticCurve c;
  c.name = name;

  if (name == "example_or_i") {
    const double a = get_const(constants, "a", 1.0);
    require(a != 0.0, "constant a must be nonzero");
    const double m = std::sqrt(1.0 + a * a);
    c.constants = {{"a", a}};
    c.eval = [a, m](double s, Vec3& p, Vec3& v1, Vec3& v2, Vec3& v3) {
      const double ch = std::cosh(m * s), sh = std::sinh(m * s);
      p = {ch / (m * m), -sh / (m * m), a * s / m};
      v1 = {sh / m, -ch / m, a / m};
      v2 = {ch, -sh, 0.0};
      v3 = {m * sh, -m * ch, 0.0};
    };
  } else if (name == "example_or_ii") {
    const double a = get_const(constants, "a", 2.0);
    const double n = n_of(a);
    c.constants = {{"a", a}};
    c.eval = [a, n](double s, Vec3& p, Vec3& v1, Vec3& v2, Vec3& v3) {
      const double co = std::cos(n * s), si = std::sin(n * s);
      p = {a * s / n, -co / (n * n), si / (n * n)};
      v1 = {a / n, si / n, co / n};
      v2 = {0.0, co, -si};
      v3 = {0.0, -n * si, -n * co};
    };
  } else if (name == "example_or_iii") {
    const double a = get_const(constants, "a", 2.0);
    const double n = n_of(a);
    c.constants = {{"a", a}};
    c.eval = [a, n](double s, Vec3& p, Vec3& v1, Vec3& v2, Vec3& v3) {
      const double ch = std::cosh(n * s), sh = std::sinh(n * s);
      p = {sh / (n * n), ch / (n * n), a * s / n};
      v1 = {ch / n, sh / n, a / n};
      v2 = {sh, ch, 0.0};
      v3 = {n * ch, n * sh, 0.0};
    };
  } else if (name == "example_log_shape") {
    const double a = get_const(constants, "a", 2.0);
    require(a != 0.0, "constant a must be nonzero");
    const double m = std::sqrt(1.0 + a * a);
    c.constants = {{"a", a}};
    c.default_start = 0.5;
    c.default_end = 2.5;
    c.eval = [a, m](double s, Vec3& p, Vec3& v1, Vec3& v2, Vec3& v3) {
      const double t = m * s;
      const double ch = std::cosh(t), sh = std::sinh(t);
      const double m3 = m * m * m;
      p = {(t * ch - sh) / m3, (ch - t * sh) / m3, a * t * t / (2.0 * m3)};
      v1 = {t * sh / (m * m), -t * ch / (m * m), a * t / (m * m)};
      v2 = {(sh + t * ch) / m, -(ch + t * sh) / m, a / m};
      v3 = {2.0 * ch + t * sh, -(2.0 * sh + t * ch), 0.0};
    };
  } else if (name == "self_similar_t") {
    const double a = get_const(constants, "a", 1.0);
    const double b = get_const(constants, "b", 0.5);
    require(a != 0.0 && b != 0.0, "constants a, b must be nonzero");
    const double q = std::sqrt(1.0 + a * a);
    require(std::fabs(b * b - q * q) > 1e-12, "pole: b^2 = 1 + a^2");
    c.constants = {{"a", a}, {"b", b}};
    c.eval = [a, b, q](double s, Vec3& p, Vec3& v1, Vec3& v2, Vec3& v3) {
      const double e = std::exp(b * s);
      const double ch = std::cosh(q * s), sh = std::sinh(q * s);
      const double den = b * b - q * q;
      p = {e * ((b / q) * sh - ch) / den, e * (sh - (b / q) * ch) / den,
           a * e / (b * q)};
      v1 = {e * sh / q, -e * ch / q, a * e / q};
      v2 = {e * ((b / q) * sh + ch), -e * ((b / q) * ch + sh), a * b * e / q};
      v3 = {e * ((b * b / q + q) * sh + 2.0 * b * ch),
            -e * ((b * b / q + q) * ch + 2.0 * b * sh), a * b * b * e / q};
    };
  } else if (name == "self_similar_c") {
    const double a = get_const(constants, "a", 2.0);
    const double b = get_const(constants, "b", 1.0);
    require(b != 0.0, "constant b must be nonzero");
    const double n = n_of(a);
    c.constants = {{"a", a}, {"b", b}};
    c.eval = [a, b, n](double s, Vec3& p, Vec3& v1, Vec3& v2, Vec3& v3) {
      const double e = std::exp(b * s);
      const double co = std::cos(n * s), si = std::sin(n * s);
      const double den = b * b + n * n;
      p = {a * e / (b * n), e * ((b / n) * si - co) / den,
           e * ((b / n) * co + si) / den};
      v1 = {a * e / n, e * si / n, e * co / n};
      v2 = {a * b * e / n, e * ((b / n) * si + co), e * ((b / n) * co - si)};
      v3 = {a * b * b * e / n, e * ((b * b / n - n) * si + 2.0 * b * co),
            e * ((b * b / n - n) * co - 2.0 * b * si)};
    };
  } else if (name == "self_similar_q") {
    const double a = get_const(constants, "a", 2.0);
    const double b = get_const(constants, "b", 1.0);
    require(b != 0.0, "constant b must be nonzero");
    const double n = n_of(a);
    require(std::fabs(b * b - n * n) > 1e-12, "pole: b^2 = a^2 - 1");
    c.constants = {{"a", a}, {"b", b}};
    c.eval = [a, b, n](double s, Vec3& p, Vec3& v1, Vec3& v2, Vec3& v3) {
      const double e = std::exp(b * s);
      const double ch = std::cosh(n * s), sh = std::sinh(n * s);
      const double den = b * b - n * n;
      p = {e * ((b / n) * ch - sh) / den, e * ((b / n) * sh - ch) / den,
           a * e / (b * n)};
      v1 = {e * ch / n, e * sh / n, a * e / n};
      v2 = {e * ((b / n) * ch + sh), e * ((b / n) * sh + ch), a * b * e / n};
      v3 = {e * ((b * b / n + n) * ch + 2.0 * b * sh),
            e * ((b * b / n + n) * sh + 2.0 * b * ch), a * b * b * e / n};
    };
  } else if (name == "c_i2") {
    const double a = get_const(constants, "a", 1.0);
    require(a != 0.0, "constant a must be nonzero");
    const double m = std::sqrt(1.0 + a * a);
    c.constants = {{"a", a}};
    c.native_param = ParamKind::ArcLength;
    c.eval = [a, m](double s, Vec3& p, Vec3& v1, Vec3& v2, Vec3& v3) {
      const double ch = std::cosh(m * s), sh = std::sinh(m * s);
      p = {sh / m, -ch / m, a / m};
      v1 = {ch, -sh, 0.0};
      v2 = {m * sh, -m * ch, 0.0};
      v3 = {m * m * ch, -m * m * sh, 0.0};
    };
  } else if (name == "c_i3") {
    const double a = get_const(constants, "a", 2.0);
    const double n = n_of(a);
    c.constants = {{"a", a}};
    c.native_param = ParamKind::ArcLength;
    c.eval = [a, n](double s, Vec3& p, Vec3& v1, Vec3& v2, Vec3& v3) {
      const double co = std::cos(n * s), si = std::sin(n * s);
      p = {a / n, si / n, co / n};
      v1 = {0.0, co, -si};
      v2 = {0.0, -n * si, -n * co};
      v3 = {0.0, -n * n * co, n * n * si};
    };
  } else if (name == "c_i4") {
    const double a = get_const(constants, "a", 2.0);
    const double n = n_of(a);
    c.constants = {{"a", a}};
    c.native_param = ParamKind::ArcLength;
    c.eval = [a, n](double s, Vec3& p, Vec3& v1, Vec3& v2, Vec3& v3) {
      const double ch = std::cosh(n * s), sh = std::sinh(n * s);
      p = {ch / n, sh / n, a / n};
      v1 = {sh, ch, 0.0};
      v2 = {n * ch, n * sh, 0.0};
      v3 = {n * n * sh, n * n * ch, 0.0};
    };
  } else {
    throw GeometryError(Err::UnknownExample, "unknown example: " + name);
  }

  // Reject constants the entry does not declare.
  for (const auto& [key, value] : constants) {
    (void)value;
    if (!c.constants.count(key))
      throw GeometryError(Err::InvalidConstants,
                          "example " + name + " takes no constant '" + key + "'");
  }
  return c;
}

FrameAtPoint catalog_initial_frame(const std::string& name, double a) {
  FrameAtPoint f;
  if (name == "example_or_i") {
    const double m = std::sqrt(1.0 + a * a);
    f.x0 = {1.0 / (m * m), 0.0, 0.0};
    f.e1 = {0.0, -1.0 / m, a / m};
    f.e2 = {1.0, 0.0, 0.0};
    f.e3 = {0.0, a / m, 1.0 / m};
  } else if (name == "example_or_ii") {
    const double n = n_of(a);
    f.x0 = {0.0, -1.0 / (n * n), 0.0};
    f.e1 = {a / n, 0.0, 1.0 / n};
    f.e2 = {0.0, 1.0, 0.0};
    f.e3 = {1.0 / n, 0.0, a / n};
  } else if (name == "example_or_iii") {
    const double n = n_of(a);
    f.x0 = {0.0, 1.0 / (n * n), 0.0};
    f.e1 = {1.0 / n, 0.0, a / n};
    f.e2 = {0.0, 1.0, 0.0};
    f.e3 = {a / n, 0.0, 1.0 / n};
  } else {
    throw GeometryError(Err::UnknownExample,
                        "no distinguished initial frame for: " + name);
  }
  return f;
}

}  // namespace lorsim
