#include "lorsim/io.hpp"

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lorsim/errors.hpp"

namespace lorsim {

using json = nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string vec_json(const Vec3& v) {
  return "[" + format_double(v.x0) + "," + format_double(v.x1) + "," +
         format_double(v.x2) + "]";
}

Vec3 vec_from(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 3)
    throw IoError(std::string(what) + " must be an array of 3 numbers");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw IoError("malformed JSON");
  return j;
}

void check_monotone(const std::vector<double>& t) {
  for (std::size_t i = 0; i + 1 < t.size(); ++i)
    if (!(t[i] < t[i + 1]))
      throw IoError("parameter grid is not strictly increasing");
}

std::string channel_json(const std::vector<Vec3>& ch) {
  std::string out = "[";
  for (std::size_t i = 0; i < ch.size(); ++i) {
    if (i) out += ",";
    out += vec_json(ch[i]);
  }
  return out + "]";
}

std::vector<Vec3> channel_from(const json& j, const char* what) {
  std::vector<Vec3> out;
  if (!j.is_array()) throw IoError(std::string(what) + " must be an array");
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(vec_from(item, what));
  return out;
}

}  // namespace

std::string curve_to_json(const CurveSamples& c) {
  std::string out = "{";
  if (!c.d1.empty() || !c.d2.empty() || !c.d3.empty()) {
    out += "\"derivatives\":{";
    bool first = true;
    if (!c.d1.empty()) { out += "\"d1\":" + channel_json(c.d1); first = false; }
    if (!c.d2.empty()) { out += std::string(first ? "" : ",") + "\"d2\":" + channel_json(c.d2); first = false; }
    if (!c.d3.empty()) { out += std::string(first ? "" : ",") + "\"d3\":" + channel_json(c.d3); }
    out += "},";
  }
  out += "\"param_kind\":\"" + std::string(param_kind_name(c.param_kind)) + "\",";
  out += "\"samples\":[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += "[" + format_double(c.params[i]) + "," + format_double(c.points[i].x0) +
           "," + format_double(c.points[i].x1) + "," + format_double(c.points[i].x2) + "]";
  }
  out += "]}";
  return out;
}

CurveSamples curve_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("samples"))
    throw IoError("curve JSON needs a samples array");
  CurveSamples c;
  if (j.contains("param_kind")) {
    try {
      c.param_kind = param_kind_from_name(j["param_kind"].get<std::string>());
    } catch (const GeometryError& e) {
      throw IoError(e.what());
    }
  }
  for (const auto& row : j["samples"]) {
    if (!row.is_array() || row.size() != 4)
      throw IoError("curve samples must be rows [t, x0, x1, x2]");
    c.params.push_back(row[0].get<double>());
    c.points.push_back({row[1].get<double>(), row[2].get<double>(), row[3].get<double>()});
  }
  check_monotone(c.params);
  if (j.contains("derivatives")) {
    const auto& d = j["derivatives"];
    if (d.contains("d1")) c.d1 = channel_from(d["d1"], "d1");
    if (d.contains("d2")) c.d2 = channel_from(d["d2"], "d2");
    if (d.contains("d3")) c.d3 = channel_from(d["d3"], "d3");
  }
  try {
    c.validate();
  } catch (const GeometryError& e) {
    throw IoError(e.what());
  }
  return c;
}

std::string curve_to_csv(const CurveSamples& c) {
  std::string out = "t,x0,x1,x2\n";
  for (std::size_t i = 0; i < c.size(); ++i)
    out += format_double(c.params[i]) + "," + format_double(c.points[i].x0) + "," +
           format_double(c.points[i].x1) + "," + format_double(c.points[i].x2) + "\n";
  return out;
}

CurveSamples curve_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty CSV");
  // tolerate trailing \r and spaces in the header
  std::string header;
  for (char ch : line)
    if (!std::isspace(static_cast<unsigned char>(ch))) header += ch;
  if (header != "t,x0,x1,x2") throw IoError("CSV header must be t,x0,x1,x2");
  CurveSamples c;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    double t, a, b, d;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &t, &a, &b, &d) != 4)
      throw IoError("bad CSV row: " + line);
    c.params.push_back(t);
    c.points.push_back({a, b, d});
  }
  check_monotone(c.params);
  return c;
}

std::string pshape_to_json(const PShapeProfile& p) {
  std::string out = "{\"causal_case\":\"";
  out += causal_case_name(p.causal_case);
  out += "\",\"samples\":[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += "[" + format_double(p.sigma[i]) + "," + format_double(p.kappa_tilde[i]) +
           "," + format_double(p.tau_tilde[i]) + "]";
  }
  out += "]}";
  return out;
}

PShapeProfile pshape_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("samples") || !j.contains("causal_case"))
    throw IoError("shape JSON needs causal_case and samples");
  PShapeProfile p;
  try {
    p.causal_case = causal_case_from_name(j["causal_case"].get<std::string>());
  } catch (const GeometryError& e) {
    throw IoError(e.what());
  }
  for (const auto& row : j["samples"]) {
    if (!row.is_array() || row.size() != 3)
      throw IoError("shape samples must be rows [sigma, kappa_tilde, tau_tilde]");
    p.sigma.push_back(row[0].get<double>());
    p.kappa_tilde.push_back(row[1].get<double>());
    p.tau_tilde.push_back(row[2].get<double>());
  }
  check_monotone(p.sigma);
  p.source = PShapeSource::Prescribed;
  return p;
}

std::string psimilarity_to_json(const PSimilarity& f) {
  return "{\"b\":" + vec_json(f.b) + ",\"mu\":" + format_double(f.mu) +
         ",\"q\":[" + format_double(f.q.w) + "," + format_double(f.q.x) + "," +
         format_double(f.q.y) + "," + format_double(f.q.z) + "]}";
}

PSimilarity psimilarity_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("mu") || !j.contains("q") || !j.contains("b"))
    throw IoError("similarity JSON needs mu, q, b");
  PSimilarity f;
  f.mu = j["mu"].get<double>();
  const auto& q = j["q"];
  if (!q.is_array() || q.size() != 4) throw IoError("q must be [w,x,y,z]");
  f.q = {q[0].get<double>(), q[1].get<double>(), q[2].get<double>(), q[3].get<double>()};
  f.b = vec_from(j["b"], "b");
  return f;
}

std::string match_to_json(const MatchResult& m) {
  std::string out = "{\"b\":" + vec_json(m.translation);
  out += ",\"mu\":" + format_double(m.mu);
  out += ",\"mu_spread\":" + format_double(m.mu_spread);
  out += ",\"orientation\":\"" + std::string(orientation_name(m.orientation)) + "\"";
  if (m.f) {
    out += ",\"q\":[" + format_double(m.f->q.w) + "," + format_double(m.f->q.x) +
           "," + format_double(m.f->q.y) + "," + format_double(m.f->q.z) + "]";
  } else {
    out += ",\"rotation_matrix\":[";
    for (int i = 0; i < 3; ++i) {
      if (i) out += ",";
      out += "[";
      for (int j = 0; j < 3; ++j) {
        if (j) out += ",";
        out += format_double(m.linear(i, j) / m.mu);
      }
      out += "]";
    }
    out += "]";
  }
  out += ",\"residual\":" + format_double(m.residual);
  out += ",\"sign_pattern\":\"" + std::string(sign_pattern_name(m.sign_pattern)) + "\"}";
  return out;
}

std::string frenet_to_csv(const FrenetData& fd) {
  std::string out =
      "s,sigma,kappa,tau,e1_0,e1_1,e1_2,e2_0,e2_1,e2_2,e3_0,e3_1,e3_2,eps1,eps2,eps3\n";
  for (std::size_t i = 0; i < fd.size(); ++i) {
    out += format_double(fd.s[i]) + "," + format_double(fd.sigma[i]) + "," +
           format_double(fd.kappa[i]) + "," + format_double(fd.tau[i]);
    for (const auto* ch : {&fd.e1, &fd.e2, &fd.e3})
      for (int axis = 0; axis < 3; ++axis)
        out += "," + format_double((*ch)[i][axis]);
    out += "," + format_double(fd.eps1) + "," + format_double(fd.eps2) + "," +
           format_double(fd.eps3) + "\n";
  }
  return out;
}

std::string initial_frame_to_json(const InitialFrame& f) {
  return "{\"e1\":" + vec_json(f.e1) + ",\"e2\":" + vec_json(f.e2) +
         ",\"e3\":" + vec_json(f.e3) + ",\"x0\":" + vec_json(f.x0) + "}";
}

InitialFrame initial_frame_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("x0") || !j.contains("e1") ||
      !j.contains("e2") || !j.contains("e3"))
    throw IoError("frame JSON needs x0, e1, e2, e3");
  InitialFrame f;
  f.x0 = vec_from(j["x0"], "x0");
  f.e1 = vec_from(j["e1"], "e1");
  f.e2 = vec_from(j["e2"], "e2");
  f.e3 = vec_from(j["e3"], "e3");
  return f;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void atomic_write_file(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << content;
    if (!out.good()) throw IoError("short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) throw IoError("cannot rename " + tmp.string() + " to " + path);
}

}  // namespace lorsim
