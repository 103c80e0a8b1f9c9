// lorsim: similarity-invariant geometry of non-lightlike curves in Minkowski
// 3-space. Subcommands: analyze, reconstruct, match, transform, example,
// verify. Exit codes: 0 ok, 1 usage/IO/schema, 2 geometric failure,
// 3 shape mismatch.

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lorsim/catalog.hpp"
#include "lorsim/curve.hpp"
#include "lorsim/errors.hpp"
#include "lorsim/frenet.hpp"
#include "lorsim/io.hpp"
#include "lorsim/pshape.hpp"
#include "lorsim/reconstruct.hpp"
#include "lorsim/registration.hpp"
#include "lorsim/split_quaternion.hpp"

namespace {

using namespace lorsim;

struct GlobalConfig {
  double step = 1e-3;
  Tolerances tol;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::string out;
};

void error_json(const std::string& name, const std::string& message) {
  std::string msg;
  for (char ch : message) {
    if (ch == '"' || ch == '\\') msg += '\\';
    msg += ch;
  }
  std::cerr << "{\"error\":\"" << name << "\",\"message\":\"" << msg << "\"}\n";
}

std::map<std::string, double> parse_kv(const std::string& text) {
  std::map<std::string, double> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t amp = text.find_first_of(",&", pos);
    if (amp == std::string::npos) amp = text.size();
    const std::string item = text.substr(pos, amp - pos);
    pos = amp + 1;
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw IoError("expected key=value, got: " + item);
    try {
      out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw IoError("bad numeric value in: " + item);
    }
  }
  return out;
}

CurveSamples curve_from_example_uri(const std::string& uri) {
  const std::string rest = uri.substr(std::string("example://").size());
  const std::size_t qmark = rest.find('?');
  const std::string name = rest.substr(0, qmark == std::string::npos ? rest.size() : qmark);
  std::map<std::string, double> kv;
  if (qmark != std::string::npos) kv = parse_kv(rest.substr(qmark + 1));

  std::optional<double> s0, s1;
  std::size_t n = 0;
  if (auto it = kv.find("sigma0"); it != kv.end()) { s0 = it->second; kv.erase(it); }
  if (auto it = kv.find("sigma1"); it != kv.end()) { s1 = it->second; kv.erase(it); }
  if (auto it = kv.find("n"); it != kv.end()) {
    n = static_cast<std::size_t>(it->second);
    kv.erase(it);
  }
  const AnalyticCurve ac = builtin(name, kv);
  const double start = s0.value_or(ac.default_start);
  const double end = s1.value_or(ac.default_end);
  return ac.sample(start, end, n ? n : ac.default_n);
}

CurveSamples load_curve(const std::string& source) {
  if (source.rfind("example://", 0) == 0) return curve_from_example_uri(source);
  const std::string text = read_file(source);
  if (source.size() > 4 && source.substr(source.size() - 4) == ".csv")
    return curve_from_csv(text);
  // sniff: JSON starts with '{', anything else is tried as CSV
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return curve_from_json(text);
  return curve_from_csv(text);
}

void write_curve(const GlobalConfig& cfg, const std::string& path,
                 const CurveSamples& c) {
  atomic_write_file(path, cfg.format == "csv" ? curve_to_csv(c) : curve_to_json(c));
}

int cmd_analyze(const GlobalConfig& cfg, const std::string& input) {
  const CurveSamples c = load_curve(input);
  const FrenetData fd = frenet_apparatus(c, cfg.tol);
  const PShapeProfile p = pshape_from_frenet(fd);
  const std::string stem = cfg.out.empty() ? "analysis" : cfg.out;
  atomic_write_file(stem + ".frenet.csv", frenet_to_csv(fd));
  atomic_write_file(stem + ".pshape.json", pshape_to_json(p));
  std::cout << "{\"causal_case\":\"" << causal_case_name(p.causal_case)
            << "\",\"n\":" << p.size() << ",\"sigma_range\":["
            << format_double(p.sigma.front()) << "," << format_double(p.sigma.back())
            << "],\"tangent\":\"" << causal_character_name(fd.tangent_character)
            << "\"}\n";
  return 0;
}

int cmd_reconstruct(const GlobalConfig& cfg, const std::string& pshape_file,
                    const std::string& case_name, const std::string& frame_file,
                    double b, bool verify) {
  const PShapeProfile profile = pshape_from_json(read_file(pshape_file));
  PShapeSpec spec = PShapeSpec::from_profile(profile);
  if (!case_name.empty()) spec.causal_case = causal_case_from_name(case_name);

  InitialFrame init = InitialFrame::standard(spec.causal_case);
  if (!frame_file.empty()) init = initial_frame_from_json(read_file(frame_file));

  const CurveSamples rec = reconstruct_curve(spec, init, b, cfg.step);
  const std::string out = cfg.out.empty() ? "reconstructed.json" : cfg.out;
  write_curve(cfg, out, rec);

  if (verify) {
    const FrenetData fd = frenet_apparatus(rec, cfg.tol);
    const PShapeProfile back = pshape_from_frenet(fd);
    double worst = 0.0;
    for (std::size_t i = 0; i < back.size(); ++i) {
      worst = std::max(worst, std::fabs(back.kappa_tilde[i] - spec.z1(back.sigma[i])));
      worst = std::max(worst, std::fabs(back.tau_tilde[i] - spec.z2(back.sigma[i])));
    }
    std::cout << "{\"pshape_residual\":" << format_double(worst) << "}\n";
  }
  return 0;
}

int cmd_match(const GlobalConfig& cfg, const std::string& file_a,
              const std::string& file_b) {
  const CurveSamples a = load_curve(file_a);
  const CurveSamples b = load_curve(file_b);
  const MatchResult m = estimate_similarity(a, b, cfg.tol);
  const std::string text = match_to_json(m);
  atomic_write_file(cfg.out.empty() ? "match.json" : cfg.out, text);
  std::cout << text << "\n";
  return 0;
}

int cmd_transform(const GlobalConfig& cfg, const std::string& input,
                  double mu, const std::string& q_text, const std::string& b_text) {
  auto parse_tuple = [](const std::string& text, int count, double* out) {
    std::size_t pos = 0;
    for (int i = 0; i < count; ++i) {
      std::size_t comma = text.find(',', pos);
      if (i + 1 == count) comma = text.size();
      if (comma == std::string::npos)
        throw IoError("expected " + std::to_string(count) + " comma-separated numbers");
      try {
        out[i] = std::stod(text.substr(pos, comma - pos));
      } catch (const std::exception&) {
        throw IoError("bad number in tuple: " + text);
      }
      pos = comma + 1;
    }
  };
  double qv[4] = {1, 0, 0, 0};
  double bv[3] = {0, 0, 0};
  if (!q_text.empty()) parse_tuple(q_text, 4, qv);
  if (!b_text.empty()) parse_tuple(b_text, 3, bv);

  PSimilarity f;
  f.mu = mu;
  f.q = {qv[0], qv[1], qv[2], qv[3]};
  f.b = {bv[0], bv[1], bv[2]};
  const double nq = sq_norm_form(f.q);
  if (nq <= 0.0) {
    error_json("not_unit_timelike", "q has N(q) <= 0; not a rotation");
    return 1;
  }
  if (std::fabs(nq - 1.0) > 1e-6)
    std::cerr << "{\"warning\":\"q renormalized\",\"norm_form\":"
              << format_double(nq) << "}\n";
  f.q = sq_normalized(f.q);
  if (f.mu == 0.0) {
    error_json("invalid_argument", "mu must be nonzero");
    return 1;
  }

  const CurveSamples c = load_curve(input);
  write_curve(cfg, cfg.out.empty() ? "transformed.json" : cfg.out,
              transform_curve(c, f));
  return 0;
}

int cmd_example(const GlobalConfig& cfg, const std::string& name,
                const std::string& params, const std::string& range,
                std::size_t n) {
  std::map<std::string, double> kv;
  if (!params.empty()) kv = parse_kv(params);
  const AnalyticCurve ac = builtin(name, kv);
  double start = ac.default_start, end = ac.default_end;
  if (!range.empty()) {
    const std::size_t colon = range.find(':');
    if (colon == std::string::npos) throw IoError("--sigma-range expects start:end");
    try {
      start = std::stod(range.substr(0, colon));
      end = std::stod(range.substr(colon + 1));
    } catch (const std::exception&) {
      throw IoError("bad --sigma-range: " + range);
    }
  }
  const CurveSamples c = ac.sample(start, end, n ? n : ac.default_n);
  write_curve(cfg, cfg.out.empty() ? name + ".json" : cfg.out, c);
  return 0;
}

int cmd_verify(const GlobalConfig& cfg, const std::string& file_a,
               const std::string& file_b, const std::string& similarity_file) {
  const CurveSamples a = load_curve(file_a);
  const CurveSamples b = load_curve(file_b);
  const PSimilarity f = psimilarity_from_json(read_file(similarity_file));
  const double residual = verify_match(a, b, f, cfg.tol);
  std::cout << "{\"residual\":" << format_double(residual) << "}\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  GlobalConfig cfg;

  CLI::App app{"Similarity-invariant geometry of non-lightlike curves in Minkowski 3-space"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  app.add_option("--step", cfg.step, "integration / grid step")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--tol-lightlike", cfg.tol.lightlike, "relative lightlike floor")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--tol-curvature", cfg.tol.curvature_floor, "curvature floor")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--tol-match", cfg.tol.match_threshold, "shape-distance match gate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", cfg.format, "curve output format: json|csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized commands");
  app.add_option("--out", cfg.out, "output path (analyze: output stem)");

  std::string input, input_b, case_name, frame_file, similarity_file;
  std::string name, params, range, q_text, b_text;
  double mu = 1.0;
  double scale_b = 1.0;
  std::size_t sample_n = 0;
  bool verify_flag = false;

  auto* analyze = app.add_subcommand("analyze", "Frenet data and shape invariants of a curve");
  analyze->add_option("curve", input, "curve file or example:// URI")->required();

  auto* reconstruct = app.add_subcommand("reconstruct", "curve from prescribed shape invariants");
  reconstruct->add_option("pshape", input, "shape profile JSON")->required();
  reconstruct->add_option("--case", case_name, "timelike-t|timelike-c|timelike-q (default: from file)")
      ->check(CLI::IsMember({"timelike-t", "timelike-c", "timelike-q"}));
  reconstruct->add_option("--frame", frame_file, "initial frame JSON");
  reconstruct->add_option("--b", scale_b, "positive scale constant")->capture_default_str();
  reconstruct->add_flag("--verify", verify_flag, "re-analyze and print the shape residual");

  auto* match = app.add_subcommand("match", "estimate the similarity mapping curve A onto curve B");
  match->add_option("curve_a", input, "first curve")->required();
  match->add_option("curve_b", input_b, "second curve")->required();

  auto* transform = app.add_subcommand("transform", "apply a similarity to a curve");
  transform->add_option("curve", input, "curve file or example:// URI")->required();
  transform->add_option("--mu", mu, "scale (nonzero; sign controls orientation)")
      ->capture_default_str();
  transform->add_option("--q", q_text, "rotation split quaternion w,x,y,z");
  transform->add_option("--b", b_text, "translation b0,b1,b2");

  auto* example = app.add_subcommand("example", "sample a built-in curve");
  example->add_option("--name", name, "catalog name")->required();
  example->add_option("--params", params, "constants, e.g. a=1,b=0.5");
  example->add_option("--sigma-range", range, "start:end");
  example->add_option("--n", sample_n, "sample count");

  auto* verify = app.add_subcommand("verify", "residual of a stored similarity between two curves");
  verify->add_option("curve_a", input, "first curve")->required();
  verify->add_option("curve_b", input_b, "second curve")->required();
  verify->add_option("--similarity", similarity_file, "similarity JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 1;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(cfg, input);
    if (reconstruct->parsed())
      return cmd_reconstruct(cfg, input, case_name, frame_file, scale_b, verify_flag);
    if (match->parsed()) return cmd_match(cfg, input, input_b);
    if (transform->parsed()) return cmd_transform(cfg, input, mu, q_text, b_text);
    if (example->parsed()) return cmd_example(cfg, name, params, range, sample_n);
    if (verify->parsed()) return cmd_verify(cfg, input, input_b, similarity_file);
  } catch (const PShapeMismatchError& e) {
    std::cerr << "{\"error\":\"" << e.name() << "\",\"message\":\"" << e.what()
              << "\",\"pshape_distance\":" << format_double(e.distance()) << "}\n";
    return 3;
  } catch (const GeometryError& e) {
    error_json(e.name(), e.what());
    // bad example names/constants/arguments are input validation, not geometry
    const bool usage = e.code() == Err::UnknownExample ||
                       e.code() == Err::InvalidConstants ||
                       e.code() == Err::InvalidArgument;
    return usage ? 1 : 2;
  } catch (const IoError& e) {
    error_json("io", e.what());
    return 1;
  }
  return 1;
}
