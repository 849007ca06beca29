#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "bitgrid/bounds.hpp"
#include "bitgrid/constructions.hpp"
#include "bitgrid/image.hpp"
#include "bitgrid/oracle.hpp"
#include "bitgrid/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw std::runtime_error("read failure: " + path);
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("write failure: " + path);
}

bitgrid::ImageFormat resolve_format(const std::string& flag, const std::string& content) {
  if (flag == "pbm") return bitgrid::ImageFormat::pbm_p1;
  if (flag == "ascii") return bitgrid::ImageFormat::ascii_grid;
  // auto: PBM magic wins, anything else is an ascii grid
  return content.rfind("P1", 0) == 0 ? bitgrid::ImageFormat::pbm_p1
                                     : bitgrid::ImageFormat::ascii_grid;
}

bitgrid::ImageFormat output_format(const std::string& flag) {
  return flag == "ascii" ? bitgrid::ImageFormat::ascii_grid : bitgrid::ImageFormat::pbm_p1;
}

void emit_json(const bitgrid::json& doc) { std::cout << doc.dump(2) << "\n"; }

struct AnalyzeOptions {
  std::string path;
  std::string format = "auto";
};

struct GenerateOptions {
  std::string kind;
  std::string out_path;
  std::string format = "pbm";
  std::optional<long long> m, c, u, a, t, k;
};

struct VerifyOptions {
  std::string path;
  std::string format = "auto";
  std::optional<long long> m, c;
};

struct SweepOptions {
  int width = 0;
  int height = 0;
  int jobs = 1;
};

int run_analyze(const AnalyzeOptions& options) {
  const std::string content = read_file(options.path);
  const auto image = bitgrid::parse_image(content, resolve_format(options.format, content));
  const auto metrics = bitgrid::compute_metrics(image);
  const auto bounds = bitgrid::full_report(metrics);
  emit_json(bitgrid::metrics_document(metrics, bounds));
  std::cerr << "analyzed " << metrics.width << "x" << metrics.height << " image: area "
            << metrics.area << ", boundary length " << metrics.boundary_length << "\n";
  return kExitOk;
}

long long require_param(const std::optional<long long>& value, const char* name,
                        const std::string& kind) {
  if (!value.has_value()) {
    throw std::invalid_argument("construction '" + kind + "' needs --" + name);
  }
  return *value;
}

bitgrid::Construction build_from_options(const GenerateOptions& options) {
  const std::string& kind = options.kind;
  if (kind == "square") {
    return bitgrid::build_square(require_param(options.m, "m", kind));
  }
  if (kind == "theorem1-extremal" || kind == "theorem1") {
    return bitgrid::build_theorem1_extremal(require_param(options.m, "m", kind),
                                            require_param(options.c, "c", kind));
  }
  if (kind == "theorem2-extremal" || kind == "theorem2") {
    return bitgrid::build_theorem2_extremal(require_param(options.m, "m", kind),
                                            require_param(options.c, "c", kind));
  }
  if (kind == "hole-lattice") {
    return bitgrid::build_hole_lattice(require_param(options.u, "u", kind),
                                       require_param(options.c, "c", kind));
  }
  if (kind == "rectangle") {
    return bitgrid::build_rectangle(require_param(options.a, "a", kind),
                                    require_param(options.t, "t", kind));
  }
  if (kind == "ball") {
    return bitgrid::build_ball(require_param(options.k, "k", kind));
  }
  throw std::invalid_argument("unknown construction kind: " + kind);
}

int run_generate(const GenerateOptions& options) {
  const auto construction = build_from_options(options);
  write_file(options.out_path,
             bitgrid::emit_image(construction.image, output_format(options.format)));
  emit_json(bitgrid::expected_document(construction));
  std::cerr << "wrote " << construction.image.width() << "x" << construction.image.height()
            << " image to " << options.out_path << "\n";
  return kExitOk;
}

int run_verify(const VerifyOptions& options) {
  if (options.m.has_value() != options.c.has_value()) {
    throw std::invalid_argument("--m and --c must be given together");
  }
  const std::string content = read_file(options.path);
  const auto image = bitgrid::parse_image(content, resolve_format(options.format, content));
  const auto metrics = bitgrid::compute_metrics(image);
  bitgrid::BoundHints hints;
  hints.m = options.m;
  hints.c = options.c;
  const auto bounds = bitgrid::full_report(metrics, hints);
  emit_json(bitgrid::verify_document(bounds));

  const auto summary = bitgrid::summarize(bounds);
  if (summary.all_satisfied) {
    std::cerr << "all applicable bounds satisfied\n";
    return kExitOk;
  }
  std::cerr << summary.failing_ids.size() << " bound(s) violated:";
  for (const auto& id : summary.failing_ids) std::cerr << " " << id;
  std::cerr << "\n";
  return kExitViolation;
}

int run_sweep(const SweepOptions& options) {
  const auto report = bitgrid::exhaustive_verify(options.width, options.height, options.jobs);
  emit_json(bitgrid::sweep_document(report));
  std::cerr << "checked " << report.images_checked << " images on " << options.width << "x"
            << options.height << ": " << report.violations.size() << " violation(s)\n";
  return report.violations.empty() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discrete-geometry toolkit for binary images on a square grid"};
  app.require_subcommand(1);

  AnalyzeOptions analyze_options;
  auto* analyze = app.add_subcommand("analyze", "compute metrics and bound checks for an image");
  analyze->add_option("path", analyze_options.path, "image file")->required();
  analyze->add_option("--format", analyze_options.format, "input format")
      ->check(CLI::IsMember({"auto", "pbm", "ascii"}));

  GenerateOptions generate_options;
  auto* generate = app.add_subcommand("generate", "build a named construction");
  generate
      ->add_option("kind", generate_options.kind,
                   "square | theorem1-extremal | theorem2-extremal | hole-lattice | rectangle | "
                   "ball")
      ->required();
  generate->add_option("--out", generate_options.out_path, "output image path")->required();
  generate->add_option("--format", generate_options.format, "output format")
      ->check(CLI::IsMember({"pbm", "ascii"}));
  generate->add_option("--m", generate_options.m, "side / area parameter");
  generate->add_option("--c", generate_options.c, "component / lattice parameter");
  generate->add_option("--u", generate_options.u, "hole spacing");
  generate->add_option("--a", generate_options.a, "rectangle short side");
  generate->add_option("--t", generate_options.t, "rectangle aspect multiplier");
  generate->add_option("--k", generate_options.k, "ball radius");

  VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "check every applicable bound for an image");
  verify->add_option("path", verify_options.path, "image file")->required();
  verify->add_option("--format", verify_options.format, "input format")
      ->check(CLI::IsMember({"auto", "pbm", "ascii"}));
  verify->add_option("--m", verify_options.m, "component-bound parameter m");
  verify->add_option("--c", verify_options.c, "component-bound parameter c");

  SweepOptions sweep_options;
  auto* sweep = app.add_subcommand("sweep", "exhaustively check all images of a small grid");
  sweep->add_option("--width", sweep_options.width, "grid width")->required();
  sweep->add_option("--height", sweep_options.height, "grid height")->required();
  sweep->add_option("--jobs", sweep_options.jobs, "worker count")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) return run_analyze(analyze_options);
    if (generate->parsed()) return run_generate(generate_options);
    if (verify->parsed()) return run_verify(verify_options);
    if (sweep->parsed()) return run_sweep(sweep_options);
    std::cerr << "no subcommand given\n";
    return kExitUsage;
  } catch (const bitgrid::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
