// sss2link: command-line front end for the 2-link subdivision planner.
//
//   sss2link plan  --env scene.env --l1 16 --l2 5 --tau 1 --kappa 7deg --eps 1
//                  --start x,y,t1,t2 --goal x,y,t1,t2 [--strategy gbf] [--out dir] [--validate]
//   sss2link bench [--runs 3] [--csv out.csv] [--artifacts dir]
//   sss2link scene --kind maze [--seed 1] --out maze.env
//
// Exit codes for plan: 0 PATH, 2 NO-PATH, 3 TIMEOUT, 4 path failed --validate, 1 bad input.

#include "sss/bench.hpp"
#include "sss/oracle.hpp"
#include "sss/report.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Radians, or degrees with a `deg` suffix.
double parse_angle(std::string s) {
  bool deg = false;
  if (s.size() > 3 && s.compare(s.size() - 3, 3, "deg") == 0) {
    deg = true;
    s.resize(s.size() - 3);
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw InputError("bad angle '" + s + "'");
  }
  if (used != s.size()) throw InputError("bad angle '" + s + "'");
  return deg ? v * sss::kPi / 180.0 : v;
}

double parse_number(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw InputError("bad number '" + s + "'");
  }
  if (used != s.size()) throw InputError("bad number '" + s + "'");
  return v;
}

sss::Config parse_config(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 4) throw InputError("configuration must be x,y,t1,t2: '" + text + "'");
  return {parse_number(parts[0]), parse_number(parts[1]), parse_angle(parts[2]), parse_angle(parts[3])};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
}

struct PlanArgs {
  std::string env, kappa = "-1", start, goal, strategy = "gbf", out;
  double l1 = 0, l2 = 0, tau = 0, eps = 1, timeout_ms = 0;
  int threads = 1;
  std::uint64_t seed = 0;
  bool validate = false;
  bool no_boxes = false;
};

int run_plan(const PlanArgs& a) {
  sss::PlanRequest req;
  req.env = sss::parse_environment(read_file(a.env));
  req.robot = {a.l1, a.l2, a.tau, parse_angle(a.kappa)};
  req.alpha = parse_config(a.start);
  req.beta = parse_config(a.goal);
  req.epsilon = a.eps;
  req.seed = a.seed;
  const auto strat = sss::parse_strategy(a.strategy);
  if (!strat) throw InputError("unknown strategy '" + a.strategy + "'");
  req.strategy = *strat;
  if (a.timeout_ms > 0) req.timeout_ms = a.timeout_ms;

  const sss::PlanResult res = sss::plan(req);
  if (!a.out.empty()) {
    fs::create_directories(a.out);
    write_file(fs::path(a.out) / "path.json", sss::path_json(req.robot, req.epsilon, res).dump(2) + "\n");
    sss::SvgOptions opt;
    opt.draw_boxes = !a.no_boxes;
    write_file(fs::path(a.out) / "scene.svg", sss::render_svg(req.env, res.leaves, res.path, req.robot, req.epsilon, opt));
  }
  std::cout << sss::stats_line(res) << "\n";
  if (a.validate && res.outcome == sss::Outcome::PATH) {
    const auto chk = sss::oracle::validate_path(res.path, req.env, req.robot, 1000);
    std::cout << "validate min_clearance=" << chk.min_clearance << " band_margin=" << chk.band_margin << "\n";
    if (!chk.ok()) return 4;
  }
  switch (res.outcome) {
    case sss::Outcome::PATH: return 0;
    case sss::Outcome::NO_PATH: return 2;
    default: return 3;
  }
}

int run_bench(int runs, const std::string& csv_path, const std::string& artifacts, double timeout_ms) {
  const auto rows = sss::bench::run_suite(sss::bench::standard_suite(), runs,
                                          timeout_ms > 0 ? std::optional<double>(timeout_ms) : std::nullopt);
  std::cout << sss::bench::table(rows);
  if (!csv_path.empty()) write_file(csv_path, sss::bench::csv(rows));
  if (!artifacts.empty()) {
    fs::create_directories(artifacts);
    for (const auto& r : rows) {
      write_file(fs::path(artifacts) / (r.exp.scene.name + ".json"),
                 sss::path_json(r.exp.scene.robot, r.exp.scene.epsilon, r.last).dump(2) + "\n");
    }
  }
  return 0;
}

std::string config_text(const sss::Config& c) {
  std::ostringstream ss;
  ss.precision(17);
  ss << c.x << ',' << c.y << ',' << c.theta1 << ',' << c.theta2;
  return ss.str();
}

int run_scene(const std::string& kind, std::uint64_t seed, const std::string& out) {
  const auto s = sss::bench::generate(kind, seed);
  write_file(out, s.env.serialize());
  std::ostringstream ss;
  ss.precision(17);
  ss << "plan --env " << out << " --l1 " << s.robot.ell1 << " --l2 " << s.robot.ell2 << " --tau " << s.robot.tau
     << " --kappa " << s.robot.kappa << " --eps " << s.epsilon << " --start " << config_text(s.alpha) << " --goal "
     << config_text(s.beta);
  std::cout << ss.str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Soft subdivision search for a thick non-crossing 2-link robot"};
  app.require_subcommand(1);

  PlanArgs pa;
  auto* plan = app.add_subcommand("plan", "plan a path");
  plan->add_option("--env", pa.env, "environment file")->required();
  plan->add_option("--l1", pa.l1, "length of link 1")->required();
  plan->add_option("--l2", pa.l2, "length of link 2")->required();
  plan->add_option("--tau", pa.tau, "link thickness")->required();
  plan->add_option("--kappa", pa.kappa, "band half-width, radians or NNdeg; negative allows crossing");
  plan->add_option("--eps", pa.eps, "resolution epsilon")->required();
  plan->add_option("--start", pa.start, "x,y,t1,t2")->required();
  plan->add_option("--goal", pa.goal, "x,y,t1,t2")->required();
  plan->add_option("--strategy", pa.strategy, "bfs | gbf | dist_size");
  plan->add_option("--out", pa.out, "output directory for path.json and scene.svg");
  plan->add_option("--timeout", pa.timeout_ms, "timeout in milliseconds (0 = none)");
  plan->add_option("--threads", pa.threads, "worker threads (results do not depend on it)");
  plan->add_option("--seed", pa.seed, "seed recorded with the request");
  plan->add_flag("--validate", pa.validate, "check the path with the brute-force validator");
  plan->add_flag("--no-boxes", pa.no_boxes, "leave subdivision boxes out of the SVG");

  int runs = 3;
  double bench_timeout = 0;
  std::string csv, artifacts;
  auto* bench = app.add_subcommand("bench", "run the standard experiment suite");
  bench->add_option("--runs", runs, "repetitions per experiment");
  bench->add_option("--csv", csv, "write the CSV table here");
  bench->add_option("--artifacts", artifacts, "write one path.json per experiment into this directory");
  bench->add_option("--timeout", bench_timeout, "per-run timeout in milliseconds (0 = none)");

  std::string kind, scene_out;
  std::uint64_t scene_seed = 1;
  auto* scene = app.add_subcommand("scene", "write a generated scene as an .env file");
  scene->add_option("--kind", kind, "t_room | corridor | corridor_blocked | maze | hole_in_wall | eight_way | "
                                    "bugtrap | bugtrap_sealed | random_triangles")
      ->required();
  scene->add_option("--seed", scene_seed, "generator seed");
  scene->add_option("--out", scene_out, "output .env path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*plan) return run_plan(pa);
    if (*bench) return run_bench(runs, csv, artifacts, bench_timeout);
    if (*scene) return run_scene(kind, scene_seed, scene_out);
  } catch (const sss::EnvironmentError& e) {
    std::cerr << "environment error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
