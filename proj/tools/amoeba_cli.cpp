#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "amoeba/bounds.hpp"
#include "amoeba/errors.hpp"
#include "amoeba/geometry.hpp"
#include "amoeba/ideals.hpp"
#include "amoeba/lopsided.hpp"
#include "amoeba/membership.hpp"
#include "amoeba/precision.hpp"
#include "amoeba/resultant.hpp"
#include "amoeba/serialization.hpp"
#include "amoeba/tropical.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNotCertified = 3;
constexpr int kExitBudget = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw amoeba::input_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw amoeba::input_error("cannot write '" + path + "'");
  out << content << "\n";
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream ss(s);
  while (std::getline(ss, cur, ',')) parts.push_back(cur);
  if (!s.empty() && s.back() == ',') parts.push_back("");
  return parts;
}

std::vector<amoeba::Real> parse_point(const std::string& s, int r) {
  const auto parts = split_csv(s);
  if (static_cast<int>(parts.size()) != r) {
    std::ostringstream msg;
    msg << "point needs " << r << " comma-separated coordinates, got " << parts.size();
    throw amoeba::input_error(msg.str());
  }
  std::vector<amoeba::Real> a;
  a.reserve(parts.size());
  for (const auto& p : parts) a.push_back(amoeba::Real::from_string(p));
  return a;
}

amoeba::LaurentPolynomial load_poly(const std::string& path) {
  return amoeba::parse_polynomial(read_file(path));
}

struct CertifyArgs {
  std::string poly_path;
  std::string point_csv;
  std::string eps_str;
  std::string mode_str = "lopsided";
  long n_override = 0;
  std::uint64_t seed = 1;
  double budget = 1e7;
  std::string out_path;
};

int run_certify(const CertifyArgs& args) {
  const auto f = load_poly(args.poly_path);
  const auto a = parse_point(args.point_csv, f.r);
  const amoeba::Real eps = amoeba::Real::from_string(args.eps_str);
  const auto mode = amoeba::mode_from_name(args.mode_str);
  std::optional<long> n_override;
  if (args.n_override > 0) n_override = args.n_override;

  const auto outcome =
      amoeba::certify_outside(f, a, eps, mode, n_override, std::nullopt, args.budget);
  if (outcome.certified && outcome.certificate) {
    write_output(args.out_path, amoeba::serialize_certificate(*outcome.certificate, 2));
    return kExitOk;
  }
  write_output(args.out_path, amoeba::serialize_outcome(outcome, 2));
  return kExitNotCertified;
}

struct RasterArgs {
  std::string poly_path;
  std::string bbox_csv;
  std::string res_csv;
  std::string mode_str = "la";
  long n = 1;
  int jobs = 1;
  double budget = 1e7;
  std::string out_path;
};

int run_raster(const RasterArgs& args) {
  const auto f = load_poly(args.poly_path);
  if (f.r != 2) throw amoeba::input_error("raster supports r = 2 only");
  if (args.n < 1) throw amoeba::input_error("order must be a positive integer");
  if (args.jobs < 1) throw amoeba::input_error("jobs must be a positive integer");
  if (args.mode_str != "la" && args.mode_str != "sa")
    throw amoeba::input_error("mode must be la or sa");

  const auto bbox_parts = split_csv(args.bbox_csv);
  if (bbox_parts.size() != 4) throw amoeba::input_error("bbox needs x0,y0,x1,y1");
  double x0, y0, x1, y1;
  try {
    x0 = std::stod(bbox_parts[0]);
    y0 = std::stod(bbox_parts[1]);
    x1 = std::stod(bbox_parts[2]);
    y1 = std::stod(bbox_parts[3]);
  } catch (const std::exception&) {
    throw amoeba::input_error("bbox coordinates must be numbers");
  }
  if (!(x1 > x0) || !(y1 > y0)) throw amoeba::input_error("bbox must have positive extent");

  const auto res_parts = split_csv(args.res_csv);
  if (res_parts.size() != 2) throw amoeba::input_error("res needs W,H");
  long W, H;
  try {
    W = std::stol(res_parts[0]);
    H = std::stol(res_parts[1]);
  } catch (const std::exception&) {
    throw amoeba::input_error("res entries must be integers");
  }
  if (W < 1 || H < 1) throw amoeba::input_error("res entries must be positive");

  const auto g = amoeba::cyclic_resultant(f, args.n, args.budget);
  const bool super = args.mode_str == "sa";
  const double dx = (x1 - x0) / static_cast<double>(W);
  const double dy = (y1 - y0) / static_cast<double>(H);

  std::vector<int> grid(static_cast<std::size_t>(W * H), 0);
  const auto worker = [&](long q_begin, long q_end) {
    for (long q = q_begin; q < q_end; ++q)
      for (long p = 0; p < W; ++p) {
        const std::vector<amoeba::Real> pt = {
            amoeba::Real(x0 + (static_cast<double>(p) + 0.5) * dx),
            amoeba::Real(y0 + (static_cast<double>(q) + 0.5) * dy)};
        const auto mv = super ? amoeba::sa_membership(g, pt) : amoeba::la_membership(g, pt);
        grid[static_cast<std::size_t>(q * W + p)] =
            (mv.region == amoeba::RegionMembership::Outside) ? 1 : 0;
      }
  };

  const int jobs = static_cast<int>(std::min<long>(args.jobs, H));
  if (jobs <= 1) {
    worker(0, H);
  } else {
    std::vector<std::thread> pool;
    const long chunk = (H + jobs - 1) / jobs;
    for (int t = 0; t < jobs; ++t) {
      const long qb = t * chunk;
      const long qe = std::min<long>(H, qb + chunk);
      if (qb >= qe) break;
      pool.emplace_back(worker, qb, qe);
    }
    for (auto& th : pool) th.join();
  }

  std::ostringstream out;
  out << "# bbox=" << bbox_parts[0] << "," << bbox_parts[1] << "," << bbox_parts[2] << ","
      << bbox_parts[3] << " res=" << W << "," << H << " n=" << args.n << " mode=" << args.mode_str
      << "\n";
  for (long q = 0; q < H; ++q) {
    for (long p = 0; p < W; ++p) {
      if (p > 0) out << ",";
      out << grid[static_cast<std::size_t>(q * W + p)];
    }
    out << "\n";
  }
  std::string text = out.str();
  text.pop_back();  // write_output appends the final newline
  write_output(args.out_path, text);
  return kExitOk;
}

struct SimpleArgs {
  std::string poly_path;
  long n = 1;
  std::string ns_csv;
  double budget = 1e7;
  std::string out_path;
};

int run_components(const SimpleArgs& args) {
  const auto f = load_poly(args.poly_path);
  const auto entries = amoeba::enumerate_components(f, args.n, args.budget);
  write_output(args.out_path, amoeba::serialize_component_entries(entries, args.n, 2));
  return kExitOk;
}

int run_spine(const SimpleArgs& args) {
  const auto f = load_poly(args.poly_path);
  const auto T = amoeba::approximate_spine(f, args.n, args.budget);
  write_output(args.out_path, amoeba::serialize_tropical(T, 2));
  return kExitOk;
}

int run_resultant(const SimpleArgs& args) {
  const auto f = load_poly(args.poly_path);
  amoeba::LaurentPolynomial g;
  if (!args.ns_csv.empty()) {
    std::vector<long> ns;
    for (const auto& part : split_csv(args.ns_csv)) {
      try {
        ns.push_back(std::stol(part));
      } catch (const std::exception&) {
        throw amoeba::input_error("orders must be integers");
      }
    }
    g = amoeba::general_cyclic_resultant(f, ns, args.budget);
  } else {
    g = amoeba::cyclic_resultant(f, args.n, args.budget);
  }
  write_output(args.out_path, amoeba::serialize_polynomial(g, 2));
  return kExitOk;
}

struct IdealArgs {
  std::vector<std::string> gen_paths;
  std::string point_csv;
  std::string eps_str;
  std::string mode_str = "lopsided";
  long n_max = 64;
  double budget = 1e7;
  std::string out_path;
};

int run_ideal(const IdealArgs& args) {
  std::vector<amoeba::LaurentPolynomial> gens;
  gens.reserve(args.gen_paths.size());
  for (const auto& path : args.gen_paths) gens.push_back(load_poly(path));
  if (gens.empty()) throw amoeba::input_error("at least one generator file required");
  const auto a = parse_point(args.point_csv, gens.front().r);
  const amoeba::Real eps = amoeba::Real::from_string(args.eps_str);
  const auto mode = amoeba::mode_from_name(args.mode_str);

  const auto outcome =
      amoeba::certify_outside_ideal(gens, a, eps, args.n_max, mode, args.budget);
  if (outcome.certified && outcome.certificate) {
    write_output(args.out_path, amoeba::serialize_certificate(*outcome.certificate, 2));
    return kExitOk;
  }
  write_output(args.out_path, amoeba::serialize_outcome(outcome, 2));
  return kExitNotCertified;
}

struct TropicalArgs {
  std::string valued_path;
  std::string point_csv;
  double tie_tol = -1.0;
  std::string out_path;
};

int run_tropical(const TropicalArgs& args) {
  const auto vp = amoeba::parse_valued(read_file(args.valued_path));
  const auto T = amoeba::tropicalize(vp);
  const auto x = parse_point(args.point_csv, T.r);
  std::optional<amoeba::Real> tol;
  if (args.tie_tol >= 0.0) tol = amoeba::Real(args.tie_tol);

  const auto weights = amoeba::tropical_magnitude_list(T, x);
  const bool member = amoeba::tropical_membership(T, x, tol);

  nlohmann::json j;
  j["member"] = member;
  j["value"] = amoeba::tropical_eval(T, x).to_double();
  j["weights"] = nlohmann::json::array();
  for (const auto& [e, w] : weights) {
    nlohmann::json t;
    t["exp"] = e;
    t["weight"] = w.to_double();
    j["weights"].push_back(std::move(t));
  }
  write_output(args.out_path, j.dump(2));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    amoeba::apply_precision_env();
  } catch (const amoeba::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }

  CLI::App app{"Amoeba membership certification and polyhedral approximation"};
  app.require_subcommand(1);
  long precision_bits = 0;
  app.add_option("--precision-bits", precision_bits,
                 "Working precision in bits (min 64; overrides AMOEBA_PRECISION_BITS)");

  CertifyArgs certify_args;
  auto* certify = app.add_subcommand("certify", "Certify a point outside a hypersurface amoeba");
  certify->add_option("-f,--poly", certify_args.poly_path, "Polynomial JSON file")->required();
  certify->add_option("--point", certify_args.point_csv, "Comma-separated coordinates")
      ->required();
  certify->add_option("--eps", certify_args.eps_str, "Claimed distance to the amoeba")
      ->required();
  certify->add_option("--mode", certify_args.mode_str, "Test family: lopsided|super");
  certify->add_option("--n", certify_args.n_override, "Pin the order instead of scheduling");
  certify->add_option("--seed", certify_args.seed,
                      "Accepted for interface stability; certification is deterministic");
  certify->add_option("--budget", certify_args.budget, "Resultant term budget");
  certify->add_option("-o,--out", certify_args.out_path, "Output path (default stdout)");

  RasterArgs raster_args;
  auto* raster = app.add_subcommand("raster", "Rasterize the certified/uncertified grid (r = 2)");
  raster->add_option("-f,--poly", raster_args.poly_path, "Polynomial JSON file")->required();
  raster->add_option("--bbox", raster_args.bbox_csv, "x0,y0,x1,y1")->required();
  raster->add_option("--res", raster_args.res_csv, "W,H cells")->required();
  raster->add_option("--mode", raster_args.mode_str, "la|sa");
  raster->add_option("--n", raster_args.n, "Order of the construction");
  raster->add_option("--jobs", raster_args.jobs, "Worker threads");
  raster->add_option("--budget", raster_args.budget, "Resultant term budget");
  raster->add_option("-o,--out", raster_args.out_path, "Output CSV path")->required();

  SimpleArgs components_args;
  auto* components = app.add_subcommand("components", "Enumerate complement-component polyhedra");
  components->add_option("-f,--poly", components_args.poly_path, "Polynomial JSON file")
      ->required();
  components->add_option("--n", components_args.n, "Order of the construction");
  components->add_option("--budget", components_args.budget, "Resultant term budget");
  components->add_option("-o,--out", components_args.out_path, "Output path (default stdout)");

  SimpleArgs spine_args;
  auto* spine = app.add_subcommand("spine", "Piecewise-linear skeleton estimate");
  spine->add_option("-f,--poly", spine_args.poly_path, "Polynomial JSON file")->required();
  spine->add_option("--n", spine_args.n, "Order of the construction");
  spine->add_option("--budget", spine_args.budget, "Resultant term budget");
  spine->add_option("-o,--out", spine_args.out_path, "Output path (default stdout)");

  SimpleArgs resultant_args;
  auto* resultant = app.add_subcommand("resultant", "Expanded product over unit-root rotations");
  resultant->add_option("-f,--poly", resultant_args.poly_path, "Polynomial JSON file")->required();
  resultant->add_option("--n", resultant_args.n, "Uniform order");
  resultant->add_option("--ns", resultant_args.ns_csv, "Per-variable orders n1,...,nr");
  resultant->add_option("--budget", resultant_args.budget, "Term budget");
  resultant->add_option("-o,--out", resultant_args.out_path, "Output path (default stdout)");

  IdealArgs ideal_args;
  auto* ideal = app.add_subcommand("ideal", "Certify a point outside an ideal's amoeba");
  ideal->add_option("-f,--gen", ideal_args.gen_paths, "Generator JSON file (repeatable)")
      ->required();
  ideal->add_option("--point", ideal_args.point_csv, "Comma-separated coordinates")->required();
  ideal->add_option("--eps", ideal_args.eps_str, "Claimed distance")->required();
  ideal->add_option("--mode", ideal_args.mode_str, "Test family: lopsided|super");
  ideal->add_option("--n-max", ideal_args.n_max, "Order schedule cap");
  ideal->add_option("--budget", ideal_args.budget, "Resultant term budget");
  ideal->add_option("-o,--out", ideal_args.out_path, "Output path (default stdout)");

  TropicalArgs tropical_args;
  auto* tropical = app.add_subcommand("tropical", "Max-plus hypersurface membership");
  tropical->add_option("-f,--valued", tropical_args.valued_path, "Valued polynomial JSON file")
      ->required();
  tropical->add_option("--point", tropical_args.point_csv, "Comma-separated coordinates")
      ->required();
  tropical->add_option("--tie-tol", tropical_args.tie_tol, "Absolute tie tolerance");
  tropical->add_option("-o,--out", tropical_args.out_path, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (precision_bits != 0) {
      if (precision_bits < 0) throw amoeba::input_error("precision bits must be positive");
      amoeba::set_precision_bits(static_cast<unsigned>(precision_bits));
    }
    if (certify->parsed()) return run_certify(certify_args);
    if (raster->parsed()) return run_raster(raster_args);
    if (components->parsed()) return run_components(components_args);
    if (spine->parsed()) return run_spine(spine_args);
    if (resultant->parsed()) return run_resultant(resultant_args);
    if (ideal->parsed()) return run_ideal(ideal_args);
    if (tropical->parsed()) return run_tropical(tropical_args);
    std::cerr << "error: no command given\n";
    return kExitInput;
  } catch (const amoeba::budget_error& e) {
    std::cerr << "error: " << e.what() << " (predicted size " << e.predicted_size << ")\n";
    return kExitBudget;
  } catch (const amoeba::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
