// mmwb: build, check, transform and run bilinear matrix-multiplication
// algorithms.
//
// Exit codes: 0 success, 1 verification failed or mathematically invalid
// input, 2 usage or format error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mmwb/algorithm_io.hpp"
#include "mmwb/bilinear.hpp"
#include "mmwb/errors.hpp"
#include "mmwb/generators.hpp"
#include "mmwb/matrix_io.hpp"
#include "mmwb/recursion.hpp"
#include "mmwb/transforms.hpp"

namespace {

using namespace mmwb;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;

/// Raised for outcomes that map to exit code 1.
class Rejected : public Error {
 public:
  using Error::Error;
};

std::string fmt_exponent(double e) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(4) << e;
  return ss.str();
}

std::string exponent_or_na(const BilinearAlgorithm& alg) {
  return alg.dims().volume() < 2 ? "n/a" : fmt_exponent(exponent(alg));
}

BilinearAlgorithm load_algorithm(const std::string& path) {
  if (path == "-") return read_algorithm(std::cin);
  std::ifstream in(path);
  if (!in) throw BadArgument("cannot open '" + path + "'");
  try {
    return read_algorithm(in);
  } catch (const FormatError& e) {
    throw FormatError(0, path + ": " + std::string(e.what()));
  }
}

Matrix<Rational> load_matrix(const std::string& path) {
  if (path == "-") return read_matrix(std::cin);
  std::ifstream in(path);
  if (!in) throw BadArgument("cannot open '" + path + "'");
  try {
    return read_matrix(in);
  } catch (const FormatError& e) {
    throw FormatError(0, path + ": " + std::string(e.what()));
  }
}

BilinearAlgorithm resolve_algorithm(const std::string& name) {
  if (name == "strassen") return strassen_222();
  if (name == "classical") return classical(DimensionTriple(2, 2, 2));
  return load_algorithm(name);
}

/// Artifact goes to --out when given, otherwise to stdout; the report then
/// moves to stderr so pipelines stay clean.
class Output {
 public:
  explicit Output(std::string path) : path_(std::move(path)) {}

  std::ostream& report() { return path_.empty() ? std::cerr : std::cout; }

  template <class Fn>
  void write(Fn&& fn) {
    if (path_.empty()) {
      fn(std::cout);
      return;
    }
    std::ofstream out(path_);
    if (!out) throw BadArgument("cannot write '" + path_ + "'");
    fn(out);
  }

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

void require_valid(const BilinearAlgorithm& alg, const std::string& what) {
  const auto report = verify_brent(alg);
  if (!report.valid) {
    throw Rejected(what + " fails the Brent equations (" + std::to_string(report.violations.size()) +
                   " violations)");
  }
}

void emit_algorithm(Output& out, const BilinearAlgorithm& alg) {
  require_valid(alg, "result");
  out.write([&](std::ostream& os) { write_algorithm(os, alg); });
  out.report() << "dims " << alg.dims().to_string() << ", rank " << alg.rank() << ", exponent "
               << exponent_or_na(alg) << '\n';
}

void print_cost(std::ostream& os, const CostReport& c) {
  os << c.bilinear_mults << " bilinear mults, " << c.scalar_mults << " scalar mults, " << c.additions
     << " additions";
  if (c.divisions > 0) os << ", " << c.divisions << " divisions";
  os << " [" << c.context << "]\n";
}

std::string bound_text(const std::optional<std::uint64_t>& b) { return b ? std::to_string(*b) : "-"; }

// --- gen ------------------------------------------------------------------

struct GenArgs {
  std::string kind;
  std::size_t m = 0, k = 0, n = 0;
  std::string out;
};

int run_gen(const GenArgs& a) {
  Output out(a.out);
  std::optional<BilinearAlgorithm> alg;
  if (a.kind == "strassen") {
    alg = strassen_222();
  } else if (a.kind == "pan") {
    if (a.n == 0) throw BadArgument("pan needs --n (an even n >= 2)");
    if (a.n % 2 != 0) {
      throw BadArgument("pan needs an even n (trilinear aggregation is defined for n = 2m), got " +
                        std::to_string(a.n));
    }
    alg = pan_aggregation(a.n);
  } else {
    if (a.n == 0) throw BadArgument("classical needs --n, or --m --k --n");
    alg = classical(DimensionTriple(a.m ? a.m : a.n, a.k ? a.k : a.n, a.n));
  }
  emit_algorithm(out, *alg);
  return kOk;
}

// --- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string path;
  std::string mode = "brent";
  std::size_t trials = 20;
  std::uint64_t prime = PrimeField::kMersenne61;
  std::uint64_t seed = 0;
};

int run_verify(const VerifyArgs& a) {
  const auto alg = load_algorithm(a.path);
  if (a.mode == "random") {
    if (verify_trilinear_random(alg, a.trials, a.prime, a.seed)) {
      std::cout << "VALID (" << a.trials << " random trilinear trials mod " << a.prime << ")\n";
      return kOk;
    }
    std::cout << "INVALID (trilinear identity failed at a random point mod " << a.prime << ")\n";
    return kInvalid;
  }
  const auto report = verify_brent(alg);
  if (report.valid) {
    std::cout << "VALID\n";
    return kOk;
  }
  std::cout << "INVALID: " << report.violations.size() << " Brent equation(s) violated\n";
  const std::size_t shown = std::min<std::size_t>(10, report.violations.size());
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& v = report.violations[i];
    std::cout << "  (l,q)=(" << v.l << "," << v.q << ") (i,j)=(" << v.i << "," << v.j << ") (g,h)=(" << v.g << ","
              << v.h << "): expected " << v.expected << ", actual " << v.actual << '\n';
  }
  return kInvalid;
}

// --- info / bounds --------------------------------------------------------

int run_info(const std::string& path) {
  const auto alg = load_algorithm(path);
  const auto& d = alg.dims();
  const auto row = known_bounds().lookup(d);
  std::cout << "rank " << alg.rank() << ", exponent " << exponent_or_na(alg) << ", bounds ";
  if (row) {
    std::cout << "[" << bound_text(row->lower) << "," << bound_text(row->upper) << "]\n";
  } else {
    std::cout << "none\n";
  }
  std::cout << "dims " << d.to_string() << '\n'
            << "nonzeros U " << alg.nonzeros(Factor::U) << ", V " << alg.nonzeros(Factor::V) << ", W "
            << alg.nonzeros(Factor::W) << '\n';
  if (row) std::cout << "known bounds: " << row->note << '\n';
  const auto generic = KnownRankBounds::generic_lower_bound(d);
  std::cout << "generic lower bound (m+n-1)k = " << generic << '\n';
  if (alg.rank() < generic) std::cout << "FLAG: rank is below the generic lower bound\n";
  if (row && row->upper && alg.rank() > *row->upper) {
    std::cout << "FLAG: rank exceeds the known upper bound " << *row->upper << '\n';
  }
  if (row && row->lower && alg.rank() < *row->lower) {
    std::cout << "FLAG: rank is below the known lower bound " << *row->lower << '\n';
  }
  return kOk;
}

int run_bounds(std::size_t m, std::size_t k, std::size_t n) {
  if (m || k || n) {
    if (!(m && k && n)) throw BadArgument("bounds needs all of --m --k --n, or none");
    const DimensionTriple d(m, k, n);
    const auto row = known_bounds().lookup(d);
    std::cout << d.to_string() << ": ";
    if (row) {
      std::cout << "[" << bound_text(row->lower) << "," << bound_text(row->upper) << "] " << row->note;
    } else {
      std::cout << "no recorded bounds";
    }
    std::cout << "; generic lower bound " << KnownRankBounds::generic_lower_bound(d) << '\n';
    return kOk;
  }
  std::cout << "dims,lower,upper,note\n";
  for (const auto& e : known_bounds().entries) {
    std::cout << e.dims.to_string() << ',' << bound_text(e.lower) << ',' << bound_text(e.upper) << ',' << e.note
              << '\n';
  }
  std::cout << "(2,2,n) n>=3,3n+2,-,r22n >= 3n+2\n"
            << "(m,k,n),(m+n-1)k,-,generic lower bound\n";
  return kOk;
}

// --- transforms -----------------------------------------------------------

BilinearAlgorithm load_valid(const std::string& path) {
  auto alg = load_algorithm(path);
  require_valid(alg, "input " + path);
  return alg;
}

int run_dual(const std::string& path, const std::string& perm, const std::string& out_path) {
  const auto p = parse_duality(perm);
  const auto alg = load_valid(path);
  Output out(out_path);
  emit_algorithm(out, dual(alg, p));
  return kOk;
}

int run_product(const std::string& p1, const std::string& p2, const std::string& out_path) {
  const auto a1 = load_valid(p1);
  const auto a2 = load_valid(p2);
  Output out(out_path);
  emit_algorithm(out, tensor_product(a1, a2));
  return kOk;
}

int run_square(const std::string& path, const std::string& out_path) {
  const auto alg = load_valid(path);
  Output out(out_path);
  emit_algorithm(out, squareify(alg));
  return kOk;
}

struct EquivArgs {
  std::string path;
  std::uint64_t seed = 0;
  std::string transform;
  std::string save_transform;
  std::string out;
};

int run_equiv(const EquivArgs& a) {
  const auto alg = load_valid(a.path);
  EquivalenceTransform t = [&] {
    if (a.transform.empty()) return random_equivalence(alg.dims(), alg.rank(), a.seed);
    std::ifstream in(a.transform);
    if (!in) throw BadArgument("cannot open '" + a.transform + "'");
    return read_transform(in);
  }();
  if (!a.save_transform.empty()) {
    std::ofstream ts(a.save_transform);
    if (!ts) throw BadArgument("cannot write '" + a.save_transform + "'");
    write_transform(ts, t);
  }
  Output out(a.out);
  emit_algorithm(out, apply_equivalence(alg, t));
  return kOk;
}

// --- execution ------------------------------------------------------------

RecursionConfig make_config(const std::string& alg_name, std::size_t threshold, std::ostream& report) {
  auto alg = resolve_algorithm(alg_name);
  require_valid(alg, "algorithm " + alg_name);
  if (!alg.dims().is_square()) {
    report << "note: base " << alg.dims().to_string() << " squareified\n";
    alg = squareify(alg);
  }
  return RecursionConfig(std::move(alg), threshold);
}

struct ExecArgs {
  std::vector<std::string> inputs;
  std::string alg = "strassen";
  std::size_t threshold = 1;
  std::string out;
};

int run_multiply(const ExecArgs& a) {
  Output out(a.out);
  const auto cfg = make_config(a.alg, a.threshold, out.report());
  const auto lhs = load_matrix(a.inputs.at(0));
  const auto rhs = load_matrix(a.inputs.at(1));
  if (lhs.cols() != rhs.rows()) {
    throw DimensionError("cannot multiply " + std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()) +
                         " by " + std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols()));
  }
  // Rectangular inputs are zero-padded to a common square size here.
  const std::size_t side = std::max({lhs.rows(), lhs.cols(), rhs.cols()});
  auto [prod, cost] = recursive_multiply(cfg, lhs.padded(side, side), rhs.padded(side, side));
  const auto result = prod.block(0, 0, lhs.rows(), rhs.cols());
  out.write([&](std::ostream& os) { write_matrix(os, result); });
  print_cost(out.report(), cost);
  return kOk;
}

int run_invert(const ExecArgs& a) {
  Output out(a.out);
  const auto cfg = make_config(a.alg, a.threshold, out.report());
  const auto m = load_matrix(a.inputs.at(0));
  try {
    auto [inv, cost] = recursive_invert(cfg, m);
    out.write([&](std::ostream& os) { write_matrix(os, inv); });
    print_cost(out.report(), cost);
  } catch (const SingularMatrix&) {
    throw Rejected("SingularMatrix: input is not invertible");
  } catch (const PivotFailure& e) {
    throw Rejected(std::string("PivotFailure: ") + e.what());
  }
  return kOk;
}

struct BenchArgs {
  std::string alg = "strassen";
  std::size_t threshold = 1;
  std::vector<std::size_t> sizes;
  std::size_t max_size = 64;
  std::uint64_t seed = 0;
  std::string out;
};

int run_bench(const BenchArgs& a) {
  Output out(a.out);
  const auto cfg = make_config(a.alg, a.threshold, std::cerr);
  std::vector<std::size_t> sizes = a.sizes;
  if (sizes.empty()) {
    for (std::size_t k = cfg.base_side(); k <= a.max_size; k *= cfg.base_side()) sizes.push_back(k);
  }
  const PrimeField field(PrimeField::kMersenne61);
  std::mt19937_64 rng(a.seed);
  auto random_matrix = [&](std::size_t k) {
    std::vector<ModularScalar> e;
    e.reserve(k * k);
    for (std::size_t i = 0; i < k * k; ++i) e.push_back(field.element(rng()));
    return Matrix<ModularScalar>(k, k, std::move(e));
  };

  std::optional<std::size_t> crossover;
  std::ostringstream table;
  table << "K,measured_mults,measured_adds,predicted_mults\n";
  for (const auto k : sizes) {
    if (k == 0) throw BadArgument("sizes must be positive");
    const auto lhs = random_matrix(k);
    const auto rhs = random_matrix(k);
    auto [prod, cost] = recursive_multiply(cfg, lhs, rhs);
    if (prod != mat_classical_multiply(lhs, rhs)) throw Rejected("product mismatch at K=" + std::to_string(k));
    table << k << ',' << cost.bilinear_mults << ',' << cost.additions << ',';
    if (cfg.padded_side(k) == k) table << cost_model(cfg.base(), k, cfg.threshold()).bilinear_mults;
    table << '\n';
    const std::uint64_t k3 = std::uint64_t{k} * k * k;
    const std::uint64_t classical_ops = k3 + k3 - std::uint64_t{k} * k;
    if (!crossover && cost.bilinear_mults + cost.additions + cost.scalar_mults < classical_ops) crossover = k;
  }
  if (crossover) {
    table << "# classical crossover at K=" << *crossover << '\n';
  } else {
    table << "# no classical crossover among the measured sizes\n";
  }
  out.write([&](std::ostream& os) { os << table.str(); });
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bilinear matrix-multiplication workbench"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate classical, strassen or pan algorithms");
  gen_cmd->add_option("kind", gen.kind)->required()->check(CLI::IsMember({"classical", "strassen", "pan"}));
  gen_cmd->add_option("--m", gen.m, "rows of A (classical)");
  gen_cmd->add_option("--k", gen.k, "inner dimension (classical)");
  gen_cmd->add_option("--n", gen.n, "n (pan: even size; classical: columns of B, or the square size)");
  gen_cmd->add_option("--out", gen.out, "output file (default: stdout)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check an algorithm file");
  verify_cmd->add_option("path", verify.path, "mmalg-v1 file, '-' for stdin")->required();
  verify_cmd->add_option("--mode", verify.mode)->check(CLI::IsMember({"brent", "random"}));
  verify_cmd->add_option("--trials", verify.trials);
  verify_cmd->add_option("--prime", verify.prime);
  verify_cmd->add_option("--seed", verify.seed);

  std::string info_path;
  auto* info_cmd = app.add_subcommand("info", "Rank, exponent and known bounds of an algorithm");
  info_cmd->add_option("path", info_path)->required();

  std::size_t bm = 0, bk = 0, bn = 0;
  auto* bounds_cmd = app.add_subcommand("bounds", "Known rank bounds");
  bounds_cmd->add_option("--m", bm);
  bounds_cmd->add_option("--k", bk);
  bounds_cmd->add_option("--n", bn);

  std::string dual_path, dual_perm, dual_out;
  auto* dual_cmd = app.add_subcommand("dual", "Algorithm for a permuted problem");
  dual_cmd->add_option("path", dual_path)->required();
  dual_cmd->add_option("--perm", dual_perm, "target triple: mkn, knm, nmk, mnk, kmn or nkm")->required();
  dual_cmd->add_option("--out", dual_out);

  std::string prod_a, prod_b, prod_out;
  auto* product_cmd = app.add_subcommand("product", "Tensor product of two algorithms");
  product_cmd->add_option("first", prod_a)->required();
  product_cmd->add_option("second", prod_b)->required();
  product_cmd->add_option("--out", prod_out);

  std::string sq_path, sq_out;
  auto* square_cmd = app.add_subcommand("square", "Square algorithm of side mkn and rank R^3");
  square_cmd->add_option("path", sq_path)->required();
  square_cmd->add_option("--out", sq_out);

  EquivArgs equiv;
  auto* equiv_cmd = app.add_subcommand("equiv", "Apply an equivalence transform");
  equiv_cmd->add_option("path", equiv.path)->required();
  auto* seed_opt = equiv_cmd->add_option("--seed", equiv.seed, "random transform seed");
  equiv_cmd->add_option("--transform", equiv.transform, "mmequiv-v1 transform file")->excludes(seed_opt);
  equiv_cmd->add_option("--save-transform", equiv.save_transform, "write the applied transform");
  equiv_cmd->add_option("--out", equiv.out);

  ExecArgs mult;
  auto* multiply_cmd = app.add_subcommand("multiply", "Multiply two matrix files recursively");
  multiply_cmd->add_option("inputs", mult.inputs)->required()->expected(2);
  multiply_cmd->add_option("--alg", mult.alg, "strassen, classical or an mmalg-v1 file");
  multiply_cmd->add_option("--threshold", mult.threshold)->check(CLI::PositiveNumber);
  multiply_cmd->add_option("--out", mult.out);

  ExecArgs inv;
  auto* invert_cmd = app.add_subcommand("invert", "Invert a matrix file by block recursion");
  invert_cmd->add_option("input", inv.inputs)->required()->expected(1);
  invert_cmd->add_option("--alg", inv.alg, "strassen, classical or an mmalg-v1 file");
  invert_cmd->add_option("--threshold", inv.threshold)->check(CLI::PositiveNumber);
  invert_cmd->add_option("--out", inv.out);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Operation counts of recursive multiplication");
  bench_cmd->add_option("--alg", bench.alg, "strassen, classical or an mmalg-v1 file");
  bench_cmd->add_option("--threshold", bench.threshold)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--sizes", bench.sizes, "sizes K to run")->delimiter(',');
  bench_cmd->add_option("--max-size", bench.max_size, "largest power of the base side (default 64)");
  bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_option("--out", bench.out, "CSV output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*verify_cmd) return run_verify(verify);
    if (*info_cmd) return run_info(info_path);
    if (*bounds_cmd) return run_bounds(bm, bk, bn);
    if (*dual_cmd) return run_dual(dual_path, dual_perm, dual_out);
    if (*product_cmd) return run_product(prod_a, prod_b, prod_out);
    if (*square_cmd) return run_square(sq_path, sq_out);
    if (*equiv_cmd) return run_equiv(equiv);
    if (*multiply_cmd) return run_multiply(mult);
    if (*invert_cmd) return run_invert(inv);
    if (*bench_cmd) return run_bench(bench);
  } catch (const Rejected& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const InvalidAlgorithm& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
