#include "app.hpp"

#include "bench.hpp"
#include "check.hpp"

#include <gf2/errors.hpp>
#include <gf2/io.hpp>
#include <gf2/rowops.hpp>
#include <gf2/tuning.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>

namespace gf2::cli {

namespace {

struct ParamFlags {
  ParamOverrides values;
  std::string config_path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--cutoff", values.cutoff, "Strassen-Winograd crossover dimension");
    cmd->add_option("--bs", values.bs, "M4RM row block size");
    cmd->add_option("--k", values.k, "Gray table width (0 = derive)");
    cmd->add_option("--t", values.t, "Number of Gray tables (1..8)");
    cmd->add_option("--l1", values.l1_bytes, "L1 data cache size in bytes");
    cmd->add_option("--l2", values.l2_bytes, "L2 cache size in bytes");
  }

  // Command-line flags win over the config file, which wins over derived defaults.
  MulParams resolve() const {
    ParamOverrides o = values;
    std::string path = config_path;
    if (path.empty())
      if (const char* env = std::getenv("GF2MAT_CONFIG")) path = env;
    if (!path.empty()) {
      std::ifstream in(path);
      if (!in) throw error("cannot open config file " + path);
      merge_overrides(o, parse_config(in));
    }
    return resolve_params(o);
  }
};

void print_params(std::ostream& out, const MulParams& p) {
  out << "l1_bytes=" << p.l1_bytes << '\n'
      << "l2_bytes=" << p.l2_bytes << '\n'
      << "cutoff=" << p.cutoff << '\n'
      << "bs=" << p.bs << '\n'
      << "k=" << p.k << '\n'
      << "t=" << p.t << '\n';
}

std::vector<Dims> parse_dims_list(const std::vector<std::string>& texts) {
  std::vector<Dims> out;
  for (const auto& t : texts) out.push_back(parse_dims(t));
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dense matrix multiplication over GF(2)", "gf2mat"};
  app.require_subcommand(1);
  bool force_scalar = false;
  ParamFlags flags;
  app.add_flag("--force-scalar-xor", force_scalar, "Use plain 64-bit word loops for row additions");
  app.add_option("--config", flags.config_path, "key=value parameter file (default: $GF2MAT_CONFIG)");

  auto* check = app.add_subcommand("check", "Compare all algorithms against the bit-level oracle");
  std::vector<std::string> check_dims{"100x100x100"};
  std::vector<std::string> check_algos;
  std::uint64_t check_seed = 1;
  bool inject_fault = false;
  check->add_option("--dims", check_dims, "MxLxN (repeatable)");
  check->add_option("--algo", check_algos, "Algorithms to check (repeatable)");
  check->add_option("--seed", check_seed, "Seed for the random operands");
  check->add_flag("--inject-fault", inject_fault, "Flip one output bit (harness self-test)")->group("");
  flags.attach(check);

  auto* bench = app.add_subcommand("bench", "Time algorithms and write CSV");
  std::vector<std::string> bench_dims{"1024", "2048", "4096", "8192"};
  std::vector<std::string> bench_algos{"m4rm", "m4rm-blocked", "m4rm-t8", "strassen"};
  BenchOptions bench_opts;
  std::string bench_out;
  bench->add_option("--dims", bench_dims, "MxLxN or N (repeatable)");
  bench->add_option("--algo", bench_algos, "cubic, m4rm, m4rm-blocked, m4rm-t<t>, strassen, auto (repeatable)");
  bench->add_option("--reps", bench_opts.reps, "Timed repetitions per configuration")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_opts.seed, "Seed for the random operands");
  bench->add_option("--out", bench_out, "CSV output path (default: stdout)");
  bench->add_flag("--verify", bench_opts.verify, "Check the last product of each configuration");
  flags.attach(bench);

  auto* gen = app.add_subcommand("gen", "Write a random or identity matrix file");
  std::size_t gen_rows = 0;
  std::size_t gen_cols = 0;
  std::uint64_t gen_seed = 1;
  bool gen_identity = false;
  std::string gen_out;
  gen->add_option("--rows", gen_rows, "Row count")->required();
  gen->add_option("--cols", gen_cols, "Column count");
  gen->add_option("--seed", gen_seed, "Seed");
  gen->add_flag("--identity", gen_identity, "Write the identity (cols defaults to rows)");
  gen->add_option("--out", gen_out, "Output path")->required();

  auto* mul = app.add_subcommand("mul", "Multiply two matrix files");
  std::string mul_a, mul_b, mul_c;
  std::string mul_algo = "auto";
  mul->add_option("a", mul_a, "Left operand file")->required();
  mul->add_option("b", mul_b, "Right operand file")->required();
  mul->add_option("c", mul_c, "Product output file")->required();
  mul->add_option("--algo", mul_algo, "Algorithm");
  flags.attach(mul);

  auto* params = app.add_subcommand("params", "Print the resolved tuning parameters");
  flags.attach(params);

  std::vector<const char*> argv{"gf2mat"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  set_force_scalar_xor(force_scalar);
  try {
    if (*check) {
      CheckOptions opts;
      opts.dims = parse_dims_list(check_dims);
      opts.algorithms = check_algos;
      opts.seed = check_seed;
      opts.params = flags.resolve();
      opts.inject_fault = inject_fault;
      return run_check(opts, out);
    }
    if (*bench) {
      bench_opts.dims = parse_dims_list(bench_dims);
      bench_opts.algorithms = bench_algos;
      bench_opts.params = flags.resolve();
      const auto records = run_bench(bench_opts, &err);
      if (bench_out.empty()) {
        write_csv(out, records);
      } else {
        std::ofstream f(bench_out);
        if (!f) throw error("cannot open " + bench_out + " for writing");
        write_csv(f, records);
        if (!f) throw error("write failed: " + bench_out);
      }
      return exit_ok;
    }
    if (*gen) {
      if (gen_identity) {
        if (gen_cols != 0 && gen_cols != gen_rows) throw dimension_error("identity must be square");
        save_matrix(gen_out, identity(gen_rows));
      } else {
        save_matrix(gen_out, random_matrix(gen_rows, gen_cols, gen_seed));
      }
      return exit_ok;
    }
    if (*mul) {
      const MulParams p = flags.resolve();
      const Algorithm algo = make_algorithm(mul_algo);
      const BitMatrix a = load_matrix(mul_a);
      const BitMatrix b = load_matrix(mul_b);
      if (a.ncols() != b.nrows())
        throw dimension_error("inner dimensions differ: " + std::to_string(a.nrows()) + "x" +
                              std::to_string(a.ncols()) + " times " + std::to_string(b.nrows()) + "x" +
                              std::to_string(b.ncols()));
      save_matrix(mul_c, algo.run(a, b, p));
      return exit_ok;
    }
    if (*params) {
      print_params(out, flags.resolve());
      return exit_ok;
    }
  } catch (const format_error& e) {
    err << "format error: " << e.what() << '\n';
    return exit_bad_file;
  } catch (const dimension_error& e) {
    err << "dimension error: " << e.what() << '\n';
    return exit_invalid;
  } catch (const alignment_error& e) {
    err << "alignment error: " << e.what() << '\n';
    return exit_invalid;
  } catch (const parameter_error& e) {
    err << "parameter error: " << e.what() << '\n';
    return exit_invalid;
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  }
  return exit_failure;
}

}  // namespace gf2::cli
