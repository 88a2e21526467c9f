#include "cuspcodes/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "cuspcodes/construct.hpp"
#include "cuspcodes/cuspcode.hpp"
#include "cuspcodes/error.hpp"
#include "cuspcodes/rng.hpp"
#include "cuspcodes/singular.hpp"
#include "cuspcodes/wedge.hpp"

namespace cuspcodes {

namespace {

unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

std::vector<unsigned> parse_list(const std::string& text) { return PartitionType::parse(text).parts; }

void print_counts(std::ostream& out, const std::string& head, const CuspCounts& c) {
  out << head << " degree " << c.degree << '\n';
  for (const auto& p : c.pairs) out << "  pair " << p.i + 1 << ',' << p.j + 1 << ": " << p.n << '\n';
  out << "  total: " << c.total << " (bound " << miyaoka_bound(c.degree) << ")\n";
}

void print_tables(std::ostream& out) {
  for (unsigned d : {6u, 9u}) {
    out << "direct constructions, degree " << d << '\n';
    for (const auto& t : tabulated_direct_types(d)) out << "  " << t.to_string() << ": " << count_direct(d, t).total << '\n';
  }
  out << "residual constructions\n";
  for (const auto& row : tabulated_residual_rows()) {
    const CuspCounts c = count_residual(row.c, row.b);
    out << "  c=" << PartitionType{row.c}.to_string() << " b=" << row.b << ": d=" << c.degree << " pairs";
    for (const auto& p : c.pairs) out << ' ' << p.n;
    out << " total " << c.total << '\n';
  }
}

std::string enumerator_text(const std::map<std::size_t, std::uint64_t>& e) {
  std::ostringstream os;
  for (const auto& [w, n] : e) os << ' ' << w << ':' << n;
  return os.str();
}

void print_code(std::ostream& out, const PartitionType& parts, unsigned d) {
  const TCode ext = extended_code(parts, d);
  const TCode proper = proper_subcode(ext);
  out << "type " << parts.to_string() << " degree " << d << '\n';
  out << ext.matrix_text();
  out << "extended dim " << ext.dimension() << ", proper dim " << proper.dimension() << ", length "
      << proper.layout.length() << '\n';
  const auto en = weight_enumerator(proper);
  out << "proper weights:" << enumerator_text(en) << '\n';
  std::size_t minw = 0;
  for (const auto& [w, n] : en)
    if (w > 0) {
      minw = w;
      break;
    }
  out << "min proper weight: " << minw << '\n';
  const bool even = std::all_of(proper.layout.sizes.begin(), proper.layout.sizes.end(), [](unsigned s) { return s % 2 == 0; });
  if (even) {
    const InvolutionSplit split = involution_split(proper, half_swap_pairing(proper.layout));
    out << "involution split: plus " << split.plus.dimension() << ", minus " << split.minus.dimension()
        << (split.direct_sum ? ", direct sum" : "") << '\n';
  }
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  void report(std::ostream& err) const {
    err << "elapsed: " << std::fixed << std::setprecision(3)
        << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
  }
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cuspidal surfaces and their ternary codes"};
  app.require_subcommand(1);

  // counts
  auto* counts = app.add_subcommand("counts", "Cusp counts of direct and residual constructions");
  unsigned c_degree = 0;
  std::string c_type, c_c;
  unsigned c_b = 0;
  bool c_residual = false, c_all = false;
  counts->add_option("--degree", c_degree, "Surface degree (defaults to the sum of the parts)");
  counts->add_option("--type", c_type, "Partition type, e.g. 1,1,2,2");
  counts->add_flag("--residual", c_residual, "Residual construction");
  counts->add_option("--c", c_c, "Residual degrees c_i");
  counts->add_option("--b", c_b, "Degree of the residual surface");
  counts->add_flag("--all", c_all, "Print every tabulated construction");

  // build
  auto* build = app.add_subcommand("build", "Sample a surface and certify its cusps");
  std::string b_type, b_c, b_out;
  unsigned b_b = 0, b_retries = 32, b_budget = 24, b_workers = default_workers();
  bool b_residual = false;
  std::uint64_t b_prime = 31, b_seed = 0;
  build->add_option("--type", b_type, "Partition type");
  build->add_flag("--residual", b_residual, "Residual construction");
  build->add_option("--c", b_c, "Residual degrees c_i");
  build->add_option("--b", b_b, "Degree of the residual surface");
  build->add_option("--prime", b_prime, "Field characteristic")->capture_default_str();
  build->add_option("--seed", b_seed, "Sampling seed")->envname("CUSPCODES_SEED")->capture_default_str();
  build->add_option("--retries", b_retries, "Samples to try")->check(CLI::PositiveNumber)->capture_default_str();
  build->add_option("--ext-budget", b_budget, "Largest extension degree solved explicitly")->capture_default_str();
  build->add_option("--workers", b_workers, "Threads for the rational scan")->check(CLI::PositiveNumber);
  build->add_option("--out", b_out, "Directory for manifest, polynomials and certificate");

  // code
  auto* code = app.add_subcommand("code", "Codes of cusp sets");
  std::string k_type;
  unsigned k_degree = 0;
  bool k_lattice = false, k_cusps27 = false;
  code->add_option("--type", k_type, "Partition type");
  code->add_option("--degree", k_degree, "Degree (defaults to the sum of the parts)");
  code->add_flag("--lattice", k_lattice, "Dimension lattice of sextic types");
  code->add_flag("--cusps27", k_cusps27, "Code of the residual sextic with 27 cusps");

  // wedge-verify
  auto* wedge = app.add_subcommand("wedge-verify", "Check invariant codes in the exterior square of F_3^6");
  std::string w_mode = "exhaustive";
  unsigned w_workers = default_workers();
  std::uint64_t w_seed = 0;
  wedge->add_option("--mode", w_mode, "exhaustive or orbit-reduced")
      ->check(CLI::IsMember({"exhaustive", "orbit-reduced"}))
      ->capture_default_str();
  wedge->add_option("--workers", w_workers, "Threads")->check(CLI::PositiveNumber);
  wedge->add_option("--seed", w_seed, "Seed of the random witness stage")->envname("CUSPCODES_SEED");

  // fermat
  auto* fermat = app.add_subcommand("fermat", "Fermat-type sextic with 27 cusps on the coordinate planes");
  std::uint64_t f_prime = 31, f_seed = 0;
  std::string f_lambda;
  unsigned f_budget = 24, f_workers = default_workers();
  bool f_search = false;
  fermat->add_option("--prime", f_prime, "Field characteristic")->capture_default_str();
  fermat->add_option("--lambda", f_lambda, "lambda_1,lambda_2,lambda_3 as integers");
  fermat->add_flag("--search", f_search, "Search lambda in {1,2,3}^3 in seeded order");
  fermat->add_option("--seed", f_seed, "Search seed")->envname("CUSPCODES_SEED");
  fermat->add_option("--ext-budget", f_budget, "Largest extension degree solved explicitly")->capture_default_str();
  fermat->add_option("--workers", f_workers, "Threads for the rational scan")->check(CLI::PositiveNumber);

  std::vector<std::string> args(argv + 1, argv + argc);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  const Timer timer;
  try {
    if (counts->parsed()) {
      if (c_all) {
        print_tables(out);
      } else if (c_residual || !c_c.empty()) {
        if (c_c.empty() || c_b == 0) throw CLI::ValidationError("--residual needs --c and --b");
        const CuspCounts c = count_residual(parse_list(c_c), c_b);
        print_counts(out, "residual c=" + c_c + " b=" + std::to_string(c_b), c);
      } else {
        if (c_type.empty()) throw CLI::ValidationError("counts needs --type, --residual or --all");
        const PartitionType t = PartitionType::parse(c_type);
        const unsigned d = c_degree ? c_degree : t.degree();
        print_counts(out, "type " + t.to_string(), count_direct(d, t));
      }
      return kExitOk;
    }

    if (build->parsed()) {
      const Field field = FieldCtx::make(b_prime);
      const bool residual = b_residual || !b_c.empty();
      if (!residual && b_type.empty()) throw CLI::ValidationError("build needs --type or --residual");
      if (residual && (b_c.empty() || b_b == 0)) throw CLI::ValidationError("--residual needs --c and --b");
      // Validate parameters before sampling.
      const PartitionType type = residual ? PartitionType{} : PartitionType::parse(b_type);
      const std::vector<unsigned> cs = residual ? parse_list(b_c) : std::vector<unsigned>{};
      if (residual) count_residual(cs, b_b);
      else count_direct(type.degree(), type);

      VerifyOptions vo;
      vo.ext_budget = b_budget;
      vo.workers = b_workers;
      for (unsigned attempt = 0; attempt < b_retries; ++attempt) {
        const std::uint64_t seed = attempt == 0 ? b_seed : derive_seed(b_seed, {0xb1, attempt});
        const SurfaceRecipe recipe = residual ? build_residual(cs, b_b, field, seed) : build_direct(type, field, seed);
        vo.seed = seed;
        const AdmissibilityCertificate cert = verify_admissible(recipe, vo);
        if (!cert.passed) {
          err << "sample " << attempt + 1 << " (seed " << seed << ") rejected\n";
          continue;
        }
        std::ostringstream report;
        report << "samples: " << attempt + 1 << '\n' << cert.to_text();
        out << report.str();
        if (!b_out.empty()) {
          write_recipe(recipe, b_out);
          std::ofstream(std::filesystem::path(b_out) / "certificate.txt") << report.str();
        }
        timer.report(err);
        return kExitOk;
      }
      out << "RetriesExhausted: no admissible sample in " << b_retries << " tries\n";
      timer.report(err);
      return kExitFailure;
    }

    if (code->parsed()) {
      if (k_lattice) {
        const LatticeReport rep = sextic_lattice();
        out << rep.to_text();
        return rep.ok ? kExitOk : kExitFailure;
      }
      if (k_cusps27) {
        out << cusps27().to_text();
        return kExitOk;
      }
      if (k_type.empty()) throw CLI::ValidationError("code needs --type, --lattice or --cusps27");
      const PartitionType t = PartitionType::parse(k_type);
      print_code(out, t, k_degree ? k_degree : t.degree());
      return kExitOk;
    }

    if (wedge->parsed()) {
      const VerifyMode mode = w_mode == "exhaustive" ? VerifyMode::Exhaustive : VerifyMode::OrbitReduced;
      const WedgeVerifyReport rep = wedge_verify(mode, w_workers, w_seed);
      out << rep.to_text();
      timer.report(err);
      return rep.passed() ? kExitOk : kExitFailure;
    }

    if (fermat->parsed()) {
      const Field field = FieldCtx::make(f_prime);
      VerifyOptions vo;
      vo.ext_budget = f_budget;
      vo.workers = f_workers;
      AdmissibilityCertificate cert;
      if (f_search) {
        const FermatSearchResult res = fermat_search(field, f_seed, vo);
        out << "search: seed " << f_seed << ", tried " << res.tried << ", lambda " << res.lambda[0] << ','
            << res.lambda[1] << ',' << res.lambda[2] << (res.found ? "" : " (none passed)") << '\n';
        cert = res.certificate;
      } else {
        if (f_lambda.empty()) throw CLI::ValidationError("fermat needs --lambda or --search");
        std::vector<std::int64_t> l;
        std::stringstream ss(f_lambda);
        for (std::string item; std::getline(ss, item, ',');) l.push_back(std::stoll(item));
        if (l.size() != 3) throw CLI::ValidationError("--lambda takes three integers");
        const std::array<Fel, 3> lam{Fel::from_int(field, l[0]), Fel::from_int(field, l[1]), Fel::from_int(field, l[2])};
        cert = verify_admissible(fermat_family(lam, field), vo);
      }
      out << "quotient matches the expanded closed form\n" << cert.to_text();
      timer.report(err);
      return cert.passed ? kExitOk : kExitFailure;
    }
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: bad number (" << e.what() << ")\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cuspcodes
