// oinv: command-line front end for the invariant-theory toolkit.
//
// Results go to stdout as `key: value` lines ending with one `verdict:`
// line; diagnostics go to stderr. Exit codes: 0 computed, 1 negative
// verdict (not invariant / not in kernel), 2 usage or input error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "oinv/errors.hpp"
#include "oinv/fundamental.hpp"
#include "oinv/invariance.hpp"
#include "oinv/isometry.hpp"
#include "oinv/metric.hpp"
#include "oinv/text.hpp"

namespace {

constexpr int kExitComputed = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_pair(const std::string& text, const char* what) {
  std::istringstream in(text);
  int a = 0;
  int b = 0;
  char comma = 0;
  if (!(in >> a >> comma >> b) || comma != ',' || !(in >> std::ws).eof())
    throw UsageError(std::string(what) + " must look like 'a,b', got '" + text + "'");
  return {a, b};
}

std::string read_source(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

/// Largest vector index the polynomial mentions (at least 1).
int infer_vectors(const oinv::Polynomial& p) {
  int m = 1;
  for (oinv::Variable v : p.variables())
    m = std::max(m, v.is_gram() ? v.second() : v.first());
  return m;
}

std::string inline_matrix(const oinv::Matrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r > 0) out += "; ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ' ';
      out += oinv::to_string(m(r, c));
    }
  }
  return out;
}

std::string index_list(const std::vector<int>& idx) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(idx[i]);
  }
  return out;
}

std::string minor_key(const oinv::MinorId& id) {
  return "[" + index_list(id.rows) + "|" + index_list(id.cols) + "]";
}

void print_witness(std::ostream& out, const oinv::InvarianceVerdict& verdict) {
  if (!verdict.witness()) return;
  if (const auto* lie = std::get_if<oinv::LieWitness>(&*verdict.witness())) {
    out << "witness-kind: lie-algebra\n"
        << "witness-matrix: " << inline_matrix(lie->element.matrix()) << '\n'
        << "witness-polynomial: " << oinv::format_polynomial(lie->derivative) << '\n';
  } else {
    const auto& group = std::get<oinv::GroupWitness>(*verdict.witness());
    out << "witness-kind: isometry\n"
        << "witness-matrix: " << inline_matrix(group.isometry.matrix()) << '\n'
        << "witness-polynomial: " << oinv::format_polynomial(group.difference) << '\n';
  }
}

struct CommonOptions {
  std::string signature = "";
  int vectors = 0;
  std::string poly_path;

  oinv::Signature sig() const {
    if (signature.empty()) throw UsageError("--sig p,q is required");
    auto [p, q] = parse_pair(signature, "--sig");
    return oinv::Signature(p, q);
  }

  int require_vectors() const {
    if (vectors < 1) throw UsageError("--vectors m is required");
    return vectors;
  }

  oinv::GramContext context_for(const oinv::Polynomial& p) const {
    return oinv::GramContext(sig(), vectors >= 1 ? vectors : infer_vectors(p));
  }

  oinv::Polynomial polynomial() const { return oinv::parse_polynomial(read_source(poly_path)); }
};

void print_header(std::ostream& out, const oinv::GramContext& ctx) {
  out << "signature: " << ctx.signature().p() << ',' << ctx.signature().q() << '\n'
      << "vectors: " << ctx.m() << '\n';
}

int run_gram(const CommonOptions& opts, const std::string& pair) {
  auto [i, j] = parse_pair(pair, "--pair");
  oinv::GramContext ctx(opts.sig(), opts.vectors >= 1 ? opts.vectors : std::max(i, j));
  print_header(std::cout, ctx);
  std::cout << "pair: " << std::min(i, j) << ',' << std::max(i, j) << '\n'
            << "gram: " << oinv::format_polynomial(oinv::gram_polynomial(ctx, i, j)) << '\n'
            << "verdict: computed\n";
  return kExitComputed;
}

int run_minors(const CommonOptions& opts) {
  oinv::GramContext ctx(opts.sig(), opts.require_vectors());
  const auto minors = oinv::enumerate_minors(ctx.n(), ctx.m());
  print_header(std::cout, ctx);
  std::cout << "minor-size: " << ctx.n() + 1 << '\n' << "count: " << minors.size() << '\n';
  for (const auto& id : minors)
    std::cout << "minor" << minor_key(id) << ": "
              << oinv::format_polynomial(oinv::minor_polynomial(id.rows, id.cols)) << '\n';
  std::cout << "verdict: computed\n";
  return kExitComputed;
}

int run_check(const CommonOptions& opts, bool randomized, int trials, std::uint64_t seed) {
  const auto f = opts.polynomial();
  const auto ctx = opts.context_for(f);
  print_header(std::cout, ctx);
  std::cout << "polynomial: " << oinv::format_polynomial(f) << '\n';
  oinv::InvarianceVerdict verdict = oinv::InvarianceVerdict::invariant();
  if (randomized) {
    std::cout << "method: randomized\n"
              << "trials: " << trials << '\n'
              << "seed: " << seed << '\n';
    verdict = oinv::randomized_invariance_check(ctx, f, trials, seed);
  } else {
    std::cout << "method: exact\n";
    verdict = oinv::check_invariant(ctx, f);
  }
  print_witness(std::cout, verdict);
  if (verdict.is_invariant()) {
    std::cout << "verdict: invariant" << (randomized ? " (probabilistic)" : "") << '\n';
    return kExitComputed;
  }
  std::cout << "verdict: not-invariant\n";
  return kExitNegative;
}

int run_rewrite(const CommonOptions& opts) {
  const auto f = opts.polynomial();
  const auto ctx = opts.context_for(f);
  print_header(std::cout, ctx);
  std::cout << "polynomial: " << oinv::format_polynomial(f) << '\n';
  try {
    const auto rewritten = oinv::fft_rewrite(ctx, f);
    std::cout << "rewrite: " << oinv::format_polynomial(rewritten) << '\n'
              << "verdict: invariant\n";
    return kExitComputed;
  } catch (const oinv::NotInvariant& e) {
    std::cerr << e.what() << '\n';
    print_witness(std::cout, e.verdict());
    std::cout << "verdict: not-invariant\n";
    return kExitNegative;
  }
}

int run_kernel(const CommonOptions& opts) {
  const auto p = opts.polynomial();
  const auto ctx = opts.context_for(p);
  print_header(std::cout, ctx);
  const bool in_kernel = oinv::kernel_test(ctx, p);
  std::cout << "polynomial: " << oinv::format_polynomial(p) << '\n'
            << "pullback: "
            << oinv::format_polynomial(oinv::substitute(p, ctx.gram_substitution())) << '\n'
            << "in-kernel: " << (in_kernel ? "true" : "false") << '\n'
            << "verdict: " << (in_kernel ? "in-kernel" : "not-in-kernel") << '\n';
  return in_kernel ? kExitComputed : kExitNegative;
}

int run_certify(const CommonOptions& opts) {
  const auto p = opts.polynomial();
  const auto ctx = opts.context_for(p);
  print_header(std::cout, ctx);
  std::cout << "polynomial: " << oinv::format_polynomial(p) << '\n';
  try {
    const auto cert = oinv::membership_certificate(ctx, p);
    std::cout << "terms: " << cert.combination().size() << '\n';
    for (const auto& [id, cofactor] : cert.combination())
      std::cout << "cofactor" << minor_key(id) << ": " << oinv::format_polynomial(cofactor) << '\n';
    std::cout << "verified: " << (cert.certifies(p) ? "true" : "false") << '\n'
              << "verdict: certified\n";
    return kExitComputed;
  } catch (const oinv::NotInKernel& e) {
    std::cerr << e.what() << '\n';
    std::cout << "verdict: not-in-kernel\n";
    return kExitNegative;
  } catch (const oinv::NoCertificateAtDegree& e) {
    std::cerr << e.what() << '\n';
    std::cout << "verdict: no-certificate-at-degree\n";
    return kExitNegative;
  }
}

int run_normal_form(const CommonOptions& opts) {
  const auto p = opts.polynomial();
  const auto ctx = opts.context_for(p);
  print_header(std::cout, ctx);
  const auto nf = oinv::normal_form(ctx, p);
  std::cout << "polynomial: " << oinv::format_polynomial(p) << '\n'
            << "normal-form: " << oinv::format_polynomial(nf.representative) << '\n'
            << "verdict: computed\n";
  return kExitComputed;
}

int run_independence(const CommonOptions& opts, const std::string& point_path,
                     std::optional<std::uint64_t> seed) {
  const oinv::Signature sig = opts.sig();
  std::size_t rank = 0;
  std::size_t expected = 0;
  int attempts = 1;
  oinv::Matrix point_matrix;
  int m = opts.vectors;
  if (!point_path.empty()) {
    point_matrix = oinv::parse_matrix(read_source(point_path));
    if (point_matrix.cols() != static_cast<std::size_t>(sig.n()))
      throw UsageError("point file needs n entries per row");
    if (m < 1) m = static_cast<int>(point_matrix.rows());
    if (point_matrix.rows() != static_cast<std::size_t>(m))
      throw UsageError("point file needs one row per vector");
    oinv::GramContext ctx(sig, m);
    oinv::Assignment point;
    for (int k = 1; k <= m; ++k)
      for (int a = 1; a <= sig.n(); ++a)
        point.emplace(oinv::Variable::x(k, a),
                      point_matrix(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(a - 1)));
    rank = oinv::gram_jacobian_rank(ctx, point);
    expected = static_cast<std::size_t>(m * (m + 1) / 2);
  } else {
    if (!seed) throw UsageError("independence needs --point FILE or --seed S");
    oinv::GramContext ctx(sig, opts.require_vectors());
    const auto report = oinv::independence_check(ctx, *seed);
    rank = report.rank;
    expected = report.expected;
    attempts = report.attempts;
    point_matrix = oinv::Matrix(static_cast<std::size_t>(m), static_cast<std::size_t>(sig.n()));
    for (const auto& [v, value] : report.point)
      point_matrix(static_cast<std::size_t>(v.first() - 1), static_cast<std::size_t>(v.second() - 1)) = value;
  }
  std::cout << "signature: " << sig.p() << ',' << sig.q() << '\n'
            << "vectors: " << m << '\n'
            << "point: " << inline_matrix(point_matrix) << '\n'
            << "attempts: " << attempts << '\n'
            << "rank: " << rank << '\n'
            << "expected: " << expected << '\n'
            << "verdict: " << (rank == expected ? "independent" : "dependent") << '\n';
  return kExitComputed;
}

int run_sample(const CommonOptions& opts, std::uint64_t seed, std::int64_t magnitude) {
  const oinv::Signature sig = opts.sig();
  const auto q = oinv::sample_isometry(sig, seed, magnitude);
  std::cout << "signature: " << sig.p() << ',' << sig.q() << '\n'
            << "seed: " << seed << '\n'
            << "magnitude: " << magnitude << '\n'
            << "matrix:\n"
            << oinv::format_matrix(q.matrix()) << "verdict: isometry\n";
  return kExitComputed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariant theory of the orthogonal groups O(p,q)"};
  app.require_subcommand(1);

  CommonOptions opts;
  auto add_common = [&](CLI::App* sub, bool with_poly) {
    sub->add_option("--sig", opts.signature, "Signature p,q")->required();
    sub->add_option("--vectors", opts.vectors, "Number m of vector arguments");
    if (with_poly) sub->add_option("--poly", opts.poly_path, "Polynomial file (default: stdin)");
  };

  std::string pair;
  auto* gram = app.add_subcommand("gram", "Print the Gram function y_ij");
  add_common(gram, false);
  gram->add_option("--pair", pair, "Index pair i,j")->required();

  auto* minors = app.add_subcommand("minors", "Enumerate the (n+1)-minors generating the relations");
  add_common(minors, false);

  bool randomized = false;
  int trials = 100;
  std::uint64_t check_seed = 0;
  auto* check = app.add_subcommand("check", "Decide O(p,q)-invariance of a polynomial in x");
  add_common(check, true);
  check->add_flag("--random", randomized, "Use the randomized rational-point test");
  check->add_option("--trials", trials, "Number of sampled isometries")->check(CLI::PositiveNumber);
  check->add_option("--seed", check_seed, "Seed for the randomized test");

  auto* rewrite = app.add_subcommand("rewrite", "Express an invariant in the Gram symbols Y");
  add_common(rewrite, true);
  auto* kernel = app.add_subcommand("kernel", "Test whether a Y-polynomial vanishes on the Gram map");
  add_common(kernel, true);
  auto* certify = app.add_subcommand("certify", "Write a kernel element as a combination of minors");
  add_common(certify, true);
  auto* normal = app.add_subcommand("normal-form", "Canonical representative modulo the relation ideal");
  add_common(normal, true);

  std::string point_path;
  std::optional<std::uint64_t> independence_seed;
  auto* independence = app.add_subcommand("independence", "Jacobian rank of the Gram functions");
  add_common(independence, false);
  independence->add_option("--point", point_path, "Point file: m rows of n rationals");
  independence->add_option("--seed", independence_seed, "Seed for random points");

  std::uint64_t sample_seed = 0;
  std::int64_t magnitude = 3;
  auto* sample = app.add_subcommand("sample", "Sample one rational isometry");
  add_common(sample, false);
  sample->add_option("--seed", sample_seed, "Seed")->required();
  sample->add_option("--magnitude", magnitude, "Bound on Cayley numerators and denominators")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gram) return run_gram(opts, pair);
    if (*minors) return run_minors(opts);
    if (*check) return run_check(opts, randomized, trials, check_seed);
    if (*rewrite) return run_rewrite(opts);
    if (*kernel) return run_kernel(opts);
    if (*certify) return run_certify(opts);
    if (*normal) return run_normal_form(opts);
    if (*independence) return run_independence(opts, point_path, independence_seed);
    if (*sample) return run_sample(opts, sample_seed, magnitude);
  } catch (const oinv::SyntaxError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const oinv::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
