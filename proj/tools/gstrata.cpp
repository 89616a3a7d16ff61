// gstrata: command-line front end for the stratification library.
//
// Exit codes: 0 success, 1 an internal verification failed, 2 invalid
// arguments, 3 malformed JSON, 4 configuration invariant violated,
// 5 enumeration budget exceeded, 6 empty stratum, 7 sampling attempts
// exhausted.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gstrata/braid.hpp"
#include "gstrata/census.hpp"
#include "gstrata/config_json.hpp"
#include "gstrata/duality.hpp"
#include "gstrata/error.hpp"
#include "gstrata/sampler.hpp"
#include "gstrata/strata.hpp"

using namespace gstrata;
using nlohmann::json;

namespace {

enum Exit : int {
  kOk = 0,
  kVerificationFailed = 1,
  kBadArguments = 2,
  kMalformedJson = 3,
  kInvariantViolation = 4,
  kBudgetExceeded = 5,
  kEmptyStratum = 6,
  kMaxAttempts = 7,
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return kMalformedJson;
    case ErrorCode::InvalidConfiguration:
    case ErrorCode::MixedAmbient:
    case ErrorCode::MixedField:
    case ErrorCode::RankDeficient: return kInvariantViolation;
    case ErrorCode::BudgetExceeded: return kBudgetExceeded;
    case ErrorCode::EmptyStratum: return kEmptyStratum;
    case ErrorCode::MaxAttemptsExceeded:
    case ErrorCode::NotEnoughSubspaces: return kMaxAttempts;
    case ErrorCode::NonPolynomialFit: return kVerificationFailed;
    default: return kBadArguments;
  }
}

enum class Format { Plain, Json, Csv };

struct Globals {
  Format format = Format::Plain;
  std::uint64_t seed = 0;
  std::uint64_t budget = default_budget();
};

std::string str(std::int64_t v) { return std::to_string(v); }
std::string str(std::size_t v) { return std::to_string(v); }

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

// ---------------------------------------------------------------- dims

struct DimsRow {
  std::size_t i;
  bool nonempty;
  std::optional<std::int64_t> dimension;
  std::optional<LocalModel> model;
  std::optional<std::int64_t> step;
  std::optional<std::string> pi1;
};

DimsRow dims_row(std::size_t h, std::size_t k, std::size_t n, std::size_t i) {
  DimsRow row{i, false, {}, {}, {}, {}};
  if (i > n) return row;
  const StratumDescriptor d(h, k, n, i);
  row.nonempty = is_nonempty(d);
  if (!row.nonempty) return row;
  row.dimension = dimension(d);
  if (h >= 2) row.model = chart_local_model(d);
  row.step = codimension_step(d);
  row.pi1 = fundamental_group(d).to_string();
  return row;
}

int run_dims(const Globals& g, std::size_t h, std::size_t k, std::size_t n, std::optional<std::size_t> i) {
  (void)StratumDescriptor(h, k, n, 0);  // validates h and 0 < k < n
  std::vector<DimsRow> rows;
  if (i) {
    rows.push_back(dims_row(h, k, n, *i));
  } else {
    for (std::size_t j = 0; j <= n; ++j) rows.push_back(dims_row(h, k, n, j));
  }
  auto opt = [](const auto& v) { return v ? str(*v) : std::string(); };

  if (g.format == Format::Json) {
    json out{{"h", str(h)}, {"k", str(k)}, {"n", str(n)}, {"rows", json::array()}};
    for (const auto& r : rows) {
      json row{{"i", str(r.i)}, {"nonempty", r.nonempty}};
      row["dimension"] = r.dimension ? json(str(*r.dimension)) : json(nullptr);
      row["codimension_step"] = r.step ? json(str(*r.step)) : json(nullptr);
      row["pi1"] = r.pi1 ? json(*r.pi1) : json(nullptr);
      if (r.model)
        row["local_model"] = {{"affine_dim", str(r.model->affine_dim)},
                              {"det_rank", str(r.model->det_rank)},
                              {"det_rows", str(r.model->det_rows)},
                              {"det_cols", str(r.model->det_cols)}};
      else
        row["local_model"] = nullptr;
      out["rows"].push_back(std::move(row));
    }
    std::cout << out.dump() << '\n';
  } else if (g.format == Format::Csv) {
    std::cout << "h,k,n,i,nonempty,dimension,affine_dim,det_rank,det_rows,det_cols,codimension_step,pi1\n";
    for (const auto& r : rows) {
      std::cout << h << ',' << k << ',' << n << ',' << r.i << ',' << (r.nonempty ? "true" : "false") << ','
                << opt(r.dimension) << ',';
      if (r.model)
        std::cout << r.model->affine_dim << ',' << r.model->det_rank << ',' << r.model->det_rows << ','
                  << r.model->det_cols << ',';
      else
        std::cout << ",,,,";
      std::cout << opt(r.step) << ',' << (r.pi1 ? *r.pi1 : "") << '\n';
    }
  } else {
    std::cout << "F_" << h << "^i(" << k << "," << n << ")\n";
    for (const auto& r : rows) {
      std::cout << "i=" << r.i;
      if (!r.nonempty) {
        std::cout << "  empty\n";
        continue;
      }
      std::cout << "  d=" << *r.dimension;
      if (r.model)
        std::cout << "  local=C^" << r.model->affine_dim << " x D_" << r.model->det_rank << "("
                  << r.model->det_rows << "," << r.model->det_cols << ")*";
      std::cout << "  step=" << *r.step << "  pi1=" << *r.pi1 << '\n';
    }
  }
  return kOk;
}

// ---------------------------------------------------------------- classify

int run_classify(const Globals& g, const std::string& path) {
  const Configuration config = parse_configuration(read_input(path));
  const StratumDescriptor d = descriptor_of(config);
  const std::size_t meet = dual_stratum_of(config);
  const bool nonempty = is_nonempty(d);
  const std::int64_t dim = nonempty ? dimension(d) : -1;
  const std::string pi1 = nonempty ? fundamental_group(d).to_string() : "";

  if (g.format == Format::Json) {
    std::cout << json{{"field", field_to_json(config.field())},
                      {"h", str(d.h())},
                      {"k", str(d.k())},
                      {"n", str(d.n())},
                      {"i", str(d.i())},
                      {"intersection_dim", str(meet)},
                      {"dimension", str(dim)},
                      {"pi1", pi1}}
                     .dump()
              << '\n';
  } else if (g.format == Format::Csv) {
    std::cout << "h,k,n,i,intersection_dim,dimension,pi1\n"
              << d.h() << ',' << d.k() << ',' << d.n() << ',' << d.i() << ',' << meet << ',' << dim << ','
              << pi1 << '\n';
  } else {
    std::cout << "field=" << config.field().name() << " h=" << d.h() << " k=" << d.k() << " n=" << d.n()
              << '\n'
              << "stratum i=" << d.i() << "  intersection dim=" << meet << "  d=" << dim << "  pi1=" << pi1
              << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- census

std::vector<std::uint32_t> parse_prime_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      const unsigned long v = std::stoul(item);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "bad prime list entry '" + item + "'");
    }
  }
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "empty prime list");
  return out;
}

json fit_json(const PolynomialFit& fit) {
  json coeffs = json::array();
  for (const auto& c : fit.polynomial.coefficients()) coeffs.push_back(c.get_str());
  json primes = json::array();
  for (auto q : fit.primes) primes.push_back(str(std::size_t{q}));
  return json{{"i", str(fit.desc.i())},
              {"coeffs", std::move(coeffs)},
              {"degree", fit.polynomial.degree()},
              {"matches_dimension", fit.matches_dimension},
              {"expected_degree", str(fit.expected_degree)},
              {"primes", std::move(primes)},
              {"held_out_q", str(std::size_t{fit.held_out_q})},
              {"held_out_count", fit.held_out_count.get_str()}};
}

int run_census(const Globals& g, std::size_t h, std::size_t k, std::size_t n, std::uint32_t q,
               const std::optional<std::string>& fit_list) {
  (void)StratumDescriptor(h, k, n, 0);
  const PartitionReport report = partition_check(h, k, n, q, g.budget);

  std::vector<PolynomialFit> fits;
  if (fit_list) {
    const auto given = parse_prime_list(*fit_list);
    for (const auto& row : report.rows) {
      const StratumDescriptor d(h, k, n, row.i);
      if (!is_nonempty(d)) continue;
      // Too few primes for this stratum's degree: extend with the next ones.
      auto primes = given;
      while (static_cast<std::int64_t>(primes.size()) < dimension(d) + 1)
        primes.push_back(next_prime(*std::max_element(primes.begin(), primes.end())));
      fits.push_back(fit_count_polynomial(d, primes, g.budget));
    }
  }
  bool fits_ok = true;
  for (const auto& f : fits) fits_ok = fits_ok && f.matches_dimension;
  const char* verdict = report.passed() ? "PASS" : "FAIL";

  if (g.format == Format::Json) {
    json rows = json::array();
    for (const auto& r : report.rows)
      rows.push_back({{"h", str(r.h)}, {"k", str(r.k)}, {"n", str(r.n)}, {"i", str(r.i)},
                      {"q", str(std::size_t{r.q})}, {"count", r.count.get_str()}});
    json out{{"rows", std::move(rows)},
             {"total", report.total.get_str()},
             {"expected", report.expected.get_str()},
             {"partition", verdict}};
    if (fit_list) {
      out["fits"] = json::array();
      for (const auto& f : fits) out["fits"].push_back(fit_json(f));
    }
    std::cout << out.dump() << '\n';
  } else if (g.format == Format::Csv) {
    std::cout << "h,k,n,i,q,count\n";
    for (const auto& r : report.rows)
      std::cout << r.h << ',' << r.k << ',' << r.n << ',' << r.i << ',' << r.q << ',' << r.count.get_str() << '\n';
    std::cerr << "partition " << verdict << " (total " << report.total.get_str() << ", expected "
              << report.expected.get_str() << ")\n";
    for (const auto& f : fits) std::cerr << fit_json(f).dump() << '\n';
  } else {
    for (const auto& r : report.rows)
      std::cout << "i=" << r.i << "  count=" << r.count.get_str() << '\n';
    std::cout << "partition " << verdict << ": total " << report.total.get_str() << ", expected "
              << report.expected.get_str() << '\n';
    for (const auto& f : fits) {
      std::cout << "fit i=" << f.desc.i() << "  degree=" << f.polynomial.degree()
                << "  d=" << f.expected_degree << (f.matches_dimension ? "  match" : "  MISMATCH")
                << "  held-out q=" << f.held_out_q << " count=" << f.held_out_count.get_str() << "  coeffs=[";
      for (std::size_t c = 0; c < f.polynomial.coefficients().size(); ++c)
        std::cout << (c ? ", " : "") << f.polynomial.coefficients()[c].get_str();
      std::cout << "]\n";
    }
  }
  return report.passed() && fits_ok ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------- sample / dual

FieldSpec parse_field(const std::string& text) {
  if (text == "rational" || text == "Q") return FieldSpec::rational();
  try {
    return FieldSpec::prime(std::stoull(text));
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::InvalidArgument, "field must be a prime or 'rational'");
  }
}

int run_sample(const Globals& g, std::size_t h, std::size_t k, std::size_t n, std::size_t i,
               const std::string& field) {
  const SampleSpec spec{StratumDescriptor(h, k, n, i), parse_field(field), g.seed};
  std::cout << configuration_to_json(sample_in_stratum(spec)).dump() << '\n';
  return kOk;
}

int run_dual(const std::string& path) {
  const Configuration config = parse_configuration(read_input(path));
  const Configuration dual = dualize_configuration(config);
  const std::size_t i = stratum_of(config);
  const std::size_t meet = dual_stratum_of(dual);
  std::cerr << "sum dim i=" << i << "  dual intersection dim=" << meet << " (n-i=" << config.ambient_dim() - i
            << ")\n";
  std::cout << configuration_to_json(dual).dump() << '\n';
  return meet + i == config.ambient_dim() ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------- braid

int run_braid(const Globals& g, std::size_t h, bool want_abelian, std::optional<std::size_t> cosets, bool emit) {
  const braid::Presentation p = braid::sphere_pure_braid_presentation(h);
  std::optional<SmithForm> ab;
  if (want_abelian) ab = braid::abelianization(p);
  std::optional<braid::CosetEnumeration> tc;
  if (cosets) tc = braid::todd_coxeter(p, *cosets);

  auto abelian_text = [](const SmithForm& s) {
    std::string out;
    if (s.free_rank > 0) out = "Z^" + std::to_string(s.free_rank);
    for (const auto& d : s.divisors) out += (out.empty() ? "Z/" : " + Z/") + d.get_str();
    return out.empty() ? std::string("0") : out;
  };

  if (g.format == Format::Json) {
    json out{{"h", str(h)},
             {"m", str(p.m)},
             {"generators", str(p.generators.size())},
             {"yb3_relators", str(p.yb3_count)},
             {"yb4_relators", str(p.yb4_count)},
             {"d_squared_relators", "1"}};
    if (ab) {
      json divisors = json::array();
      for (const auto& d : ab->divisors) divisors.push_back(d.get_str());
      out["abelianization"] = {{"divisors", std::move(divisors)}, {"free_rank", str(ab->free_rank)}};
    }
    if (tc)
      out["todd_coxeter"] = {
          {"status", tc->status == braid::CosetEnumeration::Status::FiniteOrder ? "FiniteOrder" : "Exceeded"},
          {"order", str(tc->order)},
          {"cosets_defined", str(tc->cosets_defined)}};
    if (emit) out["presentation"] = p.to_text();
    std::cout << out.dump() << '\n';
    return kOk;
  }

  std::ostream& report = emit ? std::cerr : std::cout;
  report << "sphere pure braid presentation h=" << h << " (generators a_ij, 1<=i<j<=" << p.m << ")\n"
         << "generators=" << p.generators.size() << "  relators: yb3=" << p.yb3_count << " yb4=" << p.yb4_count
         << " d^2=1\n";
  if (p.generators.empty()) report << "trivial presentation\n";
  if (ab) {
    report << "abelianization: " << abelian_text(*ab) << "  divisors=[";
    for (std::size_t j = 0; j < ab->divisors.size(); ++j) report << (j ? "," : "") << ab->divisors[j].get_str();
    report << "] free_rank=" << ab->free_rank << '\n';
  }
  if (tc) report << "todd-coxeter: " << tc->to_string() << '\n';
  if (emit) std::cout << p.to_text();
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gstrata: strata of ordered configuration spaces of k-planes"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Globals g;
  std::string format = "plain";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for every randomized step")->capture_default_str();
  app.add_option("--budget", g.budget, "Maximum enumeration visits (env GSTRATA_BUDGET)")->capture_default_str();

  std::size_t h = 0, k = 0, n = 0;
  std::optional<std::size_t> i_opt;
  std::size_t i = 0;
  std::uint32_t q = 0;
  std::string path, field = "rational";
  std::optional<std::string> fit;
  bool abelian = false, emit = false;
  std::optional<std::size_t> cosets;

  auto* dims = app.add_subcommand("dims", "Dimension theory of F_h^i(k,n)")->fallthrough();
  dims->add_option("h", h)->required();
  dims->add_option("k", k)->required();
  dims->add_option("n", n)->required();
  dims->add_option("i", i_opt);

  auto* classify = app.add_subcommand("classify", "Stratum of a configuration file")->fallthrough();
  classify->add_option("file", path, "Configuration JSON ('-' for stdin)")->required();

  auto* census = app.add_subcommand("census", "Exhaustive stratum counts over F_q")->fallthrough();
  census->add_option("h", h)->required();
  census->add_option("k", k)->required();
  census->add_option("n", n)->required();
  census->add_option("q", q)->required();
  census->add_option("--fit", fit, "Primes for count-polynomial interpolation")
      ->expected(0, 1)
      ->default_str("2,3,5,7,11,13");

  auto* sample = app.add_subcommand("sample", "Random configuration in a stratum")->fallthrough();
  sample->add_option("h", h)->required();
  sample->add_option("k", k)->required();
  sample->add_option("n", n)->required();
  sample->add_option("i", i)->required();
  sample->add_option("--field", field, "A prime, or 'rational'")->capture_default_str();

  auto* dual = app.add_subcommand("dual", "Annihilator configuration")->fallthrough();
  dual->add_option("file", path, "Configuration JSON ('-' for stdin)")->required();

  auto* braid_cmd = app.add_subcommand("braid", "Pure braid group of the sphere")->fallthrough();
  braid_cmd->add_option("h", h)->required();
  braid_cmd->add_flag("--abelianization", abelian);
  braid_cmd->add_option("--todd-coxeter", cosets, "Coset budget");
  braid_cmd->add_flag("--emit", emit, "Print the presentation as text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadArguments;
  }
  g.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Plain;

  try {
    if (*dims) return run_dims(g, h, k, n, i_opt);
    if (*classify) return run_classify(g, path);
    if (*census) {
      if (fit && fit->empty()) fit = "2,3,5,7,11,13";
      return run_census(g, h, k, n, q, fit);
    }
    if (*sample) return run_sample(g, h, k, n, i, field);
    if (*dual) return run_dual(path);
    if (*braid_cmd) return run_braid(g, h, abelian, cosets, emit);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kBadArguments;
}
