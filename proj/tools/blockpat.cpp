// blockpat: command-line front end for the block-pattern toolkit.
//
// Subcommands: classify, detect, gen, density, search, expect. Every
// subcommand takes --json for machine-readable output; exit codes are
// 0 = success, 1 = usage or input error, 2 = inconclusive (truncated
// search). BP_THREADS caps worker threads.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "blockpat/density.hpp"
#include "blockpat/exact.hpp"
#include "blockpat/expectation.hpp"
#include "blockpat/generators.hpp"
#include "blockpat/patterns.hpp"
#include "blockpat/search.hpp"
#include "blockpat/words.hpp"

using json = nlohmann::ordered_json;
namespace bp = blockpat;

namespace {

// --word takes precedence; then --file; stdin otherwise. One word per line.
std::vector<bp::Word> gather_words(const std::string& word,
                                   const std::string& file) {
  if (!word.empty()) return {bp::Word::from_text(word)};
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open '" + file + "'");
    return bp::read_words(in);
  }
  return bp::read_words(std::cin);
}

struct GenOptions {
  std::string name;
  std::int64_t len = -1;
  int k = 0;
  std::int64_t sigma = -1;
  std::string theta;
  std::string x0 = "0";
  std::optional<unsigned> prec;
  std::string preset;
  std::string variant = "upper";
  std::vector<std::string> v_words;
  std::vector<std::string> gamma_start;
};

void add_gen_flags(CLI::App* cmd, GenOptions& g) {
  cmd->add_option("--theta", g.theta,
                  "rotation angle: p/q or a decimal (mechanical)");
  cmd->add_option("--x0", g.x0, "rotation start point, default 0");
  cmd->add_option("--prec", g.prec,
                  "bits of certified precision for decimal angles");
  cmd->add_option("--preset", g.preset, "named angle: fibonacci");
  cmd->add_option("--variant", g.variant, "mechanical variant: upper|lower")
      ->check(CLI::IsMember({"upper", "lower"}));
  cmd->add_option("--v", g.v_words,
                  "sesquipower seed words, cycled (comma separated)")
      ->delimiter(',');
  cmd->add_option("--gamma", g.gamma_start,
                  "leading gamma values; afterwards each is (k+1) times the "
                  "previous (comma separated)")
      ->delimiter(',');
}

bp::Angle angle_from(const GenOptions& g) {
  if (g.preset == "fibonacci") return bp::Angle::fibonacci_preset();
  if (!g.preset.empty()) {
    throw std::invalid_argument("unknown preset '" + g.preset + "'");
  }
  if (g.theta.empty()) {
    throw std::invalid_argument("mechanical needs --theta or --preset");
  }
  return bp::Angle::parse(g.theta, g.x0, g.prec);
}

// Builds the named generator. Finite constructions return a Word; infinite
// ones return an InfiniteWord to be cut at --len.
struct Generated {
  std::optional<bp::InfiniteWord> infinite;
  std::optional<bp::Word> finite;
};

Generated make_generator(const GenOptions& g) {
  const std::string& n = g.name;
  if (n == "thue-morse") return {bp::thue_morse(), std::nullopt};
  if (n == "fibonacci") return {bp::fibonacci_word(), std::nullopt};
  if (n == "mechanical") {
    auto variant = g.variant == "lower" ? bp::MechanicalVariant::kLower
                                        : bp::MechanicalVariant::kUpper;
    return {bp::mechanical(angle_from(g), variant), std::nullopt};
  }
  if (n == "sesquipower") {
    if (g.v_words.empty()) {
      throw std::invalid_argument("sesquipower needs --v");
    }
    std::vector<bp::Word> vs;
    int alpha = 1;
    for (const auto& t : g.v_words) {
      vs.push_back(bp::Word::from_text(t));
      if (vs.back().alphabet_size() == bp::kUnboundedAlphabet) {
        alpha = bp::kUnboundedAlphabet;
      } else if (alpha != bp::kUnboundedAlphabet) {
        alpha = std::max(alpha, vs.back().alphabet_size());
      }
    }
    if (alpha != bp::kUnboundedAlphabet) {
      for (auto& w : vs) {
        w = bp::Word(
            std::vector<bp::Letter>(w.letters().begin(), w.letters().end()),
            alpha);
      }
    }
    bp::SesquipowerSeed seed{
        [vs](std::uint64_t i) { return vs[(i - 1) % vs.size()]; }, alpha};
    return {bp::sesquipower(seed), std::nullopt};
  }
  if (n == "recurrent-avoider") {
    if (g.k == 0) throw std::invalid_argument("recurrent-avoider needs --k");
    return {bp::recurrent_avoider(g.k), std::nullopt};
  }
  if (n == "gamma-word") {
    if (g.k == 0) throw std::invalid_argument("gamma-word needs --k");
    if (g.gamma_start.empty()) return {bp::gamma_word(g.k), std::nullopt};
    std::vector<bp::BigInt> lead;
    for (const auto& t : g.gamma_start) lead.emplace_back(t);
    const int k = g.k;
    auto rule = [lead, k](std::uint64_t i) {
      if (i <= lead.size()) return lead[i - 1];
      bp::BigInt v = lead.back();
      for (std::uint64_t j = lead.size(); j < i; ++j) v *= k + 1;
      return v;
    };
    return {bp::gamma_word(g.k, rule), std::nullopt};
  }
  if (n == "inf-alphabet") return {bp::infinite_alphabet_power_free(), std::nullopt};
  if (n == "lower-bound-word") {
    if (g.k == 0) throw std::invalid_argument("lower-bound-word needs --k");
    return {std::nullopt, bp::lower_bound_word(g.k)};
  }
  if (n == "sigma-avoider") {
    if (g.k == 0 || g.sigma < 0) {
      throw std::invalid_argument("sigma-avoider needs --k and --sigma");
    }
    return {std::nullopt, bp::sigma_avoider_word(g.k, g.sigma)};
  }
  throw std::invalid_argument("unknown generator '" + n + "'");
}

bp::Word realize(const GenOptions& g) {
  Generated gen = make_generator(g);
  if (gen.finite) {
    if (g.len < 0 || static_cast<std::uint64_t>(g.len) == gen.finite->size()) {
      return *gen.finite;
    }
    if (static_cast<std::uint64_t>(g.len) > gen.finite->size()) {
      throw std::invalid_argument(
          g.name + " has length " + std::to_string(gen.finite->size()) +
          "; --len cannot exceed it");
    }
    return bp::factor(*gen.finite, 1, static_cast<std::size_t>(g.len));
  }
  if (g.len < 1) throw std::invalid_argument(g.name + " needs --len");
  return gen.infinite->prefix(static_cast<std::uint64_t>(g.len));
}

bp::InfiniteWord as_infinite(const bp::Word& w) {
  return bp::InfiniteWord(
      "finite word", w.alphabet_size(),
      [w](std::uint64_t i) {
        if (i > w.size()) {
          throw std::out_of_range("supplied word is too short for n_max");
        }
        return w[static_cast<std::size_t>(i - 1)];
      });
}

bp::FactorPredicate parse_budget(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("--budget wants K:SIGMA, e.g. 5:3");
  }
  int k = std::stoi(text.substr(0, colon));
  std::int64_t sigma = std::stoll(text.substr(colon + 1));
  return bp::FactorPredicate::pair_budget(k, sigma);
}

bp::BlockSignature parse_mu(const std::string& text, int k) {
  if (text == "power") return bp::BlockSignature::k_power(k);
  if (text == "anti") return bp::BlockSignature::k_anti_power(k);
  std::string full = text;
  if (text.find("k=") == std::string::npos) {
    full = "k=" + std::to_string(k) + ";" + text;
  }
  bp::BlockSignature mu = bp::BlockSignature::from_text(full);
  if (mu.k() != k) {
    throw std::invalid_argument("--mu disagrees with --k");
  }
  return mu;
}

int run_classify(const std::string& word, const std::string& file, int k,
                 bool as_json) {
  std::vector<bp::Word> words = gather_words(word, file);
  json rows = json::array();
  for (const bp::Word& w : words) {
    bp::BlockSignature sig = bp::block_signature(w, k);
    if (as_json) {
      json row;
      row["signature"] = sig.to_text();
      row["mu"] = sig.mu();
      row["pairs"] = bp::equal_pair_count(sig);
      rows.push_back(std::move(row));
    } else {
      std::cout << "signature " << sig.to_text() << " pairs="
                << bp::equal_pair_count(sig) << "\n";
    }
  }
  if (as_json) {
    std::cout << (rows.size() == 1 ? rows[0] : rows).dump() << "\n";
  }
  return 0;
}

int run_detect(const std::string& word, const std::string& file,
               const bp::FactorPredicate& pred, bool as_json) {
  std::vector<bp::Word> words = gather_words(word, file);
  json rows = json::array();
  for (const bp::Word& w : words) {
    std::optional<bp::FactorMatch> m = bp::contains(w, pred);
    if (as_json) {
      json row;
      row["predicate"] = pred.describe();
      if (m) {
        row["match"] = {{"start", m->start}, {"block_len", m->block_len}};
      } else {
        row["match"] = nullptr;
      }
      rows.push_back(std::move(row));
    } else if (m) {
      std::cout << "match start=" << m->start << " block_len=" << m->block_len
                << "\n";
    } else {
      std::cout << "none\n";
    }
  }
  if (as_json) {
    std::cout << (rows.size() == 1 ? rows[0] : rows).dump() << "\n";
  }
  return 0;
}

int run_gen(const GenOptions& g, bool as_json) {
  bp::Word w = realize(g);
  if (as_json) {
    json out;
    out["name"] = g.name;
    out["len"] = w.size();
    out["word"] = w.to_text();
    std::cout << out.dump() << "\n";
  } else {
    std::cout << w.to_text() << "\n";
  }
  return 0;
}

int run_density(GenOptions g, const std::string& word, int k,
                std::optional<int> lambda, std::optional<std::int64_t> sigma,
                std::uint64_t n_max, bool as_json) {
  if (lambda.has_value() == sigma.has_value()) {
    throw std::invalid_argument("density wants exactly one of --lambda, --sigma");
  }
  // The analysis k and sigma double as the generator parameters.
  g.k = k;
  if (sigma) g.sigma = *sigma;
  std::optional<bp::InfiniteWord> x;
  if (!word.empty()) {
    x = as_infinite(bp::Word::from_text(word));
  } else if (!g.name.empty()) {
    Generated gen = make_generator(g);
    x = gen.infinite ? std::move(*gen.infinite) : as_infinite(*gen.finite);
  } else {
    throw std::invalid_argument("density wants --gen NAME or --word W");
  }
  bp::PrefixSet s = lambda ? bp::ap_set(*x, k, *lambda, n_max)
                           : bp::d_set(*x, k, *sigma, n_max);
  bp::DensityEstimate est = bp::density_estimate(s);
  if (as_json) {
    json out;
    out["kind"] = lambda ? "AP" : "D";
    out["k"] = k;
    if (lambda) {
      out["lambda"] = *lambda;
    } else {
      out["sigma"] = *sigma;
    }
    out["n_max"] = n_max;
    out["members"] = s.members;
    out["lower_proxy"] = est.lower_proxy;
    out["upper_proxy"] = est.upper_proxy;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "kind=" << (lambda ? "AP" : "D") << " k=" << k;
    if (lambda) {
      std::cout << " lambda=" << *lambda;
    } else {
      std::cout << " sigma=" << *sigma;
    }
    std::cout << " n_max=" << n_max << "\nmembers:";
    for (std::uint64_t m : s.members) std::cout << ' ' << m;
    std::cout << "\nlower_proxy=" << est.lower_proxy
              << " upper_proxy=" << est.upper_proxy
              << " (tail from n=" << est.tail_begin << ")\n";
  }
  return 0;
}

int run_search(int alpha, int ell, int k, std::optional<int> lambda,
               std::optional<std::int64_t> sigma, std::uint64_t cap,
               double timeout_s, int split, int workers, bool as_json) {
  if (lambda && sigma) {
    throw std::invalid_argument("search wants at most one of --lambda, --budget");
  }
  bp::FactorPredicate constraint =
      lambda ? bp::FactorPredicate::k_lambda_anti_power(k, *lambda)
      : sigma ? bp::FactorPredicate::pair_budget(k, *sigma)
              : bp::FactorPredicate::anti_power(k);
  bp::AvoidanceSpec spec{alpha, ell, constraint};
  bp::SearchCaps caps;
  caps.length_cap = cap;
  caps.time_cap = std::chrono::milliseconds(
      timeout_s > 0 ? static_cast<std::int64_t>(timeout_s * 1000.0) : 0);
  caps.split_depth = split;
  caps.workers = workers;
  bp::SearchResult r = bp::max_avoiding_length(spec, caps);
  if (as_json) {
    json out;
    out["threshold"] = r.threshold;
    out["witness"] = r.witness.to_text();
    out["nodes"] = r.nodes_explored;
    out["truncated"] = r.truncated;
    out["elapsed_ms"] = r.elapsed.count();
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "N=" << r.threshold << " witness=" << r.witness.to_text()
              << " nodes=" << r.nodes_explored
              << " truncated=" << (r.truncated ? "true" : "false")
              << " elapsed_ms=" << r.elapsed.count() << "\n";
  }
  return r.truncated ? 2 : 0;
}

int run_expect(std::uint64_t n, int k, int alpha, const std::string& mu_text,
               bool oracle, std::uint64_t mc_trials, std::uint64_t seed,
               bool as_json) {
  bp::ExpectationQuery q{n, k, alpha, parse_mu(mu_text, k)};
  double closed = bp::expected_block_patterns(q);
  std::optional<bp::BigRat> exact;
  if (oracle) exact = bp::brute_force_expectation(q);
  std::optional<bp::MonteCarloResult> mc;
  if (mc_trials > 0) mc = bp::monte_carlo_expectation(q, mc_trials, seed);

  if (as_json) {
    json out;
    out["closed_form"] = closed;
    out["oracle"] = exact ? json(bp::rat_to_string(*exact)) : json(nullptr);
    if (mc) {
      out["mc"] = {{"mean", mc->mean},
                   {"ci99", mc->ci99_half_width},
                   {"trials", mc->trials},
                   {"seed", mc->seed}};
    } else {
      out["mc"] = nullptr;
    }
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "closed_form=" << closed << "\n";
    if (exact) std::cout << "oracle=" << bp::rat_to_string(*exact) << "\n";
    if (mc) {
      std::cout << "mc mean=" << mc->mean << " ci99=" << mc->ci99_half_width
                << " trials=" << mc->trials << " seed=" << mc->seed << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"block-pattern and anti-power toolkit"};
  app.require_subcommand(1);
  bool as_json = false;

  // classify
  std::string cls_word, cls_file;
  int cls_k = 0;
  CLI::App* classify = app.add_subcommand(
      "classify", "k-block signature and equal-pair count of a word");
  classify->add_option("--word", cls_word, "word in text form");
  classify->add_option("--file", cls_file, "file of words, one per line");
  classify->add_option("--k", cls_k, "number of blocks")->required();

  // detect
  std::string det_word, det_file, det_budget;
  int det_power = 0, det_anti = 0, det_lambda = 0;
  CLI::App* detect =
      app.add_subcommand("detect", "first forbidden factor in a word, if any");
  detect->add_option("--word", det_word, "word in text form");
  detect->add_option("--file", det_file, "file of words, one per line");
  auto* opt_power = detect->add_option("--power", det_power, "ell-power order");
  auto* opt_anti = detect->add_option("--anti", det_anti, "anti-power order k");
  auto* opt_lambda =
      detect->add_option("--lambda", det_lambda, "class-size cap (with --anti)");
  auto* opt_budget =
      detect->add_option("--budget", det_budget, "pair budget as K:SIGMA");
  opt_power->excludes(opt_anti)->excludes(opt_budget)->excludes(opt_lambda);
  opt_budget->excludes(opt_anti)->excludes(opt_lambda);
  opt_lambda->needs(opt_anti);

  // gen
  GenOptions gen_opts;
  CLI::App* gen = app.add_subcommand("gen", "print a prefix of a named word");
  gen->add_option("name", gen_opts.name,
                  "thue-morse | fibonacci | mechanical | sesquipower | "
                  "recurrent-avoider | gamma-word | inf-alphabet | "
                  "lower-bound-word | sigma-avoider")
      ->required();
  gen->add_option("--len", gen_opts.len, "prefix length");
  gen->add_option("--k", gen_opts.k, "order parameter for the avoider families");
  gen->add_option("--sigma", gen_opts.sigma, "pair budget (sigma-avoider)");
  add_gen_flags(gen, gen_opts);

  // density
  GenOptions den_gen;
  std::string den_word;
  int den_k = 0;
  std::optional<int> den_lambda;
  std::optional<std::int64_t> den_sigma;
  std::uint64_t den_nmax = 50;
  CLI::App* density = app.add_subcommand(
      "density", "anti-power / pair-budget prefix sets and density proxies");
  density->add_option("--gen", den_gen.name, "generator name (as in gen)");
  density->add_option("--word", den_word, "explicit word instead of --gen");
  density->add_option("--k", den_k, "number of blocks")->required();
  density->add_option("--lambda", den_lambda, "class-size cap (AP set)");
  density->add_option("--sigma", den_sigma, "pair budget (D set)");
  density->add_option("--nmax", den_nmax, "largest block length m to decide");
  add_gen_flags(density, den_gen);

  // search
  int s_alpha = 0, s_ell = 0, s_anti = 0, s_split = 8, s_workers = 0;
  std::optional<int> s_lambda;
  std::optional<std::int64_t> s_budget;
  std::uint64_t s_cap = 0;
  double s_timeout = 0;
  CLI::App* search = app.add_subcommand(
      "search", "longest word avoiding ell-powers and the anti-power family");
  search->add_option("--alpha", s_alpha, "alphabet size")->required();
  search->add_option("--ell", s_ell, "forbidden power order")->required();
  search->add_option("--anti", s_anti, "anti-power order k")->required();
  search->add_option("--lambda", s_lambda, "relax to (k,lambda)-anti-powers");
  search->add_option("--budget", s_budget, "relax to pair budget sigma");
  search->add_option("--cap", s_cap, "length cap (default: the proven bound)");
  search->add_option("--timeout", s_timeout, "time cap in seconds");
  search->add_option("--split", s_split, "prefix depth distributed to workers");
  search->add_option("--workers", s_workers, "worker threads (0 = auto)");

  // expect
  std::uint64_t e_n = 0, e_trials = 0, e_seed = 1;
  int e_k = 0, e_alpha = 0;
  std::string e_mu;
  bool e_oracle = false;
  CLI::App* expect = app.add_subcommand(
      "expect", "expected pattern counts in a uniform random word");
  expect->add_option("--n", e_n, "word length")->required();
  expect->add_option("--k", e_k, "number of blocks")->required();
  expect->add_option("--alpha", e_alpha, "alphabet size")->required();
  expect
      ->add_option("--mu", e_mu,
                   "signature: 'power', 'anti', or counts like 2:2,1:1")
      ->required();
  expect->add_flag("--oracle", e_oracle,
                   "also compute the exact value by full enumeration");
  expect->add_option("--mc", e_trials, "Monte-Carlo trials");
  expect->add_option("--seed", e_seed, "Monte-Carlo seed");

  for (CLI::App* sub : app.get_subcommands(nullptr)) {
    sub->add_flag("--json", as_json, "machine-readable output");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*classify) return run_classify(cls_word, cls_file, cls_k, as_json);
    if (*detect) {
      bp::FactorPredicate pred =
          *opt_power  ? bp::FactorPredicate::power(det_power)
          : *opt_budget ? parse_budget(det_budget)
          : *opt_lambda
              ? bp::FactorPredicate::k_lambda_anti_power(det_anti, det_lambda)
          : *opt_anti ? bp::FactorPredicate::anti_power(det_anti)
                      : throw std::invalid_argument(
                            "detect wants one of --power, --anti, --budget");
      return run_detect(det_word, det_file, pred, as_json);
    }
    if (*gen) return run_gen(gen_opts, as_json);
    if (*density) {
      return run_density(den_gen, den_word, den_k, den_lambda, den_sigma,
                         den_nmax, as_json);
    }
    if (*search) {
      return run_search(s_alpha, s_ell, s_anti, s_lambda, s_budget, s_cap,
                        s_timeout, s_split, s_workers, as_json);
    }
    if (*expect) {
      return run_expect(e_n, e_k, e_alpha, e_mu, e_oracle, e_trials, e_seed,
                        as_json);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
