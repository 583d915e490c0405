#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "qcr/analysis.hpp"
#include "qcr/construct.hpp"
#include "qcr/protocols.hpp"
#include "qcr/registers.hpp"
#include "qcr/state_file.hpp"
#include "qcr/tensor.hpp"
#include "qcr/verify.hpp"

namespace qcr::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct RunConfig {
  std::optional<double> tol;
  Index cap = kDefaultDimCap;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string report = "json";
};

// Error raised for bad arguments; mapped to kExitUsage.
struct UsageError : Error {
  using Error::Error;
};

// Input file could not be opened; mapped to kExitNoInput.
struct NoInputError : Error {
  using Error::Error;
};

void load_config_file(RunConfig& cfg) {
  const char* path = std::getenv(kConfigEnv);
  if (path == nullptr || *path == '\0') return;
  std::ifstream in(path);
  if (!in) throw NoInputError(std::string("cannot open config file '") + path + "'");
  json doc;
  try {
    doc = json::parse(in);
    if (doc.contains("tol")) cfg.tol = doc["tol"].get<double>();
    if (doc.contains("cap")) cfg.cap = doc["cap"].get<Index>();
    if (doc.contains("seed")) cfg.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("report")) cfg.report = doc["report"].get<std::string>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("config file '") + path + "': " + e.what());
  }
}

void validate_config(const RunConfig& cfg) {
  if (cfg.tol && !(*cfg.tol > 0)) throw UsageError("--tol must be positive");
  if (cfg.cap < 1) throw UsageError("--cap must be positive");
  if (cfg.report != "json" && cfg.report != "text") throw UsageError("--report must be 'json' or 'text'");
}

QuantumState load(const std::string& path) {
  if (!fs::exists(path)) throw NoInputError("cannot open '" + path + "'");
  QuantumState s = read_state_file(path);
  return s;
}

void save(const std::string& path, const QuantumState& s, const std::string& note) {
  try {
    write_state_file(path, s, note);
  } catch (const std::runtime_error& e) {
    throw std::ios_base::failure(e.what());
  }
}

std::string join_digits(const Digits& d) {
  std::string s;
  for (int x : d) s += std::to_string(x);
  return s;
}

Digits parse_digits(const std::string& text) {
  Digits out;
  for (char c : text) {
    if (c == ',' || c == ' ') continue;
    if (c < '0' || c > '9') throw UsageError("branch digits must be decimal digits, got '" + text + "'");
    out.push_back(c - '0');
  }
  return out;
}

Rng seeded_rng(const RunConfig& cfg, const std::string& what) {
  if (!cfg.seed) throw UsageError(what + " is randomized; pass --seed or set \"seed\" in the config file");
  return Rng(*cfg.seed);
}

void emit(std::ostream& out, const RunConfig& cfg, const json& doc, const std::string& text) {
  if (cfg.report == "json") {
    out << doc.dump(2) << '\n';
  } else {
    out << text;
  }
}

json info_distribution(const QuantumState& s) {
  json dist = json::array();
  try {
    const QcrStructure qs = describe(s.layout());
    const auto labels = qs.info_labels(s.layout());
    const auto probs = outcome_distribution(s, labels);
    const std::vector<Index> dims(labels.size(), qs.d);
    for (std::size_t o = 0; o < probs.size(); ++o) {
      if (probs[o] > 1e-15) dist.push_back({{"outcome", join_digits(digits_of(static_cast<Index>(o), dims))}, {"probability", probs[o]}});
    }
  } catch (const LabelError&) {
  }
  return dist;
}

std::string verify_text(const VerificationReport& r) {
  std::ostringstream os;
  os << std::setprecision(6);
  os << "verdict: " << (r.verdict ? "PASS" : "FAIL") << " (tol " << r.tol << ")\n";
  os << "condition (i): " << (r.condition_i.pass ? "pass" : "FAIL") << "  max deviation " << r.condition_i.max_deviation
     << "  off-support mass " << r.condition_i.off_support_mass << '\n';
  os << "condition (ii): " << (r.condition_ii.pass ? "pass" : "FAIL") << "  max distance "
     << r.condition_ii.max_distance << '\n';
  for (const auto& c : r.condition_ii.coalitions) {
    os << "  dishonest {";
    for (std::size_t k = 0; k < c.coalition.dishonest.size(); ++k) os << (k ? "," : "") << "A" << c.coalition.dishonest[k];
    os << "}: distance " << c.max_distance << (c.pass ? "" : "  FAIL") << '\n';
  }
  if (!r.verdict) os << "failing: " << r.failing_conditions() << '\n';
  return os.str();
}

std::string ppt_text(const PptReport& r) {
  std::ostringstream os;
  os << std::setprecision(6);
  for (const auto& c : r.cuts) {
    for (const auto& l : c.cut.side_one) os << l << ' ';
    os << ": ";
    for (const auto& l : c.cut.side_two) os << l << ' ';
    os << " min eig " << c.min_eigenvalue << (c.ppt ? "  PPT" : "  NOT PPT") << '\n';
  }
  os << (r.all_ppt ? "all cuts PPT\n" : "some cut is not PPT\n");
  return os.str();
}

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<Index> parse_dims(const std::string& text) {
  std::vector<Index> out;
  for (const auto& item : split_labels(text)) {
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw UsageError("'" + item + "' is not an integer dimension");
    }
  }
  return out;
}

// Resolves "A2", "2" or a player shield label to a player index.
int player_index(const Layout& layout, const std::string& name) {
  if (!name.empty() && std::all_of(name.begin(), name.end(), ::isdigit)) return std::stoi(name);
  if (!layout.contains(name)) throw UsageError("unknown player '" + name + "'");
  const Subsystem& s = layout[layout.position(name)];
  if (s.party < 1) throw UsageError("'" + name + "' is not a player register");
  return s.party;
}

struct ConstructArgs {
  std::string family;
  int d = 2;
  int n = 2;
  std::string shields;
  std::string sigma = "zero";
  std::string twist = "identity";
};

// One generator per construction, created on first use so that
// deterministic families never require a seed.
class LazyRng {
 public:
  explicit LazyRng(const RunConfig& cfg) : cfg_(cfg) {}
  Rng& get(const std::string& what) {
    if (!rng_) rng_ = seeded_rng(cfg_, what);
    return *rng_;
  }

 private:
  const RunConfig& cfg_;
  std::optional<Rng> rng_;
};

ShieldSeed make_seed(const std::vector<Index>& dims, const std::string& kind, const RunConfig& cfg, LazyRng& rng) {
  Index total = 1;
  for (Index x : dims) total *= x;
  if (total > cfg.cap) throw DimensionError("shield dimension " + std::to_string(total) + " exceeds cap " + std::to_string(cfg.cap));
  if (kind == "zero") return ShieldSeed::zero(dims);
  if (kind == "mixed") return ShieldSeed::mixed(dims, ComplexMatrix::Identity(total, total) / static_cast<double>(total));
  if (kind == "random") {
    return ShieldSeed::mixed(dims, random_density(total, rng.get("--sigma random")));
  }
  throw UsageError("--sigma must be zero, mixed or random");
}

QuantumState construct_family(const ConstructArgs& a, const RunConfig& cfg) {
  if (a.family == "example") {
    if (cfg.cap < 64) throw DimensionError("state dimension 64 exceeds cap " + std::to_string(cfg.cap));
    return build_example_state();
  }
  LazyRng rng(cfg);
  if (a.d < 2) throw UsageError("--d must be >= 2");
  if (a.family == "private") {
    std::vector<Index> dims = a.shields.empty() ? std::vector<Index>{1, 1} : parse_dims(a.shields);
    if (dims.size() != 2) throw UsageError("private states take two shield dimensions (dealer, player)");
    const Index total_dim = static_cast<Index>(a.d) * a.d * dims[0] * dims[1];
    if (total_dim > cfg.cap) {
      throw DimensionError("state dimension " + std::to_string(total_dim) + " exceeds cap " + std::to_string(cfg.cap));
    }
    const ShieldSeed seed = make_seed(dims, a.sigma, cfg, rng);
    const Index S = seed.total_dim();
    TwistingFamily twist;
    if (a.twist == "identity") {
      for (int i = 0; i < a.d; ++i) twist.unitaries[{i}] = ComplexMatrix::Identity(S, S);
    } else if (a.twist == "random") {
      for (int i = 0; i < a.d; ++i) twist.unitaries[{i}] = haar_unitary(S, rng.get("--twist random"));
    } else if (a.twist == "swap") {
      if (dims[0] != dims[1]) throw UsageError("--twist swap needs equal shield dimensions");
      const Index m = dims[0];
      ComplexMatrix swap = ComplexMatrix::Zero(S, S);
      for (Index x = 0; x < m; ++x) {
        for (Index y = 0; y < m; ++y) swap(y * m + x, x * m + y) = 1;
      }
      for (int i = 0; i < a.d; ++i) twist.unitaries[{i}] = (i % 2) ? swap : ComplexMatrix::Identity(S, S);
    } else {
      throw UsageError("--twist must be identity, random or swap for private states");
    }
    return build_private_state(a.d, seed, twist, cfg.cap);
  }
  if (a.n < 1) throw UsageError("--n must be >= 1");
  std::vector<Index> dims = a.shields.empty() ? std::vector<Index>(static_cast<std::size_t>(a.n + 1), 1)
                                              : parse_dims(a.shields);
  if (dims.size() != static_cast<std::size_t>(a.n + 1)) {
    throw UsageError("--shields needs " + std::to_string(a.n + 1) + " dimensions (dealer first)");
  }
  Index total_dim = 1;
  for (int k = 0; k <= a.n; ++k) total_dim *= a.d * dims[static_cast<std::size_t>(k)];
  if (total_dim > cfg.cap) {
    throw DimensionError("state dimension " + std::to_string(total_dim) + " exceeds cap " + std::to_string(cfg.cap));
  }
  if (a.family == "ghz") return build_ghz_qcr(a.d, a.n, make_seed(dims, a.sigma, cfg, rng), cfg.cap);
  if (a.family == "product") {
    ComplexVector v = ComplexVector::Zero(total_dim);
    v(0) = 1;
    return QuantumState::pure(standard_layout(a.d, a.n, dims), std::move(v));
  }
  if (a.family == "classical") {
    // (1/d^N) sum over digit-sum-0 strings of |x><x| with trivial shields
    const QuantumState ghz = build_ghz_qcr(a.d, a.n, ShieldSeed::trivial(a.n + 1), cfg.cap);
    const auto branches = measure_computational(ghz, std::span<const std::string>(describe(ghz.layout()).info_labels(ghz.layout())));
    ComplexMatrix rho = ComplexMatrix::Zero(ghz.dim(), ghz.dim());
    for (const auto& b : branches) rho += b.probability * b.post.density_matrix();
    return QuantumState::density(ghz.layout(), std::move(rho));
  }
  if (a.family == "twisted") {
    const QuantumState base = build_ghz_qcr(a.d, a.n, make_seed(dims, a.sigma, cfg, rng), cfg.cap);
    const QcrStructure qs = describe(base.layout());
    Index S = 1;
    for (Index x : dims) S *= x;
    const auto support = index_set(qs.players + 1, 0, qs.d).members;
    TwistingFamily twist;
    if (a.twist == "identity") {
      for (const auto& key : support) twist.unitaries[key] = ComplexMatrix::Identity(S, S);
    } else if (a.twist == "example") {
      // X on D~ for information strings 011 and 101
      if (a.d != 2 || a.n != 2 || dims[0] != 2) {
        throw UsageError("--twist example needs --d 2 --n 2 and a qubit dealer shield");
      }
      ComplexMatrix x(2, 2);
      x << 0, 1, 1, 0;
      twist.targets = {shield_label(kDealerParty)};
      for (const auto& key : support) twist.unitaries[key] = ComplexMatrix::Identity(2, 2);
      twist.unitaries[{0, 1, 1}] = x;
      twist.unitaries[{1, 0, 1}] = x;
    } else if (a.twist == "random") {
      for (const auto& key : support) twist.unitaries[key] = haar_unitary(S, rng.get("--twist random"));
    } else {
      throw UsageError("--twist must be identity, example or random for twisted states");
    }
    return build_twisted_qcr(base, twist).state;
  }
  throw UsageError("unknown family '" + a.family + "' (expected private, example, ghz, twisted, product or classical)");
}

int cmd_construct(const ConstructArgs& a, const RunConfig& cfg, std::ostream& out) {
  if (cfg.out.empty()) throw UsageError("construct needs --out");
  const QuantumState s = construct_family(a, cfg);
  save(cfg.out, s, "constructed: " + a.family);
  json doc = {{"format", "qcr-construct-report"},
              {"version", 1},
              {"family", a.family},
              {"out", cfg.out},
              {"dim", s.dim()},
              {"representation", s.is_pure() ? "pure" : "density"},
              {"purity", s.purity()},
              {"layout", layout_to_json(s.layout())},
              {"info_distribution", info_distribution(s)}};
  std::ostringstream text;
  text << "wrote " << cfg.out << ": " << a.family << ", dim " << s.dim() << ", purity " << s.purity() << '\n';
  for (const auto& e : doc["info_distribution"]) {
    text << "  " << e["outcome"].get<std::string>() << "  " << e["probability"].get<double>() << '\n';
  }
  emit(out, cfg, doc, text.str());
  return kExitOk;
}

int cmd_verify(const std::string& file, bool exhaustive, const RunConfig& cfg, std::ostream& out) {
  const QuantumState s = load(file);
  const VerificationReport r = is_qcr(s, {cfg.tol.value_or(kDefaultVerifyTolerance), exhaustive});
  json doc = report_to_json(r);
  doc["file"] = file;
  emit(out, cfg, doc, verify_text(r));
  return r.verdict ? kExitOk : kExitVerifyFailed;
}

int cmd_reduce(const std::string& file, const std::string& keep, const std::string& branch, bool sample, bool waive,
               const RunConfig& cfg, std::ostream& out) {
  const QuantumState s = load(file);
  const QcrStructure qs = describe(s.layout());
  std::vector<int> kept;
  for (const auto& name : split_labels(keep)) kept.push_back(player_index(s.layout(), name));
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  if (kept.empty()) throw UsageError("--keep must name at least one player");
  if (kept.front() < 1 || kept.back() > qs.players) throw UsageError("--keep names a player out of range");
  if (static_cast<int>(kept.size()) == qs.players) throw UsageError("--keep must leave at least one player to measure");
  std::vector<int> measured;
  for (int k = 1; k <= qs.players; ++k) {
    if (!std::binary_search(kept.begin(), kept.end(), k)) measured.push_back(k);
  }
  ReduceOptions opts;
  opts.tol = cfg.tol.value_or(kDefaultVerifyTolerance);
  opts.waive_certification = waive;
  if (!branch.empty()) opts.outcome = parse_digits(branch);
  if (sample) opts.sample_seed = seeded_rng(cfg, "--sample")();
  const auto branches = reduce(s, measured, opts);

  const std::string prefix = cfg.out.empty() ? fs::path(file).replace_extension().string() : cfg.out;
  const double post_tol = cfg.tol.value_or(kProtocolVerifyTolerance);
  json doc = {{"format", "qcr-reduce-report"}, {"version", 1}, {"input", file}, {"measured_players", measured}};
  json list = json::array();
  std::ostringstream text;
  bool all_pass = true;
  for (const auto& b : branches) {
    const std::string path = prefix + ".branch-" + join_digits(b.measured) + ".json";
    save(path, b.state, "reduce branch " + join_digits(b.measured) + " of " + file);
    const bool pass = is_qcr(b.state, {post_tol, false}).verdict;
    all_pass = all_pass && pass;
    json entry = branch_to_json(b);
    entry["file"] = path;
    entry["verdict"] = pass;
    list.push_back(entry);
    text << path << ": measured " << join_digits(b.measured) << ", beta " << b.announced << ", p " << b.probability
         << (pass ? ", verifies\n" : ", DOES NOT verify\n");
  }
  doc["branches"] = list;
  emit(out, cfg, doc, text.str());
  return all_pass ? kExitOk : kExitVerifyFailed;
}

int cmd_compose(const std::string& a, const std::string& b, bool force, const RunConfig& cfg, std::ostream& out) {
  if (cfg.out.empty()) throw UsageError("compose needs --out");
  const QuantumState first = load(a);
  const QuantumState second = load(b);
  ComposeOptions opts;
  opts.force = force;
  opts.tol = cfg.tol.value_or(kDefaultVerifyTolerance);
  opts.dim_cap = cfg.cap;
  const Composition c = compose(first, second, opts);
  save(cfg.out, c.state, "compose of " + a + " and " + b);
  const VerificationReport r = is_qcr(c.state, {cfg.tol.value_or(kProtocolVerifyTolerance), false});
  json doc = report_to_json(c.record);
  doc["out"] = cfg.out;
  doc["verdict"] = r.verdict;
  std::ostringstream text;
  text << "wrote " << cfg.out << ": " << describe(c.state.layout()).players << " players, "
       << (r.verdict ? "verifies\n" : "DOES NOT verify\n");
  emit(out, cfg, doc, text.str());
  return r.verdict ? kExitOk : kExitVerifyFailed;
}

int cmd_ppt(const std::string& file, const std::string& cuts, const std::string& side_one, const RunConfig& cfg,
            std::ostream& out) {
  const QuantumState s = load(file);
  const double tol = cfg.tol.value_or(kDefaultPptTolerance);
  PptReport r;
  if (cuts == "dealer") {
    r = all_dealer_cuts_ppt(s, tol);
  } else if (cuts == "all") {
    r = all_register_cuts_ppt(s, tol);
  } else if (cuts == "explicit") {
    if (side_one.empty()) throw UsageError("--cuts explicit needs --side-one");
    r.cuts.push_back(ppt_check(s, CutSpec::from_side_one(s.layout(), split_labels(side_one)), tol));
    r.all_ppt = r.cuts.back().ppt;
  } else {
    throw UsageError("--cuts must be all, dealer or explicit");
  }
  json doc = report_to_json(r);
  doc["file"] = file;
  emit(out, cfg, doc, ppt_text(r));
  return r.all_ppt ? kExitOk : kExitNotPpt;
}

int cmd_distance(const std::string& a, const std::string& b, const RunConfig& cfg, std::ostream& out) {
  const QuantumState x = load(a);
  const QuantumState y = load(b);
  if (x.dim() != y.dim()) throw UsageError("states have different dimensions");
  const double dist = trace_distance(x, y);
  json doc = {{"format", "qcr-distance-report"}, {"version", 1}, {"first", a}, {"second", b}, {"trace_norm", dist}};
  std::ostringstream text;
  text << std::setprecision(17) << dist << '\n';
  emit(out, cfg, doc, text.str());
  return kExitOk;
}

int cmd_measure(const std::string& file, const std::string& on, const RunConfig& cfg, std::ostream& out) {
  const QuantumState s = load(file);
  std::vector<std::string> labels = split_labels(on);
  if (labels.empty()) labels = describe(s.layout()).info_labels(s.layout());
  const auto outcomes = measure_computational(s, std::span<const std::string>(labels));
  json list = json::array();
  std::ostringstream text;
  for (const auto& o : outcomes) {
    list.push_back({{"outcome", o.outcome}, {"probability", o.probability}});
    text << join_digits(o.outcome) << "  " << std::setprecision(17) << o.probability << '\n';
  }
  json doc = {{"format", "qcr-measure-report"}, {"version", 1}, {"file", file}, {"registers", labels}, {"outcomes", list}};
  emit(out, cfg, doc, text.str());
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    load_config_file(cfg);
  } catch (const NoInputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNoInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  }

  CLI::App app{"Construct, verify, transform and analyze QCR states"};
  app.require_subcommand(1);
  app.fallthrough();
  double tol = 0;
  Index cap = 0;
  std::uint64_t seed = 0;
  auto* tol_opt = app.add_option("--tol", tol, "Verification / PPT tolerance");
  auto* cap_opt = app.add_option("--cap", cap, "Maximum total state dimension");
  auto* seed_opt = app.add_option("--seed", seed, "Seed for randomized constructions");
  app.add_option("--out", cfg.out, "Output path (or prefix for reduce)");
  app.add_option("--report", cfg.report, "Report format: json or text");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a state and write it to --out");
  construct->add_option("family", ca.family, "private | example | ghz | twisted | product | classical")->required();
  construct->add_option("--d", ca.d, "Information dimension");
  construct->add_option("--n", ca.n, "Number of players");
  construct->add_option("--shields", ca.shields, "Comma-separated shield dimensions, dealer first");
  construct->add_option("--sigma", ca.sigma, "Shield seed: zero | mixed | random");
  construct->add_option("--twist", ca.twist, "Twist: identity | random | swap | example");

  std::string file, file2, keep, branch, cuts = "dealer", side_one, on;
  bool exhaustive = false, sample = false, waive = false, force = false;
  auto* verify = app.add_subcommand("verify", "Check QCR conditions (exit 0 pass, 1 fail)");
  verify->add_option("file", file)->required();
  verify->add_flag("--exhaustive", exhaustive, "Check every coalition, not only maximal ones");

  auto* red = app.add_subcommand("reduce", "Measure out players and correct the dealer");
  red->add_option("file", file)->required();
  red->add_option("--keep", keep, "Players to keep, e.g. A1,A2")->required();
  red->add_option("--branch", branch, "Digits of the branch to keep (default: all)");
  red->add_flag("--sample", sample, "Sample one branch using --seed");
  red->add_flag("--waive", waive, "Skip input certification");

  auto* comp = app.add_subcommand("compose", "Merge two QCR states with the same dealer");
  comp->add_option("first", file)->required();
  comp->add_option("second", file2)->required();
  comp->add_flag("--force", force, "Skip input certification");

  auto* ppt = app.add_subcommand("ppt", "Partial-transpose analysis (exit 2 if some cut is not PPT)");
  ppt->add_option("file", file)->required();
  ppt->add_option("--cuts", cuts, "all | dealer | explicit");
  ppt->add_option("--side-one", side_one, "Comma-separated labels for --cuts explicit");

  auto* dist = app.add_subcommand("distance", "Trace norm of the difference of two states");
  dist->add_option("first", file)->required();
  dist->add_option("second", file2)->required();

  auto* meas = app.add_subcommand("measure", "Computational-basis outcome distribution");
  meas->add_option("file", file)->required();
  meas->add_option("--on", on, "Comma-separated registers (default: information registers)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  if (*tol_opt) cfg.tol = tol;
  if (*cap_opt) cfg.cap = cap;
  if (*seed_opt) cfg.seed = seed;

  try {
    validate_config(cfg);
    if (*construct) return cmd_construct(ca, cfg, out);
    if (*verify) return cmd_verify(file, exhaustive, cfg, out);
    if (*red) return cmd_reduce(file, keep, branch, sample, waive, cfg, out);
    if (*comp) return cmd_compose(file, file2, force, cfg, out);
    if (*ppt) return cmd_ppt(file, cuts, side_one, cfg, out);
    if (*dist) return cmd_distance(file, file2, cfg, out);
    if (*meas) return cmd_measure(file, on, cfg, out);
  } catch (const NoInputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNoInput;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  } catch (const CertificationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kExitCantCreate;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace qcr::cli
