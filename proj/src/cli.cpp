#include "klext/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "klext/alcove.hpp"
#include "klext/error.hpp"
#include "klext/ext.hpp"
#include "klext/klpoly.hpp"
#include "klext/verify.hpp"

namespace klext {

namespace {

using ojson = nlohmann::ordered_json;

constexpr int default_suite_bound = 8;
constexpr std::size_t max_listed_failures = 20;

struct Config {
  std::string type;
  int rank = 0;
  std::int64_t ell = 0;
  bool finite = false;
  std::vector<std::string> weights;
  std::vector<std::string> words;
  int length_bound = -1;
  int length_cap = 16;
  int i = -1;
  std::string J;
  std::string format = "table";
  std::string cache;
  bool assume_kl_good = false;
  int threads = 0;
};

bool json_out(const Config& c) { return c.format == "json"; }

ojson words_json(const Word& w) { return format_word(w); }

ojson block_json(const BlockData& b) {
  ojson j;
  j["lambda"] = b.lambda.coords;
  j["J"] = b.J.to_vector();
  return j;
}

ojson series_json(const ExtSeries& s) { return s.coeffs().empty() ? ojson::array() : ojson(s.coeffs()); }

std::string series_text(const ExtSeries& s) { return s.to_string(); }

// Owns the group, the (possibly cache-backed) table and the engine.
class Session {
 public:
  Session(const Config& cfg, bool load_cache) : cfg_(cfg) {
    if (cfg.type.size() != 1) throw InputError("--type must be a single letter A-G");
    if (cfg.rank < 1) throw InputError("--rank must be a positive integer");
    RootSystem rs = RootSystem::build(cfg.type[0], cfg.rank);
    if (cfg.finite) {
      group_.emplace(CoxeterGroup::finite(rs));
    } else {
      if (cfg.ell < 1) throw InputError("--ell must be a positive integer (or pass --finite)");
      group_.emplace(CoxeterGroup::affine(rs, cfg.ell));
    }
    if (cfg.length_cap < 0) throw InputError("--length-cap must be non-negative");
    table_ = std::make_shared<KLTable>(TableHeader::for_group(*group_));
    if (load_cache && !cfg.cache.empty() && std::filesystem::exists(cfg.cache)) table_->load(cfg.cache);
    engine_.emplace(*group_, table_);
  }

  const CoxeterGroup& group() const { return *group_; }
  KLEngine& engine() { return *engine_; }
  KLTable& table() { return *table_; }

  void require_affine() const {
    if (!group_->is_affine()) throw InputError("this command needs the affine Weyl group; drop --finite");
  }

  int bound_or(int fallback) const {
    int b = cfg_.length_bound >= 0 ? cfg_.length_bound : fallback;
    check_cap(b);
    return b;
  }

  void check_cap(int length) const {
    if (length > cfg_.length_cap)
      throw InputError("length " + std::to_string(length) + " exceeds the cap " + std::to_string(cfg_.length_cap) +
                       " (raise --length-cap)");
  }

  GeneratorSet J_option() const {
    GeneratorSet J = parse_generator_set(cfg_.J);
    if (!J.is_subset_of(group_->all_generators()))
      throw InputError("--J " + format_generator_set(J) + " is not a set of generators of " + group_->describe());
    return J;
  }

  std::size_t element_count() const {
    if (!cfg_.weights.empty() && !cfg_.words.empty())
      throw InputError("give elements either as --weight or as --word, not both");
    return cfg_.weights.size() + cfg_.words.size();
  }

  void require_elements(std::size_t n, const char* what) const {
    if (element_count() != n)
      throw InputError(std::string("expected ") + what + " (" + std::to_string(n) + " --weight or --word values)");
  }

  // Group elements named by words, or by weights through classify.
  std::vector<AffineElement> elements() const {
    std::vector<AffineElement> out;
    for (const auto& w : cfg_.words) out.push_back(group_->from_word(parse_word(w)));
    for (const auto& w : cfg_.weights) {
      require_affine();
      out.push_back(classify(*group_, parse_weight(w)).w);
    }
    for (const auto& e : out) check_cap(group_->length(e));
    return out;
  }

  // Block named by the weights (which must share an orbit), else by --J.
  Weight block_weight(bool regular_only) const {
    require_affine();
    if (!cfg_.weights.empty()) {
      std::optional<Weight> lambda;
      for (const auto& w : cfg_.weights) {
        Classification c = classify(*group_, parse_weight(w));
        if (lambda && *lambda != c.lambda)
          throw InputError("weights " + cfg_.weights.front() + " and " + w + " lie in different blocks");
        lambda = c.lambda;
      }
      if (regular_only && !stabilizer(*group_, *lambda).empty())
        throw InputError("weight " + cfg_.weights.front() + " is singular; a regular weight is required");
      return *lambda;
    }
    return facet_weight(*group_, regular_only ? GeneratorSet() : J_option());
  }

  BlockData block_for(const std::vector<AffineElement>& elems, bool regular_only) const {
    int longest = 0;
    for (const auto& e : elems) longest = std::max(longest, group_->length(e));
    const int bound = bound_or(longest);
    return dominant_orbit(*group_, block_weight(regular_only), bound);
  }

  ExtOptions ext_options(std::ostream& err) const {
    ExtOptions o{cfg_.assume_kl_good};
    const RootSystem& rs = group_->root_system();
    if (o.assume_kl_good && group_->is_affine() &&
        kl_good(rs.type_label(), rs.rank(), group_->ell()) != KLGood::yes)
      err << "warning: ell=" << group_->ell() << " is not known to be KL-good for type " << rs.name()
          << "; continuing because of --assume-kl-good\n";
    return o;
  }

 private:
  const Config& cfg_;
  std::optional<CoxeterGroup> group_;
  std::shared_ptr<KLTable> table_;
  std::optional<KLEngine> engine_;
};

std::string rep_label(const BlockData& b, const AffineElement& e) {
  int i = b.find(e);
  const auto& r = b.dominant_reps[static_cast<std::size_t>(i)];
  return format_word(r.word) + " " + format_weight(r.weight);
}

int cmd_classify(const Config& cfg, std::ostream& out) {
  Session s(cfg, false);
  s.require_affine();
  if (cfg.weights.size() != 1 || !cfg.words.empty()) throw InputError("classify takes exactly one --weight");
  Classification c = classify(s.group(), parse_weight(cfg.weights[0]));
  const char* parity = c.parity == Parity::even ? "even" : "odd";
  if (json_out(cfg)) {
    ojson j;
    j["weight"] = parse_weight(cfg.weights[0]).coords;
    j["lambda"] = c.lambda.coords;
    j["w"] = words_json(c.word);
    j["J"] = c.J.to_vector();
    j["regular"] = c.regular;
    j["length"] = c.weight_length;
    j["parity"] = parity;
    out << j.dump() << "\n";
  } else {
    out << "lambda  " << format_weight(c.lambda) << "\n"
        << "w       " << (c.word.size() ? format_word(c.word) : "e") << "\n"
        << "J       " << format_generator_set(c.J) << "\n"
        << "regular " << (c.regular ? "yes" : "no") << "\n"
        << "length  " << c.weight_length << "\n"
        << "parity  " << parity << "\n";
  }
  return exit_ok;
}

int cmd_orbit(const Config& cfg, std::ostream& out) {
  Session s(cfg, false);
  if (cfg.weights.size() > 1 || !cfg.words.empty()) throw InputError("orbit takes at most one --weight (or --J)");
  BlockData b = dominant_orbit(s.group(), s.block_weight(false), s.bound_or(default_suite_bound));
  if (json_out(cfg)) {
    ojson j;
    j["block"] = block_json(b);
    j["length_bound"] = b.length_bound;
    j["reps"] = ojson::array();
    for (const auto& r : b.dominant_reps)
      j["reps"].push_back({{"w", format_word(r.word)}, {"length", r.length}, {"weight", r.weight.coords}});
    out << j.dump() << "\n";
  } else {
    out << "block lambda=" << format_weight(b.lambda) << " J=" << format_generator_set(b.J)
        << " length<=" << b.length_bound << "\n";
    for (const auto& r : b.dominant_reps)
      out << r.length << "  " << (r.word.size() ? format_word(r.word) : "e") << "  " << format_weight(r.weight)
          << "\n";
  }
  return exit_ok;
}

int cmd_kl(const Config& cfg, std::ostream& out, bool parabolic) {
  Session s(cfg, true);
  s.require_elements(2, "two elements x and w");
  auto e = s.elements();
  KLEngine& eng = s.engine();
  IntPoly p;
  GeneratorSet J;
  if (parabolic) {
    J = s.J_option();
    p = parabolic_kl(eng, J, e[0], e[1]);
  } else {
    p = eng.kl(e[0], e[1]);
  }
  if (json_out(cfg)) {
    ojson j;
    if (parabolic) j["J"] = J.to_vector();
    j["x"] = format_word(eng.word(e[0]));
    j["w"] = format_word(eng.word(e[1]));
    j["p"] = p.coeffs().empty() ? ojson::array() : ojson(p.coeffs());
    out << j.dump() << "\n";
  } else {
    out << (parabolic ? "P^J" : "P") << "[" << format_word(eng.word(e[0])) << " ; " << format_word(eng.word(e[1]))
        << "] = " << p.to_string("q") << "\n";
  }
  return exit_ok;
}

int cmd_ext(const Config& cfg, const std::string& kind, std::ostream& out, std::ostream& err) {
  Session s(cfg, true);
  s.require_affine();
  s.require_elements(2, "two elements");
  auto e = s.elements();
  ExtOptions opts = s.ext_options(err);
  KLEngine& eng = s.engine();
  const bool ui = kind == "ui";
  BlockData b = s.block_for(e, ui);
  ExtSeries series;
  GeneratorSet J;
  if (kind == "delta") {
    series = ext_delta_irr(eng, b, e[0], e[1], opts);
  } else if (kind == "irred") {
    series = ext_irr_irr(eng, b, e[0], e[1], opts);
  } else {
    if (cfg.i < 0) throw InputError("ext ui needs --i");
    J = s.J_option();
    series = ext_ui(eng, b, J, e[0], e[1], cfg.i, opts);
  }
  const char* first = kind == "irred" ? "w" : "y";
  const char* second = kind == "irred" ? "z" : "w";
  if (json_out(cfg)) {
    ojson j;
    j["block"] = block_json(b);
    if (ui) {
      j["J"] = J.to_vector();
      j["i"] = cfg.i;
    }
    j[first] = format_word(eng.word(e[0]));
    j[second] = format_word(eng.word(e[1]));
    j["series"] = series_json(series);
    out << j.dump() << "\n";
  } else {
    out << "block lambda=" << format_weight(b.lambda) << " J=" << format_generator_set(b.J) << "\n"
        << first << " = " << rep_label(b, e[0]) << "\n"
        << second << " = " << rep_label(b, e[1]) << "\n";
    if (ui) out << "U_" << cfg.i << " for J=" << format_generator_set(J) << "\n";
    out << "series: " << series_text(series) << "\n";
  }
  return exit_ok;
}

int cmd_char(const Config& cfg, std::ostream& out) {
  Session s(cfg, true);
  s.require_affine();
  s.require_elements(1, "one element w");
  auto e = s.elements();
  BlockData b = s.block_for(e, false);
  CharacterVector ch = irr_character(s.engine(), b, e[0], b.length_bound);
  if (json_out(cfg)) {
    ojson j;
    j["block"] = block_json(b);
    j["w"] = format_word(s.engine().word(e[0]));
    ojson coeffs = ojson::object();
    for (const auto& t : ch.terms) coeffs[format_word(t.word)] = t.coeff;
    j["coeffs"] = coeffs;
    out << j.dump() << "\n";
  } else {
    out << "block lambda=" << format_weight(b.lambda) << " J=" << format_generator_set(b.J) << "\n"
        << "ch L(" << rep_label(b, e[0]) << ") =\n";
    for (const auto& t : ch.terms)
      out << "  " << (t.coeff > 0 ? "+" : "") << t.coeff << " ch Delta(" << format_word(t.word) << " "
          << format_weight(t.weight) << ")\n";
  }
  return exit_ok;
}

int cmd_decomp(const Config& cfg, std::ostream& out, std::ostream& err) {
  Session s(cfg, true);
  s.require_affine();
  if (cfg.weights.size() > 1 || !cfg.words.empty()) throw InputError("decomp takes at most one --weight (or --J)");
  ExtOptions opts = s.ext_options(err);
  BlockData b = dominant_orbit(s.group(), s.block_weight(false), s.bound_or(default_suite_bound));
  DecompositionMatrix m = decomp_matrix(s.engine(), b, b.length_bound, opts);
  if (json_out(cfg)) {
    ojson j;
    j["block"] = block_json(b);
    j["legend"] = ojson::array();
    for (const auto& w : m.legend) j["legend"].push_back(format_word(w));
    j["weights"] = ojson::array();
    for (const auto& w : m.weights) j["weights"].push_back(w.coords);
    j["matrix"] = m.entries;
    out << j.dump() << "\n";
  } else {
    out << "block lambda=" << format_weight(b.lambda) << " J=" << format_generator_set(b.J) << "\n";
    for (std::size_t r = 0; r < m.legend.size(); ++r) {
      out << format_weight(m.weights[r]) << ":";
      for (auto v : m.entries[r]) out << " " << v;
      out << "\n";
    }
  }
  return exit_ok;
}

int cmd_verify(const Config& cfg, const std::string& suite, std::ostream& out, std::ostream& err) {
  Session s(cfg, true);
  const int bound = s.bound_or(default_suite_bound);
  SuiteReport r;
  if (suite == "oracle") {
    r = suite_oracle(s.group(), bound, cfg.threads);
  } else {
    s.require_affine();
    ExtOptions opts = s.ext_options(err);
    require_kl_good(s.group(), opts);
    KLEngine& eng = s.engine();
    eng.prime(bound, cfg.threads);
    std::vector<Weight> blocks;
    const bool chosen = !cfg.weights.empty() || !cfg.J.empty();
    if (chosen) {
      blocks.push_back(s.block_weight(false));
    } else {
      if (suite != "vanishing") blocks.push_back(facet_weight(s.group(), GeneratorSet()));
      for (GeneratorSet J : singular_facets(s.group())) blocks.push_back(facet_weight(s.group(), J));
    }
    if (suite == "vanishing") {
      for (const auto& l : blocks)
        if (stabilizer(s.group(), l).empty())
          throw InputError("the vanishing suite needs a singular block; " + format_weight(l) + " is regular");
      r = suite_vanishing(eng, blocks, bound);
    } else if (suite == "inversion") {
      r = suite_inversion(eng, blocks, bound, opts);
    } else if (suite == "parity") {
      r = suite_parity(eng, blocks, bound, opts);
    } else {
      if (chosen) throw InputError("the nonneg suite runs over all facets; drop --weight/--J");
      r = suite_nonneg(eng, bound, opts);
    }
  }
  if (json_out(cfg)) {
    ojson j;
    j["suite"] = r.name;
    j["group"] = s.group().describe();
    j["length_bound"] = bound;
    j["checked"] = r.checked;
    j["passed"] = r.passed();
    j["failures"] = r.failures;
    out << j.dump() << "\n";
  } else {
    out << "suite " << r.name << " on " << s.group().describe() << " length<=" << bound << ": checked "
        << r.checked << ", failures " << r.failures.size() << (r.passed() ? " PASS" : " FAIL") << "\n";
    for (std::size_t k = 0; k < r.failures.size() && k < max_listed_failures; ++k)
      out << "  " << r.failures[k] << "\n";
    if (r.failures.size() > max_listed_failures)
      out << "  ... " << r.failures.size() - max_listed_failures << " more\n";
  }
  return r.passed() ? exit_ok : exit_internal;
}

void print_stats(const Config& cfg, const KLTable& t, std::ostream& out) {
  const TableHeader& h = t.header();
  const std::string ell = h.ell == 0 ? "finite" : std::to_string(h.ell);
  if (json_out(cfg)) {
    ojson j;
    j["type"] = std::string(1, h.type_label);
    j["rank"] = h.rank;
    j["ell"] = ell;
    j["entries"] = t.size();
    j["max_length"] = t.max_length();
    out << j.dump() << "\n";
  } else {
    out << "table " << h.type_label << h.rank << " ell=" << ell << ": " << t.size() << " entries, max length "
        << t.max_length() << "\n";
  }
}

int cmd_cache(const Config& cfg, const std::string& action, std::ostream& out) {
  if (cfg.cache.empty()) throw InputError("no cache path: pass --cache or set KLEXT_CACHE");
  if (action == "stats") {
    if (!std::filesystem::exists(cfg.cache)) throw InputError("cache file " + cfg.cache + " does not exist");
    KLTable t(KLTable::read_header(cfg.cache));
    t.load(cfg.cache);
    print_stats(cfg, t, out);
    return exit_ok;
  }
  if (action == "load") {
    if (!std::filesystem::exists(cfg.cache)) throw InputError("cache file " + cfg.cache + " does not exist");
    Session s(cfg, false);
    s.table().load(cfg.cache);
    print_stats(cfg, s.table(), out);
    return exit_ok;
  }
  Session s(cfg, true);
  s.engine().prime(s.bound_or(default_suite_bound), cfg.threads);
  s.table().save(cfg.cache);
  print_stats(cfg, s.table(), out);
  return exit_ok;
}

void add_group_options(CLI::App* app, Config& c) {
  app->add_option("--type", c.type, "Root system type (A-G)")->required();
  app->add_option("--rank", c.rank, "Rank")->required();
  app->add_option("--ell", c.ell, "Order of the root of unity");
  app->add_flag("--finite", c.finite, "Use the finite Weyl group");
  app->add_option("--length-cap", c.length_cap, "Hard cap on lengths")->capture_default_str();
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"table", "json"}))->capture_default_str();
  app->add_option("--cache", c.cache, "KL table cache file")->envname("KLEXT_CACHE");
  app->add_option("--threads", c.threads, "OpenMP threads (0 = default)");
}

void add_element_options(CLI::App* app, Config& c) {
  // Per-occurrence callbacks keep "[a,b]" intact.
  app->add_option_function<std::string>("--weight", [&c](const std::string& s) { c.weights.push_back(s); },
                                        "Weight such as [8] (repeatable)")
      ->trigger_on_parse()
      ->allow_extra_args(false);
  app->add_option_function<std::string>("--word", [&c](const std::string& s) { c.words.push_back(s); },
                                        "Word such as 1,0 or e (repeatable)")
      ->trigger_on_parse()
      ->allow_extra_args(false);
}

void add_query_options(CLI::App* app, Config& c) {
  app->add_option("--length-bound", c.length_bound, "Length bound");
  app->add_option("--J", c.J, "Generator subset such as 0,2");
  app->add_flag("--assume-kl-good", c.assume_kl_good, "Compute even when ell is not known to be KL-good");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"klext: Kazhdan-Lusztig polynomials and Ext dimensions for quantum group blocks"};
  app.require_subcommand(1);

  auto* classify_cmd = app.add_subcommand("classify", "Write a weight as w.lambda with lambda in the closed alcove");
  auto* orbit_cmd = app.add_subcommand("orbit", "List the dominant weights of a block");
  auto* kl_cmd = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial P_{x,w}");
  auto* pkl_cmd = app.add_subcommand("pkl", "Parabolic Kazhdan-Lusztig polynomial P^J_{y,w}");
  auto* ext_cmd = app.add_subcommand("ext", "Ext generating functions");
  auto* char_cmd = app.add_subcommand("char", "Character of an irreducible module");
  auto* decomp_cmd = app.add_subcommand("decomp", "Decomposition matrix of a block");
  auto* verify_cmd = app.add_subcommand("verify", "Run a property suite");
  auto* cache_cmd = app.add_subcommand("cache", "Manage the KL table cache");

  std::string ext_kind, suite, cache_action;
  ext_cmd->add_option("kind", ext_kind, "delta | irred | ui")
      ->required()
      ->check(CLI::IsMember({"delta", "irred", "ui"}));
  ext_cmd->add_option("--i", cfg.i, "Section index for ui");
  verify_cmd->add_option("suite", suite, "oracle | vanishing | inversion | parity | nonneg")
      ->required()
      ->check(CLI::IsMember({"oracle", "vanishing", "inversion", "parity", "nonneg"}));
  cache_cmd->add_option("action", cache_action, "save | load | stats")
      ->required()
      ->check(CLI::IsMember({"save", "load", "stats"}));

  for (auto* cmd : {classify_cmd, orbit_cmd, kl_cmd, pkl_cmd, ext_cmd, char_cmd, decomp_cmd, verify_cmd, cache_cmd}) {
    add_group_options(cmd, cfg);
    add_element_options(cmd, cfg);
    add_query_options(cmd, cfg);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    if (*classify_cmd) return cmd_classify(cfg, out);
    if (*orbit_cmd) return cmd_orbit(cfg, out);
    if (*kl_cmd) return cmd_kl(cfg, out, false);
    if (*pkl_cmd) return cmd_kl(cfg, out, true);
    if (*ext_cmd) return cmd_ext(cfg, ext_kind, out, err);
    if (*char_cmd) return cmd_char(cfg, out);
    if (*decomp_cmd) return cmd_decomp(cfg, out, err);
    if (*verify_cmd) return cmd_verify(cfg, suite, out, err);
    if (*cache_cmd) return cmd_cache(cfg, cache_action, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const GatingError& e) {
    err << "refused: " << e.what() << "\n";
    return exit_gated;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_internal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
  return exit_input;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"klext"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace klext
