#include "cubeturan/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "cubeturan/bounds.hpp"
#include "cubeturan/constructions.hpp"
#include "cubeturan/counting.hpp"
#include "cubeturan/parallel.hpp"
#include "cubeturan/report.hpp"
#include "cubeturan/search.hpp"
#include "cubeturan/subgraph_io.hpp"
#include "cubeturan/verification.hpp"

namespace cubeturan {

namespace {

struct Options {
  unsigned threads = default_threads();
  std::string format = "json";
  std::string out_path;
  std::string z_cache;

  // count / search / density
  std::optional<int> n;
  std::string pattern;
  std::string input;
  std::string method;
  std::string target;
  std::string forbid;
  std::uint64_t budget_nodes = 0;
  double budget_seconds = 0;
  bool no_orbit_fixing = false;
  std::string witness_path;

  // zl / zwords
  std::optional<int> k;
  std::optional<int> l;
  bool list = false;
  bool allow_small = false;

  // construct
  std::string construction;
  std::optional<int> i;
  std::optional<int> j;
  std::optional<int> m;
  bool all_zero = false;
  bool complement = false;

  // verify
  std::string file;

  // bounds
  std::string theorem;
  std::string side = "both";
  std::string measured;

  // kpartite
  std::vector<std::string> edges;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionTooLarge:
    case ErrorKind::EnumerationTooLarge:
    case ErrorKind::NonIntegralResult:
      return kExitLimit;
    case ErrorKind::BudgetExceeded:
      return kExitBudget;
    default:
      return kExitUsage;
  }
}

BigInt parse_integer(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(ErrorKind::BadRange, "not a non-negative integer: '" + text + "'");
  }
  auto first = text.find_first_not_of('0');
  return BigInt(first == std::string::npos ? std::string("0") : text.substr(first));
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      if (text.find('.') != std::string::npos) return decimal_rational(text);
      return Rational(parse_integer(text));
    }
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::BadRange, "zero denominator");
    return Rational(parse_integer(text.substr(0, slash)), den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorKind::BadRange, "not a rational number: '" + text + "'");
  }
}

class Runner {
 public:
  Runner(Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  void load_z_cache() {
    if (o_.z_cache.empty()) {
      if (const char* env = std::getenv("CUBETURAN_ZCACHE")) o_.z_cache = env;
    }
    if (!o_.z_cache.empty()) z_.load_cache(o_.z_cache);
    cached_entries_ = z_.size();
  }

  void save_z_cache() {
    if (!o_.z_cache.empty() && z_.size() != cached_entries_) z_.save_cache(o_.z_cache);
  }

  void emit(const Json& j) {
    std::string text = o_.format == "csv" ? to_csv(j) : j.dump(2) + "\n";
    if (o_.out_path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(o_.out_path, std::ios::binary);
    if (!f) throw Error(ErrorKind::BadRange, "cannot write " + o_.out_path);
    f << text;
  }

  int count() {
    Pattern pattern = Pattern::parse(o_.pattern);
    std::optional<Subgraph> g;
    if (!o_.input.empty()) {
      g = load_subgraph(o_.input);
      if (o_.n && *o_.n != g->dimension()) {
        throw Error(ErrorKind::DimensionMismatch, "--n does not match the dimension of " + o_.input);
      }
    } else if (!o_.n) {
      throw Error(ErrorKind::MissingParam, "count needs --n or --input");
    }
    int n = g ? g->dimension() : *o_.n;
    if (pattern.kind == Pattern::Kind::Cycle) z_.ensure_for_cycle_count(n, pattern.order / 2, o_.threads);
    BigInt ambient = ambient_count(n, pattern, z_);
    bool enumerate = g || o_.method == "enum";
    if (!g && enumerate) g = Subgraph::full_cube(n);
    BigInt value = enumerate ? count_pattern(*g, pattern, o_.threads) : ambient;
    auto report =
        make_count_report(n, pattern, value, ambient, enumerate ? CountMethod::Enumeration : CountMethod::ClosedForm);
    emit(count_json(report));
    err_ << "N(" << (o_.input.empty() ? "Q" + std::to_string(n) : o_.input) << ", " << pattern.to_string()
         << ") = " << value.str() << "\n";
    return kExitOk;
  }

  int zl() {
    int k = *o_.k, l = *o_.l;
    BigInt value;
    std::string method = o_.method.empty() ? "enum" : o_.method;
    if (method == "words") {
      if (k != l) throw Error(ErrorKind::BadRange, "the word method computes z_{l,l} only");
      value = z_ll_via_words(l, o_.allow_small);
    } else {
      z_.ensure(k, l, o_.threads);
      value = *z_.get(k, l);
    }
    emit(Json{{"k", k}, {"l", l}, {"z", value.str()}, {"method", method}});
    err_ << "z_{" << k << "," << l << "} = " << value.str() << "\n";
    return kExitOk;
  }

  int zwords() {
    int l = *o_.l;
    Json j{{"l", l}, {"count", std::to_string(count_z_words(l))}};
    if (l >= 4 || o_.allow_small) j["z_ll"] = z_ll_via_words(l, o_.allow_small).str();
    if (o_.list) {
      Json words = Json::array();
      for (const ZWord& w : enumerate_z_words(l)) words.push_back(w.to_string());
      j["words"] = words;
    }
    emit(j);
    err_ << "|Z(" << l << ")| = " << j["count"].get<std::string>() << "\n";
    return kExitOk;
  }

  int construct() {
    ConstructionSpec spec{parse_construction_kind(o_.construction), {}};
    auto put = [&](const char* key, const std::optional<int>& v) {
      if (v) spec.params[key] = *v;
    };
    put("n", o_.n);
    put("k", o_.k);
    put("i", o_.i);
    put("j", o_.j);
    put("m", o_.m);
    put("l", o_.l);
    if (o_.all_zero) spec.params["all_zero"] = 1;
    if (o_.complement) spec.params["complement"] = 1;
    Construction c = build_construction(spec);
    Json sidecar = construction_json(c);
    if (o_.out_path.empty()) {
      write_subgraph(out_, c.graph);
      err_ << sidecar.dump() << "\n";
      return kExitOk;
    }
    save_subgraph(c.graph, o_.out_path);
    std::ofstream side(o_.out_path + ".json", std::ios::binary);
    if (!side) throw Error(ErrorKind::BadRange, "cannot write " + o_.out_path + ".json");
    side << sidecar.dump(2) << "\n";
    out_ << (o_.format == "csv" ? to_csv(sidecar) : sidecar.dump(2) + "\n");
    err_ << construction_name(spec.kind) << ": " << c.graph.edge_count() << " edges written to " << o_.out_path
         << "\n";
    return kExitOk;
  }

  int verify() {
    Subgraph g = load_subgraph(o_.file);
    Pattern forbidden = Pattern::parse(o_.forbid);
    FreenessVerdict v = is_free_of(g, forbidden, o_.threads);
    emit(verdict_json(v, forbidden));
    if (v.free) {
      err_ << o_.file << " is " << forbidden.to_string() << "-free\n";
      return kExitOk;
    }
    err_ << o_.file << " contains " << forbidden.to_string() << ": " << v.witness_string() << "\n";
    return kExitWitness;
  }

  SearchResult solve() {
    if (!o_.n) throw Error(ErrorKind::MissingParam, "search needs --n");
    SearchOptions options;
    options.max_nodes = o_.budget_nodes;
    options.max_seconds = o_.budget_seconds;
    if (o_.method == "exhaustive") {
      options.method = SearchMethod::Exhaustive;
    } else if (!o_.method.empty() && o_.method != "bnb") {
      throw Error(ErrorKind::BadRange, "--method must be exhaustive or bnb");
    }
    if (o_.no_orbit_fixing) options.root_orbit_fixing = false;
    return exact_extremal(*o_.n, Pattern::parse(o_.target), Pattern::parse(o_.forbid), options);
  }

  int search() {
    SearchResult r = solve();
    if (!o_.witness_path.empty()) save_subgraph(r.witness, o_.witness_path);
    emit(search_json(r));
    err_ << "ex(Q" << r.n << ", " << r.target.to_string() << ", " << r.forbid.to_string() << ") = " << r.value.str()
         << "\n";
    return kExitOk;
  }

  int density() {
    SearchResult r = solve();
    emit(Json{{"n", r.n},
              {"target", r.target.to_string()},
              {"forbid", r.forbid.to_string()},
              {"density", rational_json(r.density)},
              {"value", r.value.str()},
              {"ambient_total", r.ambient_total.str()}});
    err_ << "d(Q" << r.n << ", " << r.target.to_string() << ", " << r.forbid.to_string()
         << ") = " << to_string(r.density) << "\n";
    return kExitOk;
  }

  int bounds() {
    Theorem t = parse_theorem(o_.theorem);
    BoundParams p{o_.n, o_.k, o_.l};
    bool uses_z = t == Theorem::T3 || t == Theorem::T5 || t == Theorem::T7 || t == Theorem::A7;
    if (uses_z && o_.l && *o_.l >= 2) z_.ensure(*o_.l, *o_.l, o_.threads);
    if (o_.side == "both") {
      std::optional<Rational> measured;
      if (!o_.measured.empty()) measured = parse_rational(o_.measured);
      SandwichReport r = bound_sandwich_report(t, p, z_, measured);
      emit(sandwich_json(r));
      for (const auto& line : r.lines) err_ << line << "\n";
      return kExitOk;
    }
    BoundValue b = eval_bound(t, o_.side == "lower" ? BoundSide::Lower : BoundSide::Upper, p, z_);
    emit(bound_json(b));
    err_ << to_string(t) << " " << to_string(b.side) << ": " << b.expression << "\n";
    return kExitOk;
  }

  int kpartite() {
    std::vector<std::string> texts = o_.edges;
    if (!o_.input.empty()) {
      std::ifstream in(o_.input);
      if (!in) throw Error(ErrorKind::ParseError, "cannot read " + o_.input);
      std::string line;
      while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        auto last = line.find_last_not_of(" \t\r");
        texts.push_back(line.substr(first, last - first + 1));
      }
    }
    if (texts.empty()) throw Error(ErrorKind::MissingParam, "kpartite needs star vectors or --input");
    // Dimension from the first vector, counted in code points.
    int n = static_cast<int>(std::count_if(texts.front().begin(), texts.front().end(),
                                           [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
    std::vector<StarVector> h;
    for (const auto& t : texts) h.push_back(parse_star_vector(t, n));
    PartiteRepresentation rep = has_k_partite_representation(h, *o_.k);
    emit(Json{{"k", rep.k},
              {"ambient_dimension", rep.ambient_dimension},
              {"representable", rep.sigma.has_value()},
              {"sigma", rep.sigma ? Json(*rep.sigma) : Json(nullptr)}});
    err_ << (rep.sigma ? "k-partite representation found\n" : "no k-partite representation\n");
    return kExitOk;
  }

 private:
  Options& o_;
  std::ostream& out_;
  std::ostream& err_;
  ZTable z_;
  std::size_t cached_entries_ = 0;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", o.out_path, "Output path");
  sub->add_option("--z-cache", o.z_cache, "z-table cache file (or CUBETURAN_ZCACHE)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact counting, constructions and extremal search in hypercubes", "cubeturan"};
  app.require_subcommand(1);

  auto* count = app.add_subcommand("count", "Count copies of a pattern in Q_n or in a subgraph file");
  add_common(count, o);
  count->add_option("--n", o.n, "Cube dimension");
  count->add_option("--pattern", o.pattern, "e, q<k> or c<m>")->required();
  count->add_option("--input", o.input, "Subgraph file");
  count->add_option("--method", o.method, "closed or enum")->check(CLI::IsMember({"closed", "enum"}));

  auto* zl = app.add_subcommand("zl", "z_{k,l}: 2l-cycles of Q_k using all k positions");
  add_common(zl, o);
  zl->add_option("--k", o.k)->required();
  zl->add_option("--l", o.l)->required();
  zl->add_option("--method", o.method, "enum or words")->check(CLI::IsMember({"enum", "words"}));
  zl->add_flag("--allow-small", o.allow_small, "Permit the word method for l < 4");

  auto* zwords = app.add_subcommand("zwords", "Enumerate the word set Z(l)");
  add_common(zwords, o);
  zwords->add_option("--l", o.l)->required();
  zwords->add_flag("--list", o.list, "Include the words");
  zwords->add_flag("--allow-small", o.allow_small, "Report z_{l,l} for l < 4 as well");

  auto* construct = app.add_subcommand("construct", "Build a construction and write it as a subgraph file");
  add_common(construct, o);
  construct->add_option("name", o.construction, "Construction name")->required();
  construct->add_option("--n", o.n);
  construct->add_option("--k", o.k);
  construct->add_option("--i", o.i);
  construct->add_option("--j", o.j);
  construct->add_option("--m", o.m);
  construct->add_option("--l", o.l);
  construct->add_flag("--all-zero", o.all_zero, "mod3-select: require residue 0 everywhere");
  construct->add_flag("--complement", o.complement, "layer-mod: take the complement");

  auto* verify = app.add_subcommand("verify", "Check that a subgraph file is free of a pattern");
  add_common(verify, o);
  verify->add_option("--forbid", o.forbid)->required();
  verify->add_option("file", o.file, "Subgraph file")->required();

  auto add_search_options = [&](CLI::App* sub) {
    add_common(sub, o);
    sub->add_option("--n", o.n)->required();
    sub->add_option("--target", o.target)->required();
    sub->add_option("--forbid", o.forbid)->required();
    sub->add_option("--budget-nodes", o.budget_nodes);
    sub->add_option("--budget-seconds", o.budget_seconds);
    sub->add_option("--method", o.method, "exhaustive or bnb")->check(CLI::IsMember({"exhaustive", "bnb"}));
    sub->add_flag("--no-orbit-fixing", o.no_orbit_fixing);
  };
  auto* search = app.add_subcommand("search", "Exact ex(Q_n, T, H)");
  add_search_options(search);
  search->add_option("--witness", o.witness_path, "Write the extremal subgraph here");
  auto* density = app.add_subcommand("density", "Exact d(Q_n, T, H)");
  add_search_options(density);

  auto* bounds = app.add_subcommand("bounds", "Evaluate a density bound");
  add_common(bounds, o);
  bounds->add_option("--theorem", o.theorem, "T1..T7, A6, A7")->required();
  bounds->add_option("--n", o.n);
  bounds->add_option("--k", o.k);
  bounds->add_option("--l", o.l);
  bounds->add_option("--side", o.side)->check(CLI::IsMember({"lower", "upper", "both"}));
  bounds->add_option("--measured", o.measured, "Density to compare against, e.g. 3/16");

  auto* kpartite = app.add_subcommand("kpartite", "Search for a k-partite representation");
  add_common(kpartite, o);
  kpartite->add_option("--k", o.k)->required();
  kpartite->add_option("--input", o.input, "File with one star vector per line");
  kpartite->add_option("edges", o.edges, "Star vectors");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << error_json("UsageError", e.what()).dump() << "\n";
    return kExitUsage;
  }

  Runner runner(o, out, err);
  try {
    runner.load_z_cache();
    int code = kExitOk;
    if (count->parsed()) code = runner.count();
    else if (zl->parsed()) code = runner.zl();
    else if (zwords->parsed()) code = runner.zwords();
    else if (construct->parsed()) code = runner.construct();
    else if (verify->parsed()) code = runner.verify();
    else if (search->parsed()) code = runner.search();
    else if (density->parsed()) code = runner.density();
    else if (bounds->parsed()) code = runner.bounds();
    else if (kpartite->parsed()) code = runner.kpartite();
    runner.save_z_cache();
    return code;
  } catch (const BudgetExceeded& e) {
    Json j = error_json(std::string(to_string(e.kind())), e.what());
    j["lower_bound"] = e.lower_bound.str();
    j["upper_bound"] = e.upper_bound.str();
    err << j.dump() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << error_json(std::string(to_string(e.kind())), e.what()).dump() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << error_json("InternalError", e.what()).dump() << "\n";
    return kExitLimit;
  }
}

}  // namespace cubeturan
