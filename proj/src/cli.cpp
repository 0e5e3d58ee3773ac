#include "betadyn/cli.hpp"

#include <CLI11.hpp>

#include <deque>
#include <functional>
#include <ostream>

#include "betadyn/error.hpp"
#include "betadyn/serialize.hpp"

namespace betadyn {

namespace {

struct RunConfig {
  std::string format;
  std::size_t budget = 0;
};

void require_format(const RunConfig& cfg, std::initializer_list<std::string_view> allowed) {
  for (auto a : allowed)
    if (cfg.format == a) return;
  throw CLI::ValidationError("--format", "unsupported format '" + cfg.format + "'");
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int parse_int(std::string_view text, std::string_view what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(std::string(text), &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::InvalidArgument, "bad " + std::string(what) + " '" + std::string(text) + "'");
}

}  // namespace

NumberField parse_base(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorKind::InvalidArgument, "base must look like kind:value");
  const auto kind = text.substr(0, colon);
  const auto value = text.substr(colon + 1);
  if (kind == "nbonacci") {
    const int n = parse_int(value, "n-bonacci order");
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "n-bonacci order must be at least 2");
    return NumberField::make(nbonacci_polynomial(n));
  }
  if (kind == "poly") return NumberField::make(MinimalPolynomial::parse(value));
  if (kind == "num") {
    const Rational beta = parse_rational(value);
    return NumberField::rational_base(beta);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown base kind '" + std::string(kind) + "'");
}

FieldElement parse_point(const NumberField& field, std::string_view text) {
  if (text == "max") return field.max_point();
  if (text.starts_with("beta^")) return field.beta_power(parse_int(text.substr(5), "exponent"));
  if (text.starts_with("digits:")) return field.from_digits(DigitWord::parse(text.substr(7)).digits);
  if (text.starts_with("stream:")) return stream_value(field, DigitStream::parse(text.substr(7)));
  return field.rational(parse_rational(text));
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"beta-expansions, Pisot orbits, Markov partitions and survivor-set dimensions", "betadyn"};
  app.require_subcommand(1);
  std::function<void()> run;

  std::string base = "nbonacci:2", x = "1", word;
  int len = 20, hole_N = 3, n = 2, N = 5, level = 4, digits = 17;
  std::size_t depth = 12, p_max = 20, k = 1;
  std::string N_range, ratios, powers;
  bool no_window = false;

  std::deque<RunConfig> configs;
  // budget 0: the subcommand takes no --budget option.
  auto command = [&](CLI::App* sub, std::string format, std::size_t budget, std::function<void(const RunConfig&)> body) {
    RunConfig& c = configs.emplace_back(RunConfig{std::move(format), budget});
    sub->add_option("--format", c.format, "output format")->capture_default_str();
    if (budget) sub->add_option("--budget", c.budget, "node or point budget")->capture_default_str()->check(CLI::PositiveNumber);
    sub->callback([&run, &c, body] { run = [&c, body] { body(c); }; });
  };

  auto* expand = app.add_subcommand("expand", "greedy expansion of a point");
  expand->add_option("--base", base)->capture_default_str();
  expand->add_option("--x", x)->capture_default_str();
  expand->add_option("--len", len, "number of digits")->capture_default_str()->check(CLI::NonNegativeNumber);
  command(expand, "text", 1000, [&](const RunConfig& cfg) {
    require_format(cfg, {"text", "json"});
    BetaDynamics dyn(parse_base(base));
    const auto p = parse_point(dyn.field(), x);
    const auto w = greedy_expand(dyn, p, static_cast<std::size_t>(len));
    if (cfg.format == "text") {
      out << w.str() << '\n';
      return;
    }
    const auto s = greedy_stream(dyn, p, cfg.budget);
    emit(out, Json{{"x", to_json(p)}, {"word", w.str()}, {"stream", s ? Json(s->str()) : Json(nullptr)}});
  });

  auto* qg = app.add_subcommand("quasi-greedy", "quasi-greedy expansion of 1");
  qg->add_option("--base", base)->capture_default_str();
  qg->add_option("--len", len)->capture_default_str()->check(CLI::NonNegativeNumber);
  command(qg, "text", 1000, [&](const RunConfig& cfg) {
    require_format(cfg, {"text", "json"});
    BetaDynamics dyn(parse_base(base));
    const auto w = quasi_greedy_of_one(dyn, static_cast<std::size_t>(len));
    if (cfg.format == "text") {
      out << w.str() << '\n';
      return;
    }
    const auto s = quasi_greedy_stream(dyn, cfg.budget);
    emit(out, Json{{"word", w.str()}, {"stream", s ? Json(s->str()) : Json(nullptr)}});
  });

  auto* orbit = app.add_subcommand("orbit", "finite orbit set of a point in a Pisot base");
  orbit->add_option("--base", base)->capture_default_str();
  orbit->add_option("--x", x)->capture_default_str();
  command(orbit, "json", kDefaultOrbitBudget, [&](const RunConfig& cfg) {
    require_format(cfg, {"json"});
    BetaDynamics dyn(parse_base(base));
    emit(out, to_json(orbit_set(dyn, parse_point(dyn.field(), x), cfg.budget)));
  });

  auto* partition = app.add_subcommand("partition", "Markov partition and adjacency matrix");
  partition->add_option("--base", base)->capture_default_str();
  partition->add_option("--hole-N", hole_N)->capture_default_str();
  command(partition, "json", 1000000, [&](const RunConfig& cfg) {
    require_format(cfg, {"json", "grid"});
    BetaDynamics dyn(parse_base(base));
    const auto p = build_partition(dyn, hole_N, cfg.budget);
    if (cfg.format == "grid") {
      out << adjacency(p).to_grid();
      return;
    }
    emit(out, to_json(p));
  });

  auto* dim = app.add_subcommand("dim", "dimension of the survivor set of the greedy map");
  dim->add_option("--base", base)->capture_default_str();
  dim->add_option("--hole-N", hole_N)->capture_default_str();
  command(dim, "json", 0, [&](const RunConfig& cfg) {
    require_format(cfg, {"json"});
    BetaDynamics dyn(parse_base(base));
    emit(out, to_json(survivor_dimension(dyn, hole_N)));
  });

  auto* bounds = app.add_subcommand("dim-bounds", "bounds dim F_{N-1} <= dim E_N <= dim F_N for n-bonacci bases");
  bounds->add_option("--n", n)->capture_default_str();
  bounds->add_option("--N", N)->capture_default_str();
  bounds->add_option("--N-range", N_range, "inclusive range a:b, overrides --N");
  command(bounds, "json", 0, [&](const RunConfig& cfg) {
    require_format(cfg, {"json"});
    int a = N, b = N;
    if (!N_range.empty()) {
      const auto c = N_range.find(':');
      if (c == std::string::npos) throw Error(ErrorKind::InvalidArgument, "--N-range must look like a:b");
      a = parse_int(std::string_view(N_range).substr(0, c), "range start");
      b = parse_int(std::string_view(N_range).substr(c + 1), "range end");
    }
    Json rows = Json::array();
    for (int m = a; m <= b; ++m) {
      const auto [lo, hi] = dim_bounds_E(n, m);
      rows.push_back(Json{{"n", n}, {"N", m}, {"lower", to_json(lo)}, {"upper", to_json(hi)}});
    }
    emit(out, N_range.empty() ? rows[0] : rows);
  });

  auto* doubling = app.add_subcommand("doubling", "dimension of the doubling-map survivor set with hole [0, 2^-N]");
  doubling->add_option("--N", N)->capture_default_str();
  command(doubling, "json", 0, [&](const RunConfig& cfg) {
    require_format(cfg, {"json"});
    emit(out, to_json(doubling_hole_dimension(N)));
  });

  auto* sgap = app.add_subcommand("sgap", "entropy of the S-gap shift with gaps n+1..N-1");
  sgap->add_option("--n", n)->capture_default_str();
  sgap->add_option("--N", N)->capture_default_str();
  command(sgap, "json", 0, [&](const RunConfig& cfg) {
    require_format(cfg, {"json"});
    emit(out, to_json(sgap_entropy(n, N)));
  });

  auto* moran = app.add_subcommand("moran", "similarity dimension from contraction ratios");
  moran->add_option("--ratios", ratios, "comma-separated rationals in (0,1)");
  moran->add_option("--base", base, "with --powers: ratios beta^-k")->capture_default_str();
  moran->add_option("--powers", powers, "comma-separated exponents k");
  command(moran, "json", 0, [&](const RunConfig& cfg) {
    require_format(cfg, {"json"});
    std::vector<RationalInterval> rs;
    auto split = [](const std::string& s) {
      std::vector<std::string> parts;
      std::size_t start = 0;
      for (std::size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == ',') {
          parts.push_back(s.substr(start, i - start));
          start = i + 1;
        }
      return parts;
    };
    if (!ratios.empty() == !powers.empty()) throw Error(ErrorKind::InvalidArgument, "give exactly one of --ratios and --powers");
    if (!ratios.empty()) {
      for (const auto& r : split(ratios)) {
        const Rational q = parse_rational(r);
        rs.push_back({q, q});
      }
    } else {
      const auto field = parse_base(base);
      for (const auto& p : split(powers)) rs.push_back(beta_power_enclosure(field, parse_int(p, "power")));
    }
    emit(out, to_json(moran_solve(rs)));
  });

  auto* spectrum = app.add_subcommand("spectrum", "discrete spectrum table and its largest gap");
  spectrum->add_option("--base", base)->capture_default_str();
  spectrum->add_option("--level", level)->capture_default_str();
  spectrum->add_option("--digits", digits, "significant digits in CSV output")->capture_default_str()->check(CLI::Range(1, 200));
  spectrum->add_flag("--no-window", no_window, "take the largest gap over the whole table");
  command(spectrum, "csv", 0, [&](const RunConfig& cfg) {
    require_format(cfg, {"csv", "json"});
    const auto t = enumerate_spectrum(parse_base(base), level);
    if (cfg.format == "csv") {
      out << spectrum_csv(t, digits);
      return;
    }
    emit(out, Json{{"level", t.level}, {"size", t.size()}, {"max_gap", to_json(max_gap(t, !no_window))}});
  });

  auto* member = app.add_subcommand("membership", "certificates for membership in F and E");
  member->add_option("--base", base)->capture_default_str();
  member->add_option("--x", x)->capture_default_str();
  member->add_option("--hole-N", hole_N)->capture_default_str();
  member->add_option("--depth", depth)->capture_default_str();
  command(member, "json", kDefaultNodeBudget, [&](const RunConfig& cfg) {
    require_format(cfg, {"json"});
    BetaDynamics dyn(parse_base(base));
    emit(out, to_json(membership(dyn, parse_point(dyn.field(), x), hole_N, depth, 100000, cfg.budget)));
  });

  auto* witness = app.add_subcommand("witness", "word moving the hole endpoint strictly inside the hole");
  witness->add_option("--base", base)->capture_default_str();
  witness->add_option("--hole-N", hole_N)->capture_default_str();
  witness->add_option("--p-max", p_max)->capture_default_str();
  command(witness, "json", kDefaultNodeBudget, [&](const RunConfig& cfg) {
    require_format(cfg, {"json"});
    BetaDynamics dyn(parse_base(base));
    const auto w = gd_witness(dyn, hole_N, p_max, cfg.budget);
    emit(out, Json{{"witness", w ? Json(w->str()) : Json(nullptr)}, {"p_max", p_max}});
  });

  auto* blocks = app.add_subcommand("blocks", "does a word contain every block of length k");
  blocks->add_option("--word", word)->required();
  blocks->add_option("--k", k)->capture_default_str();
  command(blocks, "text", 0, [&](const RunConfig& cfg) {
    require_format(cfg, {"text", "json"});
    const bool all = contains_all_blocks(DigitWord::parse(word), k);
    if (cfg.format == "text")
      out << (all ? "true" : "false") << '\n';
    else
      emit(out, Json{{"word", word}, {"k", k}, {"all_blocks", all}});
  });

  std::vector<std::string> argv_storage{"betadyn"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  try {
    run();
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::InvalidArgument ? kExitUsage : kExitDomain;
  }
  return kExitOk;
}

}  // namespace betadyn
