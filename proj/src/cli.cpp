#include "frobenius/cli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <CLI11.hpp>

#include "frobenius/descriptors.hpp"
#include "frobenius/errors.hpp"
#include "frobenius/fc_structure.hpp"
#include "frobenius/finite_group.hpp"
#include "frobenius/montecarlo.hpp"
#include "frobenius/open_fc.hpp"
#include "frobenius/report.hpp"
#include "frobenius/torus.hpp"
#include "frobenius/weyl.hpp"

namespace frobenius {
namespace {

constexpr std::array<std::pair<Command, std::string_view>, 9> kCommands{{
    {Command::FiniteTable, "finite-table"},
    {Command::FiniteFrobenius, "finite-frobenius"},
    {Command::TorusSum, "torus-sum"},
    {Command::SunSum, "sun-sum"},
    {Command::FcMeasure, "fc-measure"},
    {Command::OpenFcMeasure, "openfc-measure"},
    {Command::McCommprob, "mc-commprob"},
    {Command::McBall, "mc-ball"},
    {Command::Validate, "validate"},
}};

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [c, n] : kCommands) {
    if (n == name) return c;
  }
  return std::nullopt;
}

std::string_view to_string(Command command) {
  for (const auto& [c, n] : kCommands) {
    if (c == command) return n;
  }
  return "?";
}

std::vector<std::int64_t> depth_schedule(std::int64_t depth) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 0; d <= std::min<std::int64_t>(depth, 50); ++d) out.push_back(d);
  for (std::int64_t scale = 100; scale <= depth && scale > 0; scale *= 10) {
    for (std::int64_t m : {1, 2, 5}) {
      if (m * scale <= depth) out.push_back(m * scale);
    }
  }
  if (out.back() != depth) out.push_back(depth);
  return out;
}

namespace {

std::string complex_text(Complex z) {
  if (std::abs(z.imag()) < 1e-12) return format_double(z.real());
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

// Character values are algebraic integers; parts within 1e-9 of an integer
// are printed as that integer.
Complex snap(Complex z) {
  auto part = [](double x) {
    const double r = std::round(x);
    return std::abs(x - r) < 1e-9 ? r + 0.0 : x;
  };
  return {part(z.real()), part(z.imag())};
}

std::string angles_text(const std::vector<Angle>& theta) {
  std::string out;
  for (std::size_t j = 0; j < theta.size(); ++j) out += (j ? ", " : "") + to_string(theta[j]);
  return out;
}

void emit(const RunConfig& config, const ConvergenceTable& table, std::ostream& out) {
  if (config.format == OutputFormat::Json) {
    write_json(out, table);
  } else {
    write_csv(out, table);
  }
}

ConvergenceTable new_table(const RunConfig& config, const GroupSpec* spec, std::string sweep,
                           std::vector<std::string> columns) {
  ConvergenceTable t;
  t.command = std::string(to_string(config.command));
  if (spec) {
    t.group = spec->describe();
    t.group_digest = spec->digest();
  }
  t.sweep = std::move(sweep);
  t.columns = std::move(columns);
  return t;
}

const FiniteSpec& finite_of(const GroupHandle& h) {
  const auto* f = std::get_if<FiniteSpec>(&h.spec.value);
  if (!f) throw Error(ErrorKind::SpecMismatch, "command needs a finite group, got " + h.spec.describe());
  return *f;
}

std::vector<std::int64_t> sweep_depths(const RunConfig& config) {
  auto depths = config.depths.empty() ? depth_schedule(config.depth) : config.depths;
  for (auto d : depths) {
    if (d < 0) throw Error(ErrorKind::ConstraintViolation, "depths must be non-negative");
  }
  std::sort(depths.begin(), depths.end());
  depths.erase(std::unique(depths.begin(), depths.end()), depths.end());
  return depths;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::ConstraintViolation, message);
}

// ---------------------------------------------------------------------------

void finite_table(const RunConfig& config, const Limits& limits, std::ostream& out) {
  const auto h = load_group(config.group, limits);
  const auto& g = *finite_of(h).group;
  const auto table = character_table(g, limits);
  std::vector<std::string> columns{"character", "degree"};
  for (const auto& c : g.classes()) columns.push_back(to_cycle_string(g.element(c.representative)));
  auto t = new_table(config, &h.spec, "character", columns);
  for (std::size_t chi = 0; chi < table.size(); ++chi) {
    std::vector<Cell> row{static_cast<std::int64_t>(chi), table.degrees[chi]};
    for (std::size_t c = 0; c < g.classes().size(); ++c) row.emplace_back(complex_text(snap(table.at(chi, c))));
    t.rows.push_back(std::move(row));
  }
  emit(config, t, out);
}

void finite_frobenius(const RunConfig& config, const Limits& limits, std::ostream& out) {
  const auto h = load_group(config.group, limits);
  const auto& g = *finite_of(h).group;
  const auto table = character_table(g, limits);
  std::optional<std::size_t> only;
  if (!config.element.empty()) only = g.class_of(g.require_index(parse_finite_element(g, h.named, config.element)));
  auto t = new_table(config, &h.spec, "class",
                     {"class", "representative", "class_size", "frobenius", "brute_force", "pr", "agree"});
  for (std::size_t c = 0; c < g.classes().size(); ++c) {
    if (only && *only != c) continue;
    const std::size_t rep = g.classes()[c].representative;
    const auto f = frobenius_fiber(g, table, rep);
    const auto b = brute_force_fiber(g, rep, limits);
    t.rows.push_back({static_cast<std::int64_t>(c), to_cycle_string(g.element(rep)),
                      static_cast<std::int64_t>(g.classes()[c].size()), static_cast<std::int64_t>(f),
                      static_cast<std::int64_t>(b), to_string(finite_pr(g, rep, limits)),
                      std::string(f == b ? "true" : "false")});
  }
  emit(config, t, out);
}

void torus_sum(const RunConfig& config, std::ostream& out) {
  require(!config.angles.empty(), "torus-sum needs --theta");
  const auto theta = parse_angle_list(config.angles);
  const double limit = torus_limit(theta);
  const GroupSpec spec{TorusSpec{theta.size()}};
  auto t = new_table(config, &spec, "depth", {"depth", "count", "value", "value_imag", "limit", "bound", "abs_error"});
  for (auto d : sweep_depths(config)) {
    const auto r = torus_partial_sum(theta, d);
    t.rows.push_back({d, static_cast<std::int64_t>(r.count), r.value.real(), r.value.imag(), limit, r.bound,
                      std::abs(r.value - Complex(limit, 0.0))});
  }
  emit(config, t, out);
}

void sun_sum(const RunConfig& config, const Limits& limits, std::ostream& out) {
  PartialSumOptions options;
  options.threads = config.threads;
  options.chunk_size = config.chunk_size;
  options.limits = limits;
  const std::vector<std::string> columns{"depth",           "irr_count", "raw",   "raw_imag", "normalized",
                                         "normalized_imag", "bound",     "limit", "violation"};
  if (config.n > 0) {
    require(config.group.empty(), "give either --N or --group, not both");
    require(!config.angles.empty(), "sun-sum needs --angles");
    const auto theta = parse_angle_list(config.angles);
    const GroupSpec spec{SUSpec{config.n}};
    auto t = new_table(config, &spec, "depth", columns);
    t.group += " at " + angles_text(theta);
    for (auto d : sweep_depths(config)) {
      const auto r = su_partial_sum(config.n, theta, d, options);
      t.rows.push_back({d, static_cast<std::int64_t>(r.irr_count), r.raw.real(), r.raw.imag(), r.normalized.real(),
                        r.normalized.imag(), r.bound, 0.0, std::string(r.violation ? "true" : "false")});
    }
    emit(config, t, out);
    return;
  }
  require(!config.group.empty(), "sun-sum needs --N or --group");
  const auto h = load_group(config.group, limits);
  const auto point = parse_point(h, config.element.empty() ? "e" : config.element);
  auto t = new_table(config, &h.spec, "depth", columns);
  t.group += " at " + format_point(h.spec, point);
  for (auto d : sweep_depths(config)) {
    const auto r = compact_partial_sum(h.spec, point, d, options);
    const bool violation = std::abs(r.normalized) > r.bound;
    Cell limit = std::string("-");
    if (const auto* torus = std::get_if<TorusPoint>(&point.value)) {
      limit = static_cast<double>(torus_limit(torus->coords));
    } else if (h.spec.dimension() > h.spec.rank()) {
      limit = 0.0;
    }
    t.rows.push_back({d, static_cast<std::int64_t>(r.irr_count), r.raw.real(), r.raw.imag(), r.normalized.real(),
                      r.normalized.imag(), r.bound, limit, std::string(violation ? "true" : "false")});
  }
  emit(config, t, out);
}

void fc_measure(const RunConfig& config, const Limits& limits, std::ostream& out) {
  const auto h = load_group(config.group, limits);
  const auto* fc = std::get_if<FCQuotientSpec>(&h.spec.value);
  if (!fc) throw Error(ErrorKind::SpecMismatch, "fc-measure needs an FC group descriptor");
  const auto g0 = parse_point(h, config.element.empty() ? "e" : config.element).as<CosetPoint>();
  const auto& group = *fc->group;
  const Rational exact = fc_fiber_exact(group, g0, limits);
  const double exact_value = boost::rational_cast<double>(exact);
  FCFormulaOptions options{config.threads, config.chunk_size};
  auto t = new_table(config, &h.spec, "depth",
                     {"depth", "characters", "formula", "exact", "exact_rational", "abs_error", "bound"});
  t.group += " at " + format_point(h.spec, g0);
  for (auto d : sweep_depths(config)) {
    const double f = fc_fiber_formula(group, g0, d, options);
    const auto count = static_cast<std::int64_t>(enumerate_fc_characters(group, std::min<std::int64_t>(d, 50)).size());
    t.rows.push_back({d, d <= 50 ? Cell{count} : Cell{std::string("-")}, f, exact_value, to_string(exact),
                      std::abs(f - exact_value), fc_fiber_error_bound(group, g0, d, limits)});
  }
  emit(config, t, out);
}

void openfc_measure(const RunConfig& config, const Limits& limits, std::ostream& out) {
  const auto h = load_group(config.group, limits);
  const auto* sd = std::get_if<SemidirectProductSpec>(&h.spec.value);
  if (!sd) throw Error(ErrorKind::SpecMismatch, "openfc-measure needs a semidirect descriptor");
  const auto& group = *sd->group;
  const auto g = parse_point(h, config.element.empty() ? "e" : config.element).as<SemidirectPoint>();
  const auto centre = fc_centre(group, limits);
  const Rational measure = restricted_fiber_measure(group, g, limits);
  const bool in_centre = std::find(centre.kernel.begin(), centre.kernel.end(), group.phi().require_index(g.phi)) !=
                         centre.kernel.end();
  std::vector<std::string> columns{"element", "in_fc_centre", "kernel_order", "index", "measure", "measure_value"};
  std::vector<Cell> row{format_point(h.spec, g), std::string(in_centre ? "true" : "false"),
                        static_cast<std::int64_t>(centre.kernel.size()), static_cast<std::int64_t>(centre.index),
                        to_string(measure), boost::rational_cast<double>(measure)};
  if (!config.witness_x.empty()) {
    const auto x = parse_point(h, config.witness_x).as<SemidirectPoint>();
    const auto report = commutator_coset_witness(group, x, g, config.trials, config.seed);
    for (const char* c : {"x", "witness", "trials", "passes", "centralizer_trials"}) columns.emplace_back(c);
    row.emplace_back(format_point(h.spec, x));
    row.emplace_back(format_point(h.spec, report.witness));
    row.emplace_back(static_cast<std::int64_t>(report.trials));
    row.emplace_back(static_cast<std::int64_t>(report.passes));
    row.emplace_back(static_cast<std::int64_t>(report.centralizer_trials));
  }
  auto t = new_table(config, &h.spec, "element", columns);
  t.rows.push_back(std::move(row));
  emit(config, t, out);
}

void mc(const RunConfig& config, const Limits& limits, std::ostream& out) {
  const auto h = load_group(config.group, limits);
  require(config.samples >= 1, "--samples must be ≥ 1");
  MCOptions options{config.chunk_size, config.threads};
  std::vector<MCEstimate> estimates;
  if (config.command == Command::McCommprob) {
    estimates.push_back(estimate_commuting_probability(h.spec, config.samples, config.seed, config.epsilons.front(), options));
  } else {
    require(!config.element.empty(), "mc-ball needs --element");
    const auto g = parse_point(h, config.element);
    validate_point(h.spec, g, config.tolerance);
    for (std::size_t i = 0; i < config.epsilons.size(); ++i) {
      estimates.push_back(
          estimate_ball_fiber(h.spec, g, config.epsilons[i], config.samples, config.seed + i, options));
    }
  }
  if (config.format == OutputFormat::Json) {
    write_json(out, estimates, std::string(to_string(config.command)), config.timing);
  } else {
    write_csv(out, estimates, config.timing);
  }
}

void validate(const RunConfig& config, const Limits& limits, std::ostream& out) {
  const auto h = load_group(config.group, limits);
  auto t = new_table(config, &h.spec, "property", {"property", "value"});
  auto add = [&](std::string key, Cell value) { t.rows.push_back({std::move(key), std::move(value)}); };
  add("description", h.spec.describe());
  add("dimension", static_cast<std::int64_t>(h.spec.dimension()));
  add("rank", static_cast<std::int64_t>(h.spec.rank()));
  add("metric", metric_name(h.spec));
  if (const auto* f = std::get_if<FiniteSpec>(&h.spec.value)) {
    const auto& g = *f->group;
    const auto table = character_table(g, limits);
    add("order", static_cast<std::int64_t>(g.order()));
    add("classes", static_cast<std::int64_t>(g.classes().size()));
    add("centre_order", static_cast<std::int64_t>(g.center().size()));
    add("row_orthogonality_error", row_orthogonality_error(table));
    add("column_orthogonality_error", column_orthogonality_error(table));
  } else if (const auto* fc = std::get_if<FCQuotientSpec>(&h.spec.value)) {
    add("torus_dim", static_cast<std::int64_t>(fc->group->torus_dim()));
    add("delta_order", static_cast<std::int64_t>(fc->group->delta().order()));
    add("n_order", static_cast<std::int64_t>(fc->group->n_order()));
    add("characters_depth_1", static_cast<std::int64_t>(enumerate_fc_characters(*fc->group, 1).size()));
  } else if (const auto* sd = std::get_if<SemidirectProductSpec>(&h.spec.value)) {
    const auto centre = fc_centre(*sd->group, limits);
    add("torus_dim", static_cast<std::int64_t>(sd->group->torus_dim()));
    add("phi_order", static_cast<std::int64_t>(sd->group->phi().order()));
    add("kernel_order", static_cast<std::int64_t>(centre.kernel.size()));
    add("fc_centre_index", static_cast<std::int64_t>(centre.index));
    add("fc_centre_open", std::string(centre.open ? "true" : "false"));
  }
  if (!config.element.empty()) {
    const auto p = parse_point(h, config.element);
    validate_point(h.spec, p, config.tolerance);
    add("element", format_point(h.spec, canonicalize(h.spec, p)));
  }
  emit(config, t, out);
}

}  // namespace

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const Limits limits = Limits::from_environment();
    require(config.threads >= 1, "--threads must be ≥ 1");
    require(config.tolerance > 0.0, "--tolerance must be > 0");
    std::ostringstream buffer;
    switch (config.command) {
      case Command::FiniteTable:
        finite_table(config, limits, buffer);
        break;
      case Command::FiniteFrobenius:
        finite_frobenius(config, limits, buffer);
        break;
      case Command::TorusSum:
        torus_sum(config, buffer);
        break;
      case Command::SunSum:
        sun_sum(config, limits, buffer);
        break;
      case Command::FcMeasure:
        fc_measure(config, limits, buffer);
        break;
      case Command::OpenFcMeasure:
        openfc_measure(config, limits, buffer);
        break;
      case Command::McCommprob:
      case Command::McBall:
        mc(config, limits, buffer);
        break;
      case Command::Validate:
        validate(config, limits, buffer);
        break;
    }
    out << buffer.str();
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_validation_error(e.kind()) ? 1 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

namespace {

std::string_view summary(Command command) {
  switch (command) {
    case Command::FiniteTable:
      return "character table of a finite group";
    case Command::FiniteFrobenius:
      return "commutator fiber sizes per class, formula and exhaustive count";
    case Command::TorusSum:
      return "normalized character sums on a torus";
    case Command::SunSum:
      return "normalized character sums on SU(N) with the error bound";
    case Command::FcMeasure:
      return "fiber measure on (T^k x Delta)/N, formula against exact value";
    case Command::OpenFcMeasure:
      return "fiber measure of a semidirect product restricted to its FC-centre";
    case Command::McCommprob:
      return "Monte Carlo commuting probability";
    case Command::McBall:
      return "Monte Carlo measure of commutators near an element";
    case Command::Validate:
      return "check a group descriptor and report its structure";
  }
  return "";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  // "sun sum" -> "sun-sum"
  if (args.size() >= 2 && !parse_command(args[0]) && parse_command(args[0] + "-" + args[1])) {
    args[0] += "-" + args[1];
    args.erase(args.begin() + 1);
  }

  CLI::App app{"Commutator fibers: character sums, exact oracles and Monte Carlo"};
  app.require_subcommand(1);
  app.footer(
      "Exit status: 0 success, 1 validation error, 2 computational error.\n"
      "Caps: FROBENIUS_MAX_GROUP_ORDER (10000), FROBENIUS_MAX_PAIRS (1e8),\n"
      "      FROBENIUS_MAX_CLASSES (64), FROBENIUS_MAX_WEIGHTS (1e7).\n"
      "Built-in groups: S3 S4 A4 D4 Q8 Z2 Z4 T<k> SU<N> O2 Z4rot Q8xT1 T1xZ2/diag.");

  RunConfig config;
  std::string format = "csv";
  std::string depths;
  std::string epsilons;
  for (const auto& [command, name] : kCommands) {
    CLI::App* sub = app.add_subcommand(std::string(name), std::string(summary(command)));
    sub->callback([&config, command = command] { config.command = command; });
    sub->add_option("--group,-g", config.group, "built-in name, JSON file or inline JSON");
    sub->add_option("--element,-e", config.element, "group element");
    sub->add_option("--theta,--angles", config.angles, "comma-separated angles, e.g. \"1/2 pi, -1/2 pi\"");
    sub->add_option("--N", config.n, "SU(N) size")->check(CLI::Range(2, 64));
    sub->add_option("--depth,-n", config.depth, "largest truncation depth")->check(CLI::NonNegativeNumber);
    sub->add_option("--depths", depths, "explicit comma-separated depth list");
    sub->add_option("--samples", config.samples, "Monte Carlo pairs")->check(CLI::PositiveNumber);
    sub->add_option("--seed", config.seed, "64-bit seed");
    sub->add_option("--epsilon", epsilons, "ball radius, or a comma-separated list for mc-ball");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--threads", config.threads, "worker threads")->check(CLI::Range(1u, 1024u));
    sub->add_option("--chunk-size", config.chunk_size, "terms or samples per chunk")->check(CLI::PositiveNumber);
    sub->add_option("--tolerance", config.tolerance, "matrix tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--trials", config.trials, "witness trials for openfc-measure");
    sub->add_option("--witness-x", config.witness_x, "x for the coset-translate witness [x, h0] = element");
    sub->add_flag("!--no-timing", config.timing, "omit wall time from Monte Carlo output");
  }

  std::vector<const char*> raw{argv[0]};
  for (const auto& a : args) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    config.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
    if (!depths.empty()) {
      config.depths.clear();
      std::stringstream ss(depths);
      std::string piece;
      while (std::getline(ss, piece, ',')) config.depths.push_back(std::stoll(piece));
    }
    if (!epsilons.empty()) {
      config.epsilons.clear();
      std::stringstream ss(epsilons);
      std::string piece;
      while (std::getline(ss, piece, ',')) {
        const double e = std::stod(piece);
        if (!(e > 0.0)) throw std::invalid_argument("epsilon must be > 0");
        config.epsilons.push_back(e);
      }
    }
  } catch (const std::exception& e) {
    err << "error: bad list argument: " << e.what() << "\n";
    return 1;
  }
  return run_command(config, out, err);
}

}  // namespace frobenius
