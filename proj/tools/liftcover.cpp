// liftcover: command-line front end. Every command writes canonical JSON
// (or SVG for plot) to stdout or --out.
//
// Exit codes: 0 definitive result (including not-covered), 2 rejected
// input, 3 S-freeness only established on the search window, 1 internal
// error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "liftcover/errors.hpp"
#include "liftcover/io.hpp"
#include "liftcover/svg.hpp"

using namespace liftcover;
using io::json;

namespace {

constexpr int kOk = 0, kInternal = 1, kRejected = 2, kInconclusive = 3;

// Input rejection tied to a file and a JSON pointer inside it.
struct InputError {
  std::string file, pointer, message;
};

template <typename F>
auto load(const std::string& path, F parse) {
  try {
    return parse(io::read_file(path));
  } catch (const ParseError& e) {
    std::string msg = e.what();
    if (!e.where().empty() && msg.rfind(e.where() + ": ", 0) == 0) msg = msg.substr(e.where().size() + 2);
    throw InputError{path, e.where(), msg};
  }
}

QVector parse_point(const std::string& text, std::size_t dim) {
  std::vector<Rational> entries;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string token = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      entries.push_back(parse_rational(token));
    } catch (const ParseError& e) {
      throw InputError{"--point", "", e.what()};
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (entries.size() != dim)
    throw InputError{"--point", "", "expected " + std::to_string(dim) + " comma-separated rationals, got '" + text + "'"};
  return QVector(std::move(entries));
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw InputError{out, "", "cannot write output file"};
  f << text;
}

struct Common {
  std::string body, lattice, out;
  long window = 5;
  unsigned threads = 0;
  LiftingOptions options() const { return LiftingOptions{window, threads}; }
};

void add_pair(CLI::App* cmd, Common& c) {
  cmd->add_option("--body", c.body, "body JSON {dim, normals}")->required();
  cmd->add_option("--lattice", c.lattice, "lattice JSON {dim, basis, shift, hull}")->required();
  cmd->add_option("--window", c.window, "search window for window-relative checks")->capture_default_str();
  cmd->add_option("--threads", c.threads, "oracle threads (0: LIFTCOVER_THREADS or all cores)");
  cmd->add_option("--out", c.out, "output file (default stdout)");
}

json reduction_trace(const LiftingContext& ctx) {
  if (!ctx.reduction()) return nullptr;
  const auto& red = *ctx.reduction();
  json removed = json::array();
  const QMatrix& N = red.removed_lattice.basis();
  for (std::size_t c = 0; c < N.cols(); ++c) removed.push_back(io::to_json(N.column(c)));
  return {{"removed", removed},
          {"working_body", io::to_json(red.body)},
          {"working_lattice", io::to_json(red.lattice)}};
}

int run(int argc, char** argv) {
  CLI::App app{"Covering property and unique minimal liftings for S-free polyhedra"};
  app.require_subcommand(1);
  Common c;
  long resolution = 64;
  bool no_oracle = false;

  auto* check = app.add_subcommand("check-covering", "decide R(S,B) + W_S = R^n with certificate or witness");
  add_pair(check, c);
  check->add_option("--oracle-resolution", resolution, "grid oracle resolution per W coordinate")->capture_default_str();
  check->add_flag("--no-oracle", no_oracle, "skip the sampling cross-check");

  std::string map_path;
  auto* transform = app.add_subcommand("transform", "apply x -> M x + m to (S, B)");
  add_pair(transform, c);
  transform->add_option("--map", map_path, "affine map JSON {M, m}")->required();

  std::string b1, b2, l1, l2, mu_text;
  auto* coprod = app.add_subcommand("coproduct", "B1/mu <> B2/(1 - mu)");
  coprod->add_option("--b1", b1)->required();
  coprod->add_option("--b2", b2)->required();
  coprod->add_option("--mu", mu_text, "weight in (0, 1)")->required();
  coprod->add_option("--l1", l1, "lattice of B1; with --l2 also emits the product lattice");
  coprod->add_option("--l2", l2);
  coprod->add_option("--out", c.out);

  std::string instance_path;
  auto* limit = app.add_subcommand("verify-limit", "check samples and limit of a convergent family");
  limit->add_option("--instance", instance_path, "JSON {lattice, samples, limit}")->required();
  limit->add_option("--window", c.window)->capture_default_str();
  limit->add_option("--out", c.out);

  std::vector<std::string> points;
  bool allow_uncertified = false;
  auto* lift = app.add_subcommand("lift", "minimal lifting values at points");
  add_pair(lift, c);
  lift->add_option("--point", points, "comma-separated rationals, repeatable")->required();
  lift->add_flag("--allow-uncertified", allow_uncertified, "fall back to a window bound when covering fails");

  long y_max = 2, enum_window = 3;
  bool no_validate = false;
  auto* cut = app.add_subcommand("cut", "cut coefficients for a mixed-integer instance");
  add_pair(cut, c);
  cut->add_option("--instance", instance_path, "instance JSON {R, P}")->required();
  cut->add_flag("--allow-uncertified", allow_uncertified, "emit window-bound liftings when covering fails");
  cut->add_option("--y-max", y_max, "integer box for validation")->capture_default_str();
  cut->add_option("--enum-window", enum_window, "S window for validation")->capture_default_str();
  cut->add_flag("--no-validate", no_validate);

  auto* gal = app.add_subcommand("gallery", "built-in certified examples");
  gal->require_subcommand(1);
  auto* gal_list = gal->add_subcommand("list", "names of the entries");
  std::string name;
  auto* gal_emit = gal->add_subcommand("emit", "one entry as JSON");
  gal_emit->add_option("name", name)->required();
  gal_emit->add_option("--out", c.out);
  std::string family;
  std::size_t family_dim = 2;
  auto* gal_limit = gal->add_subcommand("limit", "a limit family as verify-limit input");
  gal_limit->add_option("family", family, "facet-family or simplex")->required()->check(CLI::IsMember({"facet-family", "simplex"}));
  gal_limit->add_option("--dim", family_dim)->capture_default_str();
  gal_limit->add_option("--out", c.out);

  long range = 2;
  auto* plot = app.add_subcommand("plot", "SVG of B, spindles and W_S translates (2-d only)");
  add_pair(plot, c);
  plot->add_option("--range", range, "draw [-range, range]^2")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kRejected;
  }
  if (c.window < 0) throw InputError{"--window", "", "window must be nonnegative"};

  auto body = [&] { return load(c.body, [&](const json& j) { return io::body_from_json(j); }); };
  auto lattice = [&] { return load(c.lattice, [&](const json& j) { return io::lattice_from_json(j); }); };

  if (check->parsed()) {
    if (resolution <= 0) throw InputError{"--oracle-resolution", "", "resolution must be positive"};
    LiftingContext ctx(lattice(), body(), c.options());
    json out;
    out["report"] = io::to_json(ctx.check_covering());
    out["window"] = c.window;
    out["oracle_resolution"] = resolution;
    out["oracle"] = no_oracle ? json(nullptr) : io::to_json(ctx.grid_oracle(static_cast<std::size_t>(resolution)));
    out["reduction"] = reduction_trace(ctx);
    emit(io::dump(out), c.out);
    return ctx.validation_exact() ? kOk : kInconclusive;
  }
  if (transform->parsed()) {
    AffineMap T = load(map_path, [&](const json& j) { return io::map_from_json(j); });
    auto [S2, B2] = affine_transform(lattice(), body(), T);
    emit(io::dump({{"body", io::to_json(B2)}, {"lattice", io::to_json(S2)}}), c.out);
    return kOk;
  }
  if (coprod->parsed()) {
    Rational mu;
    try {
      mu = parse_rational(mu_text);
    } catch (const ParseError& e) {
      throw InputError{"--mu", "", e.what()};
    }
    SFreeBody B1 = load(b1, [&](const json& j) { return io::body_from_json(j); });
    SFreeBody B2 = load(b2, [&](const json& j) { return io::body_from_json(j); });
    SFreeBody B = coproduct(B1, B2, mu);
    if (l1.empty() != l2.empty()) throw InputError{"--l1/--l2", "", "give both lattices or neither"};
    if (l1.empty()) {
      emit(io::dump(io::to_json(B)), c.out);
    } else {
      auto S1 = load(l1, [&](const json& j) { return io::lattice_from_json(j); });
      auto S2 = load(l2, [&](const json& j) { return io::lattice_from_json(j); });
      emit(io::dump({{"body", io::to_json(B)}, {"lattice", io::to_json(product(S1, S2))}}), c.out);
    }
    return kOk;
  }
  if (limit->parsed()) {
    LimitInstance inst = load(instance_path, [&](const json& j) { return io::limit_from_json(j); });
    LimitReport r = verify_limit(inst, c.options());
    json out = io::to_json(r);
    out["window"] = c.window;
    emit(io::dump(out), c.out);
    bool exact = r.limit.exact;
    for (const auto& s : r.samples) exact = exact && s.exact;
    return exact ? kOk : kInconclusive;
  }
  if (lift->parsed()) {
    LiftingContext ctx(lattice(), body(), c.options());
    bool covered = ctx.check_covering().covered();
    if (!covered && !allow_uncertified)
      throw PreconditionError("covering property fails; pass --allow-uncertified for window bounds");
    json rows = json::array();
    for (const auto& text : points) {
      QVector p = parse_point(text, ctx.lattice().dim());
      json row = io::to_json(covered ? ctx.minimal_lifting(p) : ctx.lifting_upper_bound(p));
      row["point"] = io::to_json(p);
      rows.push_back(row);
    }
    emit(io::dump({{"liftings", rows}, {"verdict", to_string(ctx.check_covering().verdict)}, {"window", c.window}}),
         c.out);
    return ctx.validation_exact() ? kOk : kInconclusive;
  }
  if (cut->parsed()) {
    auto S = lattice();
    auto inst = load(instance_path, [&](const json& j) { return io::instance_from_json(j); });
    Cut k = generate_cut(S, body(), inst, allow_uncertified, c.options());
    json out;
    out["cut"] = io::to_json(k);
    out["validation"] = no_validate ? json(nullptr) : io::to_json(validate_cut(S, inst, k, {y_max, enum_window}));
    out["window"] = c.window;
    out["y_max"] = y_max;
    out["enum_window"] = enum_window;
    emit(io::dump(out), c.out);
    return kOk;
  }
  if (gal_list->parsed()) {
    emit(io::dump(gallery::names()), c.out);
    return kOk;
  }
  if (gal_emit->parsed()) {
    emit(io::dump(io::to_json(gallery::named(name))), c.out);
    return kOk;
  }
  if (gal_limit->parsed()) {
    LimitInstance inst = family == "simplex" ? gallery::simplex_limit(family_dim) : gallery::facet_family_limit(family_dim);
    emit(io::dump(io::to_json(inst)), c.out);
    return kOk;
  }
  if (plot->parsed()) {
    LiftingContext ctx(lattice(), body(), c.options());
    emit(plot_svg(ctx, PlotOptions{range, 100}), c.out);
    return kOk;
  }
  return kInternal;
}

void report(const std::string& kind, const std::string& message, const std::string& file = "",
            const std::string& pointer = "") {
  json err = {{"error", kind}, {"message", message}};
  if (!file.empty()) err["file"] = file;
  if (!pointer.empty()) err["pointer"] = pointer;
  std::cerr << io::dump(err);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InputError& e) {
    report("input", e.message, e.file, e.pointer);
    return kRejected;
  } catch (const ParseError& e) {
    report("input", e.what(), "", e.where());
    return kRejected;
  } catch (const PreconditionError& e) {
    report("precondition", e.what());
    return kRejected;
  } catch (const DimensionError& e) {
    report("dimension", e.what());
    return kRejected;
  } catch (const InconclusiveError& e) {
    report("inconclusive", e.what());
    return kInconclusive;
  } catch (const std::exception& e) {
    report("internal", e.what());
    return kInternal;
  }
}
