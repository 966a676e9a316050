#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <set>

#include <CLI11.hpp>

#include "tropic/tropic.hpp"

namespace tropic::cli {
namespace {

const std::vector<std::string> kCommands = {"residual", "distance", "solve",      "pseudo", "general",
                                            "independent", "reduce", "consistify", "oracle"};

struct Options {
  std::string command;
  std::string matrix_path;
  std::string vector_path;
  std::string problem_path;
  std::string semifield;
  std::string format = "text";
  std::optional<double> tolerance;
  std::size_t max_cols = 20;
  bool allow_partial = false;
  std::optional<std::uint64_t> seed;
  std::size_t rows = 3;
  std::size_t cols = 3;
  double density = 0.75;
  long value_lo = -5;
  long value_hi = 5;
  std::string grid_lo = "-15";
  std::string grid_hi = "15";
  std::string grid_step = "1/2";
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_input(const std::string& path) {
  try {
    return read_text_file(path);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

struct Inputs {
  std::optional<Token> kind;
  std::optional<std::vector<TokenRow>> matrix;
  std::optional<TokenRow> vector;
};

IndexList one_based(const IndexSet& s) {
  IndexList out;
  for (std::size_t i : s) out.values.push_back(i + 1);
  return out;
}

template <class F>
std::string token(const F& f, const typename F::scalar_type& x) {
  return format_scalar(f, x);
}

template <class F>
std::string token(const F& f, const Distance<F>& d) {
  return d.is_infinite() ? std::string("inf") : format_scalar(f, d.value());
}

template <class F, class Tag>
TokenList tokens(const detail::Array<F, Tag>& v) {
  TokenList out;
  for (const auto& x : v) out.push_back(format_scalar(v.field(), x));
  return out;
}

template <class F>
TokenGrid tokens(const Matrix<F>& A) {
  TokenGrid out(A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) out[i].push_back(format_scalar(A.field(), A(i, j)));
  }
  return out;
}

template <class F>
void add_residual(ReportDocument& doc, const F& f, const Distance<F>& delta) {
  doc.add("residual", token(f, delta));
  doc.add("residual_is_one", is_unit(f, delta));
}

template <class F>
BoxEntry box_entry(const F& f, const BoxSolution<F>& box) {
  BoxEntry e;
  e.index_set = one_based(box.index_set);
  for (std::size_t j = 0; j < box.dimension; ++j) {
    if (auto it = box.fixed.find(j); it != box.fixed.end()) {
      e.components.push_back("=" + format_scalar(f, it->second));
    } else if (auto ub = box.upper_bounds.find(j); ub != box.upper_bounds.end()) {
      e.components.push_back(ub->second ? "<=" + format_scalar(f, *ub->second) : std::string("*"));
    } else {
      e.components.push_back("?");
    }
  }
  return e;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::none:
      return "none";
    case Verdict::unique:
      return "unique";
    case Verdict::family:
      return "family";
  }
  return "none";
}

template <class F>
Matrix<F> need_matrix(const F& f, const Inputs& in) {
  if (!in.matrix) throw UsageError("this command needs a matrix (-A or --problem)");
  return to_matrix(f, *in.matrix);
}

template <class F>
Problem<F> need_problem(const F& f, const Inputs& in) {
  auto A = need_matrix(f, in);
  if (!in.vector) throw UsageError("this command needs a vector (-d or --problem)");
  auto d = to_vector(f, *in.vector);
  if (A.rows() != d.size()) {
    throw DimensionMismatch("matrix has " + std::to_string(A.rows()) + " rows but vector has " +
                            std::to_string(d.size()) + " components");
  }
  return {std::move(A), std::move(d)};
}

template <class F>
int cmd_residual(const F& f, const Inputs& in, ReportDocument& doc) {
  auto [A, d] = need_problem(f, in);
  auto c = consistify(A, d);
  doc.add("zero_rows_of_d", one_based(c.zero_rows_of_d));
  doc.add("forced_zero_columns", one_based(c.forced_zero_columns));
  add_residual(doc, f, residual_delta(c.a_hat, d));
  return kSuccess;
}

template <class F>
int cmd_distance(const F& f, const Inputs& in, ReportDocument& doc) {
  auto [A, d] = need_problem(f, in);
  auto r = distance_to_span(A, d);
  doc.add("distance", token(f, r.delta));
  doc.add("distance_is_one", is_unit(f, r.delta));
  if (r.minimizer) doc.add("minimizer", tokens(*r.minimizer));
  if (r.nearest_point) doc.add("nearest_point", tokens(*r.nearest_point));
  return kSuccess;
}

template <class F>
int cmd_solve(const F& f, const Inputs& in, ReportDocument& doc) {
  auto [A, d] = need_problem(f, in);
  auto r = solve(A, d);
  doc.add("verdict", std::string(verdict_name(r.verdict)));
  add_residual(doc, f, r.residual);
  if (r.principal) {
    auto list = tokens(*r.principal);
    for (std::size_t j : r.free_indices) list[j] = "*";
    doc.add("principal", std::move(list));
  }
  if (r.pseudo) doc.add("pseudo", tokens(*r.pseudo));
  doc.add("free", one_based(r.free_indices));
  return r.verdict == Verdict::none ? kNegative : kSuccess;
}

template <class F>
int cmd_pseudo(const F& f, const Inputs& in, ReportDocument& doc) {
  auto [A, d] = need_problem(f, in);
  auto r = solve(A, d);
  add_residual(doc, f, r.residual);
  if (!r.pseudo) return kNegative;
  doc.add("pseudo", tokens(*r.pseudo));
  doc.add("nearest_point", tokens(mat_vec(A, *r.pseudo)));
  return kSuccess;
}

template <class F>
int cmd_general(const F& f, const Inputs& in, const Options& opt, ReportDocument& doc) {
  auto [A, d] = need_problem(f, in);
  GeneralOptions go;
  go.max_cols = opt.max_cols;
  go.allow_partial = opt.allow_partial;
  auto g = general_solution(A, d, go);
  doc.add("family_size", std::to_string(g.family.size()));
  doc.add("complete", g.complete);
  for (const auto& box : g.family) doc.add("box", box_entry(f, box));
  return g.family.empty() ? kNegative : kSuccess;
}

template <class F>
int cmd_independent(const F& f, const Inputs& in, ReportDocument& doc) {
  auto A = need_matrix(f, in);
  if (A.cols() >= 2) {
    doc.add("delta", token(f, delta_independence(A)));
  } else {
    doc.add("delta", std::string("undefined"));
  }
  const bool independent = is_independent(A);
  doc.add("independent", independent);
  return independent ? kSuccess : kNegative;
}

template <class F>
int cmd_reduce(const F& f, const Inputs& in, ReportDocument& doc) {
  auto A = need_matrix(f, in);
  auto trace = reduce_to_independent(A);
  doc.add("kept", one_based(trace.kept));
  doc.add("removed", one_based(trace.removed));
  TokenList steps;
  for (const auto& r : trace.step_residuals) steps.push_back(token(f, r));
  doc.add("step_residuals", std::move(steps));
  doc.add("reduced", tokens(A.select_columns(trace.kept)));
  return kSuccess;
}

template <class F>
int cmd_consistify(const F& f, const Inputs& in, ReportDocument& doc) {
  auto [A, d] = need_problem(f, in);
  auto c = consistify(A, d);
  doc.add("a_hat", tokens(c.a_hat));
  doc.add("zero_rows_of_d", one_based(c.zero_rows_of_d));
  doc.add("forced_zero_columns", one_based(c.forced_zero_columns));
  return kSuccess;
}

template <class F>
int cmd_oracle(const F& f, const Inputs& in, const Options& opt, ReportDocument& doc) {
  if constexpr (!is_max_plus_v<F>) {
    throw UsageError("the oracle command needs a max-plus semifield");
  } else {
    auto [A, d] = [&]() -> std::pair<Matrix<F>, Vector<F>> {
      if (in.matrix) {
        auto p = need_problem(f, in);
        return {std::move(p.A), std::move(p.d)};
      }
      if (!opt.seed) throw UsageError("the oracle command needs a problem or --seed");
      return random_instance<F>(*opt.seed, opt.rows, opt.cols, opt.density, opt.value_lo,
                                opt.value_hi, f);
    }();
    if (!in.matrix) {
      doc.add("seed", std::to_string(*opt.seed));
      doc.add("A", tokens(A));
      doc.add("d", tokens(d));
    }

    using Rep = typename F::rep_type;
    auto rep = [&](const std::string& s) -> Rep {
      return F::traits_type::from_rational(parse_rational(s));
    };
    GridSpec<Rep> g{rep(opt.grid_lo), rep(opt.grid_hi), rep(opt.grid_step), A.cols()};
    auto span = distance_to_span(A, d);
    auto grid = grid_min_distance(A, d, g);
    const bool distance_agrees = distance_eq(f, grid.value, span.delta);
    doc.add("closed_form", token(f, span.delta));
    doc.add("grid_minimum", token(f, grid.value));
    if (grid.argmin) doc.add("grid_argmin", tokens(*grid.argmin));
    doc.add("grid_visited", std::to_string(grid.visited));
    doc.add("distance_agrees", distance_agrees);

    bool generators_agree = true;
    if (A.cols() <= 12) {
      auto brute = enumerate_minimal_generators(A, d);
      std::vector<IndexSet> family;
      for (const auto& box : general_solution(A, d).family) family.push_back(box.index_set);
      generators_agree = brute == family;
      for (const auto& s : brute) doc.add("generator", one_based(s));
      doc.add("generators_agree", generators_agree);
    }
    return distance_agrees && generators_agree ? kSuccess : kInternal;
  }
}

template <class F>
int execute(const F& f, const Options& opt, const Inputs& in, ReportDocument& doc) {
  const std::string& c = opt.command;
  if (c == "residual") return cmd_residual(f, in, doc);
  if (c == "distance") return cmd_distance(f, in, doc);
  if (c == "solve") return cmd_solve(f, in, doc);
  if (c == "pseudo") return cmd_pseudo(f, in, doc);
  if (c == "general") return cmd_general(f, in, opt, doc);
  if (c == "independent") return cmd_independent(f, in, doc);
  if (c == "reduce") return cmd_reduce(f, in, doc);
  if (c == "consistify") return cmd_consistify(f, in, doc);
  if (c == "oracle") return cmd_oracle(f, in, opt, doc);
  throw UsageError("unknown command '" + c + "'");
}

Inputs load_inputs(const Options& opt) {
  Inputs in;
  if (!opt.problem_path.empty()) {
    if (!opt.matrix_path.empty() || !opt.vector_path.empty()) {
      throw UsageError("--problem cannot be combined with -A or -d");
    }
    auto raw = parse_problem_text(read_input(opt.problem_path));
    in.kind = raw.kind;
    in.matrix = std::move(raw.matrix);
    in.vector = std::move(raw.vector);
    return in;
  }
  if (!opt.matrix_path.empty()) in.matrix = parse_matrix_text(read_input(opt.matrix_path));
  if (!opt.vector_path.empty()) in.vector = parse_vector_text(read_input(opt.vector_path));
  return in;
}

double resolve_tolerance(const Options& opt) {
  if (opt.tolerance) return *opt.tolerance;
  if (const char* env = std::getenv("TROPIC_TOLERANCE"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      double v = std::stod(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
      return v;
    } catch (const std::exception&) {
      throw UsageError(std::string("TROPIC_TOLERANCE is not a number: '") + env + "'");
    }
  }
  return kDefaultTolerance;
}

int dispatch(const Options& opt, std::ostream& out) {
  Inputs in = load_inputs(opt);
  SemifieldKind kind = SemifieldKind::max_plus_rational;
  if (!opt.semifield.empty()) {
    kind = parse_semifield_kind(opt.semifield);
  } else if (in.kind) {
    try {
      kind = parse_semifield_kind(in.kind->text);
    } catch (const UnknownSemifield& e) {
      throw ParseError(e.what(), in.kind->line, in.kind->column);
    }
  }
  const double tol = resolve_tolerance(opt);

  ReportDocument doc;
  doc.add("command", opt.command);
  doc.add("semifield", std::string(to_string(kind)));
  int code = kSuccess;
  switch (kind) {
    case SemifieldKind::max_plus_float:
      code = execute(MaxPlusFloat(tol), opt, in, doc);
      break;
    case SemifieldKind::max_plus_rational:
      code = execute(MaxPlusRational(), opt, in, doc);
      break;
    case SemifieldKind::min_plus_float:
      code = execute(MinPlusFloat(tol), opt, in, doc);
      break;
    case SemifieldKind::max_times_float:
      code = execute(MaxTimesFloat(tol), opt, in, doc);
      break;
  }
  out << (opt.format == "json" ? write_json(doc) : write_text(doc));
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Linear algebra over idempotent semifields", "tropic"};
  app.add_option("command", opt.command, "Command to run")
      ->required()
      ->check(CLI::IsMember(kCommands));
  app.add_option("-A,--matrix", opt.matrix_path, "Matrix file");
  app.add_option("-d,--vector", opt.vector_path, "Right-hand vector file");
  app.add_option("-p,--problem", opt.problem_path, "Combined problem file");
  app.add_option("--semifield", opt.semifield,
                 "maxplus-rational (default), maxplus-float, minplus-float, maxtimes-float");
  app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--tol", opt.tolerance, "Float tolerance (overrides TROPIC_TOLERANCE)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--max-cols", opt.max_cols, "Column cap for the general solution");
  app.add_flag("--allow-partial", opt.allow_partial,
               "Past --max-cols, return a partial family instead of failing");
  app.add_option("--seed", opt.seed, "Random instance seed (oracle)");
  app.add_option("--rows", opt.rows, "Random instance rows (oracle)")->check(CLI::PositiveNumber);
  app.add_option("--cols", opt.cols, "Random instance columns (oracle)")->check(CLI::PositiveNumber);
  app.add_option("--density", opt.density, "Random instance density (oracle)")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--value-lo", opt.value_lo, "Random entries lower bound (oracle)");
  app.add_option("--value-hi", opt.value_hi, "Random entries upper bound (oracle)");
  app.add_option("--grid-lo", opt.grid_lo, "Grid window lower end (oracle)");
  app.add_option("--grid-hi", opt.grid_hi, "Grid window upper end (oracle)");
  app.add_option("--grid-step", opt.grid_step, "Grid step (oracle)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    return dispatch(opt, out);
  } catch (const UsageError& e) {
    err << "tropic: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownSemifield& e) {
    err << "tropic: " << e.what() << "\n";
    return opt.semifield.empty() ? kDataError : kUsage;
  } catch (const EnumerationCapExceeded& e) {
    err << "tropic: " << e.what() << " (raise --max-cols or pass --allow-partial)\n";
    return kUsage;
  } catch (const NotMaxPlus& e) {
    err << "tropic: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "tropic: parse error: " << e.what() << "\n";
    return kDataError;
  } catch (const DimensionMismatch& e) {
    err << "tropic: dimension mismatch: " << e.what() << "\n";
    return kDataError;
  } catch (const ZeroVectorD& e) {
    err << "tropic: " << e.what() << "\n";
    return kDataError;
  } catch (const InputError& e) {
    err << "tropic: " << e.what() << "\n";
    return kDataError;
  } catch (const InconsistentInput& e) {
    err << "tropic: " << e.what() << "\n";
    return kDataError;
  } catch (const std::exception& e) {
    err << "tropic: internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace tropic::cli
