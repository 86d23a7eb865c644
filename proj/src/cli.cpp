#include "foliage/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "foliage/errors.hpp"

namespace foliage::cli {

using io::Json;

namespace {

struct CommandName {
  Command command;
  const char* name;
};

constexpr CommandName kCommands[] = {
    {Command::CheckIntegrable, "check-integrable"},
    {Command::DeformationEquations, "deformation-equations"},
    {Command::Decompose, "decompose"},
    {Command::Periods, "periods"},
    {Command::FirstIntegral, "first-integral"},
    {Command::ClassifyDegreeOne, "classify-degree-one"},
    {Command::Rescale, "rescale"},
    {Command::RadialTest, "radial-test"},
};

// Outcome of one command: exit code, result payload, one-line summary.
struct Outcome {
  int code;
  Json result;
  std::string summary;
};

QuadratureOptions quadrature(const JobSpec& job) {
  QuadratureOptions opts;
  if (job.tol) opts.tol = *job.tol;
  if (job.max_nodes) opts.n_max = *job.max_nodes;
  return opts;
}

DeformationSeries load_series(const Json& in, const JobSpec& job, Json& echo) {
  DeformationSeries w = io::series_from_json(in.at("deformation"));
  if (job.order) w = w.truncated(*job.order);
  echo["deformation"] = io::to_json(w);
  return w;
}

FactoredFiber load_fiber(const Json& in, Json& echo) {
  FactoredFiber fiber = io::fiber_from_json(in.at("fiber"));
  echo["fiber"] = io::to_json(fiber);
  return fiber;
}

PForm load_form(const Json& in, const char* key, Json& echo) {
  PForm form = io::form_from_json(in.at(key));
  echo[key] = io::to_json(form);
  return form;
}

// A cycle entry is either an explicit Fourier cycle or
// {"torus": {"c": [re, im], "plane": [i, j], "anchor": [[re, im], ...]}}.
std::vector<Cycle> load_cycles(const Json& in, const FactoredFiber& fiber, Json& echo) {
  std::vector<Cycle> cycles;
  if (!in.contains("cycles")) return cycles;
  const Json& list = in["cycles"];
  if (!list.is_array()) throw Error(ErrorKind::ParseError, "cycles must be an array");
  Json echoed = Json::array();
  for (const auto& entry : list) {
    if (entry.is_object() && entry.contains("torus")) {
      io::check_keys(entry, {"torus"}, "cycle entry");
      const Json& t = entry["torus"];
      io::check_keys(t, {"c", "plane", "anchor"}, "torus cycle");
      auto plane = t.at("plane").get<std::vector<std::size_t>>();
      if (plane.size() != 2) throw Error(ErrorKind::ParseError, "torus plane must be [i, j]");
      std::vector<Complex> anchor(fiber.vars().size());
      if (t.contains("anchor")) {
        anchor.clear();
        for (const auto& a : t["anchor"]) anchor.push_back(io::complex_from_json(a));
      }
      cycles.push_back(standard_torus_cycle(fiber, io::complex_from_json(t.at("c")), {plane[0], plane[1]}, anchor));
    } else {
      cycles.push_back(io::cycle_from_json(entry));
    }
    echoed.push_back(io::to_json(cycles.back()));
  }
  echo["cycles"] = echoed;
  return cycles;
}

std::string describe(const std::vector<GaussianRational>& qs) {
  std::string s = "[";
  for (std::size_t i = 0; i < qs.size(); ++i) s += (i ? ", " : "") + qs[i].to_string();
  return s + "]";
}

Outcome run_check_integrable(const Json& in, const JobSpec& job, Json& echo) {
  io::check_keys(in, {"deformation"}, "check-integrable input");
  DeformationSeries w = load_series(in, job, echo);
  IntegrabilityReport r = integrability_defects(w);
  Json result = io::to_json(r);
  auto violations = degree_bound_violations(w);
  result["degree_bound_violations"] = violations;
  if (r.integrable())
    return {kHolds, result,
            r.exact_in_t ? "integrable for all t" : "integrable up to order " + std::to_string(w.order())};
  return {kFails, result, "not integrable: first defect at order " + std::to_string(*r.first_nonzero)};
}

Outcome run_deformation_equations(const Json& in, const JobSpec& job, Json& echo) {
  io::check_keys(in, {"deformation", "f"}, "deformation-equations input");
  DeformationSeries w = load_series(in, job, echo);
  Polynomial f = io::polynomial_from_json(in.at("f"));
  echo["f"] = io::to_json(f);
  auto eqs = deformation_equations(w, f);
  Json result = {{"equations", io::to_json(eqs)}};
  for (const auto& eq : eqs)
    if (!eq.holds) return {kFails, result, "deformation equation at order " + std::to_string(eq.order) + " fails"};
  return {kHolds, result, std::to_string(eqs.size()) + " deformation equations hold"};
}

Outcome run_decompose(const Json& in, const JobSpec&, Json& echo) {
  io::check_keys(in, {"form", "fiber"}, "decompose input");
  PForm omega = load_form(in, "form", echo);
  FactoredFiber fiber = load_fiber(in, echo);
  Decomposition d = decompose(omega, fiber);
  return {kHolds, io::to_json(d), "a = " + d.a.to_string() + ", lambda = " + describe(d.lambda) + ", h = " + d.h.to_string()};
}

Outcome run_periods(const Json& in, const JobSpec& job, Json& echo) {
  io::check_keys(in, {"deformation", "fiber", "cycles"}, "periods input");
  DeformationSeries w = load_series(in, job, echo);
  FactoredFiber fiber = load_fiber(in, echo);
  std::vector<Cycle> cycles = load_cycles(in, fiber, echo);
  PeriodReport r = obstruction_series(w, fiber, cycles, quadrature(job));
  Json result = io::to_json(r);
  if (r.obstruction_order) return {kFails, result, "nonzero period at order " + std::to_string(*r.obstruction_order)};
  return {kHolds, result, "all periods vanish up to order " + std::to_string(w.order())};
}

Outcome run_first_integral(const Json& in, const JobSpec& job, Json& echo) {
  io::check_keys(in, {"deformation", "fiber", "cycles"}, "first-integral input");
  DeformationSeries w = load_series(in, job, echo);
  FactoredFiber fiber = load_fiber(in, echo);
  std::vector<Cycle> cycles = load_cycles(in, fiber, echo);
  ReconstructionResult r = reconstruct_first_integral(w, fiber, cycles, quadrature(job));
  if (const auto* F = std::get_if<FirstIntegralSeries>(&r)) {
    Json result = {{"type", "FirstIntegral"}, {"first_integral", io::to_json(*F)}};
    std::string s = "first integral F_t = ";
    for (std::size_t j = 0; j < F->coeffs.size(); ++j)
      s += (j == 0 ? "(" : j == 1 ? " + t*(" : " + t^" + std::to_string(j) + "*(") + F->coeffs[j].to_string() + ")";
    return {kHolds, result, s};
  }
  const auto& ob = std::get<Obstruction>(r);
  Json result = {{"type", "Obstructed"}, {"obstruction", io::to_json(ob)}};
  return {kFails, result, "obstructed at order " + std::to_string(ob.order) + ", lambda = " + describe(ob.lambda)};
}

Outcome run_classify(const Json& in, const JobSpec&, Json& echo) {
  io::check_keys(in, {"fiber", "omega1"}, "classify-degree-one input");
  FactoredFiber fiber = load_fiber(in, echo);
  PForm omega1 = load_form(in, "omega1", echo);
  ClassificationResult c = classify_degree_one(fiber, omega1);
  DeformationSeries expected({PForm::differential(fiber.product()), omega1});
  bool verified = emit(c) == expected;
  Json result = io::to_json(c, verified);
  if (const auto* pb = std::get_if<PullbackCase>(&c))
    return {kHolds, result,
            "pullback case: mu = " + pb->mu.to_string() + ", lambda = " + pb->lambda.to_string() + ", P = " +
                pb->P.to_string() + ", Q = " + pb->Q.to_string()};
  return {kHolds, result, "exact case: h_tilde = " + std::get<ExactCase>(c).h_tilde.to_string()};
}

Outcome run_rescale(const Json& in, const JobSpec& job, Json& echo) {
  io::check_keys(in, {"form", "nu"}, "rescale input");
  PForm omega = load_form(in, "form", echo);
  if (!in.contains("nu") || !in["nu"].is_number_integer()) throw Error(ErrorKind::ParseError, "rescale needs integer nu");
  int nu = in["nu"].get<int>();
  echo["nu"] = nu;
  std::size_t order = job.order.value_or(3);
  DeformationSeries w = rescale_deformation(omega, nu, order);
  Json result = {{"deformation", io::to_json(w)}, {"t1_reproduces_input", w.at(1) == omega}};
  return {kHolds, result, "rescaled deformation of order " + std::to_string(w.order())};
}

Outcome run_radial(const Json& in, const JobSpec&, Json& echo) {
  io::check_keys(in, {"form"}, "radial-test input");
  PForm omega = load_form(in, "form", echo);
  RadialResult r = radial_test(omega);
  int code = r.kind == RadialKind::Neither ? kFails : kHolds;
  return {code, io::to_json(r), std::string("radial test: ") + to_string(r.kind)};
}

Outcome dispatch(Command c, const Json& in, const JobSpec& job, Json& echo) {
  switch (c) {
    case Command::CheckIntegrable: return run_check_integrable(in, job, echo);
    case Command::DeformationEquations: return run_deformation_equations(in, job, echo);
    case Command::Decompose: return run_decompose(in, job, echo);
    case Command::Periods: return run_periods(in, job, echo);
    case Command::FirstIntegral: return run_first_integral(in, job, echo);
    case Command::ClassifyDegreeOne: return run_classify(in, job, echo);
    case Command::Rescale: return run_rescale(in, job, echo);
    case Command::RadialTest: return run_radial(in, job, echo);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown command");
}

// Heuristic normal-crossing probe; never affects the exit code.
Json probe_fiber(const Json& fiber_json, std::uint64_t seed) {
  constexpr std::size_t kSamples = 4;
  try {
    return io::to_json(transversality_probe(io::fiber_from_json(fiber_json), kSamples, seed));
  } catch (const Error& e) {
    return {{"error", e.what()}, {"heuristic", true}};
  }
}

// Failures that are computed outcomes with a witness rather than bad input.
bool is_defect(ErrorKind kind) { return kind == ErrorKind::NotRelativelyClosed || kind == ErrorKind::NotIntegrable; }

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  for (const auto& c : kCommands)
    if (name == c.name) return c.command;
  return std::nullopt;
}

const char* command_name(Command c) {
  for (const auto& entry : kCommands)
    if (entry.command == c) return entry.name;
  return "unknown";
}

JobResult run(const JobSpec& job, const std::string& input_text) {
  JobResult out;
  Json report = {{"schema", kReportSchema}, {"command", command_name(job.command)}};
  Json options = Json::object();
  if (job.tol) options["tol"] = *job.tol;
  if (job.max_nodes) options["max_nodes"] = *job.max_nodes;
  if (job.order) options["order"] = *job.order;
  options["seed"] = job.seed;
  report["options"] = options;

  Json echo = Json::object();
  try {
    Json in;
    try {
      in = Json::parse(input_text);
    } catch (const Json::exception& e) {
      throw Error(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
    }
    Outcome o = dispatch(job.command, in, job, echo);
    report["status"] = o.code == kHolds ? "holds" : "fails";
    report["result"] = std::move(o.result);
    if (echo.contains("fiber")) report["hypothesis_probe"] = probe_fiber(echo["fiber"], job.seed);
    out.exit_code = o.code;
    out.summary = o.summary;
  } catch (const Error& e) {
    bool defect = is_defect(e.kind());
    out.exit_code = defect ? kFails : kError;
    report["status"] = defect ? "fails" : "error";
    report["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}, {"witness", e.witness()}};
    out.summary = std::string(defect ? "defect: " : "error: ") + e.what();
  } catch (const Json::exception& e) {
    out.exit_code = kError;
    report["status"] = "error";
    report["error"] = {{"kind", "ParseError"}, {"message", e.what()}, {"witness", ""}};
    out.summary = std::string("error: ") + e.what();
  } catch (const std::exception& e) {
    out.exit_code = kError;
    report["status"] = "error";
    report["error"] = {{"kind", "Internal"}, {"message", e.what()}, {"witness", ""}};
    out.summary = std::string("error: ") + e.what();
  }
  report["input"] = echo;
  out.report = std::move(report);
  return out;
}

int run_and_write(const JobSpec& job) {
  std::string text;
  if (job.input && *job.input != "-") {
    std::ifstream file(*job.input);
    if (!file) {
      std::cerr << "error: cannot read " << *job.input << "\n";
      return kError;
    }
    text.assign(std::istreambuf_iterator<char>(file), {});
  } else {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  }
  JobResult r = run(job, text);
  std::string dumped = r.report.dump(2) + "\n";
  if (job.output) {
    std::ofstream file(*job.output);
    if (!file) {
      std::cerr << "error: cannot write " << *job.output << "\n";
      return kError;
    }
    file << dumped;
    std::cout << r.summary << "\n";
  } else {
    std::cout << dumped;
    std::cerr << r.summary << "\n";
  }
  return r.exit_code;
}

}  // namespace foliage::cli
