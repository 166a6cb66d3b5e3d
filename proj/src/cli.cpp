#include "leibniz/cli.hpp"

#include <chrono>
#include <ostream>

#include <CLI11.hpp>

#include "leibniz/algebra.hpp"
#include "leibniz/equivalence.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/io.hpp"
#include "leibniz/representation.hpp"

namespace leibniz::cli {

namespace {

using io::Format;
using io::json;
using io::Report;

struct Context {
  Format format = Format::text;
  std::uint64_t budget = EquivalenceOptions{}.grid_budget;
  std::size_t max_dim = 8;
  bool timing = false;
  std::string command;
  std::ostream& out;
};

// A result is either a report (verdict + exit code) or a document written to
// a file or stdout.
struct Outcome {
  int code = kPass;
  std::optional<Report> report;
  std::optional<json> document;
  std::string output_path;
};

Report make_report(const Context& ctx, std::string verdict,
                   std::vector<Violation> violations = {}) {
  Report r;
  r.command = ctx.command;
  r.verdict = std::move(verdict);
  r.violations = std::move(violations);
  return r;
}

void enforce_max_dim(const Context& ctx, std::size_t dim, const char* what) {
  if (dim > ctx.max_dim) {
    throw PreconditionError(std::string(what) + " " + std::to_string(dim) +
                            " exceeds --max-dim " + std::to_string(ctx.max_dim));
  }
}

Algebra load_leibniz(const Context& ctx, const std::string& path) {
  auto a = io::parse_algebra(path);
  auto* leib = std::get_if<Algebra>(&a);
  if (leib == nullptr) throw ParseError(path + ": expected a leibniz algebra document");
  enforce_max_dim(ctx, leib->dim(), "algebra dimension");
  return std::move(*leib);
}

template <typename Rep>
Rep load_rep(const Context& ctx, const std::string& path) {
  auto any = io::parse_rep(path);
  auto* rep = std::get_if<Rep>(&any);
  if (rep == nullptr) {
    throw ParseError(path + ": expected a " +
                     std::string(std::is_same_v<Rep, LeibnizRep> ? "leibniz-rep" : "ly-rep") +
                     " document");
  }
  enforce_max_dim(ctx, rep->dim(), "algebra dimension");
  enforce_max_dim(ctx, rep->dim_v, "module dimension");
  return std::move(*rep);
}

Outcome verdict_from(const Context& ctx, const AxiomReport& axioms) {
  Outcome o;
  o.code = axioms.passed() ? kPass : kFail;
  o.report = make_report(ctx, axioms.passed() ? "pass" : "fail", axioms.violations());
  return o;
}

Outcome document(json doc, const std::string& output_path, const Context& ctx) {
  Outcome o;
  o.document = std::move(doc);
  o.output_path = output_path;
  if (!output_path.empty()) {
    o.report = make_report(ctx, "pass");
    o.report->extra["output"] = output_path;
  }
  return o;
}

int emit(const Context& ctx, Outcome outcome, double elapsed_ms) {
  if (outcome.document) {
    if (outcome.output_path.empty()) {
      ctx.out << io::serialize(*outcome.document);
      return outcome.code;
    }
    io::write_document(outcome.output_path, *outcome.document);
  }
  if (outcome.report) {
    if (ctx.timing) outcome.report->timing_ms = elapsed_ms;
    ctx.out << io::emit_report(*outcome.report, ctx.format);
  }
  return outcome.code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Leibniz and Lie-Yamaguti algebras, representations and equivalence"};
  app.name("leibniz-ly");
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  Context ctx{Format::text, EquivalenceOptions{}.grid_budget, 8, false, {}, out};
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--budget", ctx.budget, "Grid-evaluation cap for equiv")->capture_default_str();
  app.add_option("--max-dim", ctx.max_dim, "Reject inputs above this dimension")
      ->capture_default_str();
  app.add_flag("--timing", ctx.timing, "Include wall-clock timing in reports");

  std::string file, file2, output, name;
  std::size_t dim = 0;
  std::uint64_t seed = 0;
  std::size_t max_attempts = 10000;

  auto with_file = [&](const char* cmd, const char* help, const char* arg) {
    auto* sub = app.add_subcommand(cmd, help);
    sub->add_option(arg, file)->required();
    return sub;
  };
  auto* check_leibniz = with_file("check-leibniz", "Check the left Leibniz identity", "FILE");
  auto* check_ly = with_file("check-ly", "Check the Lie-Yamaguti axioms", "FILE");
  auto* to_ly = with_file("to-ly", "Build the associated Lie-Yamaguti algebra", "FILE");
  auto* adjoint = with_file("adjoint", "Build the adjoint representation", "FILE");
  auto* dualize = with_file("dualize", "Build the dual representation", "REPFILE");
  auto* induce = with_file("induce", "Build the induced Lie-Yamaguti representation", "REPFILE");
  auto* check_rep = with_file("check-rep", "Check a Leibniz representation", "REPFILE");
  auto* check_ly_rep = with_file("check-ly-rep", "Check a Lie-Yamaguti representation", "REPFILE");
  auto* classify = with_file("classify", "Classify a representation as (anti)symmetric", "REPFILE");
  for (auto* sub : {to_ly, adjoint, dualize, induce}) sub->add_option("-o,--output", output);

  auto* equiv = app.add_subcommand("equiv", "Decide equivalence of two representations");
  equiv->add_option("REP1", file)->required();
  equiv->add_option("REP2", file2)->required();

  auto* catalog_cmd = app.add_subcommand("catalog", "Write a catalog algebra");
  catalog_cmd->add_option("NAME", name)->required();
  catalog_cmd->add_option("-o,--output", output);

  auto* random_cmd = app.add_subcommand("random", "Sample a random left Leibniz algebra");
  random_cmd->add_option("--dim", dim)->required();
  random_cmd->add_option("--seed", seed)->required();
  random_cmd->add_option("--max-attempts", max_attempts)->capture_default_str();
  random_cmd->add_option("-o,--output", output);

  std::vector<std::string> argv_store{"leibniz-ly"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  ctx.format = format == "json" ? Format::json : Format::text;
  for (std::size_t k = 0; k < args.size(); ++k) ctx.command += (k ? " " : "") + args[k];

  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome outcome;
    if (*check_leibniz) {
      outcome = verdict_from(ctx, check_left_leibniz(load_leibniz(ctx, file)));
    } else if (*check_ly) {
      auto a = io::parse_algebra(file);
      auto* ly = std::get_if<LYAlgebra>(&a);
      if (ly == nullptr) throw ParseError(file + ": expected an ly algebra document");
      enforce_max_dim(ctx, ly->dim(), "algebra dimension");
      outcome = verdict_from(ctx, leibniz::check_ly(*ly));
    } else if (*to_ly) {
      try {
        outcome = document(io::to_json(leibniz_to_ly(load_leibniz(ctx, file))), output, ctx);
      } catch (const NotLeibnizError& e) {
        outcome = verdict_from(ctx, e.report());
      }
    } else if (*adjoint) {
      auto a = io::parse_algebra(file);
      if (auto* leib = std::get_if<Algebra>(&a)) {
        enforce_max_dim(ctx, leib->dim(), "algebra dimension");
        try {
          outcome = document(io::to_json(adjoint_rep(*leib)), output, ctx);
        } catch (const NotLeibnizError& e) {
          outcome = verdict_from(ctx, e.report());
        }
      } else {
        const auto& ly = std::get<LYAlgebra>(a);
        enforce_max_dim(ctx, ly.dim(), "algebra dimension");
        const AxiomReport axioms = leibniz::check_ly(ly);
        outcome = axioms.passed() ? document(io::to_json(ly_adjoint_rep(ly)), output, ctx)
                                  : verdict_from(ctx, axioms);
      }
    } else if (*dualize || *induce) {
      const auto rep = load_rep<LeibnizRep>(ctx, file);
      try {
        outcome = *dualize ? document(io::to_json(dual_rep(rep)), output, ctx)
                           : document(io::to_json(induce_ly_rep(rep)), output, ctx);
      } catch (const NotRepresentationError& e) {
        outcome = verdict_from(ctx, e.report());
      } catch (const NotLeibnizError& e) {
        outcome = verdict_from(ctx, e.report());
      }
    } else if (*check_rep) {
      const auto rep = load_rep<LeibnizRep>(ctx, file);
      AxiomReport axioms = check_left_leibniz(rep.algebra);
      axioms.merge(check_leibniz_rep(rep));
      outcome = verdict_from(ctx, axioms);
    } else if (*check_ly_rep) {
      outcome = verdict_from(ctx, leibniz::check_ly_rep(load_rep<LYRep>(ctx, file)));
    } else if (*classify) {
      const auto rep = load_rep<LeibnizRep>(ctx, file);
      outcome.report = make_report(ctx, std::string(to_string(classify_symmetry(rep))));
    } else if (*equiv) {
      auto any1 = io::parse_rep(file);
      auto any2 = io::parse_rep(file2);
      if (any1.index() != any2.index()) {
        throw ParseError("equiv: both files must hold the same kind of representation");
      }
      EquivalenceOptions options;
      options.grid_budget = ctx.budget;
      EquivalenceVerdict verdict;
      std::size_t space_dim = 0;
      if (const auto* r1 = std::get_if<LeibnizRep>(&any1)) {
        const auto& r2 = std::get<LeibnizRep>(any2);
        for (const auto* r : {r1, &r2}) {
          enforce_max_dim(ctx, r->dim(), "algebra dimension");
          enforce_max_dim(ctx, r->dim_v, "module dimension");
        }
        verdict = decide_equivalence_leibniz(*r1, r2, options);
        space_dim = intertwiner_space_leibniz(*r1, r2).dimension();
      } else {
        const auto& r1l = std::get<LYRep>(any1);
        const auto& r2l = std::get<LYRep>(any2);
        for (const auto* r : {&r1l, &r2l}) {
          enforce_max_dim(ctx, r->dim(), "algebra dimension");
          enforce_max_dim(ctx, r->dim_v, "module dimension");
        }
        verdict = decide_equivalence_ly(r1l, r2l, options);
        space_dim = intertwiner_space_ly(r1l, r2l).dimension();
      }
      Report report = make_report(ctx, std::string(to_string(verdict.status)));
      report.witness = verdict.witness;
      report.note = verdict.note;
      report.extra["intertwiner_dim"] = space_dim;
      outcome.report = std::move(report);
      outcome.code = verdict.status == Equivalence::equivalent       ? kPass
                     : verdict.status == Equivalence::not_equivalent ? kFail
                                                                     : kInconclusive;
    } else if (*catalog_cmd) {
      Algebra a = leibniz::catalog(name);
      enforce_max_dim(ctx, a.dim(), "algebra dimension");
      outcome = document(io::to_json(a), output, ctx);
    } else if (*random_cmd) {
      enforce_max_dim(ctx, dim, "algebra dimension");
      auto a = random_leibniz(dim, seed, max_attempts);
      if (a) {
        outcome = document(io::to_json(*a), output, ctx);
      } else {
        outcome.code = kFail;
        outcome.report = make_report(ctx, "fail");
        outcome.report->note = "no left Leibniz draw within " + std::to_string(max_attempts) +
                               " attempts";
      }
    }
    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return emit(ctx, std::move(outcome), elapsed);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace leibniz::cli
