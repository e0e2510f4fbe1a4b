#include "cli.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "pigeon/checker.hpp"
#include "pigeon/counts.hpp"
#include "pigeon/dimacs.hpp"
#include "pigeon/drat_io.hpp"
#include "pigeon/encodings.hpp"
#include "pigeon/proof_cook.hpp"
#include "pigeon/proof_ours.hpp"

namespace pigeon::cli {
namespace {

enum class Style { kOurs, kCook };
enum class Encoding { kStandard, kAmo };

const std::map<std::string, Style> kStyles{{"ours", Style::kOurs}, {"cook", Style::kCook}};
const std::map<std::string, Encoding> kEncodings{{"standard", Encoding::kStandard},
                                                 {"amo", Encoding::kAmo}};

std::string style_name(Style s) { return s == Style::kOurs ? "ours" : "cook"; }

// Runs `write` against `fallback` when `path` is empty or "-", else against
// a freshly created file.
void with_output(const std::string& path, std::ostream& fallback,
                 const std::function<void(std::ostream&)>& write) {
  if (path.empty() || path == "-") {
    write(fallback);
    fallback.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  write(file);
  file.flush();
  if (!file) throw std::runtime_error("error while writing " + path);
}

void generate(Style style, int n, const GenerateOptions& opts, ProofSink& sink) {
  if (style == Style::kOurs)
    generate_ours(n, opts, sink);
  else
    generate_cook(n, opts, sink);
}

std::int64_t closed_form(Style style, int n) {
  return style == Style::kOurs ? count_ours(n) : count_cook(n);
}

void write_standard_dimacs(std::ostream& os, int n) {
  const auto layout = input_layout(n);
  const std::int64_t clauses =
      (n + 1) + static_cast<std::int64_t>(n) * (n + 1) * n / 2;
  std::string buf = "p cnf " + std::to_string(layout.last_id()) + " " +
                    std::to_string(clauses) + "\n";
  standard_clauses(n, [&](std::span<const Literal> c) {
    append_clause_line(buf, c);
    if (buf.size() >= (1u << 16)) {
      os << buf;
      buf.clear();
    }
  });
  os << buf;
}

struct BenchResult {
  int n = 0;
  Style style = Style::kOurs;
  Verdict verdict;
  double seconds = 0;
};

BenchResult verify_one(int n, Style style) {
  BenchResult r{n, style, {}, 0};
  const auto formula = php_standard(n);
  ProofCollector collector;
  generate(style, n, {}, collector);
  const auto start = std::chrono::steady_clock::now();
  r.verdict = verify(formula, collector.proof());
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<BenchResult> verify_all(const std::vector<std::pair<int, Style>>& jobs,
                                    unsigned threads) {
  std::vector<BenchResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++)
      results[i] = verify_one(jobs[i].first, jobs[i].second);
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  return results;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pigeonhole DRAT proof generator, checker and clause counter", "pigeon"};
  app.require_subcommand(1);

  int n = 0;
  std::string output;

  auto* gen_cnf = app.add_subcommand("gen-cnf", "Write PHP(n) as DIMACS CNF");
  Encoding encoding = Encoding::kStandard;
  gen_cnf->add_option("n", n, "Number of holes")->required()->check(CLI::Range(1, kMaxPigeonN));
  gen_cnf->add_option("--encoding", encoding, "standard | amo")
      ->transform(CLI::CheckedTransformer(kEncodings, CLI::ignore_case));
  gen_cnf->add_option("-o,--output", output, "Output path (default: stdout)");

  auto* gen_proof = app.add_subcommand("gen-proof", "Write a DRAT refutation of PHP(n)");
  Style style = Style::kOurs;
  bool deletions = false;
  gen_proof->add_option("n", n, "Number of holes")->required()->check(CLI::Range(2, kMaxPigeonN));
  gen_proof->add_option("--style", style, "ours | cook")
      ->transform(CLI::CheckedTransformer(kStyles, CLI::ignore_case));
  gen_proof->add_flag("--deletions", deletions, "Delete each layer once it is no longer needed");
  gen_proof->add_option("-o,--output", output, "Output path (default: stdout)");

  auto* check = app.add_subcommand("check", "Verify a DRAT proof against a CNF formula");
  std::string cnf_path, proof_path;
  bool strict = false;
  check->add_option("cnf", cnf_path, "DIMACS CNF file")->required();
  check->add_option("proof", proof_path, "DRAT proof file")->required();
  check->add_flag("--strict-deletions", strict, "Reject deletions of absent clauses");

  auto* count = app.add_subcommand("count", "Print the exact number of added clauses");
  bool breakdown = false;
  count->add_option("n", n, "Number of holes")->required()->check(CLI::Range(std::int64_t{2}, kMaxCountN));
  count->add_option("--style", style, "ours | cook")
      ->transform(CLI::CheckedTransformer(kStyles, CLI::ignore_case));
  count->add_flag("--breakdown", breakdown, "Also print the per-iteration counts");

  auto* bench = app.add_subcommand("bench", "Tabulate proof lengths for n = 2..n_max as CSV");
  int n_max = 0;
  int verify_up_to = 0;
  unsigned jobs = 1;
  bool use_closed_form = false;
  std::vector<std::string> style_names{"ours", "cook"};
  bench->add_option("n_max", n_max, "Largest n")->required()->check(CLI::Range(2, kMaxPigeonN));
  bench->add_option("--styles", style_names, "Comma-separated styles")
      ->delimiter(',')
      ->check(CLI::IsMember({"ours", "cook"}));
  bench->add_option("--verify-up-to", verify_up_to, "Also verify each proof with n <= this")
      ->check(CLI::Range(0, kMaxPigeonN));
  bench->add_option("-j,--jobs", jobs, "Parallel verification jobs")->check(CLI::Range(1u, 256u));
  bench->add_flag("--closed-form", use_closed_form,
                  "Take counts from the closed forms instead of generating the proofs");
  bench->add_option("-o,--output", output, "CSV path (default: stdout)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      auto subs = app.get_subcommands();
      out << (subs.empty() ? app.help() : subs.front()->help());
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*gen_cnf) {
      with_output(output, out, [&](std::ostream& os) {
        if (encoding == Encoding::kStandard)
          write_standard_dimacs(os, n);
        else
          write_dimacs(os, php_amo(n));
      });
      return kExitOk;
    }

    if (*gen_proof) {
      with_output(output, out, [&](std::ostream& os) {
        DratWriter writer(os);
        generate(style, n, {deletions}, writer);
      });
      return kExitOk;
    }

    if (*check) {
      std::ifstream cnf_file(cnf_path);
      if (!cnf_file) throw std::runtime_error("cannot open " + cnf_path);
      std::ifstream proof_file(proof_path);
      if (!proof_file) throw std::runtime_error("cannot open " + proof_path);

      std::vector<std::string> warnings;
      const auto formula = parse_dimacs(cnf_file, &warnings);
      for (const auto& w : warnings) err << "warning: " << cnf_path << ": " << w << "\n";

      const auto start = std::chrono::steady_clock::now();
      DratChecker checker(formula, {strict});
      DratReader reader(proof_file);
      std::optional<Verdict> verdict;
      while (!verdict) {
        auto line = reader.next();
        if (!line) break;
        verdict = checker.step(*line);
      }
      if (!verdict) verdict = checker.finish();
      const double seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

      for (const auto& w : verdict->warnings) err << "warning: " << w << "\n";
      out << describe(*verdict) << "\n";
      err << "checked " << checker.lines_processed() << " proof lines in " << std::fixed
          << std::setprecision(3) << seconds << " s\n";
      return verdict->accepted() ? kExitOk : kExitFailed;
    }

    if (*count) {
      const auto b = style == Style::kOurs ? count_ours_breakdown(n) : count_cook_breakdown(n);
      const auto total = closed_form(style, n);
      if (b.total != total)
        throw std::logic_error("closed form and per-iteration sum disagree");
      if (breakdown) {
        const char* middle = style == Style::kOurs ? "group" : "pair";
        for (const auto& it : b.per_iteration)
          out << "k=" << it.k << " definitions=" << it.definitions << " " << middle << "="
              << it.group_or_pair << " alo=" << it.alo << " subtotal=" << it.total() << "\n";
        out << "empty=1\n";
        out << "total=" << total << "\n";
      } else {
        out << total << "\n";
      }
      return kExitOk;
    }

    if (*bench) {
      std::vector<Style> styles;
      for (const auto& name : style_names) {
        auto s = kStyles.at(name);
        if (std::find(styles.begin(), styles.end(), s) == styles.end()) styles.push_back(s);
      }

      std::ostringstream csv;
      csv << "n";
      for (auto s : styles) csv << "," << style_name(s);
      csv << "\n";
      for (int size = 2; size <= n_max; ++size) {
        csv << size;
        for (auto s : styles) {
          std::int64_t added = closed_form(s, size);
          if (!use_closed_form) {
            LineCounter counter;
            generate(s, size, {}, counter);
            if (static_cast<std::int64_t>(counter.added()) != added)
              throw std::logic_error("generated " + std::to_string(counter.added()) +
                                     " clauses for " + style_name(s) + " n=" +
                                     std::to_string(size) + ", expected " +
                                     std::to_string(added));
          }
          csv << "," << added;
        }
        csv << "\n";
      }
      with_output(output, out, [&](std::ostream& os) { os << csv.str(); });

      std::vector<std::pair<int, Style>> work;
      for (int size = 2; size <= std::min(verify_up_to, n_max); ++size)
        for (auto s : styles) work.emplace_back(size, s);
      bool all_accepted = true;
      for (const auto& r : verify_all(work, jobs)) {
        err << "verify n=" << r.n << " style=" << style_name(r.style) << " "
            << to_string(r.verdict.status) << " " << std::fixed << std::setprecision(3)
            << r.seconds << " s\n";
        all_accepted = all_accepted && r.verdict.accepted();
      }
      return all_accepted ? kExitOk : kExitFailed;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pigeon::cli
