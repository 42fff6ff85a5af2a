/*
   Copyright 2026 The acfqe authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cctype>
#include <fstream>
#include <iostream>
#include <utility>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "acfqe/chevalley.hpp"
#include "acfqe/errors.hpp"
#include "acfqe/oracle.hpp"
#include "acfqe/parser.hpp"
#include "acfqe/qe.hpp"

namespace {

using namespace acfqe;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitParseError = 2;
constexpr int kExitResource = 3;
constexpr int kExitInconclusive = 4;

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string word;
  for (char c : text) {
    if (c == ',') {
      if (!word.empty()) out.push_back(std::exchange(word, {}));
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      word += c;
    }
  }
  if (!word.empty()) out.push_back(word);
  return out;
}

struct Options {
  std::string base = "z";
  std::string params;
  std::string formula_text;
  std::string file;
  std::string formula_rhs;  // verify only
  bool verify = false;
  std::string output = "pieces";
  std::string primes_csv;
  OracleConfig oracle;
  QeLimits limits;

  void finish() {
    if (!primes_csv.empty()) {
      oracle.primes.clear();
      for (const auto& w : split_csv(primes_csv)) {
        try {
          oracle.primes.push_back(std::stoull(w));
        } catch (const std::exception&) {
          throw UsageError("invalid prime '" + w + "' in --primes");
        }
      }
    }
  }
};

BaseDomain parse_base(const std::string& text) {
  if (text == "z") return BaseDomain::integers();
  if (text == "q") return BaseDomain::rationals();
  if (text.rfind("fp:", 0) == 0) {
    try {
      return BaseDomain::prime_field(std::stoull(text.substr(3)));
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception&) {
      throw UsageError("invalid prime in --base '" + text + "'");
    }
  }
  throw UsageError("--base must be z, q or fp:<prime>");
}

VarTablePtr make_param_table(const std::string& params) {
  std::vector<VarTable::Entry> entries;
  for (const auto& name : split_csv(params)) entries.push_back({name, VarTable::Kind::Parameter});
  return VarTable::create(std::move(entries));
}

std::string read_input(const Options& opt) {
  if (!opt.file.empty()) {
    std::ifstream in(opt.file);
    if (!in) throw UsageError("cannot open '" + opt.file + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return opt.formula_text;
}

void print_dnf(const CanonicalDNF& dnf, const std::string& mode) {
  if (mode == "canonical") {
    std::cout << dnf.to_formula().render() << "\n";
    return;
  }
  if (dnf.pieces().empty()) {
    std::cout << "empty\n";
    return;
  }
  for (const auto& piece : dnf.pieces()) {
    std::cout << "piece: open: " << (piece.open.is_one() ? "-" : piece.open.render())
              << " closed: ";
    if (piece.closed.empty()) {
      std::cout << "-";
    } else {
      for (std::size_t i = 0; i < piece.closed.size(); ++i) {
        if (i > 0) std::cout << "; ";
        std::cout << piece.closed[i].render();
      }
    }
    std::cout << "\n";
  }
}

int verdict_exit(const Report& report) {
  switch (report.verdict) {
    case Verdict::Pass:
      return kExitOk;
    case Verdict::Fail:
      return kExitVerifyFail;
    case Verdict::Inconclusive:
      return kExitInconclusive;
  }
  return kExitInconclusive;
}

int cmd_qe(Options& opt) {
  opt.finish();
  const BaseDomain base = parse_base(opt.base);
  ParsedFormula parsed = parse_formula(read_input(opt), make_param_table(opt.params), base);
  QeResult result = eliminate_all(parsed.formula, base, parsed.table, opt.limits);
  print_dnf(result.dnf, opt.output);
  if (!opt.verify) return kExitOk;
  Report report = equiv_check(parsed.formula, result.formula(), base, result.table, opt.oracle);
  if (report.verdict != Verdict::Pass) {
    std::cerr << report.render(result.table);
    return verdict_exit(report);
  }
  return kExitOk;
}

int cmd_image(Options& opt) {
  opt.finish();
  Presentation presentation = Presentation::parse(read_input(opt));
  ConstructibleSet image = chevalley_image(presentation, opt.limits);
  print_dnf(image.dnf(), opt.output);
  if (!opt.verify) return kExitOk;
  Report report = equiv_check(image_formula(presentation), image.to_formula(),
                              presentation.base(), image.dnf().table(), opt.oracle);
  if (report.verdict != Verdict::Pass) {
    std::cerr << report.render(image.dnf().table());
    return verdict_exit(report);
  }
  return kExitOk;
}

int cmd_verify(Options& opt) {
  opt.finish();
  const BaseDomain base = parse_base(opt.base);
  ParsedFormula lhs = parse_formula(opt.formula_text, make_param_table(opt.params), base);
  ParsedFormula rhs = parse_formula(opt.formula_rhs, lhs.table, base);
  Report report = equiv_check(lhs.formula, rhs.formula, base, rhs.table, opt.oracle);
  std::cout << report.render(rhs.table);
  return verdict_exit(report);
}

void add_common_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--base", opt.base, "coefficient base: z, q or fp:<prime>")
      ->default_val("z");
  cmd->add_option("--params", opt.params, "comma-separated parameter names of the ring");
  cmd->add_option("--primes", opt.primes_csv, "comma-separated oracle primes");
  cmd->add_option("--ext", opt.oracle.base_ext, "max base-field extension degree for points");
  cmd->add_option("--witness-cap", opt.oracle.witness_cap,
                  "max total extension degree for witness search");
  cmd->add_option("--sample-cap", opt.oracle.sample_cap, "max points per field");
  cmd->add_option("--seed", opt.oracle.seed, "sampling seed");
  cmd->add_option("--max-pieces", opt.limits.max_pieces, "cap on normal-form pieces");
  cmd->add_option("--max-degree", opt.limits.max_degree, "cap on piece polynomial degree");
  cmd->add_option("--output", opt.output, "output mode")
      ->check(CLI::IsMember({"pieces", "canonical"}))
      ->default_val("pieces");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantifier elimination and constructible images over algebraically closed fields"};
  app.require_subcommand(1);

  Options qe_opt, image_opt, verify_opt;

  CLI::App* qe = app.add_subcommand("qe", "eliminate quantifiers from a formula");
  add_common_flags(qe, qe_opt);
  qe->add_flag("--verify", qe_opt.verify, "check input and output against the oracle");
  qe->add_option("formula", qe_opt.formula_text, "formula text");
  qe->add_option("--file", qe_opt.file, "read the formula from a file");

  CLI::App* image = app.add_subcommand("image", "constructible image of a presentation");
  add_common_flags(image, image_opt);
  image->add_flag("--verify", image_opt.verify, "check the image against the oracle");
  image->add_option("file", image_opt.file, "presentation file")->required();

  CLI::App* verify = app.add_subcommand("verify", "compare two formulas over sampled points");
  add_common_flags(verify, verify_opt);
  verify->add_option("lhs", verify_opt.formula_text, "first formula")->required();
  verify->add_option("rhs", verify_opt.formula_rhs, "second formula")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParseError;
  }

  try {
    if (qe->parsed()) {
      if (qe_opt.formula_text.empty() == qe_opt.file.empty()) {
        std::cerr << "qe: provide a formula string or --file (exactly one)\n";
        return kExitParseError;
      }
      return cmd_qe(qe_opt);
    }
    if (image->parsed()) return cmd_image(image_opt);
    if (verify->parsed()) return cmd_verify(verify_opt);
  } catch (const acfqe::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const acfqe::ResourceError& e) {
    std::cerr << "resource limit (" << e.cap() << "): " << e.what() << "\n";
    return kExitResource;
  } catch (const acfqe::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const acfqe::EvalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  }
  return kExitParseError;
}
