// SPDX-License-Identifier: Apache-2.0
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ncproof/check.hpp"
#include "ncproof/instances.hpp"
#include "ncproof/ordered.hpp"
#include "ncproof/pit.hpp"
#include "ncproof/rank.hpp"
#include "ncproof/translate.hpp"

namespace {

using namespace ncproof;

constexpr int kPositive = 0;
constexpr int kNegative = 1;
constexpr int kMalformed = 2;

// Carries the file name into diagnostics.
struct InputError {
  std::string file;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{path, "cannot open file"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Blanks out '#' comments so reported columns still match the file.
std::string strip_comments(std::string text) {
  bool in_comment = false;
  for (char& c : text) {
    if (c == '\n') {
      in_comment = false;
    } else if (c == '#' || in_comment) {
      in_comment = true;
      c = ' ';
    }
  }
  return text;
}

template <class Fn>
auto with_file(const std::string& path, Fn&& fn) {
  std::string text = read_file(path);
  try {
    return fn(text);
  } catch (const ParseError& e) {
    throw InputError{path, e.what()};
  }
}

Formula read_formula(const std::string& path, const Field& field) {
  return with_file(path, [&](const std::string& text) {
    FormulaSyntax syntax;
    syntax.field = field;
    return parse_formula(strip_comments(text), syntax);
  });
}

Proof read_proof(const std::string& path) {
  return with_file(path, [](const std::string& text) { return parse_proof(text); });
}

std::size_t default_cap() {
  if (const char* env = std::getenv("NCPROOF_EXPAND_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw InvalidArgument("NCPROOF_EXPAND_CAP must be a positive integer");
    }
  }
  return kDefaultExpandCap;
}

pit::Options pit_options(const std::string& backend, std::size_t cap) {
  pit::Options o;
  o.backend = pit::parse_backend(backend);
  o.cap = cap;
  return o;
}

std::uint32_t max_var(const Formula& f) {
  std::uint32_t n = 0;
  for (VarId v : variables(f)) n = std::max(n, v.index);
  return n;
}

struct CommonOptions {
  std::string field = "Q";
  std::string backend = "expand";
  std::size_t cap = 0;

  Field parsed_field() const { return Field::parse(field); }
  pit::Options pit() const { return pit_options(backend, cap == 0 ? default_cap() : cap); }
};

void add_field_option(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--field", common.field, "Coefficient field: Q, GF:<p> or \"GF <p>\"");
}

void add_pit_options(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--backend", common.backend, "Identity test: expand or matrix");
  cmd->add_option("--cap", common.cap, "Expansion term cap (default 1000000 or NCPROOF_EXPAND_CAP)");
}

int run_check(const std::string& path, bool refutation, const CommonOptions& common) {
  Proof proof = read_proof(path);
  CheckOptions options;
  options.refutation = refutation;
  options.pit = common.pit();
  CheckReport report = check(proof, options);
  std::cout << (report.accepted ? "ACCEPTED" : "REJECTED") << "\n";
  std::cout << "system: " << to_string(proof.system) << "\n";
  std::cout << "lines: " << proof.lines.size() << "\n";
  std::cout << "size: " << report.size << "\n";
  if (report.degree) std::cout << "degree: " << *report.degree << "\n";
  std::cout << "refutation: " << (report.refutes ? "yes" : "no") << "\n";
  for (const auto& f : report.failures) {
    std::cout << path << ": line " << f.line << ": " << to_string(f.kind) << ": " << f.reason << "\n";
  }
  if (report.accepted) return kPositive;
  for (const auto& f : report.failures) {
    if (f.kind == FailureKind::Malformed) return kMalformed;
  }
  return kNegative;
}

int run_pit(const std::string& a, const std::string& b, const CommonOptions& common) {
  Field field = common.parsed_field();
  Formula f = read_formula(a, field);
  Formula g = read_formula(b, field);
  bool same = pit::equal(f, g, field, common.pit());
  std::cout << (same ? "EQUAL" : "NOT-EQUAL") << "\n";
  return same ? kPositive : kNegative;
}

int run_canon(const std::string& path, const std::string& order_spec, const CommonOptions& common) {
  Field field = common.parsed_field();
  Formula f = read_formula(path, field);
  std::uint32_t n = max_var(f);
  Order order = Order::parse(order_spec, n);
  if (order.size() < n) throw InvalidArgument("order covers fewer variables than the formula uses");
  auto verdict = ordered::recognize(f, order, field, common.pit());
  if (!verdict.is_ordered()) {
    std::cout << "NOT-ORDERED\n" << verdict.witness->describe() << "\n";
    return kNegative;
  }
  std::cout << to_string(*verdict.canonical) << "\n";
  return kPositive;
}

int run_rank(const std::string& path, int hard, bool csv, bool submatrix, const CommonOptions& common) {
  Field field = common.parsed_field();
  NCPoly f(field);
  Order order;
  if (hard > 0) {
    order = Order::identity(static_cast<std::uint32_t>(2 * hard));
    f = rank::hard_nc_poly(static_cast<std::size_t>(hard), order, field);
  } else {
    if (path.empty()) throw InvalidArgument("rank needs a formula file or --hard <d>");
    if (submatrix) throw InvalidArgument("--submatrix needs --hard <d>");
    f = expand(read_formula(path, field), field, common.pit().cap);
  }
  rank::RankReport report = rank::nisan_bound(f);
  std::vector<std::size_t> sub;
  std::size_t sub_total = 0;
  if (submatrix) {
    for (std::size_t k = 0; k <= report.d; ++k) {
      std::size_t r = rank::rank_of(rank::permutation_submatrix(report.d, k, order, field), field);
      sub.push_back(r);
      sub_total += r;
    }
  }
  if (csv) {
    std::cout << (submatrix ? "k,rank,submatrix\n" : "k,rank\n");
    for (std::size_t k = 0; k <= report.d; ++k) {
      std::cout << k << "," << report.per_k[k];
      if (submatrix) std::cout << "," << sub[k];
      std::cout << "\n";
    }
    return kPositive;
  }
  std::cout << "degree " << report.d << "\n";
  std::cout << (submatrix ? "k rank submatrix\n" : "k rank\n");
  for (std::size_t k = 0; k <= report.d; ++k) {
    std::cout << k << " " << report.per_k[k];
    if (submatrix) std::cout << " " << sub[k];
    std::cout << "\n";
  }
  std::cout << "total " << report.total << "\n";
  if (submatrix) std::cout << "submatrix total " << sub_total << "\n";
  return kPositive;
}

void print_instance(const instances::Instance& inst) {
  for (const auto& note : inst.notes) std::cout << "# " << note << "\n";
  for (const auto& warning : inst.warnings) std::cerr << "warning: " << warning << "\n";
  std::cout << to_string(inst.axiom_file());
}

std::vector<std::int64_t> parse_charges(const std::string& text) {
  std::vector<std::int64_t> out;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    std::istringstream words(tok);
    for (std::string w; words >> w;) {
      try {
        std::size_t used = 0;
        out.push_back(std::stoll(w, &used));
        if (used != w.size()) throw std::invalid_argument(w);
      } catch (const std::exception&) {
        throw InvalidArgument("malformed charge '" + w + "'");
      }
    }
  }
  return out;
}

int write_output(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError{path, "cannot write file"};
  out << text;
  return kPositive;
}

int run_translate(const std::string& from, const std::string& to, const std::string& in_path,
                  const std::string& out_path, const CommonOptions& common) {
  Proof input = read_proof(in_path);
  CheckOptions options;
  options.pit = common.pit();
  translate::Report report;
  if (from == "PCR" && to == "OFPC") {
    report = translate::pcr_to_ofpc(input, options);
  } else if ((from == "FPC" || from == "F-PC") && to == "NFPC") {
    report = translate::fpc_to_nfpc(input, options);
  } else {
    throw InvalidArgument("supported translations: --from PCR --to OFPC, --from FPC --to NFPC");
  }
  write_output(out_path, to_string(report.output));
  std::cout << "lines_in " << input.lines.size() << "\n";
  std::cout << "lines_out " << report.output.lines.size() << "\n";
  std::cout << "size_in " << report.size_in << "\n";
  std::cout << "size_out " << report.size_out << "\n";
  if (report.size_bound) {
    std::cout << "size_bound " << *report.size_bound << " (C=" << translate::kPcrSizeConstant << ", "
              << (report.within_bound() ? "holds" : "VIOLATED") << ")\n";
  }
  return report.within_bound() ? kPositive : kNegative;
}

int run_expand(const std::string& path, const CommonOptions& common) {
  Field field = common.parsed_field();
  std::cout << to_listing(expand(read_formula(path, field), field, common.pit().cap));
  return kPositive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks, translates and measures algebraic proofs over noncommutative and ordered formulas"};
  app.require_subcommand(1);
  CommonOptions common;

  std::string file_a;
  std::string file_b;
  bool refutation = false;
  auto* check_cmd = app.add_subcommand("check", "Verify a proof file");
  check_cmd->add_option("proof", file_a, "Proof file")->required();
  check_cmd->add_flag("--refutation", refutation, "Also require the last line to compute 1");
  add_pit_options(check_cmd, common);

  auto* pit_cmd = app.add_subcommand("pit", "Decide whether two formulas compute the same polynomial");
  pit_cmd->add_option("a", file_a, "First formula file")->required();
  pit_cmd->add_option("b", file_b, "Second formula file")->required();
  add_field_option(pit_cmd, common);
  add_pit_options(pit_cmd, common);

  std::string order_spec = "default";
  auto* canon_cmd = app.add_subcommand("canon", "Rewrite an ordered formula into syntactic ordered form");
  canon_cmd->add_option("formula", file_a, "Formula file")->required();
  canon_cmd->add_option("--order", order_spec, "\"default\" or the position of each variable");
  add_field_option(canon_cmd, common);
  add_pit_options(canon_cmd, common);

  int hard = 0;
  bool csv = false;
  bool submatrix = false;
  auto* rank_cmd = app.add_subcommand("rank", "Prefix/suffix matrix ranks of a homogeneous polynomial");
  rank_cmd->add_option("formula", file_a, "Formula file");
  rank_cmd->add_option("--hard", hard, "Use the product of d pairwise sums instead of a file")->check(CLI::Range(1, 16));
  rank_cmd->add_flag("--csv", csv, "Print k,rank rows");
  rank_cmd->add_flag("--submatrix", submatrix, "Also print the permutation submatrix ranks (needs --hard)");
  add_field_option(rank_cmd, common);
  rank_cmd->add_option("--cap", common.cap, "Expansion term cap");

  std::vector<std::string> gen_args;
  std::uint64_t modulus = 2;
  std::string charges;
  std::uint32_t width = 2;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an axiom file");
  gen_cmd->add_option("family", gen_args,
                      "fphp <m> <n> | fphp-lowdeg <m> <n> | tseitin <graph-file> | subst <axioms-file>")
      ->required();
  gen_cmd->add_option("--p", modulus, "Tseitin modulus");
  gen_cmd->add_option("--charge", charges, "Comma separated vertex charges");
  gen_cmd->add_option("--width", width, "Number of fresh variables summed per variable (subst)");
  add_field_option(gen_cmd, common);

  std::string from;
  std::string to;
  auto* translate_cmd = app.add_subcommand("translate", "Translate a proof between systems");
  translate_cmd->add_option("--from", from, "PCR or FPC")->required();
  translate_cmd->add_option("--to", to, "OFPC or NFPC")->required();
  translate_cmd->add_option("in", file_a, "Input proof file")->required();
  translate_cmd->add_option("out", file_b, "Output proof file")->required();
  add_pit_options(translate_cmd, common);

  auto* expand_cmd = app.add_subcommand("expand", "List the noncommutative polynomial computed by a formula");
  expand_cmd->add_option("formula", file_a, "Formula file")->required();
  expand_cmd->add_option("--cap", common.cap, "Expansion term cap");
  add_field_option(expand_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPositive : kMalformed;
  }

  try {
    if (*check_cmd) return run_check(file_a, refutation, common);
    if (*pit_cmd) return run_pit(file_a, file_b, common);
    if (*canon_cmd) return run_canon(file_a, order_spec, common);
    if (*rank_cmd) return run_rank(file_a, hard, csv, submatrix, common);
    if (*gen_cmd) {
      Field field = common.parsed_field();
      const std::string& family = gen_args.front();
      auto number = [&](std::size_t i) -> std::uint32_t {
        if (gen_args.size() <= i) throw InvalidArgument(family + " needs more arguments");
        return static_cast<std::uint32_t>(std::stoul(gen_args[i]));
      };
      if (family == "fphp" || family == "fphp-lowdeg") {
        if (gen_args.size() != 3) throw InvalidArgument(family + " takes <m> <n>");
        print_instance(family == "fphp" ? instances::gen_fphp(number(1), number(2), field)
                                        : instances::gen_fphp_lowdeg(number(1), number(2), field));
      } else if (family == "tseitin") {
        if (gen_args.size() != 2) throw InvalidArgument("tseitin takes <graph-file>");
        auto graph = with_file(gen_args[1], [](const std::string& text) { return instances::Graph::parse(text); });
        print_instance(instances::gen_tseitin(graph, modulus, parse_charges(charges), field));
      } else if (family == "subst") {
        if (gen_args.size() != 2) throw InvalidArgument("subst takes <axioms-file>");
        Proof axioms = read_proof(gen_args[1]);
        std::vector<CPoly> q;
        for (const auto& input : axioms.inputs) q.push_back(erase_order(expand(input, axioms.field, common.pit().cap)));
        print_instance(instances::gen_subst_instance(q, axioms.nvars, width));
      } else {
        throw InvalidArgument("unknown family '" + family + "'");
      }
      return kPositive;
    }
    if (*translate_cmd) return run_translate(from, to, file_a, file_b, common);
    if (*expand_cmd) return run_expand(file_a, common);
  } catch (const InputError& e) {
    std::cerr << e.file << ": " << e.message << "\n";
    return kMalformed;
  } catch (const ncproof::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  }
  return kMalformed;
}
