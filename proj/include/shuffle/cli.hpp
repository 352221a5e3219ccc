#pragma once

// Command-line front end. `run` takes the arguments after the program name
// and writes to the supplied streams so it can be driven from tests.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 instance too large.

#include <algorithm>
#include <cstdint>
#include <ctime>
#include <iomanip>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "shuffle/core.hpp"
#include "shuffle/formulas.hpp"
#include "shuffle/oracle.hpp"
#include "shuffle/treegraph.hpp"

namespace shuffle::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kTooLarge = 3,
};

class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class OutputFormat { DecimalLines, BinaryLines, JsonLines, Dot, JsonTree, Csv };
enum class Order { Emit, Sorted };
enum class OracleChoice { Scan, Lex, Both };

struct BenchRecord {
  unsigned zeros{0};
  unsigned ones{0};
  unsigned repeat_index{0};
  double elapsed_cpu_seconds{0.0};
  std::uint64_t emitted_count{0};
};

inline constexpr unsigned kBenchMaxSize = 16;

// Sizes are parsed as signed so negatives are reported as usage errors
// instead of wrapping.
struct SizeArgs {
  long long zeros{-1};
  long long ones{-1};

  ShuffleSpec spec() const {
    if (zeros < 0 || ones < 0) throw usage_error("--zeros and --ones must be non-negative");
    if (zeros > kMaxWidth || ones > kMaxWidth) {
      throw instance_too_large("instance too large: zeros + ones exceeds 64 bits");
    }
    ShuffleSpec s{static_cast<unsigned>(zeros), static_cast<unsigned>(ones)};
    s.require_fits();
    return s;
  }
};

inline nlohmann::ordered_json event_record(const EnumerationEvent& e, unsigned width) {
  nlohmann::ordered_json rec;
  rec["index"] = e.index;
  rec["value"] = e.value.value;
  rec["binary"] = to_binary(e.value.value, width);
  if (e.parent_index) rec["parent_index"] = *e.parent_index;
  rec["edge"] = to_string(e.edge);
  if (e.subtrahend_used) rec["subtrahend"] = e.subtrahend_used->value;
  rec["shift_count"] = e.shift_count;
  rec["subtract_count"] = e.subtract_count;
  return rec;
}

inline void write_event(std::ostream& out, const EnumerationEvent& e, unsigned width,
                        OutputFormat format) {
  switch (format) {
    case OutputFormat::DecimalLines:
      out << e.value.value << '\n';
      break;
    case OutputFormat::BinaryLines:
      out << to_binary(e.value.value, width) << '\n';
      break;
    case OutputFormat::JsonLines:
      out << event_record(e, width).dump() << '\n';
      break;
    case OutputFormat::Csv:
      out << e.index << ',' << e.value.value << ',' << to_binary(e.value.value, width) << ',';
      if (e.parent_index) out << *e.parent_index;
      out << ',' << to_string(e.edge) << ',';
      if (e.subtrahend_used) out << e.subtrahend_used->value;
      out << ',' << e.shift_count << ',' << e.subtract_count << '\n';
      break;
    default:
      throw usage_error("format not supported for enumerate");
  }
}

inline int cmd_enumerate(const ShuffleSpec& spec, OutputFormat format, Order order,
                         std::ostream& out) {
  const unsigned width = spec.width();
  if (format == OutputFormat::Csv) {
    out << "index,value,binary,parent_index,edge,subtrahend,shift_count,subtract_count\n";
  }
  if (order == Order::Emit) {
    enumerate(spec, [&](const EnumerationEvent& e) { write_event(out, e, width, format); });
  } else {
    std::vector<EnumerationEvent> events;
    enumerate(spec, [&](const EnumerationEvent& e) { events.push_back(e); });
    std::ranges::sort(events, {}, [](const EnumerationEvent& e) { return e.value; });
    for (const auto& e : events) write_event(out, e, width, format);
  }
  return kSuccess;
}

inline void print_values(std::ostream& out, const char* label, const std::vector<Bitmask>& values) {
  if (values.empty()) return;
  out << "  " << label << ":";
  for (const auto& v : values) out << ' ' << v.value;
  out << '\n';
}

inline bool report(std::ostream& out, const char* oracle_name,
                   const oracle::VerificationReport& r) {
  out << "oracle " << oracle_name << ": " << (r.passed ? "PASS" : "FAIL") << " (algorithm "
      << r.algorithm_count << ", oracle " << r.oracle_count << ")\n";
  print_values(out, "missing", r.missing);
  print_values(out, "extra", r.extra);
  print_values(out, "duplicates", r.duplicates);
  return r.passed;
}

inline int cmd_verify(const ShuffleSpec& spec, OracleChoice choice, bool check_swap,
                      std::ostream& out) {
  bool ok = true;
  std::uint64_t count = 0;
  if (choice == OracleChoice::Scan || choice == OracleChoice::Both) {
    const auto r = oracle::verify_against_oracle(spec);
    ok = report(out, "scan", r) && ok;
    count = r.algorithm_count;
  }
  if (choice == OracleChoice::Lex || choice == OracleChoice::Both) {
    const auto r = oracle::verify_against_lex(spec);
    ok = report(out, "lex", r) && ok;
    count = r.algorithm_count;
  }
  if (check_swap) {
    const bool swap_ok = oracle::verify_swap_isomorphism(spec);
    out << "swap isomorphism: " << (swap_ok ? "PASS" : "FAIL") << '\n';
    ok = ok && swap_ok;
  }
  out << (ok ? "PASS" : "FAIL") << ", " << count << (count == 1 ? " permutation" : " permutations")
      << " (zeros=" << spec.zeros << ", ones=" << spec.ones << ")\n";
  return ok ? kSuccess : kVerificationFailed;
}

inline int cmd_tree(const ShuffleSpec& spec, OutputFormat format, std::ostream& out) {
  const auto tree = treegraph::build_tree(spec);
  if (format == OutputFormat::Dot) {
    out << treegraph::export_dot(tree);
  } else if (format == OutputFormat::JsonTree) {
    out << treegraph::export_json(tree);
  } else {
    throw usage_error("tree supports --format dot or json-tree");
  }
  return kSuccess;
}

inline int cmd_count(std::uint64_t x, std::uint64_t y, std::ostream& out) {
  out << formulas::shuffle_count(x, y) << '\n';
  return kSuccess;
}

inline int cmd_storage(std::uint64_t x, std::uint64_t y, std::ostream& out) {
  if (x + y == 0) throw usage_error("storage needs at least one element (x + y >= 1)");
  out << formulas::storage_bytes(x, y) << '\n';
  return kSuccess;
}

inline constexpr ShuffleSpec kTicTacToe{4, 5};

/// Rows of a 3x3 board; the most significant of the 9 bits is the top-left
/// cell, row-major. 1 is X, 0 is O.
inline std::vector<std::string> render_board(Bitmask board) {
  std::vector<std::string> rows(3, std::string(3, 'O'));
  for (unsigned cell = 0; cell < 9; ++cell) {
    if ((board.value >> (8 - cell)) & 1U) rows[cell / 3][cell % 3] = 'X';
  }
  return rows;
}

inline int cmd_tictactoe(bool render, std::ostream& out) {
  enumerate(kTicTacToe, [&](const EnumerationEvent& e) {
    if (!render) {
      out << to_binary(e.value.value, kTicTacToe.width()) << '\n';
      return;
    }
    if (e.index > 0) out << '\n';
    for (const auto& row : render_board(e.value)) out << row << '\n';
  });
  return kSuccess;
}

inline std::vector<BenchRecord> run_bench(unsigned max_size, unsigned repeats) {
  if (max_size > kBenchMaxSize) {
    throw usage_error("--max must be at most " + std::to_string(kBenchMaxSize));
  }
  std::vector<BenchRecord> records;
  for (unsigned n = 1; n <= max_size; ++n) {
    for (unsigned r = 0; r < repeats; ++r) {
      CountingVisitor counter;
      const std::clock_t start = std::clock();
      enumerate(ShuffleSpec{n, n}, counter);
      const std::clock_t stop = std::clock();
      records.push_back({n, n, r, static_cast<double>(stop - start) / CLOCKS_PER_SEC, counter.count});
    }
  }
  return records;
}

inline int cmd_bench(unsigned max_size, unsigned repeats, std::ostream& out) {
  const auto records = run_bench(max_size, repeats);
  out << "zeros,ones,repeat,cpu_seconds,count\n";
  for (const auto& r : records) {
    out << r.zeros << ',' << r.ones << ',' << r.repeat_index << ',' << std::fixed
        << std::setprecision(6) << r.elapsed_cpu_seconds << ',' << r.emitted_count << '\n';
  }
  return kSuccess;
}

inline void add_size_options(CLI::App& cmd, SizeArgs& sizes) {
  cmd.add_option("-a,--zeros", sizes.zeros, "Size of the set encoded as 0 bits")->required();
  cmd.add_option("-b,--ones", sizes.ones, "Size of the set encoded as 1 bits")->required();
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate the shuffle product of two homogeneous sets", "shuffle"};
  app.require_subcommand(1);

  const std::map<std::string, OutputFormat> line_formats{
      {"decimal-lines", OutputFormat::DecimalLines},
      {"binary-lines", OutputFormat::BinaryLines},
      {"json-lines", OutputFormat::JsonLines},
      {"csv", OutputFormat::Csv}};
  const std::map<std::string, OutputFormat> tree_formats{{"dot", OutputFormat::Dot},
                                                         {"json-tree", OutputFormat::JsonTree}};

  SizeArgs sizes;
  OutputFormat format = OutputFormat::DecimalLines;
  OutputFormat tree_format = OutputFormat::Dot;
  Order order = Order::Emit;
  OracleChoice oracle_choice = OracleChoice::Scan;
  bool check_swap = false;
  bool render = false;
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  unsigned max_size = 11;
  unsigned repeats = 3;
  std::string bench_format = "csv";

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Stream every permutation");
  add_size_options(*enumerate_cmd, sizes);
  enumerate_cmd->add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(line_formats, CLI::ignore_case));
  enumerate_cmd->add_option("--order", order, "emit (traversal order) or sorted")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Order>{{"emit", Order::Emit}, {"sorted", Order::Sorted}},
          CLI::ignore_case));

  auto* verify_cmd = app.add_subcommand("verify", "Check the enumeration against brute force");
  add_size_options(*verify_cmd, sizes);
  verify_cmd->add_option("--oracle", oracle_choice, "scan, lex or both")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OracleChoice>{{"scan", OracleChoice::Scan},
                                              {"lex", OracleChoice::Lex},
                                              {"both", OracleChoice::Both}},
          CLI::ignore_case));
  verify_cmd->add_flag("--check-swap", check_swap, "Also check the swapped-input isomorphism");

  auto* tree_cmd = app.add_subcommand("tree", "Export the traversal tree");
  add_size_options(*tree_cmd, sizes);
  tree_cmd->add_option("--format", tree_format, "dot or json-tree")
      ->transform(CLI::CheckedTransformer(tree_formats, CLI::ignore_case));

  auto* count_cmd = app.add_subcommand("count", "Exact size of the shuffle product");
  count_cmd->add_option("x", x, "First set size")->required();
  count_cmd->add_option("y", y, "Second set size")->required();

  auto* storage_cmd = app.add_subcommand("storage", "Bytes needed to store every permutation");
  storage_cmd->add_option("x", x, "First set size")->required();
  storage_cmd->add_option("y", y, "Second set size")->required();

  auto* ttt_cmd = app.add_subcommand("tictactoe", "All 126 full Tic-Tac-Toe boards (5 X, 4 O)");
  ttt_cmd->add_flag("--render", render, "Draw each board as a 3x3 grid");

  auto* bench_cmd = app.add_subcommand("bench", "CPU time of symmetric enumerations");
  bench_cmd->add_option("--max", max_size, "Largest symmetric set size (<= 16)");
  bench_cmd->add_option("--repeats", repeats, "Runs per size");
  bench_cmd->add_option("--format", bench_format, "Output format")->check(CLI::IsMember({"csv"}));

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  }

  try {
    if (*enumerate_cmd) return cmd_enumerate(sizes.spec(), format, order, out);
    if (*verify_cmd) return cmd_verify(sizes.spec(), oracle_choice, check_swap, out);
    if (*tree_cmd) return cmd_tree(sizes.spec(), tree_format, out);
    if (*count_cmd) return cmd_count(x, y, out);
    if (*storage_cmd) return cmd_storage(x, y, out);
    if (*ttt_cmd) return cmd_tictactoe(render, out);
    if (*bench_cmd) return cmd_bench(max_size, repeats, out);
  } catch (const instance_too_large& e) {
    err << "error: " << e.what() << '\n';
    return kTooLarge;
  } catch (const oracle::oracle_too_large& e) {
    err << "error: " << e.what() << '\n';
    return kTooLarge;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace shuffle::cli
