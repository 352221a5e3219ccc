// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <bit>
#include <ctime>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "dot_grammar.hpp"
#include "shuffle/shuffle.hpp"

namespace {

using shuffle::Bitmask;
using shuffle::EdgeKind;
using shuffle::EnumerationEvent;
using shuffle::ShuffleSpec;
namespace oracle = shuffle::oracle;
namespace tg = shuffle::treegraph;
namespace formulas = shuffle::formulas;

struct Check {
  bool ok{true};
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) detail << what;
    ok = ok && condition;
  }
};

std::vector<EnumerationEvent> events_of(const ShuffleSpec& spec) {
  std::vector<EnumerationEvent> out;
  shuffle::enumerate(spec, [&](const EnumerationEvent& e) { out.push_back(e); });
  return out;
}

double cpu_seconds(const std::function<void()>& body) {
  const std::clock_t start = std::clock();
  body();
  return static_cast<double>(std::clock() - start) / CLOCKS_PER_SEC;
}

double wall_seconds(const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1
void golden_sequence(Check& c) {
  std::vector<std::uint64_t> values;
  const double elapsed = wall_seconds([&] {
    shuffle::enumerate(ShuffleSpec{3, 2}, [&](const EnumerationEvent& e) { values.push_back(e.value.value); });
  });
  c.require(values == std::vector<std::uint64_t>{3, 6, 5, 10, 20, 12, 9, 18, 24, 17}, "sequence mismatch");
  c.require(elapsed < 1e-3, "took " + std::to_string(elapsed) + " s");
}

// 2
void golden_steps(Check& c) {
  const auto events = events_of({4, 5});
  auto edge = [&](std::uint64_t from, std::uint64_t to, EdgeKind kind, std::uint64_t v = 0) {
    const auto it = std::ranges::find_if(events, [&](const auto& e) { return e.value.value == to; });
    if (it == events.end() || !it->parent_index) return false;
    if (events[*it->parent_index].value.value != from || it->edge != kind) return false;
    if (kind == EdgeKind::Subtract) return it->subtrahend_used && it->subtrahend_used->value == v;
    return !it->subtrahend_used.has_value();
  };
  struct Step {
    std::uint64_t from, to;
    EdgeKind kind;
    std::uint64_t v;
  };
  const std::vector<Step> steps{
      {31, 62, EdgeKind::Shift, 0},        {62, 124, EdgeKind::Shift, 0},
      {124, 248, EdgeKind::Shift, 0},      {248, 496, EdgeKind::Shift, 0},
      {62, 61, EdgeKind::Subtract, 1},     {61, 59, EdgeKind::Subtract, 2},
      {59, 55, EdgeKind::Subtract, 4},     {55, 47, EdgeKind::Subtract, 8},
      {124, 121, EdgeKind::Subtract, 3},   {121, 115, EdgeKind::Subtract, 6},
      {115, 103, EdgeKind::Subtract, 12},  {103, 79, EdgeKind::Subtract, 24},
      {121, 242, EdgeKind::Shift, 0},      {242, 484, EdgeKind::Shift, 0},
      {242, 229, EdgeKind::Subtract, 13},  {229, 203, EdgeKind::Subtract, 26},
      {203, 151, EdgeKind::Subtract, 52}};
  for (const auto& s : steps) {
    c.require(edge(s.from, s.to, s.kind, s.v),
              "edge " + std::to_string(s.from) + "->" + std::to_string(s.to) + " ");
  }
}

// 3
void cardinality(Check& c) {
  const double elapsed = wall_seconds([&] {
    const auto values = events_of({4, 5});
    std::unordered_set<std::uint64_t> distinct;
    for (const auto& e : values) {
      c.require(shuffle::is_valid_permutation(e.value, {4, 5}), "invalid value ");
      distinct.insert(e.value.value);
    }
    c.require(values.size() == 126 && distinct.size() == 126, "tic-tac-toe count ");
    const std::vector<std::tuple<unsigned, unsigned, const char*>> rows{
        {1, 1, "2"},
        {5, 5, "252"},
        {10, 10, "184756"},
        {20, 20, "137846528820"},
        {40, 40, "107507208733336176461620"},
        {2, 5, "21"},
        {4, 10, "1001"},
        {8, 20, "3108105"},
        {16, 40, "41648951840265"},
        {32, 80, "10484776488844408407191115273"}};
    for (const auto& [x, y, expected] : rows) {
      c.require(formulas::shuffle_count(x, y).str() == expected,
                "g(" + std::to_string(x) + "," + std::to_string(y) + ") ");
    }
  });
  c.require(elapsed < 1.0, "took " + std::to_string(elapsed) + " s");
}

// 4
void oracle_sweep(Check& c) {
  int specs = 0;
  const double elapsed = wall_seconds([&] {
    for (unsigned width = 0; width <= 20; ++width) {
      for (unsigned ones = 0; ones <= width; ++ones) {
        const auto r = oracle::verify_against_oracle({width - ones, ones});
        c.require(r.passed, "(" + std::to_string(width - ones) + "," + std::to_string(ones) + ") ");
        ++specs;
      }
    }
  });
  c.require(elapsed < 60.0, "took " + std::to_string(elapsed) + " s");
  c.detail << specs << " specs";
}

// 5
void swap_isomorphism(Check& c) {
  for (unsigned width = 0; width <= 16; ++width) {
    for (unsigned ones = 0; ones <= width; ++ones) {
      c.require(oracle::verify_swap_isomorphism({width - ones, ones}),
                "(" + std::to_string(width - ones) + "," + std::to_string(ones) + ") ");
    }
  }
  auto e = oracle::xor_all(oracle::collect({3, 2}), oracle::complement_mask({3, 2}));
  auto d = oracle::collect({2, 3});
  std::ranges::sort(e);
  std::ranges::sort(d);
  std::vector<Bitmask> expected;
  for (std::uint64_t v : {7, 11, 13, 14, 19, 21, 22, 25, 26, 28}) expected.push_back(Bitmask{v});
  c.require(e == expected && d == expected, "figure instance ");
}

// 6
void depth_bound(Check& c) {
  for (unsigned width = 3; width <= 14; ++width) {
    for (unsigned ones = 2; ones < width; ++ones) {
      const unsigned zeros = width - ones;
      const auto stats = tg::tree_stats(tg::build_tree({zeros, ones}));
      c.require(stats.max_path_length == zeros + ones - 1,
                "(" + std::to_string(zeros) + "," + std::to_string(ones) + ") ");
    }
  }
}

// 7
void storage_formula(Check& c) {
  c.require(formulas::storage_bytes(10, 10).str() == "739024", "f(10,10) ");
  c.require(formulas::storage_bytes(1, 1).str() == "2", "f(1,1) ");
}

// 8
void performance(Check& c) {
  shuffle::CountingVisitor ten;
  const double t10 = cpu_seconds([&] { shuffle::enumerate(ShuffleSpec{10, 10}, ten); });
  shuffle::CountingVisitor eleven;
  const double t11 = cpu_seconds([&] { shuffle::enumerate(ShuffleSpec{11, 11}, eleven); });
  c.require(ten.count == 184756 && eleven.count == 705432, "counts ");
  c.require(t10 < 1.0, "(10,10) " + std::to_string(t10) + " s ");
  c.require(t11 < 4.0, "(11,11) " + std::to_string(t11) + " s ");
  if (c.ok) c.detail << "(10,10) " << t10 << " s, (11,11) " << t11 << " s CPU";
}

// 9
void tree_exports(Check& c) {
  const auto tree = tg::build_tree({4, 5});
  const auto parsed = dot_check::check(tg::export_dot(tree));
  c.require(parsed.ok, "DOT grammar: " + parsed.error + " ");
  c.require(parsed.nodes.size() == 126, "DOT node count ");
  c.require(parsed.edges == 125, "DOT edge count ");
  c.require(tg::parse_json_tree(tg::export_json(tree)) == tree, "JSON round trip ");
}

// 10
void property_suites(Check& c) {
  std::mt19937_64 rng(20131807);
  for (int trial = 0; trial < 200 && c.ok; ++trial) {
    const unsigned width = std::uniform_int_distribution<unsigned>(0, 18)(rng);
    const unsigned ones = std::uniform_int_distribution<unsigned>(0, width)(rng);
    const ShuffleSpec spec{width - ones, ones};
    const auto events = events_of(spec);
    c.require(events == events_of(spec), "determinism ");
    std::unordered_set<std::uint64_t> seen;
    for (const auto& e : events) {
      c.require(seen.insert(e.value.value).second, "distinctness ");
      c.require(e.shift_count <= spec.zeros, "shift bound ");
      c.require(e.subtract_count + 1 <= std::max(spec.ones, 1U), "subtract bound ");
      if (e.edge == EdgeKind::Shift) {
        c.require(e.value.value == events[*e.parent_index].value.value * 2, "doubling ");
      } else if (e.edge == EdgeKind::Subtract) {
        c.require(std::popcount(e.value.value) == std::popcount(events[*e.parent_index].value.value),
                  "popcount ");
      }
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, void (*)(Check&)>> criteria{
      {"1 golden sequence (3,2)", golden_sequence},
      {"2 golden shift/subtract steps (4,5)", golden_steps},
      {"3 cardinality and growth table", cardinality},
      {"4 oracle equivalence sweep, width <= 20", oracle_sweep},
      {"5 swap isomorphism, width <= 16", swap_isomorphism},
      {"6 depth bound, width <= 14", depth_bound},
      {"7 storage formula", storage_formula},
      {"8 performance envelope", performance},
      {"9 tree exports", tree_exports},
      {"10 property suites, width <= 18", property_suites},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Check check;
    try {
      run(check);
    } catch (const std::exception& e) {
      check.ok = false;
      check.detail << "exception: " << e.what();
    }
    std::cout << (check.ok ? "PASS " : "FAIL ") << name;
    if (!check.detail.str().empty()) std::cout << "  [" << check.detail.str() << "]";
    std::cout << '\n';
    if (!check.ok) ++failures;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
