// Runs every registered check tagged with an acceptance criterion and prints
// one line per criterion. Exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "hforge/checks.hpp"

namespace {

struct Criterion {
  int id;
  const char* title;
  double time_limit_s;  // 0: none
};

constexpr Criterion kCriteria[] = {
    {1, "convolution at s: q-1 trivial, 0 sign, q in {3,5,7,9}", 1.0},
    {2, "truncation independence and coset structure", 0},
    {3, "Weil representation genuine and intertwining", 30.0},
    {4, "induction identity with and without chi^U", 10.0},
    {5, "Heisenberg central character and irreducibility", 0},
    {6, "graded symplectic split postconditions", 0},
    {7, "spinor norm laws", 0},
    {8, "extended spinor character", 0},
    {9, "Hecke algebra relations, oracle and associativity", 0},
    {10, "twist-necessity witness", 0},
};

struct Timed {
  hforge::CheckOutcome outcome;
  double seconds = 0;
};

}  // namespace

int main() {
  const auto& checks = hforge::suite_checks();
  std::map<std::size_t, Timed> results;
  bool all = true;
  for (const auto& crit : kCriteria) {
    bool pass = true;
    std::size_t cases = 0;
    double seconds = 0;
    std::vector<std::string> names;
    std::string witness;
    for (std::size_t i = 0; i < checks.size(); ++i) {
      bool tagged = false;
      for (int k : checks[i].criteria) tagged |= k == crit.id;
      if (!tagged) continue;
      auto it = results.find(i);
      if (it == results.end()) {
        const auto start = std::chrono::steady_clock::now();
        Timed t{checks[i].run(), 0};
        t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        it = results.emplace(i, std::move(t)).first;
      }
      const Timed& t = it->second;
      names.push_back(checks[i].module + "/" + checks[i].name);
      cases += t.outcome.cases;
      seconds += t.seconds;
      if (!t.outcome.pass) {
        if (pass) witness = checks[i].name + ": " + t.outcome.witness;
        pass = false;
      }
    }
    if (names.empty()) {
      pass = false;
      witness = "no checks registered";
    }
    if (pass && crit.time_limit_s > 0 && seconds >= crit.time_limit_s) {
      pass = false;
      witness = "runtime " + std::to_string(seconds) + " s over the limit";
    }
    all &= pass;
    std::printf("criterion %2d %s  %s  [%zu checks, %zu cases, %.3f s]", crit.id, pass ? "PASS" : "FAIL", crit.title,
                names.size(), cases, seconds);
    if (!pass) std::printf("  witness: %s", witness.c_str());
    std::printf("\n");
  }
  std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
