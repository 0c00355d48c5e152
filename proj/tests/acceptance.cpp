// Runs the twelve acceptance criteria and prints one PASS/FAIL line each.

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracle.hpp"
#include "semicat/cli.hpp"
#include "semicat/gen.hpp"
#include "semicat/graph.hpp"
#include "semicat/suite.hpp"

using namespace semicat;

namespace {

const std::vector<std::string> kSemirings{"nat", "bool", "tropical", "rat", "gaussian"};
constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, std::string what) {
    if (!cond) {
      ok = false;
      notes.push_back(std::move(what));
    }
  }
};

void suite_passes(Outcome& o, const std::string& suite, const std::string& semiring, const std::string& monoid,
                  std::size_t cases) {
  try {
    const auto r = run_suite({suite, semiring, monoid, kSeed, cases});
    for (const auto& l : r.laws)
      if (!l.pass) o.require(false, suite + " on " + r.subject + ": " + l.law + " " + l.counterexample);
    o.require(!r.laws.empty(), suite + " produced no laws");
  } catch (const std::exception& e) {
    o.require(false, suite + " on " + semiring + monoid + ": " + e.what());
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cli(std::vector<std::string> args, std::string& out) {
  std::ostringstream o, e;
  const int code = run_cli(args, o, e);
  out = o.str();
  return code;
}

Outcome monad_laws() {
  Outcome o;
  for (const auto& s : kSemirings) suite_passes(o, "monad-laws", s, "", 200);
  for (const char* m : {"nat-mul", "free-words"}) suite_passes(o, "monad-laws", "", m, 200);
  return o;
}

Outcome additivity() {
  Outcome o;
  for (const auto& s : kSemirings) {
    suite_passes(o, "additivity", s, "", 200);
    const auto T = multiset_monad(semiring_kind(s));
    Rng rng(kSeed);
    // every value over the empty carrier is the empty multiset
    for (int c = 0; c < 50; ++c) o.require(gen_t_value(rng, *T, {}) == T->empty_value(), "T(0) has a second value");
    o.require(T->support(T->empty_value()).empty(), "T(0) value has support");
  }
  return o;
}

Outcome commutativity() {
  Outcome o;
  for (const auto& s : kSemirings) suite_passes(o, "commutativity", s, "", 200);
  for (const char* m : {"nat-mul", "nat-add"}) suite_passes(o, "commutativity", "", m, 200);
  const auto r = run_suite({"commutativity", "", "free-words", kSeed, 200});
  bool found = false;
  for (const auto& l : r.laws)
    if (l.law == "composites-agree (expected-fail)") found = l.pass && !l.counterexample.empty();
  o.require(found, "free-word action monad gave no counterexample");
  return o;
}

Outcome eval_at_one_iso() {
  Outcome o;
  for (const auto& s : kSemirings) suite_passes(o, "eval-at-one", s, "", 1);
  return o;
}

Outcome module_laws() {
  Outcome o;
  for (const auto& s : kSemirings) suite_passes(o, "module-laws", s, "", 200);
  return o;
}

Outcome matrices() {
  Outcome o;
  for (const auto& s : kSemirings) {
    suite_passes(o, "matcat-laws", s, "", 100);
    const auto k = semiring_kind(s);
    Rng rng(derive_seed(kSeed, "oracle/" + s));
    for (int c = 0; c < 100; ++c) {
      const std::size_t n = rng.below(5), m = rng.below(5), p = rng.below(5);
      const auto g = gen_matrix(rng, k, n, m), h = gen_matrix(rng, k, m, p);
      o.require(mat_compose(g, h) == oracle::compose(g, h), "compose differs from the oracle on " + s);
    }
  }
  return o;
}

Outcome dagger() {
  Outcome o;
  suite_passes(o, "dagger", "gaussian", "", 100);
  const auto G = builtin_semiring(SemiringKind::Gaussian);
  Rng rng(derive_seed(kSeed, "dagger-3x3"));
  auto gen = [&] { return gen_matrix(rng, SemiringKind::Gaussian, 3, 3); };
  for (int c = 0; c < 100; ++c) {
    const auto f = gen(), g = gen(), h = gen();
    o.require(mat_dagger(mat_dagger(f)) == f, "dagger not involutive");
    o.require(mat_dagger(mat_compose(g, h)) == mat_compose(mat_dagger(h), mat_dagger(g)), "dagger not contravariant");
    o.require(mat_dagger(mat_tensor(f, g)) == mat_tensor(mat_dagger(f), mat_dagger(g)), "dagger not monoidal");
    o.require(mat_dagger(f) == oracle::conjugate_transpose(f), "dagger is not the conjugate transpose");
  }
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::size_t m = 0; m <= 3; ++m) {
      o.require(mat_coproj1(G, n, m) == mat_dagger(mat_proj1(G, n, m)), "first coprojection is not a dagger");
      o.require(mat_coproj2(G, n, m) == mat_dagger(mat_proj2(G, n, m)), "second coprojection is not a dagger");
    }
  return o;
}

Outcome kleisli_iso() {
  Outcome o;
  for (const auto& s : kSemirings) suite_passes(o, "kleisli-iso", s, "", 100);
  return o;
}

Outcome free_theory() {
  Outcome o;
  for (const auto& s : kSemirings) suite_passes(o, "freetheory", s, "", 200);
  return o;
}

Outcome roundtrips() {
  Outcome o;
  for (const auto& s : kSemirings) suite_passes(o, "adjunction-roundtrips", s, "", 50);
  for (const char* adj : {"mon-e", "srng-e", "mat-h"}) {
    const auto r = run_roundtrip(adj, "gaussian", true, kSeed, 50);
    o.require(r.all_pass(), std::string("involutive ") + adj + " round-trip failed");
  }
  return o;
}

Outcome algebraic_path() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / ("semicat-acceptance-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  Rng rng(derive_seed(kSeed, "graphs"));
  for (int c = 0; c < 20; ++c) {
    const std::size_t n = 1 + rng.below(5), k = rng.below(5);
    std::ostringstream text;
    text << n << "\n";
    const std::size_t edges = rng.below(2 * n + 1);
    for (std::size_t e = 0; e < edges; ++e)
      text << rng.below(n) << " " << rng.below(n) << " " << rng.between(0, 9) << "\n";
    const auto path = (dir / ("g" + std::to_string(c) + ".graph")).string();
    std::ofstream(path) << text.str();
    std::string out;
    const int code = cli({"shortest-path", "--graph", path, "--max-hops", std::to_string(k)}, out);
    o.require(code == 0, "shortest-path exited " + std::to_string(code));
    if (code == 0)
      o.require(parse_mat(out) == oracle::shortest_walks(parse_graph(text.str()), k),
                "graph " + std::to_string(c) + " differs from path enumeration");
  }
  std::filesystem::remove_all(dir);
  const std::string data = SEMICAT_TEST_DATA;
  for (const auto& [g, k] : std::vector<std::pair<std::string, std::string>>{{"cycle", "2"}, {"city", "4"}}) {
    std::string out;
    cli({"shortest-path", "--graph", data + "/" + g + ".graph", "--max-hops", k}, out);
    o.require(out == slurp(data + "/" + g + ".k" + k + ".expected"), "golden mismatch for " + g);
  }
  return o;
}

Outcome homset_iso() {
  Outcome o;
  for (const auto& s : kSemirings) suite_passes(o, "homset", s, "", 1);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"monad laws", monad_laws},
      {"additivity", additivity},
      {"commutativity", commutativity},
      {"evaluation at one", eval_at_one_iso},
      {"module laws", module_laws},
      {"matrix category", matrices},
      {"dagger", dagger},
      {"kleisli isomorphism", kleisli_iso},
      {"free theory", free_theory},
      {"adjunction round-trips", roundtrips},
      {"algebraic path", algebraic_path},
      {"homset isomorphism", homset_iso},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto o = criteria[i].second();
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << "\n";
    for (std::size_t n = 0; n < o.notes.size() && n < 5; ++n) std::cout << "    " << o.notes[n] << "\n";
    failed += !o.ok;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
