// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "corpus.hpp"
#include "deltasg/cli.hpp"
#include "deltasg/delta.hpp"
#include "deltasg/oracle.hpp"

using namespace deltasg;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      out_.ok = false;
      if (!out_.detail.empty()) out_.detail += "; ";
      out_.detail += what;
    }
  }
  void note(const std::string& what) { notes_ += (notes_.empty() ? "" : ", ") + what; }
  Outcome finish() {
    if (out_.ok) out_.detail = notes_;
    return out_;
  }

 private:
  Outcome out_;
  std::string notes_;
};

nlohmann::json cli_json(std::vector<std::string> args) {
  args.insert(args.end(), {"--format", "json"});
  std::ostringstream out, err;
  if (cli::run(args, out, err) != 0) throw std::runtime_error("command failed: " + err.str());
  return nlohmann::json::parse(out.str());
}

Outcome flagship_delta() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  const auto S = Generators::validate(2015, 7124, 84940);
  const auto d = delta_set_fast(S);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  c.expect(d == DeltaSet{1, 2, 3, 4, 7, 10, 13, 23, 33, 43, 76, 109, 142, 251, 393}, "got " + d.to_string());
  c.expect(ms < 10.0, "fast path took " + std::to_string(ms) + " ms");
  const auto doc = cli_json({"delta", "2015", "7124", "84940", "--method", "fast"});
  c.expect(doc["result"]["delta"] == nlohmann::json::parse("[1,2,3,4,7,10,13,23,33,43,76,109,142,251,393]"),
           "CLI output differs");
  c.note("fast path " + std::to_string(ms) + " ms");
  return c.finish();
}

Outcome euclid_levels() {
  Check c;
  const auto doc = cli_json({"euclid", "393", "142"});
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& l : doc["result"]["levels"]) levels.push_back(l["values"]);
  c.expect(levels == nlohmann::json::parse("[[393,251,109],[142,33],[76,43,10],[23,13,3],[7,4,1],[2,1,0]]"),
           "levels " + levels.dump());
  return c.finish();
}

Outcome small_cases() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  {
    const auto S = Generators::validate(6, 10, 15);
    c.expect(betti_elements(S).elements == std::vector<Int>{30}, "Betti <6,10,15>");
    c.expect(factorizations(S, 30) == std::vector<Factorization>{{5, 0, 0}, {0, 3, 0}, {0, 0, 2}}, "Z(30)");
    c.expect(delta_of_element(S, 30) == DeltaSet{1, 2}, "Delta(30)");
    c.expect(delta_set_fast(S) == DeltaSet{1, 2}, "fast <6,10,15>");
    c.expect(verify(S, Int{300}).verdict == Verdict::ExactMatch, "oracle <6,10,15>");
  }
  {
    const auto S = Generators::validate(6, 8, 11);
    c.expect(betti_elements(S).elements == std::vector<Int>{22, 24}, "Betti <6,8,11>");
    c.expect(delta_set_fast(S) == DeltaSet{1}, "fast <6,8,11>");
    c.expect(verify(S, Int{300}).verdict == Verdict::ExactMatch, "oracle <6,8,11>");
  }
  {
    const auto S = Generators::validate(3, 5, 7);
    const auto betti = betti_elements(S);
    c.expect(betti.elements == std::vector<Int>{10, 12, 14}, "Betti <3,5,7>");
    c.expect(delta_of_element(S, 10).empty(), "Delta(10)");
    c.expect(delta_of_element(S, 12) == DeltaSet{2} && delta_of_element(S, 14) == DeltaSet{2}, "Delta(12), Delta(14)");
    c.expect(!is_symmetric_form(classify(S, betti)) && !is_symmetric(S), "<3,5,7> classified symmetric");
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(s < 1.0, "took " + std::to_string(s) + " s");
  c.note(std::to_string(s) + " s");
  return c.finish();
}

Outcome min_max() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  const auto entries = corpus::symmetric();
  c.expect(entries.size() >= 100, "corpus too small");
  for (const auto& e : entries) {
    const auto data = analyze_symmetric(e.S);
    const auto d = delta_set_fast(e.S);
    const bool ok = d.max() == data.basis.max_delta() && d.min() == data.basis.g;
    c.expect(ok, "min/max fails on " + e.S[0].to_string() + "," + e.S[1].to_string() + "," + e.S[2].to_string());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(s < 10.0, "took " + std::to_string(s) + " s");
  c.note(std::to_string(entries.size()) + " semigroups, " + std::to_string(s) + " s");
  return c.finish();
}

Outcome oracle_suite() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  const auto entries = corpus::symmetric();
  std::size_t exact = 0, contains = 0, mismatch = 0;
  for (const auto& e : entries) {
    const auto r = verify(e.S);
    if (r.verdict == Verdict::ExactMatch) ++exact;
    if (r.verdict == Verdict::FastContainsObserved) ++contains;
    if (r.verdict == Verdict::Mismatch) ++mismatch;
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(mismatch == 0, std::to_string(mismatch) + " mismatches");
  c.expect(exact * 10 >= entries.size() * 9, "ExactMatch on only " + std::to_string(exact) + "/" +
                                                 std::to_string(entries.size()));
  c.expect(exact + contains == entries.size(), "verdicts do not add up");
  c.expect(s < 60.0, "took " + std::to_string(s) + " s");
  c.note("ExactMatch " + std::to_string(exact) + "/" + std::to_string(entries.size()) + ", FastContainsObserved " +
         std::to_string(contains) + ", " + std::to_string(s) + " s");
  return c.finish();
}

Outcome witnesses() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<Generators> targets{Generators::validate(6, 10, 15), Generators::validate(6, 8, 11)};
  std::vector<Generators> small;
  for (const auto& e : corpus::symmetric(7)) {
    if (e.S[2] <= 200) small.push_back(e.S);
  }
  std::mt19937_64 rng(31);
  std::shuffle(small.begin(), small.end(), rng);
  c.expect(small.size() >= 20, "only " + std::to_string(small.size()) + " corpus members with generators <= 200");
  if (small.size() > 20) small.erase(small.begin() + 20, small.end());
  targets.insert(targets.end(), small.begin(), small.end());
  std::size_t confirmed = 0;
  for (const auto& S : targets) {
    const auto data = analyze_symmetric(S);
    for (Int d : delta_set_fast(S).values()) {
      const auto w = witness(data, d);
      const auto ok = check_witness(S, w);
      c.expect(ok.has_value() && *ok, "witness for d=" + d.to_string() + " on " + S[0].to_string() + "," +
                                          S[1].to_string() + "," + S[2].to_string());
      confirmed += ok.value_or(false) ? 1 : 0;
    }
  }

  const auto F = Generators::validate(2015, 7124, 84940);
  const auto data = analyze_symmetric(F);
  std::vector<Witness> ws;
  for (Int d : delta_set_fast(F).values()) ws.push_back(witness(data, d));
  c.expect(ws.size() == 15, "flagship produced " + std::to_string(ws.size()) + " witnesses");
  for (const auto& w : ws) {
    if (w.distance == 43) c.expect(w.vector == KernelVector{1644, -1705, 104}, "w_43 = " + w.vector.to_string());
  }
  std::sort(ws.begin(), ws.end(), [](const Witness& a, const Witness& b) { return a.element < b.element; });
  for (std::size_t i = 0; i < 3 && i < ws.size(); ++i) {
    const auto ok = check_witness(F, ws[i]);
    c.expect(ok.has_value() && *ok, "flagship witness d=" + ws[i].distance.to_string() + " not confirmed");
    confirmed += ok.value_or(false) ? 1 : 0;
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(s < 120.0, "took " + std::to_string(s) + " s");
  c.note(std::to_string(confirmed) + " witnesses confirmed by enumeration, " + std::to_string(s) + " s");
  return c.finish();
}

Outcome basements() {
  Check c;
  const auto e = euclid_set(393, 142);
  const auto d = decompose(35, 393, 142);
  c.expect(d.pos == std::array<Int, 2>{85, -235} && d.neg == std::array<Int, 2>{-57, 158}, "decompose(35)");
  c.expect(basement(35, e, BasementVariant::Pos) == 10 && basement(35, e, BasementVariant::Neg) == 33,
           "basements of 35");
  const auto b = basement_choice(15, e);
  c.expect(b.level_pos == 13 && b.level_neg == 10, "level basements of 15");
  c.expect(b.pos == 10 && b.neg == 13, "first-level basements of 15");
  const auto x = decompose(15, 393, 142);
  c.expect(x.pos == std::array<Int, 2>{77, -213} && x.neg == std::array<Int, 2>{-65, 180}, "decompose(15)");
  c.expect(decompose(10, 393, 142).pos == std::array<Int, 2>{4, -11}, "decompose(10)");
  return c.finish();
}

Outcome intermediates() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<SymmetricData> pool;
  for (const auto& e : corpus::symmetric()) {
    auto data = analyze_symmetric(e.S);
    const auto& E = data.euclid;
    bool has_gap = false;
    for (Int x = E.g; x < E.max() && !has_gap; x += E.g) has_gap = !E.contains(x);
    if (has_gap) pool.push_back(std::move(data));
  }
  c.expect(!pool.empty(), "no corpus member has a gap outside Euclid's set");
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<std::int64_t> coef(-400, 400), base(0, 50);
  std::size_t built = 0, attempts = 0;
  while (built < 200 && attempts < 2'000'000 && !pool.empty()) {
    ++attempts;
    const auto& data = pool[rng() % pool.size()];
    const auto& B = data.basis;
    const KernelVector v = B.combine(coef(rng), coef(rng));
    const Int len = v.length();
    if (len <= 0 || len >= B.max_delta() || data.euclid.contains(len)) continue;
    // z - z' = v over a common random base.
    const Factorization z0{base(rng), base(rng), base(rng)};
    const auto pos = v.positive_part(), neg = v.negative_part();
    const Factorization z{z0[0] + pos[0], z0[1] + pos[1], z0[2] + pos[2]};
    const Factorization zp{z0[0] + neg[0], z0[1] + neg[1], z0[2] + neg[2]};
    ++built;
    try {
      const auto mid = intermediate_factorization(data, z, zp);
      bool valid = mid.dot(B.atoms) == z.dot(B.atoms);
      for (std::size_t i = 0; i < 3; ++i) valid = valid && mid[i] >= 0;
      valid = valid && zp.length() < mid.length() && mid.length() < z.length();
      c.expect(valid, "invalid intermediate for " + z.to_string() + " / " + zp.to_string());
    } catch (const Error& e) {
      c.expect(false, e.what());
    }
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(built == 200, "built only " + std::to_string(built) + " pairs");
  c.expect(s < 30.0, "took " + std::to_string(s) + " s");
  c.note(std::to_string(built) + " pairs over " + std::to_string(pool.size()) + " semigroups, " +
         std::to_string(s) + " s");
  return c.finish();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 flagship Delta(S) by the fast path", flagship_delta},
      {"2 Euclid levels of (393, 142)", euclid_levels},
      {"3 small cases <6,10,15>, <6,8,11>, <3,5,7>", small_cases},
      {"4 min and max of Delta(S) over the corpus", min_max},
      {"5 oracle falsification over the corpus", oracle_suite},
      {"6 witness completeness", witnesses},
      {"7 decompositions and basements", basements},
      {"8 intermediate factorizations", intermediates},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.ok ? 0 : 1;
    std::cout << (o.ok ? "PASS " : "FAIL ") << name;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
