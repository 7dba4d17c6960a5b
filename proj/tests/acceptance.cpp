// Acceptance suite: runs every verification criterion end to end and prints
// one PASS/FAIL line per criterion. Exit status is nonzero when any
// criterion fails. Criterion 10 is a search whose outcome is reported
// found / not-found together with its log.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "maxcurves/covers.hpp"
#include "maxcurves/curves.hpp"
#include "maxcurves/feasibility.hpp"
#include "maxcurves/stabilizer.hpp"
#include "maxcurves/util.hpp"

using namespace maxcurves;

namespace {

int failures = 0;
int index_no = 0;

void report(const std::string& name, bool pass, double seconds,
            const std::string& note = "") {
    ++index_no;
    std::printf("[%2d] %s  %-58s (%.2fs)%s%s\n", index_no, pass ? "PASS" : "FAIL",
                name.c_str(), seconds, note.empty() ? "" : "  ", note.c_str());
    if (!pass) ++failures;
}

void criterion(const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string note;
    auto start = std::chrono::steady_clock::now();
    bool pass = false;
    try {
        pass = body(note);
    } catch (const std::exception& e) {
        note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(name, pass, secs, note);
}

// smallest translation subgroup of order d inside {[1,0,c]}
SubgroupWitness translation_subgroup_of_order(const HermitianStabilizer& H, std::uint64_t d) {
    const Field& F = H.field();
    std::vector<StabilizerElement> gens;
    SubgroupWitness G = SubgroupWitness::generate(H, {});
    for (const Elem& c : H.trace_fiber(F.zero())) {
        if (G.order() == d) break;
        if (c.is_zero()) continue;
        bool inside = false;
        for (const auto& s : G.elements())
            if (s.c == c) inside = true;
        if (inside) continue;
        gens.push_back(H.make(F.one(), F.zero(), c));
        G = SubgroupWitness::generate(H, gens);
    }
    if (G.order() != d) throw InconsistencyError("no translation subgroup of that order");
    return G;
}

}  // namespace

int main() {
    criterion("hermitian counts attain Q^3+1 for Q=2,3,4,5", [](std::string&) {
        bool ok = true;
        for (std::uint64_t Q : {2, 3, 4, 5}) {
            auto t0 = std::chrono::steady_clock::now();
            PointCount pc = check_maximal(make_hermitian(Q));
            double dt =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            ok = ok && pc.total == Q * Q * Q + 1 && pc.maximal && dt < 1.0;
        }
        return ok;
    });

    criterion("xn and ggk are maximal for (2,3),(2,5),(3,3)", [](std::string& note) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        for (auto [q, n] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
                 {2, 3}, {2, 5}, {3, 3}}) {
            std::uint64_t qn = ipow(q, n);
            PointCount px = check_maximal(make_xn(q, n));
            ok = ok && px.maximal &&
                 px.total == qn * qn + 1 + 2 * genus_xn(q, n) * qn;
            PointCount pg = check_maximal(make_ggk(q, n));
            ok = ok && pg.maximal &&
                 pg.total == qn * qn + 1 + 2 * genus_ggk(q, n) * qn;
        }
        PointCount g23 = check_maximal(make_ggk(2, 3));
        ok = ok && g23.total == 225;
        PointCount x33 = check_maximal(make_xn(3, 3));
        ok = ok && x33.total == 2026;
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        note = "six curves counted";
        return ok && dt < 60.0;
    });

    criterion("artin values: formula equals oracle on all of H, Q=2,3,4", [](std::string& note) {
        auto t0 = std::chrono::steady_clock::now();
        std::uint64_t mismatches = 0, checked = 0;
        for (std::uint64_t Q : {2, 3, 4}) {
            HermitianStabilizer H(Q);
            H.for_each([&](const StabilizerElement& s) {
                if (s.is_identity()) return;
                ++checked;
                std::uint64_t formula = H.artin_formula(s).value;
                std::uint64_t oracle = s.a.is_one() ? H.artin_wild_valuation(s)
                                                    : H.artin_fixed_point_count(s);
                bool in_set = formula == 1 || formula == 2 || formula == 3 ||
                              formula == Q + 1 || formula == Q + 2;
                if (formula != oracle || !in_set) ++mismatches;
            });
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        note = std::to_string(checked) + " elements, " + std::to_string(mismatches) +
               " mismatches";
        return checked == 23 + 215 + 959 && mismatches == 0 && dt < 30.0;
    });

    criterion("census of H matches the subgroup-chain structure, Q=2,3", [](std::string&) {
        bool ok = true;
        for (std::uint64_t Q : {2, 3}) {
            HermitianStabilizer H(Q);
            auto census = H.artin_census();
            std::map<std::uint64_t, std::uint64_t> expected;
            expected[1] = Q * (Q * Q * Q - Q * Q);
            expected[2] = (Q * Q * Q - Q) + (Q * Q - Q - 2) * Q * Q * Q;
            expected[Q + 1] += Q * Q * Q;
            expected[Q + 2] += Q - 1;
            ok = ok && census == expected;

            // the two counts named explicitly: translations and shears
            const Field& F = H.field();
            std::uint64_t translations = 0, shears = 0;
            for (const Elem& c : H.trace_fiber(F.zero()))
                if (!c.is_zero() &&
                    H.artin_formula(H.make(F.one(), F.zero(), c)).value == Q + 2)
                    ++translations;
            H.for_each([&](const StabilizerElement& s) {
                if (s.a.is_one() && !s.b.is_zero() && H.artin_formula(s).value == 2)
                    ++shears;
            });
            ok = ok && translations == Q - 1 && shears == Q * Q * Q - Q;
        }
        return ok;
    });

    criterion("translation quotients hit the sharp genera, Q=4,8,9", [](std::string&) {
        bool ok = true;
        for (std::uint64_t Q : {4, 8, 9}) {
            HermitianStabilizer H(Q);
            std::uint32_t p = H.p();
            for (std::uint64_t d = 1; d <= Q; d *= p) {
                SubgroupWitness G = translation_subgroup_of_order(H, d);
                ok = ok && quotient_genus(H, G) == gsx_genus(Q, d);
            }
        }
        return ok;
    });

    criterion("no feasible degree at the ggk genus, q=3,4,5, n=3,5", [](std::string&) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        for (std::uint64_t q : {3, 4, 5})
            for (std::uint32_t n : {3, 5}) {
                FeasibilityReport r = feasible_degrees(ipow(q, n), genus_ggk(q, n));
                ok = ok && r.feasible.empty() && !r.unbounded;
            }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return ok && dt < 1.0;
    });

    criterion("q=2 ggk: unique degree (2^n+1)/3, unramified, n=5,7", [](std::string&) {
        bool ok = true;
        for (std::uint32_t n : {5, 7}) {
            std::uint64_t Q = ipow(2, n);
            FeasibilityReport r = feasible_degrees(Q, genus_ggk(2, n));
            std::int64_t want = static_cast<std::int64_t>((Q + 1) / 3);
            ok = ok && r.feasible == std::vector<std::int64_t>{want};
            ok = ok && ramification_budget(r.gc, static_cast<std::uint64_t>(want)).deg_r == 0;
        }
        return ok;
    });

    criterion("xn degree window: {12,13,14} at (3,3); endpoints at (3,5),(4,3)",
              [](std::string&) {
                  FeasibilityReport r33 = feasible_degrees(27, genus_xn(3, 3));
                  bool ok = r33.feasible == std::vector<std::int64_t>{12, 13, 14};

                  FeasibilityReport r35 = feasible_degrees(ipow(3, 5), genus_xn(3, 5));
                  std::int64_t lo35 = ceil_div(4 * (ipow(3, 5) + 1), 10);
                  std::int64_t hi35 = 81 + 27 + 9 + 3 + 2;
                  ok = ok && !r35.feasible.empty() && r35.feasible.front() == lo35 &&
                       r35.feasible.back() == hi35;

                  FeasibilityReport r43 = feasible_degrees(64, genus_xn(4, 3));
                  std::int64_t lo43 = ceil_div(5 * 65, 17);
                  std::int64_t hi43 = 16 + 4 + 2;
                  ok = ok && !r43.feasible.empty() && r43.feasible.front() == lo43 &&
                       r43.feasible.back() == hi43;
                  return ok;
              });

    criterion("degree-6 table: 54 = 6*4 + 30 and the profile is admissible",
              [](std::string&) {
                  bool ok = (8 - 2) * (8 + 1) == 6 * (2 * 3 - 2) + 30;
                  ok = ok && 2 * 1 + 2 * 9 + 1 * 10 == 30;
                  auto sols = profile_solutions(8, 3, 6);
                  std::array<std::uint64_t, 6> table{0, 2, 0, 0, 2, 1};
                  bool found = false;
                  for (const auto& s : sols) found = found || s == table;
                  return ok && found;
              });

    criterion("search: order-6 subgroup of H(8) realizing the degree-6 table",
              [](std::string& note) {
                  HermitianStabilizer H(8);
                  const Field& F = H.field();

                  // Any order-6 subgroup contains an element of order 2 and one
                  // of order 3, and those two generate it; pairing the full
                  // order-2 and order-3 lists is therefore exhaustive over
                  // subgroups generated by at most two elements.
                  std::vector<StabilizerElement> invol, third;
                  H.for_each([&](const StabilizerElement& s) {
                      if (s.is_identity()) return;
                      std::uint64_t ord = H.element_order(s);
                      if (ord == 2) invol.push_back(s);
                      if (ord == 3) third.push_back(s);
                  });

                  std::set<std::set<std::array<std::uint64_t, 3>>> seen;
                  std::uint64_t pairs = 0, order6 = 0, matches = 0;
                  std::array<std::uint64_t, 6> table{0, 2, 0, 0, 2, 1};
                  std::string witness;
                  for (const auto& t : invol) {
                      for (const auto& s : third) {
                          ++pairs;
                          SubgroupWitness G = [&] {
                              try {
                                  return SubgroupWitness::generate(H, {t, s}, 7);
                              } catch (const BudgetExceededError&) {
                                  return SubgroupWitness::generate(H, {}, 1);
                              }
                          }();
                          if (G.order() != 6) continue;
                          std::set<std::array<std::uint64_t, 3>> key;
                          for (const auto& e : G.elements())
                              key.insert({F.index(e.a), F.index(e.b), F.index(e.c)});
                          if (!seen.insert(key).second) continue;
                          ++order6;
                          RamificationProfile prof = ramification_profile(H, G);
                          if (prof.n == table && quotient_genus(H, G) == 3) {
                              ++matches;
                              if (witness.empty()) {
                                  witness = "witness elements (a,b,c) indices:";
                                  for (const auto& e : G.elements())
                                      witness += " (" + std::to_string(F.index(e.a)) + "," +
                                                 std::to_string(F.index(e.b)) + "," +
                                                 std::to_string(F.index(e.c)) + ")";
                              }
                          }
                      }
                  }
                  std::printf("    search log: %zu involutions, %zu order-3 elements, "
                              "%llu pairs, %llu distinct order-6 subgroups, %llu matching\n",
                              invol.size(), third.size(),
                              static_cast<unsigned long long>(pairs),
                              static_cast<unsigned long long>(order6),
                              static_cast<unsigned long long>(matches));
                  if (!witness.empty()) std::printf("    %s\n", witness.c_str());
                  note = matches > 0 ? "found" : "not-found";
                  return matches > 0;
              });

    criterion("y-curve is maximal with genus (q-1)(q^3-q)/2, q=2,3", [](std::string&) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        for (std::uint64_t q : {2, 3}) {
            CurveModel m = make_y(q);
            ok = ok && m.genus == (q - 1) * (q * q * q - q) / 2;
            PointCount pc = check_maximal(m);
            std::uint64_t s = q * q * q;
            ok = ok && pc.maximal && pc.total == s * s + 1 + 2 * m.genus * s;
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return ok && dt < 60.0;
    });

    std::printf("%s: %d of %d criteria failed\n", failures == 0 ? "SUCCESS" : "FAILURE",
                failures, index_no);
    return failures == 0 ? 0 : 1;
}
