// Throwaway driver: computes derived expectations before they are frozen
// into tests. Not part of the build.
#include <iostream>

#include "sdsq/canon.hpp"
#include "sdsq/enumerate.hpp"
#include "sdsq/fixtures.hpp"
#include "sdsq/generic.hpp"
#include "sdsq/search.hpp"
#include "sdsq/verify.hpp"

using namespace sdsq;

// Independent brute-force check for tiny orders: no pruning, hand-rolled
// condition test (no reuse of verify.cpp).
namespace brute {

bool self_descriptive_2x2(long long a, long long b, long long c, long long d) {
  auto freq = [&](long long v) {
    return (a == v) + (b == v) + (c == v) + (d == v);
  };
  return a + b == freq(b) && c + d == freq(d) && a + c == freq(c) &&
         b + d == freq(d);
}

}  // namespace brute

int main() {
  // FIG1 error report
  auto r1 = count_errors(fixtures::fig1());
  std::cout << "fig1 errors: border=" << r1.border_duplication_errors
            << " coverage=" << r1.interior_coverage_errors
            << " rows=" << r1.row_errors << " cols=" << r1.col_errors << "\n";

  for (auto [name, sq] :
       {std::pair{"fig2", fixtures::fig2()}, {"fig3", fixtures::fig3()},
        {"fig4", fixtures::fig4()}, {"fig8a", fixtures::fig8a()},
        {"fig8b", fixtures::fig8b()}, {"fig14l", fixtures::fig14l()},
        {"fig19", fixtures::fig19()}, {"fig20", fixtures::fig20()}}) {
    std::cout << name << " total=" << count_errors(sq).total() << "\n";
  }

  std::cout << "to_snf(fig2)==fig4: " << (to_snf(fixtures::fig2()) == fixtures::fig4())
            << "\n";
  std::cout << "to_snf(fig3)==fig4: " << (to_snf(fixtures::fig3()) == fixtures::fig4())
            << "\n";
  std::cout << "class(fig2) size: " << equivalence_class(fixtures::fig2()).size()
            << "\n";
  std::cout << "class(fig8a) size: " << equivalence_class(fixtures::fig8a()).size()
            << "\n";
  std::cout << "class(1x1) size: " << equivalence_class(Square{{1}}).size() << "\n";

  std::cout << "snf(core(fig20))==fig8a: "
            << (to_snf(core_of(fixtures::fig20())) == fixtures::fig8a()) << "\n";
  std::cout << "fig19 core nontrivial: " << is_nontrivial(core_of(fixtures::fig19()))
            << "\n";

  auto m19 = is_magic(fixtures::fig19());
  std::cout << "fig19 magic=" << m19.magic << " main=" << m19.main_diagonal_sum
            << " co=" << m19.co_diagonal_sum << " tl=" << m19.main_matches_top_left
            << " br=" << m19.main_matches_bottom_right
            << " tr=" << m19.co_matches_top_right
            << " bl=" << m19.co_matches_bottom_left << "\n";
  auto m2 = is_magic(fixtures::fig2());
  std::cout << "fig2 magic=" << m2.magic << " main_sum=" << m2.main_diagonal_sum << "\n";

  // 2x2 trivial census, independent brute force
  int brute_count = 0;
  for (long long a = -4; a <= 4; ++a)
    for (long long b = -4; b <= 4; ++b)
      for (long long c = -4; c <= 4; ++c)
        for (long long d = -4; d <= 4; ++d)
          if (brute::self_descriptive_2x2(a, b, c, d)) ++brute_count;
  std::cout << "2x2 M=4 s-d squares (brute): " << brute_count << "\n";

  EnumConfig cfg2{.order = 2, .max_abs = 4, .dedupe = Dedupe::raw,
                  .include_trivial = true};
  auto trivial2 = enumerate_all(cfg2);
  std::cout << "2x2 M=4 s-d squares (enumerate): " << trivial2.size() << "\n";
  EnumConfig cfg2u = cfg2;
  cfg2u.dedupe = Dedupe::up_to_equivalence;
  std::cout << "2x2 M=4 classes: " << enumerate_all(cfg2u).size() << "\n";
  EnumConfig cfg2n{.order = 2, .max_abs = 4};
  std::cout << "2x2 M=4 nontrivial: " << enumerate_all(cfg2n).size() << "\n";

  EnumConfig cfg1{.order = 1, .max_abs = 1};
  auto ones = enumerate_all(cfg1);
  std::cout << "1x1 M=1: " << ones.size() << " first cell "
            << (ones.empty() ? 0 : ones[0](0, 0)) << "\n";

  EnumConfig cfg3{.order = 3, .max_abs = 5, .dedupe = Dedupe::up_to_equivalence};
  auto threes = enumerate_all(cfg3);
  std::cout << "3x3 M=5 classes: " << threes.size() << "\n";
  for (auto& s : threes)
    std::cout << "  matches fig8a=" << (s == fixtures::fig8a())
              << " fig8b=" << (s == fixtures::fig8b()) << "\n";
  EnumConfig cfg3r{.order = 3, .max_abs = 5};
  auto threes_raw = enumerate_all(cfg3r);
  std::cout << "3x3 M=5 raw: " << threes_raw.size()
            << " bound ok: " << check_three_by_three_bound(threes_raw) << "\n";

  // Generic checks
  std::cout << "fig13a verify: " << generic_verify(fixtures::fig13a()).ok << "\n";
  std::cout << "fig13b verify: " << generic_verify(fixtures::fig13b()).ok << "\n";
  std::cout << "fig14r verify: " << generic_verify(fixtures::fig14r()).ok << "\n";
  std::cout << "fig12 verify: " << generic_verify(fixtures::fig12()).ok << " ("
            << generic_verify(fixtures::fig12()).reason << ")\n";
  auto fb12 = forbidden_values(fixtures::fig12());
  std::cout << "fig12 forbidden:";
  for (auto& v : fb12.single_variable_values) std::cout << " " << format_rational(v);
  std::cout << "\n";
  auto fb14 = forbidden_values(fixtures::fig14r());
  std::cout << "fig14r forbidden (" << fb14.single_variable_values.size() << "):";
  for (auto& v : fb14.single_variable_values) std::cout << " " << format_rational(v);
  std::cout << "\n";
  auto fb13 = forbidden_values(fixtures::fig13a());
  std::cout << "fig13a constraints: " << fb13.constraints.size() << "\n";
  for (auto& c : fb13.constraints) std::cout << "  " << format_expr(c) << " != 0\n";

  auto derived = derive_generic(fixtures::fig14l());
  std::cout << "derive(fig14l): " << derived.size() << " candidates, has fig14r: ";
  bool has = false;
  for (auto& g : derived) has = has || g == fixtures::fig14r();
  std::cout << has << "\n";
  std::cout << "derive(fig8a): " << derive_generic(fixtures::fig8a()).size() << "\n";
  std::cout << "derive(fig8b): " << derive_generic(fixtures::fig8b()).size() << "\n";

  return 0;
}
