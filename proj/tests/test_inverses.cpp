#include <doctest.h>

#include "oracles.hpp"
#include "regcat/inverses.hpp"

using namespace regcat;
using oracle::error_of;
using oracle::Table;

namespace {

SetRef X3 = FiniteSet::range("X", 3);
SetRef Y2 = FiniteSet::range("Y", 2);
FinMap F("f", X3, Y2, {0, 0, 1});

std::vector<Table> tables_of(const std::vector<FinMap>& maps) {
  std::vector<Table> out;
  for (const auto& m : maps) out.push_back(m.table());
  return out;
}

// Calls fn(f) for every map between sets of sizes 0..max (excluding the
// impossible nonempty → empty case).
template <class Fn>
void every_map(std::size_t max, Fn fn) {
  for (std::size_t n = 0; n <= max; ++n)
    for (std::size_t m = 0; m <= max; ++m) {
      if (n > 0 && m == 0) continue;
      auto a = FiniteSet::range("A", n);
      auto b = FiniteSet::range("B", m);
      for (auto& t : oracle::all_tables(n, m)) fn(FinMap("f", a, b, t));
    }
}

}  // namespace

TEST_CASE("section_inner_inverse") {
  CHECK(section_inner_inverse(F).table() == Table{0, 2});
  CHECK(section_inner_inverse(identity(X3)) == identity(X3));
  FinMap perm("s", X3, X3, {2, 0, 1});
  CHECK(section_inner_inverse(perm).table() == Table{1, 2, 0});
  // Unreached codomain points go to index 0.
  FinMap k("k", Y2, X3, {2, 2});
  CHECK(section_inner_inverse(k).table() == Table{0, 0, 0});
  auto empty = FiniteSet::range("E", 0);
  CHECK(error_of([&] { section_inner_inverse(FinMap("z", empty, Y2, {})); }) == Errc::NoInverseExists);
  CHECK(section_inner_inverse(FinMap("z", empty, empty, {})).table().empty());
}

TEST_CASE("section_inner_inverse is always inner, sizes <= 4") {
  every_map(4, [](const FinMap& f) {
    if (f.dom()->empty() && !f.cod()->empty()) return;
    CHECK(is_inverse(f, section_inner_inverse(f), InverseKind::inner));
  });
}

TEST_CASE("enumerate_inverses examples") {
  auto in = enumerate_inverses(F, InverseKind::inner);
  CHECK(tables_of(in.maps) == std::vector<Table>{{0, 2}, {1, 2}});
  CHECK(in.count == 2);
  auto out = enumerate_inverses(F, InverseKind::outer);
  CHECK(tables_of(out.maps) == std::vector<Table>{{0, 0}, {0, 2}, {1, 1}, {1, 2}, {2, 2}});
  CHECK(out.count == 5);
  for (auto kind : {InverseKind::inner, InverseKind::generalized}) {
    auto id = enumerate_inverses(identity(X3), kind);
    REQUIRE(id.count == 1);
    CHECK(id.maps.front() == identity(X3));
  }
  // g∘Id∘g = g only asks g to be idempotent.
  auto id_outer = enumerate_inverses(identity(X3), InverseKind::outer);
  CHECK(id_outer.count == 10);
  for (const auto& g : id_outer.maps) CHECK(oracle::idempotent(g.table()));
}

TEST_CASE("enumerate_inverses matches brute force, sizes <= 3") {
  every_map(3, [](const FinMap& f) {
    const auto& t = f.table();
    const std::size_t n = f.dom()->size(), m = f.cod()->size();
    std::vector<Table> in, out, gen;
    for (auto& g : oracle::all_tables(m, n)) {
      bool i = oracle::inner(t, g), o = oracle::outer(t, g);
      if (i) in.push_back(g);
      if (o) out.push_back(g);
      if (i && o) gen.push_back(g);
    }
    auto li = enumerate_inverses(f, InverseKind::inner);
    auto lo = enumerate_inverses(f, InverseKind::outer);
    auto lg = enumerate_inverses(f, InverseKind::generalized);
    CHECK(tables_of(li.maps) == in);
    CHECK(tables_of(lo.maps) == out);
    CHECK(tables_of(lg.maps) == gen);
    CHECK(li.count == in.size());
    CHECK(inner_inverse_count(f) == in.size());
  });
}

TEST_CASE("enumerate_inverses limits and bounds") {
  auto lim = enumerate_inverses(F, InverseKind::outer, 2);
  CHECK(lim.maps.size() == 2);
  CHECK(lim.count == 5);
  CHECK(lim.truncated);
  auto none = enumerate_inverses(F, InverseKind::inner, 0);
  CHECK(none.maps.empty());
  CHECK(none.truncated);
  auto big = FiniteSet::range("B", 12);
  auto wide = FiniteSet::range("W", 9);
  FinMap f("f", big, wide, {0, 1, 2, 3, 4, 5, 6, 7, 8, 0, 0, 0});
  // 12^9 ≈ 5·10⁹ candidates.
  CHECK(error_of([&] { enumerate_inverses(f, InverseKind::outer); }) == Errc::SearchSpaceTooLarge);
  CHECK(enumerate_inverses(f, InverseKind::outer, 3).maps.size() == 3);
  CHECK(error_of([&] { enumerate_inverses(F, InverseKind::inner, std::nullopt, 8); }) ==
        Errc::SearchSpaceTooLarge);
}

TEST_CASE("is_inverse") {
  FinMap g("g", Y2, X3, {0, 2});
  FinMap k("k", Y2, X3, {0, 0});
  CHECK(is_inverse(F, g, InverseKind::inner));
  CHECK_FALSE(is_inverse(F, k, InverseKind::inner));
  CHECK(is_inverse(F, k, InverseKind::outer));
  CHECK_FALSE(is_inverse(F, k, InverseKind::generalized));
  CHECK(is_inverse(identity(X3), identity(X3), InverseKind::generalized));
  CHECK(error_of([&] { is_inverse(F, F, InverseKind::inner); }) == Errc::TypeMismatch);
}

TEST_CASE("generalized_from_inner") {
  CHECK(generalized_from_inner(F, FinMap("g", Y2, X3, {1, 2})).table() == Table{1, 2});
  CHECK(generalized_from_inner(F, FinMap("g", Y2, X3, {0, 2})).table() == Table{0, 2});
  CHECK(generalized_from_inner(identity(X3), identity(X3)) == identity(X3));
  CHECK(error_of([&] { generalized_from_inner(F, FinMap("k", Y2, X3, {0, 0})); }) ==
        Errc::NotAnInnerInverse);
  // An inner inverse that is not outer gets repaired.
  auto two = FiniteSet::range("T", 2);
  FinMap c("c", two, two, {0, 0});
  FinMap g("g", two, two, {0, 1});
  REQUIRE(is_inverse(c, g, InverseKind::inner));
  CHECK_FALSE(is_inverse(c, g, InverseKind::outer));
  FinMap s = generalized_from_inner(c, g);
  CHECK(s.table() == Table{0, 0});
  CHECK(is_inverse(c, s, InverseKind::generalized));
}

TEST_CASE("generalized_from_inner is generalized for every inner inverse, sizes <= 3") {
  every_map(3, [](const FinMap& f) {
    for (const auto& g : enumerate_inverses(f, InverseKind::inner).maps) {
      Table s = generalized_from_inner(f, g).table();
      CHECK(oracle::inner(f.table(), s));
      CHECK(oracle::outer(f.table(), s));
    }
  });
}

TEST_CASE("projectors") {
  auto p = projectors(F, FinMap("g", Y2, X3, {0, 2}));
  CHECK(p.p_f == identity(Y2));
  CHECK(p.p_fstar.table() == Table{0, 0, 2});
  CHECK(p.p_f_idempotent);
  CHECK(p.p_fstar_idempotent);
  CHECK(p.p_f_absorbs);
  CHECK(p.p_fstar_absorbs);
  CHECK(p.fstar_absorbs);
  auto q = projectors(F, FinMap("g", Y2, X3, {1, 2}));
  CHECK(q.p_fstar.table() == Table{1, 1, 2});
  CHECK(q.p_fstar_idempotent);
  auto id = projectors(identity(X3), identity(X3));
  CHECK(id.p_f == identity(X3));
  CHECK(id.p_fstar == identity(X3));
  CHECK(error_of([&] { projectors(F, F); }) == Errc::TypeMismatch);
}

TEST_CASE("projector laws for every generalized pair, sizes <= 3") {
  every_map(3, [](const FinMap& f) {
    for (const auto& g : enumerate_inverses(f, InverseKind::generalized).maps) {
      auto p = projectors(f, g);
      CHECK(oracle::idempotent(p.p_f.table()));
      CHECK(oracle::idempotent(p.p_fstar.table()));
      CHECK(oracle::after(p.p_f.table(), f.table()) == f.table());
      CHECK(oracle::after(f.table(), p.p_fstar.table()) == f.table());
      CHECK(oracle::after(p.p_fstar.table(), g.table()) == g.table());
      CHECK(p.p_f_idempotent);
      CHECK(p.p_fstar_idempotent);
      CHECK(p.p_f_absorbs);
      CHECK(p.p_fstar_absorbs);
      CHECK(p.fstar_absorbs);
    }
  });
}

TEST_CASE("invertibility_class") {
  auto c = invertibility_class(F);
  CHECK(c.retraction);
  CHECK_FALSE(c.coretraction);
  REQUIRE(c.retraction_witness);
  CHECK(c.retraction_witness->table() == Table{0, 2});

  FinMap j("j", Y2, X3, {0, 2});
  auto d = invertibility_class(j);
  CHECK_FALSE(d.retraction);
  CHECK(d.coretraction);
  REQUIRE(d.coretraction_witness);
  CHECK(compose(*d.coretraction_witness, j) == identity(Y2));
  CHECK(d.coretraction_witness->table() == Table{0, 0, 1});

  FinMap s("s", X3, X3, {1, 2, 0});
  auto b = invertibility_class(s);
  CHECK(b.retraction);
  CHECK(b.coretraction);
}

TEST_CASE("retraction and coretraction by exhaustive witness search, sizes <= 3") {
  every_map(3, [](const FinMap& f) {
    const std::size_t n = f.dom()->size(), m = f.cod()->size();
    bool retr = false, coretr = false;
    for (auto& g : oracle::all_tables(m, n)) {
      if (oracle::after(f.table(), g) == oracle::ident(m)) retr = true;
      if (oracle::after(g, f.table()) == oracle::ident(n)) coretr = true;
    }
    auto c = invertibility_class(f);
    CHECK(c.retraction == retr);
    CHECK(c.coretraction == coretr);
    // A retraction is an epimorphism, a coretraction a monomorphism.
    if (c.retraction) {
      CHECK(classify_map(f).surjective);
      CHECK(compose(f, *c.retraction_witness) == identity(f.cod()));
    }
    if (c.coretraction) {
      CHECK(classify_map(f).injective);
      CHECK(compose(*c.coretraction_witness, f) == identity(f.dom()));
    }
  });
}

TEST_CASE("composition propositions, sizes <= 3") {
  // For g: A→B, f: B→C and h inner for f∘g:
  //   g onto  ⇒ g∘h is inner for f (cancel g on the right);
  //   f 1-1   ⇒ h∘f is inner for g (cancel f on the left).
  std::vector<SetRef> sets{FiniteSet::range("S1", 1), FiniteSet::range("S2", 2), FiniteSet::range("S3", 3)};
  std::size_t epi_cases = 0, mono_cases = 0;
  for (auto& a : sets)
    for (auto& b : sets)
      for (auto& c : sets)
        for (auto& gt : oracle::all_tables(a->size(), b->size()))
          for (auto& ft : oracle::all_tables(b->size(), c->size())) {
            FinMap g("g", a, b, gt);  // A → B
            FinMap f("f", b, c, ft);  // B → C
            FinMap fg = compose(f, g);
            FinMap h = section_inner_inverse(fg);
            REQUIRE(is_inverse(fg, h, InverseKind::inner));
            if (classify_map(g).surjective) {
              CHECK(is_inverse(f, compose(g, h), InverseKind::inner));
              ++epi_cases;
            }
            if (classify_map(f).injective) {
              CHECK(is_inverse(g, compose(h, f), InverseKind::inner));
              ++mono_cases;
            }
          }
  CHECK(epi_cases > 0);
  CHECK(mono_cases > 0);
}

TEST_CASE("closure_composite") {
  auto z = FiniteSet::range("Z", 3);
  auto r = closure_composite(identity(X3), identity(X3), identity(X3), identity(X3));
  CHECK(r.projectors_commute);
  CHECK(r.composite_regular);
  CHECK(r.composite_star == identity(X3));

  FinMap fs("fs", Y2, X3, {0, 2});
  auto s = closure_composite(F, fs, identity(Y2), identity(Y2));
  CHECK(s.projectors_commute);
  CHECK(s.composite_regular);
  CHECK(s.composite_star.table() == Table{0, 2});

  CHECK(error_of([&] { closure_composite(F, fs, F, fs); }) == Errc::TypeMismatch);
}

TEST_CASE("commuting projectors give a regular composite, sizes <= 2") {
  // The full sizes <= 3 sweep runs in the acceptance binary.
  std::vector<SetRef> sets{FiniteSet::range("S1", 1), FiniteSet::range("S2", 2)};
  for (auto& a : sets)
    for (auto& b : sets)
      for (auto& c : sets)
        for (auto& ft : oracle::all_tables(a->size(), b->size()))
          for (auto& gt : oracle::all_tables(b->size(), c->size())) {
            FinMap f("f", a, b, ft), g("g", b, c, gt);
            for (auto& fs : enumerate_inverses(f, InverseKind::generalized).maps)
              for (auto& gs : enumerate_inverses(g, InverseKind::generalized).maps) {
                auto r = closure_composite(f, fs, g, gs);
                Table gf = oracle::after(gt, ft);
                Table star = oracle::after(fs.table(), gs.table());
                CHECK(r.composite_star.table() == star);
                CHECK(r.composite_regular == (oracle::inner(gf, star) && oracle::outer(gf, star)));
                if (r.projectors_commute) CHECK(r.composite_regular);
              }
          }
}

TEST_CASE("unique_generalized_inverse") {
  CHECK(unique_generalized_inverse(identity(X3)));
  CHECK(unique_generalized_inverse(FinMap("s", X3, X3, {2, 0, 1})));
  CHECK_FALSE(unique_generalized_inverse(F));
  every_map(3, [](const FinMap& f) {
    std::size_t n = 0;
    for (auto& g : oracle::all_tables(f.cod()->size(), f.dom()->size())) {
      if (oracle::inner(f.table(), g) && oracle::outer(f.table(), g)) ++n;
    }
    CHECK(unique_generalized_inverse(f) == (n == 1));
  });
}
