#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hecke/rootsys.hpp"

using namespace hecke;

namespace {

RatVec random_vec(std::mt19937& rng, int dim, int denom) {
  std::uniform_int_distribution<int> num(-3 * denom, 3 * denom);
  RatVec v(dim);
  for (auto& x : v) x = make_rat(num(rng), denom);
  return v;
}

}  // namespace

TEST_CASE("root counts and pairings per type") {
  struct Row {
    CartanType t;
    int rank;
    std::size_t npos;
  };
  const Row rows[] = {{CartanType::A, 3, 6},  {CartanType::B, 3, 9},
                      {CartanType::C, 3, 9},  {CartanType::D, 4, 12},
                      {CartanType::G2, 2, 6}, {CartanType::F4, 4, 24}};
  for (const auto& r : rows) {
    CAPTURE(cartan_name(r.t));
    RootDatum rd = build(r.t, r.rank);
    CHECK(rd.positive_roots.size() == r.npos);
    CHECK(rd.positive_coroots.size() == r.npos);
    // coroot of a root pairs to 2 with it
    for (std::size_t i = 0; i < rd.positive_roots.size(); ++i)
      CHECK(rd.pairing(rd.positive_coroots[i], rd.positive_roots[i]) == Rat(2));
    // Cartan matrix entries are the simple pairings
    auto cm = cartan_matrix(rd);
    for (int i = 0; i < rd.rank; ++i) {
      for (int j = 0; j < rd.rank; ++j) {
        CHECK(cm.at(i, j) == rd.pairing(rd.simple_coroots[i], rd.simple_roots[j]));
        if (i == j) CHECK(cm.at(i, j) == Rat(2));
      }
    }
  }
}

TEST_CASE("simple reflections permute the other positive roots") {
  for (auto t : {CartanType::B, CartanType::G2}) {
    RootDatum rd = build(t, t == CartanType::G2 ? 2 : 3);
    for (int s = 0; s < rd.rank; ++s) {
      std::multiset<RatVec> before, after;
      for (std::size_t i = 0; i < rd.positive_roots.size(); ++i) {
        const RatVec& a = rd.positive_roots[i];
        if (a == rd.simple_roots[s]) continue;
        before.insert(a);
        after.insert(rd.reflect_simple(s, a));
      }
      CHECK(before == after);
    }
  }
}

TEST_CASE("weyl group orders and cap behavior") {
  CHECK(WeylGroup::enumerate(build(CartanType::A, 3))->size() == 24);
  CHECK(WeylGroup::enumerate(build(CartanType::B, 3))->size() == 48);
  CHECK(WeylGroup::enumerate(build(CartanType::D, 4))->size() == 192);
  CHECK(WeylGroup::enumerate(build(CartanType::G2, 2))->size() == 12);
  CHECK_THROWS_AS(WeylGroup::enumerate(build(CartanType::B, 4), 100), CapExceeded);
}

TEST_CASE("longest element: length, involution, action on positive roots") {
  for (auto [t, rank] : {std::pair{CartanType::A, 3}, {CartanType::B, 3},
                         {CartanType::C, 2}, {CartanType::D, 4}, {CartanType::G2, 2},
                         {CartanType::F4, 4}}) {
    CAPTURE(cartan_name(t));
    RootDatum rd = build(t, rank);
    WeylElement w0 = longest_element(rd);
    CHECK(w0.word.size() == rd.positive_roots.size());
    auto wg = WeylGroup::enumerate(rd, 2000);
    CHECK(wg->compose(wg->longest(), wg->longest()) == wg->identity());
    CHECK(wg->element(wg->longest()).matrix.a == w0.matrix.a);
    // w0 sends every positive root to a negative one
    for (const auto& a : rd.positive_roots) {
      RatVec img = act(w0, a);
      bool is_neg = std::any_of(rd.positive_roots.begin(), rd.positive_roots.end(),
                                [&](const RatVec& b) { return scale(Rat(-1), b) == img; });
      CHECK(is_neg);
    }
  }
}

TEST_CASE("minus identity is the longest element exactly for B, C, D4, G2, F4") {
  auto is_minus_id = [](const RootDatum& rd) {
    WeylElement w0 = longest_element(rd);
    for (int i = 0; i < rd.ambient_dim; ++i)
      for (int j = 0; j < rd.ambient_dim; ++j)
        if (w0.matrix.at(i, j) != (i == j ? Rat(-1) : Rat(0))) return false;
    return true;
  };
  CHECK(is_minus_id(build(CartanType::B, 3)));
  CHECK(is_minus_id(build(CartanType::C, 4)));
  CHECK(is_minus_id(build(CartanType::D, 4)));
  CHECK(is_minus_id(build(CartanType::G2, 2)));
  CHECK(is_minus_id(build(CartanType::F4, 4)));
  CHECK_FALSE(is_minus_id(build(CartanType::A, 2)));
  CHECK_FALSE(is_minus_id(build(CartanType::D, 5)));
}

TEST_CASE("make_dominant: reaches the dominant cone via a recorded element") {
  std::mt19937 rng(77);
  for (auto [t, rank] : {std::pair{CartanType::B, 3}, {CartanType::A, 4},
                         {CartanType::G2, 2}, {CartanType::F4, 4}}) {
    RootDatum rd = build(t, rank);
    for (int trial = 0; trial < 25; ++trial) {
      RatVec v = random_vec(rng, rd.ambient_dim, 4);
      auto [dom, w] = make_dominant(rd, Parameter{v});
      CHECK(rd.is_dominant(dom.chi));
      CHECK(act(w, v) == dom.chi);
      auto [again, w2] = make_dominant(rd, dom);
      CHECK(again.chi == dom.chi);
      CHECK(w2.word.empty());
    }
  }
}

TEST_CASE("weyl action preserves the inner product") {
  RootDatum rd = build(CartanType::B, 3);
  auto wg = WeylGroup::enumerate(rd);
  std::mt19937 rng(5);
  RatVec u = random_vec(rng, 3, 8), v = random_vec(rng, 3, 8);
  for (std::size_t i = 0; i < wg->size(); i += 7) {
    const WeylElement& w = wg->element(i);
    CHECK(dot(act(w, u), act(w, v)) == dot(u, v));
  }
}

TEST_CASE("composition table and element orders") {
  RootDatum rd = build(CartanType::G2, 2);
  auto wg = WeylGroup::enumerate(rd);
  // Coxeter element s0 s1 has order 6 in G2
  std::size_t cox = wg->right_simple(wg->simple(0), 1);
  CHECK(wg->element_order(cox) == 6);
  CHECK(wg->element_order(wg->identity()) == 1);
  CHECK(wg->element_order(wg->longest()) == 2);
  // inverse really inverts
  for (std::size_t i = 0; i < wg->size(); ++i)
    CHECK(wg->compose(i, wg->inverse(i)) == wg->identity());
}

TEST_CASE("reduced word sampling yields distinct words of equal length") {
  RootDatum rd = build(CartanType::B, 3);
  WeylElement w0 = longest_element(rd);
  auto words = all_reduced_words_sample(rd, w0, 4);
  CHECK(words.size() >= 2);
  std::set<std::vector<int>> uniq(words.begin(), words.end());
  CHECK(uniq.size() == words.size());
  for (const auto& word : words) {
    CHECK(word.size() == w0.word.size());
    CHECK(element_from_word(rd, word).matrix.a == w0.matrix.a);
  }
}

TEST_CASE("hermitian points") {
  CHECK(is_hermitian_point(build(CartanType::B, 2), Parameter{{Rat(1), make_rat(1, 2)}}));
  CHECK(is_hermitian_point(build(CartanType::A, 2),
                           Parameter{{make_rat(1, 2), Rat(0), make_rat(-1, 2)}}));
  CHECK_FALSE(is_hermitian_point(build(CartanType::A, 2),
                                 Parameter{{Rat(1), Rat(0), Rat(1)}}));
  // D5: w0 is not -1, the last coordinate must vanish
  CHECK(is_hermitian_point(build(CartanType::D, 5),
                           Parameter{vec_from_string("2,1,1,1,0")}));
  CHECK_FALSE(is_hermitian_point(build(CartanType::D, 5),
                                 Parameter{vec_from_string("2,1,1,1,1")}));
}

TEST_CASE("E-series data is present but not enumerable") {
  RootDatum e7 = build(CartanType::E7, 7);
  CHECK_FALSE(e7.weyl_enumerable());
  CHECK(e7.positive_roots.size() == 63);
  RootDatum e8 = build(CartanType::E8, 8);
  CHECK(e8.positive_roots.size() == 120);
  for (std::size_t i = 0; i < e8.positive_roots.size(); ++i)
    CHECK(e8.pairing(e8.positive_coroots[i], e8.positive_roots[i]) == Rat(2));
}

TEST_CASE("unsupported data requests throw") {
  CHECK_THROWS_AS(build(CartanType::G2, 3), UnsupportedDatum);
  CHECK_THROWS_AS(cartan_from_name("H3"), ParseError);
  CHECK(cartan_from_name("F4") == CartanType::F4);
}
