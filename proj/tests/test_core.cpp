#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "helpers.hpp"
#include "ulw/core.hpp"
#include "ulw/word.hpp"

using namespace ulw;
using helpers::O;
using helpers::W;

TEST_CASE("word parsing and formatting") {
  Word w = W("212313");
  CHECK(w.degree() == 3);
  CHECK(w.size() == 6);
  CHECK(w.str() == "212313");

  Word big = Word::parse("1,2,10,3");
  CHECK(big.degree() == 10);
  CHECK(big.size() == 4);
  CHECK(big.str() == "1,2,10,3");

  CHECK(W("12", 4).degree() == 4);
  CHECK_THROWS_AS(Word::parse("12x3"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("120"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("1,0,2"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("123", 2), std::invalid_argument);

  // position diagnostics name the offending character
  try {
    Word::parse("12x3");
    CHECK(false);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("position 3") != std::string::npos);
  }
}

TEST_CASE("orders") {
  TotalOrder order = O({2, 1, 3});
  CHECK(order.str() == "2<1<3");
  CHECK(order.rank(2) == 0);
  CHECK(order.rank(3) == 2);
  CHECK(all_orders(3).size() == 6);
  CHECK_THROWS_AS(TotalOrder({1, 1, 2}), std::domain_error);

  PartialAlphabetOrder partial({2, 1}, 3);
  CHECK(partial.size() == 2);
  CHECK(partial.is_total());
  CHECK(partial.to_total() == O({2, 1, 3}));
  CHECK(partial.prefix_of(O({2, 1, 3})));
  CHECK(!partial.prefix_of(O({2, 3, 1})));
  CHECK(!PartialAlphabetOrder({2}, 4).is_total());
  CHECK_THROWS_AS(PartialAlphabetOrder({2, 2}, 3), std::domain_error);
  CHECK_THROWS_AS(PartialAlphabetOrder({4}, 3), std::domain_error);
  CHECK_THROWS_AS(PartialAlphabetOrder({2}, 4).to_total(), std::domain_error);
}

TEST_CASE("compare_lex") {
  TotalOrder order132 = O({1, 3, 2});
  CHECK(compare_lex(W("123122"), W("221231"), order132) == std::strong_ordering::less);
  CHECK(compare_lex(W("12", 3), W("123"), order132) == std::strong_ordering::less);
  CHECK(compare_lex(W("13"), W("12", 3), order132) == std::strong_ordering::less);
  CHECK(compare_lex(W("12", 3), W("12", 3), order132) == std::strong_ordering::equal);
  CHECK_THROWS_AS(compare_lex(W("12"), W("123"), order132), std::domain_error);
}

TEST_CASE("compare_lex is a strict total order") {
  for (const TotalOrder& order : all_orders(3)) {
    std::vector<Word> words;
    for (std::size_t len = 0; len <= 4; ++len)
      helpers::for_all_words(3, len, [&](const Word& w) { words.push_back(w); });
    for (const Word& u : words) {
      for (const Word& v : words) {
        auto uv = compare_lex(u, v, order);
        auto vu = compare_lex(v, u, order);
        CHECK((uv == std::strong_ordering::equal) == (u == v));
        CHECK((uv == std::strong_ordering::less) == (vu == std::strong_ordering::greater));
      }
    }
    // transitivity via sort consistency
    std::vector<Word> sorted = words;
    std::sort(sorted.begin(), sorted.end(), [&](const Word& a, const Word& b) {
      return compare_lex(a, b, order) == std::strong_ordering::less;
    });
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
      CHECK(compare_lex(sorted[i], sorted[i + 1], order) != std::strong_ordering::greater);
  }
}

TEST_CASE("conjugates") {
  CHECK(helpers::strs(conjugates(W("12"))) == std::vector<std::string>{"12", "21"});
  CHECK(helpers::strs(conjugates(W("212313"))) ==
        std::vector<std::string>{"212313", "123132", "231321", "313212", "132123", "321231"});
  CHECK(helpers::strs(conjugates(W("11"))) == std::vector<std::string>{"11", "11"});
  CHECK_THROWS_AS(conjugates(Word({}, 2)), std::domain_error);
}

TEST_CASE("count_occurrences") {
  Word w = W("122211");
  CHECK(count_occurrences(w, W("11", 2), false) == 1);
  CHECK(count_occurrences(w, W("22", 2), false) == 2);
  CHECK(count_occurrences(w, W("11", 2), true) == 2);
  CHECK(count_occurrences(w, W("2211", 2), true) == 1);
  CHECK_THROWS_AS(count_occurrences(w, Word({}, 2), false), std::domain_error);
  CHECK_THROWS_AS(count_occurrences(W("12"), W("121", 2), true), std::domain_error);
}

TEST_CASE("cyclic occurrence properties") {
  // a word is a cyclic factor iff it is a factor of some conjugate, and the
  // single-letter cyclic counts add up to the length
  helpers::for_all_words(2, 5, [&](const Word& w) {
    std::size_t total = 0;
    for (Letter a = 1; a <= 2; ++a) total += count_occurrences(w, Word({a}, 2), true);
    CHECK(total == w.size());
    helpers::for_all_words(2, 3, [&](const Word& u) {
      bool cyclic = count_occurrences(w, u, true) > 0;
      bool in_conjugate = false;
      for (const Word& c : conjugates(w))
        in_conjugate = in_conjugate || count_occurrences(c, u, false) > 0;
      CHECK(cyclic == in_conjugate);
    });
  });
}

TEST_CASE("defined_order") {
  CHECK(defined_order(W("123122")).chain() == std::vector<Letter>{1, 2, 3});
  CHECK(defined_order(W("123122")).is_total());
  CHECK(defined_order(Word({}, 3)).size() == 0);
  PartialAlphabetOrder p = defined_order(W("212", 3));
  CHECK(p.chain() == std::vector<Letter>{2, 1});
  CHECK(p.size() == 2);

  // the chain always lists exactly the alphabet of the word
  helpers::for_all_words(3, 4, [&](const Word& w) {
    PartialAlphabetOrder q = defined_order(w);
    std::uint32_t mask = 0;
    for (Letter a : q.chain()) mask |= 1u << (a - 1);
    CHECK(mask == w.alphabet_mask());
  });
}

TEST_CASE("is_lyndon") {
  CHECK(is_lyndon(W("123122"), O({1, 3, 2})));
  CHECK(!is_lyndon(W("123122"), O({1, 2, 3})));
  CHECK(!is_lyndon(W("11", 2), O({1, 2})));
  CHECK(is_lyndon(W("1"), O({1})));
  CHECK_THROWS_AS(is_lyndon(W("12"), O({1, 2, 3})), std::domain_error);
}

TEST_CASE("is_lyndon agrees with the proper-suffix characterization on primitive words") {
  for (const TotalOrder& order : all_orders(3)) {
    helpers::for_all_words(3, 6, [&](const Word& w) {
      bool conj_form = is_lyndon(w, order);
      bool suffix_form = true;
      for (std::size_t i = 1; i < w.size() && suffix_form; ++i) {
        Word suffix(std::vector<Letter>(w.letters().begin() + static_cast<long>(i),
                                        w.letters().end()),
                    w.degree());
        suffix_form = compare_lex(w, suffix, order) == std::strong_ordering::less;
      }
      if (word_predicates(w).primitive) {
        CHECK(conj_form == suffix_form);
      } else {
        CHECK(!conj_form);
      }
    });
  }
}

TEST_CASE("lyndon_orders") {
  std::vector<TotalOrder> orders = lyndon_orders(W("212313"));
  REQUIRE(orders.size() == 1);
  CHECK(orders[0] == O({2, 1, 3}));

  orders = lyndon_orders(W(fixtures::kDoubleOrderConjugate));
  REQUIRE(orders.size() == 2);
  CHECK(orders[0] == O({3, 1, 2, 4}));
  CHECK(orders[1] == O({3, 1, 4, 2}));

  CHECK(lyndon_orders(W("11")).empty());
  CHECK_THROWS_AS(lyndon_orders(W("1", 9)), capacity_error);
}

TEST_CASE("word_predicates") {
  WordPredicates p = word_predicates(W("212313"));
  CHECK(p.primitive);
  CHECK(p.unbordered);
  CHECK(p.cyclically_square_free);

  p = word_predicates(W("1212"));
  CHECK(!p.primitive);
  CHECK(!p.unbordered);
  CHECK(!p.cyclically_square_free);

  p = word_predicates(W("121"));
  CHECK(p.primitive);
  CHECK(!p.unbordered);
  CHECK(!p.cyclically_square_free);
}

TEST_CASE("lyndon words are primitive and unbordered") {
  for (const TotalOrder& order : all_orders(2)) {
    for (std::size_t len = 1; len <= 8; ++len) {
      helpers::for_all_words(2, len, [&](const Word& w) {
        if (!is_lyndon(w, order)) return;
        WordPredicates p = word_predicates(w);
        CHECK(p.primitive);
        CHECK(p.unbordered);
      });
    }
  }
}

TEST_CASE("is_prefix_code") {
  CHECK(!is_prefix_code({W("12"), W("122")}));
  CHECK(is_prefix_code({W("12"), W("13"), W("21"), W("23"), W("31"), W("32")}));
  CHECK(is_prefix_code({W("1")}));
  CHECK(is_prefix_code({W("13", 3), W("23", 3), W("112", 3), W("113", 3), W("221", 3), W("223", 3)}));
  CHECK_THROWS_AS(is_prefix_code({Word({}, 2), W("1", 2)}), std::domain_error);
}
