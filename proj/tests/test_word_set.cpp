#include <doctest.h>

#include "rauzylab/word_set.hpp"

using namespace rauzylab;

TEST_CASE("WordSet keeps shortlex order without duplicates") {
  WordSet s{"ba", "a", "ab", "ba", "b", "aab"};
  CHECK(s.words() == std::vector<Word>{"a", "b", "ab", "ba", "aab"});
  CHECK(s.size() == 5);
  CHECK(s.min_length() == 1);
  CHECK(s.contains("ab"));
  CHECK_FALSE(s.contains("bb"));
  CHECK(s.index_of("ba") == 3);
  CHECK_FALSE(s.index_of("bb").has_value());
  CHECK(WordSet().min_length() == 0);
}

TEST_CASE("WordSet equality ignores input order") {
  CHECK(WordSet{"ab", "ba", "a"} == WordSet{"a", "ba", "ab", "ab"});
  CHECK(WordSet{"ab"} != WordSet{"ba"});
}

TEST_CASE("subwords") {
  CHECK(subwords(WordSet{"aba"}, 2) == WordSet{"ab", "ba"});
  CHECK(subwords(WordSet{"b"}, 2).empty());
  CHECK(subwords(WordSet{"aabba", "ab"}, 2) == WordSet{"aa", "ab", "bb", "ba"});
  CHECK(subwords("abab", 3) == WordSet{"aba", "bab"});
}

TEST_CASE("set operations") {
  WordSet x{"a", "ab"}, y{"ab", "bb"};
  CHECK(set_union(x, y) == WordSet{"a", "ab", "bb"});
  CHECK(x.is_subset_of(set_union(x, y)));
  CHECK_FALSE(x.is_subset_of(y));
  CHECK(join(WordSet{"b", "a"}) == "a;b");
  CHECK(count_letter("abaab", 'a') == 3);
}
