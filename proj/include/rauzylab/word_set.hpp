// Words over a finite alphabet and canonically ordered sets of them.

#ifndef RAUZYLAB_WORD_SET_HPP_
#define RAUZYLAB_WORD_SET_HPP_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rauzylab {

  //! A letter is a single character of the active alphabet.
  using Letter = char;

  //! A finite word; letters are stored left to right.
  using Word = std::string;

  //! Shortlex order: shorter words first, then lexicographic.
  struct ShortLex {
    bool operator()(std::string_view x, std::string_view y) const noexcept {
      return x.size() != y.size() ? x.size() < y.size() : x < y;
    }
  };

  //! A deduplicated set of words stored in shortlex order.
  //!
  //! Iteration order is canonical, so the position of a word (see index_of)
  //! is a stable index for matrix rows and columns downstream.
  class WordSet {
   public:
    using const_iterator = std::vector<Word>::const_iterator;

    WordSet() = default;
    explicit WordSet(std::vector<Word> words);
    WordSet(std::initializer_list<Word> words);

    //! Build from any range of words (duplicates allowed).
    template <typename Iterator>
    WordSet(Iterator first, Iterator last)
        : WordSet(std::vector<Word>(first, last)) {}

    [[nodiscard]] std::size_t size() const noexcept {
      return _words.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _words.empty();
    }
    [[nodiscard]] const_iterator begin() const noexcept {
      return _words.begin();
    }
    [[nodiscard]] const_iterator end() const noexcept {
      return _words.end();
    }
    [[nodiscard]] const Word& operator[](std::size_t i) const {
      return _words[i];
    }
    [[nodiscard]] const std::vector<Word>& words() const noexcept {
      return _words;
    }

    [[nodiscard]] bool contains(std::string_view w) const;

    //! Position of w in canonical order, if present.
    [[nodiscard]] std::optional<std::size_t> index_of(std::string_view w) const;

    //! Length of the shortest member; 0 for the empty set.
    [[nodiscard]] std::size_t min_length() const noexcept;

    //! true iff every member of this set is a member of other.
    [[nodiscard]] bool is_subset_of(WordSet const& other) const;

    friend bool operator==(WordSet const&, WordSet const&) = default;

   private:
    std::vector<Word> _words;
  };

  //! All length-m factors of members of s. Empty if every member is
  //! shorter than m.
  WordSet subwords(WordSet const& s, std::size_t m);

  //! Same as above for a single word.
  WordSet subwords(std::string_view w, std::size_t m);

  //! Set union.
  WordSet set_union(WordSet const& x, WordSet const& y);

  //! Number of occurrences of letter in w.
  std::size_t count_letter(std::string_view w, Letter letter) noexcept;

  //! Semicolon-joined members, in canonical order.
  std::string join(WordSet const& s, std::string_view sep = ";");

}  // namespace rauzylab

#endif  // RAUZYLAB_WORD_SET_HPP_
