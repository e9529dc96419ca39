#include "rauzylab/word_set.hpp"

#include <algorithm>
#include <iterator>

namespace rauzylab {

  WordSet::WordSet(std::vector<Word> words) : _words(std::move(words)) {
    std::sort(_words.begin(), _words.end(), ShortLex());
    _words.erase(std::unique(_words.begin(), _words.end()), _words.end());
  }

  WordSet::WordSet(std::initializer_list<Word> words)
      : WordSet(std::vector<Word>(words)) {}

  bool WordSet::contains(std::string_view w) const {
    return std::binary_search(_words.begin(), _words.end(), w, ShortLex());
  }

  std::optional<std::size_t> WordSet::index_of(std::string_view w) const {
    auto it = std::lower_bound(_words.begin(), _words.end(), w, ShortLex());
    if (it == _words.end() || *it != w) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - _words.begin());
  }

  std::size_t WordSet::min_length() const noexcept {
    return _words.empty() ? 0 : _words.front().size();
  }

  bool WordSet::is_subset_of(WordSet const& other) const {
    return std::includes(other._words.begin(),
                         other._words.end(),
                         _words.begin(),
                         _words.end(),
                         ShortLex());
  }

  WordSet subwords(WordSet const& s, std::size_t m) {
    std::vector<Word> out;
    for (auto const& w : s) {
      for (std::size_t i = 0; i + m <= w.size(); ++i) {
        out.emplace_back(w, i, m);
      }
    }
    return WordSet(std::move(out));
  }

  WordSet subwords(std::string_view w, std::size_t m) {
    std::vector<Word> out;
    for (std::size_t i = 0; i + m <= w.size(); ++i) {
      out.emplace_back(w.substr(i, m));
    }
    return WordSet(std::move(out));
  }

  WordSet set_union(WordSet const& x, WordSet const& y) {
    std::vector<Word> out;
    out.reserve(x.size() + y.size());
    std::set_union(x.begin(),
                   x.end(),
                   y.begin(),
                   y.end(),
                   std::back_inserter(out),
                   ShortLex());
    return WordSet(std::move(out));
  }

  std::size_t count_letter(std::string_view w, Letter letter) noexcept {
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), letter));
  }

  std::string join(WordSet const& s, std::string_view sep) {
    std::string out;
    bool first = true;
    for (auto const& w : s) {
      if (!first) {
        out += sep;
      }
      out += w;
      first = false;
    }
    return out;
  }

}  // namespace rauzylab
