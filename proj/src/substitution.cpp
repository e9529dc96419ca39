#include "rauzylab/substitution.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "rauzylab/errors.hpp"

namespace rauzylab {

  namespace {

    std::string letter_str(Letter x) {
      return std::string(1, x);
    }

    Rational parse_rational(std::string const& text) {
      Rational q;
      if (q.set_str(text, 10) != 0) {
        throw InvalidRule("cannot parse probability \"" + text + "\"");
      }
      q.canonicalize();
      return q;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // RandomSubstitution
  ////////////////////////////////////////////////////////////////////////

  RandomSubstitution::RandomSubstitution(
      std::vector<Letter>          alphabet,
      Realizations                 realizations,
      std::optional<Probabilities> probabilities)
      : _alphabet(std::move(alphabet)),
        _realizations(std::move(realizations)),
        _probabilities(std::move(probabilities)) {
    std::sort(_alphabet.begin(), _alphabet.end());
    if (std::adjacent_find(_alphabet.begin(), _alphabet.end())
        != _alphabet.end()) {
      throw InvalidRule("the alphabet contains a repeated letter");
    }
    if (_alphabet.empty()) {
      throw InvalidRule("the alphabet is empty");
    }
    if (_realizations.size() != _alphabet.size()) {
      throw InvalidRule("every letter needs exactly one realization list");
    }
    for (Letter x : _alphabet) {
      auto it = _realizations.find(x);
      if (it == _realizations.end() || it->second.empty()) {
        throw InvalidRule("letter " + letter_str(x)
                          + " has no realizations");
      }
      for (auto const& w : it->second) {
        if (w.empty()) {
          throw InvalidRule("letter " + letter_str(x)
                            + " has an empty realization");
        }
        for (Letter y : w) {
          if (!in_alphabet(y)) {
            throw InvalidRule("realization \"" + w
                              + "\" uses a letter outside the alphabet");
          }
        }
      }
    }
    if (!_probabilities) {
      return;
    }
    if (_probabilities->size() != _alphabet.size()) {
      throw InvalidRule("every letter needs a probability vector");
    }
    for (Letter x : _alphabet) {
      auto it = _probabilities->find(x);
      if (it == _probabilities->end()) {
        throw InvalidRule("letter " + letter_str(x)
                          + " has no probability vector");
      }
      if (it->second.size() != _realizations[x].size()) {
        throw InvalidRule("probability vector of " + letter_str(x)
                          + " does not match the number of realizations");
      }
      Rational total = 0;
      for (auto const& q : it->second) {
        if (q < 0) {
          throw InvalidRule("negative probability for letter "
                            + letter_str(x));
        }
        total += q;
      }
      if (total != 1) {
        throw InvalidRule("probabilities of " + letter_str(x)
                          + " sum to " + total.get_str() + ", not 1");
      }
    }
  }

  bool RandomSubstitution::in_alphabet(Letter x) const noexcept {
    return std::binary_search(_alphabet.begin(), _alphabet.end(), x);
  }

  std::vector<Word> const& RandomSubstitution::realizations(Letter x) const {
    auto it = _realizations.find(x);
    if (it == _realizations.end()) {
      throw InvalidWord("letter " + letter_str(x) + " is not in the alphabet");
    }
    return it->second;
  }

  std::vector<Rational> const&
  RandomSubstitution::probabilities(Letter x) const {
    if (!_probabilities) {
      throw ConfigurationError("the rule carries no probability vectors");
    }
    auto it = _probabilities->find(x);
    if (it == _probabilities->end()) {
      throw InvalidWord("letter " + letter_str(x) + " is not in the alphabet");
    }
    return it->second;
  }

  void RandomSubstitution::validate(std::string_view w) const {
    if (w.empty()) {
      throw InvalidWord("the empty word is not allowed here");
    }
    for (Letter x : w) {
      if (!in_alphabet(x)) {
        throw InvalidWord("letter " + letter_str(x)
                          + " is not in the alphabet");
      }
    }
  }

  std::size_t RandomSubstitution::min_image_length() const noexcept {
    std::size_t result = SIZE_MAX;
    for (auto const& [x, images] : _realizations) {
      for (auto const& w : images) {
        result = std::min(result, w.size());
      }
    }
    return result;
  }

  bool RandomSubstitution::same_support(RandomSubstitution const& other) const {
    if (_alphabet != other._alphabet) {
      return false;
    }
    for (Letter x : _alphabet) {
      auto const& mine   = _realizations.at(x);
      auto const& theirs = other._realizations.at(x);
      if (WordSet(mine.begin(), mine.end())
          != WordSet(theirs.begin(), theirs.end())) {
        return false;
      }
    }
    return true;
  }

  bool RandomSubstitution::is_random_fibonacci() const {
    return same_support(fibonacci_rule());
  }

  ////////////////////////////////////////////////////////////////////////
  // Built-in rules
  ////////////////////////////////////////////////////////////////////////

  RandomSubstitution fibonacci_rule(Rational p) {
    p.canonicalize();
    return RandomSubstitution({'a', 'b'},
                              {{'a', {"ba", "ab"}}, {'b', {"a"}}},
                              RandomSubstitution::Probabilities{
                                  {'a', {p, Rational(1) - p}},
                                  {'b', {Rational(1)}}});
  }

  RandomSubstitution
  noble_means_rule(std::size_t                          m,
                   std::optional<std::vector<Rational>> probabilities) {
    if (m == 0) {
      throw InvalidRule("noble means rules need m >= 1");
    }
    std::vector<Word> images;
    for (std::size_t i = 0; i <= m; ++i) {
      Word w(m, 'a');
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(i), 'b');
      images.push_back(std::move(w));
    }
    std::optional<RandomSubstitution::Probabilities> probs;
    if (probabilities) {
      if (probabilities->size() != m + 1) {
        throw InvalidRule("noble means rule with m = " + std::to_string(m)
                          + " needs " + std::to_string(m + 1)
                          + " probabilities");
      }
      probs = RandomSubstitution::Probabilities{
          {'a', std::move(*probabilities)}, {'b', {Rational(1)}}};
    }
    return RandomSubstitution(
        {'a', 'b'}, {{'a', std::move(images)}, {'b', {"a"}}}, std::move(probs));
  }

  RandomSubstitution deterministic_fibonacci_rule() {
    return RandomSubstitution(
        {'a', 'b'},
        {{'a', {"ab"}}, {'b', {"a"}}},
        RandomSubstitution::Probabilities{{'a', {Rational(1)}},
                                          {'b', {Rational(1)}}});
  }

  RandomSubstitution thue_morse_rule() {
    return RandomSubstitution(
        {'a', 'b'},
        {{'a', {"ab"}}, {'b', {"ba"}}},
        RandomSubstitution::Probabilities{{'a', {Rational(1)}},
                                          {'b', {Rational(1)}}});
  }

  ////////////////////////////////////////////////////////////////////////
  // Inflation
  ////////////////////////////////////////////////////////////////////////

  WordSet all_inflations(RandomSubstitution const& rule, std::string_view w) {
    rule.validate(w);
    std::vector<Word> partial = {Word()};
    for (Letter x : w) {
      auto const&       images = rule.realizations(x);
      std::vector<Word> next;
      next.reserve(partial.size() * images.size());
      for (auto const& prefix : partial) {
        for (auto const& image : images) {
          next.push_back(prefix + image);
        }
      }
      // Dedup as we go; distinct choices can give equal prefixes.
      partial = WordSet(std::move(next)).words();
    }
    return WordSet(std::move(partial));
  }

  WordSet all_inflations(RandomSubstitution const& rule,
                         std::string_view          w,
                         std::size_t               k) {
    rule.validate(w);
    WordSet current{Word(w)};
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Word> next;
      for (auto const& u : current) {
        auto images = all_inflations(rule, u);
        next.insert(next.end(), images.begin(), images.end());
      }
      current = WordSet(std::move(next));
    }
    return current;
  }

  std::vector<Word> sample_inflation_rounds(RandomSubstitution const& rule,
                                            std::string_view          w,
                                            std::size_t               k,
                                            std::uint64_t             seed) {
    rule.validate(w);
    if (!rule.has_probabilities()) {
      throw ConfigurationError("sampling needs a rule with probabilities");
    }
    std::map<Letter, std::vector<double>> cumulative;
    for (Letter x : rule.alphabet()) {
      Rational             acc = 0;
      std::vector<double>& table = cumulative[x];
      for (auto const& q : rule.probabilities(x)) {
        acc += q;
        table.push_back(acc.get_d());
      }
    }

    std::mt19937_64   rng(seed);
    std::vector<Word> rounds = {Word(w)};
    rounds.reserve(k + 1);
    for (std::size_t round = 0; round < k; ++round) {
      Word const& current = rounds.back();
      Word        next;
      for (Letter x : current) {
        auto const& images = rule.realizations(x);
        if (images.size() == 1) {
          next += images.front();
          continue;
        }
        double const u     = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        auto const&  table = cumulative[x];
        std::size_t  i     = 0;
        while (i + 1 < table.size() && !(u < table[i])) {
          ++i;
        }
        next += images[i];
      }
      rounds.push_back(std::move(next));
    }
    return rounds;
  }

  Word sample_inflation(RandomSubstitution const& rule,
                        std::string_view          w,
                        std::size_t               k,
                        std::uint64_t             seed) {
    return sample_inflation_rounds(rule, w, k, seed).back();
  }

  ////////////////////////////////////////////////////////////////////////
  // Text forms
  ////////////////////////////////////////////////////////////////////////

  RandomSubstitution parse_rule(std::string_view json_text) {
    using nlohmann::json;
    json doc;
    try {
      doc = json::parse(json_text);
    } catch (json::parse_error const& e) {
      throw InvalidRule(std::string("malformed rule JSON: ") + e.what());
    }
    auto as_letter = [](std::string const& s) {
      if (s.size() != 1) {
        throw InvalidRule("letters must be single characters, got \"" + s
                          + "\"");
      }
      return s.front();
    };
    try {
      std::vector<Letter> alphabet;
      for (auto const& x : doc.at("alphabet")) {
        alphabet.push_back(as_letter(x.get<std::string>()));
      }
      RandomSubstitution::Realizations realizations;
      for (auto const& [key, images] : doc.at("rules").items()) {
        auto& list = realizations[as_letter(key)];
        for (auto const& image : images) {
          Word w;
          for (auto const& x : image) {
            w += as_letter(x.get<std::string>());
          }
          list.push_back(std::move(w));
        }
      }
      std::optional<RandomSubstitution::Probabilities> probabilities;
      if (doc.contains("probabilities")) {
        probabilities.emplace();
        for (auto const& [key, values] : doc.at("probabilities").items()) {
          auto& list = (*probabilities)[as_letter(key)];
          for (auto const& v : values) {
            list.push_back(v.is_string() ? parse_rational(v.get<std::string>())
                                         : parse_rational(v.dump()));
          }
        }
      }
      return RandomSubstitution(std::move(alphabet),
                                std::move(realizations),
                                std::move(probabilities));
    } catch (json::exception const& e) {
      throw InvalidRule(std::string("malformed rule JSON: ") + e.what());
    }
  }

  RandomSubstitution load_rule_file(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw IoError("cannot open rule file " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_rule(buffer.str());
  }

  RandomSubstitution rule_from_name(std::string_view name) {
    if (name == "fib") {
      return fibonacci_rule();
    }
    if (name == "fib-det") {
      return deterministic_fibonacci_rule();
    }
    if (name == "thue-morse") {
      return thue_morse_rule();
    }
    constexpr std::string_view prefix = "noble:";
    if (name.substr(0, prefix.size()) == prefix) {
      auto        digits = name.substr(prefix.size());
      std::size_t m      = 0;
      auto [ptr, ec]
          = std::from_chars(digits.data(), digits.data() + digits.size(), m);
      if (ec != std::errc() || ptr != digits.data() + digits.size()
          || digits.empty()) {
        throw InvalidRule("cannot parse rule name \"" + std::string(name)
                          + "\"");
      }
      if (m == 0) {
        throw InvalidRule("noble means rules need m >= 1");
      }
      return noble_means_rule(
          m, std::vector<Rational>(m + 1, Rational(1, m + 1)));
    }
    throw InvalidRule("unknown rule \"" + std::string(name) + "\"");
  }

  std::string to_json(RandomSubstitution const& rule) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["alphabet"] = ordered_json::array();
    for (Letter x : rule.alphabet()) {
      doc["alphabet"].push_back(letter_str(x));
    }
    for (Letter x : rule.alphabet()) {
      auto& list = doc["rules"][letter_str(x)] = ordered_json::array();
      for (auto const& w : rule.realizations(x)) {
        ordered_json image = ordered_json::array();
        for (Letter y : w) {
          image.push_back(letter_str(y));
        }
        list.push_back(std::move(image));
      }
    }
    if (rule.has_probabilities()) {
      for (Letter x : rule.alphabet()) {
        auto& list = doc["probabilities"][letter_str(x)]
            = ordered_json::array();
        for (auto const& q : rule.probabilities(x)) {
          list.push_back(q.get_str());
        }
      }
    }
    return doc.dump();
  }

}  // namespace rauzylab
