#pragma once

#include <cctype>
#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kspf {

/// Malformed textual input (word grammar, braid grammar, JSON payloads).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Structurally invalid arguments: alphabet mismatches, bad indices,
/// unsupported group parameters.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Violated operation precondition (unbalanced word, nontrivial input,
/// missing strand trace, open paths).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ordered set of generator names. Identity is structural: two alphabets
/// with the same ordered names are interchangeable. Copies are cheap.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names) {
    auto table = std::make_shared<Table>();
    for (size_t i = 0; i < names.size(); ++i) {
      const std::string& s = names[i];
      if (s.empty()) throw DomainError("alphabet: empty generator name");
      for (char ch : s) {
        if (ch == '^' || ch == '.' || std::isspace(static_cast<unsigned char>(ch)) ||
            static_cast<unsigned char>(ch) > 127)
          throw DomainError("alphabet: illegal character in generator name '" + s + "'");
      }
      if (!table->index.emplace(s, static_cast<int>(i)).second)
        throw DomainError("alphabet: duplicate generator name '" + s + "'");
    }
    table->names = std::move(names);
    table_ = std::move(table);
  }

  int size() const { return static_cast<int>(table_->names.size()); }
  const std::string& name(int symbol) const { return table_->names.at(symbol); }
  const std::vector<std::string>& names() const { return table_->names; }

  /// Index of `name`, or -1 if absent.
  int find(std::string_view name) const {
    auto it = table_->index.find(std::string(name));
    return it == table_->index.end() ? -1 : it->second;
  }
  int index_of(std::string_view name) const {
    int i = find(name);
    if (i < 0) throw DomainError("alphabet: unknown generator '" + std::string(name) + "'");
    return i;
  }

  bool operator==(const Alphabet& o) const {
    return table_ == o.table_ || table_->names == o.table_->names;
  }

 private:
  struct Table {
    std::vector<std::string> names;
    std::unordered_map<std::string, int> index;
  };
  std::shared_ptr<const Table> table_;
};

struct Letter {
  int symbol = 0;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return {symbol, -sign}; }
  bool operator==(const Letter&) const = default;
};

namespace detail {
/// Push a letter onto a freely reduced stack, cancelling if possible.
inline void push_reduced(std::vector<Letter>& stack, Letter l) {
  if (!stack.empty() && stack.back().symbol == l.symbol && stack.back().sign == -l.sign) {
    stack.pop_back();
  } else {
    stack.push_back(l);
  }
}
}  // namespace detail

/// Freely reduced word over an Alphabet. Immutable after construction;
/// every constructor reduces eagerly, so adjacent inverse pairs never occur.
class Word {
 public:
  explicit Word(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  Word(Alphabet alphabet, std::span<const Letter> raw) : alphabet_(std::move(alphabet)) {
    letters_.reserve(raw.size());
    for (Letter l : raw) {
      if (l.symbol < 0 || l.symbol >= alphabet_.size())
        throw DomainError("word: letter symbol out of range");
      if (l.sign != 1 && l.sign != -1) throw DomainError("word: letter sign must be +-1");
      detail::push_reduced(letters_, l);
    }
  }

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Letter>& letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  bool operator==(const Word& o) const {
    return letters_ == o.letters_ && alphabet_ == o.alphabet_;
  }

  /// Letters already known to be reduced; skips the reduction pass.
  static Word from_reduced(Alphabet alphabet, std::vector<Letter> letters) {
    Word w(std::move(alphabet));
    w.letters_ = std::move(letters);
    return w;
  }

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

/// Free reduction of a raw letter sequence.
inline Word reduce(const Alphabet& alphabet, std::span<const Letter> raw) {
  return Word(alphabet, raw);
}

inline void require_same_alphabet(const Word& u, const Word& v) {
  if (!(u.alphabet() == v.alphabet())) throw DomainError("words over different alphabets");
}

inline Word multiply(const Word& u, const Word& v) {
  require_same_alphabet(u, v);
  std::vector<Letter> out = u.letters();
  out.reserve(out.size() + v.letters().size());
  for (Letter l : v.letters()) detail::push_reduced(out, l);
  return Word::from_reduced(u.alphabet(), std::move(out));
}

inline Word invert(const Word& u) {
  std::vector<Letter> out;
  out.reserve(u.letters().size());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it)
    out.push_back(it->inverse());
  return Word::from_reduced(u.alphabet(), std::move(out));
}

/// [u, v] = u v u^-1 v^-1, reduced.
inline Word commutator(const Word& u, const Word& v) {
  return multiply(multiply(u, v), multiply(invert(u), invert(v)));
}

inline Word power(const Word& u, long long k) {
  Word base = k < 0 ? invert(u) : u;
  long long n = k < 0 ? -k : k;
  Word out(u.alphabet());
  for (long long i = 0; i < n; ++i) out = multiply(out, base);
  return out;
}

/// by^-1 * w * by
inline Word conjugate(const Word& w, const Word& by) {
  return multiply(multiply(invert(by), w), by);
}

/// Single-generator word.
inline Word generator(const Alphabet& alphabet, std::string_view name, int sign = 1) {
  Letter l{alphabet.index_of(name), sign};
  return Word::from_reduced(alphabet, {l});
}

inline long long exponent_sum(const Word& w, int symbol) {
  if (symbol < 0 || symbol >= w.alphabet().size())
    throw DomainError("exponent_sum: symbol out of range");
  long long s = 0;
  for (Letter l : w.letters())
    if (l.symbol == symbol) s += l.sign;
  return s;
}

inline long long exponent_sum(const Word& w, std::string_view name) {
  return exponent_sum(w, w.alphabet().index_of(name));
}

inline bool is_balanced(const Word& w, int symbol) { return exponent_sum(w, symbol) == 0; }
inline bool is_balanced(const Word& w, std::string_view name) {
  return exponent_sum(w, name) == 0;
}

/// Substitution homomorphism: one image word over `target` per `source` symbol.
class Substitution {
 public:
  Substitution(Alphabet source, Alphabet target, std::vector<Word> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != source_.size())
      throw DomainError("substitution: need exactly one image per source generator");
    for (const Word& im : images_)
      if (!(im.alphabet() == target_))
        throw DomainError("substitution: image over wrong alphabet");
  }

  const Alphabet& source() const { return source_; }
  const Alphabet& target() const { return target_; }
  const Word& image(int symbol) const { return images_.at(symbol); }

 private:
  Alphabet source_, target_;
  std::vector<Word> images_;
};

inline Word substitute(const Substitution& sub, const Word& w) {
  if (!(w.alphabet() == sub.source()))
    throw DomainError("substitute: word not over the substitution source");
  std::vector<Letter> out;
  for (Letter l : w.letters()) {
    const Word& im = sub.image(l.symbol);
    if (l.sign > 0) {
      for (Letter m : im.letters()) detail::push_reduced(out, m);
    } else {
      for (auto it = im.letters().rbegin(); it != im.letters().rend(); ++it)
        detail::push_reduced(out, it->inverse());
    }
  }
  return Word::from_reduced(sub.target(), std::move(out));
}

/// Identity substitution on `a`.
inline Substitution identity_substitution(const Alphabet& a) {
  std::vector<Word> images;
  for (int i = 0; i < a.size(); ++i)
    images.push_back(Word::from_reduced(a, {Letter{i, 1}}));
  return Substitution(a, a, std::move(images));
}

// ---------------------------------------------------------------------------
// Textual form. Grammar: tokens separated by ' ' or '.', each token is
// NAME or NAME^k with k a signed decimal integer; NAME is
// [A-Za-z][A-Za-z0-9_]*. Exponents expand before reduction.
// ---------------------------------------------------------------------------

inline Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> raw;
  size_t i = 0;
  auto is_sep = [](char c) { return c == ' ' || c == '.'; };
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    size_t start = i;
    if (!std::isalpha(static_cast<unsigned char>(text[i])))
      throw ParseError("word: token must start with a letter at position " +
                       std::to_string(i));
    ++i;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                               text[i] == '_'))
      ++i;
    std::string name(text.substr(start, i - start));
    long long exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      size_t estart = i;
      if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == estart || (i == estart + 1 && !std::isdigit(static_cast<unsigned char>(
                                                 text[estart]))))
        throw ParseError("word: malformed exponent after '" + name + "'");
      try {
        exp = std::stoll(std::string(text.substr(estart, i - estart)));
      } catch (const std::exception&) {
        throw ParseError("word: exponent out of range after '" + name + "'");
      }
    }
    if (i < text.size() && !is_sep(text[i]))
      throw ParseError("word: unexpected character at position " + std::to_string(i));
    int symbol = alphabet.find(name);
    if (symbol < 0) throw ParseError("word: unknown generator '" + name + "'");
    int sign = exp < 0 ? -1 : 1;
    long long count = exp < 0 ? -exp : exp;
    for (long long k = 0; k < count; ++k) raw.push_back(Letter{symbol, sign});
  }
  return Word(alphabet, raw);
}

/// Display form with run-length exponents (`x1^5`, `y2^-3`). The empty word
/// renders as the empty string.
inline std::string format_word(const Word& w) {
  std::string out;
  const auto& ls = w.letters();
  for (size_t i = 0; i < ls.size();) {
    size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    long long run = static_cast<long long>(j - i) * ls[i].sign;
    if (!out.empty()) out += ' ';
    out += w.alphabet().name(ls[i].symbol);
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << format_word(w);
}

}  // namespace kspf
