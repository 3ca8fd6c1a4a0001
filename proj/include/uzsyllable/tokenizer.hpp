#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "uzsyllable/alphabet.hpp"

namespace uzsyllable {

enum class TokenKind { Word, Passthrough, Separator };

enum class PassthroughReason { Acronym, ContainsDigit, Symbol, NoVowel, MixedScript, UnknownCharacter };

struct Token {
  TokenKind kind;
  std::string text;  // exact span of the normalized input
  std::optional<PassthroughReason> reason;  // Passthrough only
  std::vector<Grapheme> graphemes;          // Word only
  std::optional<Script> script;             // Word only

  static Token word(std::string text, std::vector<Grapheme> graphemes, Script script);
  static Token passthrough(std::string text, PassthroughReason reason);
  static Token separator(std::string text);
};

enum class ScriptPolicy { Auto, ForceLatin, ForceCyrillic };

struct AnnotationMismatchError : std::runtime_error {
  explicit AnnotationMismatchError(const std::string& what) : std::runtime_error(what) {}
};

// Splits normalized text into word / passthrough / separator tokens.
// Token texts partition the input exactly; every failure mode of a word
// candidate demotes it to a passthrough token.
std::vector<Token> tokenize(std::string_view normalizedText, ScriptPolicy policy = ScriptPolicy::Auto);

// Re-assembles tokens, inserting `mark` at the given grapheme boundaries of
// each word. `wordBoundaries` aligns one-to-one with the Word tokens; when
// empty, the output equals the input. Throws AnnotationMismatchError when a
// boundary index falls outside a word's grapheme range or the alignment is
// off.
std::string detokenize(const std::vector<Token>& tokens,
                       const std::vector<std::vector<size_t>>& wordBoundaries,
                       std::string_view mark = "-");

}  // namespace uzsyllable
