#include <doctest.h>

#include "support/generators.hpp"
#include "uzsyllable/tokenizer.hpp"
#include "uzsyllable/utf8.hpp"

using namespace uzsyllable;

TEST_CASE("tokenize splits words and separators") {
  const auto tokens = tokenize(normalizeText("abadiy so‘z"));
  REQUIRE(tokens.size() == 3);
  CHECK(tokens[0].kind == TokenKind::Word);
  CHECK(tokens[0].text == "abadiy");
  CHECK(tokens[1].kind == TokenKind::Separator);
  CHECK(tokens[1].text == " ");
  CHECK(tokens[2].kind == TokenKind::Word);
  CHECK(tokens[2].text == "soʻz");
  CHECK(tokens[2].script == Script::Latin);
}

TEST_CASE("acronyms and numbers pass through") {
  const auto tokens = tokenize("AQSH 2024");
  REQUIRE(tokens.size() == 3);
  CHECK(tokens[0].kind == TokenKind::Passthrough);
  CHECK(tokens[0].reason == PassthroughReason::Acronym);
  CHECK(tokens[2].kind == TokenKind::Passthrough);
  CHECK(tokens[2].reason == PassthroughReason::ContainsDigit);
}

TEST_CASE("vowel-less words pass through") {
  const auto tokens = tokenize("brr!");
  REQUIRE(tokens.size() == 2);
  CHECK(tokens[0].reason == PassthroughReason::NoVowel);
  CHECK(tokens[1].kind == TokenKind::Separator);
  CHECK(tokens[1].text == "!");
}

TEST_CASE("demotion reasons") {
  CHECK(tokenize("onaона")[0].reason == PassthroughReason::MixedScript);
  CHECK(tokenize("watt")[0].reason == PassthroughReason::UnknownCharacter);
  CHECK(tokenize("abc123")[0].reason == PassthroughReason::ContainsDigit);
  CHECK(tokenize("АҚШ")[0].reason == PassthroughReason::Acronym);
  CHECK(tokenize("ʼ")[0].reason == PassthroughReason::NoVowel);  // a lone sign
  CHECK(tokenize("€")[0].reason == PassthroughReason::Symbol);
}

TEST_CASE("single letters are words when they carry a vowel") {
  const auto tokens = tokenize("A b");
  CHECK(tokens[0].kind == TokenKind::Word);
  CHECK(tokens[2].reason == PassthroughReason::NoVowel);
}

TEST_CASE("hyphen-joined compounds split at the hyphen") {
  const auto tokens = tokenize("anor-gul");
  REQUIRE(tokens.size() == 3);
  CHECK(tokens[0].kind == TokenKind::Word);
  CHECK(tokens[1].kind == TokenKind::Separator);
  CHECK(tokens[1].text == "-");
  CHECK(tokens[2].kind == TokenKind::Word);
}

TEST_CASE("forced script demotes words of the other script") {
  const auto tokens = tokenize("она", ScriptPolicy::ForceLatin);
  REQUIRE(tokens.size() == 1);
  CHECK(tokens[0].reason == PassthroughReason::UnknownCharacter);
  CHECK(tokenize("она", ScriptPolicy::ForceCyrillic)[0].kind == TokenKind::Word);
}

TEST_CASE("word tokens always contain a vowel") {
  testgen::NoiseGenerator noise(4242);
  for (int i = 0; i < 300; ++i) {
    for (const Token& token : tokenize(normalizeText(noise.next()))) {
      if (token.kind != TokenKind::Word) {
        continue;
      }
      bool hasVowel = false;
      for (const Grapheme& g : token.graphemes) {
        hasVowel = hasVowel || g.cls == LetterClass::Vowel;
      }
      CHECK(hasVowel);
    }
  }
}

TEST_CASE("token texts partition the input") {
  testgen::NoiseGenerator noise(31313);
  for (int i = 0; i < 300; ++i) {
    const std::string text = normalizeText(noise.next());
    std::string rebuilt;
    for (const Token& token : tokenize(text)) {
      CHECK(!token.text.empty());
      rebuilt += token.text;
    }
    CHECK(rebuilt == text);
  }
}

TEST_CASE("detokenize inserts marks at the annotated boundaries") {
  const auto tokens = tokenize("abadiy");
  CHECK(detokenize(tokens, {{1, 3}}) == "a-ba-diy");
  CHECK(detokenize(tokens, {{1, 3}}, "·") == "a·ba·diy");
}

TEST_CASE("detokenize with no annotations is the identity") {
  const std::string text = normalizeText("AQSH 2024, bug'latkich!");
  CHECK(detokenize(tokenize(text), {}) == text);
}

TEST_CASE("detokenize handles Cyrillic words") {
  CHECK(detokenize(tokenize("она"), {{1}}) == "о-на");
}

TEST_CASE("detokenize rejects out-of-range boundaries") {
  const auto tokens = tokenize("abadiy");  // 6 graphemes
  CHECK_THROWS_AS(detokenize(tokens, {{6}}), AnnotationMismatchError);
  CHECK_THROWS_AS(detokenize(tokens, {{0}}), AnnotationMismatchError);
  CHECK_THROWS_AS(detokenize(tokens, {{2, 2}}), AnnotationMismatchError);
  CHECK_THROWS_AS(detokenize(tokens, {{1}, {2}}), AnnotationMismatchError);
}

TEST_CASE("tokenize then detokenize round-trips any normalized text") {
  testgen::NoiseGenerator noise(565656);
  for (int i = 0; i < 500; ++i) {
    const std::string text = normalizeText(noise.next());
    CHECK(detokenize(tokenize(text), {}) == text);
  }
}
