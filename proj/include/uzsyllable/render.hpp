#pragma once

#include <string>

#include <json.hpp>

#include "uzsyllable/evaluation.hpp"
#include "uzsyllable/syllabifier.hpp"

namespace uzsyllable {

// The canonical structured view of an analyzed line. This single document
// backs both the CLI `--format json` output and the HTTP API responses, so
// the two can never drift apart.
nlohmann::json buildDocument(const AnalyzedText& analyzed);

std::string renderPlainSyllabify(const AnalyzedText& analyzed);
std::string renderPlainHyphenate(const AnalyzedText& analyzed);
std::string renderPlainCount(const AnalyzedText& analyzed);

nlohmann::json reportJson(const EvalReport& report);

const char* kindName(TokenKind kind);
const char* reasonName(PassthroughReason reason);

// Rewrites the canonical marks U+02BB/U+02BC as ASCII apostrophes for
// legacy consumers.
std::string asciiApostrophes(std::string text);

}  // namespace uzsyllable
