#include "uzsyllable/service.hpp"

#include <charconv>
#include <cstdlib>

#include <json.hpp>

#include "uzsyllable/render.hpp"
#include "uzsyllable/version.hpp"

namespace uzsyllable {

namespace {

void sendError(httplib::Response& res, const int status, const std::string& message) {
  res.status = status;
  res.set_content(nlohmann::json{{"error", message}}.dump(), "application/json");
}

bool parseScript(const std::string& name, ScriptPolicy& policy) {
  if (name == "auto") {
    policy = ScriptPolicy::Auto;
  } else if (name == "latin") {
    policy = ScriptPolicy::ForceLatin;
  } else if (name == "cyrillic") {
    policy = ScriptPolicy::ForceCyrillic;
  } else {
    return false;
  }
  return true;
}

}  // namespace

size_t maxTextBytesFromEnv(const size_t fallback) {
  const char* raw = std::getenv("UZSYLLABLE_MAX_BODY");
  if (raw == nullptr || *raw == '\0') {
    return fallback;
  }
  size_t value = 0;
  const std::string_view view(raw);
  const auto [ptr, ec] = std::from_chars(view.data(), view.data() + view.size(), value);
  if (ec != std::errc() || ptr != view.data() + view.size() || value == 0) {
    return fallback;
  }
  return value;
}

SyllableService::SyllableService(ServiceConfig config) : config_(std::move(config)) {
  // Leave slack for the JSON envelope and escaping; the text field itself is
  // checked against the exact limit.
  server_.set_payload_max_length(config_.maxTextBytes * 6 + 4096);
  setupRoutes();
}

void SyllableService::setupRoutes() {
  const auto analyze = [this](const httplib::Request& req, httplib::Response& res) {
    const nlohmann::json body = nlohmann::json::parse(req.body, nullptr, false);
    if (body.is_discarded() || !body.is_object()) {
      sendError(res, 400, "request body is not a JSON object");
      return;
    }
    if (!body.contains("text") || !body["text"].is_string()) {
      sendError(res, 400, "missing string field \"text\"");
      return;
    }
    const std::string text = body["text"].get<std::string>();
    if (text.size() > config_.maxTextBytes) {
      sendError(res, 413, "text exceeds " + std::to_string(config_.maxTextBytes) + " bytes");
      return;
    }

    PipelineOptions options;
    if (body.contains("script")) {
      if (!body["script"].is_string() || !parseScript(body["script"].get<std::string>(), options.script)) {
        sendError(res, 400, "script must be \"latin\", \"cyrillic\" or \"auto\"");
        return;
      }
    }
    bool useLexicon = true;
    if (body.contains("lexicon")) {
      if (!body["lexicon"].is_boolean()) {
        sendError(res, 400, "lexicon must be a boolean");
        return;
      }
      useLexicon = body["lexicon"].get<bool>();
    }
    if (useLexicon && config_.lexicon) {
      options.lexicon = &*config_.lexicon;
    }

    res.set_content(buildDocument(syllabifyText(text, options)).dump(), "application/json");
  };

  server_.Post("/api/syllabify", analyze);
  server_.Post("/api/hyphenate", analyze);
  server_.Post("/api/count", analyze);

  server_.Get("/health", [this](const httplib::Request&, httplib::Response& res) {
    const nlohmann::json doc{
        {"status", "ok"},
        {"version", std::string(kVersion)},
        {"lexicon_entries", config_.lexicon ? config_.lexicon->size() : 0},
    };
    res.set_content(doc.dump(), "application/json");
  });

  server_.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    std::string message = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      message = e.what();
    } catch (...) {
    }
    sendError(res, 500, message);
  });
}

bool SyllableService::listen() { return server_.listen(config_.host, config_.port); }

int SyllableService::bindAnyPort() { return server_.bind_to_any_port(config_.host); }

bool SyllableService::listenAfterBind() { return server_.listen_after_bind(); }

void SyllableService::stop() { server_.stop(); }

}  // namespace uzsyllable
