#pragma once

#include <optional>
#include <string>

#include <httplib.h>

#include "uzsyllable/syllabifier.hpp"

namespace uzsyllable {

struct ServiceConfig {
  std::string host = "0.0.0.0";
  int port = 8080;
  std::optional<ExceptionLexicon> lexicon;
  size_t maxTextBytes = 64 * 1024;
};

// Reads UZSYLLABLE_MAX_BODY (bytes) when set and parseable.
size_t maxTextBytesFromEnv(size_t fallback);

// JSON-over-HTTP front end. Handlers share only the startup configuration
// and the immutable lexicon; requests are served concurrently without
// further synchronization.
class SyllableService {
 public:
  explicit SyllableService(ServiceConfig config);

  // Binds host:port and serves until stop(); false on bind failure.
  bool listen();

  // Test support: bind an ephemeral port, serve from another thread.
  int bindAnyPort();
  bool listenAfterBind();

  void stop();
  bool isRunning() const { return server_.is_running(); }

  const ServiceConfig& config() const { return config_; }

 private:
  void setupRoutes();

  ServiceConfig config_;
  httplib::Server server_;
};

}  // namespace uzsyllable
