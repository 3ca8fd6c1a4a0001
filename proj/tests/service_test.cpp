#include <doctest.h>

#include <memory>
#include <sstream>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "support/tables.hpp"
#include "uzsyllable/cli.hpp"
#include "uzsyllable/service.hpp"
#include "uzsyllable/version.hpp"

using namespace uzsyllable;

namespace {

ServiceConfig onLocalhost(ServiceConfig config) {
  config.host = "127.0.0.1";
  return config;
}

// Serves on an ephemeral localhost port for the lifetime of the fixture.
struct RunningService {
  explicit RunningService(ServiceConfig config) : service(onLocalhost(std::move(config))) {
    port = service.bindAnyPort();
    REQUIRE(port > 0);
    thread = std::thread([this] { service.listenAfterBind(); });
    while (!service.isRunning()) {
      std::this_thread::yield();
    }
  }

  ~RunningService() {
    service.stop();
    thread.join();
  }

  httplib::Client client() { return httplib::Client("127.0.0.1", port); }

  SyllableService service;
  int port = 0;
  std::thread thread;
};

ServiceConfig configWithLexicon() {
  ServiceConfig config;
  std::istringstream in(testdata::loanwordLexiconTsv());
  config.lexicon = loadLexicon(in);
  return config;
}

nlohmann::json postJson(httplib::Client& client, const std::string& path, const nlohmann::json& body,
                        int expectedStatus = 200) {
  const auto res = client.Post(path, body.dump(), "application/json");
  REQUIRE(res);
  REQUIRE(res->status == expectedStatus);
  return nlohmann::json::parse(res->body);
}

}  // namespace

TEST_CASE("syllabify endpoint divides words") {
  RunningService running{ServiceConfig{}};
  auto client = running.client();
  const nlohmann::json doc = postJson(client, "/api/syllabify", {{"text", "abobil"}});
  REQUIRE(doc["tokens"].size() == 1);
  CHECK(doc["tokens"][0]["syllables"] == nlohmann::json::array({"a", "bo", "bil"}));
  CHECK(doc["tokens"][0]["count"] == 3);
  CHECK(doc["rendered"] == "a-bo-bil");
}

TEST_CASE("empty text is a valid request") {
  RunningService running{ServiceConfig{}};
  auto client = running.client();
  const nlohmann::json doc = postJson(client, "/api/syllabify", {{"text", ""}});
  CHECK(doc["tokens"].empty());
  CHECK(doc["rendered"] == "");
}

TEST_CASE("the request lexicon flag bypasses the server lexicon") {
  RunningService running{configWithLexicon()};
  auto client = running.client();

  const nlohmann::json withLexicon = postJson(client, "/api/syllabify", {{"text", "abstrakt"}});
  CHECK(withLexicon["tokens"][0]["syllables"] == nlohmann::json::array({"ab", "strakt"}));
  CHECK(withLexicon["tokens"][0]["source"] == "lexicon");

  const nlohmann::json withoutLexicon =
      postJson(client, "/api/syllabify", {{"text", "abstrakt"}, {"lexicon", false}});
  CHECK(withoutLexicon["tokens"][0]["syllables"] == nlohmann::json::array({"abst", "rakt"}));
  CHECK(withoutLexicon["tokens"][0]["source"] == "rule");
}

TEST_CASE("hyphenate endpoint fills hyphenation variants") {
  RunningService running{ServiceConfig{}};
  auto client = running.client();
  CHECK(postJson(client, "/api/hyphenate", {{"text", "arabcha"}})["tokens"][0]["hyphenations"] ==
        nlohmann::json::array({"arab-cha"}));
  CHECK(postJson(client, "/api/hyphenate", {{"text", "ona"}})["tokens"][0]["hyphenations"] ==
        nlohmann::json::array());
  CHECK(postJson(client, "/api/hyphenate", {{"text", "abadiyat"}})["tokens"][0]["hyphenations"] ==
        nlohmann::json::array({"aba-diyat", "abadi-yat"}));
}

TEST_CASE("count endpoint") {
  RunningService running{ServiceConfig{}};
  auto client = running.client();
  CHECK(postJson(client, "/api/count", {{"text", "abadiyat"}})["tokens"][0]["count"] == 4);

  const nlohmann::json acronym = postJson(client, "/api/count", {{"text", "AQSH"}});
  CHECK(acronym["tokens"][0]["kind"] == "passthrough");
  CHECK(!acronym["tokens"][0].contains("count"));

  // An ASCII apostrophe normalizes into the digraph before counting.
  CHECK(postJson(client, "/api/count", {{"text", "bo'la"}})["tokens"][0]["count"] == 2);
}

TEST_CASE("script parameter") {
  RunningService running{ServiceConfig{}};
  auto client = running.client();
  const nlohmann::json doc = postJson(client, "/api/syllabify", {{"text", "она"}, {"script", "cyrillic"}});
  CHECK(doc["rendered"] == "о-на");
  auto res = client.Post("/api/syllabify", nlohmann::json{{"text", "x"}, {"script", "klingon"}}.dump(),
                         "application/json");
  REQUIRE(res);
  CHECK(res->status == 400);
}

TEST_CASE("health endpoint reports version and lexicon size") {
  {
    RunningService running{ServiceConfig{}};
    auto client = running.client();
    const auto res = client.Get("/health");
    REQUIRE(res);
    REQUIRE(res->status == 200);
    const nlohmann::json doc = nlohmann::json::parse(res->body);
    CHECK(doc["status"] == "ok");
    CHECK(doc["version"] == std::string(kVersion));
    CHECK(doc["lexicon_entries"] == 0);
  }
  {
    RunningService running{configWithLexicon()};
    auto client = running.client();
    const auto res = client.Get("/health");
    const nlohmann::json doc = nlohmann::json::parse(res->body);
    CHECK(doc["lexicon_entries"] == 18);
  }
}

TEST_CASE("malformed requests get a 400") {
  RunningService running{ServiceConfig{}};
  auto client = running.client();
  for (const std::string body : {"{not json", "[1,2]", "{}", "{\"text\": 42}", "{\"text\":\"a\",\"lexicon\":1}"}) {
    const auto res = client.Post("/api/syllabify", body, "application/json");
    REQUIRE(res);
    CHECK(res->status == 400);
  }
}

TEST_CASE("oversized text gets a 413") {
  ServiceConfig config;
  config.maxTextBytes = 64;
  RunningService running{std::move(config)};
  auto client = running.client();
  const std::string big(65, 'a');
  const auto res = client.Post("/api/syllabify", nlohmann::json{{"text", big}}.dump(), "application/json");
  REQUIRE(res);
  CHECK(res->status == 413);
}

TEST_CASE("responses are stateless and byte-identical") {
  RunningService running{configWithLexicon()};
  auto client = running.client();
  const std::string body = nlohmann::json{{"text", "abstrakt bug'latkich 2024"}}.dump();
  const auto first = client.Post("/api/syllabify", body, "application/json");
  REQUIRE(first);
  for (int i = 0; i < 5; ++i) {
    const auto res = client.Post("/api/syllabify", body, "application/json");
    REQUIRE(res);
    CHECK(res->body == first->body);
  }
}

TEST_CASE("a stopped server refuses connections") {
  auto running = std::make_unique<RunningService>(ServiceConfig{});
  const int port = running->port;
  running.reset();  // stops and joins
  httplib::Client client("127.0.0.1", port);
  client.set_connection_timeout(1, 0);
  const auto res = client.Get("/health");
  CHECK(!res);
}

TEST_CASE("API responses equal the CLI json output") {
  RunningService running{ServiceConfig{}};
  auto client = running.client();
  for (const std::string line : {"AQSH abadiy 2024", "bug'latkich, ko‘cha!", "brr", ""}) {
    std::istringstream in(line + "\n");
    std::ostringstream out;
    std::ostringstream err;
    REQUIRE(runCli({"syllabify", "--format", "json"}, in, out, err) == 0);
    std::string cliLine = out.str();
    cliLine.pop_back();  // trailing newline

    const auto res = client.Post("/api/syllabify", nlohmann::json{{"text", line}}.dump(), "application/json");
    REQUIRE(res);
    CHECK(res->body == cliLine);
  }
}
