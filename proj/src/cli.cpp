#include "uzsyllable/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "uzsyllable/evaluation.hpp"
#include "uzsyllable/render.hpp"
#include "uzsyllable/service.hpp"
#include "uzsyllable/syllabifier.hpp"

namespace uzsyllable {

namespace {

enum class Command { Syllabify, Hyphenate, Count, Evaluate, Serve };

struct CliConfig {
  Command command = Command::Syllabify;
  std::string script = "auto";
  std::string format = "plain";
  std::string lexiconPath;
  std::string inputPath;
  std::string outputPath;
  std::string datasetPath;
  bool asciiApostrophe = false;
  bool strict = false;
  int port = 8080;
};

ScriptPolicy scriptPolicy(const std::string& name) {
  if (name == "latin") {
    return ScriptPolicy::ForceLatin;
  }
  if (name == "cyrillic") {
    return ScriptPolicy::ForceCyrillic;
  }
  return ScriptPolicy::Auto;
}

void addCommonOptions(CLI::App* cmd, CliConfig& config) {
  cmd->add_option("--script", config.script, "Script of the input: latin, cyrillic or auto")
      ->check(CLI::IsMember({"latin", "cyrillic", "auto"}))
      ->capture_default_str();
  cmd->add_option("--format", config.format, "Output format: plain or json")
      ->check(CLI::IsMember({"plain", "json"}))
      ->capture_default_str();
  cmd->add_option("--lexicon", config.lexiconPath, "Exception lexicon file (word<TAB>syl-la-bles)");
  cmd->add_option("--input", config.inputPath, "Input file (default: stdin)");
  cmd->add_option("--output", config.outputPath, "Output file (default: stdout)");
  cmd->add_flag("--ascii-apostrophe", config.asciiApostrophe,
                "Render the canonical marks U+02BB/U+02BC as ASCII apostrophes");
}

int runTextCommand(const CliConfig& config, const ExceptionLexicon* lexicon, std::istream& in, std::ostream& out,
                   std::ostream& err) {
  std::ifstream inputFile;
  if (!config.inputPath.empty()) {
    inputFile.open(config.inputPath);
    if (!inputFile) {
      err << "uzsyllable: cannot open input file: " << config.inputPath << '\n';
      return 2;
    }
  }
  std::ofstream outputFile;
  if (!config.outputPath.empty()) {
    outputFile.open(config.outputPath);
    if (!outputFile) {
      err << "uzsyllable: cannot open output file: " << config.outputPath << '\n';
      return 2;
    }
  }
  std::istream& source = config.inputPath.empty() ? in : inputFile;
  std::ostream& sink = config.outputPath.empty() ? out : outputFile;

  PipelineOptions options;
  options.script = scriptPolicy(config.script);
  options.lexicon = lexicon;

  std::string line;
  while (std::getline(source, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    const AnalyzedText analyzed = syllabifyText(line, options);
    std::string rendered;
    if (config.format == "json") {
      rendered = buildDocument(analyzed).dump();
    } else if (config.command == Command::Hyphenate) {
      rendered = renderPlainHyphenate(analyzed);
    } else if (config.command == Command::Count) {
      rendered = renderPlainCount(analyzed);
    } else {
      rendered = renderPlainSyllabify(analyzed);
    }
    if (config.asciiApostrophe) {
      rendered = asciiApostrophes(std::move(rendered));
    }
    sink << rendered << '\n';
  }
  return 0;
}

int runEvaluate(const CliConfig& config, const ExceptionLexicon* lexicon, std::ostream& out, std::ostream& err) {
  const std::string path = config.datasetPath.empty() ? config.inputPath : config.datasetPath;
  Dataset dataset;
  try {
    dataset = loadDatasetFile(path, config.strict);
  } catch (const DatasetError& e) {
    err << "uzsyllable: dataset " << path << ": " << e.what() << '\n';
    return 2;
  } catch (const std::runtime_error& e) {
    err << "uzsyllable: " << e.what() << '\n';
    return 2;
  }
  for (const DatasetIssue& issue : dataset.issues) {
    err << "uzsyllable: " << path << ":" << issue.line << ": skipped: " << issue.message << '\n';
  }

  const EvalReport report = evaluate(dataset.records, lexicon);

  std::ofstream outputFile;
  if (!config.outputPath.empty()) {
    outputFile.open(config.outputPath);
    if (!outputFile) {
      err << "uzsyllable: cannot open output file: " << config.outputPath << '\n';
      return 2;
    }
  }
  std::ostream& sink = config.outputPath.empty() ? out : outputFile;
  if (config.format == "json") {
    sink << reportJson(report).dump() << '\n';
  } else {
    sink << formatReport(report);
  }
  return 0;
}

int runServe(const CliConfig& config, std::optional<ExceptionLexicon> lexicon, std::ostream& err) {
  ServiceConfig serviceConfig;
  serviceConfig.port = config.port;
  serviceConfig.lexicon = std::move(lexicon);
  serviceConfig.maxTextBytes = maxTextBytesFromEnv(serviceConfig.maxTextBytes);

  SyllableService service(std::move(serviceConfig));
  err << "uzsyllable: listening on port " << config.port << '\n';
  if (!service.listen()) {
    err << "uzsyllable: failed to bind port " << config.port << '\n';
    return 2;
  }
  return 0;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rule-based syllabification, hyphenation and syllable counting for Uzbek"};
  app.name("uzsyllable");
  app.require_subcommand(1);

  CliConfig config;

  CLI::App* syllabify = app.add_subcommand("syllabify", "Divide words into syllables");
  addCommonOptions(syllabify, config);
  CLI::App* hyphenate = app.add_subcommand("hyphenate", "List valid line-break variants per word");
  addCommonOptions(hyphenate, config);
  CLI::App* count = app.add_subcommand("count", "Count syllables per word");
  addCommonOptions(count, config);

  CLI::App* evaluate = app.add_subcommand("evaluate", "Score the engine against a gold dataset");
  addCommonOptions(evaluate, config);
  evaluate->add_option("--dataset", config.datasetPath, "Gold dataset TSV (word, syllables, variants, count)");
  evaluate->add_flag("--strict", config.strict, "Abort on the first invalid dataset line");

  CLI::App* serve = app.add_subcommand("serve", "Run the JSON HTTP service");
  serve->add_option("--lexicon", config.lexiconPath, "Exception lexicon file");
  serve->add_option("--port", config.port, "TCP port")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "uzsyllable: " << e.what() << '\n';
    err << app.help();
    return 1;
  }

  if (syllabify->parsed()) {
    config.command = Command::Syllabify;
  } else if (hyphenate->parsed()) {
    config.command = Command::Hyphenate;
  } else if (count->parsed()) {
    config.command = Command::Count;
  } else if (evaluate->parsed()) {
    config.command = Command::Evaluate;
  } else {
    config.command = Command::Serve;
  }

  std::optional<ExceptionLexicon> lexicon;
  if (!config.lexiconPath.empty()) {
    try {
      std::vector<std::string> warnings;
      lexicon = loadLexiconFile(config.lexiconPath, &warnings);
      for (const std::string& warning : warnings) {
        err << "uzsyllable: lexicon: " << warning << '\n';
      }
    } catch (const std::runtime_error& e) {
      err << "uzsyllable: lexicon: " << e.what() << '\n';
      return 2;
    }
  }

  switch (config.command) {
    case Command::Evaluate:
      if (config.datasetPath.empty() && config.inputPath.empty()) {
        err << "uzsyllable: evaluate requires --dataset\n";
        return 1;
      }
      return runEvaluate(config, lexicon ? &*lexicon : nullptr, out, err);
    case Command::Serve:
      return runServe(config, std::move(lexicon), err);
    default:
      return runTextCommand(config, lexicon ? &*lexicon : nullptr, in, out, err);
  }
}

}  // namespace uzsyllable
