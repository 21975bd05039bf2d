#pragma once

// Drives the zicl binary and lays out on-disk fixtures for it.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "support.hpp"
#include "zicl/util.hpp"

namespace zicl::testing {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

inline std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) {
    if (c == '\'') {
      q += "'\\''";
    } else {
      q += c;
    }
  }
  return q + "'";
}

/// Runs `zicl <args>` with stdout and stderr captured through files in `scratch`.
inline CliResult run_cli(const std::string& args, const std::filesystem::path& scratch) {
  const auto out = scratch / "stdout.txt";
  const auto err = scratch / "stderr.txt";
  const std::string cmd = shell_quote(ZICL_CLI_PATH) + " " + args + " >" + shell_quote(out.string()) + " 2>" +
                          shell_quote(err.string());
  const int status = std::system(cmd.c_str());
  CliResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = read_file(out);
  r.err = read_file(err);
  return r;
}

/// paragraphs.jsonl (one record per paragraph, sentences joined by spaces)
/// and a dataset directory `data/` holding {name}.task.json and {name}.test.jsonl.
inline void write_cli_fixture(const std::filesystem::path& dir, const PlantedTask& planted) {
  std::string jsonl;
  for (std::uint64_t p = 0; p < planted.corpus.paragraph_count(); ++p) {
    const auto ext = planted.corpus.paragraph_extent(p);
    std::string text;
    for (std::uint64_t i = ext.first; i < ext.first + ext.count; ++i) {
      if (!text.empty()) text += ' ';
      text += planted.corpus.sentence(i).text;
    }
    jsonl += nlohmann::json{{"text", text}, {"domain", planted.corpus.sentence(ext.first).domain}}.dump() + "\n";
  }
  write_file_atomic(dir / "paragraphs.jsonl", jsonl);

  const auto& d = planted.dataset;
  std::filesystem::create_directories(dir / "data");
  write_file_atomic(dir / "data" / (d.name + ".task.json"), d.task.to_json().dump(2));
  std::string test;
  for (const auto& ex : d.test) test += nlohmann::json{{"input", ex.input}, {"label", ex.label}}.dump() + "\n";
  write_file_atomic(dir / "data" / (d.name + ".test.jsonl"), test);
  if (d.train) {
    std::string train;
    for (const auto& ex : *d.train) train += nlohmann::json{{"input", ex.input}, {"label", ex.label}}.dump() + "\n";
    write_file_atomic(dir / "data" / (d.name + ".train.jsonl"), train);
  }
}

}  // namespace zicl::testing
