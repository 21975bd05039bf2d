// Standalone mock of the /score, /tokenize and /embed services.

#include <csignal>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "zicl/demos.hpp"
#include "zicl/embed.hpp"
#include "zicl/errors.hpp"
#include "zicl/infer.hpp"
#include "zicl/mock_server.hpp"

namespace {
zicl::mock::MockServer* g_server = nullptr;
void on_signal(int) {
  if (g_server) g_server->stop();
}
}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mock LM scoring and embedding server"};
  int port = 0;
  std::string lm = "uniform";
  std::string task_name = "CR";
  std::string task_file;
  std::string script;
  double copy_strength = 1.0;
  std::size_t embed_dim = 256;
  app.add_option("--port", port, "Port on 127.0.0.1 (0 = ephemeral)");
  app.add_option("--lm", lm, "uniform, copying or scripted")->check(CLI::IsMember({"uniform", "copying", "scripted"}));
  app.add_option("--task", task_name, "Built-in task whose template the copying mock parses");
  app.add_option("--task-file", task_file, "TaskSpec JSON, instead of --task");
  app.add_option("--script", script, "Fixture file for --lm scripted");
  app.add_option("--copy-strength", copy_strength, "Copying probability for --lm copying");
  app.add_option("--embed-dim", embed_dim, "Dimension of the hashed embedder behind /embed");
  CLI11_PARSE(app, argc, argv);

  try {
    zicl::demos::TaskSpec task;
    if (!task_file.empty()) {
      task = zicl::demos::TaskSpec::load(task_file);
    } else if (const auto* t = zicl::demos::find_builtin_task(task_name)) {
      task = *t;
    } else {
      throw zicl::ConfigError("unknown task '" + task_name + "'");
    }

    zicl::mock::ServerOptions opts;
    opts.port = port;
    if (lm == "uniform") {
      opts.lm = std::make_shared<zicl::infer::MockUniformLm>();
    } else if (lm == "copying") {
      zicl::infer::CopyingOptions c;
      c.copy_strength = copy_strength;
      opts.lm = std::make_shared<zicl::infer::MockCopyingLm>(task, c);
    } else {
      if (script.empty()) throw zicl::ConfigError("--lm scripted needs --script");
      opts.lm = std::make_shared<zicl::infer::ScriptedLm>(zicl::infer::ScriptedLm::load(script));
    }
    opts.embedder = std::make_shared<zicl::embed::HashedEmbedder>(embed_dim);

    zicl::mock::MockServer server(std::move(opts));
    g_server = &server;
    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);
    std::cout << server.endpoint() << std::endl;
    server.wait();
  } catch (const zicl::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
