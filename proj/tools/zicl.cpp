// zicl: ingest -> index -> run -> report.
//
// Exit codes: 0 ok, 2 configuration error, 3 data error, 4 backend error.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zicl/corpus.hpp"
#include "zicl/embed.hpp"
#include "zicl/errors.hpp"
#include "zicl/harness.hpp"
#include "zicl/util.hpp"
#include "zicl/vindex.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kConfig = 2;
constexpr int kData = 3;
constexpr int kBackend = 4;

std::string env_or(const char* name, const std::string& flag) {
  if (!flag.empty()) return flag;
  const char* v = std::getenv(name);
  return v ? std::string(v) : std::string();
}

void require_file(const fs::path& p, const char* what) {
  if (!fs::is_regular_file(p)) throw zicl::ConfigError(std::string(what) + " not found: " + p.string());
}

void require_dir(const fs::path& p, const char* what) {
  if (!fs::is_directory(p)) throw zicl::ConfigError(std::string(what) + " not found: " + p.string());
}

// ---------------------------------------------------------------------------

struct IngestArgs {
  std::vector<std::string> inputs;
  std::string out;
  std::size_t cap = 0;
  std::string domain;
};

int cmd_ingest(const IngestArgs& a) {
  for (const auto& in : a.inputs) require_file(in, "input");
  zicl::corpus::IngestOptions opts;
  if (a.cap > 0) opts.per_domain_cap = a.cap;
  opts.default_domain = a.domain;
  zicl::corpus::Ingestor ing(opts);
  for (const auto& in : a.inputs) {
    std::ifstream f(in);
    ing.add_jsonl(f);
  }
  const auto stats = ing.stats();
  const auto store = ing.finish();
  store.save(a.out);
  std::cout << "records=" << stats.records << " malformed=" << stats.malformed
            << " paragraphs=" << store.paragraph_count() << " sentences=" << store.size()
            << " duplicates_dropped=" << stats.duplicates_dropped << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------

struct IndexArgs {
  std::string corpus;
  std::string out;
  std::string embedder = "hashed:256";
  std::string embed_endpoint;
  std::string mode = "exact";
  std::uint32_t partitions = 0;
  std::uint32_t probes = 0;
  std::uint64_t seed = 0;
};

zicl::embed::EmbedderConfig parse_embedder(const std::string& spec, const std::string& endpoint) {
  zicl::embed::EmbedderConfig c;
  if (spec == "hashed" || spec.starts_with("hashed:")) {
    c.kind = zicl::embed::EmbedderKind::HashedTest;
    if (spec.size() > 7) {
      try {
        c.dim = std::stoul(spec.substr(7));
      } catch (const std::exception&) {
        throw zicl::ConfigError("bad embedder dimension in '" + spec + "'");
      }
    }
  } else if (spec == "remote" || spec.starts_with("remote:")) {
    c.kind = zicl::embed::EmbedderKind::Remote;
    if (spec.size() > 7) c.dim = std::stoul(spec.substr(7));
  } else {
    require_file(spec, "embedder config");
    try {
      c = zicl::harness::embedder_from_json(json::parse(zicl::read_file(spec)));
    } catch (const json::exception& e) {
      throw zicl::ConfigError(spec + ": " + e.what());
    }
  }
  if (c.kind == zicl::embed::EmbedderKind::Remote && c.endpoint.empty()) {
    c.endpoint = env_or("ZICL_EMBED_ENDPOINT", endpoint);
  }
  c.validate();
  return c;
}

int cmd_index(const IndexArgs& a) {
  require_dir(a.corpus, "corpus directory");
  const auto ecfg = parse_embedder(a.embedder, a.embed_endpoint);
  zicl::vindex::BuildOptions opts;
  opts.seed = a.seed;
  if (a.mode == "partitioned") {
    opts.mode = zicl::vindex::IndexMode::partitioned(a.partitions, a.probes);
  } else if (a.mode != "exact") {
    throw zicl::ConfigError("--mode must be exact or partitioned");
  }
  const auto store = zicl::corpus::CorpusStore::load(a.corpus);
  if (a.mode == "partitioned") {
    if (opts.mode.num_partitions == 0) {
      opts.mode.num_partitions =
          std::max<std::uint32_t>(1, static_cast<std::uint32_t>(std::sqrt(static_cast<double>(store.size()))));
    }
    if (opts.mode.probes == 0) opts.mode.probes = std::max<std::uint32_t>(1, opts.mode.num_partitions / 8);
  }
  const auto embedder = zicl::embed::make_embedder(ecfg);
  const auto index = zicl::vindex::VectorIndex::build(store, *embedder, opts);
  index.save(a.out);
  std::cout << "N=" << index.size() << " dim=" << index.dim()
            << " mode=" << (index.mode().kind == zicl::vindex::SearchMode::Exact ? "EXACT" : "PARTITIONED");
  if (index.mode().kind == zicl::vindex::SearchMode::Partitioned) {
    std::cout << " partitions=" << index.mode().num_partitions << " probes=" << index.mode().probes;
  }
  std::cout << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------

struct RunArgs {
  std::string config;
  std::string dataset;
  std::string corpus;
  std::string index;
  std::string out;
  std::string extra_corpus;
  std::optional<std::uint64_t> seed;
  std::string lm_endpoint;
  std::string embed_endpoint;
};

int cmd_run(const RunArgs& a) {
  require_file(a.config, "config");
  require_dir(a.dataset, "dataset directory");
  if (!a.corpus.empty()) require_dir(a.corpus, "corpus directory");
  if (!a.index.empty()) require_file(a.index, "index");

  json j;
  try {
    j = json::parse(zicl::read_file(a.config));
  } catch (const json::exception& e) {
    throw zicl::ConfigError(a.config + ": " + e.what());
  }
  if (!j.is_object()) throw zicl::ConfigError(a.config + ": config must be a JSON object");
  if (a.seed) j["seeds"] = json::array({*a.seed});
  auto& backend = j["backend"];
  if (backend.is_null()) backend = json::object();
  if (const auto ep = env_or("ZICL_LM_ENDPOINT", a.lm_endpoint); !ep.empty()) {
    if (!a.lm_endpoint.empty() || !backend.contains("endpoint")) backend["endpoint"] = ep;
  }
  auto& embedder = j["embedder"];
  if (embedder.is_null()) embedder = json::object();
  if (const auto ep = env_or("ZICL_EMBED_ENDPOINT", a.embed_endpoint); !ep.empty()) {
    if (!a.embed_endpoint.empty() || !embedder.contains("endpoint")) embedder["endpoint"] = ep;
  }
  std::string extra = a.extra_corpus;
  if (extra.empty() && j.contains("extra_corpus")) extra = j["extra_corpus"].get<std::string>();
  if (!extra.empty()) require_dir(extra, "extra corpus directory");

  const auto config = zicl::harness::ExperimentConfig::from_json(j);
  std::vector<zicl::harness::GridAxis> axes;
  if (j.contains("grid")) axes = zicl::harness::parse_grid(j["grid"]);

  // Fail on missing assets before doing any work.
  auto needs = [&](const zicl::harness::ExperimentConfig& c, bool& corpus, bool& index) {
    const bool oracle = zicl::harness::is_oracle(c.method);
    const bool corpus_method = !oracle && c.method != zicl::harness::MethodKind::NoDemos;
    const auto strategy = c.retrieval.value_or(c.method == zicl::harness::MethodKind::RandomInputs
                                                   ? zicl::retrieve::Strategy::Random
                                                   : zicl::retrieve::Strategy::Nearest);
    corpus = corpus || corpus_method;
    index = index || (corpus_method && strategy != zicl::retrieve::Strategy::Random);
  };
  bool need_corpus = false;
  bool need_index = false;
  if (axes.empty()) {
    needs(config, need_corpus, need_index);
    if (need_corpus && a.corpus.empty()) {
      throw zicl::ConfigError(std::string(to_string(config.method)) + " needs --corpus");
    }
    if (need_index && a.index.empty()) throw zicl::ConfigError(std::string(to_string(config.method)) + " needs --index");
  }

  const auto dataset = zicl::harness::Dataset::load(a.dataset);
  std::optional<zicl::corpus::CorpusStore> store;
  std::optional<zicl::corpus::CorpusStore> extra_store;
  std::optional<zicl::vindex::VectorIndex> index;
  if (!a.corpus.empty()) store = zicl::corpus::CorpusStore::load(a.corpus);
  if (!extra.empty()) extra_store = zicl::corpus::CorpusStore::load(extra);
  if (!a.index.empty()) index = zicl::vindex::VectorIndex::load(a.index);

  zicl::harness::Assets assets;
  assets.corpus = store ? &*store : nullptr;
  assets.extra_corpus = extra_store ? &*extra_store : nullptr;
  assets.index = index ? &*index : nullptr;

  if (axes.empty()) {
    const auto result = zicl::harness::run(config, dataset, assets);
    result.write(a.out);
    std::cout << dataset.name << " " << to_string(config.method) << " " << zicl::infer::to_string(config.inference)
              << " accuracy=" << result.mean.accuracy << " (std " << result.std.accuracy << ")"
              << " macro_f1=" << result.mean.macro_f1 << " (std " << result.std.macro_f1 << ")\n";
  } else {
    const auto suite = zicl::harness::ablation_suite(config, axes, dataset, assets);
    suite.write(a.out);
    std::size_t failed = 0;
    for (const auto& c : suite.cells) {
      if (c.result) {
        std::cout << c.name << " accuracy=" << c.result->mean.accuracy << " macro_f1=" << c.result->mean.macro_f1
                  << "\n";
      } else {
        ++failed;
        std::cerr << "cell " << c.name << " failed: " << c.error << "\n";
      }
    }
    std::cout << suite.cells.size() << " cells, " << failed << " failed\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct ReportRow {
  std::string run;
  std::string dataset;
  bool covered = false;
  std::string method;
  std::string inference;
  std::size_t seeds = 0;
  double acc_mean = 0, acc_std = 0, f1_mean = 0, f1_std = 0;
};

std::optional<ReportRow> read_row(const fs::path& dir, const std::string& label) {
  const auto path = dir / "run.json";
  if (!fs::is_regular_file(path)) {
    std::cerr << "warning: " << path.string() << " not found, skipped\n";
    return std::nullopt;
  }
  try {
    const auto j = json::parse(zicl::read_file(path));
    ReportRow r;
    r.run = label;
    r.dataset = j.at("dataset").get<std::string>();
    r.covered = j.at("task").value("covered_by_corpus", false);
    r.method = j.at("config").at("method").get<std::string>();
    r.inference = j.at("config").at("inference").get<std::string>();
    r.seeds = j.at("per_seed").size();
    r.acc_mean = j.at("mean").at("accuracy").get<double>();
    r.acc_std = j.at("std").at("accuracy").get<double>();
    r.f1_mean = j.at("mean").at("macro_f1").get<double>();
    r.f1_std = j.at("std").at("macro_f1").get<double>();
    return r;
  } catch (const json::exception& e) {
    std::cerr << "warning: " << path.string() << " is malformed (" << e.what() << "), skipped\n";
    return std::nullopt;
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string num(double v) { return json(v).dump(); }

int cmd_report(const std::vector<std::string>& runs, const std::string& format) {
  if (format != "csv" && format != "json") throw zicl::ConfigError("--format must be csv or json");
  std::vector<ReportRow> rows;
  for (const auto& run : runs) {
    const fs::path dir(run);
    const auto top = dir / "run.json";
    if (fs::is_regular_file(top)) {
      json j;
      try {
        j = json::parse(zicl::read_file(top));
      } catch (const json::exception&) {
      }
      if (j.is_object() && j.contains("cells")) {
        for (const auto& c : j["cells"]) {
          if (c.value("status", "") != "ok") continue;
          const auto name = c.at("name").get<std::string>();
          if (auto r = read_row(dir / name, run + "/" + name)) rows.push_back(std::move(*r));
        }
        continue;
      }
    }
    if (auto r = read_row(dir, run)) rows.push_back(std::move(*r));
  }
  std::stable_partition(rows.begin(), rows.end(), [](const ReportRow& r) { return r.covered; });

  if (format == "json") {
    ordered_json out = {{"covered", ordered_json::array()}, {"not_covered", ordered_json::array()}};
    for (const auto& r : rows) {
      out[r.covered ? "covered" : "not_covered"].push_back({{"run", r.run},
                                                            {"dataset", r.dataset},
                                                            {"method", r.method},
                                                            {"inference", r.inference},
                                                            {"seeds", r.seeds},
                                                            {"accuracy_mean", r.acc_mean},
                                                            {"accuracy_std", r.acc_std},
                                                            {"macro_f1_mean", r.f1_mean},
                                                            {"macro_f1_std", r.f1_std}});
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "group,run,dataset,method,inference,seeds,accuracy_mean,accuracy_std,macro_f1_mean,macro_f1_std\r\n";
    for (const auto& r : rows) {
      std::cout << (r.covered ? "covered" : "not_covered") << ',' << csv_field(r.run) << ',' << csv_field(r.dataset)
                << ',' << csv_field(r.method) << ',' << r.inference << ',' << r.seeds << ',' << num(r.acc_mean) << ','
                << num(r.acc_std) << ',' << num(r.f1_mean) << ',' << num(r.f1_std) << "\r\n";
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-shot in-context learning with pseudo-demonstrations"};
  app.require_subcommand(1);

  IngestArgs ingest;
  auto* c_ingest = app.add_subcommand("ingest", "Segment and deduplicate JSON-lines paragraphs into a corpus");
  c_ingest->add_option("--in", ingest.inputs, "JSON-lines files of {\"text\",\"domain\"}")->required();
  c_ingest->add_option("--out", ingest.out, "Output corpus directory")->required();
  c_ingest->add_option("--cap", ingest.cap, "Paragraphs per domain (0 = no cap)");
  c_ingest->add_option("--domain", ingest.domain, "Domain for records without one");

  IndexArgs index;
  auto* c_index = app.add_subcommand("index", "Embed a corpus and build a vector index");
  c_index->add_option("--corpus", index.corpus, "Corpus directory")->required();
  c_index->add_option("--out", index.out, "Index file")->required();
  c_index->add_option("--embedder", index.embedder, "hashed[:DIM], remote[:DIM], or an embedder JSON file");
  c_index->add_option("--embed-endpoint", index.embed_endpoint, "Overrides ZICL_EMBED_ENDPOINT");
  c_index->add_option("--mode", index.mode, "exact or partitioned")->check(CLI::IsMember({"exact", "partitioned"}));
  c_index->add_option("--partitions", index.partitions, "Partition count (default sqrt N)");
  c_index->add_option("--probes", index.probes, "Partitions scanned per query (default partitions/8)");
  c_index->add_option("--seed", index.seed, "Seed for partition training");

  RunArgs run;
  std::uint64_t run_seed = 0;
  auto* c_run = app.add_subcommand("run", "Run an experiment config (or grid) over a dataset");
  c_run->add_option("--config", run.config, "Experiment config JSON")->required();
  c_run->add_option("--dataset", run.dataset, "Dataset directory")->required();
  c_run->add_option("--corpus", run.corpus, "Corpus directory");
  c_run->add_option("--index", run.index, "Index file");
  c_run->add_option("--extra-corpus", run.extra_corpus, "Extra domain corpus for the coverage ablation");
  c_run->add_option("--out", run.out, "Output directory")->required();
  auto* seed_opt = c_run->add_option("--seed", run_seed, "Run this single seed");
  c_run->add_option("--lm-endpoint", run.lm_endpoint, "Overrides ZICL_LM_ENDPOINT");
  c_run->add_option("--embed-endpoint", run.embed_endpoint, "Overrides ZICL_EMBED_ENDPOINT");

  std::vector<std::string> runs;
  std::string format = "csv";
  auto* c_report = app.add_subcommand("report", "Tabulate run.json files");
  c_report->add_option("--runs", runs, "Run directories")->required();
  c_report->add_option("--format", format, "csv or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfig;
  }

  try {
    if (*c_ingest) return cmd_ingest(ingest);
    if (*c_index) return cmd_index(index);
    if (*c_run) {
      if (*seed_opt) run.seed = run_seed;
      return cmd_run(run);
    }
    if (*c_report) return cmd_report(runs, format);
  } catch (const zicl::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  } catch (const zicl::DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kData;
  } catch (const zicl::BackendError& e) {
    std::cerr << "backend error: " << e.what() << "\n";
    return kBackend;
  } catch (const zicl::DimensionMismatch& e) {
    std::cerr << "backend error: " << e.what() << "\n";
    return kBackend;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kOk;
}
