#include <algorithm>
#include <set>

#include "zicl/demos.hpp"
#include "zicl/errors.hpp"
#include "zicl/util.hpp"

namespace zicl::demos {

void TaskSpec::validate() const {
  if (name.empty()) throw ConfigError("task has no name");
  if (labels.size() < 2) throw ConfigError("task '" + name + "' needs at least two labels");
  if (synonyms.size() != labels.size()) {
    throw ConfigError("task '" + name + "' needs exactly one synonym per label");
  }
  std::set<std::string> label_set(labels.begin(), labels.end());
  std::set<std::string> synonym_set(synonyms.begin(), synonyms.end());
  if (label_set.size() != labels.size()) throw ConfigError("task '" + name + "' has duplicate labels");
  if (synonym_set.size() != synonyms.size()) throw ConfigError("task '" + name + "' has duplicate synonyms");
  for (const auto& s : synonyms) {
    if (s.empty()) throw ConfigError("task '" + name + "' has an empty synonym");
    if (label_set.contains(s)) {
      throw ConfigError("task '" + name + "': synonym '" + s + "' is also a label");
    }
  }
  for (const auto& l : labels) {
    if (l.empty()) throw ConfigError("task '" + name + "' has an empty label");
  }
}

TaskSpec TaskSpec::from_json(const nlohmann::json& j) {
  TaskSpec t;
  try {
    t.name = j.at("name").get<std::string>();
    t.labels = j.at("labels").get<std::vector<std::string>>();
    const auto& syn = j.at("synonyms");
    if (!syn.is_object() || syn.size() != t.labels.size()) {
      throw ConfigError("task '" + t.name + "': synonyms must map every label exactly once");
    }
    for (const auto& label : t.labels) t.synonyms.push_back(syn.at(label).get<std::string>());
    t.tmpl.input_prefix = j.value("input_prefix", std::string("Review:"));
    t.tmpl.label_prefix = j.value("label_prefix", std::string("Sentiment:"));
    t.covered_by_corpus = j.value("covered_by_corpus", false);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed task spec: ") + e.what());
  }
  t.validate();
  return t;
}

nlohmann::ordered_json TaskSpec::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["labels"] = labels;
  nlohmann::ordered_json syn = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < labels.size(); ++i) syn[labels[i]] = synonyms[i];
  j["synonyms"] = std::move(syn);
  j["input_prefix"] = tmpl.input_prefix;
  j["label_prefix"] = tmpl.label_prefix;
  j["covered_by_corpus"] = covered_by_corpus;
  return j;
}

TaskSpec TaskSpec::load(const std::filesystem::path& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return from_json(j);
}

const std::vector<TaskSpec>& builtin_tasks() {
  static const std::vector<TaskSpec> tasks = [] {
    const std::vector<std::string> binary_tg = {"terrible", "great"};
    const std::vector<std::string> binary_np = {"negative", "positive"};
    const std::vector<std::string> binary_syn = {"bad", "good"};
    const std::vector<std::string> five = {"terrible", "bad", "okay", "good", "great"};
    const std::vector<std::string> five_syn = {"horrible", "negative", "neutral", "positive", "excellent"};
    const Template review{"Review:", "Sentiment:"};
    const Template tweet{"Tweet:", "Sentiment:"};
    std::vector<TaskSpec> v = {
        {"CR", binary_tg, binary_syn, review, true},
        {"Amz", binary_np, binary_syn, review, true},
        {"Amz5", five, five_syn, review, true},
        {"Yelp", binary_np, binary_syn, review, true},
        {"Yelp5", five, five_syn, review, true},
        {"Tweet", {"negative", "neutral", "positive"}, {"bad", "normal", "good"}, tweet, true},
        {"MR", binary_tg, binary_syn, review, false},
        {"SST2", binary_tg, binary_syn, review, false},
        {"SST5", five, five_syn, review, false},
    };
    for (const auto& t : v) t.validate();
    return v;
  }();
  return tasks;
}

const TaskSpec* find_builtin_task(std::string_view name) {
  const auto want = to_lower_ascii(name);
  for (const auto& t : builtin_tasks()) {
    if (to_lower_ascii(t.name) == want) return &t;
  }
  return nullptr;
}

}  // namespace zicl::demos
