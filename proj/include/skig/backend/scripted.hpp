#pragma once

#include <atomic>
#include <string>
#include <vector>

#include "skig/backend/backend.hpp"

namespace skig::backend {

// Deterministic offline backend. The reply to a request is chosen by the
// first rule whose `contains` text appears in the last user message; when no
// rule matches, `default_response` is returned. Identical requests always get
// identical responses.
struct ScriptRule {
  std::string contains;
  std::string response;
};

struct ScriptedConfig {
  BackendConfig backend;
  std::vector<ScriptRule> rules;
  std::string default_response = "Understood.";
  int fail_first_calls = 0;   // transient transport errors for retry tests
  int abort_after_calls = 0;  // simulated crash: fatal error once N calls have completed
};

class ScriptedBackend : public Backend {
 public:
  explicit ScriptedBackend(ScriptedConfig config);

  ChatResponse complete(const ChatRequest& request) override;
  const BackendConfig& config() const override { return config_.backend; }

  int64_t calls() const { return calls_.load(); }

 private:
  ScriptedConfig config_;
  std::atomic<int64_t> calls_{0};
  std::atomic<int64_t> failures_left_{0};
};

ScriptedConfig scripted_config_from_json(const nlohmann::json& j);

}  // namespace skig::backend
