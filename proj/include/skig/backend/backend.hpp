#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "skig/core/types.hpp"

namespace skig::backend {

struct ChatMessage {
  core::Role role = core::Role::user;
  std::string text;
};

struct ChatRequest {
  std::string model_id;
  std::vector<ChatMessage> messages;
  double temperature = 0.0;
  int max_tokens = 1024;
  std::vector<std::string> stop;

  void validate() const;  // messages non-empty, temperature finite in [0,2], max_tokens > 0
};

struct ChatResponse {
  std::string text;
  std::string finish_reason;
  int64_t prompt_tokens = 0;
  int64_t completion_tokens = 0;
  int64_t latency_ms = 0;
};

struct RetryPolicy {
  int max_attempts = 3;
  int backoff_ms = 250;  // doubles per attempt
};

struct BackendConfig {
  std::string kind = "http";  // "http" or "scripted"
  std::string base_url = "https://api.openai.com/v1";
  std::string api_key_env = "OPENAI_API_KEY";
  std::string model_id;
  int64_t context_limit = 16384;
  RetryPolicy retry;
  int timeout_ms = 120000;
  int min_request_interval_ms = 0;  // request-rate throttle, 0 = off

  void validate() const;
};

// Crude but deterministic token count used only for context-overflow
// guarding: ceil(bytes / 4).
int64_t estimate_tokens(const std::string& text);
int64_t estimate_request_tokens(const ChatRequest& request);

class Backend {
 public:
  virtual ~Backend() = default;
  // Returns assistant text; throws Error with codes auth / rate_limited /
  // context_overflow / transport. Safe for concurrent callers.
  virtual ChatResponse complete(const ChatRequest& request) = 0;
  virtual const BackendConfig& config() const = 0;
};

// Runs `attempt` up to policy.max_attempts times, sleeping backoff_ms * 2^k
// between tries. Only transport and rate-limit errors are retried; auth,
// overflow and scripted aborts surface immediately.
ChatResponse with_retries(const RetryPolicy& policy,
                          const std::function<ChatResponse()>& attempt);

using BackendPtr = std::shared_ptr<Backend>;

BackendConfig backend_config_from_json(const nlohmann::json& j);

// Builds scripted or HTTP backends from a config file, wrapping them in the
// response cache when cache_dir is non-empty.
BackendPtr make_backend(const nlohmann::json& config_json, const std::string& cache_dir = "");
BackendPtr load_backend(const std::string& config_path, const std::string& cache_dir = "");

}  // namespace skig::backend
