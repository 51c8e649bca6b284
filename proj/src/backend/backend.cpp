#include "skig/backend/backend.hpp"

#include <chrono>
#include <cmath>
#include <thread>

#include "skig/backend/cache.hpp"
#include "skig/backend/http.hpp"
#include "skig/backend/scripted.hpp"
#include "skig/common.hpp"
#include "skig/util/fs.hpp"

namespace skig::backend {

using nlohmann::json;

void ChatRequest::validate() const {
  if (messages.empty()) fail(Errc::invalid_argument, "chat request has no messages");
  if (!std::isfinite(temperature) || temperature < 0.0 || temperature > 2.0) {
    fail(Errc::invalid_argument, "temperature must be finite in [0,2]");
  }
  if (max_tokens <= 0) fail(Errc::invalid_argument, "max_tokens must be positive");
}

void BackendConfig::validate() const {
  if (model_id.empty()) fail(Errc::invalid_argument, "backend config needs model_id");
  if (context_limit <= 0) fail(Errc::invalid_argument, "context_limit must be positive");
  if (retry.max_attempts < 1) fail(Errc::invalid_argument, "max_attempts must be >= 1");
}

ChatResponse with_retries(const RetryPolicy& policy,
                          const std::function<ChatResponse()>& attempt) {
  int backoff = policy.backoff_ms;
  for (int k = 1;; ++k) {
    try {
      return attempt();
    } catch (const Error& e) {
      const bool retryable = e.code() == Errc::transport || e.code() == Errc::rate_limited;
      if (!retryable || k >= policy.max_attempts) throw;
    }
    if (backoff > 0) std::this_thread::sleep_for(std::chrono::milliseconds(backoff));
    backoff *= 2;
  }
}

int64_t estimate_tokens(const std::string& text) {
  return static_cast<int64_t>((text.size() + 3) / 4);
}

int64_t estimate_request_tokens(const ChatRequest& request) {
  int64_t total = 0;
  for (const auto& message : request.messages) total += estimate_tokens(message.text);
  return total;
}

BackendConfig backend_config_from_json(const json& j) {
  BackendConfig cfg;
  cfg.kind = j.value("kind", cfg.kind);
  cfg.base_url = j.value("base_url", cfg.base_url);
  cfg.api_key_env = j.value("api_key_env", cfg.api_key_env);
  cfg.model_id = j.value("model_id", cfg.model_id);
  cfg.context_limit = j.value("context_limit", cfg.context_limit);
  cfg.retry.max_attempts = j.value("max_attempts", cfg.retry.max_attempts);
  cfg.retry.backoff_ms = j.value("backoff_ms", cfg.retry.backoff_ms);
  cfg.timeout_ms = j.value("timeout_ms", cfg.timeout_ms);
  cfg.min_request_interval_ms = j.value("min_request_interval_ms", cfg.min_request_interval_ms);
  cfg.validate();
  return cfg;
}

BackendPtr make_backend(const json& config_json, const std::string& cache_dir) {
  const std::string kind = config_json.value("kind", "http");
  BackendPtr inner;
  if (kind == "scripted") {
    inner = std::make_shared<ScriptedBackend>(scripted_config_from_json(config_json));
  } else if (kind == "http") {
    inner = std::make_shared<HttpBackend>(backend_config_from_json(config_json));
  } else {
    fail(Errc::invalid_argument, "unknown backend kind '" + kind + "'");
  }
  if (!cache_dir.empty()) {
    return std::make_shared<CachedBackend>(inner, cache_dir);
  }
  return inner;
}

BackendPtr load_backend(const std::string& config_path, const std::string& cache_dir) {
  json j = json::parse(util::read_file(config_path));
  return make_backend(j, cache_dir);
}

}  // namespace skig::backend
