#pragma once

#include <chrono>
#include <mutex>

#include "skig/backend/backend.hpp"

namespace skig::backend {

struct ParsedUrl {
  std::string scheme_host_port;  // e.g. "http://127.0.0.1:8080"
  std::string path_prefix;       // e.g. "/v1", no trailing slash
  bool loopback = false;
};

ParsedUrl parse_base_url(const std::string& base_url);

// OpenAI-compatible chat-completions client. Retries transient failures per
// the config policy; 401/403 map to auth, 429 to rate-limited, connection
// errors and 5xx to transport. An optional throttle spaces out requests.
class HttpBackend : public Backend {
 public:
  explicit HttpBackend(BackendConfig config);

  ChatResponse complete(const ChatRequest& request) override;
  const BackendConfig& config() const override { return config_; }

 private:
  void throttle();
  ChatResponse attempt(const ChatRequest& request, const std::string& api_key);

  BackendConfig config_;
  ParsedUrl url_;
  std::mutex throttle_mutex_;
  std::chrono::steady_clock::time_point last_request_{};
};

nlohmann::json chat_request_body(const ChatRequest& request);

}  // namespace skig::backend
