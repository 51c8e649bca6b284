#include "skig/backend/http.hpp"

#include <httplib.h>

#include <cstdlib>
#include <thread>

#include "skig/common.hpp"

namespace skig::backend {

using nlohmann::json;

ParsedUrl parse_base_url(const std::string& base_url) {
  ParsedUrl out;
  size_t scheme_end = base_url.find("://");
  if (scheme_end == std::string::npos) {
    fail(Errc::invalid_argument, "base_url needs a scheme: " + base_url);
  }
  size_t host_start = scheme_end + 3;
  size_t path_start = base_url.find('/', host_start);
  std::string host_port;
  if (path_start == std::string::npos) {
    out.scheme_host_port = base_url;
    host_port = base_url.substr(host_start);
  } else {
    out.scheme_host_port = base_url.substr(0, path_start);
    host_port = base_url.substr(host_start, path_start - host_start);
    std::string prefix = base_url.substr(path_start);
    while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
    out.path_prefix = prefix;
  }
  std::string host = host_port.substr(0, host_port.find(':'));
  out.loopback = host == "localhost" || host == "127.0.0.1" || host == "::1";
  return out;
}

json chat_request_body(const ChatRequest& request) {
  json messages = json::array();
  for (const auto& message : request.messages) {
    messages.push_back({{"role", core::role_name(message.role)}, {"content", message.text}});
  }
  json body{
      {"model", request.model_id},
      {"messages", messages},
      {"temperature", request.temperature},
      {"max_tokens", request.max_tokens},
  };
  if (!request.stop.empty()) body["stop"] = request.stop;
  return body;
}

HttpBackend::HttpBackend(BackendConfig config) : config_(std::move(config)) {
  config_.validate();
  url_ = parse_base_url(config_.base_url);
}

void HttpBackend::throttle() {
  if (config_.min_request_interval_ms <= 0) return;
  std::lock_guard<std::mutex> lock(throttle_mutex_);
  const auto interval = std::chrono::milliseconds(config_.min_request_interval_ms);
  const auto now = std::chrono::steady_clock::now();
  if (last_request_.time_since_epoch().count() != 0 && now - last_request_ < interval) {
    std::this_thread::sleep_for(interval - (now - last_request_));
  }
  last_request_ = std::chrono::steady_clock::now();
}

ChatResponse HttpBackend::attempt(const ChatRequest& request, const std::string& api_key) {
  throttle();
  httplib::Client client(url_.scheme_host_port);
  client.set_connection_timeout(config_.timeout_ms / 1000, (config_.timeout_ms % 1000) * 1000);
  client.set_read_timeout(config_.timeout_ms / 1000, (config_.timeout_ms % 1000) * 1000);
  httplib::Headers headers;
  if (!api_key.empty()) headers.emplace("Authorization", "Bearer " + api_key);

  const auto started = std::chrono::steady_clock::now();
  auto http_result = client.Post(url_.path_prefix + "/chat/completions", headers,
                                 chat_request_body(request).dump(), "application/json");
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();

  if (!http_result) {
    fail(Errc::transport, "connection error: " + httplib::to_string(http_result.error()));
  }
  const int status = http_result->status;
  if (status == 401 || status == 403) {
    fail(Errc::auth, "authorization rejected (" + std::to_string(status) + ")");
  }
  if (status == 429) fail(Errc::rate_limited, "rate limited");
  if (status >= 500 || status == 408) {
    fail(Errc::transport, "server error " + std::to_string(status));
  }
  if (status != 200) {
    fail(Errc::invalid_argument,
         "request rejected (" + std::to_string(status) + "): " + http_result->body.substr(0, 200));
  }

  json j;
  try {
    j = json::parse(http_result->body);
  } catch (const json::parse_error& e) {
    fail(Errc::transport, std::string("unparseable response body: ") + e.what());
  }
  if (!j.contains("choices") || j["choices"].empty()) {
    fail(Errc::transport, "response has no choices");
  }
  const json& choice = j["choices"][0];

  ChatResponse response;
  if (choice.contains("message")) {
    response.text = choice["message"].value("content", "");
  } else {
    response.text = choice.value("text", "");
  }
  response.finish_reason = choice.value("finish_reason", "");
  if (j.contains("usage")) {
    response.prompt_tokens = j["usage"].value("prompt_tokens", int64_t{0});
    response.completion_tokens = j["usage"].value("completion_tokens", int64_t{0});
  } else {
    response.prompt_tokens = estimate_request_tokens(request);
    response.completion_tokens = estimate_tokens(response.text);
  }
  response.latency_ms = elapsed;
  return response;
}

ChatResponse HttpBackend::complete(const ChatRequest& request) {
  request.validate();
  if (estimate_request_tokens(request) > config_.context_limit) {
    fail(Errc::context_overflow, "estimated prompt tokens exceed context limit of " +
                                     std::to_string(config_.context_limit));
  }
  const char* key = std::getenv(config_.api_key_env.c_str());
  if ((key == nullptr || *key == '\0') && !url_.loopback) {
    fail(Errc::auth, "environment variable " + config_.api_key_env + " is not set");
  }
  const std::string api_key = key ? key : "";
  return with_retries(config_.retry, [&] { return attempt(request, api_key); });
}

}  // namespace skig::backend
