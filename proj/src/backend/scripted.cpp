#include "skig/backend/scripted.hpp"

#include "skig/common.hpp"

namespace skig::backend {

using nlohmann::json;

ScriptedBackend::ScriptedBackend(ScriptedConfig config) : config_(std::move(config)) {
  config_.backend.validate();
  failures_left_.store(config_.fail_first_calls);
}

ChatResponse ScriptedBackend::complete(const ChatRequest& request) {
  request.validate();
  if (estimate_request_tokens(request) > config_.backend.context_limit) {
    fail(Errc::context_overflow, "estimated prompt tokens exceed context limit");
  }
  return with_retries(config_.backend.retry, [&] {
    if (failures_left_.fetch_sub(1) > 0) {
      fail(Errc::transport, "scripted transient failure");
    }

    const std::string* last_user = nullptr;
    for (const auto& message : request.messages) {
      if (message.role == core::Role::user) last_user = &message.text;
    }
    if (!last_user) fail(Errc::invalid_argument, "scripted backend needs a user message");

    std::string reply = config_.default_response;
    for (const auto& rule : config_.rules) {
      if (last_user->find(rule.contains) != std::string::npos) {
        reply = rule.response;
        break;
      }
    }

    const int64_t done = calls_.fetch_add(1) + 1;
    if (config_.abort_after_calls > 0 && done >= config_.abort_after_calls) {
      fail(Errc::script_abort, "scripted abort after " + std::to_string(done) + " calls");
    }

    ChatResponse response;
    response.text = reply;
    response.finish_reason = "stop";
    response.prompt_tokens = estimate_request_tokens(request);
    response.completion_tokens = estimate_tokens(reply);
    response.latency_ms = 0;
    return response;
  });
}

ScriptedConfig scripted_config_from_json(const json& j) {
  ScriptedConfig cfg;
  cfg.backend = backend_config_from_json(j);
  if (j.contains("rules")) {
    for (const auto& rule_json : j["rules"]) {
      ScriptRule rule;
      rule.contains = rule_json.at("contains").get<std::string>();
      rule.response = rule_json.at("response").get<std::string>();
      cfg.rules.push_back(std::move(rule));
    }
  }
  cfg.default_response = j.value("default_response", cfg.default_response);
  cfg.fail_first_calls = j.value("fail_first_calls", 0);
  cfg.abort_after_calls = j.value("abort_after_calls", 0);
  return cfg;
}

}  // namespace skig::backend
