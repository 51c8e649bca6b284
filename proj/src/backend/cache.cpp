#include "skig/backend/cache.hpp"

#include <openssl/evp.h>

#include <cstdio>

#include "skig/common.hpp"
#include "skig/util/fs.hpp"

namespace skig::backend {

using nlohmann::json;

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    fail(Errc::io, "sha256 failed");
  }
  static const char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(length * 2);
  for (unsigned int i = 0; i < length; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

std::string cache_key(const ChatRequest& request) {
  json messages = json::array();
  for (const auto& message : request.messages) {
    messages.push_back({{"role", core::role_name(message.role)}, {"content", message.text}});
  }
  json key{{"model", request.model_id}, {"messages", messages}, {"temperature", request.temperature}};
  return sha256_hex(key.dump());
}

ResponseCache::ResponseCache(std::filesystem::path root) : root_(std::move(root)) {}

std::filesystem::path ResponseCache::entry_path(const std::string& key) const {
  return root_ / key.substr(0, 2) / (key + ".json");
}

std::optional<ChatResponse> ResponseCache::lookup(const std::string& key) const {
  const auto path = entry_path(key);
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return std::nullopt;
  json j = json::parse(util::read_file(path));
  ChatResponse response;
  response.text = j.at("text").get<std::string>();
  response.finish_reason = j.value("finish_reason", "stop");
  response.prompt_tokens = j.value("prompt_tokens", int64_t{0});
  response.completion_tokens = j.value("completion_tokens", int64_t{0});
  response.latency_ms = 0;  // a hit costs nothing
  return response;
}

void ResponseCache::store(const std::string& key, const ChatRequest& request,
                          const ChatResponse& response) {
  json j{
      {"v", 1},
      {"model", request.model_id},
      {"temperature", request.temperature},
      {"text", response.text},
      {"finish_reason", response.finish_reason},
      {"prompt_tokens", response.prompt_tokens},
      {"completion_tokens", response.completion_tokens},
  };
  std::lock_guard<std::mutex> lock(write_mutex_);
  util::write_file_atomic(entry_path(key), j.dump());
}

ChatResponse CachedBackend::complete(const ChatRequest& request) {
  if (request.temperature != 0.0) return inner_->complete(request);
  const std::string key = cache_key(request);
  if (auto cached = cache_.lookup(key)) {
    hits_.fetch_add(1);
    return *cached;
  }
  ChatResponse response = inner_->complete(request);
  cache_.store(key, request, response);
  return response;
}

}  // namespace skig::backend
