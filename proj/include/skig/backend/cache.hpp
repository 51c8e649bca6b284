#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>

#include "skig/backend/backend.hpp"

namespace skig::backend {

std::string sha256_hex(const std::string& data);

// Key for the response cache: content hash of (model_id, messages,
// temperature). Requests at temperature > 0 are never cached so sampled runs
// stay honestly stochastic.
std::string cache_key(const ChatRequest& request);

class ResponseCache {
 public:
  explicit ResponseCache(std::filesystem::path root);

  std::optional<ChatResponse> lookup(const std::string& key) const;
  void store(const std::string& key, const ChatRequest& request, const ChatResponse& response);

 private:
  std::filesystem::path entry_path(const std::string& key) const;
  std::filesystem::path root_;
  mutable std::mutex write_mutex_;
};

class CachedBackend : public Backend {
 public:
  CachedBackend(BackendPtr inner, std::filesystem::path cache_dir)
      : inner_(std::move(inner)), cache_(std::move(cache_dir)) {}

  ChatResponse complete(const ChatRequest& request) override;
  const BackendConfig& config() const override { return inner_->config(); }

  int64_t hits() const { return hits_; }

 private:
  BackendPtr inner_;
  ResponseCache cache_;
  std::atomic<int64_t> hits_{0};
};

}  // namespace skig::backend
