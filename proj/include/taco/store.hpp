#pragma once

// Per-session persistence with optimistic versioning.

#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "taco/errors.hpp"
#include "taco/model.hpp"

namespace taco::store {

class StorageError : public Error {
 public:
  using Error::Error;
};

class VersionConflict : public Error {
 public:
  VersionConflict(std::int64_t expected, std::int64_t actual)
      : Error("version conflict: write based on " + std::to_string(actual) + ", stored is " +
              std::to_string(expected)),
        expected_(expected),
        actual_(actual) {}
  std::int64_t stored() const { return expected_; }
  std::int64_t attempted() const { return actual_; }

 private:
  std::int64_t expected_;
  std::int64_t actual_;
};

class SessionStore {
 public:
  virtual ~SessionStore() = default;

  virtual std::optional<DialogueContext> get(const std::string& session_id) = 0;
  /// ctx.version must equal the stored version (0 when new). Returns ctx.version + 1
  /// and stores the context under that version. Throws VersionConflict.
  virtual std::int64_t put(const DialogueContext& ctx) = 0;

  /// Registers a session with an empty transcript.
  virtual void create(const std::string& session_id) = 0;
  virtual bool exists(const std::string& session_id) = 0;
  virtual void append_transcript(const std::string& session_id, const Json& entry) = 0;
  /// Throws NotFound for an unknown session.
  virtual std::vector<Json> transcript(const std::string& session_id) = 0;
};

class MemoryStore : public SessionStore {
 public:
  std::optional<DialogueContext> get(const std::string& session_id) override;
  std::int64_t put(const DialogueContext& ctx) override;
  void create(const std::string& session_id) override;
  bool exists(const std::string& session_id) override;
  void append_transcript(const std::string& session_id, const Json& entry) override;
  std::vector<Json> transcript(const std::string& session_id) override;

 private:
  std::mutex mu_;
  std::map<std::string, DialogueContext> contexts_;
  std::map<std::string, std::vector<Json>> transcripts_;
};

/// `<dir>/sessions/<id>.json` replaced atomically via temp file + rename;
/// `<dir>/transcripts/<id>.jsonl` appended one line per turn.
class FileStore : public SessionStore {
 public:
  explicit FileStore(std::filesystem::path dir);

  std::optional<DialogueContext> get(const std::string& session_id) override;
  std::int64_t put(const DialogueContext& ctx) override;
  void create(const std::string& session_id) override;
  bool exists(const std::string& session_id) override;
  void append_transcript(const std::string& session_id, const Json& entry) override;
  std::vector<Json> transcript(const std::string& session_id) override;

  /// Test hook called with "after_temp_write" once the temp file is durable and
  /// before the rename. Throwing from it simulates a crash mid-write.
  std::function<void(std::string_view stage)> crash_hook;

  std::filesystem::path session_path(const std::string& session_id) const;
  std::filesystem::path transcript_path(const std::string& session_id) const;

 private:
  std::filesystem::path dir_;
  std::mutex mu_;
};

/// Rejects ids that are empty or contain characters outside [A-Za-z0-9_-].
void check_session_id(const std::string& session_id);

}  // namespace taco::store
