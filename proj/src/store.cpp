#include "taco/store.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>

namespace taco::store {

void check_session_id(const std::string& id) {
  if (id.empty() || id.size() > 128 ||
      !std::all_of(id.begin(), id.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_'; }))
    throw StorageError("invalid session id '" + id + "'");
}

// ---------------------------------------------------------------------------

std::optional<DialogueContext> MemoryStore::get(const std::string& id) {
  std::lock_guard lock(mu_);
  auto it = contexts_.find(id);
  if (it == contexts_.end()) return std::nullopt;
  return it->second;
}

std::int64_t MemoryStore::put(const DialogueContext& ctx) {
  std::lock_guard lock(mu_);
  auto it = contexts_.find(ctx.session_id);
  std::int64_t stored = it == contexts_.end() ? 0 : it->second.version;
  if (ctx.version != stored) throw VersionConflict(stored, ctx.version);
  DialogueContext copy = ctx;
  copy.version = stored + 1;
  contexts_[ctx.session_id] = std::move(copy);
  transcripts_.try_emplace(ctx.session_id);
  return stored + 1;
}

void MemoryStore::create(const std::string& id) {
  std::lock_guard lock(mu_);
  transcripts_.try_emplace(id);
}

bool MemoryStore::exists(const std::string& id) {
  std::lock_guard lock(mu_);
  return transcripts_.count(id) > 0 || contexts_.count(id) > 0;
}

void MemoryStore::append_transcript(const std::string& id, const Json& entry) {
  std::lock_guard lock(mu_);
  transcripts_[id].push_back(entry);
}

std::vector<Json> MemoryStore::transcript(const std::string& id) {
  std::lock_guard lock(mu_);
  auto it = transcripts_.find(id);
  if (it == transcripts_.end()) throw NotFound("unknown session '" + id + "'");
  return it->second;
}

// ---------------------------------------------------------------------------

namespace {

void write_durably(const std::filesystem::path& path, const std::string& bytes) {
  int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
  if (fd < 0) throw StorageError("cannot open " + path.string() + ": " + std::strerror(errno));
  std::size_t off = 0;
  while (off < bytes.size()) {
    auto n = ::write(fd, bytes.data() + off, bytes.size() - off);
    if (n < 0) {
      if (errno == EINTR) continue;
      ::close(fd);
      throw StorageError("write failed for " + path.string());
    }
    off += static_cast<std::size_t>(n);
  }
  ::fsync(fd);
  ::close(fd);
}

}  // namespace

FileStore::FileStore(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_ / "sessions", ec);
  std::filesystem::create_directories(dir_ / "transcripts", ec);
  if (ec) throw StorageError("cannot create store directories under " + dir_.string());
}

std::filesystem::path FileStore::session_path(const std::string& id) const {
  check_session_id(id);
  return dir_ / "sessions" / (id + ".json");
}

std::filesystem::path FileStore::transcript_path(const std::string& id) const {
  check_session_id(id);
  return dir_ / "transcripts" / (id + ".jsonl");
}

std::optional<DialogueContext> FileStore::get(const std::string& id) {
  auto path = session_path(id);
  std::lock_guard lock(mu_);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    Json j = Json::parse(in);
    return j.get<DialogueContext>();
  } catch (const std::exception& e) {
    throw StorageError("corrupt session file " + path.string() + ": " + e.what());
  }
}

std::int64_t FileStore::put(const DialogueContext& ctx) {
  auto path = session_path(ctx.session_id);
  std::lock_guard lock(mu_);
  std::int64_t stored = 0;
  {
    std::ifstream in(path);
    if (in) {
      try {
        stored = Json::parse(in).at("version").get<std::int64_t>();
      } catch (const std::exception& e) {
        throw StorageError("corrupt session file " + path.string() + ": " + e.what());
      }
    }
  }
  if (ctx.version != stored) throw VersionConflict(stored, ctx.version);
  DialogueContext copy = ctx;
  copy.version = stored + 1;
  auto tmp = path;
  tmp += ".tmp";
  write_durably(tmp, Json(copy).dump());
  if (crash_hook) crash_hook("after_temp_write");
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw StorageError("rename failed for " + path.string() + ": " + ec.message());
  if (!std::filesystem::exists(transcript_path(ctx.session_id))) std::ofstream(transcript_path(ctx.session_id)).flush();
  return copy.version;
}

void FileStore::create(const std::string& id) {
  auto path = transcript_path(id);
  std::lock_guard lock(mu_);
  if (!std::filesystem::exists(path)) {
    std::ofstream out(path);
    if (!out) throw StorageError("cannot create " + path.string());
  }
}

bool FileStore::exists(const std::string& id) {
  std::lock_guard lock(mu_);
  return std::filesystem::exists(transcript_path(id)) || std::filesystem::exists(session_path(id));
}

void FileStore::append_transcript(const std::string& id, const Json& entry) {
  auto path = transcript_path(id);
  std::lock_guard lock(mu_);
  std::ofstream out(path, std::ios::app);
  if (!out) throw StorageError("cannot append to " + path.string());
  out << entry.dump() << '\n';
}

std::vector<Json> FileStore::transcript(const std::string& id) {
  auto path = transcript_path(id);
  std::lock_guard lock(mu_);
  std::ifstream in(path);
  if (!in) throw NotFound("unknown session '" + id + "'");
  std::vector<Json> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      out.push_back(Json::parse(line));
    } catch (const std::exception&) {
      break;  // torn final line from an interrupted append
    }
  }
  return out;
}

}  // namespace taco::store
