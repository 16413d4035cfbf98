#include "taco/server.hpp"

#include <httplib.h>

namespace taco::server {

TurnInput parse_turn_body(const std::string& body) {
  Json j;
  try {
    j = Json::parse(body);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("request body is not JSON: ") + e.what());
  }
  try {
    if (j.contains("utterance")) return TurnInput::say(j.at("utterance").get<std::string>());
    if (j.contains("touch")) return TurnInput::tap(j.at("touch").get<std::vector<TouchArg>>());
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed turn body: ") + e.what());
  }
  throw ParseError("turn body needs \"utterance\" or \"touch\"");
}

struct HttpService::Impl {
  engine::Engine& engine;
  httplib::Server http;

  explicit Impl(engine::Engine& e) : engine(e) {
    http.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
    http.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

    http.Post("/sessions", [this](const httplib::Request&, httplib::Response& res) {
      guarded(res, [&] {
        res.status = 201;
        send(res, Json{{"session_id", engine.create_session()}});
      });
    });
    http.Post(R"(/sessions/([A-Za-z0-9_-]+)/turns)", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        TurnInput input = parse_turn_body(req.body);
        send(res, Json(engine.handle_turn(req.matches[1], input)));
      });
    });
    http.Get(R"(/sessions/([A-Za-z0-9_-]+)/transcript)", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] { send(res, Json(engine.transcript(req.matches[1]))); });
    });
  }

  static void send(httplib::Response& res, const Json& j) { res.set_content(j.dump(), "application/json"); }

  template <typename F>
  static void guarded(httplib::Response& res, F&& f) {
    auto fail = [&](int status, const std::string& kind, const std::string& message) {
      res.status = status;
      send(res, Json{{"error", kind}, {"message", message}});
    };
    try {
      f();
    } catch (const ParseError& e) {
      fail(400, "bad_request", e.what());
    } catch (const store::StorageError& e) {
      fail(500, "storage_error", e.what());
    } catch (const NotFound& e) {
      fail(404, "not_found", e.what());
    } catch (const engine::SessionBusy& e) {
      fail(409, "session_busy", e.what());
    } catch (const std::exception& e) {
      fail(500, "internal", e.what());
    }
  }
};

HttpService::HttpService(engine::Engine& engine) : impl_(std::make_unique<Impl>(engine)) {}
HttpService::~HttpService() = default;

bool HttpService::listen(const std::string& host, int port) { return impl_->http.listen(host, port); }
int HttpService::bind_any_port(const std::string& host) { return impl_->http.bind_to_any_port(host); }
bool HttpService::listen_after_bind() { return impl_->http.listen_after_bind(); }
void HttpService::stop() { impl_->http.stop(); }
void HttpService::wait_until_ready() const { impl_->http.wait_until_ready(); }

}  // namespace taco::server
