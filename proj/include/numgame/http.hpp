// Routes for the session service on a cpp-httplib server.

#ifndef NUMGAME_HTTP_HPP_
#define NUMGAME_HTTP_HPP_

#include "httplib.h"
#include "service.hpp"

namespace numgame {

inline void install_routes(httplib::Server& server, SessionStore& store_ref) {
  SessionStore* st = &store_ref;
  auto reply = [](httplib::Response& res, const Response& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  auto body_of = [](const httplib::Request& req) -> json {
    if (req.body.empty()) return json::object();
    return json::parse(req.body, nullptr, false);  // discarded value on error
  };
  auto bad_body = [reply](httplib::Response& res) {
    reply(res, error_response(400, "ParseError", "request body is not valid JSON"));
  };

  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  server.Post("/sessions", [st, reply, body_of, bad_body](const httplib::Request& req, httplib::Response& res) {
    json body = body_of(req);
    if (body.is_discarded()) return bad_body(res);
    reply(res, st->create(body));
  });
  server.Get(R"(/sessions/([^/]+))", [st, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, st->get(req.matches[1]));
  });
  server.Get(R"(/sessions/([^/]+)/analysis)", [st, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, st->analysis(req.matches[1]));
  });
  auto post_with_body = [&server, st, reply, body_of, bad_body](const char* pattern, auto method) {
    server.Post(pattern, [st, reply, body_of, bad_body, method](const httplib::Request& req, httplib::Response& res) {
      json body = body_of(req);
      if (body.is_discarded()) return bad_body(res);
      reply(res, (st->*method)(req.matches[1], body));
    });
  };
  post_with_body(R"(/sessions/([^/]+)/fire)", &SessionStore::fire_node);
  post_with_body(R"(/sessions/([^/]+)/whatif)", &SessionStore::whatif);
  post_with_body(R"(/sessions/([^/]+)/autoplay)", &SessionStore::autoplay);
  server.Post(R"(/sessions/([^/]+)/undo)", [st, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, st->undo(req.matches[1]));
  });
  server.Get("/presets", [reply](const httplib::Request&, httplib::Response& res) {
    reply(res, SessionStore::presets());
  });
}

} // namespace numgame

#endif
