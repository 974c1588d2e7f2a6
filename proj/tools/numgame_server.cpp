// numgame-server: HTTP/JSON session service for interactive play.
//
//   numgame-server [--host 127.0.0.1] [--port 8080] [--log-dir sessions] [--step-cap 10000]

#include <iostream>

#include "CLI11.hpp"
#include "numgame/http.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Numbers game session service"};
  std::string host = "127.0.0.1", log_dir;
  int port = 8080;
  int step_cap = numgame::kServiceStepCap;
  app.add_option("--host", host, "bind address");
  app.add_option("--port", port, "port");
  app.add_option("--log-dir", log_dir, "directory for append-only session logs");
  app.add_option("--step-cap", step_cap, "firings allowed per session");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    numgame::SessionStore store(log_dir, step_cap);
    httplib::Server server;
    numgame::install_routes(server, store);
    std::cerr << "listening on " << host << ":" << port << " (" << store.size() << " sessions restored)\n";
    if (!server.listen(host, port)) {
      std::cerr << "error: cannot bind " << host << ":" << port << '\n';
      return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
