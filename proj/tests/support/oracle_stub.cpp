// Line-protocol similarity oracle used by the tests.
//   oracle_stub score <value>     answer every request with <value>
//   oracle_stub malformed         answer with a line that is not JSON
//   oracle_stub sleep <seconds>   never answer in time
//   oracle_stub crash-on <token>  exit when a request mentions <token>
//   oracle_stub wrong-id          answer with a different id
//   oracle_stub count             score = 1 / (1 + |len(a) - len(b)|)
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>
#include <thread>

int main(int argc, char** argv) {
  const std::string mode = argc > 1 ? argv[1] : "score";
  const std::string arg = argc > 2 ? argv[2] : "0.5";
  std::string line;
  while (std::getline(std::cin, line)) {
    const auto req = nlohmann::json::parse(line);
    const auto id = req.at("id").get<long long>();
    if (mode == "malformed") {
      std::cout << "this is not json" << std::endl;
    } else if (mode == "sleep") {
      std::this_thread::sleep_for(std::chrono::seconds(std::atoi(arg.c_str())));
    } else if (mode == "crash-on") {
      if (line.find(arg) != std::string::npos) std::_Exit(3);
      std::cout << nlohmann::json{{"id", id}, {"score", 0.75}}.dump() << std::endl;
    } else if (mode == "wrong-id") {
      std::cout << nlohmann::json{{"id", id + 1}, {"score", 0.5}}.dump() << std::endl;
    } else if (mode == "count") {
      const double d = std::abs(static_cast<double>(req["a"].size()) - static_cast<double>(req["b"].size()));
      std::cout << nlohmann::json{{"id", id}, {"score", 1.0 / (1.0 + d)}}.dump() << std::endl;
    } else {
      std::cout << nlohmann::json{{"id", id}, {"score", std::atof(arg.c_str())}}.dump() << std::endl;
    }
  }
}
