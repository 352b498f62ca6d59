#include "binvar/oracle.hpp"

#include <poll.h>
#include <signal.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <map>
#include <nlohmann/json.hpp>

#include "binvar/error.hpp"

namespace binvar {

namespace {

std::string register_token(const RegisterOperand& r) {
  if (r.gpr) return "reg" + std::to_string(r.width);
  std::string cls;
  for (char c : r.name)
    if (std::isalpha(static_cast<unsigned char>(c))) cls += c;
  return cls.empty() ? "reg" : cls;
}

}  // namespace

std::string normalize_instruction(const Instruction& in, const BinaryImage* image) {
  std::string out = in.mnemonic;
  for (const Operand& op : in.operands) {
    out += ' ';
    switch (op.kind()) {
      case OperandKind::Register: out += register_token(*op.reg()); break;
      case OperandKind::Immediate: out += "imm"; break;
      case OperandKind::Memory: out += "[addr]"; break;
      case OperandKind::RelTarget:
        if (in.flow == Flow::Call)
          out += image && image->function_containing(*op.target()) ? "innerfunc" : "externfunc";
        else
          out += "label";
        break;
    }
  }
  return out;
}

TokenizedFunction tokenize(const BinaryImage& image, const FunctionView& fn) {
  TokenizedFunction t;
  t.binary = image.path;
  t.name = fn.name;
  const auto insns = fn.instructions();
  for (size_t i = 0; i < insns.size();) {
    size_t j = i;
    while (j < insns.size() && insns[j]->bytes.size() == 1 && insns[j]->bytes[0] == 0x90) ++j;
    if (j - i >= kPaddingMinLength) {
      i = j;
      continue;
    }
    const size_t end = std::max(j, i + 1);
    for (; i < end; ++i) t.tokens.push_back(normalize_instruction(*insns[i], &image));
  }
  return t;
}

double SimilarityOracle::score(const Tokens& a, const Tokens& b) {
  if (!token_cap_ || (a.size() <= *token_cap_ && b.size() <= *token_cap_)) return score_capped(a, b);
  auto cap = [&](const Tokens& t, const char* side) {
    if (t.size() <= *token_cap_) return t;
    std::lock_guard lock(log_mutex_);
    ++truncations_;
    log_.push_back(name() + ": truncated " + side + " from " + std::to_string(t.size()) + " to " +
                   std::to_string(*token_cap_) + " tokens");
    return Tokens(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(*token_cap_));
  };
  return score_capped(cap(a, "a"), cap(b, "b"));
}

namespace {

std::map<std::string, int64_t> ngram_counts(const Tokens& t, unsigned n) {
  std::map<std::string, int64_t> counts;
  auto gram = [&](size_t i, size_t len) {
    std::string key;
    for (size_t k = 0; k < len; ++k) {
      if (k) key += '\x1f';
      key += t[i + k];
    }
    return key;
  };
  if (t.empty()) return counts;
  if (t.size() < n) {
    ++counts[gram(0, t.size())];
    return counts;
  }
  for (size_t i = 0; i + n <= t.size(); ++i) ++counts[gram(i, n)];
  return counts;
}

}  // namespace

double ngram_cosine(const Tokens& a, const Tokens& b, unsigned n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "n-gram width must be positive");
  const auto ca = ngram_counts(a, n);
  const auto cb = ngram_counts(b, n);
  // Integer dot products keep the result exactly symmetric.
  int64_t dot = 0, na = 0, nb = 0;
  for (const auto& [k, v] : ca) {
    na += v * v;
    if (auto it = cb.find(k); it != cb.end()) dot += v * it->second;
  }
  for (const auto& [k, v] : cb) nb += v * v;
  if (na == 0 || nb == 0) return a == b ? 1.0 : 0.0;
  const double s = static_cast<double>(dot) / (std::sqrt(static_cast<double>(na)) * std::sqrt(static_cast<double>(nb)));
  return std::clamp(s, 0.0, 1.0);
}

double reference_score(const Tokens& a, const Tokens& b) {
  if (a.empty() || b.empty()) throw Error(ErrorKind::EmptyFunction, "cannot score an empty token list");
  return ngram_cosine(a, b, 2);
}

double NgramOracle::score_capped(const Tokens& a, const Tokens& b) {
  if (a.empty() || b.empty()) throw Error(ErrorKind::EmptyFunction, "cannot score an empty token list");
  return ngram_cosine(a, b, n_);
}

ExternalOracle::ExternalOracle(std::string command, double threshold, ExternalOracleOptions options)
    : SimilarityOracle(threshold, options.token_cap), command_(std::move(command)), options_(options) {
  if (command_.empty()) throw Error(ErrorKind::OracleUnavailable, "empty oracle command");
}

ExternalOracle::~ExternalOracle() { stop(); }

void ExternalOracle::start() {
  int sv[2];
  if (socketpair(AF_UNIX, SOCK_STREAM | SOCK_CLOEXEC, 0, sv) != 0)
    throw Error(ErrorKind::OracleUnavailable, "socketpair failed");
  const pid_t pid = fork();
  if (pid < 0) {
    close(sv[0]);
    close(sv[1]);
    throw Error(ErrorKind::OracleUnavailable, "fork failed");
  }
  if (pid == 0) {
    dup2(sv[1], STDIN_FILENO);
    dup2(sv[1], STDOUT_FILENO);
    execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(sv[1]);
  pid_ = pid;
  fd_ = sv[0];
  pending_.clear();
}

void ExternalOracle::stop() {
  if (fd_ >= 0) close(fd_);
  fd_ = -1;
  if (pid_ > 0) {
    kill(pid_, SIGKILL);
    waitpid(pid_, nullptr, 0);
  }
  pid_ = -1;
  pending_.clear();
}

namespace {

struct ChildGone {};

}  // namespace

double ExternalOracle::round_trip(const std::string& line, uint64_t id) {
  const auto deadline = std::chrono::steady_clock::now() + options_.timeout;
  size_t off = 0;
  while (off < line.size()) {
    const ssize_t n = send(fd_, line.data() + off, line.size() - off, MSG_NOSIGNAL);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) throw ChildGone{};
    off += static_cast<size_t>(n);
  }
  for (;;) {
    if (auto nl = pending_.find('\n'); nl != std::string::npos) {
      const std::string reply = pending_.substr(0, nl);
      pending_.erase(0, nl + 1);
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(reply);
      } catch (const nlohmann::json::exception&) {
        throw Error(ErrorKind::ProtocolViolation, "malformed reply: " + reply.substr(0, 200));
      }
      if (!j.is_object() || !j.contains("id") || !j["id"].is_number_integer() || !j.contains("score") ||
          !j["score"].is_number())
        throw Error(ErrorKind::ProtocolViolation, "reply lacks id or score: " + reply.substr(0, 200));
      if (j["id"].get<uint64_t>() != id)
        throw Error(ErrorKind::ProtocolViolation, "reply id does not match request " + std::to_string(id));
      const double s = j["score"].get<double>();
      if (!(s >= 0.0 && s <= 1.0)) throw Error(ErrorKind::ProtocolViolation, "score outside [0,1]");
      return s;
    }
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) {
      stop();
      throw Error(ErrorKind::Timeout, name() + " did not answer within " + std::to_string(options_.timeout.count()) + " ms");
    }
    pollfd p{fd_, POLLIN, 0};
    const int r = poll(&p, 1, static_cast<int>(left.count()));
    if (r < 0 && errno == EINTR) continue;
    if (r == 0) continue;
    char buf[4096];
    const ssize_t n = read(fd_, buf, sizeof buf);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) throw ChildGone{};
    pending_.append(buf, static_cast<size_t>(n));
  }
}

double ExternalOracle::score_capped(const Tokens& a, const Tokens& b) {
  std::lock_guard lock(mutex_);
  const uint64_t id = next_id_++;
  const std::string line = nlohmann::json{{"id", id}, {"a", a}, {"b", b}}.dump() + "\n";
  for (int attempt = 0; attempt <= options_.max_restarts; ++attempt) {
    if (fd_ < 0) start();
    try {
      return round_trip(line, id);
    } catch (const ChildGone&) {
      stop();
      ++restarts_;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ProtocolViolation) stop();
      throw;
    }
  }
  throw Error(ErrorKind::OracleUnavailable,
              name() + " exited " + std::to_string(options_.max_restarts + 1) + " times on one query");
}

std::unique_ptr<SimilarityOracle> make_oracle(const std::string& spec, double threshold) {
  if (spec == "ref") return std::make_unique<NgramOracle>(2, threshold);
  if (spec.rfind("ref:", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(spec.substr(4));
    } catch (const std::exception&) {
    }
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "bad n-gram width in oracle spec " + spec);
    return std::make_unique<NgramOracle>(static_cast<unsigned>(n), threshold);
  }
  if (spec.rfind("cmd:", 0) == 0) return std::make_unique<ExternalOracle>(spec.substr(4), threshold);
  throw Error(ErrorKind::InvalidArgument, "oracle spec must be ref, ref:N or cmd:<command>, got " + spec);
}

}  // namespace binvar
