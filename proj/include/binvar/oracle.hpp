#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "binvar/image.hpp"

namespace binvar {

using Tokens = std::vector<std::string>;

struct TokenizedFunction {
  Tokens tokens;
  std::string binary;
  std::string name;
};

/// Mnemonic plus operands in width-classed form: registers become regN (N in
/// bytes), immediates imm, memory [addr], direct call targets innerfunc or
/// externfunc, other branch targets label. `image` decides call locality.
std::string normalize_instruction(const Instruction& in, const BinaryImage* image = nullptr);

/// Runs of at least kPaddingMinLength one-byte NOPs are placeholder fill and
/// are left out.
TokenizedFunction tokenize(const BinaryImage& image, const FunctionView& fn);

class SimilarityOracle {
 public:
  explicit SimilarityOracle(double threshold, std::optional<size_t> token_cap = std::nullopt)
      : threshold_(threshold), token_cap_(token_cap) {}
  virtual ~SimilarityOracle() = default;

  virtual std::string name() const = 0;
  double threshold() const { return threshold_; }
  std::optional<size_t> token_cap() const { return token_cap_; }

  /// Score after applying the token cap; every truncation is logged.
  double score(const Tokens& a, const Tokens& b);
  bool similar(double score) const { return score >= threshold_; }

  const std::vector<std::string>& log() const { return log_; }
  uint64_t truncations() const { return truncations_; }

 protected:
  virtual double score_capped(const Tokens& a, const Tokens& b) = 0;

 private:
  double threshold_;
  std::optional<size_t> token_cap_;
  std::mutex log_mutex_;
  std::vector<std::string> log_;
  uint64_t truncations_ = 0;
};

inline constexpr double kDefaultThreshold = 0.5;

/// Cosine similarity of n-gram count vectors. A list shorter than n counts as
/// one gram of its own; two empty vectors score 1 when the lists are equal.
double ngram_cosine(const Tokens& a, const Tokens& b, unsigned n = 2);

/// Reference 2-gram cosine oracle. Throws EmptyFunction on an empty list.
double reference_score(const Tokens& a, const Tokens& b);

class NgramOracle : public SimilarityOracle {
 public:
  explicit NgramOracle(unsigned n = 2, double threshold = kDefaultThreshold,
                       std::optional<size_t> token_cap = std::nullopt)
      : SimilarityOracle(threshold, token_cap), n_(n) {}
  std::string name() const override { return n_ == 2 ? "ref" : "ref" + std::to_string(n_); }
  unsigned n() const { return n_; }

 protected:
  double score_capped(const Tokens& a, const Tokens& b) override;

 private:
  unsigned n_;
};

struct ExternalOracleOptions {
  std::chrono::milliseconds timeout{30000};
  int max_restarts = 2;
  std::optional<size_t> token_cap;
};

/// Child process speaking one JSON object per line on stdin/stdout:
/// {"id":N,"a":[...],"b":[...]} answered by {"id":N,"score":S}.
class ExternalOracle : public SimilarityOracle {
 public:
  ExternalOracle(std::string command, double threshold = kDefaultThreshold, ExternalOracleOptions options = {});
  ~ExternalOracle() override;
  std::string name() const override { return "cmd:" + command_; }

 protected:
  double score_capped(const Tokens& a, const Tokens& b) override;

 private:
  void start();
  void stop();
  double round_trip(const std::string& line, uint64_t id);

  std::string command_;
  ExternalOracleOptions options_;
  std::mutex mutex_;
  int pid_ = -1;
  int fd_ = -1;
  std::string pending_;
  uint64_t next_id_ = 1;
  int restarts_ = 0;
};

/// "ref", "ref:N" (n-gram width) or "cmd:<command line>".
std::unique_ptr<SimilarityOracle> make_oracle(const std::string& spec, double threshold = kDefaultThreshold);

}  // namespace binvar
