#include <gtest/gtest.h>

#include <set>

#include "binvar/evalharness.hpp"
#include "test_util.hpp"

using namespace binvar;
using namespace binvar::testing;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Io;
}

PairRecord scored(PairLabel label, PairLabel prediction, std::string tag = "t", double budget = 0) {
  PairRecord p;
  p.label = label;
  p.prediction = prediction;
  p.score = prediction == PairLabel::Similar ? 1.0 : 0.0;
  p.transformation = std::move(tag);
  p.budget = budget;
  return p;
}

std::vector<PairRecord> pairs_from_counts(uint64_t tp, uint64_t fp, uint64_t tn, uint64_t fn, Rng& rng) {
  std::vector<PairRecord> out;
  for (uint64_t i = 0; i < tp; ++i) out.push_back(scored(PairLabel::Similar, PairLabel::Similar));
  for (uint64_t i = 0; i < fp; ++i) out.push_back(scored(PairLabel::Dissimilar, PairLabel::Similar));
  for (uint64_t i = 0; i < tn; ++i) out.push_back(scored(PairLabel::Dissimilar, PairLabel::Dissimilar));
  for (uint64_t i = 0; i < fn; ++i) out.push_back(scored(PairLabel::Similar, PairLabel::Dissimilar));
  rng.shuffle(std::span<PairRecord>(out));
  return out;
}

struct Toy {
  std::map<std::string, std::vector<std::string>> baseline{{"base.elf", {}}};
  VariantManifest manifest;
  std::map<FunctionRef, Tokens> tokens;

  explicit Toy(size_t n, const std::string& tag = "nop", double budget = 20) {
    manifest.variant_path = "var.elf";
    manifest.baseline_path = "base.elf";
    manifest.transformation = tag;
    manifest.budget = budget;
    for (size_t i = 0; i < n; ++i) {
      const std::string name = "f" + std::to_string(i);
      baseline["base.elf"].push_back(name);
      manifest.linkage[name] = name;
      Tokens t;
      for (size_t k = 0; k < 6 + 4 * i; ++k) t.push_back("op" + std::to_string(i) + "_" + std::to_string(k));
      tokens[{"base.elf", name}] = t;
      Tokens v(static_cast<size_t>(budget / 10), "nop");
      v.insert(v.end(), t.begin(), t.end());
      tokens[{"var.elf", name}] = v;
    }
  }
  TokenLookup lookup() const {
    return [this](const FunctionRef& r) -> const Tokens* {
      auto it = tokens.find(r);
      return it == tokens.end() ? nullptr : &it->second;
    };
  }
};

}  // namespace

TEST(Metrics, WorkedExample) {
  const auto r = metrics_from_counts(9, 1, 7, 3);
  EXPECT_DOUBLE_EQ(r.precision, 0.9);
  EXPECT_DOUBLE_EQ(r.recall, 0.75);
  EXPECT_NEAR(r.f1, 0.8181818181818181, 1e-15);
}

TEST(Metrics, EmptyDenominatorsAreZero) {
  const auto r = metrics_from_counts(0, 0, 5, 0);
  EXPECT_EQ(r.precision, 0.0);
  EXPECT_EQ(r.recall, 0.0);
  EXPECT_EQ(r.f1, 0.0);
}

TEST(Metrics, RandomMatricesRecount) {
  Rng rng(12);
  for (int t = 0; t < 1000; ++t) {
    const uint64_t tp = rng.below(30), fp = rng.below(30), tn = rng.below(30), fn = rng.below(30);
    const auto rows = compute_metrics(pairs_from_counts(tp, fp, tn, fn, rng));
    if (tp + fp + tn + fn == 0) {
      EXPECT_TRUE(rows.empty());
      continue;
    }
    ASSERT_EQ(rows.size(), 1u);
    const auto& r = rows[0];
    EXPECT_EQ(r.tp, tp);
    EXPECT_EQ(r.fp, fp);
    EXPECT_EQ(r.tn, tn);
    EXPECT_EQ(r.fn, fn);
    const double p = tp + fp ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
    const double rc = tp + fn ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
    const double f1 = p + rc ? 2 * p * rc / (p + rc) : 0.0;
    EXPECT_EQ(r.precision, p);
    EXPECT_EQ(r.recall, rc);
    EXPECT_EQ(r.f1, f1);
  }
}

TEST(Metrics, GroupsAndBaselineDeltas) {
  std::vector<PairRecord> pairs{scored(PairLabel::Similar, PairLabel::Similar, "none"),
                                scored(PairLabel::Dissimilar, PairLabel::Dissimilar, "none"),
                                scored(PairLabel::Similar, PairLabel::Dissimilar, "nop", 20),
                                scored(PairLabel::Similar, PairLabel::Similar, "nop", 20),
                                scored(PairLabel::Similar, PairLabel::Dissimilar, "nop", 40)};
  pairs.push_back(scored(PairLabel::Similar, PairLabel::Similar, "nop", 40));
  pairs.back().prediction.reset();
  const auto rows = compute_metrics(pairs);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].transformation, "none");
  EXPECT_FALSE(rows[0].d_recall);
  EXPECT_EQ(rows[1].budget, 20);
  EXPECT_DOUBLE_EQ(*rows[1].d_recall, -0.5);
  EXPECT_EQ(rows[2].errored, 1u);
  EXPECT_EQ(rows[2].tp + rows[2].fp + rows[2].tn + rows[2].fn, 1u);
  const std::string csv = metrics_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "transformation,budget,tp,fp,tn,fn,precision,recall,f1");
  EXPECT_NE(csv.find("nop,20,1,0,0,1,1.000000,0.500000,0.666667"), std::string::npos);
}

TEST(Asr, Fractions) {
  std::vector<PairRecord> all{scored(PairLabel::Dissimilar, PairLabel::Similar, "fp_trigger"),
                              scored(PairLabel::Dissimilar, PairLabel::Similar, "fp_trigger")};
  EXPECT_EQ(asr(all), 1.0);
  std::vector<PairRecord> none{scored(PairLabel::Dissimilar, PairLabel::Dissimilar, "fp_trigger"),
                               scored(PairLabel::Dissimilar, PairLabel::Similar, "nop")};
  EXPECT_EQ(asr(none), 0.0);
  all.push_back(scored(PairLabel::Dissimilar, PairLabel::Dissimilar, "fp_trigger"));
  all.push_back(scored(PairLabel::Dissimilar, PairLabel::Dissimilar, "fp_trigger"));
  EXPECT_EQ(asr(all), 0.5);
}

TEST(Pairs, CountsAndNoSelfNegatives) {
  const Toy toy(10);
  for (bool transformed : {true, false}) {
    Rng rng(3);
    const auto pairs = build_pairs(toy.baseline, {toy.manifest}, {1.0, transformed}, rng);
    size_t pos = 0, neg = 0;
    std::set<std::pair<FunctionRef, FunctionRef>> distinct;
    for (const auto& p : pairs) {
      if (p.label == PairLabel::Similar) {
        ++pos;
        EXPECT_EQ(p.a.name, p.b.name);
        EXPECT_EQ(p.b.binary, "var.elf");
      } else {
        ++neg;
        EXPECT_NE(p.a.name, p.b.name);
        EXPECT_EQ(p.b.binary, transformed ? "var.elf" : "base.elf");
      }
      EXPECT_TRUE(distinct.insert({p.a, p.b}).second);
    }
    EXPECT_EQ(pos, 10u);
    EXPECT_EQ(neg, 10u);
  }
  Rng rng(3);
  EXPECT_EQ(build_pairs(toy.baseline, {toy.manifest}, {0.0, true}, rng).size(), 10u);
}

TEST(Pairs, MissingLinkage) {
  Toy toy(3);
  Rng rng(0);
  toy.manifest.linkage["extra"] = "ghost";
  EXPECT_EQ(kind_of([&] { build_pairs(toy.baseline, {toy.manifest}, {}, rng); }), ErrorKind::MissingLinkage);
  Toy other(3);
  other.manifest.baseline_path = "elsewhere.elf";
  EXPECT_EQ(kind_of([&] { build_pairs(other.baseline, {other.manifest}, {}, rng); }), ErrorKind::MissingLinkage);
}

TEST(Score, ReferenceOraclePredictions) {
  const Toy toy(4);
  Rng rng(1);
  auto pairs = build_pairs(toy.baseline, {toy.manifest}, {}, rng);
  NgramOracle o;
  score_pairs(pairs, o, toy.lookup());
  for (const auto& p : pairs) {
    ASSERT_TRUE(p.prediction);
    EXPECT_EQ(*p.prediction, p.label);
    EXPECT_TRUE(p.error.empty());
  }
}

TEST(Score, CrashingOracleMarksPairs) {
  Toy toy(4);
  toy.tokens[{"base.elf", "f2"}] = {"BOOM", "x"};
  Rng rng(1);
  auto pairs = build_pairs(toy.baseline, {toy.manifest}, {0.0, true}, rng);
  ExternalOracle o(std::string(BINVAR_ORACLE_STUB) + " crash-on BOOM");
  score_pairs(pairs, o, toy.lookup());
  size_t errored = 0;
  for (const auto& p : pairs) {
    if (p.a.name == "f2") {
      EXPECT_FALSE(p.error.empty());
      EXPECT_FALSE(p.prediction);
      ++errored;
    } else {
      EXPECT_TRUE(p.prediction);
    }
  }
  EXPECT_EQ(errored, 1u);
  EXPECT_EQ(compute_metrics(pairs)[0].errored, 1u);
}

TEST(Sweep, SingleBudgetAndPrecision) {
  NgramOracle o;
  std::map<double, Toy> toys;
  for (double b : kDefaultBudgets) toys.emplace(b, Toy(8, "nop", b));
  auto variants = [&](double b) {
    VariantManifest m = toys.at(b).manifest;
    m.variant_path = "var.elf";
    return std::vector<VariantManifest>{m};
  };
  const Toy& first = toys.begin()->second;
  const auto one = budget_sweep("nop", {20}, first.baseline, variants, o, first.lookup(), {1.0, false}, 1);
  EXPECT_EQ(one.rows.size(), 1u);

  // Variants grow with the budget; each sweep step reads its own token table.
  double current = 20;
  TokenLookup lookup = [&](const FunctionRef& r) { return toys.at(current).lookup()(r); };
  auto make = [&](double b) {
    current = b;
    return variants(b);
  };
  const auto rep = budget_sweep("nop", kDefaultBudgets, first.baseline, make, o, lookup, {1.0, false}, 1);
  ASSERT_EQ(rep.rows.size(), 5u);
  EXPECT_TRUE(rep.precision_constant);
  EXPECT_TRUE(rep.trend_violations.empty());
  for (size_t i = 1; i < rep.rows.size(); ++i) {
    EXPECT_LE(rep.rows[i].recall, rep.rows[i - 1].recall);
    EXPECT_EQ(rep.rows[i].fp, rep.rows[0].fp);
    EXPECT_EQ(rep.rows[i].tn, rep.rows[0].tn);
  }
  EXPECT_LT(rep.rows.back().recall, rep.rows.front().recall);
  EXPECT_NE(sweep_json({rep}).find("\"precision_constant\""), std::string::npos);
}
