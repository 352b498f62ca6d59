#include "binvar/evalharness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "binvar/error.hpp"

namespace binvar {

std::string_view to_string(PairLabel l) { return l == PairLabel::Similar ? "similar" : "dissimilar"; }

std::vector<PairRecord> build_pairs(const std::map<std::string, std::vector<std::string>>& baseline_functions,
                                    const std::vector<VariantManifest>& variants, const PairOptions& options,
                                    Rng& rng) {
  if (options.negatives_per_positive < 0) throw Error(ErrorKind::InvalidArgument, "negative pair ratio");
  std::vector<PairRecord> out;
  for (const VariantManifest& m : variants) {
    auto base = baseline_functions.find(m.baseline_path);
    if (base == baseline_functions.end())
      throw Error(ErrorKind::MissingLinkage, "variant " + m.variant_path + " names unknown baseline " + m.baseline_path);
    const std::set<std::string> known(base->second.begin(), base->second.end());
    std::vector<std::pair<std::string, std::string>> links(m.linkage.begin(), m.linkage.end());
    for (const auto& [vf, bf] : links)
      if (!known.count(bf))
        throw Error(ErrorKind::MissingLinkage, m.variant_path + ":" + vf + " links to missing " + m.baseline_path + ":" + bf);

    for (const auto& [vf, bf] : links) {
      PairRecord p;
      p.a = {m.baseline_path, bf};
      p.b = {m.variant_path, vf};
      p.label = PairLabel::Similar;
      p.transformation = m.transformation;
      p.budget = m.budget;
      out.push_back(std::move(p));
    }
    if (links.size() < 2) continue;
    const auto want = static_cast<size_t>(std::llround(options.negatives_per_positive * static_cast<double>(links.size())));
    std::set<std::pair<size_t, size_t>> used;
    const size_t possible = links.size() * (links.size() - 1);
    for (size_t made = 0, tries = 0; made < want && used.size() < possible && tries < want * 50 + 100; ++tries) {
      const size_t x = rng.below(links.size());
      const size_t y = rng.below(links.size());
      if (links[x].second == links[y].second || !used.insert({x, y}).second) continue;
      PairRecord p;
      p.a = {m.baseline_path, links[x].second};
      p.b = options.transformed_negatives ? FunctionRef{m.variant_path, links[y].first}
                                          : FunctionRef{m.baseline_path, links[y].second};
      p.label = PairLabel::Dissimilar;
      p.transformation = m.transformation;
      p.budget = m.budget;
      out.push_back(std::move(p));
      ++made;
    }
  }
  return out;
}

void score_pairs(std::vector<PairRecord>& pairs, SimilarityOracle& oracle, const TokenLookup& tokens) {
  for (PairRecord& p : pairs) {
    p.score.reset();
    p.prediction.reset();
    p.error.clear();
    const Tokens* ta = tokens(p.a);
    const Tokens* tb = tokens(p.b);
    if (!ta || !tb) {
      p.error = "no tokens for " + (ta ? p.b.binary + ":" + p.b.name : p.a.binary + ":" + p.a.name);
      continue;
    }
    try {
      const double s = oracle.score(*ta, *tb);
      p.score = s;
      p.prediction = oracle.similar(s) ? PairLabel::Similar : PairLabel::Dissimilar;
    } catch (const std::exception& e) {
      p.error = e.what();
    }
  }
}

void finish_metrics(MetricsRow& r) {
  const auto ratio = [](uint64_t num, uint64_t den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
  };
  r.precision = ratio(r.tp, r.tp + r.fp);
  r.recall = ratio(r.tp, r.tp + r.fn);
  r.f1 = r.precision + r.recall == 0 ? 0.0 : 2 * r.precision * r.recall / (r.precision + r.recall);
}

MetricsRow metrics_from_counts(uint64_t tp, uint64_t fp, uint64_t tn, uint64_t fn) {
  MetricsRow r;
  r.tp = tp;
  r.fp = fp;
  r.tn = tn;
  r.fn = fn;
  finish_metrics(r);
  return r;
}

std::vector<MetricsRow> compute_metrics(const std::vector<PairRecord>& pairs) {
  std::map<std::pair<std::string, double>, MetricsRow> groups;
  for (const PairRecord& p : pairs) {
    MetricsRow& r = groups[{p.transformation, p.budget}];
    r.transformation = p.transformation;
    r.budget = p.budget;
    if (!p.prediction) {
      ++r.errored;
      continue;
    }
    const bool pos = p.label == PairLabel::Similar;
    const bool hit = *p.prediction == PairLabel::Similar;
    if (pos && hit) ++r.tp;
    else if (!pos && hit) ++r.fp;
    else if (!pos) ++r.tn;
    else ++r.fn;
  }
  std::vector<MetricsRow> rows;
  const MetricsRow* baseline = nullptr;
  for (auto& [key, r] : groups) {
    finish_metrics(r);
    if (key.first == kBaselineTag && !baseline) baseline = &r;
  }
  for (auto& [key, r] : groups) {
    if (baseline && key.first != kBaselineTag) {
      r.d_precision = r.precision - baseline->precision;
      r.d_recall = r.recall - baseline->recall;
      r.d_f1 = r.f1 - baseline->f1;
    }
    rows.push_back(r);
  }
  return rows;
}

double asr(const std::vector<PairRecord>& pairs, const std::string& tag) {
  uint64_t n = 0, hit = 0;
  for (const PairRecord& p : pairs) {
    if (p.transformation != tag || p.label != PairLabel::Dissimilar || !p.prediction) continue;
    ++n;
    if (*p.prediction == PairLabel::Similar) ++hit;
  }
  return n == 0 ? 0.0 : static_cast<double>(hit) / static_cast<double>(n);
}

SweepReport budget_sweep(const std::string& transformation, const std::vector<double>& budgets,
                         const std::map<std::string, std::vector<std::string>>& baseline_functions,
                         const std::function<std::vector<VariantManifest>(double)>& make_variants,
                         SimilarityOracle& oracle, const TokenLookup& tokens, const PairOptions& options,
                         uint64_t seed) {
  SweepReport rep;
  for (size_t i = 0; i < budgets.size(); ++i) {
    const double b = budgets[i];
    // Same stream per budget: negatives are drawn identically at every step.
    Rng rng(seed);
    auto pairs = build_pairs(baseline_functions, make_variants(b), options, rng);
    score_pairs(pairs, oracle, tokens);
    bool found = false;
    for (MetricsRow& r : compute_metrics(pairs))
      if (r.transformation == transformation && r.budget == b) {
        rep.rows.push_back(r);
        found = true;
      }
    if (!found) {
      MetricsRow r;
      r.transformation = transformation;
      r.budget = b;
      rep.rows.push_back(r);
    }
  }
  for (size_t i = 1; i < rep.rows.size(); ++i) {
    const MetricsRow& p = rep.rows[i - 1];
    const MetricsRow& c = rep.rows[i];
    if (c.budget > p.budget && c.recall > p.recall + 1e-12) {
      std::ostringstream os;
      os << "recall rose from " << p.recall << " at budget " << p.budget << " to " << c.recall << " at budget " << c.budget;
      rep.trend_violations.push_back(os.str());
    }
    if (std::fabs(c.precision - rep.rows[0].precision) > 1e-12) rep.precision_constant = false;
  }
  return rep;
}

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string budget_str(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

nlohmann::json row_json(const MetricsRow& r) {
  nlohmann::json j{{"transformation", r.transformation}, {"budget", r.budget}, {"tp", r.tp}, {"fp", r.fp},
                   {"tn", r.tn}, {"fn", r.fn}, {"errored", r.errored}, {"precision", r.precision},
                   {"recall", r.recall}, {"f1", r.f1}};
  if (r.d_precision) {
    j["d_precision"] = *r.d_precision;
    j["d_recall"] = *r.d_recall;
    j["d_f1"] = *r.d_f1;
  }
  return j;
}

}  // namespace

std::string metrics_csv(const std::vector<MetricsRow>& rows) {
  std::ostringstream os;
  os << "transformation,budget,tp,fp,tn,fn,precision,recall,f1\n";
  for (const MetricsRow& r : rows)
    os << r.transformation << ',' << budget_str(r.budget) << ',' << r.tp << ',' << r.fp << ',' << r.tn << ',' << r.fn
       << ',' << num(r.precision) << ',' << num(r.recall) << ',' << num(r.f1) << '\n';
  return os.str();
}

std::string sweep_json(const std::vector<SweepReport>& sweeps) {
  nlohmann::json j{{"schema_version", 1}, {"sweeps", nlohmann::json::array()}};
  for (const SweepReport& s : sweeps) {
    nlohmann::json sj{{"transformation", s.rows.empty() ? "" : s.rows[0].transformation},
                      {"budgets", nlohmann::json::array()},
                      {"precision", nlohmann::json::array()},
                      {"recall", nlohmann::json::array()},
                      {"f1", nlohmann::json::array()},
                      {"rows", nlohmann::json::array()},
                      {"trend_violations", s.trend_violations},
                      {"precision_constant", s.precision_constant}};
    for (const MetricsRow& r : s.rows) {
      sj["budgets"].push_back(r.budget);
      sj["precision"].push_back(r.precision);
      sj["recall"].push_back(r.recall);
      sj["f1"].push_back(r.f1);
      sj["rows"].push_back(row_json(r));
    }
    j["sweeps"].push_back(std::move(sj));
  }
  return j.dump(2) + "\n";
}

std::string pairs_json(const std::vector<PairRecord>& pairs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const PairRecord& p : pairs) {
    nlohmann::json j{{"a", {{"binary", p.a.binary}, {"name", p.a.name}}},
                     {"b", {{"binary", p.b.binary}, {"name", p.b.name}}},
                     {"label", to_string(p.label)},
                     {"transformation", p.transformation},
                     {"budget", p.budget}};
    j["score"] = p.score ? nlohmann::json(*p.score) : nlohmann::json(nullptr);
    j["prediction"] = p.prediction ? nlohmann::json(to_string(*p.prediction)) : nlohmann::json(nullptr);
    if (!p.error.empty()) j["error"] = p.error;
    arr.push_back(std::move(j));
  }
  return nlohmann::json{{"schema_version", 1}, {"pairs", arr}}.dump(2) + "\n";
}

}  // namespace binvar
