#include "binvar/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <memory>
#include <nlohmann/json.hpp>
#include <set>

#include "binvar/bbreorder.hpp"
#include "binvar/error.hpp"
#include "binvar/evalharness.hpp"
#include "binvar/fptrigger.hpp"
#include "binvar/implant.hpp"
#include "binvar/oracle.hpp"
#include "binvar/semnop.hpp"

namespace binvar {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::set<std::string> kStages{"transform", "nop", "junk", "fp_trigger", "eval"};

uint64_t fnv1a(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

uint64_t stream_seed(uint64_t seed, std::string_view tag, std::string_view name, double budget) {
  return Rng::mix(Rng::mix(Rng::mix(seed, fnv1a(tag)), fnv1a(name)), static_cast<uint64_t>(budget * 1000));
}

std::string budget_tag(const std::string& kind, double b) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s_%g", kind.c_str(), b);
  return buf;
}

void write_json(const fs::path& p, const json& j) {
  fs::create_directories(p.parent_path());
  const std::string s = j.dump(2) + "\n";
  write_file(p, std::span(reinterpret_cast<const uint8_t*>(s.data()), s.size()));
}

void write_text(const fs::path& p, const std::string& s) {
  fs::create_directories(p.parent_path());
  write_file(p, std::span(reinterpret_cast<const uint8_t*>(s.data()), s.size()));
}

struct FunctionStatus {
  std::string name;
  bool transformed = false;
  uint32_t sites_considered = 0;
  uint32_t sites_transformed = 0;
  bool timed_out = false;
  std::vector<std::string> reasons;
};

json status_json(const std::vector<FunctionStatus>& st) {
  json arr = json::array();
  for (const auto& s : st) {
    json j{{"name", s.name}, {"status", s.transformed ? "transformed" : "skipped"}};
    j["sites_considered"] = s.sites_considered;
    j["sites_transformed"] = s.sites_transformed;
    if (s.timed_out) j["timed_out"] = true;
    if (!s.transformed) {
      auto reasons = s.reasons;
      if (reasons.empty()) reasons.push_back(s.timed_out ? "timeout" : "no_sites");
      j["reasons"] = reasons;
    }
    arr.push_back(std::move(j));
  }
  return arr;
}

FunctionStatus from_report(const TransformReport& r) {
  FunctionStatus s;
  s.name = r.function;
  s.transformed = r.sites_transformed > 0;
  s.sites_considered = r.sites_considered;
  s.sites_transformed = r.sites_transformed;
  s.timed_out = r.timed_out;
  std::set<std::string> uniq(r.skipped.begin(), r.skipped.end());
  s.reasons.assign(uniq.begin(), uniq.end());
  return s;
}

struct Input {
  std::string key;   ///< path as given
  std::string stem;  ///< unique file stem inside the output tree
  BinaryImage image;
};

class Pipeline {
 public:
  Pipeline(const RunConfig& cfg, PipelineResult& res) : cfg_(cfg), res_(res), out_(cfg.output_dir) {}

  void run(const std::vector<fs::path>& inputs) {
    prepare_output();
    if (!load(inputs)) {
      finish();
      return;
    }
    auto has = [&](const char* s) { return std::count(cfg_.stages.begin(), cfg_.stages.end(), s) > 0; };
    if (has("transform")) stage("transform", [&] { transform(); });
    if (has("nop")) stage("nop", [&] { implant_stage("nop"); });
    if (has("junk")) stage("junk", [&] { implant_stage("junk"); });
    if (has("fp_trigger")) stage("fp_trigger", [&] { fp_trigger(); });
    if (has("eval")) stage("eval", [&] { eval(); });
    finish();
  }

 private:
  const RunConfig& cfg_;
  PipelineResult& res_;
  fs::path out_;
  std::vector<Input> inputs_;
  std::map<std::string, std::vector<std::string>> baseline_functions_;
  std::map<FunctionRef, Tokens> tokens_;
  std::vector<VariantManifest> manifests_;
  std::vector<PairRecord> attacked_;
  json stages_ = json::array();
  std::unique_ptr<SimilarityOracle> oracle_;

  void prepare_output() {
    fs::create_directories(out_);
    for (const char* owned : {"variants", "reports", "eval", "manifest.json", "errors.json"})
      fs::remove_all(out_ / owned);
  }

  bool load(const std::vector<fs::path>& inputs) {
    std::set<std::string> stems;
    try {
      for (const fs::path& p : inputs) {
        Input in;
        in.key = p.string();
        in.image = load_elf(p);
        in.image.path = in.key;
        std::string stem = p.stem().string();
        for (int n = 1; !stems.insert(stem).second; ++n) stem = p.stem().string() + "_" + std::to_string(n);
        in.stem = stem;
        auto& names = baseline_functions_[in.key];
        VariantManifest none;
        none.variant_path = none.baseline_path = in.key;
        none.transformation = kBaselineTag;
        none.seed = cfg_.seed;
        for (const FunctionView& fn : in.image.functions) {
          names.push_back(fn.name);
          tokens_[{in.key, fn.name}] = tokenize(in.image, fn).tokens;
          if (!fn.opaque) none.linkage[fn.name] = fn.name;
        }
        manifests_.push_back(std::move(none));
        inputs_.push_back(std::move(in));
      }
    } catch (const Error& e) {
      res_.failures.push_back({"load", std::string(to_string(e.kind())), e.what()});
      stages_.push_back({{"name", "load"}, {"status", "failed"}});
      return false;
    }
    stages_.push_back({{"name", "load"}, {"status", "ok"}});
    return true;
  }

  template <typename F>
  void stage(const std::string& name, F&& body) {
    try {
      body();
      stages_.push_back({{"name", name}, {"status", "ok"}});
    } catch (const Error& e) {
      res_.failures.push_back({name, std::string(to_string(e.kind())), e.what()});
      stages_.push_back({{"name", name}, {"status", "failed"}});
    } catch (const std::exception& e) {
      res_.failures.push_back({name, "internal", e.what()});
      stages_.push_back({{"name", name}, {"status", "failed"}});
    }
  }

  // Saves the variant, records tokens of the transformed functions and a manifest.
  void emit_variant(const Input& in, const BinaryImage& img, const std::string& tag, const std::string& transformation,
                    double budget, const std::vector<FunctionStatus>& status, json extra = {}) {
    const std::string rel = "variants/" + tag + "/" + in.stem + ".elf";
    fs::create_directories((out_ / rel).parent_path());
    save_elf(img, out_ / rel);
    ++res_.variants;
    VariantManifest m;
    m.variant_path = rel;
    m.baseline_path = in.key;
    m.transformation = transformation;
    m.budget = budget;
    m.seed = cfg_.seed;
    for (const FunctionStatus& s : status) {
      if (!s.transformed) continue;
      m.linkage[s.name] = s.name;
      tokens_[{rel, s.name}] = tokenize(img, *img.find_function(s.name)).tokens;
    }
    manifests_.push_back(m);
    json rep{{"schema_version", kSchemaVersion}, {"transformation", transformation}, {"budget", budget},
             {"binary", in.key}, {"variant", rel}, {"functions", status_json(status)}};
    for (auto& [k, v] : extra.items()) rep[k] = v;
    write_json(out_ / "reports" / tag / (in.stem + ".json"), rep);
  }

  void transform() {
    std::vector<Technique> techs;
    for (const std::string& t : cfg_.techniques) {
      auto tech = parse_technique(t);
      if (!tech) throw Error(ErrorKind::InvalidArgument, "unknown technique " + t);
      techs.push_back(*tech);
    }
    for (const Input& in : inputs_) {
      for (Technique t : techs) {
        BinaryImage img = in.image;
        std::vector<TransformReport> reps = t == Technique::BlockReorder
                                                ? apply_block_reorder(img, cfg_.seed)
                                                : apply_all_inplace(img, nullptr, cfg_.timeout, cfg_.seed, {t});
        std::vector<FunctionStatus> st;
        for (const auto& r : reps) st.push_back(from_report(r));
        const std::string tag(to_string(t));
        emit_variant(in, img, tag, tag, 0, st);
      }
    }
  }

  void implant_stage(const std::string& kind) {
    const NopGrammar grammar = build_grammar();
    for (const Input& in : inputs_) {
      for (double b : cfg_.budgets) {
        if (b < 1) throw Error(ErrorKind::InvalidArgument, "budgets must be at least 1 byte");
        const auto budget = static_cast<uint64_t>(b);
        BinaryImage img = in.image;
        std::vector<FunctionStatus> st;
        for (const FunctionView& orig : in.image.functions) {
          FunctionStatus s;
          s.name = orig.name;
          s.sites_considered = 1;
          try {
            if (orig.opaque) throw Error(ErrorKind::OpaqueFunction, orig.opaque_reason);
            if (!orig.padding_region) throw Error(ErrorKind::NoPlaceholder, orig.name);
            Rng rng(stream_seed(cfg_.seed, kind, orig.name, b));
            Bytes payload;
            if (kind == "nop") {
              payload = derive_sequence(grammar, budget, rng).bytes;
            } else {
              const uint64_t jl = skip_jump_length(orig.padding_region->length);
              if (budget <= jl) throw Error(ErrorKind::BudgetTooSmall, "budget leaves no room after the skip jump");
              payload = generate_junk(budget - jl, rng);
            }
            implant(img, ImplantSpec::make(orig.name, payload,
                                           kind == "nop" ? PayloadKind::SemanticNop : PayloadKind::JunkCode, budget));
            s.transformed = true;
            s.sites_transformed = 1;
          } catch (const Error& e) {
            s.reasons.push_back(std::string(to_string(e.kind())));
          }
          st.push_back(std::move(s));
        }
        emit_variant(in, img, budget_tag(kind, b), kind, b, st);
      }
    }
  }

  SimilarityOracle& oracle() {
    if (!oracle_) {
      oracle_ = make_oracle(cfg_.oracle, cfg_.threshold);
      // Fails fast on an unusable external command.
      oracle_->score(Tokens{"nop"}, Tokens{"nop"});
    }
    return *oracle_;
  }

  void fp_trigger() {
    SimilarityOracle& o = oracle();
    for (const Input& in : inputs_) {
      BinaryImage img = in.image;
      const InstructionDistribution dist = extract_distribution(in.image);
      std::vector<const FunctionView*> usable;
      for (const FunctionView& fn : in.image.functions)
        if (!fn.opaque && !tokens_[{in.key, fn.name}].empty()) usable.push_back(&fn);
      std::vector<FunctionStatus> st;
      json searches = json::array();
      const std::string rel = "variants/fp_trigger/" + in.stem + ".elf";
      for (const FunctionView& fn : in.image.functions) {
        FunctionStatus s;
        s.name = fn.name;
        s.sites_considered = 1;
        try {
          if (fn.opaque) throw Error(ErrorKind::OpaqueFunction, fn.opaque_reason);
          if (!fn.padding_region) throw Error(ErrorKind::NoPlaceholder, fn.name);
          if (usable.size() < 2) throw Error(ErrorKind::InvalidArgument, "no other function to target");
          Rng rng(stream_seed(cfg_.seed, "fp_trigger", fn.name, static_cast<double>(cfg_.fp_budget)));
          const FunctionView* target = nullptr;
          do target = usable[rng.below(usable.size())];
          while (target->name == fn.name);
          TriggerSearchOptions opt;
          opt.budget = cfg_.fp_budget;
          opt.threshold = cfg_.fp_threshold.value_or(cfg_.threshold);
          opt.num_candidates = cfg_.fp_candidates;
          const TriggerSearchState state =
              sample_fp_trigger(o, dist, tokens_[{in.key, fn.name}], tokens_[{in.key, target->name}], opt, rng);
          json prefix_asm = json::array();
          for (size_t idx : state.prefix) prefix_asm.push_back(dist.items[idx].asm_text);
          searches.push_back({{"victim", fn.name},
                              {"target", target->name},
                              {"outcome", to_string(state.outcome)},
                              {"iterations", state.iterations.size()},
                              {"initial_score", state.initial_score},
                              {"score_history", state.best_score_history},
                              {"prefix_asm", prefix_asm},
                              {"prefix_hex", to_hex(state.prefix_bytes)}});
          if (!materialize_trigger(img, fn.name, state)) throw Error(ErrorKind::InvalidArgument, "empty_prefix");
          s.transformed = true;
          s.sites_transformed = 1;
          PairRecord p;
          p.a = {in.key, target->name};
          p.b = {rel, fn.name};
          p.label = PairLabel::Dissimilar;
          p.transformation = "fp_trigger";
          p.budget = static_cast<double>(cfg_.fp_budget);
          attacked_.push_back(std::move(p));
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::OracleUnavailable || e.kind() == ErrorKind::Timeout ||
              e.kind() == ErrorKind::ProtocolViolation)
            throw;
          s.reasons.push_back(e.kind() == ErrorKind::InvalidArgument ? e.what() : std::string(to_string(e.kind())));
        }
        st.push_back(std::move(s));
      }
      emit_variant(in, img, "fp_trigger", "fp_trigger", static_cast<double>(cfg_.fp_budget), st,
                   json{{"searches", searches}});
    }
  }

  void eval() {
    SimilarityOracle& o = oracle();
    const PairOptions opt{cfg_.negatives_per_positive, cfg_.transformed_negatives};
    Rng rng(Rng::mix(cfg_.seed, fnv1a("eval")));
    // Attacked pairs were built by the fp_trigger stage.
    std::vector<VariantManifest> generic;
    for (const auto& m : manifests_)
      if (m.transformation != "fp_trigger") generic.push_back(m);
    std::vector<PairRecord> pairs = build_pairs(baseline_functions_, generic, opt, rng);
    pairs.insert(pairs.end(), attacked_.begin(), attacked_.end());
    const TokenLookup lookup = [&](const FunctionRef& r) -> const Tokens* {
      auto it = tokens_.find(r);
      return it == tokens_.end() ? nullptr : &it->second;
    };
    score_pairs(pairs, o, lookup);
    const auto rows = compute_metrics(pairs);
    write_text(out_ / "eval" / "pairs.json", pairs_json(pairs));
    write_text(out_ / "eval" / "metrics.csv", metrics_csv(rows));

    std::vector<SweepReport> sweeps;
    for (const char* kind : {"nop", "junk"}) {
      if (std::none_of(manifests_.begin(), manifests_.end(), [&](const auto& m) { return m.transformation == kind; }))
        continue;
      auto make = [&](double b) {
        std::vector<VariantManifest> sel;
        for (const auto& m : manifests_)
          if (m.transformation == kind && m.budget == b) sel.push_back(m);
        return sel;
      };
      sweeps.push_back(budget_sweep(kind, cfg_.budgets, baseline_functions_, make, o, lookup, opt, cfg_.seed));
    }
    write_text(out_ / "eval" / "sweeps.json", sweep_json(sweeps));
    json a{{"schema_version", kSchemaVersion}, {"attacked_pairs", attacked_.size()}, {"asr", asr(pairs)}};
    write_json(out_ / "eval" / "asr.json", a);
    size_t errored = 0;
    for (const auto& p : pairs) errored += p.error.empty() ? 0 : 1;
    if (!pairs.empty() && errored == pairs.size())
      throw Error(ErrorKind::OracleUnavailable, "every pair failed to score");
  }

  void finish() {
    json inputs = json::array();
    for (const Input& in : inputs_) {
      json names = json::array();
      for (const auto& f : in.image.functions) names.push_back(f.name);
      inputs.push_back({{"path", in.key}, {"stem", in.stem}, {"functions", names}});
    }
    json variants = json::array();
    for (const VariantManifest& m : manifests_) {
      if (m.transformation == kBaselineTag) continue;
      variants.push_back({{"variant_path", m.variant_path},
                          {"baseline_path", m.baseline_path},
                          {"transformation", m.transformation},
                          {"budget", m.budget},
                          {"seed", m.seed},
                          {"linkage", m.linkage}});
    }
    json failures = json::array();
    for (const auto& f : res_.failures)
      failures.push_back({{"stage", f.stage}, {"kind", f.kind}, {"message", f.message}});
    json manifest{{"schema_version", kSchemaVersion},
                  {"toolkit_version", kToolkitVersion},
                  {"grammar_version", kGrammarVersion},
                  {"rules_version", builtin_rules().version},
                  {"config", json::parse(cfg_.to_json())},
                  {"inputs", inputs},
                  {"variants", variants},
                  {"stages", stages_},
                  {"failures", failures}};
    write_json(out_ / "manifest.json", manifest);
    if (!res_.failures.empty())
      write_json(out_ / "errors.json", {{"schema_version", kSchemaVersion}, {"failures", failures}});
  }
};

}  // namespace

std::string RunConfig::to_json() const {
  json j{{"seed", seed},
         {"timeout", timeout},
         {"budgets", budgets},
         {"oracle", oracle},
         {"threshold", threshold},
         {"output_dir", output_dir.string()},
         {"stages", stages},
         {"techniques", techniques},
         {"negatives_per_positive", negatives_per_positive},
         {"transformed_negatives", transformed_negatives},
         {"fp_budget", fp_budget},
         {"fp_threshold", fp_threshold.value_or(threshold)},
         {"fp_candidates", fp_candidates}};
  return j.dump(2);
}

RunConfig parse_run_config(const std::string& json_text, RunConfig c) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("config is not JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::InvalidArgument, "config must be a JSON object");
  try {
    for (auto& [k, v] : j.items()) {
      if (k == "seed") c.seed = v.get<uint64_t>();
      else if (k == "timeout") c.timeout = v.get<double>();
      else if (k == "budgets") c.budgets = v.get<std::vector<double>>();
      else if (k == "oracle") c.oracle = v.get<std::string>();
      else if (k == "threshold") c.threshold = v.get<double>();
      else if (k == "output_dir") c.output_dir = v.get<std::string>();
      else if (k == "stages") c.stages = v.get<std::vector<std::string>>();
      else if (k == "techniques") c.techniques = v.get<std::vector<std::string>>();
      else if (k == "negatives_per_positive") c.negatives_per_positive = v.get<double>();
      else if (k == "transformed_negatives") c.transformed_negatives = v.get<bool>();
      else if (k == "fp_budget") c.fp_budget = v.get<uint64_t>();
      else if (k == "fp_threshold") c.fp_threshold = v.get<double>();
      else if (k == "fp_candidates") c.fp_candidates = v.get<unsigned>();
      else throw Error(ErrorKind::InvalidArgument, "unknown config key " + k);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("bad config value: ") + e.what());
  }
  for (const auto& s : c.stages)
    if (!kStages.count(s)) throw Error(ErrorKind::InvalidArgument, "unknown stage " + s);
  return c;
}

std::vector<TransformReport> apply_block_reorder(BinaryImage& image, uint64_t seed) {
  std::vector<TransformReport> out;
  const auto elig = eligibility_report(image, seed);
  for (size_t i = 0; i < image.functions.size(); ++i) {
    const std::string name = image.functions[i].name;
    TransformReport r;
    r.function = name;
    r.technique = Technique::BlockReorder;
    r.rng_seed = technique_seed(seed, name, Technique::BlockReorder);
    if (!elig[i].eligible) {
      r.skipped.push_back(elig[i].reason);
      out.push_back(std::move(r));
      continue;
    }
    Rng rng(r.rng_seed);
    const ReorderPlan plan = plan_reorder(image.functions[i], rng);
    if (!plan.feasible || plan.identity()) {
      r.sites_considered = 1;
      r.skipped.push_back(plan.feasible ? "identity" : "displacement_bound");
      out.push_back(std::move(r));
      continue;
    }
    TransformReport applied = apply_reorder(image, name, plan);
    applied.rng_seed = r.rng_seed;
    out.push_back(std::move(applied));
  }
  return out;
}

PipelineResult run_pipeline(const RunConfig& config, const std::vector<fs::path>& inputs) {
  PipelineResult res;
  Pipeline(config, res).run(inputs);
  return res;
}

}  // namespace binvar
