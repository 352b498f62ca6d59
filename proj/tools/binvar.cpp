#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <nlohmann/json.hpp>

#include "binvar/bbreorder.hpp"
#include "binvar/corpus.hpp"
#include "binvar/emulator.hpp"
#include "binvar/error.hpp"
#include "binvar/evalharness.hpp"
#include "binvar/fptrigger.hpp"
#include "binvar/image.hpp"
#include "binvar/implant.hpp"
#include "binvar/inplace.hpp"
#include "binvar/oracle.hpp"
#include "binvar/pipeline.hpp"
#include "binvar/semnop.hpp"

using namespace binvar;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

void write_string(const fs::path& p, const std::string& s) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  write_file(p, std::span(reinterpret_cast<const uint8_t*>(s.data()), s.size()));
}

std::string read_string(const fs::path& p) {
  const Bytes b = read_file(p);
  return std::string(b.begin(), b.end());
}

void emit(const json& j, const std::string& out) {
  const std::string s = j.dump(2) + "\n";
  if (out.empty() || out == "-")
    std::cout << s;
  else
    write_string(out, s);
}

json report_json(const TransformReport& r) {
  json j{{"function", r.function},
         {"technique", to_string(r.technique)},
         {"sites_considered", r.sites_considered},
         {"sites_transformed", r.sites_transformed},
         {"rng_seed", r.rng_seed},
         {"timed_out", r.timed_out}};
  if (!r.skipped.empty()) j["skipped"] = r.skipped;
  return j;
}

int cmd_parse(const std::string& input, bool blocks) {
  const BinaryImage img = load_elf(input);
  json fns = json::array();
  for (const FunctionView& f : img.functions) {
    json j{{"name", f.name}, {"start", f.start}, {"length", f.length}, {"instructions", f.instruction_count()},
           {"blocks", f.blocks.size()}, {"opaque", f.opaque}};
    if (f.opaque) j["opaque_reason"] = f.opaque_reason;
    if (f.padding_region) j["padding"] = {{"offset", f.padding_region->offset}, {"length", f.padding_region->length}};
    if (blocks) {
      json bl = json::array();
      for (const BasicBlock& b : f.blocks) {
        json ins = json::array();
        for (const Instruction& in : b.instructions) ins.push_back(in.text());
        bl.push_back({{"start", b.start}, {"terminator", to_string(b.terminator_kind)}, {"successors", b.successors},
                      {"instructions", ins}});
      }
      j["block_list"] = bl;
    }
    fns.push_back(std::move(j));
  }
  json sections = json::array();
  for (const Section& s : img.sections) sections.push_back({{"name", s.name}, {"addr", s.addr}, {"size", s.size}});
  emit({{"schema_version", kSchemaVersion}, {"path", input}, {"sections", sections}, {"functions", fns}}, "-");
  return 0;
}

json pool_json(const std::vector<SemNopSequence>& pool) {
  json arr = json::array();
  for (const auto& s : pool)
    arr.push_back({{"bytes", to_hex(s.bytes)}, {"asm", s.asm_text()}, {"budget", s.budget}, {"seed", s.rng_seed},
                   {"instructions", s.instruction_count}});
  return {{"schema_version", kSchemaVersion}, {"grammar_version", kGrammarVersion}, {"sequences", arr}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binvar: semantics-preserving variants of x86-64 ELF functions and similarity-oracle evaluation"};
  app.require_subcommand(0, 1);
  bool version = false;
  app.add_flag("--version", version, "Print toolkit and data file versions");

  // parse
  auto* parse = app.add_subcommand("parse", "List functions, padding and opacity of an ELF file");
  std::string p_input;
  bool p_blocks = false;
  parse->add_option("--input,input", p_input)->required();
  parse->add_flag("--blocks", p_blocks, "Include basic blocks");

  // transform
  auto* transform = app.add_subcommand("transform", "Apply in-place techniques or block reordering");
  std::string t_input, t_output, t_report, t_rules, t_func;
  std::vector<std::string> t_techs{"subst", "intra", "preserve", "reassign"};
  uint64_t t_seed = 0;
  double t_timeout = 10.0;
  transform->add_option("--input", t_input)->required();
  transform->add_option("--output", t_output)->required();
  transform->add_option("--technique", t_techs, "subst, intra, preserve, reassign, bbr")->delimiter(',');
  transform->add_option("--seed", t_seed);
  transform->add_option("--timeout", t_timeout, "Seconds per technique per function");
  transform->add_option("--rules", t_rules, "Substitution rule file (JSON)");
  transform->add_option("--func", t_func, "Only this function");
  transform->add_option("--report", t_report, "Write the per-function report here");

  // gen-nop
  auto* gennop = app.add_subcommand("gen-nop", "Derive a pool of semantic NOP sequences");
  std::vector<uint64_t> g_budgets{20};
  size_t g_count = 10;
  uint64_t g_seed = 0;
  std::string g_out;
  bool g_rbp = false;
  gennop->add_option("--budget", g_budgets, "Byte budget(s)")->delimiter(',');
  gennop->add_option("--count", g_count, "Sequences per budget");
  gennop->add_option("--seed", g_seed);
  gennop->add_option("--out", g_out);
  gennop->add_flag("--allow-rbp", g_rbp);

  // implant
  auto* imp = app.add_subcommand("implant", "Write a semantic NOP or junk code into a function's entry placeholder");
  std::string i_input, i_func, i_pool, i_kind = "nop", i_output;
  uint64_t i_budget = 20, i_seed = 0;
  imp->add_option("--input", i_input)->required();
  imp->add_option("--func", i_func)->required();
  imp->add_option("--pool", i_pool, "Pool from gen-nop (otherwise derived on the fly)");
  imp->add_option("--kind", i_kind, "nop or junk");
  imp->add_option("--budget", i_budget);
  imp->add_option("--seed", i_seed);
  imp->add_option("--output", i_output)->required();

  // fp-trigger
  auto* fp = app.add_subcommand("fp-trigger", "Greedy search for a prefix that makes the oracle call two functions similar");
  std::string f_victim, f_vfunc, f_target, f_tfunc, f_oracle = "ref", f_out, f_apply, f_dist, f_unit = "instructions";
  uint64_t f_budget = 100, f_seed = 0;
  double f_threshold = 0.9;
  unsigned f_cands = kDefaultNumCandidates;
  fp->add_option("--victim", f_victim)->required();
  fp->add_option("--victim-func", f_vfunc)->required();
  fp->add_option("--target", f_target)->required();
  fp->add_option("--target-func", f_tfunc)->required();
  fp->add_option("--oracle", f_oracle, "ref, ref:N or cmd:<command line>");
  fp->add_option("--budget", f_budget);
  fp->add_option("--unit", f_unit, "instructions or bytes");
  fp->add_option("--threshold", f_threshold);
  fp->add_option("--candidates", f_cands);
  fp->add_option("--seed", f_seed);
  fp->add_option("--distribution", f_dist, "Binary to draw instructions from (default: target)");
  fp->add_option("--out", f_out);
  fp->add_option("--apply", f_apply, "Write the victim binary with the trigger in place");

  // eval
  auto* ev = app.add_subcommand("eval", "Score function pairs from variant manifests");
  std::string e_manifest, e_oracle = "ref", e_csv, e_json, e_pairs;
  double e_threshold = kDefaultThreshold, e_ratio = 1.0;
  uint64_t e_seed = 0;
  bool e_untransformed_neg = false;
  ev->add_option("--manifest", e_manifest, "JSON list of variant manifests")->required();
  ev->add_option("--oracle", e_oracle);
  ev->add_option("--threshold", e_threshold);
  ev->add_option("--ratio", e_ratio, "Negatives per positive");
  ev->add_flag("--untransformed-negatives", e_untransformed_neg);
  ev->add_option("--seed", e_seed);
  ev->add_option("--csv", e_csv);
  ev->add_option("--json", e_json, "Sweep curves");
  ev->add_option("--pairs", e_pairs);

  // emu
  auto* emu = app.add_subcommand("emu", "Run code in the emulator against a bare ret");
  std::string m_hex;
  uint32_t m_trials = 10;
  uint64_t m_seed = 0;
  bool m_dump = false;
  emu->add_option("--hex", m_hex)->required();
  emu->add_option("--trials", m_trials);
  emu->add_option("--seed", m_seed);
  emu->add_flag("--dump", m_dump, "Print initial and final state of the first trial");

  // run
  auto* run = app.add_subcommand("run", "Full pipeline: variants, reports and metrics");
  std::string r_config, r_output, r_oracle;
  std::optional<uint64_t> r_seed;
  std::vector<std::string> r_inputs;
  run->add_option("--config", r_config);
  run->add_option("--seed", r_seed);
  run->add_option("--output", r_output);
  run->add_option("--oracle", r_oracle);
  run->add_option("inputs", r_inputs);

  // synth-corpus
  auto* synth = app.add_subcommand("synth-corpus", "Write a synthetic fixture binary");
  CorpusOptions s_opt;
  std::string s_out;
  synth->add_option("--seed", s_opt.seed);
  synth->add_option("--functions", s_opt.functions);
  synth->add_option("--pad", s_opt.pad_bytes);
  synth->add_option("--output", s_out)->required();

  // placeholders
  auto* ph = app.add_subcommand("placeholders", "Print compiler invocations that reserve entry NOP pads");
  uint64_t h_pad = kDefaultPlaceholderSize;
  std::string h_dir = ".", h_cc = "gcc";
  std::vector<std::string> h_sources;
  ph->add_option("--pad", h_pad);
  ph->add_option("--out-dir", h_dir);
  ph->add_option("--compiler", h_cc);
  ph->add_option("sources", h_sources)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (version) {
      std::cout << "binvar " << kToolkitVersion << "\n"
                << "nop grammar " << kGrammarVersion << "\n"
                << "substitution rules " << builtin_rules().version << "\n"
                << "schema " << kSchemaVersion << "\n";
      return 0;
    }
    if (*parse) return cmd_parse(p_input, p_blocks);

    if (*transform) {
      BinaryImage img = load_elf(t_input);
      RuleSet rules = t_rules.empty() ? builtin_rules() : parse_rules(read_string(t_rules));
      std::vector<Technique> inplace;
      bool bbr = false;
      for (const auto& name : t_techs) {
        auto t = parse_technique(name);
        if (!t) throw Error(ErrorKind::InvalidArgument, "unknown technique " + name);
        if (*t == Technique::BlockReorder)
          bbr = true;
        else
          inplace.push_back(*t);
      }
      FunctionFilter filter;
      if (!t_func.empty()) {
        img.function(t_func);
        filter = [&](const FunctionView& f) { return f.name == t_func; };
      }
      std::vector<TransformReport> reps;
      if (!inplace.empty()) reps = apply_all_inplace(img, filter, t_timeout, t_seed, inplace, rules);
      if (bbr)
        for (auto& r : apply_block_reorder(img, t_seed))
          if (t_func.empty() || r.function == t_func) reps.push_back(std::move(r));
      save_elf(img, t_output);
      json arr = json::array();
      size_t changed = 0;
      for (const auto& r : reps) {
        arr.push_back(report_json(r));
        changed += r.sites_transformed;
      }
      if (!t_report.empty()) emit({{"schema_version", kSchemaVersion}, {"reports", arr}}, t_report);
      std::cerr << "transformed " << changed << " sites; wrote " << t_output << "\n";
      return 0;
    }

    if (*gennop) {
      GrammarOptions go;
      go.allow_rbp = g_rbp;
      const auto pool = generate_pool(build_grammar(go), g_budgets, g_count, g_seed);
      emit(pool_json(pool), g_out);
      return 0;
    }

    if (*imp) {
      BinaryImage img = load_elf(i_input);
      const auto kind = parse_payload_kind(i_kind);
      if (!kind || *kind == PayloadKind::FpTrigger) throw Error(ErrorKind::InvalidArgument, "--kind must be nop or junk");
      Rng rng(i_seed);
      Bytes payload;
      if (*kind == PayloadKind::SemanticNop) {
        if (!i_pool.empty()) {
          const json pool = json::parse(read_string(i_pool));
          std::vector<Bytes> fits;
          for (const auto& s : pool.at("sequences"))
            if (s.at("budget").get<uint64_t>() == i_budget) fits.push_back(from_hex(s.at("bytes").get<std::string>()));
          if (fits.empty()) throw Error(ErrorKind::PoolExhausted, "no pool entry with budget " + std::to_string(i_budget));
          payload = rng.pick(fits);
        } else {
          payload = derive_sequence(build_grammar(), i_budget, rng).bytes;
        }
      } else {
        const FunctionView& fn = img.function(i_func);
        const uint64_t jl = fn.padding_region ? skip_jump_length(fn.padding_region->length) : 2;
        if (i_budget <= jl) throw Error(ErrorKind::BudgetTooSmall, "budget leaves no room after the skip jump");
        payload = generate_junk(i_budget - jl, rng);
      }
      const ImplantResult r = implant(img, ImplantSpec::make(i_func, payload, *kind, i_budget));
      save_elf(img, i_output);
      emit({{"placeholder_start", r.placeholder_start}, {"placeholder_length", r.placeholder_length},
            {"jump_length", r.jump_length}, {"payload_bytes", payload.size()}, {"payload_hex", to_hex(payload)}},
           "-");
      return 0;
    }

    if (*fp) {
      const BinaryImage victim = load_elf(f_victim);
      const BinaryImage target = load_elf(f_target);
      const BinaryImage dist_src = f_dist.empty() ? target : load_elf(f_dist);
      const auto dist = extract_distribution(dist_src);
      auto oracle = make_oracle(f_oracle, kDefaultThreshold);
      TriggerSearchOptions opt;
      opt.budget = f_budget;
      opt.threshold = f_threshold;
      opt.num_candidates = f_cands;
      if (f_unit == "bytes")
        opt.unit = BudgetUnit::Bytes;
      else if (f_unit != "instructions")
        throw Error(ErrorKind::InvalidArgument, "--unit must be instructions or bytes");
      Rng rng(f_seed);
      const auto vt = tokenize(victim, victim.function(f_vfunc)).tokens;
      const auto tt = tokenize(target, target.function(f_tfunc)).tokens;
      const TriggerSearchState st = sample_fp_trigger(*oracle, dist, vt, tt, opt, rng);
      json prefix = json::array();
      for (size_t idx : st.prefix) prefix.push_back(dist.items[idx].asm_text);
      json iters = json::array();
      for (const auto& it : st.iterations) {
        json c = json::array();
        for (size_t k = 0; k < it.items.size(); ++k) c.push_back({{"token", dist.items[it.items[k]].token}, {"score", it.scores[k]}});
        iters.push_back({{"candidates", c}, {"chosen", it.chosen}});
      }
      emit({{"schema_version", kSchemaVersion},
            {"outcome", to_string(st.outcome)},
            {"iterations", st.iterations.size()},
            {"initial_score", st.initial_score},
            {"score_history", st.best_score_history},
            {"prefix_asm", prefix},
            {"prefix_hex", to_hex(st.prefix_bytes)},
            {"prefix_bytes", st.prefix_bytes.size()},
            {"seed", f_seed},
            {"candidate_log", iters}},
           f_out);
      if (!f_apply.empty()) {
        BinaryImage v = victim;
        materialize_trigger(v, f_vfunc, st);
        save_elf(v, f_apply);
      }
      return 0;
    }

    if (*ev) {
      const json mj = json::parse(read_string(e_manifest));
      const json& list = mj.is_array() ? mj : mj.at("variants");
      std::vector<VariantManifest> manifests;
      std::map<std::string, BinaryImage> images;
      auto image = [&](const std::string& p) -> BinaryImage& {
        auto it = images.find(p);
        if (it == images.end()) it = images.emplace(p, load_elf(p)).first;
        return it->second;
      };
      std::map<std::string, std::vector<std::string>> baselines;
      for (const auto& m : list) {
        VariantManifest vm;
        vm.variant_path = m.at("variant_path").get<std::string>();
        vm.baseline_path = m.at("baseline_path").get<std::string>();
        vm.transformation = m.at("transformation").get<std::string>();
        vm.budget = m.value("budget", 0.0);
        vm.seed = m.value("seed", uint64_t{0});
        vm.linkage = m.at("linkage").get<std::map<std::string, std::string>>();
        auto& names = baselines[vm.baseline_path];
        if (names.empty())
          for (const auto& f : image(vm.baseline_path).functions) names.push_back(f.name);
        manifests.push_back(std::move(vm));
      }
      std::map<FunctionRef, Tokens> cache;
      const TokenLookup lookup = [&](const FunctionRef& r) -> const Tokens* {
        auto it = cache.find(r);
        if (it != cache.end()) return &it->second;
        const BinaryImage& img = image(r.binary);
        const FunctionView* f = img.find_function(r.name);
        if (!f) return nullptr;
        return &cache.emplace(r, tokenize(img, *f).tokens).first->second;
      };
      auto oracle = make_oracle(e_oracle, e_threshold);
      Rng rng(e_seed);
      const PairOptions opt{e_ratio, !e_untransformed_neg};
      auto pairs = build_pairs(baselines, manifests, opt, rng);
      score_pairs(pairs, *oracle, lookup);
      const auto rows = compute_metrics(pairs);
      const std::string csv = metrics_csv(rows);
      if (e_csv.empty())
        std::cout << csv;
      else
        write_string(e_csv, csv);
      if (!e_pairs.empty()) write_string(e_pairs, pairs_json(pairs));
      if (!e_json.empty()) {
        std::map<std::string, std::vector<double>> budgets;
        for (const auto& m : manifests) budgets[m.transformation].push_back(m.budget);
        std::vector<SweepReport> sweeps;
        for (auto& [tag, bs] : budgets) {
          std::sort(bs.begin(), bs.end());
          bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
          auto make = [&, tag = tag](double b) {
            std::vector<VariantManifest> sel;
            for (const auto& m : manifests)
              if (m.transformation == tag && m.budget == b) sel.push_back(m);
            return sel;
          };
          sweeps.push_back(budget_sweep(tag, bs, baselines, make, *oracle, lookup, opt, e_seed));
        }
        write_string(e_json, sweep_json(sweeps));
      }
      return 0;
    }

    if (*emu) {
      const Bytes code = from_hex(m_hex);
      Bytes with_ret = code;
      with_ret.push_back(0xC3);
      Rng rng(m_seed);
      MachineState init = random_state(rng);
      const RunResult r = binvar::run(with_ret, 0x401000, 0, init, EmuConfig{});
      if (m_dump) {
        auto dump = [](const MachineState& s) {
          json regs = json::object();
          for (int i = 0; i < kNumGprs; ++i) regs[std::string(reg_name(reg_from_hw(i)))] = s.gpr[i];
          json flags = json::object();
          for (int f = 0; f < kNumFlags; ++f) {
            const Flag fl = static_cast<Flag>(f);
            flags[std::string(flag_name(fl))] = s.undefined.contains(fl) ? json("undefined") : json(s.flag(fl));
          }
          json writes = json::array();
          for (const auto& w : s.mem_writes) writes.push_back({{"address", w.address}, {"bytes", to_hex(w.bytes)}});
          return json{{"regs", regs}, {"flags", flags}, {"mem_writes", writes}, {"steps", s.steps}};
        };
        emit({{"initial", dump(init)}, {"final", dump(r.state)}}, "-");
      }
      std::string why;
      const bool ok = verify_identity(code, m_trials, m_seed, &why);
      std::cout << (ok ? "identity: yes" : "identity: no (" + why + ")") << "\n";
      return ok ? 0 : 2;
    }

    if (*run) {
      RunConfig cfg;
      if (!r_config.empty()) cfg = parse_run_config(read_string(r_config));
      if (r_seed) cfg.seed = *r_seed;
      if (!r_output.empty()) cfg.output_dir = r_output;
      if (!r_oracle.empty()) cfg.oracle = r_oracle;
      std::vector<fs::path> inputs(r_inputs.begin(), r_inputs.end());
      const PipelineResult res = run_pipeline(cfg, inputs);
      for (const auto& f : res.failures) std::cerr << "stage " << f.stage << " failed: " << f.message << "\n";
      std::cerr << res.variants << " variant binaries under " << cfg.output_dir.string() << "\n";
      return res.exit_code();
    }

    if (*synth) {
      const Bytes elf = synthesize_corpus(s_opt);
      write_file(s_out, elf);
      return 0;
    }

    if (*ph) {
      std::vector<fs::path> srcs(h_sources.begin(), h_sources.end());
      std::cout << prepare_placeholders(srcs, h_dir, h_pad, h_cc).script();
      return 0;
    }

    std::cout << app.help();
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
