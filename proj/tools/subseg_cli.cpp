/*
 * Copyright 2026 The subseg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// subseg: subtitle corpus construction, segmentation and evaluation.
//
//   subseg build-corpus --srt-dir talks/ --sentences train.tsv --out train.ann
//   subseg train --corpus train.ann --out all.tsv
//   subseg fine-tune --model all.tsv --corpus train.ann --select-eol --out ft_eol.tsv
//   subseg segment --model ft_eol.tsv --in plain.txt --out annotated.txt
//   subseg evaluate --hyp annotated.txt --ref gold.ann
//   subseg stats --corpus train.ann --metadata train.yaml
//   subseg reannotate --corpus train.ann --base-model all.tsv --model ft_eol.tsv --out train.iter1.ann

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "subseg/batch.hpp"
#include "subseg/error.hpp"
#include "subseg/pipeline.hpp"
#include "subseg/text.hpp"

namespace {

using namespace subseg;

struct Options {
  std::uint64_t seed = 1;
  std::string profile_path;

  std::string srt_dir, sentences, text, metadata, out, log;
  std::string corpus, model, base_model, in, hyp, ref, out_model, report;
  std::string mode = "full";
  std::string format = "json";
  std::size_t epochs = 0;
  double lr = 1.0;
  bool no_shuffle = false;
  bool select_eol = false;
  bool baseline = false;
  std::size_t beam = 4;
  std::size_t iterations = 1;
};

ConstraintProfile load_profile(const Options& o) {
  if (o.profile_path.empty()) return {};
  return ConstraintProfile::parse(read_file(o.profile_path));
}

LinearSegmenterModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  return LinearSegmenterModel::load(in);
}

void save_model(const LinearSegmenterModel& model, const std::string& path) {
  std::ostringstream os;
  model.save(os);
  write_file(path, os.str());
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-")
    std::cout << content;
  else
    write_file(path, content);
}

std::vector<std::string> read_lines(const std::string& path) {
  std::vector<std::string> lines;
  std::istringstream in(read_file(path));
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!trim(line).empty()) lines.push_back(line);
  }
  return lines;
}

TrainingConfig training_config(const Options& o, std::size_t default_epochs) {
  TrainingConfig c;
  c.epochs = o.epochs ? o.epochs : default_epochs;
  c.learning_rate = o.lr;
  c.seed = o.seed;
  c.shuffle = !o.no_shuffle;
  return c;
}

int run_build_corpus(const Options& o) {
  std::vector<std::string> warnings;
  auto docs = load_srt_dir(o.srt_dir, &warnings);
  std::vector<TalkSentence> sentences;
  if (!o.sentences.empty()) {
    sentences = parse_talk_sentences(read_file(o.sentences));
  } else {
    sentences = pair_with_metadata(read_lines(o.text), load_segments_metadata(read_file(o.metadata)));
  }
  auto built = build_corpus(std::move(docs), sentences);
  emit(o.out, format_corpus(built.corpus));

  std::ostringstream log;
  for (const auto& w : warnings) log << "warning\t" << w << '\n';
  for (const auto& w : built.warnings) log << "warning\t" << w << '\n';
  for (const auto& f : built.failures)
    log << "no_alignment\t" << f.sentence + 1 << '\t' << f.talk_id << '\t' << f.reason << '\n';
  if (!o.log.empty()) write_file(o.log, log.str());
  std::cerr << "aligned " << built.corpus.size() << " of " << sentences.size() << " sentences\n";
  return 0;
}

int run_train(const Options& o) {
  const auto profile = load_profile(o);
  const auto corpus = parse_corpus(read_file(o.corpus));
  save_model(train(corpus, training_config(o, 12), profile), o.out);
  return 0;
}

int run_fine_tune(const Options& o) {
  const auto profile = load_profile(o);
  auto corpus = parse_corpus(read_file(o.corpus));
  if (o.select_eol) std::erase_if(corpus, [](const AnnotatedSentence& s) { return !s.has_eol(); });
  save_model(fine_tune(load_model(o.model), corpus, training_config(o, 6), profile), o.out);
  return 0;
}

int run_segment(const Options& o) {
  const auto profile = load_profile(o);
  std::vector<AnnotatedSentence> inputs;
  for (const auto& line : read_lines(o.in)) inputs.push_back(AnnotatedSentence::parse(line));
  std::vector<AnnotatedSentence> out;
  if (o.baseline) {
    std::vector<std::string> plain;
    for (const auto& s : inputs) plain.push_back(strip_breaks(s));
    out = segment_count_char_batch(plain, profile, o.seed);
  } else {
    const SegmentMode mode = o.mode == "eol_only" ? SegmentMode::EolOnly : SegmentMode::Full;
    out = segment_learned_batch(load_model(o.model), inputs, profile, {mode, o.beam});
  }
  emit(o.out, format_corpus(out));
  return 0;
}

int run_evaluate(const Options& o) {
  const auto profile = load_profile(o);
  const auto hyp = parse_corpus(read_file(o.hyp));
  const auto ref = parse_corpus(read_file(o.ref));
  if (hyp.size() != ref.size())
    throw Error("hypothesis has " + std::to_string(hyp.size()) + " sentences, reference " +
                std::to_string(ref.size()));
  std::vector<SentencePair> pairs;
  for (std::size_t i = 0; i < hyp.size(); ++i) pairs.emplace_back(hyp[i], ref[i]);
  const auto report = evaluate(pairs, profile);
  emit(o.out, o.format == "table" ? report.to_table() : report.to_json() + "\n");
  return 0;
}

int run_stats(const Options& o) {
  const auto profile = load_profile(o);
  const auto corpus = parse_corpus(read_file(o.corpus));
  std::vector<SegmentDuration> metadata;
  if (!o.metadata.empty()) metadata = load_segments_metadata(read_file(o.metadata));
  const auto st = stats(corpus, profile, o.metadata.empty() ? nullptr : &metadata);
  emit(o.out, o.format == "text" ? st.to_text() : st.to_json() + "\n");
  return 0;
}

int run_reannotate(const Options& o) {
  const auto profile = load_profile(o);
  ReannotateConfig config;
  config.iterations = o.iterations;
  config.fine_tune = training_config(o, 6);
  config.beam = o.beam;
  auto result = reannotate(parse_corpus(read_file(o.corpus)), load_model(o.base_model),
                           load_model(o.model), profile, config);
  emit(o.out, format_corpus(result.corpus));
  if (!o.out_model.empty()) save_model(result.model, o.out_model);

  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& r : result.reports)
    j.push_back({{"iteration", r.iteration},
                 {"reannotated", r.reannotated},
                 {"accepted", r.accepted},
                 {"conformity_before", r.conformity_before},
                 {"conformity_after", r.conformity_after},
                 {"pool_size", r.pool_size},
                 {"fine_tuned_from", r.base_restart ? "base" : "previous"}});
  if (!o.report.empty())
    write_file(o.report, j.dump(2) + "\n");
  else
    std::cerr << j.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subtitle segmentation and corpus annotation toolkit"};
  app.set_config("--config", "", "key = value configuration file");
  app.require_subcommand(1);

  Options o;
  app.add_option("--seed", o.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--profile", o.profile_path, "Constraint profile (key = value)")->check(CLI::ExistingFile);

  auto* build = app.add_subcommand("build-corpus", "Align sentences to .srt subtitles");
  build->add_option("--srt-dir", o.srt_dir, "Directory of <talk_id>.srt files")->required()->check(CLI::ExistingDirectory);
  auto* tsv = build->add_option("--sentences", o.sentences, "talk_id<TAB>sentence file")->check(CLI::ExistingFile);
  auto* txt = build->add_option("--text", o.text, "Plain sentences, one per line")->check(CLI::ExistingFile);
  auto* meta = build->add_option("--metadata", o.metadata, "YAML metadata aligned with --text")->check(CLI::ExistingFile);
  txt->needs(meta);
  meta->needs(txt);
  tsv->excludes(txt);
  build->add_option("--out", o.out, "Annotated corpus output (default stdout)");
  build->add_option("--log", o.log, "Alignment log output");
  build->callback([&] {
    if (o.sentences.empty() && o.text.empty())
      throw CLI::RequiredError("--sentences or --text/--metadata");
  });

  auto* tr = app.add_subcommand("train", "Train the gap classifier on an annotated corpus");
  tr->add_option("--corpus", o.corpus)->required()->check(CLI::ExistingFile);
  tr->add_option("--out", o.out, "Model file")->required();
  tr->add_option("--epochs", o.epochs, "Epochs (default 12)");
  tr->add_option("--lr", o.lr, "Learning rate")->check(CLI::PositiveNumber);
  tr->add_flag("--no-shuffle", o.no_shuffle);

  auto* ft = app.add_subcommand("fine-tune", "Continue training on sentences containing <eol>");
  ft->add_option("--model", o.model)->required()->check(CLI::ExistingFile);
  ft->add_option("--corpus", o.corpus)->required()->check(CLI::ExistingFile);
  ft->add_option("--out", o.out)->required();
  ft->add_option("--epochs", o.epochs, "Epochs (default 6)");
  ft->add_option("--lr", o.lr)->check(CLI::NonNegativeNumber);
  ft->add_flag("--no-shuffle", o.no_shuffle);
  ft->add_flag("--select-eol", o.select_eol, "Keep only sentences with <eol> instead of failing");

  auto* seg = app.add_subcommand("segment", "Insert <eol>/<eob> into sentences");
  auto* model_opt = seg->add_option("--model", o.model)->check(CLI::ExistingFile);
  auto* base_flag = seg->add_flag("--baseline", o.baseline, "Use the character-counting baseline");
  model_opt->excludes(base_flag);
  seg->add_option("--in", o.in)->required()->check(CLI::ExistingFile);
  seg->add_option("--out", o.out);
  seg->add_option("--mode", o.mode)->check(CLI::IsMember({"full", "eol_only"}));
  seg->add_option("--beam", o.beam)->check(CLI::NonNegativeNumber);
  seg->callback([&] {
    if (o.model.empty() && !o.baseline) throw CLI::RequiredError("--model or --baseline");
  });

  auto* ev = app.add_subcommand("evaluate", "Score hypotheses against references");
  ev->add_option("--hyp", o.hyp)->required()->check(CLI::ExistingFile);
  ev->add_option("--ref", o.ref)->required()->check(CLI::ExistingFile);
  ev->add_option("--out", o.out);
  ev->add_option("--format", o.format)->check(CLI::IsMember({"json", "table"}));

  auto* st = app.add_subcommand("stats", "Corpus size and conformity statistics");
  st->add_option("--corpus", o.corpus)->required()->check(CLI::ExistingFile);
  st->add_option("--metadata", o.metadata)->check(CLI::ExistingFile);
  st->add_option("--out", o.out);
  st->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

  auto* re = app.add_subcommand("reannotate", "Add missing <eol>s and fine-tune iteratively");
  re->add_option("--corpus", o.corpus)->required()->check(CLI::ExistingFile);
  re->add_option("--base-model", o.base_model, "Model trained on all data")->required()->check(CLI::ExistingFile);
  re->add_option("--model", o.model, "Model fine-tuned on <eol> data")->required()->check(CLI::ExistingFile);
  re->add_option("--iterations", o.iterations)->capture_default_str();
  re->add_option("--out", o.out);
  re->add_option("--out-model", o.out_model);
  re->add_option("--report", o.report, "JSON iteration report");
  re->add_option("--epochs", o.epochs, "Fine-tuning epochs (default 6)");
  re->add_option("--lr", o.lr)->check(CLI::NonNegativeNumber);
  re->add_option("--beam", o.beam)->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (build->parsed()) return run_build_corpus(o);
    if (tr->parsed()) return run_train(o);
    if (ft->parsed()) return run_fine_tune(o);
    if (seg->parsed()) return run_segment(o);
    if (ev->parsed()) return run_evaluate(o);
    if (st->parsed()) return run_stats(o);
    if (re->parsed()) return run_reannotate(o);
  } catch (const std::exception& e) {
    std::cerr << "subseg: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
