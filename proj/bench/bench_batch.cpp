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

// Parallel kernels against their serial references. Shared inputs are
// function statics, touched before each timed loop.

#include <benchmark/benchmark.h>

#include "subseg/batch.hpp"
#include "subseg/synthetic.hpp"

namespace {

using namespace subseg;

const ConstraintProfile kProfile{};

const std::vector<std::string>& sentences() {
  static const auto s = synthetic::random_sentences(20000, 7);
  return s;
}

const std::vector<AnnotatedSentence>& gold() {
  static const auto g = synthetic::rule_corpus(20000, 7, kProfile);
  return g;
}

const LinearSegmenterModel& model() {
  static const auto m = [] {
    TrainingConfig c;
    c.epochs = 3;
    return train(synthetic::rule_corpus(2000, 11, kProfile), c, kProfile);
  }();
  return m;
}

std::vector<SentencePair> pairs() {
  auto hyp = segment_count_char_batch(sentences(), kProfile, 3);
  std::vector<SentencePair> out;
  for (std::size_t i = 0; i < hyp.size(); ++i) out.emplace_back(hyp[i], gold()[i]);
  return out;
}

void BM_CountCharParallel(benchmark::State& state) {
  sentences();
  for (auto _ : state) benchmark::DoNotOptimize(segment_count_char_batch(sentences(), kProfile, 1));
}
void BM_CountCharSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::segment_count_char_batch(sentences(), kProfile, 1));
}

void BM_DecodeParallel(benchmark::State& state) {
  std::vector<AnnotatedSentence> inputs;
  for (std::size_t i = 0; i < 2000; ++i) inputs.push_back(AnnotatedSentence::plain(sentences()[i]));
  model();
  for (auto _ : state) benchmark::DoNotOptimize(segment_learned_batch(model(), inputs, kProfile));
}
void BM_DecodeSerial(benchmark::State& state) {
  std::vector<AnnotatedSentence> inputs;
  for (std::size_t i = 0; i < 2000; ++i) inputs.push_back(AnnotatedSentence::plain(sentences()[i]));
  for (auto _ : state) benchmark::DoNotOptimize(serial::segment_learned_batch(model(), inputs, kProfile));
}

void BM_ConformityParallel(benchmark::State& state) {
  gold();
  for (auto _ : state) benchmark::DoNotOptimize(conformity_stats(gold(), kProfile));
}
void BM_ConformitySerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::conformity_stats(gold(), kProfile));
}

void BM_EvaluateParallel(benchmark::State& state) {
  const auto p = pairs();
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(p, kProfile));
}
void BM_EvaluateSerial(benchmark::State& state) {
  const auto p = pairs();
  for (auto _ : state) benchmark::DoNotOptimize(serial::evaluate(p, kProfile));
}

}  // namespace

BENCHMARK(BM_CountCharParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountCharSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecodeParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecodeSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConformityParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConformitySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvaluateParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvaluateSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
