#include <chrono>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <benchmark/benchmark.h>

#include "oracles/generators.h"
#include "profsum/bleu.h"
#include "profsum/clean.h"
#include "profsum/ingest.h"
#include "profsum/summarize.h"

using namespace profsum;

namespace {

std::string folded_text(size_t lines) {
  std::mt19937 rng(1);
  std::string text;
  for (size_t i = 0; i < lines; ++i) {
    size_t depth = 1 + rng() % 12;
    for (size_t d = 0; d < depth; ++d) {
      if (d) text += ';';
      size_t fn = rng() % 48;
      text += "pkg.Cls" + std::to_string(fn) + ".fn(Cls" + std::to_string(fn) +
              ".java:" + std::to_string(1 + rng() % 200) + ")";
    }
    text += ' ' + std::to_string(1 + rng() % 100) + '\n';
  }
  return text;
}

std::vector<CodeDocPair> pairs(size_t n) {
  std::mt19937 rng(2);
  std::vector<CodeDocPair> out;
  for (size_t i = 0; i < n; ++i) {
    std::string code = "int m(int a, int b) {";
    for (auto& t : testing::random_tokens(rng, 4, 60, 50)) code += " " + t;
    std::string comment;
    for (auto& t : testing::random_tokens(rng, 1, 20, 50)) comment += t + " ";
    if (i % 3 == 0) comment += "@param a @param b http://x/y";
    out.push_back(CodeDocPair::make(code + " }", comment));
  }
  return out;
}

std::vector<BleuPair> bleu_pairs(size_t n) {
  std::mt19937 rng(3);
  std::vector<BleuPair> out;
  for (size_t i = 0; i < n; ++i)
    out.emplace_back(testing::random_tokens(rng, 1, 30, 20),
                     testing::random_tokens(rng, 1, 30, 20));
  return out;
}

class SlowBackend final : public SummaryBackend {
 public:
  std::string summarize(const std::string& code) override {
    std::this_thread::sleep_for(std::chrono::milliseconds(2));
    return extractive_summary(code);
  }
  Provenance provenance() const override { return Provenance::kBackend; }
};

void BM_ParseFolded(benchmark::State& state) {
  std::string text = folded_text(50000);
  for (auto _ : state) benchmark::DoNotOptimize(parse_folded(text));
}
void BM_ParseFoldedSerial(benchmark::State& state) {
  std::string text = folded_text(50000);
  for (auto _ : state) benchmark::DoNotOptimize(parse_folded_serial(text));
}

void BM_CleanCorpus(benchmark::State& state) {
  auto p = pairs(20000);
  for (auto _ : state) benchmark::DoNotOptimize(clean_corpus(p));
}
void BM_CleanCorpusSerial(benchmark::State& state) {
  auto p = pairs(20000);
  for (auto _ : state) benchmark::DoNotOptimize(clean_corpus_serial(p));
}

void BM_CorpusBleu(benchmark::State& state) {
  auto p = bleu_pairs(20000);
  for (auto _ : state) benchmark::DoNotOptimize(corpus_bleu(p));
}
void BM_CorpusBleuSerial(benchmark::State& state) {
  auto p = bleu_pairs(20000);
  for (auto _ : state) benchmark::DoNotOptimize(corpus_bleu_serial(p));
}

// Fan-out against a backend with fixed latency; range(0) is parallelism.
void BM_SummarizeBatch(benchmark::State& state) {
  std::vector<std::string> codes;
  for (int i = 0; i < 16; ++i) codes.push_back("void task" + std::to_string(i) + "() {}");
  for (auto _ : state) {
    SummarizerConfig c;
    c.parallelism = static_cast<size_t>(state.range(0));
    Summarizer s(c, std::make_unique<SlowBackend>());
    benchmark::DoNotOptimize(s.summarize_batch(codes));
  }
}

}  // namespace

BENCHMARK(BM_ParseFolded)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ParseFoldedSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CleanCorpus)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CleanCorpusSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CorpusBleu)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CorpusBleuSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SummarizeBatch)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
