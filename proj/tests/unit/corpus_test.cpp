// Copyright 2026 The cscbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "error.hpp"
#include "rng.hpp"
#include "synthetic.hpp"
#include "utf8.hpp"

using namespace cscbench;

namespace {

std::vector<CleanSentence> Numbered(std::size_t n) {
  std::vector<CleanSentence> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back({std::to_string(i), U"句子" + std::u32string(1, U'a' + i % 26)});
  return out;
}

// 3 sigma band of Binomial(n, p).
std::pair<double, double> Band(double n, double p) {
  const double mean = n * p;
  const double sd = std::sqrt(n * p * (1 - p));
  return {mean - 3 * sd, mean + 3 * sd};
}

}  // namespace

TEST_CASE("load_corpus trims, drops and numbers lines") {
  auto c = LoadCorpus("第一句\n\n  第二句 \n");
  REQUIRE(c.sentences.size() == 2);
  CHECK(c.sentences[0].id == "00000001");
  CHECK(c.sentences[1].id == "00000003");
  CHECK(c.sentences[1].text == U"第二句");
  CHECK(c.report.dropped_empty == 1);

  c = LoadCorpus("短句子\n这是一个长句子\n", 5);
  CHECK(c.sentences.size() == 1);
  CHECK(c.report.dropped_short == 1);

  c = LoadCorpus("\xEF\xBB\xBF\xE3\x80\x80句\xE3\x80\x80\r\nab\tc\n", 1, 3);
  REQUIRE(c.sentences.size() == 1);
  CHECK(c.sentences[0].text == U"句");
  CHECK(c.report.dropped_malformed == 1);

  c = LoadCorpus("一二三四\n", 1, 3);
  CHECK(c.report.dropped_long == 1);

  try {
    LoadCorpus("好\n\xF0\x28");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("offset 4") != std::string::npos);
  }
}

TEST_CASE("partition_corpus") {
  const auto s = Numbered(20);
  const CorpusPools p = PartitionCorpus(s, 5, 5, 1);
  CHECK(p.train.size() == 10);
  CHECK(p.valid.size() == 5);
  CHECK(p.test.size() == 5);

  // Multiset compare of the union against the input.
  std::multiset<std::string> in, out;
  for (const auto& x : s) in.insert(x.id);
  for (const auto* pool : {&p.train, &p.valid, &p.test}) {
    for (const auto& x : *pool) out.insert(x.id);
  }
  CHECK(in == out);

  const CorpusPools q = PartitionCorpus(s, 5, 5, 1);
  CHECK(q.train == p.train);
  CHECK(q.valid == p.valid);
  CHECK(q.test == p.test);
  CHECK(PartitionCorpus(s, 5, 5, 2).test != p.test);

  CHECK_THROWS_AS(PartitionCorpus(s, 10, 10, 1), DataError);
  CHECK_THROWS_AS(PartitionCorpus(s, 0, 5, 1), DataError);
}

TEST_CASE("corrupt_sentence examples") {
  ConfusionSet c;
  c.Add(U'安', U'按', Tag::kPhonetic);
  const CleanSentence s{"x", U"安安安"};
  const ParallelSentence none = CorruptSentence(s, c, {0.0, 1});
  CHECK(none.source == none.target);
  CHECK(none.errors.empty());

  const ParallelSentence all = CorruptSentence(s, c, {1.0, 1});
  CHECK(all.source == U"按按按");
  CHECK(all.target == U"安安安");
  CHECK(all.errors.size() == 3);
  CHECK(all.errors[1] == CharError{1, U'按', U'安'});

  // Non-keys never change.
  const ParallelSentence mixed = CorruptSentence({"y", U"我安你"}, c, {1.0, 1});
  CHECK(mixed.source == U"我按你");
}

TEST_CASE("corruption count over 10^4 eligible characters is within 3 sigma") {
  ConfusionSet c;
  c.Add(U'安', U'按', Tag::kPhonetic);
  c.Add(U'安', U'案', Tag::kPhonetic);
  std::vector<CleanSentence> pool;
  for (int i = 0; i < 500; ++i) pool.push_back({std::to_string(i), std::u32string(20, U'安') + U"。"});
  const auto [lo, hi] = Band(10000, 0.05);
  CHECK(std::ceil(lo) == 435);
  CHECK(std::floor(hi) == 565);
  const auto ds = BuildDataset(pool, c, {0.05, 123});
  std::size_t n = 0;
  for (const auto& s : ds) n += s.errors.size();
  CHECK(n >= 435);
  CHECK(n <= 565);
}

TEST_CASE("build_dataset determinism, order and jobs independence") {
  testing::WorldSpec ws;
  const auto world = testing::MakeWorld(ws);
  const auto corpus = LoadCorpus(testing::GenerateCorpus(world, 300, 4));
  CorruptionConfig cfg{0.1, 9};
  const auto a = BuildDataset(corpus.sentences, world.confusion, cfg, 1);
  const auto b = BuildDataset(corpus.sentences, world.confusion, cfg, 4);
  CHECK(SerializeDataset(a) == SerializeDataset(b));
  REQUIRE(a.size() == corpus.sentences.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == corpus.sentences[i].id);
    CHECK(HasConsistentErrors(a[i]));
  }
  CHECK(BuildDataset({}, world.confusion, cfg).empty());

  // Per-sentence substreams: reversing the pool reverses the output.
  std::vector<CleanSentence> rev(corpus.sentences.rbegin(), corpus.sentences.rend());
  const auto r = BuildDataset(rev, world.confusion, cfg);
  CHECK(std::equal(a.begin(), a.end(), r.rbegin()));
}

TEST_CASE("build_dataset error count matches the binomial expectation") {
  testing::WorldSpec ws;
  const auto world = testing::MakeWorld(ws);
  const auto corpus = LoadCorpus(testing::GenerateCorpus(world, 5000, 6, 30, 62));
  std::size_t eligible = 0, chars = 0;
  for (const auto& s : corpus.sentences) {
    chars += s.text.size();
    for (char32_t ch : s.text) eligible += world.confusion.ContainsKey(ch);
  }
  const double frac = static_cast<double>(eligible) / chars;
  const double expected = 5000.0 * (static_cast<double>(chars) / 5000) * 0.05 * frac;
  const auto [lo, hi] = Band(eligible, 0.05);
  CHECK(expected == doctest::Approx(eligible * 0.05));
  const auto ds = BuildDataset(corpus.sentences, world.confusion, {0.05, 31});
  std::size_t n = 0;
  for (const auto& s : ds) n += s.errors.size();
  CHECK(static_cast<double>(n) >= lo);
  CHECK(static_cast<double>(n) <= hi);
}

TEST_CASE("build_scontext") {
  ConfusionSet c;
  c.Add(U'是', U'适', Tag::kPhonetic);
  c.Add(U'是', U'事', Tag::kPhonetic);
  c.Add(U'规', U'现', Tag::kGraphic);
  std::vector<ParallelSentence> sample{MakeParallel("1", U"语言适有现律", U"语言是有规律")};
  const SContextResult r = BuildSContext(sample, c, 5);
  REQUIRE(r.dataset.size() == 1);
  CHECK(r.dataset[0].source == U"语言事有现律");
  CHECK(r.dataset[0].target == sample[0].target);
  CHECK(r.replaced == 1);
  CHECK(r.singleton_kept == 1);

  ConfusionSet missing;
  missing.Add(U'规', U'现', Tag::kGraphic);
  CHECK_THROWS_AS(BuildSContext(sample, missing, 5), DataError);
}

TEST_CASE("build_scontext keeps error positions") {
  testing::WorldSpec ws;
  const auto world = testing::MakeWorld(ws);
  const auto corpus = LoadCorpus(testing::GenerateCorpus(world, 400, 8));
  const auto ds = BuildDataset(corpus.sentences, world.confusion, {0.2, 2});
  const auto r = BuildSContext(ds, world.confusion, 3);
  REQUIRE(r.dataset.size() == ds.size());
  std::size_t singletons = 0;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    std::vector<std::size_t> before, after;
    for (std::size_t j = 0; j < ds[i].source.size(); ++j) {
      if (ds[i].source[j] != ds[i].target[j]) before.push_back(j);
      if (r.dataset[i].source[j] != r.dataset[i].target[j]) after.push_back(j);
    }
    CHECK(before == after);
    CHECK(r.dataset[i].target == ds[i].target);
    for (const auto& e : ds[i].errors) {
      const char32_t now = r.dataset[i].source[e.position];
      CHECK(world.confusion.Contains(e.correct, now));
      if (world.confusion.Find(e.correct)->size() == 1) {
        CHECK(now == e.wrong);
        ++singletons;
      } else {
        CHECK(now != e.wrong);
      }
    }
  }
  CHECK(r.singleton_kept == singletons);
}

TEST_CASE("dataset serialization round trip") {
  std::vector<ParallelSentence> ds{MakeParallel("a", U"语言适有", U"语言是有"), MakeParallel("b", U"好", U"好")};
  const std::string text = SerializeDataset(ds);
  CHECK(text == "a\t语言适有\t语言是有\nb\t好\t好\n");
  CHECK(ParseDataset(text) == ds);
  CHECK_THROWS_AS(ParseDataset("a\t好\t好好\n"), DataError);
  CHECK_THROWS_AS(ParseDataset("a\t好\n"), ParseError);
}

TEST_CASE("sample_in_order") {
  const auto s = Numbered(50);
  const auto a = SampleInOrder<CleanSentence>(s, 10, 4);
  CHECK(a.size() == 10);
  CHECK(std::is_sorted(a.begin(), a.end(),
                       [](const auto& x, const auto& y) { return std::stoi(x.id) < std::stoi(y.id); }));
  CHECK(SampleInOrder<CleanSentence>(s, 100, 4).size() == 50);
}

TEST_CASE("build_suite contents and constraints") {
  testing::WorldSpec ws;
  const auto world = testing::MakeWorld(ws);
  const auto corpus = LoadCorpus(testing::GenerateCorpus(world, 1500, 10));
  const CorpusPools pools = PartitionCorpus(corpus.sentences, 300, 300, 1);
  SplitSpec spec;
  spec.seed = 5;
  const SplitResult split = Split(world.confusion, spec);
  SuiteConfig cfg;
  cfg.master_seed = 42;
  cfg.scontext_size = 200;
  cfg.seen_pairs = 300;
  const Suite suite = BuildSuite(pools, split, world.confusion, cfg);

  std::vector<std::string> names;
  for (const auto& d : suite.datasets) names.push_back(d.name);
  std::vector<std::string> want{"trainset", "validset", "regular"};
  for (double p : cfg.probs_pe) want.push_back(ProbsName(p));
  for (const char* n : {"phonetics", "graphics", "serror", "scontext", "unseen_k", "unseen_v", "correct"}) {
    want.emplace_back(n);
  }
  CHECK(names == want);

  for (const auto& d : suite.datasets) {
    INFO(d.name);
    for (const auto& s : d.sentences) CHECK(HasConsistentErrors(s));
    if (d.name == "unseen_k") {
      CHECK(d.p_e == 0.15);
    } else if (d.name.rfind("probs_", 0) == 0) {
      CHECK(d.p_e > 0);
    } else if (d.name == "correct") {
      CHECK(d.p_e == 0.0);
    } else if (d.name != "scontext") {
      CHECK(d.p_e == 0.05);
    }
  }
  CHECK(suite.Find("trainset")->sentences.size() == pools.train.size());
  CHECK(suite.Find("validset")->sentences.size() == pools.valid.size());
  CHECK(suite.Find("regular")->sentences.size() == pools.test.size());
  CHECK(suite.Find("scontext")->sentences.size() == 200);
  for (const auto& s : suite.Find("correct")->sentences) CHECK(s.errors.empty());

  // Brute-force pair-membership scan of the unseen sets against s_train and
  // against the pairs realized in the training data.
  std::set<std::pair<char32_t, char32_t>> train_pairs;
  for (const auto& s : suite.Find("trainset")->sentences) {
    for (const auto& e : s.errors) train_pairs.emplace(e.correct, e.wrong);
  }
  for (const char* name : {"unseen_k", "unseen_v"}) {
    const auto* d = suite.Find(name);
    std::size_t errs = 0;
    for (const auto& s : d->sentences) {
      for (const auto& e : s.errors) {
        ++errs;
        CHECK_FALSE(split.s_train.Contains(e.correct, e.wrong));
        CHECK(train_pairs.count({e.correct, e.wrong}) == 0);
      }
    }
    CHECK(errs > 0);
  }
  for (const auto& s : suite.Find("serror")->sentences) {
    for (const auto& e : s.errors) CHECK(train_pairs.count({e.correct, e.wrong}) == 1);
  }
  for (const auto& s : suite.Find("phonetics")->sentences) {
    for (const auto& e : s.errors) CHECK(Matches(*world.confusion.TagOf(e.correct, e.wrong), Tag::kPhonetic));
  }

  const Suite again = BuildSuite(pools, split, world.confusion, cfg);
  for (std::size_t i = 0; i < suite.datasets.size(); ++i) {
    CHECK(SerializeDataset(again.datasets[i].sentences) == SerializeDataset(suite.datasets[i].sentences));
  }
  cfg.jobs = 3;
  const Suite par = BuildSuite(pools, split, world.confusion, cfg);
  for (std::size_t i = 0; i < suite.datasets.size(); ++i) {
    CHECK(SerializeDataset(par.datasets[i].sentences) == SerializeDataset(suite.datasets[i].sentences));
  }
}

TEST_CASE("build_suite rejects empty subsets") {
  testing::WorldSpec ws;
  const auto world = testing::MakeWorld(ws);
  const auto corpus = LoadCorpus(testing::GenerateCorpus(world, 100, 10));
  const CorpusPools pools = PartitionCorpus(corpus.sentences, 20, 20, 1);
  SplitSpec spec;
  spec.key_holdout_frac = 0;
  const SplitResult split = Split(world.confusion, spec);
  CHECK_THROWS_AS(BuildSuite(pools, split, world.confusion, SuiteConfig{}), DataError);
}
