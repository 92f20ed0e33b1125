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

#include <cmath>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "confusion.hpp"
#include "error.hpp"
#include "rng.hpp"
#include "sentence.hpp"
#include "split_oracle.hpp"
#include "synthetic.hpp"
#include "utf8.hpp"

using namespace cscbench;

using testing::PairSet;
using testing::PairsOf;
using testing::SplitViolation;

TEST_CASE("parse_confusion examples") {
  auto p = ParseConfusion("是\t适\tP\n规\t现\tG");
  CHECK(Stats(p.set) == ConfusionStats{2, 2});
  CHECK(p.set.TagOf(U'是', U'适') == Tag::kPhonetic);
  CHECK(p.set.TagOf(U'规', U'现') == Tag::kGraphic);

  CHECK(Stats(ParseConfusion("").set) == ConfusionStats{0, 0});

  p = ParseConfusion("a\tb\tP\na\tb\tG");
  CHECK(Stats(p.set) == ConfusionStats{1, 1});
  CHECK(p.set.TagOf(U'a', U'b') == Tag::kBoth);
  CHECK(p.duplicate_lines == 1);

  p = ParseConfusion("# comment\n\nx\ty\tPG\r\n");
  CHECK(p.set.TagOf(U'x', U'y') == Tag::kBoth);
}

TEST_CASE("parse_confusion errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      ParseConfusion(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("a\tb\tP\na\tb") == 2);
  CHECK(line_of("ab\tc\tP") == 1);
  CHECK(line_of("a\tb\tP\n\na\ta\tG") == 3);
  CHECK(line_of("a\tb\tX") == 1);
  CHECK(line_of("a\t\xFF\tP") == 1);
  CHECK(line_of("a\tb\tP\tQ") == 1);
}

TEST_CASE("serialize round trip") {
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    const ConfusionSet s = testing::RandomConfusion(rng, 30, 6);
    CHECK(ParseConfusion(SerializeConfusion(s)).set == s);
  }
}

TEST_CASE("merge examples") {
  ConfusionSet x;
  x.Add(U'a', U'x', Tag::kPhonetic);
  x.Add(U'b', U'y', Tag::kGraphic);
  CHECK(Merge(x, ConfusionSet{}) == x);
  CHECK(Merge(ConfusionSet{}, x) == x);

  ConfusionSet p, g;
  p.Add(U'a', U'x', Tag::kPhonetic);
  g.Add(U'a', U'x', Tag::kGraphic);
  const ConfusionSet m = Merge(p, g);
  CHECK(m.num_pairs() == 1);
  CHECK(m.TagOf(U'a', U'x') == Tag::kBoth);

  // {a:x, b:y} and {a:x, c:z} share one pair: union by hand is {a:x, b:y, c:z}.
  ConfusionSet y;
  y.Add(U'a', U'x', Tag::kPhonetic);
  y.Add(U'c', U'z', Tag::kPhonetic);
  const ConfusionSet u = Merge(x, y);
  CHECK(u.num_pairs() == 3);
  CHECK(PairsOf(u) == PairSet{{U'a', U'x'}, {U'b', U'y'}, {U'c', U'z'}});
}

TEST_CASE("merge pair count equals the union of pair sets") {
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const ConfusionSet a = testing::RandomConfusion(rng, 20, 5);
    const ConfusionSet b = testing::RandomConfusion(rng, 20, 5);
    PairSet uni = PairsOf(a);
    const PairSet pb = PairsOf(b);
    uni.insert(pb.begin(), pb.end());
    const ConfusionSet m = Merge(a, b);
    CHECK(Stats(m).num_pairs == uni.size());
    CHECK(m.num_pairs() <= a.num_pairs() + b.num_pairs());
  }
}

TEST_CASE("filter_by_tag examples") {
  ConfusionSet s;
  s.Add(U'a', U'x', Tag::kPhonetic);
  s.Add(U'a', U'y', Tag::kGraphic);
  const ConfusionSet fp = FilterByTag(s, Tag::kPhonetic);
  CHECK(PairsOf(fp) == PairSet{{U'a', U'x'}});

  ConfusionSet both;
  both.Add(U'a', U'x', Tag::kBoth);
  CHECK(PairsOf(FilterByTag(both, Tag::kGraphic)) == PairSet{{U'a', U'x'}});

  ConfusionSet ponly;
  ponly.Add(U'a', U'x', Tag::kPhonetic);
  ponly.Add(U'b', U'y', Tag::kPhonetic);
  CHECK(FilterByTag(ponly, Tag::kGraphic).empty());
  CHECK_THROWS_AS(FilterByTag(s, Tag::kBoth), ArgumentError);
}

TEST_CASE("phonetic and graphic filters merge back to the full pair set") {
  Rng rng(8);
  for (int i = 0; i < 50; ++i) {
    const ConfusionSet s = testing::RandomConfusion(rng, 25, 5);
    const ConfusionSet m = Merge(FilterByTag(s, Tag::kPhonetic), FilterByTag(s, Tag::kGraphic));
    CHECK(PairsOf(m) == PairsOf(s));
  }
}

TEST_CASE("stats examples") {
  CHECK(Stats(ConfusionSet{}) == ConfusionStats{0, 0});
  ConfusionSet s;
  s.Add(U'a', U'x', Tag::kBoth);
  s.Add(U'a', U'y', Tag::kBoth);
  s.Add(U'b', U'z', Tag::kBoth);
  CHECK(Stats(s) == ConfusionStats{2, 3});
}

TEST_CASE("split with zero fractions keeps everything in train") {
  Rng rng(2);
  const ConfusionSet s = testing::RandomConfusion(rng, 40, 5);
  SplitSpec spec;
  spec.key_holdout_frac = 0;
  spec.value_key_frac = 0;
  const SplitResult r = Split(s, spec);
  CHECK(r.s_train == s);
  CHECK(r.s_unseen_k.empty());
  CHECK(r.s_unseen_v.empty());
}

TEST_CASE("split small example with seed 7") {
  ConfusionSet s;
  for (char32_t v : std::u32string(U"xyz")) s.Add(U'a', v, Tag::kPhonetic);
  s.Add(U'b', U'u', Tag::kGraphic);
  for (char32_t v : std::u32string(U"vw")) s.Add(U'c', v, Tag::kBoth);
  SplitSpec spec;
  spec.seed = 7;
  spec.key_holdout_frac = 1.0 / 3.0;
  spec.value_key_frac = 1.0;
  spec.value_holdout_frac = 0.4;
  const SplitResult r = Split(s, spec);
  CHECK(SplitViolation(s, r).empty());
  REQUIRE(r.s_unseen_k.num_keys() == 1);
  CHECK(r.s_unseen_k.num_pairs() == s.Find(r.s_unseen_k.entries().begin()->first)->size());
  // Each remaining multi-value key loses min(ceil(0.4 n), n - 1) values.
  for (const auto& [k, cands] : s.entries()) {
    if (r.s_unseen_k.ContainsKey(k) || cands.size() < 2) continue;
    const std::size_t n = cands.size();
    const std::size_t expect = std::min<std::size_t>(static_cast<std::size_t>(std::ceil(0.4 * n)), n - 1);
    const auto* moved = r.s_unseen_v.Find(k);
    REQUIRE(moved != nullptr);
    CHECK(moved->size() == expect);
    CHECK(moved->size() == 1);
  }
  CHECK_FALSE(r.s_unseen_v.ContainsKey(U'b'));
}

TEST_CASE("split invariants over random sets and specs") {
  Rng rng(2024);
  for (int i = 0; i < 100; ++i) {
    const ConfusionSet s = testing::RandomConfusion(rng, 200, 8);
    SplitSpec spec;
    spec.seed = rng.Next();
    spec.key_holdout_frac = rng.Uniform01();
    spec.value_key_frac = rng.Uniform01();
    spec.value_holdout_frac = 0.01 + 0.98 * rng.Uniform01();
    spec.min_train_values = 1 + rng.Below(3);
    const SplitResult r = Split(s, spec);
    INFO("case " << i);
    CHECK(SplitViolation(s, r).empty());
    const auto expected_k = static_cast<std::size_t>(std::floor(spec.key_holdout_frac * s.num_keys() + 1e-9));
    CHECK(r.s_unseen_k.num_keys() == expected_k);
    for (const auto& [k, cands] : r.s_train.entries()) {
      if (r.s_unseen_v.ContainsKey(k)) CHECK(cands.size() >= spec.min_train_values);
    }
    // Purity: repeated calls agree.
    const SplitResult again = Split(s, spec);
    CHECK(again.s_train == r.s_train);
    CHECK(again.s_unseen_k == r.s_unseen_k);
    CHECK(again.s_unseen_v == r.s_unseen_v);
  }
}

TEST_CASE("split is independent of insertion order") {
  Rng rng(77);
  const ConfusionSet s = testing::RandomConfusion(rng, 60, 4);
  auto pairs = s.Pairs();
  // Re-insert keys in reverse order; per-key value order is preserved.
  ConfusionSet rev;
  for (auto it = pairs.rbegin(); it != pairs.rend();) {
    const char32_t key = it->key;
    auto first = it;
    while (it != pairs.rend() && it->key == key) ++it;
    for (auto j = it; j != first;) {
      --j;
      rev.Add(j->key, j->value, j->tag);
    }
  }
  REQUIRE(rev == s);
  SplitSpec spec;
  spec.seed = 3;
  CHECK(Split(rev, spec).s_train == Split(s, spec).s_train);
}

TEST_CASE("split argument checks") {
  ConfusionSet s;
  s.Add(U'a', U'b', Tag::kBoth);
  CHECK_THROWS_AS(Split(ConfusionSet{}, SplitSpec{}), DataError);
  SplitSpec bad;
  bad.key_holdout_frac = 1.5;
  CHECK_THROWS_AS(Split(s, bad), ArgumentError);
  bad = SplitSpec{};
  bad.value_holdout_frac = 0.0;
  CHECK_THROWS_AS(Split(s, bad), ArgumentError);
  bad = SplitSpec{};
  bad.min_train_values = 0;
  CHECK_THROWS_AS(Split(s, bad), ArgumentError);
}

TEST_CASE("split default ratios land near the reference key proportions") {
  // Key counts 1228 : 3990 : 4075 for unseen-k keys, value-holdout keys and
  // train keys out of 5303.
  testing::WorldSpec ws;
  ws.num_chars = 5303;
  ws.key_frac = 1.0;
  ws.max_candidates = 80;
  ConfusionSet s = testing::MakeWorld(ws).confusion;
  SplitSpec spec;
  spec.seed = 1;
  const SplitResult r = Split(s, spec);
  const double n = static_cast<double>(s.num_keys());
  CHECK(r.s_unseen_k.num_keys() / n == doctest::Approx(1228.0 / 5303).epsilon(0.01));
  CHECK(r.s_unseen_v.num_keys() / n == doctest::Approx(3990.0 / 5303).epsilon(0.03));
  CHECK(r.s_train.num_keys() / n == doctest::Approx(4075.0 / 5303).epsilon(0.03));
}

TEST_CASE("extract_seen_pairs") {
  std::vector<ParallelSentence> ds;
  ds.push_back(MakeParallel("1", U"语言适有现律", U"语言是有规律"));
  ConfusionSet tags;
  tags.Add(U'是', U'适', Tag::kPhonetic);

  ConfusionSet all = ExtractSeenPairs(ds, 2, 1, &tags);
  CHECK(PairsOf(all) == PairSet{{U'是', U'适'}, {U'规', U'现'}});
  CHECK(all.TagOf(U'是', U'适') == Tag::kPhonetic);
  CHECK(all.TagOf(U'规', U'现') == Tag::kBoth);

  const ConfusionSet one = ExtractSeenPairs(ds, 1, 99);
  CHECK(one.num_pairs() == 1);
  CHECK(ExtractSeenPairs(ds, 1, 99) == one);

  std::vector<ParallelSentence> ten;
  const std::u32string tgt = U"ABCDEFGHIJ";
  const std::u32string src = U"abcdefghij";
  ten.push_back(MakeParallel("a", src, tgt));
  ten.push_back(MakeParallel("b", src.substr(0, 4) + tgt.substr(4), tgt));
  const ConfusionSet four = ExtractSeenPairs(ten, 4, 5);
  CHECK(four.num_pairs() == 4);
  for (const auto& [k, v] : PairsOf(four)) {
    CHECK(tgt.find(k) != std::u32string::npos);
    CHECK(v == k - U'A' + U'a');
  }

  std::vector<ParallelSentence> clean{MakeParallel("c", U"abc", U"abc")};
  CHECK_THROWS_AS(ExtractSeenPairs(clean, 3, 1), DataError);
}
