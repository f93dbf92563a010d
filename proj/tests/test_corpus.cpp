// Copyright 2026 The Authors.
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "fairsumm/corpus.hpp"
#include "fairsumm/porter.hpp"
#include "fairsumm/tokenize.hpp"

using namespace fairsumm;

TEST_CASE("porter single pass matches the published algorithm") {
  const std::pair<const char*, const char*> fixtures[] = {
      {"caresses", "caress"}, {"ponies", "poni"},      {"ties", "ti"},
      {"caress", "caress"},   {"cats", "cat"},         {"feed", "feed"},
      {"agreed", "agre"},     {"plastered", "plaster"}, {"bled", "bled"},
      {"motoring", "motor"},  {"sing", "sing"},        {"conflated", "conflat"},
      {"troubled", "troubl"}, {"sized", "size"},       {"hopping", "hop"},
      {"tanned", "tan"},      {"falling", "fall"},     {"hissing", "hiss"},
      {"fizzed", "fizz"},     {"failing", "fail"},     {"filing", "file"},
      {"happy", "happi"},     {"sky", "sky"},          {"relational", "relat"},
      {"conditional", "condit"}, {"rational", "ration"}, {"valenci", "valenc"},
      {"hesitanci", "hesit"}, {"digitizer", "digit"},  {"differentli", "differ"},
      {"vileli", "vile"},     {"analogousli", "analog"},
      {"vietnamization", "vietnam"}, {"predication", "predic"},
      {"operator", "oper"},   {"feudalism", "feudal"},
      {"decisiveness", "decis"}, {"hopefulness", "hope"},
      {"callousness", "callous"}, {"formaliti", "formal"},
      {"sensitiviti", "sensit"}, {"sensibiliti", "sensibl"},
      {"triplicate", "triplic"}, {"formative", "form"}, {"formalize", "formal"},
      {"electriciti", "electr"}, {"electrical", "electr"}, {"hopeful", "hope"},
      {"goodness", "good"},   {"revival", "reviv"},    {"allowance", "allow"},
      {"inference", "infer"}, {"airliner", "airlin"},
      {"gyroscopic", "gyroscop"}, {"adjustable", "adjust"},
      {"defensible", "defens"}, {"irritant", "irrit"},
      {"replacement", "replac"}, {"adjustment", "adjust"},
      {"dependent", "depend"}, {"adoption", "adopt"},  {"communism", "commun"},
      {"activate", "activ"},  {"angulariti", "angular"},
      {"homologous", "homolog"}, {"effective", "effect"},
      {"bowdlerize", "bowdler"}, {"probate", "probat"}, {"rate", "rate"},
      {"cease", "ceas"},      {"controll", "control"}, {"roll", "roll"},
      {"running", "run"},     {"meeting", "meet"},     {"flies", "fli"},
      {"dies", "di"},         {"denied", "deni"},      {"owned", "own"},
      {"itemization", "item"}, {"sensational", "sensat"},
      {"traditional", "tradit"}, {"reference", "refer"},
      {"colonizer", "colon"}, {"plotted", "plot"},
  };
  for (const auto& [word, stem] : fixtures) {
    CAPTURE(word);
    CHECK(porter_stem_once(word) == stem);
  }
}

TEST_CASE("porter fixed point is stable") {
  const char* words[] = {"decisiveness", "agreed",  "cease",
                         "generalization", "oscillators", "abilities",
                         "running", "cats", "senationalization"};
  for (const char* w : words) {
    std::string stem = porter_stem(w);
    CHECK(porter_stem(stem) == stem);
    CHECK(porter_stem_once(stem) == stem);
  }
}

TEST_CASE("split_words folds case and keeps multibyte sequences") {
  CHECK(split_words("Hello, World!") ==
        std::vector<std::string>{"hello", "world"});
  CHECK(split_words("a-b_c") == std::vector<std::string>{"a", "b", "c"});
  CHECK(split_words("  ") == std::vector<std::string>{});
  CHECK(split_words("caf\xc3\xa9 time") ==
        std::vector<std::string>{"caf\xc3\xa9", "time"});
  CHECK(split_words("x3y4") == std::vector<std::string>{"x3y4"});
}

TEST_CASE("preprocess worked examples") {
  StopwordSet stops{"the", "are"};
  CHECK(preprocess("The cats are running", stops) ==
        std::vector<std::string>{"cat", "run"});
  CHECK(preprocess("", stops).empty());
  CHECK(preprocess("AAAA aaaa", StopwordSet{}) ==
        std::vector<std::string>{"aaaa", "aaaa"});
}

TEST_CASE("preprocess is idempotent on rejoined token streams") {
  const char* samples[] = {
      "The cats are running faster than the dogs",
      "Decisiveness and hopefulness characterize effective leadership",
      "Oscillators generate electrical oscillations in traditional radios",
      "She cans tomatoes while they generalize about abilities",
      "Conditional statements in rational arguments need careful predication",
      "senationalization of dying industries was sensational",
  };
  const StopwordSet& stops = default_stopwords();
  for (const char* sample : samples) {
    CAPTURE(sample);
    auto first = preprocess(sample, stops);
    std::string rejoined;
    for (const auto& tok : first) {
      if (!rejoined.empty()) rejoined += ' ';
      rejoined += tok;
    }
    CHECK(preprocess(rejoined, stops) == first);
  }
}

TEST_CASE("load_corpus deduplicates exact texts keeping first occurrence") {
  std::string jsonl =
      R"({"id":"a","text":"Hello   world","group":"g1"})" "\n"
      R"({"id":"b","text":"hello world","group":"g2"})" "\n"
      R"({"id":"c","text":"Different text","group":"g2"})" "\n";
  Corpus corpus = parse_corpus(jsonl);
  CHECK(corpus.size() == 2);
  CHECK(corpus.unit(0).id == "a");
  CHECK(corpus.unit(1).id == "c");
}

TEST_CASE("census counts groups") {
  std::string jsonl =
      R"({"id":"a","text":"one","group":"male"})" "\n"
      R"({"id":"b","text":"two","group":"female"})" "\n"
      R"({"id":"c","text":"three","group":"female"})" "\n";
  Corpus corpus = parse_corpus(jsonl);
  CHECK(corpus.census().at("male") == 1);
  CHECK(corpus.census().at("female") == 2);
  CHECK(corpus.groups() == std::vector<std::string>{"male", "female"});
}

TEST_CASE("load errors carry line numbers") {
  CHECK_THROWS_AS(parse_corpus("{not json}\n"), ParseError);
  try {
    parse_corpus(R"({"id":"a","text":"x","group":"g"})" "\n" "{broken\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_corpus(""), ValidationError);
  CHECK_THROWS_AS(
      parse_corpus(R"({"id":"a","text":"x","group":"g"})" "\n"
                   R"({"id":"a","text":"y","group":"g"})" "\n"),
      ParseError);
  CHECK_THROWS_AS(parse_corpus(R"({"id":"a","text":"x"})" "\n"), ParseError);
  CHECK_THROWS_AS(parse_corpus(R"({"id":"a","text":"x","group":"g","score":-1})" "\n"),
                  ParseError);
}

TEST_CASE("unlabeled records map to the reserved group only when allowed") {
  std::string jsonl = R"({"id":"a","text":"x"})" "\n"
                      R"({"id":"b","text":"y","group":"g"})" "\n";
  LoadOptions allow;
  allow.allow_unlabeled = true;
  Corpus corpus = parse_corpus(jsonl, allow);
  CHECK(corpus.unit(0).group == kUnknownGroup);
  CHECK(corpus.labeled_census().size() == 1);
  CHECK(corpus.census().size() == 2);
}

TEST_CASE("reloading a serialized corpus yields an identical corpus") {
  std::string jsonl =
      R"({"id":"a","text":"The Cats are running","group":"g1","score":3.5})" "\n"
      R"({"id":"b","text":"dogs bark","group":"g2"})" "\n"
      R"({"id":"c","text":"the cats ARE running","group":"g1"})" "\n";
  Corpus first = parse_corpus(jsonl);
  Corpus second = parse_corpus(serialize_corpus(first));
  REQUIRE(second.size() == first.size());
  for (Index i = 0; i < first.size(); ++i) {
    CHECK(second.unit(i).id == first.unit(i).id);
    CHECK(second.unit(i).raw_text == first.unit(i).raw_text);
    CHECK(second.unit(i).tokens == first.unit(i).tokens);
    CHECK(second.unit(i).group == first.unit(i).group);
    CHECK(second.unit(i).external_score == first.unit(i).external_score);
  }
  CHECK(second.census() == first.census());
}

TEST_CASE("census holds up at corpus scale") {
  // 4037 units split 2505/1532, mirroring a real two-group tweet corpus.
  std::ostringstream jsonl;
  for (int i = 0; i < 4037; ++i) {
    jsonl << R"({"id":"t)" << i << R"(","text":"post number )" << i
          << R"( about topic )" << i % 17 << R"(","group":")"
          << (i < 2505 ? "female" : "male") << R"("})" << '\n';
  }
  Corpus corpus = parse_corpus(jsonl.str());
  CHECK(corpus.size() == 4037);
  CHECK(corpus.census().at("female") == 2505);
  CHECK(corpus.census().at("male") == 1532);
}

TEST_CASE("shipped stopword file matches the built-in list") {
  StopwordSet from_file =
      load_stopwords(std::string(FAIRSUMM_SOURCE_DIR) + "/data/stopwords_en.txt");
  CHECK(from_file == default_stopwords());
}
