//------------------------------------------------------------------------------
//
//   Copyright 2026 PricingLab developers
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include <random>

#include <doctest.h>

#include "pricinglab/errors.hpp"
#include "pricinglab/json_io.hpp"
#include "pricinglab/verify.hpp"
#include "pricinglab/worstcase.hpp"

using namespace pricinglab;

TEST_CASE("prior JSON schema") {
  PriorPtr d = parse_prior_json(R"({"type":"discrete","values":[1,2],"probs":[0.5,0.5]})");
  CHECK(d->family() == "discrete");
  CHECK(d->mean() == doctest::Approx(1.5).epsilon(1e-12));

  PriorPtr u = parse_prior_json(R"({"type":"uniform","lo":0,"hi":1})");
  CHECK(u->monopoly().revenue == doctest::Approx(0.25).epsilon(1e-12));

  PriorPtr e = parse_prior_json(R"({"type":"exponential","rate":1})");
  CHECK(e->mean() == doctest::Approx(1.0).epsilon(1e-12));

  PriorPtr er = parse_prior_json(R"({"type":"equal_revenue","truncation":100})");
  CHECK(er->monopoly().price == doctest::Approx(1.0).epsilon(1e-12));

  PriorPtr p = parse_prior_json(R"({"type":"point_mass","value":1})");
  CHECK(p->monopoly().revenue == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("prior JSON rejections") {
  // unsorted values
  CHECK_THROWS_AS(parse_prior_json(R"({"type":"discrete","values":[2,1],"probs":[0.5,0.5]})"),
                  Error);
  // nonpositive probability
  CHECK_THROWS_AS(parse_prior_json(R"({"type":"discrete","values":[1,2],"probs":[1.0,0.0]})"),
                  Error);
  // probability sum outside the 1e-9 window
  CHECK_THROWS_AS(parse_prior_json(R"({"type":"discrete","values":[1,2],"probs":[0.5,0.4]})"),
                  Error);
  CHECK_THROWS_AS(parse_prior_json(R"({"type":"gaussian","mu":0})"), Error);
  CHECK_THROWS_AS(parse_prior_json("not json"), Error);
  CHECK_THROWS_AS(parse_prior_json(R"({"type":"uniform","lo":1,"hi":0.5})"), Error);
  try {
    parse_prior_json(R"({"type":"discrete","values":[1,2],"probs":[0.5,0.4]})");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::parse);
  }
}

TEST_CASE("prior shorthands") {
  CHECK(parse_prior_spec("uniform01")->family() == "uniform");
  CHECK(parse_prior_spec("exp:2")->mean() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(parse_prior_spec("er:100")->mean() ==
        doctest::Approx(1.0 + std::log(100.0)).epsilon(1e-12));
  CHECK(parse_prior_spec("point:3")->monopoly().price == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(parse_prior_spec(R"({"type":"point_mass","value":1})")->family() == "point_mass");
  CHECK_THROWS_AS(parse_prior_spec("mystery"), Error);
  CHECK_THROWS_AS(parse_prior_spec("er:xyz"), Error);
}

TEST_CASE("prior serialization round-trips through the parser") {
  std::mt19937_64 gen(21);
  auto corpus = make_corpus(21, 5);
  for (const auto& prior : corpus) {
    PriorPtr back = parse_prior_json(prior_to_json(prior));
    CHECK(back->mean() == doctest::Approx(prior.mean()).epsilon(1e-9));
    CHECK(back->monopoly().revenue == doctest::Approx(prior.monopoly().revenue).epsilon(1e-9));
    for (int k = 0; k < 20; ++k) {
      double v = 10.5 * static_cast<double>(gen() >> 11) * 0x1.0p-53;
      CHECK(back->cdf_strict(v) == doctest::Approx(prior.cdf_strict(v)).epsilon(1e-9));
    }
  }
  PriorPtr u = parse_prior_json(prior_to_json(UniformPrior(0.25, 2.0)));
  CHECK(u->mean() == doctest::Approx(1.125).epsilon(1e-12));
}

TEST_CASE("report and certificate serialization shapes") {
  MechanismSolution sol;
  sol.c = 1.0;
  sol.rev = 1.0;
  sol.x = {0.5, 1.0};
  sol.p = {0.5, 1.5};
  sol.u = {0.0, 0.5};
  std::string j = mechanism_solution_to_json(sol);
  CHECK(j.find("\"C\":1") != std::string::npos);
  CHECK(j.find("\"x\":[0.5,1]") != std::string::npos);

  DualCertificate cert;
  cert.eta = 0.25;
  cert.beta = {1.0, 0.0};
  cert.objective = 1.0;
  CHECK(dual_certificate_to_json(cert).find("\"beta\":[1,0]") != std::string::npos);

  TradeoffReport report;
  report.mechanism = "guess_discount";
  report.c = 1.0;
  report.r = 5.0 / 6.0;
  report.hallucinatory_rev = 5.0 / 24.0;
  report.opt = 0.25;
  report.aux.emplace_back("monopoly_price", 0.5);
  std::string rj = tradeoff_report_to_json(report);
  CHECK(rj.find("\"mechanism\":\"guess_discount\"") != std::string::npos);
  CHECK(rj.find("\"R\":0.833333333333") != std::string::npos);
  CHECK(rj.find("\"aux\":{\"monopoly_price\":0.5}") != std::string::npos);
}

TEST_CASE("envelope parameters round-trip") {
  EnvelopeParams params{1.0, 0.0, StepFunction({0.0, 2.0}, {1.0})};
  std::string j = envelope_params_to_json(params);
  CHECK(j.find("\"beta\":[[0,1],[2,0]]") != std::string::npos);
  CHECK(j.find("\"U\":2") != std::string::npos);
  EnvelopeParams back = envelope_params_from_json(j);
  CHECK(back.t == doctest::Approx(1.0));
  CHECK(back.beta.front_level() == doctest::Approx(1.0));
  CHECK(back.beta.domain_end() == doctest::Approx(2.0));

  EnvelopeParams two = envelope_params_from_json(
      R"({"T":1,"eta":0.1,"beta":[[0,2.0],[1.2,0.5],[2.5,0.0]],"U":2.5})");
  CHECK(two.eta == doctest::Approx(0.1));
  CHECK(two.beta.levels().size() == 2);
  CHECK(two.beta.value(2.0) == doctest::Approx(0.5));

  CHECK_THROWS_AS(envelope_params_from_json(R"({"T":1,"beta":[[0,1.0],[2.0,0.5]]})"), Error);
  CHECK_THROWS_AS(envelope_params_from_json(R"({"T":1,"beta":[[0,1.0],[2.0,0.0]],"U":9})"),
                  Error);
}

TEST_CASE("numbers are printed with 12 significant digits") {
  CHECK(format_number(5.0 / 6.0) == "0.833333333333");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(1.5e-15) == "1.5e-15");
}
