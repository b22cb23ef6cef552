// Serialization: the fitted-model JSON document, comparison rendering in
// all three formats, and the diagnostic CSV emitters.

#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "greysd/dataset.hpp"
#include "greysd/diagnostics.hpp"
#include "greysd/errors.hpp"
#include "greysd/models.hpp"
#include "greysd/report_io.hpp"
#include "support.hpp"

using namespace greysd;
using testutil::contains;
using testutil::rel_err;
using testutil::thrown_message;

namespace {

std::vector<FittedModel> fitted_examples() {
  const Series s = fixture("gdp_lanzhou").to_series();
  const SplitSpec split{6, 0};
  return {fit_gm11(s, split), fit_dgm11(s, split),
          fit_simpson(s, split, ModelKind::GM_SC),
          fit_simpson(s, split, ModelKind::GM_SC, ScInit::First),
          fit_simpson(s, split, ModelKind::GM_SD)};
}

} // namespace

TEST_CASE("model documents round-trip bitwise") {
  for (const FittedModel &m : fitted_examples()) {
    CAPTURE(to_string(m.kind));
    const FittedModel back = model_from_json(model_to_json(m));
    CHECK(back.kind == m.kind);
    if (m.kind == ModelKind::DGM11) {
      CHECK(back.beta1 == m.beta1);
      CHECK(back.beta2 == m.beta2);
    } else {
      CHECK(back.params.a == m.params.a);
      CHECK(back.params.b == m.params.b);
    }
    if (m.kind == ModelKind::GM_SD) {
      REQUIRE(back.sd.has_value());
      CHECK(back.sd->w == m.sd->w);
      CHECK(back.sd->lambda == m.sd->lambda);
      CHECK(back.sd->mu == m.sd->mu);
    }
    if (m.kind == ModelKind::GM_SC)
      CHECK(back.sc_init == m.sc_init);
    CHECK(back.split.nu == m.split.nu);
    CHECK(back.head.x0_1 == m.head.x0_1);
    CHECK(back.head.x0_2 == m.head.x0_2);
    CHECK(back.head.x1_1 == m.head.x1_1);
    CHECK(back.head.x1_2 == m.head.x1_2);
    CHECK(back.data_digest == m.data_digest);
    // The restored series must survive the round trip unchanged.
    for (std::size_t k = 1; k <= 12; ++k)
      CHECK(forecast(back, k) == forecast(m, k));
  }
}

TEST_CASE("model documents spell out kind and digest") {
  const auto models = fitted_examples();
  CHECK(contains(model_to_json(models[0]), "\"kind\": \"gm11\""));
  CHECK(contains(model_to_json(models[4]), "\"kind\": \"gm_sd\""));
  CHECK(contains(model_to_json(models[4]),
                 "\"data_digest\": \"0xe4257d71e68fd5f8\""));
  CHECK(contains(model_to_json(models[3]), "\"sc_init\": \"first\""));
  CHECK_FALSE(contains(model_to_json(models[0]), "beta1"));
  CHECK_FALSE(contains(model_to_json(models[1]), "\"a\""));
}

TEST_CASE("malformed model documents are data errors") {
  CHECK(contains(thrown_message<DataError>([] { model_from_json("nope"); }),
                 "model document"));
  CHECK_THROWS_AS(model_from_json("{\"kind\": \"gm11\"}"), DataError);
  CHECK_THROWS_AS(model_from_json("{\"kind\": \"abc\", \"a\": 1}"),
                  DataError);
  const std::string bad_digest =
      "{\"kind\": \"gm11\", \"a\": 0.5, \"b\": 1.0, \"nu\": 6, "
      "\"anchors\": {\"x0_1\": 1, \"x0_2\": 2, \"x1_1\": 1, \"x1_2\": 3}, "
      "\"data_digest\": \"0xzz\"}";
  CHECK(contains(thrown_message<DataError>(
                     [&] { model_from_json(bad_digest); }),
                 "malformed data_digest"));
}

TEST_CASE("report format names") {
  CHECK(report_format_from_string("table") == ReportFormat::Table);
  CHECK(report_format_from_string("csv") == ReportFormat::Csv);
  CHECK(report_format_from_string("json") == ReportFormat::Json);
  CHECK_THROWS_AS(report_format_from_string("yaml"), DataError);
}

TEST_CASE("table rendering mirrors the reference layout") {
  const Series s = fixture("gdp_lanzhou").to_series();
  const SplitSpec split{6, 0};
  const auto entries = run_experiment(s, split, all_model_kinds());
  const std::string table =
      render_comparison(s, entries, split, ReportFormat::Table,
                        "gdp_lanzhou");
  CHECK(contains(table, "gdp_lanzhou (n = 12, fit window 1..6)"));
  CHECK(contains(table, "GM_SD(1,1)"));
  CHECK(contains(table, "2004"));
  CHECK(contains(table, "APE (%)"));
  CHECK(contains(table, "MAPE (%)"));
  CHECK(contains(table, "(* best prediction / overall)"));
  CHECK(contains(table,
                 "GM(1,1): windows simulation [2, 6], prediction [7, 12], "
                 "overall [2, 12]"));
  CHECK(contains(table,
                 "GM_SD(1,1): windows simulation [3, 6], prediction "
                 "[7, 12], overall [3, 12]"));
}

TEST_CASE("csv rendering is a flat grid with error-mean footer") {
  const Series s = fixture("electricity_cn").to_series();
  const SplitSpec split{7, 0};
  const auto entries = run_experiment(s, split, all_model_kinds());
  const std::string csv =
      render_comparison(s, entries, split, ReportFormat::Csv);
  CHECK(csv.substr(0, csv.find('\n')) ==
        "label,data,gm11,dgm11,gm_sc,gm_sd,gm11_ape,dgm11_ape,gm_sc_ape,"
        "gm_sd_ape");
  CHECK(contains(csv, "\n2006,28588,"));
  CHECK(contains(csv, "\nmape_simu,,"));
  CHECK(contains(csv, "\nmape_pred,,"));
  CHECK(contains(csv, "\nmape_over,,"));

  const auto sd_only = run_experiment(s, split, {ModelKind::GM_SD});
  const std::string narrow =
      render_comparison(s, sd_only, split, ReportFormat::Csv);
  CHECK(narrow.substr(0, narrow.find('\n')) ==
        "label,data,gm_sd,gm_sd_ape");
}

TEST_CASE("json rendering carries full precision and windows") {
  const Series s = fixture("gdp_lanzhou").to_series();
  const SplitSpec split{6, 0};
  const auto entries = run_experiment(s, split, all_model_kinds());
  const nlohmann::json doc = nlohmann::json::parse(
      render_comparison(s, entries, split, ReportFormat::Json,
                        "gdp_lanzhou"));
  CHECK(doc.at("dataset") == "gdp_lanzhou");
  CHECK(doc.at("n") == 12);
  CHECK(doc.at("nu") == 6);
  CHECK(doc.at("horizon") == 0);
  REQUIRE(doc.at("models").size() == 4);
  const nlohmann::json &sd = doc.at("models").at(3);
  CHECK(sd.at("kind") == "gm_sd");
  CHECK(sd.at("name") == "GM_SD(1,1)");
  CHECK(rel_err(sd.at("mape").at("simu").get<double>(),
                1.1958624418787238) <= 1e-11);
  CHECK(sd.at("windows").at("simu").at(0) == 3);
  CHECK(sd.at("values").size() == 12);
  CHECK(sd.at("values").at(0).get<double>() == s.at1(1));

  // A fit window covering the full series has no prediction window:
  // its mean is null and the window entry is null.
  const SplitSpec full{12, 0};
  const auto whole = run_experiment(s, full, {ModelKind::GM11});
  const nlohmann::json doc2 = nlohmann::json::parse(
      render_comparison(s, whole, full, ReportFormat::Json));
  CHECK(doc2.at("models").at(0).at("mape").at("pred").is_null());
  CHECK(doc2.at("models").at(0).at("windows").at("pred").is_null());
}

TEST_CASE("failed models render as gaps, not aborts") {
  const Series s = fixture("gdp_lanzhou").to_series();
  const SplitSpec split{6, 0};
  auto entries = run_experiment(s, split, {ModelKind::GM11});
  ExperimentEntry broken;
  broken.kind = ModelKind::GM_SD;
  broken.error = "gm_sd: singular normal equations (probe)";
  entries.push_back(broken);

  const std::string table =
      render_comparison(s, entries, split, ReportFormat::Table);
  CHECK(contains(table, "singular normal equations"));
  const nlohmann::json doc = nlohmann::json::parse(
      render_comparison(s, entries, split, ReportFormat::Json));
  CHECK(doc.at("models").at(1).at("error") ==
        "gm_sd: singular normal equations (probe)");
  CHECK_FALSE(doc.at("models").at(1).contains("values"));
}

TEST_CASE("phi csv uses two-decimal keys and five-digit values") {
  const std::string csv = phi_csv(phi_grid());
  CHECK(csv.substr(0, 6) == "a,phi\n");
  CHECK(contains(csv, "\n0.00,0\n"));
  CHECK(contains(csv, "\n0.30,1.0981e-4\n"));
  CHECK(contains(csv, "\n1.00,9.5015e-2\n"));
}

TEST_CASE("epsilon csv carries the grid plus provenance comments") {
  const EpsilonGridResult grid = epsilon_sweep({1.0, 2.0}, {0.5, 2.0});
  const std::string csv = epsilon_csv(grid);
  CHECK(csv.substr(0, 12) == "r,q,epsilon\n");
  CHECK(contains(csv, "# "));
  CHECK(contains(csv, "max epsilon"));

  const EpsilonGridResult failed = epsilon_sweep({1.0}, {1.0});
  CHECK(contains(epsilon_csv(failed), "nan"));

  const std::string summary = epsilon_summary(grid);
  CHECK(contains(summary, "max epsilon"));
  CHECK(contains(summary, "cells"));
}
