// cogregion: serve the JSON API, run a batch coverage, or validate data files.

#include <csignal>
#include <fstream>
#include <iostream>
#include <pthread.h>
#include <thread>

#include <CLI11.hpp>

#include "cogregion/api.hpp"
#include "cogregion/dataset.hpp"
#include "cogregion/geojson.hpp"
#include "http_server.hpp"

namespace {

using cogregion::CoverageConfig;
using cogregion::Dataset;
using nlohmann::json;

struct DataFlags {
  std::string points;
  std::string admin;
};

struct WeightFlags {
  std::optional<double> weight_area;
  std::optional<double> weight_points;
  std::optional<double> threshold;

  CoverageConfig resolve() const {
    json body = json::object();
    if (weight_area) body["weight_area"] = *weight_area;
    if (weight_points) body["weight_points"] = *weight_points;
    if (threshold) body["threshold"] = *threshold;
    return cogregion::parse_coverage_config(body, {});
  }
};

void add_data_flags(CLI::App* cmd, DataFlags& f) {
  cmd->add_option("--points", f.points, "Earthquake catalog CSV (USGS format)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--admin", f.admin, "GeoJSON FeatureCollection of admin geographies")
      ->required()
      ->check(CLI::ExistingFile);
}

void add_weight_flags(CLI::App* cmd, WeightFlags& w) {
  cmd->add_option("--weight-area", w.weight_area, "Weight of the area proportion")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--weight-points", w.weight_points, "Weight of the point proportion")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--threshold", w.threshold, "Minimum score kept in the ranking")
      ->check(CLI::Range(0.0, 1.0));
}

void log_report(const Dataset& d) {
  std::cerr << "loaded " << d.report.loaded << " of " << d.report.rows << " rows (" << d.report.skipped
            << " skipped, " << d.report.unassigned << " outside every geography), "
            << d.registry.size() << " geographies\n";
}

int run_serve(const DataFlags& data, const WeightFlags& weights, const std::string& regions,
              const std::string& host, int port) {
  const CoverageConfig cfg = weights.resolve();

  // Signals are taken synchronously by a waiter thread; every other thread
  // inherits the blocked mask.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  const Dataset dataset = Dataset::load(data.points, data.admin);
  log_report(dataset);
  cogregion::RegionStore store(regions);
  cogregion::Api api(dataset, store, cfg);
  cogregion::HttpServer server(api);
  const int bound = server.bind(host, port);
  std::cerr << "listening on http://" << host << ":" << bound << "/api\n";

  std::thread waiter([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    server.stop();
  });
  server.serve();
  pthread_kill(waiter.native_handle(), SIGTERM);
  waiter.join();
  std::cerr << "stopped\n";
  return 0;
}

int run_coverage(const DataFlags& data, const WeightFlags& weights, const std::string& selection_path,
                 const std::string& kind) {
  const CoverageConfig cfg = weights.resolve();
  std::ifstream in(selection_path);
  json geometry;
  try {
    geometry = json::parse(in);
  } catch (const json::exception& e) {
    throw cogregion::Error(cogregion::ErrorCode::InvalidGeoJSON, selection_path + ": " + e.what());
  }
  const auto selection = cogregion::parse_selection(geometry, kind);
  const Dataset dataset = Dataset::load(data.points, data.admin);
  const auto result = cogregion::compute_coverage(selection, dataset.points, dataset.index,
                                                  dataset.registry, cfg);
  json out = cogregion::coverage_to_json(result);
  out["kind"] = std::string(cogregion::to_string(selection.kind));
  out["config"] = {{"weight_area", cfg.weight_area},
                   {"weight_points", cfg.weight_points},
                   {"threshold", cfg.threshold}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_validate(const DataFlags& data, const std::string& regions) {
  const Dataset dataset = Dataset::load(data.points, data.admin);
  json out = {{"points", data.points},
              {"admin", data.admin},
              {"rows", dataset.report.rows},
              {"loaded", dataset.report.loaded},
              {"skipped", dataset.report.skipped},
              {"unassigned", dataset.report.unassigned},
              {"geographies", dataset.registry.size()},
              {"bounds", cogregion::to_json(dataset.bounds)}};
  if (!regions.empty()) {
    cogregion::RegionStore store(regions);
    out["regions"] = store.size();
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cognitive region queries over point datasets"};
  app.require_subcommand(1);

  DataFlags data;
  WeightFlags weights;
  std::string regions = "regions.json";
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string selection;
  std::string kind = "auto";

  auto* serve = app.add_subcommand("serve", "Serve the JSON API over HTTP");
  add_data_flags(serve, data);
  add_weight_flags(serve, weights);
  serve->add_option("--regions", regions, "Region store file (created on first save)")
      ->capture_default_str();
  serve->add_option("--host", host, "Address to bind")->capture_default_str();
  serve->add_option("--port", port, "TCP port")->capture_default_str()->check(CLI::Range(1, 65535));

  auto* coverage = app.add_subcommand("coverage", "Rank geographies covered by a selection");
  add_data_flags(coverage, data);
  add_weight_flags(coverage, weights);
  coverage->add_option("--selection", selection, "GeoJSON Polygon (or Feature) file")
      ->required()
      ->check(CLI::ExistingFile);
  coverage->add_option("--kind", kind, "Selection kind")
      ->capture_default_str()
      ->check(CLI::IsMember({"auto", "rectangle", "freehand"}));

  auto* validate = app.add_subcommand("validate", "Load the data files and report");
  add_data_flags(validate, data);
  std::string validate_regions;
  validate->add_option("--regions", validate_regions, "Region store file to check as well");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*serve) return run_serve(data, weights, regions, host, port);
    if (*coverage) return run_coverage(data, weights, selection, kind);
    if (*validate) return run_validate(data, validate_regions);
  } catch (const cogregion::Error& e) {
    std::cerr << "error: " << cogregion::to_string(e.code()) << ": " << e.what() << "\n";
    return 2;
  }
  return 1;
}
