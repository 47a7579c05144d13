// Copyright 2026 The fieldrover Authors
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

#include "fieldrover/yieldkit/metrics.hpp"

#include <algorithm>
#include <numeric>

#include "fieldrover/errors.hpp"

namespace fieldrover::yieldkit {

namespace {

double conf(const BoundingBox& b) { return b.confidence.value_or(1.0); }

// Greedy pass over predictions in the given order; returns the matched gt
// index per visited prediction, or -1.
std::vector<long> greedy(const std::vector<BoundingBox>& pred, const std::vector<std::size_t>& order,
                         const std::vector<BoundingBox>& gt, double iou_threshold, std::vector<double>* ious) {
  std::vector<bool> taken(gt.size(), false);
  std::vector<long> out;
  out.reserve(order.size());
  for (std::size_t p : order) {
    long best = -1;
    double best_iou = -1.0;
    for (std::size_t g = 0; g < gt.size(); ++g) {
      if (taken[g]) continue;
      const double v = iou(pred[p], gt[g]);
      if (v >= iou_threshold && v > best_iou) {
        best = static_cast<long>(g);
        best_iou = v;
      }
    }
    if (best >= 0) taken[static_cast<std::size_t>(best)] = true;
    out.push_back(best);
    if (ious) ious->push_back(best >= 0 ? best_iou : 0.0);
  }
  return out;
}

std::vector<std::size_t> by_confidence(const std::vector<BoundingBox>& pred) {
  std::vector<std::size_t> order(pred.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return conf(pred[a]) > conf(pred[b]); });
  return order;
}

}  // namespace

void EvalConfig::validate() const {
  if (!(confidence_threshold > 0.0 && confidence_threshold < 1.0)) {
    throw InvalidParameter("confidence threshold must lie in (0, 1)");
  }
  if (!(iou_threshold > 0.0 && iou_threshold < 1.0)) throw InvalidParameter("IoU threshold must lie in (0, 1)");
}

std::vector<double> map_iou_grid() {
  std::vector<double> grid;
  for (int i = 0; i < 10; ++i) grid.push_back((50 + 5 * i) / 100.0);
  return grid;
}

MatchResult match_detections(const std::vector<BoundingBox>& pred, const std::vector<BoundingBox>& gt,
                             const EvalConfig& cfg) {
  MatchResult r;
  std::vector<std::size_t> order;
  for (std::size_t i : by_confidence(pred)) {
    if (conf(pred[i]) >= cfg.confidence_threshold) order.push_back(i);
  }
  r.surviving = order.size();
  std::vector<double> ious;
  const auto assigned = greedy(pred, order, gt, cfg.iou_threshold, &ious);
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (assigned[k] >= 0) r.matches.push_back({order[k], static_cast<std::size_t>(assigned[k]), ious[k]});
  }
  r.confusion.tp = static_cast<std::int64_t>(r.matches.size());
  r.confusion.fp = static_cast<std::int64_t>(r.surviving) - r.confusion.tp;
  r.confusion.fn = static_cast<std::int64_t>(gt.size()) - r.confusion.tp;
  return r;
}

double accuracy(const ConfusionMatrix& m) {
  if (m.tp < 0 || m.fn < 0 || m.fp < 0) throw InvalidParameter("confusion counts must be non-negative");
  const std::int64_t total = m.tp + m.fn + m.fp + ConfusionMatrix::tn();
  if (total == 0) throw Undefined("accuracy of an empty confusion matrix");
  return 100.0 * static_cast<double>(m.tp + ConfusionMatrix::tn()) / static_cast<double>(total);
}

double average_precision(const std::vector<ImageDetections>& images, double iou_threshold) {
  struct Ranked {
    double confidence;
    std::size_t image;
    std::size_t index;
    bool tp;
  };
  std::vector<Ranked> ranked;
  std::size_t n_gt = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    const auto& im = images[i];
    n_gt += im.gt.size();
    const auto order = by_confidence(im.pred);
    const auto assigned = greedy(im.pred, order, im.gt, iou_threshold, nullptr);
    for (std::size_t k = 0; k < order.size(); ++k) {
      ranked.push_back({conf(im.pred[order[k]]), i, order[k], assigned[k] >= 0});
    }
  }
  if (n_gt == 0) throw Undefined("average precision without ground truth");
  std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
    if (a.confidence != b.confidence) return a.confidence > b.confidence;
    if (a.image != b.image) return a.image < b.image;
    return a.index < b.index;
  });

  std::vector<double> precision(ranked.size());
  std::size_t tp = 0;
  for (std::size_t k = 0; k < ranked.size(); ++k) {
    if (ranked[k].tp) ++tp;
    precision[k] = static_cast<double>(tp) / static_cast<double>(k + 1);
  }
  for (std::size_t k = ranked.size(); k-- > 1;) precision[k - 1] = std::max(precision[k - 1], precision[k]);
  double ap = 0.0;
  for (std::size_t k = 0; k < ranked.size(); ++k) {
    if (ranked[k].tp) ap += precision[k];
  }
  return ap / static_cast<double>(n_gt);
}

double map_range(const std::vector<ImageDetections>& images) {
  const auto grid = map_iou_grid();
  double sum = 0.0;
  for (double t : grid) sum += average_precision(images, t);
  return sum / static_cast<double>(grid.size());
}

EvalReport evaluate(const std::vector<std::string>& ids, const std::vector<ImageDetections>& images,
                    const EvalConfig& cfg) {
  cfg.validate();
  if (ids.size() != images.size()) throw InvalidParameter("image id list and detections differ in length");
  EvalReport rep;
  std::size_t n_gt = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    const auto m = match_detections(images[i].pred, images[i].gt, cfg);
    rep.confusion += m.confusion;
    rep.per_image.push_back({ids[i], m.confusion, images[i].gt.size(), images[i].pred.size()});
    n_gt += images[i].gt.size();
  }
  if (rep.confusion.tp + rep.confusion.fn + rep.confusion.fp > 0) rep.accuracy_pct = accuracy(rep.confusion);
  if (n_gt > 0) {
    rep.ap50 = average_precision(images, 0.5);
    rep.map50_95 = map_range(images);
  }
  return rep;
}

nlohmann::json report_to_json(const EvalReport& r) {
  auto cm = [](const ConfusionMatrix& m) { return nlohmann::json{{"tp", m.tp}, {"fn", m.fn}, {"fp", m.fp}}; };
  nlohmann::json per = nlohmann::json::array();
  for (const auto& p : r.per_image) {
    per.push_back({{"image_id", p.image_id}, {"confusion", cm(p.confusion)}, {"gt", p.gt}, {"predictions", p.predictions}});
  }
  auto opt = [](const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  return {{"confusion", cm(r.confusion)},
          {"accuracy_pct", opt(r.accuracy_pct)},
          {"ap50", opt(r.ap50)},
          {"map50_95", opt(r.map50_95)},
          {"per_image", per}};
}

}  // namespace fieldrover::yieldkit
