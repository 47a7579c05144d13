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

#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "fieldrover/app/commands.hpp"
#include "fieldrover/errors.hpp"
#include "fieldrover/mission/geotag.hpp"
#include "fieldrover/random.hpp"
#include "fieldrover/yieldkit/augment.hpp"
#include "fieldrover/yieldkit/dataset.hpp"
#include "fieldrover/yieldkit/image.hpp"
#include "fieldrover/yieldkit/metrics.hpp"
#include "fieldrover/yieldkit/yield.hpp"

namespace fieldrover::app {

namespace fs = std::filesystem;
using nlohmann::json;
using namespace fieldrover::yieldkit;

namespace {

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot write " + path.string());
  f << text;
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A dataset entry during preparation: annotations plus pixels when known.
struct Item {
  AnnotatedImage image;
  std::optional<Image> pixels;
  json provenance;
};

std::optional<Image> load_pixels(const AnnotatedImage& img) {
  if (!img.pixels) return std::nullopt;
  Image px = read_png(*img.pixels);
  if (px.width != img.width_px || px.height != img.height_px) {
    throw ParseError("image " + img.image_id + ": PNG is " + std::to_string(px.width) + "x" +
                     std::to_string(px.height) + ", manifest says " + std::to_string(img.width_px) + "x" +
                     std::to_string(img.height_px));
  }
  return px;
}

}  // namespace

int cmd_eval(const EvalSettings& s, std::ostream& out, std::ostream& err) {
  if (!fs::is_directory(s.gt_dir)) {
    err << "error: ground-truth directory '" << s.gt_dir.string() << "' not found\n";
    return kExitUsage;
  }
  if (!fs::is_directory(s.pred_dir)) {
    err << "error: prediction directory '" << s.pred_dir.string() << "' not found\n";
    return kExitUsage;
  }
  try {
    s.eval.validate();
    const auto gt = read_label_dir(s.gt_dir, false);
    const auto pred = read_label_dir(s.pred_dir, true);
    std::map<std::string, const std::vector<BoundingBox>*> pred_by_id;
    for (const auto& [id, boxes] : pred) pred_by_id[id] = &boxes;

    std::vector<std::string> ids;
    std::vector<ImageDetections> images;
    std::size_t overlap = 0;
    for (const auto& [id, boxes] : gt) {
      ImageDetections d;
      d.gt = boxes;
      if (auto it = pred_by_id.find(id); it != pred_by_id.end()) {
        d.pred = *it->second;
        ++overlap;
      }
      ids.push_back(id);
      images.push_back(std::move(d));
    }
    if (!pred.empty() && overlap == 0) {
      err << "error: no prediction file matches a ground-truth image id\n";
      return kExitDomain;
    }
    if (overlap < pred.size()) err << "warning: " << pred.size() - overlap << " prediction files have no ground truth\n";

    const EvalReport report = evaluate(ids, images, s.eval);
    const auto& m = report.confusion;
    out << "confusion matrix (tn not counted)\n"
        << "              actual+   actual-\n"
        << "  predicted+  " << m.tp << "\t" << m.fp << "\n"
        << "  predicted-  " << m.fn << "\t" << 0 << "\n";
    if (report.accuracy_pct) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.2f", *report.accuracy_pct);
      out << "accuracy " << buf << "%\n";
    } else {
      out << "accuracy undefined\n";
    }

    const std::string doc = report_to_json(report).dump(2) + "\n";
    if (s.out) {
      fs::create_directories(*s.out);
      write_text(*s.out / "eval_report.json", doc);
    } else {
      out << doc;
    }

    if (s.geotags) {
      const auto records = mission::parse_geotags(read_text(*s.geotags), mission::GeotagFormat::Csv);
      std::vector<ImagePredictions> dets;
      for (const auto& [id, boxes] : pred) dets.push_back({id, boxes});
      const auto y = yield_count(dets, s.eval, records);
      const json gj = yield_to_geojson(y, std::nullopt);
      const fs::path dest = (s.out ? *s.out : fs::path(".")) / "yield.geojson";
      write_text(dest, gj.dump(2) + "\n");
      out << "yield total " << y.total << " across " << y.located.size() << " locations";
      if (!y.skipped.empty()) out << " (" << y.skipped.size() << " images without geotag)";
      out << '\n';
    }
    return kExitOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

int cmd_prep(const PrepSettings& s, std::ostream& out, std::ostream& err) {
  if (!fs::exists(s.manifest)) {
    err << "error: manifest '" << s.manifest.string() << "' not found\n";
    return kExitUsage;
  }
  if (s.augment_copies < 0) {
    err << "error: augment copies must be non-negative\n";
    return kExitUsage;
  }
  try {
    std::vector<Item> items;
    for (auto& img : load_dataset(s.manifest)) {
      Item it;
      it.pixels = load_pixels(img);
      it.provenance = {{"source", img.image_id}};
      it.image = std::move(img);
      items.push_back(std::move(it));
    }
    json ops = json::array();

    if (s.tile) {
      std::vector<Item> tiled;
      for (const auto& it : items) {
        const auto tiles = split_tiles(it.image.width_px, it.image.height_px, s.grid);
        auto annotated = tile_annotations(it.image, s.grid);
        for (std::size_t k = 0; k < tiles.size(); ++k) {
          Item t;
          t.image = std::move(annotated[k]);
          if (it.pixels) t.pixels = crop(*it.pixels, tiles[k]);
          t.provenance = {{"source", it.image.image_id},
                          {"tile", {{"x", tiles[k].x}, {"y", tiles[k].y}, {"w", tiles[k].width}, {"h", tiles[k].height}}}};
          tiled.push_back(std::move(t));
        }
      }
      items = std::move(tiled);
      ops.push_back({{"op", "tile"}, {"cols", s.grid.cols}, {"rows", s.grid.rows}});
    }

    if (s.negatives) {
      std::vector<Item> negatives;
      json skipped = json::array();
      for (const auto& it : items) {
        try {
          const PixelRect r = largest_empty_rect(it.image);
          Item n;
          n.image.image_id = it.image.image_id + "_neg";
          n.image.width_px = r.width;
          n.image.height_px = r.height;
          if (it.pixels) n.pixels = crop(*it.pixels, r);
          n.provenance = {{"source", it.image.image_id},
                          {"crop", {{"x", r.x}, {"y", r.y}, {"w", r.width}, {"h", r.height}}}};
          negatives.push_back(std::move(n));
        } catch (const EmptyResult&) {
          skipped.push_back(it.image.image_id);
        }
      }
      ops.push_back({{"op", "negatives"}, {"emitted", negatives.size()}, {"skipped", skipped}});
      for (auto& n : negatives) items.push_back(std::move(n));
    }

    if (s.augment) {
      SeedStream seeds(s.seed, "augment");
      std::vector<Item> augmented;
      for (const auto& it : items) {
        for (int k = 1; k <= s.augment_copies; ++k) {
          const AugmentParams p = random_params(seeds.next());
          const std::uint64_t pixel_seed = seeds.next();
          Item a;
          a.image = it.image;
          a.image.image_id = it.image.image_id + "_aug" + std::to_string(k);
          if (it.pixels) a.pixels = augment(*it.pixels, p, pixel_seed);
          a.provenance = {{"source", it.image.image_id}, {"augment", params_to_json(p)}};
          augmented.push_back(std::move(a));
        }
      }
      ops.push_back({{"op", "augment"}, {"copies", s.augment_copies}});
      for (auto& a : augmented) items.push_back(std::move(a));
    }

    std::set<std::string> seen;
    for (const auto& it : items) {
      if (!seen.insert(it.image.image_id).second) throw ParseError("duplicate image id " + it.image.image_id);
    }

    json splits;
    if (s.split) {
      std::vector<AnnotatedImage> imgs;
      for (const auto& it : items) imgs.push_back(it.image);
      const auto r = stratified_split(imgs, s.ratios, substream_seed(s.seed, "split"));
      auto ids = [&](const std::vector<std::size_t>& idx) {
        json a = json::array();
        for (std::size_t i : idx) a.push_back(items[i].image.image_id);
        return a;
      };
      splits = {{"train", ids(r.train)}, {"val", ids(r.val)}, {"test", ids(r.test)}, {"stratified", r.stratified}};
      if (!r.stratified) err << "warning: strata too small, fell back to an unstratified split\n";
      ops.push_back({{"op", "split"},
                     {"ratios", {s.ratios.train, s.ratios.val, s.ratios.test}},
                     {"stratified", r.stratified}});
    }

    fs::create_directories(s.out / "labels");
    json manifest_images = json::array();
    for (const auto& it : items) {
      const std::string label_rel = "labels/" + it.image.image_id + ".txt";
      write_label_file(s.out / label_rel, it.image.ground_truth);
      json entry{{"image_id", it.image.image_id},
                 {"width_px", it.image.width_px},
                 {"height_px", it.image.height_px},
                 {"labels", label_rel},
                 {"provenance", it.provenance}};
      if (it.pixels) {
        fs::create_directories(s.out / "images");
        const std::string image_rel = "images/" + it.image.image_id + ".png";
        write_png(s.out / image_rel, *it.pixels);
        entry["image"] = image_rel;
      }
      manifest_images.push_back(std::move(entry));
    }
    json manifest{{"images", manifest_images}, {"operations", ops}, {"seed", s.seed}};
    if (s.split) manifest["splits"] = splits;
    write_text(s.out / "manifest.json", manifest.dump(2) + "\n");
    out << "wrote " << items.size() << " images to " << s.out.string() << '\n';
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace fieldrover::app
