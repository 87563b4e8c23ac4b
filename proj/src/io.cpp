#include "latcon/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "latcon/error.hpp"

namespace latcon {

nlohmann::json to_json(const Lattice& lattice) {
  std::vector<LabelPair> covers;
  covers.reserve(lattice.covers().size());
  for (const auto& [lo, hi] : lattice.covers()) {
    covers.emplace_back(lattice.label(lo), lattice.label(hi));
  }
  std::sort(covers.begin(), covers.end());

  nlohmann::json document;
  document["elements"] = lattice.labels();
  document["covers"] = nlohmann::json::array();
  for (const auto& [lo, hi] : covers) document["covers"].push_back({lo, hi});
  return document;
}

Lattice lattice_from_json(const nlohmann::json& document) {
  try {
    if (!document.is_object() || !document.contains("elements") ||
        !document.contains("covers")) {
      throw Error(ErrorKind::IoError, "expected an object with 'elements' and 'covers'");
    }
    auto labels = document.at("elements").get<std::vector<std::string>>();
    std::vector<LabelPair> covers;
    for (const auto& pair : document.at("covers")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw Error(ErrorKind::IoError, "each cover must be a 2-element array");
      }
      covers.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
    return Lattice::from_covers(std::move(labels), covers);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::IoError, e.what());
  }
}

Lattice read_lattice_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "'");
  nlohmann::json document;
  try {
    in >> document;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::IoError, path.string() + ": " + e.what());
  }
  return lattice_from_json(document);
}

namespace {

std::string quoted(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_dot(const Lattice& lattice, const std::string& graph_name) {
  std::ostringstream out;
  out << "digraph " << quoted(graph_name) << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=circle];\n";
  for (const auto& label : lattice.labels()) out << "  " << quoted(label) << ";\n";
  for (const auto& [lo, hi] : lattice.covers()) {
    out << "  " << quoted(lattice.label(lo)) << " -> " << quoted(lattice.label(hi))
        << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace latcon
