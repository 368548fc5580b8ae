#include "honlb/network_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "honlb/format.hpp"
#include "json.hpp"

namespace honlb {

using nlohmann::json;

HighOrderNetwork network_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed network JSON: ") +
                                e.what());
  }
  try {
    const int order = doc.at("order").get<int>();
    const Mode mode = parse_mode(doc.at("mode").get<std::string>());
    auto nodes = doc.at("nodes").get<std::vector<std::string>>();
    std::vector<HighOrderNetwork::Entry> entries;
    if (doc.contains("weights")) {
      for (const auto& w : doc.at("weights"))
        entries.push_back({w.at("tuple").get<std::vector<std::string>>(),
                           w.at("value").get<double>()});
    }
    return HighOrderNetwork(order, mode, std::move(nodes), entries);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad network JSON: ") + e.what());
  }
}

// Hand-written so numbers use the shortest round-trip form and the layout
// stays one weight per line.
std::string network_to_json(const HighOrderNetwork& net) {
  std::ostringstream os;
  os << "{\n  \"order\": " << net.order() << ",\n  \"mode\": \""
     << to_string(net.mode()) << "\",\n  \"nodes\": [";
  for (std::size_t i = 0; i < net.size(); ++i)
    os << (i ? ", " : "") << json(net.nodes()[i]).dump();
  os << "],\n  \"weights\": [";
  bool first = true;
  for (const auto& [key, value] : net.weights()) {
    os << (first ? "\n" : ",\n") << "    {\"tuple\": [";
    for (std::size_t i = 0; i < key.size(); ++i)
      os << (i ? ", " : "") << json(net.nodes()[key[i]]).dump();
    os << "], \"value\": " << format_real(value) << "}";
    first = false;
  }
  os << (first ? "]\n}\n" : "\n  ]\n}\n");
  return os.str();
}

HighOrderNetwork read_network(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return network_from_json(buf.str());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

void write_network(const std::filesystem::path& path,
                   const HighOrderNetwork& net) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << network_to_json(net);
}

}  // namespace honlb
