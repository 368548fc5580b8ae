#include "honlb/ingest.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace honlb {

PublicationRecord make_record(std::string paper_id,
                              std::vector<std::string> authors) {
  if (paper_id.empty()) throw std::invalid_argument("empty paper_id");
  std::erase_if(authors, [](const std::string& a) { return a.empty(); });
  std::sort(authors.begin(), authors.end());
  authors.erase(std::unique(authors.begin(), authors.end()), authors.end());
  if (authors.empty())
    throw std::invalid_argument("paper '" + paper_id + "' has no authors");
  return {std::move(paper_id), std::move(authors)};
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Splits one CSV line; quoted fields may contain commas and doubled quotes.
std::vector<std::string> split_csv(const std::string& line, std::size_t lineno) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        fields.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.emplace_back();
    } else if (ch != '\r') {
      fields.back() += ch;
    }
  }
  if (quoted)
    throw std::invalid_argument("line " + std::to_string(lineno) +
                                ": unterminated quote");
  return fields;
}

std::vector<std::string> split_authors(const std::string& field) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= field.size()) {
    const auto stop = field.find(';', start);
    out.push_back(trim(field.substr(start, stop - start)));
    if (stop == std::string::npos) break;
    start = stop + 1;
  }
  return out;
}

}  // namespace

std::vector<PublicationRecord> read_records_csv(std::istream& in) {
  std::vector<PublicationRecord> records;
  std::string line;
  std::size_t lineno = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    auto fields = split_csv(line, lineno);
    if (header) {
      header = false;
      if (fields.size() != 2 || trim(fields[0]) != "paper_id" ||
          trim(fields[1]) != "authors")
        throw std::invalid_argument("expected header 'paper_id,authors'");
      continue;
    }
    if (fields.size() != 2)
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": expected 2 fields");
    records.push_back(
        make_record(trim(fields[0]), split_authors(fields[1])));
  }
  return records;
}

std::vector<PublicationRecord> read_records_jsonl(std::istream& in) {
  std::vector<PublicationRecord> records;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    try {
      const auto obj = nlohmann::json::parse(line);
      records.push_back(
          make_record(obj.at("paper_id").get<std::string>(),
                      obj.at("authors").get<std::vector<std::string>>()));
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " +
                                  e.what());
    }
  }
  return records;
}

HighOrderNetwork build_coauthorship(const std::vector<PublicationRecord>& records,
                                    double epsilon) {
  if (records.empty()) throw std::invalid_argument("no publication records");
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");

  std::set<std::string> ids;
  std::set<std::string> authors;
  for (const auto& r : records) {
    if (!ids.insert(r.paper_id).second)
      throw std::invalid_argument("duplicate paper_id '" + r.paper_id + "'");
    authors.insert(r.authors.begin(), r.authors.end());
  }

  CountTable table;
  table.order = 2;
  table.nodes.assign(authors.begin(), authors.end());
  auto index = [&](const std::string& a) {
    return static_cast<NodeIndex>(
        std::lower_bound(table.nodes.begin(), table.nodes.end(), a) -
        table.nodes.begin());
  };
  for (const auto& r : records) {
    Tuple who;
    for (const auto& a : r.authors) who.push_back(index(a));  // sorted
    const std::size_t m = who.size();
    for (std::size_t i = 0; i < m; ++i) {
      ++table.counts[Tuple{who[i]}];
      for (std::size_t j = i + 1; j < m; ++j) {
        ++table.counts[Tuple{who[i], who[j]}];
        for (std::size_t k = j + 1; k < m; ++k)
          ++table.counts[Tuple{who[i], who[j], who[k]}];
      }
    }
  }
  auto net = normalize_counts(table, records.size());
  return epsilon > 0.0 ? apply_epsilon(net, epsilon) : net;
}

}  // namespace honlb
