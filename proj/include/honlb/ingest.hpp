#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "honlb/network.hpp"

namespace honlb {

struct PublicationRecord {
  std::string paper_id;
  std::vector<std::string> authors;  // sorted, unique, non-empty
};

PublicationRecord make_record(std::string paper_id,
                              std::vector<std::string> authors);

// CSV with a `paper_id,authors` header; authors separated by ';'. Fields may
// be double-quoted.
std::vector<PublicationRecord> read_records_csv(std::istream& in);

// One object per line: {"paper_id": "...", "authors": ["...", ...]}.
std::vector<PublicationRecord> read_records_jsonl(std::istream& in);

// Order 2 proximity network: each tuple of 1..3 authors valued by the share
// of papers written jointly by all of them. epsilon > 0 then runs
// apply_epsilon; 0 leaves ties in place.
HighOrderNetwork build_coauthorship(const std::vector<PublicationRecord>& records,
                                    double epsilon = 0.0);

}  // namespace honlb
