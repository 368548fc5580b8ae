#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "honlb/network.hpp"

namespace honlb {

HighOrderNetwork network_from_json(const std::string& text);
std::string network_to_json(const HighOrderNetwork& net);

HighOrderNetwork read_network(const std::filesystem::path& path);
void write_network(const std::filesystem::path& path,
                   const HighOrderNetwork& net);

}  // namespace honlb
