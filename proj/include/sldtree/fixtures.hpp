#pragma once

// Knowledge bases bundled with the library, with their canonical queries.

#include <span>
#include <string>
#include <string_view>

namespace sldtree {

struct Fixture {
  std::string_view name;
  std::string_view file;   // path relative to the source tree
  std::string_view query;
  std::string_view source;
};

std::span<const Fixture> fixtures();

/// nullptr when no fixture has that name.
const Fixture* find_fixture(std::string_view name);

/// One "name: query" line per fixture.
std::string fixture_listing();

}  // namespace sldtree
