#include "qmap/random.hpp"

namespace qmap {

namespace {

std::uint64_t splitmix(std::uint64_t state) {
  state += 0x9e3779b97f4a7c15ULL;
  state = (state ^ (state >> 30)) * 0xbf58476d1ce4e5b9ULL;
  state = (state ^ (state >> 27)) * 0x94d049bb133111ebULL;
  return state ^ (state >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t size, std::uint64_t index) {
  return splitmix(splitmix(splitmix(master) ^ size) ^ index);
}

}  // namespace qmap
