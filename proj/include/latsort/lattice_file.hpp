#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "latsort/errors.hpp"
#include "latsort/finite_lattice.hpp"

namespace latsort {

/** Parsed form of the finite-lattice text format:

        # optional comment lines, blank lines ignored
        elements: a b c d e
        covers: a<b b<d d<e a<c c<e

    Names are whitespace-free tokens without '<'; cover pairs join two
    declared names with a single '<'. The covers list may be empty. */
struct LatticeFileData {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> covers;
};

/** Throws ParseError (with a line number) on malformed input. */
LatticeFileData parse_lattice_file(std::istream& in);

/** Parse plus from_cover_relation: throws ParseError on bad syntax and the
    lattice construction errors on a well-formed file that is not a lattice. */
FiniteLattice load_lattice_file(const std::filesystem::path& path);

}  // namespace latsort
