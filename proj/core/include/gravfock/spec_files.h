#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gravfock/lsz.h"

namespace gravfock {

// Green-function and legs files are line oriented; `#` starts a comment.
//
//   field scalar|dirac|gauge mass=<rational>
//   vertex re=<rational> im=<rational> legs=all|<i>,<j>,...      (1-based leg indices)
//   leg in|out scalar|dirac|gauge p=[x,y,z]|<name> [E=<rational>]
//       [particle|antiparticle] [s=<d>] [g=<d>] [G=<d>]
//
// <d> is an integer or a symbol name. Both files accept every directive; the
// legs of the second file are appended to those of the first.

class SpecError : public std::invalid_argument {
 public:
  SpecError(const std::string& message, int line);
  int line() const { return line_; }

 private:
  int line_;
};

/// Parses one file into `g`, appending fields, legs and vertices. Vertices with
/// legs=all are expanded by finalize_green_function.
void parse_green_spec(std::string_view text, GreenFunction& g);

/// Expands legs=all vertices and validates the legs.
void finalize_green_function(GreenFunction& g);

GreenFunction load_green_function(const std::string& greens_path, const std::string& legs_path);

}  // namespace gravfock
