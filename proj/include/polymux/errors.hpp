#pragma once

#include <stdexcept>
#include <string>

namespace polymux {

// Base for every condition a caller may want to dispatch on.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadParams : Error { using Error::Error; };

// Facet-list problems detected while building a lattice.
struct DuplicateFacet : Error { using Error::Error; };
struct NotGraded : Error { using Error::Error; };

// Poset / lattice operations.
struct NotComparable : Error { using Error::Error; };
struct NotEulerian : Error { using Error::Error; };
struct NotAntiIso : Error { using Error::Error; };

// Formula evaluation.
struct NonIntegerResult : Error { using Error::Error; };

// Construction generators.
struct OddSize : Error { using Error::Error; };
struct NotSubset : Error { using Error::Error; };
struct FacetCountMismatch : Error { using Error::Error; };

// Graph routines.
struct CyclicCase : Error { using Error::Error; };
struct NotEdge : Error { using Error::Error; };
struct Disconnected : Error { using Error::Error; };

// Conjecture gate.
struct RankDeficient : Error {
  RankDeficient(const std::string& what, int rank) : Error(what), rank_found(rank) {}
  int rank_found;
};

// Document I/O.
struct ParseError : Error { using Error::Error; };
struct AppendixFormatUnavailable : Error { using Error::Error; };

}  // namespace polymux
