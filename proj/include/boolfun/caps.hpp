#pragma once

namespace boolfun {

// Ground-set size limits per operation class. The environment variable
// BOOLFUN_MAX_N lowers every limit; it never raises one.
struct Caps {
  int arithmetic = 16;  // dense value-table operations
  int partition = 10;   // set-partition enumeration and anything built on it
  int canonical = 8;    // canonicalization up to relabeling
  int bool_max = 5;     // recursive membership test for the maximal subspecies
};

const Caps& caps();

}  // namespace boolfun
