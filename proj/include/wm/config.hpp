#pragma once

namespace wm {

struct Guards {
  int vertex_limit = 14;                  // domain size for quotient enumeration
  long lattice_limit = 2000000;      // congruences per graph
  long whitehead_step_limit = 100000;
  long labeling_limit = 2000000;     // |G|^rank terms in label expectations
  long search_lattice_limit = 200000;   // efficient congruences per spi branch
  long exact_sn_limit = 15000;       // (N!)^r tuples in exact S_N averages
  long exact_wreath_limit = 10000;   // |G|^N N! elements per factor
};

}  // namespace wm
