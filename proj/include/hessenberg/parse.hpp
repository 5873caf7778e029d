#pragma once

#include <string>
#include <vector>

#include "hessenberg/hessenberg_function.hpp"
#include "hessenberg/jordan.hpp"

namespace hessenberg {

// Accepts "2,3,3" (explicit values), "full" (h == n), "id" (h(i) = i) and
// "banded:b" (h(i) = min(i+b, n)).  Violations report the offending index.
HessenbergFunction parse_h_spec(const std::string& s, int n);

// Accepts "label:parts;label:parts" (e.g. "a:3,1;b:2,1"), "nilpotent:parts"
// (single block set with eigenvalue 0) and "regss:n" (n distinct 1-box
// blocks labeled 0..n-1).
JordanData parse_jordan_spec(const std::string& s);

// Canonical spellings; parse(format(x)) == x.
std::string format_h_spec(const HessenbergFunction& h);
std::string format_jordan_spec(const JordanData& jordan);

}  // namespace hessenberg
