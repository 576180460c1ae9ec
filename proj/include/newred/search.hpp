#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "newred/criteria.hpp"
#include "newred/integer.hpp"

namespace newred {

// Inclusive integer box of monic quadratics x^2 + a x + b, searched for a
// newly reducible n-th iterate.
struct SearchBox {
  Integer a_min, a_max;
  Integer b_min, b_max;
  int n = 3;

  bool valid() const { return a_min <= a_max && b_min <= b_max && n >= 2; }
  Integer candidate_count() const {
    return (a_max - a_min + Integer(1)) * (b_max - b_min + Integer(1));
  }
  bool contains(const Integer& a, const Integer& b) const {
    return a_min <= a && a <= a_max && b_min <= b && b <= b_max;
  }
  friend bool operator==(const SearchBox&, const SearchBox&) = default;
};

struct HitRecord {
  Rational a, b;  // f = x^2 + a x + b
  int n = 0;
  NewlyReducibleWitness<QQ> witness;
  std::string provenance;  // "brute" or "surface"
  std::optional<std::pair<Rational, Rational>> surface_point;  // (r, s) when provenance = surface
  bool integral = false;  // a and b are both integers
  bool in_box = false;    // integral and inside the reference box, when one was given
};

// Durable progress record. The hash is FNV-1a (64-bit) over a canonical
// rendering of the other fields; a file whose stored hash does not match is
// refused rather than silently trusted.
struct Checkpoint {
  SearchBox box;
  long chunk = 1;                                  // a-values per work unit
  std::vector<long> completed;                     // chunk ids, ascending
  std::vector<std::pair<Integer, Integer>> hits;   // (a, b), sorted
  std::string hash;

  long total_chunks() const;
  std::string canonical() const;  // the string the hash covers
};

std::string checkpoint_hash(const Checkpoint& c);
std::string checkpoint_to_json_text(const Checkpoint& c);       // hash recomputed
Checkpoint checkpoint_from_json_text(const std::string& text);  // verifies hash
void write_checkpoint(const Checkpoint& c, const std::string& path);  // tmp + rename
Checkpoint read_checkpoint(const std::string& path);

struct SearchOptions {
  unsigned workers = 1;        // 0 = one per hardware thread, capped at 8
  long chunk = 0;              // a-values per chunk; 0 = 1
  std::string checkpoint_path;  // when set, progress is persisted after every chunk
  bool use_fast_paths = true;   // false = factorization-only oracle mode
  bool allow_large = false;     // permit boxes above the candidate guard
  long max_chunks = 0;  // stop after this many newly completed chunks (0 = no limit)
};

inline constexpr long long kSearchCandidateGuard = 1000000000LL;

// Scan the box in (a, then b) order. Cheap square-class rejections run before
// any factorization unless fast paths are disabled. Result sorted by (a, b).
// Throws std::invalid_argument for an invalid box or n outside 2..4 and
// std::domain_error when the box exceeds the candidate guard without
// allow_large.
std::vector<HitRecord> box_search(const SearchBox& box, const SearchOptions& opts = {});

// Continue a persisted run. The checkpoint supplies box and chunk size; only
// chunks not yet recorded as completed are scanned. An uninterrupted run and
// any interrupt/resume sequence end with the identical hit set.
std::vector<HitRecord> resume_search(const std::string& checkpoint_path,
                                     const SearchOptions& opts = {});

// Walk rational surface points (r, s) with |numerator| and denominator at most
// height (r != 0), keep the ones whose quadratic passes the two square-class
// conditions, and confirm each survivor's third iterate with a factorization
// witness. flag_box, when given, marks hits whose (a, b) is integral and lies
// inside it. Result sorted by (a, b, r, s).
std::vector<HitRecord> surface_search(long height, const SearchBox* flag_box = nullptr);

std::string hits_jsonl(const std::vector<HitRecord>& hits);
std::string hits_csv(const std::vector<HitRecord>& hits);

}  // namespace newred
