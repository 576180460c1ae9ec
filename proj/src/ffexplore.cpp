#include "newred/ffexplore.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "newred/criteria.hpp"
#include "newred/factor.hpp"
#include "newred/gf.hpp"

namespace newred {

namespace {

// q = p^k with p prime, or throw
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q) {
  if (q < 2) throw std::domain_error("field order must be at least 2");
  std::uint64_t p = q;
  for (std::uint64_t c = 2; c * c <= q; ++c)
    if (q % c == 0) {
      p = c;
      break;
    }
  unsigned k = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw std::domain_error("field order must be a prime power");
  return {p, k};
}

GFPtr make_field(std::uint64_t q) {
  auto [p, k] = prime_power(q);
  return k == 1 ? GF::prime(p) : GF::extension(p, k);
}

FPoly monic_from_code(const GFPtr& F, int d, std::uint64_t code) {
  std::vector<GF::Elem> c(static_cast<std::size_t>(d) + 1);
  std::uint64_t q = F->q();
  for (int i = 0; i < d; ++i) {
    c[static_cast<std::size_t>(i)] = code % q;
    code /= q;
  }
  c[static_cast<std::size_t>(d)] = F->one();
  return FPoly(F, std::move(c));
}

}  // namespace

MembershipReport classify_membership(std::uint64_t q, int d, int n,
                                     unsigned workers) {
  if (d < 2) throw std::invalid_argument("classify_membership: d must be >= 2");
  if (n < 2) throw std::invalid_argument("classify_membership: n must be >= 2");

  // enforce q^(d+1) <= 10^7 before building anything
  unsigned __int128 size = 1;
  for (int i = 0; i <= d; ++i) {
    size *= q;
    if (size > 10000000) throw std::domain_error("scale cap exceeded: q^(d+1) > 10^7");
  }

  auto F = make_field(q);
  std::uint64_t total = 1;
  for (int i = 0; i < d; ++i) total *= q;

  if (workers == 0)
    workers = total > 4096 ? std::min(4u, std::thread::hardware_concurrency()) : 1;
  if (workers < 1) workers = 1;

  std::vector<std::vector<std::uint64_t>> hit_codes(workers);
  auto scan = [&](unsigned w) {
    for (std::uint64_t code = w; code < total; code += workers) {
      auto f = monic_from_code(F, d, code);
      if (newly_reducible(f, n).has_value()) hit_codes[w].push_back(code);
    }
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
    for (auto& t : pool) t.join();
  }

  std::vector<std::uint64_t> codes;
  for (auto& part : hit_codes) codes.insert(codes.end(), part.begin(), part.end());
  std::sort(codes.begin(), codes.end());

  MembershipReport r;
  r.q = q;
  r.d = d;
  r.n = n;
  r.scanned = total;
  for (auto code : codes) r.witnesses.push_back(monic_from_code(F, d, code));
  r.member = !r.witnesses.empty();
  return r;
}

AhmadiReport verify_ahmadi(std::uint64_t q, bool monic_only) {
  auto [p, k] = prime_power(q);
  if (p != 2 || k > 6)
    throw std::domain_error("verify_ahmadi: q must be 2^n with n <= 6");

  auto F = make_field(q);
  AhmadiReport r;
  r.q = q;
  r.monic_only = monic_only;

  for (std::uint64_t lead = 1; lead < (monic_only ? 2 : q); ++lead)
    for (std::uint64_t a1 = 0; a1 < q; ++a1)
      for (std::uint64_t a0 = 0; a0 < q; ++a0) {
        FPoly f(F, {a0, a1, lead});
        ++r.checked;
        // a reducible f = gh has f^3 = g(f^2) h(f^2) reducible for free
        if (!irreducible_gf(f)) continue;
        if (irreducible_gf(iterate(f, 3))) r.exceptions.push_back(f);
      }
  r.verified = r.exceptions.empty();
  return r;
}

std::string membership_csv_header() { return "q,d,n,member,witness_count"; }

std::string membership_csv_row(const MembershipReport& r) {
  std::ostringstream os;
  os << r.q << ',' << r.d << ',' << r.n << ',' << (r.member ? "true" : "false")
     << ',' << r.witnesses.size();
  return os.str();
}

}  // namespace newred
