#include "newred/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "newred/factor.hpp"
#include "newred/families.hpp"
#include "newred/jsonio.hpp"

namespace newred {

namespace {

using json = nlohmann::json;

std::string fnv1a64_hex(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

QPoly monic_quadratic(const Rational& a, const Rational& b) {
  return QPoly(QQ::ctx(), {b, a, Rational(1)});
}

void validate_box(const SearchBox& box) {
  if (!box.valid()) throw std::invalid_argument("empty or inverted search box");
  if (box.n < 2 || box.n > 4)
    throw std::invalid_argument("box search handles n in 2..4");
}

// ascending a-values of chunk id c
std::pair<Integer, Integer> chunk_span(const SearchBox& box, long chunk, long id) {
  Integer lo = box.a_min + Integer(id) * Integer(chunk);
  Integer hi = lo + Integer(chunk - 1);
  if (hi > box.a_max) hi = box.a_max;
  return {lo, hi};
}

using HitKey = std::pair<Integer, Integer>;
using WitnessMap = std::map<HitKey, NewlyReducibleWitness<QQ>>;

// scan one a-strip in (a, b) order; appends to local storage only
void scan_chunk(const SearchBox& box, long chunk, long id, bool fast,
                std::vector<HitKey>& hits, WitnessMap& witnesses) {
  auto [lo, hi] = chunk_span(box, chunk, id);
  for (Integer a = lo; a <= hi; a += Integer(1)) {
    for (Integer b = box.b_min; b <= box.b_max; b += Integer(1)) {
      auto f = monic_quadratic(Rational(a), Rational(b));
      auto w = newly_reducible(f, box.n, fast);
      if (!w) continue;
      hits.emplace_back(a, b);
      witnesses.emplace(HitKey(a, b), std::move(*w));
    }
  }
}

std::vector<HitRecord> assemble(const Checkpoint& cp, const WitnessMap& witnesses, bool fast) {
  std::vector<HitRecord> out;
  out.reserve(cp.hits.size());
  for (const auto& [a, b] : cp.hits) {
    HitRecord rec;
    rec.a = Rational(a);
    rec.b = Rational(b);
    rec.n = cp.box.n;
    rec.provenance = "brute";
    rec.integral = true;
    rec.in_box = cp.box.contains(a, b);
    auto it = witnesses.find(HitKey(a, b));
    if (it != witnesses.end()) {
      rec.witness = it->second;
    } else {
      // carried over from a previous run; the checkpoint stores only (a, b)
      auto w = newly_reducible(monic_quadratic(rec.a, rec.b), cp.box.n, fast);
      if (!w) throw std::runtime_error("checkpoint hit fails re-verification: x^2 + " +
                                       rec.a.str() + " x + " + rec.b.str());
      rec.witness = std::move(*w);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<HitRecord> run_chunks(Checkpoint cp, const SearchOptions& opts) {
  long total = cp.total_chunks();
  std::vector<long> pending;
  for (long id = 0; id < total; ++id)
    if (!std::binary_search(cp.completed.begin(), cp.completed.end(), id)) pending.push_back(id);
  if (opts.max_chunks > 0 && static_cast<long>(pending.size()) > opts.max_chunks)
    pending.resize(opts.max_chunks);

  unsigned workers = opts.workers;
  if (workers == 0) {
    unsigned hw = std::thread::hardware_concurrency();
    workers = hw ? std::min(hw, 8u) : 1;
  }
  workers = std::min<unsigned>(workers, pending.empty() ? 1 : pending.size());

  WitnessMap witnesses;
  std::mutex mu;
  std::atomic<size_t> next{0};

  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= pending.size()) return;
      long id = pending[i];
      std::vector<HitKey> local;
      WitnessMap local_w;
      scan_chunk(cp.box, cp.chunk, id, opts.use_fast_paths, local, local_w);
      std::lock_guard<std::mutex> lock(mu);
      for (auto& k : local) cp.hits.push_back(std::move(k));
      std::sort(cp.hits.begin(), cp.hits.end());
      witnesses.merge(local_w);
      cp.completed.push_back(id);
      std::sort(cp.completed.begin(), cp.completed.end());
      if (!opts.checkpoint_path.empty()) write_checkpoint(cp, opts.checkpoint_path);
    }
  };

  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::sort(cp.hits.begin(), cp.hits.end());
  return assemble(cp, witnesses, opts.use_fast_paths);
}

}  // namespace

long Checkpoint::total_chunks() const {
  Integer span = box.a_max - box.a_min + Integer(1);
  Integer c = (span + Integer(chunk - 1)) / Integer(chunk);
  return c.to_ll();
}

std::string Checkpoint::canonical() const {
  std::ostringstream os;
  os << "box=" << box.a_min.str() << ',' << box.a_max.str() << ',' << box.b_min.str() << ','
     << box.b_max.str() << ',' << box.n << ";chunk=" << chunk << ";completed=";
  for (size_t i = 0; i < completed.size(); ++i) {
    if (i) os << ',';
    os << completed[i];
  }
  os << ";hits=";
  for (size_t i = 0; i < hits.size(); ++i) {
    if (i) os << ',';
    os << hits[i].first.str() << '/' << hits[i].second.str();
  }
  return os.str();
}

std::string checkpoint_hash(const Checkpoint& c) { return fnv1a64_hex(c.canonical()); }

std::string checkpoint_to_json_text(const Checkpoint& c) {
  Checkpoint cc = c;
  std::sort(cc.completed.begin(), cc.completed.end());
  std::sort(cc.hits.begin(), cc.hits.end());
  json j;
  j["box"] = {{"a_min", cc.box.a_min.str()}, {"a_max", cc.box.a_max.str()},
              {"b_min", cc.box.b_min.str()}, {"b_max", cc.box.b_max.str()},
              {"n", cc.box.n}};
  j["chunk"] = cc.chunk;
  j["completed"] = cc.completed;
  json hits = json::array();
  for (const auto& [a, b] : cc.hits) hits.push_back({a.str(), b.str()});
  j["hits"] = hits;
  j["hash"] = checkpoint_hash(cc);
  return j.dump(2) + "\n";
}

Checkpoint checkpoint_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("corrupt checkpoint: ") + e.what());
  }
  Checkpoint c;
  try {
    const auto& jb = j.at("box");
    c.box.a_min = Integer(jb.at("a_min").get<std::string>());
    c.box.a_max = Integer(jb.at("a_max").get<std::string>());
    c.box.b_min = Integer(jb.at("b_min").get<std::string>());
    c.box.b_max = Integer(jb.at("b_max").get<std::string>());
    c.box.n = jb.at("n").get<int>();
    c.chunk = j.at("chunk").get<long>();
    c.completed = j.at("completed").get<std::vector<long>>();
    for (const auto& h : j.at("hits"))
      c.hits.emplace_back(Integer(h.at(0).get<std::string>()), Integer(h.at(1).get<std::string>()));
    c.hash = j.at("hash").get<std::string>();
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("corrupt checkpoint: ") + e.what());
  }
  std::sort(c.completed.begin(), c.completed.end());
  std::sort(c.hits.begin(), c.hits.end());
  if (checkpoint_hash(c) != c.hash)
    throw std::runtime_error("checkpoint hash mismatch; refusing to resume");
  if (!c.box.valid() || c.chunk < 1) throw std::runtime_error("corrupt checkpoint: bad box or chunk");
  return c;
}

void write_checkpoint(const Checkpoint& c, const std::string& path) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint: " + tmp);
    out << checkpoint_to_json_text(c);
  }
  std::filesystem::rename(tmp, path);
}

Checkpoint read_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read checkpoint: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return checkpoint_from_json_text(buf.str());
}

std::vector<HitRecord> box_search(const SearchBox& box, const SearchOptions& opts) {
  validate_box(box);
  if (!opts.allow_large && box.candidate_count() > Integer(kSearchCandidateGuard))
    throw std::domain_error("search box exceeds 10^9 candidates; pass the large-box override");
  Checkpoint cp;
  cp.box = box;
  cp.chunk = opts.chunk > 0 ? opts.chunk : 1;
  if (!opts.checkpoint_path.empty()) write_checkpoint(cp, opts.checkpoint_path);
  return run_chunks(std::move(cp), opts);
}

std::vector<HitRecord> resume_search(const std::string& checkpoint_path,
                                     const SearchOptions& opts) {
  Checkpoint cp = read_checkpoint(checkpoint_path);
  validate_box(cp.box);
  SearchOptions o = opts;
  o.chunk = cp.chunk;
  if (o.checkpoint_path.empty()) o.checkpoint_path = checkpoint_path;
  return run_chunks(std::move(cp), o);
}

std::vector<HitRecord> surface_search(long height, const SearchBox* flag_box) {
  if (height < 1) throw std::invalid_argument("surface search needs height >= 1");
  std::vector<HitRecord> out;
  auto reduced = [](long num, long den) { return gcd(Integer(num), Integer(den)).is_one(); };
  for (long dr = 1; dr <= height; ++dr) {
    for (long nr = -height; nr <= height; ++nr) {
      if (nr == 0 || !reduced(nr, dr)) continue;
      Rational r{Integer(nr), Integer(dr)};
      for (long ds = 1; ds <= height; ++ds) {
        for (long ns = -height; ns <= height; ++ns) {
          if (!reduced(ns, ds)) continue;
          Rational s{Integer(ns), Integer(ds)};
          auto fm = quad_n23_surface(r, s);
          if (!third_iter_condition2(fm.nf->gamma, fm.nf->m)) continue;
          auto w = newly_reducible(fm.f, 3);
          if (!w)
            throw std::logic_error("surface point passed both square-class conditions but the "
                                   "third iterate is not newly reducible: r=" + r.str() +
                                   " s=" + s.str());
          HitRecord rec;
          rec.a = fm.nf->coeff_a();
          rec.b = fm.nf->coeff_b();
          rec.n = 3;
          rec.witness = std::move(*w);
          rec.provenance = "surface";
          rec.surface_point = std::make_pair(r, s);
          rec.integral = rec.a.is_integer() && rec.b.is_integer();
          rec.in_box = rec.integral && flag_box != nullptr &&
                       flag_box->contains(rec.a.num(), rec.b.num());
          out.push_back(std::move(rec));
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const HitRecord& x, const HitRecord& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    if (x.surface_point->first != y.surface_point->first)
      return x.surface_point->first < y.surface_point->first;
    return x.surface_point->second < y.surface_point->second;
  });
  return out;
}

std::string hits_jsonl(const std::vector<HitRecord>& hits) {
  std::ostringstream os;
  for (const auto& h : hits) {
    json j;
    j["a"] = h.a.str();
    j["b"] = h.b.str();
    j["n"] = h.n;
    j["provenance"] = h.provenance;
    if (h.surface_point)
      j["surface_point"] = {h.surface_point->first.str(), h.surface_point->second.str()};
    j["integral"] = h.integral;
    j["in_box"] = h.in_box;
    j["witness"] = witness_json(h.witness);
    os << j.dump() << '\n';
  }
  return os.str();
}

std::string hits_csv(const std::vector<HitRecord>& hits) {
  std::ostringstream os;
  os << "a,b,n,provenance,r,s,integral,in_box\n";
  for (const auto& h : hits) {
    os << h.a.str() << ',' << h.b.str() << ',' << h.n << ',' << h.provenance << ',';
    if (h.surface_point) os << h.surface_point->first.str();
    os << ',';
    if (h.surface_point) os << h.surface_point->second.str();
    os << ',' << (h.integral ? "true" : "false") << ',' << (h.in_box ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace newred
