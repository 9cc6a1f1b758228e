#include "pbw/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <type_traits>

namespace pbw {

size_t WordHash::operator()(const Word& w) const noexcept {
  size_t h = 1469598103934665603ull;
  for (int letter : w) {
    h ^= static_cast<size_t>(letter);
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

template <class K>
using PolyOf = std::map<Monomial, K, MonomialLess>;

template <class K>
void add_to(PolyOf<K>& acc, const Monomial& m, const std::type_identity_t<K>& c) {
  if (is_zero(c)) return;
  auto [it, fresh] = acc.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (is_zero(it->second)) acc.erase(it);
  }
}

bool is_constant_scalar(const Rational&) { return true; }
bool is_constant_scalar(const HRat& r) { return r.num().is_constant() && r.den().is_constant(); }

Word join(const Word& a, const Word& b, const Word& c) {
  Word out;
  out.reserve(a.size() + b.size() + c.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  out.insert(out.end(), c.begin(), c.end());
  return out;
}

bool is_subword(const Word& small, const Word& big) {
  if (small.size() > big.size()) return false;
  return std::search(big.begin(), big.end(), small.begin(), small.end()) != big.end();
}

// All words of length 0..max_len over letters 1..n.
std::vector<Word> words_up_to(int n, int max_len) {
  std::vector<Word> out{Word{}};
  size_t begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    size_t end = out.size();
    for (size_t t = begin; t < end; ++t)
      for (int letter = 1; letter <= n; ++letter) {
        Word w = out[t];
        w.push_back(letter);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

}  // namespace

template <class K>
RewriteSystem<K>::RewriteSystem(int n, bool central_h) : n_(n), central_h_(central_h) {
  if constexpr (!std::is_same_v<K, Rational>)
    if (central_h) throw Error(Errc::PathMismatch, "central h requires rational coefficients");
}

template <class K>
void RewriteSystem<K>::index_rule(size_t id) {
  const Word& w = slots_[id].lead.word;
  by_lead_[w].push_back(id);
  ++lead_lengths_[w.size()];
}

template <class K>
void RewriteSystem<K>::unindex_rule(size_t id) {
  const Word& w = slots_[id].lead.word;
  auto& ids = by_lead_[w];
  ids.erase(std::remove(ids.begin(), ids.end(), id), ids.end());
  if (ids.empty()) by_lead_.erase(w);
  if (--lead_lengths_[w.size()] == 0) lead_lengths_.erase(w.size());
}

template <class K>
void RewriteSystem<K>::add_relation(const Poly& p) {
  if (p.empty()) return;
  auto lead_it = std::prev(p.end());
  Slot s;
  s.lead = lead_it->first;
  const K c = lead_it->second;
  if (!is_constant_scalar(c)) normalizers_.push_back(c);
  const K inv = K(1) / c;
  for (auto it = p.begin(); it != lead_it; ++it) add_to<K>(s.tail, it->first, -(it->second * inv));
  slots_.push_back(std::move(s));
  index_rule(slots_.size() - 1);
}

template <class K>
std::vector<typename RewriteSystem<K>::Rule> RewriteSystem<K>::rules() const {
  std::vector<Rule> out;
  for (const auto& s : slots_)
    if (s.alive) out.push_back({s.lead, s.tail});
  std::sort(out.begin(), out.end(),
            [](const Rule& a, const Rule& b) { return MonomialLess{}(a.lead, b.lead); });
  return out;
}

template <class K>
size_t RewriteSystem<K>::rule_count() const {
  return static_cast<size_t>(std::count_if(slots_.begin(), slots_.end(), [](const Slot& s) { return s.alive; }));
}

template <class K>
const typename RewriteSystem<K>::Slot* RewriteSystem<K>::find_reducer(const Monomial& m, size_t* at,
                                                                      std::mt19937_64* rng) const {
  const Word& w = m.word;
  std::vector<std::pair<const Slot*, size_t>> hits;
  Word probe;
  for (size_t start = 0; start <= w.size(); ++start) {
    for (const auto& [len, count] : lead_lengths_) {
      if (start + len > w.size()) break;
      probe.assign(w.begin() + static_cast<long>(start), w.begin() + static_cast<long>(start + len));
      auto it = by_lead_.find(probe);
      if (it == by_lead_.end()) continue;
      for (size_t id : it->second) {
        const Slot& s = slots_[id];
        if (s.lead.h > m.h) continue;
        if (!rng) {
          *at = start;
          return &s;
        }
        hits.emplace_back(&s, start);
      }
    }
  }
  if (hits.empty()) return nullptr;
  std::uniform_int_distribution<size_t> pick(0, hits.size() - 1);
  const auto& chosen = hits[pick(*rng)];
  *at = chosen.second;
  return chosen.first;
}

template <class K>
typename RewriteSystem<K>::Poly RewriteSystem<K>::reduce(const Poly& p, std::mt19937_64* rng) const {
  auto apply = [&](Poly& target, const Monomial& m, const K& c, const Slot& s, size_t pos) {
    const Word left(m.word.begin(), m.word.begin() + static_cast<long>(pos));
    const Word right(m.word.begin() + static_cast<long>(pos + s.lead.word.size()), m.word.end());
    const int dh = m.h - s.lead.h;
    for (const auto& [tm, tc] : s.tail) add_to<K>(target, {join(left, tm.word, right), tm.h + dh}, c * tc);
  };

  if (!rng) {
    Poly work = p;
    Poly result;
    while (!work.empty()) {
      auto it = std::prev(work.end());
      size_t pos = 0;
      const Slot* s = find_reducer(it->first, &pos, nullptr);
      if (!s) {
        result.emplace_hint(result.begin(), it->first, it->second);
        work.erase(it);
        continue;
      }
      const Monomial m = it->first;
      const K c = it->second;
      work.erase(it);
      apply(work, m, c, *s, pos);
    }
    return result;
  }

  Poly work = p;
  while (true) {
    std::vector<typename Poly::const_iterator> reducible;
    size_t pos = 0;
    for (auto it = work.begin(); it != work.end(); ++it)
      if (find_reducer(it->first, &pos, nullptr)) reducible.push_back(it);
    if (reducible.empty()) return work;
    std::uniform_int_distribution<size_t> pick(0, reducible.size() - 1);
    auto it = reducible[pick(*rng)];
    const Slot* s = find_reducer(it->first, &pos, rng);
    const Monomial m = it->first;
    const K c = it->second;
    work.erase(it);
    apply(work, m, c, *s, pos);
  }
}

template <class K>
typename RewriteSystem<K>::Poly RewriteSystem<K>::full_poly(const Slot& s) const {
  Poly out;
  out.emplace(s.lead, K(1));
  for (const auto& [m, c] : s.tail) add_to<K>(out, m, -c);
  return out;
}

template <class K>
std::optional<size_t> RewriteSystem<K>::insert(const Poly& p, std::vector<Poly>& pending) {
  Poly r = reduce(p);
  if (r.empty()) return std::nullopt;
  const Monomial lead = std::prev(r.end())->first;
  if (central_h_ && lead.h > hbar_cap_)
    throw Error(Errc::OutOfRange, "completion produced h^" + std::to_string(lead.h) +
                                      ", above the cap of " + std::to_string(hbar_cap_));
  add_relation(r);
  const size_t id = slots_.size() - 1;
  for (size_t j = 0; j < id; ++j) {
    Slot& other = slots_[j];
    if (!other.alive) continue;
    if (other.lead.h >= lead.h && is_subword(lead.word, other.lead.word)) {
      unindex_rule(j);
      other.alive = false;
      pending.push_back(full_poly(other));
    }
  }
  return id;
}

template <class K>
void RewriteSystem<K>::ambiguities_with(size_t i, int D, std::vector<Ambiguity>& out) const {
  const Slot& A = slots_[i];
  for (size_t j = 0; j <= i; ++j) {
    const Slot& B = slots_[j];
    if (!B.alive) continue;
    const int H = std::max(A.lead.h, B.lead.h);

    auto overlaps = [&](size_t p, const Slot& P, size_t q, const Slot& Q) {
      const Word& u = P.lead.word;
      const Word& v = Q.lead.word;
      const size_t top = std::min(u.size(), v.size());
      for (size_t k = 1; k < top; ++k) {
        if (static_cast<int>(u.size() + v.size() - k) > D) continue;
        if (!std::equal(u.end() - static_cast<long>(k), u.end(), v.begin())) continue;
        out.push_back({p, q, {}, Word(v.begin() + static_cast<long>(k), v.end()),
                       Word(u.begin(), u.end() - static_cast<long>(k)), {}, H - P.lead.h, H - Q.lead.h});
      }
    };
    // Q.lead inside P.lead.
    auto inclusions = [&](size_t p, const Slot& P, size_t q, const Slot& Q) {
      const Word& u = P.lead.word;
      const Word& v = Q.lead.word;
      if (v.size() > u.size() || static_cast<int>(u.size()) > D) return;
      for (size_t pos = 0; pos + v.size() <= u.size(); ++pos) {
        if (!std::equal(v.begin(), v.end(), u.begin() + static_cast<long>(pos))) continue;
        out.push_back({p, q, {}, {}, Word(u.begin(), u.begin() + static_cast<long>(pos)),
                       Word(u.begin() + static_cast<long>(pos + v.size()), u.end()), H - P.lead.h,
                       H - Q.lead.h});
      }
    };

    overlaps(i, A, j, B);
    if (i != j) {
      overlaps(j, B, i, A);
      inclusions(i, A, j, B);
      if (A.lead.word != B.lead.word) inclusions(j, B, i, A);
    }
    // With h central, two leads that both carry h interact even when their
    // words sit apart: h^H u w v can be rewritten at u or at v.
    if (central_h_ && A.lead.h > 0 && B.lead.h > 0) {
      const Word& u = A.lead.word;
      const Word& v = B.lead.word;
      const int room = D - static_cast<int>(u.size() + v.size());
      if (room < 0) continue;
      for (const Word& w : words_up_to(n_, room)) {
        out.push_back({i, j, {}, join(w, v, {}), join(u, w, {}), {}, H - A.lead.h, H - B.lead.h});
        if (i != j)
          out.push_back({j, i, {}, join(w, u, {}), join(v, w, {}), {}, H - B.lead.h, H - A.lead.h});
      }
    }
  }
}

template <class K>
typename RewriteSystem<K>::Poly RewriteSystem<K>::s_polynomial(const Ambiguity& a) const {
  Poly out;
  auto add_product = [&](const Slot& s, const Word& l, const Word& m, int e, int sign) {
    add_to<K>(out, {join(l, s.lead.word, m), s.lead.h + e}, K(sign));
    for (const auto& [tm, tc] : s.tail) add_to<K>(out, {join(l, tm.word, m), tm.h + e}, tc * K(-sign));
  };
  add_product(slots_[a.r1], a.l1, a.m1, a.e1, 1);
  add_product(slots_[a.r2], a.l2, a.m2, a.e2, -1);
  return out;
}

template <class K>
void RewriteSystem<K>::complete(int D) {
  if (D < 2) throw Error(Errc::OutOfRange, "completion needs a degree bound of at least 2");
  degree_bound_ = D;

  std::vector<Poly> pending;
  for (const auto& s : slots_)
    if (s.alive) pending.push_back(full_poly(s));
  slots_.clear();
  by_lead_.clear();
  lead_lengths_.clear();

  std::map<int, std::deque<Ambiguity>> queue;
  auto degree_of = [&](const Ambiguity& a) {
    return static_cast<int>(a.l1.size() + slots_[a.r1].lead.word.size() + a.m1.size());
  };
  auto drain = [&] {
    // FIFO over pending polynomials; new rules feed the ambiguity queue.
    for (size_t t = 0; t < pending.size(); ++t) {
      Poly q = std::move(pending[t]);
      auto id = insert(q, pending);
      if (!id) continue;
      std::vector<Ambiguity> found;
      ambiguities_with(*id, D, found);
      for (auto& a : found) queue[degree_of(a)].push_back(std::move(a));
    }
    pending.clear();
  };

  while (true) {
    drain();
    if (!queue.empty()) {
      auto level = queue.begin();
      Ambiguity a = std::move(level->second.front());
      level->second.pop_front();
      if (level->second.empty()) queue.erase(level);
      if (!slots_[a.r1].alive || !slots_[a.r2].alive) continue;
      pending.push_back(s_polynomial(a));
      continue;
    }
    for (auto& s : slots_)
      if (s.alive) s.tail = reduce(s.tail);
    // Final sweep over every ambiguity of the live rules.
    for (size_t i = 0; i < slots_.size(); ++i) {
      if (!slots_[i].alive) continue;
      std::vector<Ambiguity> found;
      ambiguities_with(i, D, found);
      for (const auto& a : found) {
        Poly r = reduce(s_polynomial(a));
        if (!r.empty()) pending.push_back(std::move(r));
      }
    }
    if (pending.empty()) break;
  }
}

template <class K>
bool RewriteSystem<K>::confluent() const {
  if (degree_bound_ < 0) return false;
  size_t longest = 0;
  for (const auto& s : slots_) {
    if (!s.alive) continue;
    if (central_h_ && s.lead.h > 0) return false;
    longest = std::max(longest, s.lead.word.size());
  }
  return longest == 0 || static_cast<int>(2 * longest - 1) <= degree_bound_;
}

template <class K>
std::vector<long long> RewriteSystem<K>::count_normal_words(int K_max) const {
  std::vector<long long> counts(static_cast<size_t>(std::max(K_max, 0)) + 1, 0);
  Word w;
  Word probe;
  auto ends_in_lead = [&]() {
    for (const auto& [len, count] : lead_lengths_) {
      if (len > w.size()) break;
      probe.assign(w.end() - static_cast<long>(len), w.end());
      auto it = by_lead_.find(probe);
      if (it == by_lead_.end()) continue;
      for (size_t id : it->second)
        if (slots_[id].lead.h == 0) return true;
    }
    return false;
  };
  if (ends_in_lead()) return counts;  // a unit lead kills every word
  auto dfs = [&](auto&& self) -> void {
    ++counts[w.size()];
    if (static_cast<int>(w.size()) == K_max) return;
    for (int letter = 1; letter <= n_; ++letter) {
      w.push_back(letter);
      if (!ends_in_lead()) self(self);
      w.pop_back();
    }
  };
  dfs(dfs);
  return counts;
}

template <class K>
std::vector<Word> RewriteSystem<K>::normal_words(int k) const {
  std::vector<Word> out;
  if (k < 0) return out;
  auto unit = by_lead_.find(Word{});
  if (unit != by_lead_.end())
    for (size_t id : unit->second)
      if (slots_[id].lead.h == 0) return out;
  std::vector<Word> frontier{Word{}};
  for (int len = 1; len <= k; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (int letter = 1; letter <= n_; ++letter) {
        Word x = w;
        x.push_back(letter);
        bool bad = false;
        for (const auto& [l, count] : lead_lengths_) {
          if (l > x.size()) break;
          auto it = by_lead_.find(Word(x.end() - static_cast<long>(l), x.end()));
          if (it == by_lead_.end()) continue;
          for (size_t id : it->second)
            if (slots_[id].lead.h == 0) bad = true;
        }
        if (!bad) next.push_back(std::move(x));
      }
    frontier = std::move(next);
  }
  return frontier;
}

template class RewriteSystem<Rational>;
template class RewriteSystem<HRat>;

// ------------------------------------------------------------------ builders

std::string FieldChoice::label() const {
  switch (kind) {
    case Kind::At: return "h=" + to_string(a);
    case Kind::Generic: return "Q(h)";
    case Kind::Ring: return "Q[h]";
  }
  return "?";
}

RewriteSystem<Rational>::Poly to_poly_at(const NCPoly<HPoly>& p, const Rational& a) {
  RewriteSystem<Rational>::Poly out;
  for (const auto& [w, c] : p.terms()) add_to<Rational>(out, {w, 0}, c.eval(a));
  return out;
}

RewriteSystem<HRat>::Poly to_poly_generic(const NCPoly<HPoly>& p) {
  RewriteSystem<HRat>::Poly out;
  for (const auto& [w, c] : p.terms()) add_to<HRat>(out, {w, 0}, HRat(c));
  return out;
}

RewriteSystem<Rational>::Poly to_poly_ring(const NCPoly<HPoly>& p) {
  RewriteSystem<Rational>::Poly out;
  for (const auto& [w, c] : p.terms())
    for (int k = 0; k <= c.degree(); ++k) add_to<Rational>(out, {w, k}, c.coeff(k));
  return out;
}

NCPoly<Rational> from_poly_at(int n, const RewriteSystem<Rational>::Poly& p) {
  NCPoly<Rational> out(n);
  for (const auto& [m, c] : p) out.add_term(m.word, c);
  return out;
}

NCPoly<HRat> from_poly_generic(int n, const RewriteSystem<HRat>::Poly& p) {
  NCPoly<HRat> out(n);
  for (const auto& [m, c] : p) out.add_term(m.word, c);
  return out;
}

NCPoly<HPoly> from_poly_ring(int n, const RewriteSystem<Rational>::Poly& p) {
  NCPoly<HPoly> out(n);
  for (const auto& [m, c] : p) out.add_term(m.word, HPoly::monomial(c, m.h));
  return out;
}

namespace {

NCPoly<HPoly> relation(const Presentation& p, int i, int j) {
  const int n = p.n();
  return commutator(NCPoly<HPoly>::generator(n, i), NCPoly<HPoly>::generator(n, j)) - p.phi(i, j);
}

[[noreturn]] void vanishing_relation(int i, int j, const std::string& where) {
  throw Error(Errc::BadSpecialization, "relation (" + std::to_string(i) + "," + std::to_string(j) +
                                           ") vanishes identically " + where);
}

template <class K, class Convert>
RewriteSystem<K> build_rules(const Presentation& p, bool central_h, Convert convert, const std::string& where) {
  RewriteSystem<K> sys(p.n(), central_h);
  for (int i = 1; i <= p.n(); ++i)
    for (int j = i + 1; j <= p.n(); ++j) {
      auto poly = convert(relation(p, i, j));
      if (poly.empty()) vanishing_relation(i, j, where);
      sys.add_relation(poly);
    }
  return sys;
}

}  // namespace

RewriteSystem<Rational> build_rules_at(const Presentation& p, const Rational& a) {
  return build_rules<Rational>(
      p, false, [&](const NCPoly<HPoly>& r) { return to_poly_at(r, a); }, "at h=" + to_string(a));
}

RewriteSystem<HRat> build_rules_generic(const Presentation& p) {
  return build_rules<HRat>(p, false, to_poly_generic, "over Q(h)");
}

RewriteSystem<Rational> build_rules_ring(const Presentation& p) {
  return build_rules<Rational>(p, true, to_poly_ring, "over Q[h]");
}

std::vector<Rational> excluded_specializations(const RewriteSystem<HRat>& sys) {
  std::set<Rational> roots;
  for (const HRat& c : sys.normalizers()) {
    for (const auto& r : rational_roots(c.num())) roots.insert(r);
    for (const auto& r : rational_roots(c.den())) roots.insert(r);
  }
  return {roots.begin(), roots.end()};
}

// ------------------------------------------------------------------- reports

const char* verdict_name(DegreeVerdict v) {
  switch (v) {
    case DegreeVerdict::Match: return "Match";
    case DegreeVerdict::Defect: return "Defect";
    case DegreeVerdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

DegreeVerdict HilbertReport::overall() const {
  bool unknown = false;
  for (auto v : verdicts) {
    if (v == DegreeVerdict::Defect) return DegreeVerdict::Defect;
    if (v == DegreeVerdict::Unknown) unknown = true;
  }
  return unknown ? DegreeVerdict::Unknown : DegreeVerdict::Match;
}

int HilbertReport::first_defect() const {
  for (size_t k = 0; k < verdicts.size(); ++k)
    if (verdicts[k] == DegreeVerdict::Defect) return static_cast<int>(k);
  return -1;
}

long long symmetric_dimension(int n, int k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n + k - 1), static_cast<unsigned long>(k));
  return out.get_si();
}

HilbertReport hilbert(const Presentation& p, const FieldChoice& field, int K) {
  if (K < 1) throw Error(Errc::OutOfRange, "Hilbert degree must be at least 1");
  if (!p.filtration_ok())
    throw Error(Errc::FiltrationUnbounded, "some phi_ij has x-degree above 2; the comparison is disabled");
  HilbertReport report;
  report.n = p.n();
  report.max_degree = K;
  report.degree_bound = K + 1;
  report.field = field;

  auto fill = [&](const auto& sys) {
    report.complete_through = sys.complete_through();
    report.confluent = sys.confluent();
    report.rule_count = sys.rule_count();
    report.dims = sys.count_normal_words(K);
  };
  switch (field.kind) {
    case FieldChoice::Kind::At: {
      auto sys = build_rules_at(p, field.a);
      sys.complete(K + 1);
      fill(sys);
      break;
    }
    case FieldChoice::Kind::Generic: {
      auto sys = build_rules_generic(p);
      sys.complete(K + 1);
      fill(sys);
      report.excluded = excluded_specializations(sys);
      break;
    }
    case FieldChoice::Kind::Ring:
      throw Error(Errc::PathMismatch, "Hilbert functions are computed at a point or over Q(h)");
  }
  for (int k = 0; k <= K; ++k) {
    const long long expected = symmetric_dimension(p.n(), k);
    report.expected.push_back(expected);
    const long long dim = report.dims[static_cast<size_t>(k)];
    if (k > report.complete_through) {
      report.verdicts.push_back(DegreeVerdict::Unknown);
      report.excess.push_back(0);
    } else if (dim == expected) {
      report.verdicts.push_back(DegreeVerdict::Match);
      report.excess.push_back(0);
    } else {
      report.verdicts.push_back(DegreeVerdict::Defect);
      report.excess.push_back(dim - expected);
    }
  }
  return report;
}

namespace {

void check_member_degree(const NCPoly<HPoly>& q, int D) {
  if (D < 2) throw Error(Errc::OutOfRange, "completion needs a degree bound of at least 2");
  if (!q.is_zero() && q.deg_x() > D - 1)
    throw Error(Errc::OutOfRange, "x-degree " + std::to_string(q.deg_x()) + " exceeds the certified range 0.." +
                                      std::to_string(D - 1));
}

}  // namespace

MemberReport member(const Presentation& p, const NCPoly<HPoly>& q, int D, const FieldChoice& field) {
  check_member_degree(q, D);
  MemberReport report;
  report.degree_bound = D;
  report.complete_through = D - 1;
  report.field = field;
  switch (field.kind) {
    case FieldChoice::Kind::At: {
      auto sys = build_rules_at(p, field.a);
      sys.complete(D);
      auto r = sys.reduce(to_poly_at(q, field.a));
      report.member = r.empty();
      report.normal_form = to_string(from_poly_at(p.n(), r));
      break;
    }
    case FieldChoice::Kind::Generic: {
      auto sys = build_rules_generic(p);
      sys.complete(D);
      auto r = sys.reduce(to_poly_generic(q));
      report.member = r.empty();
      report.normal_form = to_string(from_poly_generic(p.n(), r));
      break;
    }
    case FieldChoice::Kind::Ring: {
      auto sys = build_rules_ring(p);
      sys.complete(D);
      auto r = sys.reduce(to_poly_ring(q));
      report.member = r.empty();
      report.normal_form = to_string(from_poly_ring(p.n(), r));
      break;
    }
  }
  return report;
}

TorsionReport torsion_check(const Presentation& p, const NCPoly<HPoly>& T, const HPoly& factor, int D) {
  if (T.is_zero()) throw Error(Errc::Undefined, "the torsion candidate must be nonzero");
  if (factor.is_zero()) throw Error(Errc::Undefined, "the scalar factor must be nonzero");
  check_member_degree(T, D);
  TorsionReport report;
  report.element = T;
  report.factor = factor;
  report.degree_bound = D;
  report.complete_through = D - 1;

  auto sys = build_rules_ring(p);
  sys.complete(D);
  auto t_nf = sys.reduce(to_poly_ring(T));
  auto ft_nf = sys.reduce(to_poly_ring(T.scaled(factor)));
  report.element_member = t_nf.empty();
  report.product_member = ft_nf.empty();
  report.element_normal_form = from_poly_ring(p.n(), t_nf);
  report.product_normal_form = from_poly_ring(p.n(), ft_nf);
  report.witness = report.product_member && !report.element_member;
  return report;
}

}  // namespace pbw
