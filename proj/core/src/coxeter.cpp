#include "hhl/coxeter.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <sstream>

#include "hhl/errors.hpp"

namespace hhl {
namespace {

void require_rank(int n) {
  if (n < 0 || n > kMaxRank) {
    throw RankError("rank " + std::to_string(n) + " outside 0.." + std::to_string(kMaxRank));
  }
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

// Parses "[a,b,c]" into integers; "[]" is allowed.
std::vector<int> parse_int_list(std::string_view text) {
  std::string body = trim(text);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
    throw ConfigError("expected a bracketed list, got '" + std::string(text) + "'");
  }
  body = trim(std::string_view(body).substr(1, body.size() - 2));
  std::vector<int> out;
  if (body.empty()) return out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::string t = trim(item);
    char* end = nullptr;
    long v = std::strtol(t.c_str(), &end, 10);
    if (t.empty() || *end != '\0') throw ConfigError("bad list entry '" + t + "'");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::string format_int_list(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + "]";
}

template <class Pick>
CoxWord strip_right_descents(SignedPermutation g, Pick pick) {
  std::vector<GeneratorSymbol> reversed;
  const int n = g.rank();
  std::vector<GeneratorSymbol> found;
  while (true) {
    found.clear();
    if (n >= 1 && g.has_right_descent(GeneratorSymbol::u())) found.push_back(GeneratorSymbol::u());
    for (int i = 1; i < n; ++i) {
      if (g.has_right_descent(GeneratorSymbol::s(i))) found.push_back(GeneratorSymbol::s(i));
    }
    if (found.empty()) break;
    GeneratorSymbol s = pick(found);
    reversed.push_back(s);
    g = g.times_generator(s);
  }
  std::reverse(reversed.begin(), reversed.end());
  CoxWord w;
  w.letters = std::move(reversed);
  w.rank = n;
  return w;
}

}  // namespace

// -- GeneratorSymbol ---------------------------------------------------------

GeneratorSymbol GeneratorSymbol::s(int i) {
  if (i < 1 || i >= kMaxRank) throw RankError("generator index s" + std::to_string(i) + " out of range");
  return GeneratorSymbol(i);
}

GeneratorSymbol GeneratorSymbol::parse(std::string_view token) {
  std::string t = trim(token);
  if (t == "u") return u();
  if (t.size() >= 2 && t[0] == 's' &&
      std::all_of(t.begin() + 1, t.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return s(std::stoi(t.substr(1)));
  }
  throw ConfigError("unknown generator token '" + t + "'");
}

std::string GeneratorSymbol::to_string() const {
  return is_u() ? std::string("u") : "s" + std::to_string(index_);
}

bool GeneratorSymbol::valid_for(int n, CoxeterType type) const {
  if (is_u()) return type == CoxeterType::B && n >= 1;
  return index_ >= 1 && index_ <= n - 1;
}

int coxeter_order(GeneratorSymbol s, GeneratorSymbol t) {
  if (s == t) return 1;
  if (s.is_u() || t.is_u()) {
    int other = s.is_u() ? t.index() : s.index();
    return other == 1 ? 4 : 2;
  }
  return std::abs(s.index() - t.index()) == 1 ? 3 : 2;
}

// -- SignedPermutation -------------------------------------------------------

SignedPermutation SignedPermutation::identity(int n) {
  require_rank(n);
  SignedPermutation g;
  g.rank_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) g.images_[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(i + 1);
  return g;
}

SignedPermutation SignedPermutation::from_images(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  require_rank(n);
  std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
  SignedPermutation g;
  g.rank_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) {
    int a = std::abs(images[static_cast<std::size_t>(i)]);
    if (a < 1 || a > n || seen[static_cast<std::size_t>(a)]) {
      throw RankError("images do not form a signed permutation of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(a)] = true;
    g.images_[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(images[static_cast<std::size_t>(i)]);
  }
  return g;
}

SignedPermutation SignedPermutation::generator(GeneratorSymbol s, int n) {
  if (!s.valid_for(n)) throw RankError(s.to_string() + " is not a generator of B_" + std::to_string(n));
  return identity(n).times_generator(s);
}

SignedPermutation SignedPermutation::parse(std::string_view text) {
  auto v = parse_int_list(text);
  return from_images(v);
}

std::vector<int> SignedPermutation::images() const {
  return std::vector<int>(images_.begin(), images_.begin() + rank_);
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& h) const {
  if (rank_ != h.rank_) throw ContextError("composing signed permutations of different rank");
  SignedPermutation r;
  r.rank_ = rank_;
  for (int i = 1; i <= rank_; ++i) r.images_[static_cast<std::size_t>(i - 1)] = static_cast<std::int8_t>((*this)(h(i)));
  return r;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation r;
  r.rank_ = rank_;
  for (int i = 1; i <= rank_; ++i) {
    int v = images_[static_cast<std::size_t>(i - 1)];
    // g(i) = v  =>  g^{-1}(|v|) = sign(v) * i
    r.images_[static_cast<std::size_t>(std::abs(v) - 1)] = static_cast<std::int8_t>(v > 0 ? i : -i);
  }
  return r;
}

SignedPermutation SignedPermutation::times_generator(GeneratorSymbol s) const {
  SignedPermutation r = *this;
  if (s.is_u()) {
    r.images_[0] = static_cast<std::int8_t>(-r.images_[0]);
  } else {
    std::swap(r.images_[static_cast<std::size_t>(s.index() - 1)], r.images_[static_cast<std::size_t>(s.index())]);
  }
  return r;
}

SignedPermutation SignedPermutation::generator_times(GeneratorSymbol s) const {
  SignedPermutation r = *this;
  for (int k = 0; k < rank_; ++k) {
    auto& v = r.images_[static_cast<std::size_t>(k)];
    int a = std::abs(v);
    if (s.is_u()) {
      if (a == 1) v = static_cast<std::int8_t>(-v);
    } else if (a == s.index()) {
      v = static_cast<std::int8_t>(v > 0 ? a + 1 : -(a + 1));
    } else if (a == s.index() + 1) {
      v = static_cast<std::int8_t>(v > 0 ? a - 1 : -(a - 1));
    }
  }
  return r;
}

bool SignedPermutation::has_right_descent(GeneratorSymbol s) const {
  if (s.is_u()) return images_[0] < 0;
  return images_[static_cast<std::size_t>(s.index() - 1)] > images_[static_cast<std::size_t>(s.index())];
}

bool SignedPermutation::has_left_descent(GeneratorSymbol s) const {
  // Right descent of the inverse, read off without building it.
  int pos_plus = 0, pos_next = 0;  // signed positions holding +-i and +-(i+1)
  const int i = s.is_u() ? 1 : s.index();
  for (int k = 0; k < rank_; ++k) {
    int v = images_[static_cast<std::size_t>(k)];
    if (std::abs(v) == i) pos_plus = v > 0 ? k + 1 : -(k + 1);
    if (!s.is_u() && std::abs(v) == i + 1) pos_next = v > 0 ? k + 1 : -(k + 1);
  }
  if (s.is_u()) return pos_plus < 0;
  return pos_plus > pos_next;
}

bool SignedPermutation::is_identity() const {
  for (int i = 0; i < rank_; ++i) {
    if (images_[static_cast<std::size_t>(i)] != i + 1) return false;
  }
  return true;
}

bool SignedPermutation::is_unsigned() const {
  for (int i = 0; i < rank_; ++i) {
    if (images_[static_cast<std::size_t>(i)] < 0) return false;
  }
  return true;
}

SignedPermutation SignedPermutation::embedded(int m) const {
  require_rank(m);
  if (m < rank_) throw RankError("cannot embed B_" + std::to_string(rank_) + " into B_" + std::to_string(m));
  SignedPermutation r = *this;
  for (int i = rank_; i < m; ++i) r.images_[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(i + 1);
  r.rank_ = static_cast<std::uint8_t>(m);
  return r;
}

std::string SignedPermutation::to_string() const { return format_int_list(images()); }

std::strong_ordering SignedPermutation::operator<=>(const SignedPermutation& o) const {
  if (auto c = rank_ <=> o.rank_; c != 0) return c;
  for (int i = 0; i < rank_; ++i) {
    if (auto c = images_[static_cast<std::size_t>(i)] <=> o.images_[static_cast<std::size_t>(i)]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t SignedPermutation::hash() const {
  std::uint64_t h = 1469598103934665603ull ^ rank_;
  for (int i = 0; i < rank_; ++i) {
    h ^= static_cast<std::uint8_t>(images_[static_cast<std::size_t>(i)]);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

bool canonical_less(const SignedPermutation& a, const SignedPermutation& b) {
  int la = length(a), lb = length(b);
  if (la != lb) return la < lb;
  return a < b;
}

void sort_canonical(std::vector<SignedPermutation>& elements) {
  std::vector<std::pair<int, SignedPermutation>> keyed;
  keyed.reserve(elements.size());
  for (auto& g : elements) keyed.emplace_back(length(g), g);
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 0; i < keyed.size(); ++i) elements[i] = keyed[i].second;
}

// -- CoxWord -----------------------------------------------------------------

CoxWord CoxWord::make(std::vector<GeneratorSymbol> letters, int n) {
  require_rank(n);
  for (auto s : letters) {
    if (!s.valid_for(n)) throw RankError(s.to_string() + " is not a generator of B_" + std::to_string(n));
  }
  CoxWord w;
  w.letters = std::move(letters);
  w.rank = n;
  return w;
}

CoxWord CoxWord::parse(std::string_view text, int n) {
  std::stringstream ss{std::string(text)};
  std::vector<GeneratorSymbol> letters;
  std::string tok;
  while (ss >> tok) letters.push_back(GeneratorSymbol::parse(tok));
  return make(std::move(letters), n);
}

std::string CoxWord::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) s += ' ';
    s += letters[i].to_string();
  }
  return s;
}

// -- ParabolicSpec -----------------------------------------------------------

ParabolicSpec ParabolicSpec::from_generators(std::span<const GeneratorSymbol> gens) {
  std::uint32_t mask = 0;
  for (auto s : gens) mask |= 1u << s.index();
  return ParabolicSpec(mask);
}

ParabolicSpec ParabolicSpec::type_b(int k) {
  if (k <= 0) return {};
  std::uint32_t mask = 1u;
  for (int i = 1; i < k; ++i) mask |= 1u << i;
  return ParabolicSpec(mask);
}

ParabolicSpec ParabolicSpec::type_a(int k) { return shifted_a(k, 0); }

ParabolicSpec ParabolicSpec::shifted_a(int k, int shift) {
  std::uint32_t mask = 0;
  for (int i = 1; i < k; ++i) mask |= 1u << (i + shift);
  return ParabolicSpec(mask);
}

ParabolicSpec ParabolicSpec::full(int n, CoxeterType type) {
  return type == CoxeterType::B ? type_b(n) : type_a(n);
}

std::vector<GeneratorSymbol> ParabolicSpec::generators() const {
  std::vector<GeneratorSymbol> out;
  if (mask_ & 1u) out.push_back(GeneratorSymbol::u());
  for (int i = 1; i < kMaxRank; ++i) {
    if ((mask_ >> i) & 1u) out.push_back(GeneratorSymbol::s(i));
  }
  return out;
}

bool ParabolicSpec::valid_for(int n, CoxeterType type) const {
  return (mask_ & ~full(n, type).mask_) == 0;
}

std::string ParabolicSpec::to_string() const {
  std::string s = "{";
  auto gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ',';
    s += gens[i].to_string();
  }
  return s + "}";
}

// -- MVector -----------------------------------------------------------------

MVector::MVector(std::vector<int> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 1 || (i > 0 && entries_[i] >= entries_[i - 1])) {
      throw RankError("MVector must be strictly decreasing and positive: " + to_string());
    }
  }
}

MVector MVector::parse(std::string_view text) { return MVector(parse_int_list(text)); }

std::vector<MVector> MVector::all_up_to(int n) {
  std::vector<MVector> out;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    std::vector<int> e;
    for (int k = n; k >= 1; --k) {
      if ((subset >> (k - 1)) & 1u) e.push_back(k);
    }
    out.emplace_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const MVector& a, const MVector& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.entries() > b.entries();
  });
  return out;
}

MVector MVector::shifted(int k) const {
  std::vector<int> e = entries_;
  for (int& x : e) x += k;
  return MVector(std::move(e));
}

std::string MVector::to_string() const { return format_int_list(entries_); }

// -- operations --------------------------------------------------------------

SignedPermutation word_to_perm(const CoxWord& w) {
  SignedPermutation g = SignedPermutation::identity(w.rank);
  for (auto s : w.letters) {
    if (!s.valid_for(w.rank)) throw RankError(s.to_string() + " is not a generator of B_" + std::to_string(w.rank));
    g = g.times_generator(s);
  }
  return g;
}

int length(const SignedPermutation& g0) {
  SignedPermutation g = g0;
  const int n = g.rank();
  int l = 0;
  while (true) {
    bool stripped = false;
    if (n >= 1 && g.has_right_descent(GeneratorSymbol::u())) {
      g = g.times_generator(GeneratorSymbol::u());
      stripped = true;
    } else {
      for (int i = 1; i < n; ++i) {
        auto s = GeneratorSymbol::s(i);
        if (g.has_right_descent(s)) {
          g = g.times_generator(s);
          stripped = true;
          break;
        }
      }
    }
    if (!stripped) return l;
    ++l;
  }
}

CoxWord reduced_word(const SignedPermutation& g) {
  return strip_right_descents(g, [](const std::vector<GeneratorSymbol>& f) { return f.front(); });
}

CoxWord random_reduced_word(const SignedPermutation& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return strip_right_descents(g, [&rng](const std::vector<GeneratorSymbol>& f) {
    std::uniform_int_distribution<std::size_t> pick(0, f.size() - 1);
    return f[pick(rng)];
  });
}

bool is_reduced(const CoxWord& w) {
  return static_cast<int>(w.size()) == length(word_to_perm(w));
}

std::vector<GeneratorSymbol> descents(const SignedPermutation& g, Side side, CoxeterType type) {
  std::vector<GeneratorSymbol> out;
  for (auto s : ParabolicSpec::full(g.rank(), type).generators()) {
    bool d = side == Side::Right ? g.has_right_descent(s) : g.has_left_descent(s);
    if (d) out.push_back(s);
  }
  return out;
}

bool is_J_reduced(const SignedPermutation& g, const ParabolicSpec& J, Side side) {
  for (auto s : J.generators()) {
    if (side == Side::Left ? g.has_left_descent(s) : g.has_right_descent(s)) return false;
  }
  return true;
}

bool is_JK_reduced(const SignedPermutation& g, const ParabolicSpec& J, const ParabolicSpec& K) {
  return is_J_reduced(g, J, Side::Left) && is_J_reduced(g, K, Side::Right);
}

bool in_parabolic(const SignedPermutation& g, const ParabolicSpec& J) {
  return right_coset_reduce(g, J).first.is_identity();
}

std::vector<SignedPermutation> all_elements(int n, CoxeterType type) {
  require_rank(n);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  const std::uint32_t sign_count = type == CoxeterType::B ? (1u << n) : 1u;
  std::vector<SignedPermutation> out;
  std::vector<int> images(static_cast<std::size_t>(n));
  do {
    for (std::uint32_t signs = 0; signs < sign_count; ++signs) {
      for (int i = 0; i < n; ++i) {
        int v = perm[static_cast<std::size_t>(i)];
        images[static_cast<std::size_t>(i)] = ((signs >> i) & 1u) ? -v : v;
      }
      out.push_back(SignedPermutation::from_images(images));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  sort_canonical(out);
  return out;
}

std::vector<SignedPermutation> coset_reps(const ParabolicSpec& J, CosetKind kind,
                                          std::span<const SignedPermutation> group) {
  const Side side = kind == CosetKind::ParabolicOnLeft ? Side::Left : Side::Right;
  std::vector<SignedPermutation> out;
  for (const auto& g : group) {
    if (is_J_reduced(g, J, side)) out.push_back(g);
  }
  return out;
}

std::vector<SignedPermutation> coset_reps(const ParabolicSpec& J, CosetKind kind, int n,
                                          CoxeterType type) {
  if (!J.valid_for(n, type)) throw RankError("parabolic " + J.to_string() + " not inside the rank-" + std::to_string(n) + " group");
  auto group = all_elements(n, type);
  return coset_reps(J, kind, group);
}

std::vector<SignedPermutation> double_coset_reps(const ParabolicSpec& J, const ParabolicSpec& K,
                                                 int n, CoxeterType type) {
  if (!J.valid_for(n, type) || !K.valid_for(n, type)) throw RankError("parabolic subset outside the group");
  std::vector<SignedPermutation> out;
  for (const auto& g : all_elements(n, type)) {
    if (is_JK_reduced(g, J, K)) out.push_back(g);
  }
  return out;
}

std::vector<MackeyBlock> mackey_partition(const ParabolicSpec& J, const ParabolicSpec& K, int n,
                                          CoxeterType type) {
  auto group = all_elements(n, type);
  std::vector<SignedPermutation> parabolic_k;
  for (const auto& g : group) {
    if (in_parabolic(g, K)) parabolic_k.push_back(g);
  }
  std::vector<MackeyBlock> blocks;
  for (const auto& d : double_coset_reps(J, K, n, type)) {
    // J^d cap K, as a set of generators.
    std::vector<GeneratorSymbol> meet;
    for (auto t : K.generators()) {
      for (auto s : J.generators()) {
        if (conjugate(SignedPermutation::generator(s, n), d) == SignedPermutation::generator(t, n)) {
          meet.push_back(t);
          break;
        }
      }
    }
    auto L = ParabolicSpec::from_generators(meet);
    MackeyBlock b{d, {}};
    for (const auto& x : parabolic_k) {
      if (is_J_reduced(x, L, Side::Left)) b.block.push_back(d * x);
    }
    sort_canonical(b.block);
    blocks.push_back(std::move(b));
  }
  return blocks;
}

std::pair<SignedPermutation, int> right_coset_reduce(SignedPermutation g, const ParabolicSpec& J) {
  int stripped = 0;
  const auto gens = J.generators();
  bool again = true;
  while (again) {
    again = false;
    for (auto s : gens) {
      if (g.has_right_descent(s)) {
        g = g.times_generator(s);
        ++stripped;
        again = true;
        break;
      }
    }
  }
  return {g, stripped};
}

CosetFactorization coset_factorize(const SignedPermutation& g, const ParabolicSpec& J,
                                   CosetKind kind) {
  const int n = g.rank();
  SignedPermutation x = g;
  SignedPermutation z = SignedPermutation::identity(n);
  const auto gens = J.generators();
  bool again = true;
  while (again) {
    again = false;
    for (auto s : gens) {
      if (kind == CosetKind::ParabolicOnLeft && x.has_left_descent(s)) {
        // g = z * x and x = s * x'  =>  g = (z * s) * x'
        x = x.generator_times(s);
        z = z.times_generator(s);
        again = true;
        break;
      }
      if (kind == CosetKind::ParabolicOnRight && x.has_right_descent(s)) {
        // g = x * z and x = x' * s  =>  g = x' * (s * z)
        x = x.times_generator(s);
        z = z.generator_times(s);
        again = true;
        break;
      }
    }
  }
  return {z, x};
}

SignedPermutation conjugate(const SignedPermutation& g, const SignedPermutation& d) {
  return d.inverse() * g * d;
}

SignedPermutation u_m_elem(int m, int n) {
  if (m < 1 || m > n) throw RankError("u_" + std::to_string(m) + " not defined in B_" + std::to_string(n));
  SignedPermutation g = SignedPermutation::identity(n).times_generator(GeneratorSymbol::u());
  for (int i = 1; i < m; ++i) g = g.times_generator(GeneratorSymbol::s(i));
  return g;
}

SignedPermutation v_of(const MVector& m, int n) {
  SignedPermutation g = SignedPermutation::identity(n);
  for (int e : m.entries()) g = g * u_m_elem(e, n);
  return g;
}

SignedPermutation s_ab(int a, int b, int n) {
  if (b < 1 || a < b || a > n) {
    throw RankError("s_{" + std::to_string(a) + "," + std::to_string(b) + "} not defined in rank " + std::to_string(n));
  }
  SignedPermutation g = SignedPermutation::identity(n);
  for (int i = a - 1; i >= b; --i) g = g.times_generator(GeneratorSymbol::s(i));
  return g;
}

std::vector<int> tail_word(const SignedPermutation& g, int r) {
  const int n = g.rank();
  if (r < -1 || r > n - 1) throw RankError("degree " + std::to_string(r) + " outside -1..n-1");
  std::vector<int> w;
  for (int k = n - r; k <= n; ++k) w.push_back(g(k));
  return w;
}

MVector negative_profile(const SignedPermutation& g, int r) {
  auto w = tail_word(g, r);
  std::vector<int> pos;
  for (int k = static_cast<int>(w.size()); k >= 1; --k) {
    if (w[static_cast<std::size_t>(k - 1)] < 0) pos.push_back(k);
  }
  return MVector(std::move(pos));
}

}  // namespace hhl
