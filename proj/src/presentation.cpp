#include "ydforge/presentation.hpp"

#include <algorithm>
#include <sstream>

#include "ydforge/errors.hpp"

namespace ydforge {

void wordpoly_add(WordPoly& acc, const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = acc.find(w);
  if (it == acc.end()) {
    acc.emplace(w, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) acc.erase(it);
}

void wordpoly_add(WordPoly& acc, const WordPoly& p, const Scalar& c) {
  for (const auto& [w, d] : p) wordpoly_add(acc, w, c * d);
}

namespace {

bool matches_at(const Word& w, const Word& pat, std::size_t pos) {
  if (pos + pat.size() > w.size()) return false;
  for (std::size_t k = 0; k < pat.size(); ++k)
    if (w[pos + k] != pat[k]) return false;
  return true;
}

Word splice(const Word& w, std::size_t pos, std::size_t len, const Word& repl) {
  Word out;
  out.reserve(w.size() - len + repl.size());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<long>(pos));
  out.insert(out.end(), repl.begin(), repl.end());
  out.insert(out.end(), w.begin() + static_cast<long>(pos + len), w.end());
  return out;
}

}  // namespace

RewriteEngine::RewriteEngine(Presentation pres) : pres_(std::move(pres)) {
  const int n = static_cast<int>(pres_.generators.size());
  if (n == 0) throw InvalidPresentation("presentation has no generators");
  for (const auto& g : pres_.generators) {
    if (g.name.empty()) throw InvalidPresentation("generator with empty name");
    if (g.degree < 1)
      throw InvalidPresentation("generator " + g.name + " has degree < 1");
  }
  if (pres_.rewrite_order.empty()) {
    for (int i = 0; i < n; ++i) pres_.rewrite_order.push_back(i);
  }
  if (static_cast<int>(pres_.rewrite_order.size()) != n)
    throw InvalidPresentation("rewrite order must list every generator once");
  rank_.assign(static_cast<std::size_t>(n), -1);
  for (int p = 0; p < n; ++p) {
    const int g = pres_.rewrite_order[static_cast<std::size_t>(p)];
    if (g < 0 || g >= n || rank_[static_cast<std::size_t>(g)] != -1)
      throw InvalidPresentation("rewrite order is not a permutation of the generators");
    rank_[static_cast<std::size_t>(g)] = n - 1 - p;  // earlier entries are larger letters
  }
  if (pres_.degree_cap && *pres_.degree_cap < 0)
    throw InvalidPresentation("degree cap must be nonnegative");
  validate_rules();
  check_confluence();
  enumerate_basis();
}

int RewriteEngine::word_degree(const Word& w) const {
  int d = 0;
  for (int g : w) d += pres_.generators[static_cast<std::size_t>(g)].degree;
  return d;
}

bool RewriteEngine::rewrite_less(const Word& a, const Word& b) const {
  const int da = word_degree(a), db = word_degree(b);
  if (da != db) return da < db;
  const std::size_t m = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < m; ++k) {
    const int ra = rank_[static_cast<std::size_t>(a[k])];
    const int rb = rank_[static_cast<std::size_t>(b[k])];
    if (ra != rb) return ra < rb;
  }
  return a.size() < b.size();
}

bool RewriteEngine::listing_less(const Word& a, const Word& b) const {
  const int da = word_degree(a), db = word_degree(b);
  if (da != db) return da < db;
  const std::size_t m = std::min(a.size(), b.size());
  for (std::size_t k = 1; k <= m; ++k) {
    const int ga = a[a.size() - k];
    const int gb = b[b.size() - k];
    if (ga != gb) return ga < gb;
  }
  return a.size() < b.size();
}

void RewriteEngine::validate_rules() const {
  const int n = static_cast<int>(pres_.generators.size());
  for (std::size_t r = 0; r < pres_.rules.size(); ++r) {
    const auto& rule = pres_.rules[r];
    std::ostringstream who;
    who << "rule #" << r;
    if (rule.lhs.empty())
      throw InvalidPresentation(who.str() + " has an empty left side");
    for (int g : rule.lhs)
      if (g < 0 || g >= n)
        throw InvalidPresentation(who.str() + " uses an unknown generator index");
    const int dl = word_degree(rule.lhs);
    for (const auto& [w, c] : rule.rhs) {
      for (int g : w)
        if (g < 0 || g >= n)
          throw InvalidPresentation(who.str() + " uses an unknown generator index");
      if (c.is_zero())
        throw InvalidPresentation(who.str() + " carries a zero coefficient");
      if (word_degree(w) > dl)
        throw InvalidPresentation(who.str() + " raises the degree");
      if (!rewrite_less(w, rule.lhs))
        throw InvalidPresentation(who.str() +
                                  " does not decrease the rewrite order");
    }
  }
}

std::optional<WordPoly> RewriteEngine::reduce_once(const Word& w) const {
  for (std::size_t pos = 0; pos < w.size(); ++pos)
    for (std::size_t r = 0; r < pres_.rules.size(); ++r)
      if (matches_at(w, pres_.rules[r].lhs, pos))
        return reduce_with_rule(w, r, pos);
  return std::nullopt;
}

WordPoly RewriteEngine::reduce_with_rule(const Word& w, std::size_t rule,
                                         std::size_t pos) const {
  const auto& rl = pres_.rules[rule];
  WordPoly out;
  for (const auto& [t, c] : rl.rhs)
    wordpoly_add(out, splice(w, pos, rl.lhs.size(), t), c);
  return out;
}

WordPoly RewriteEngine::normal_form(const Word& w) const {
  if (pres_.degree_cap && word_degree(w) > *pres_.degree_cap)
    throw DegreeCapExceeded("word " + label(w) + " exceeds the degree cap");
  auto it = nf_cache_.find(w);
  if (it != nf_cache_.end()) return it->second;
  WordPoly out;
  if (auto step = reduce_once(w)) {
    for (const auto& [u, c] : *step) wordpoly_add(out, normal_form(u), c);
  } else {
    out.emplace(w, Scalar(1));
  }
  nf_cache_.emplace(w, out);
  return out;
}

WordPoly RewriteEngine::normal_form(const WordPoly& p) const {
  WordPoly out;
  for (const auto& [w, c] : p) wordpoly_add(out, normal_form(w), c);
  return out;
}

void RewriteEngine::check_confluence() const {
  const auto resolve = [&](const Word& w, std::size_t r1, std::size_t p1,
                           std::size_t r2, std::size_t p2) {
    const WordPoly a = normal_form(reduce_with_rule(w, r1, p1));
    const WordPoly b = normal_form(reduce_with_rule(w, r2, p2));
    if (a != b)
      throw NonConfluent("rules disagree on the ambiguity " + label(w));
  };
  for (std::size_t i = 0; i < pres_.rules.size(); ++i) {
    const Word& A = pres_.rules[i].lhs;
    for (std::size_t j = 0; j < pres_.rules.size(); ++j) {
      const Word& B = pres_.rules[j].lhs;
      // Proper overlaps: a suffix of A is a prefix of B.
      const std::size_t omax = std::min(A.size(), B.size()) - 1;
      for (std::size_t o = 1; o <= omax; ++o) {
        bool match = true;
        for (std::size_t k = 0; k < o && match; ++k)
          match = A[A.size() - o + k] == B[k];
        if (!match) continue;
        Word w = A;
        w.insert(w.end(), B.begin() + static_cast<long>(o), B.end());
        if (pres_.degree_cap && word_degree(w) > *pres_.degree_cap) continue;
        resolve(w, i, 0, j, A.size() - o);
      }
      // Inclusions: B occurs inside A.
      if (B.size() > A.size()) continue;
      for (std::size_t p = 0; p + B.size() <= A.size(); ++p) {
        if (i == j && p == 0 && A.size() == B.size()) continue;
        if (!matches_at(A, B, p)) continue;
        if (pres_.degree_cap && word_degree(A) > *pres_.degree_cap) continue;
        resolve(A, i, 0, j, p);
      }
    }
  }
}

void RewriteEngine::enumerate_basis() {
  const int n = static_cast<int>(pres_.generators.size());
  std::vector<Word> frontier{Word{}};
  basis_.clear();
  basis_.push_back(Word{});
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const auto& w : frontier) {
      for (int g = 0; g < n; ++g) {
        Word w2 = w;
        w2.push_back(g);
        if (pres_.degree_cap && word_degree(w2) > *pres_.degree_cap) continue;
        // w is irreducible, so any new match must end at the last letter.
        bool reducible = false;
        for (const auto& rule : pres_.rules) {
          const std::size_t len = rule.lhs.size();
          if (len > w2.size()) continue;
          if (matches_at(w2, rule.lhs, w2.size() - len)) {
            reducible = true;
            break;
          }
        }
        if (reducible) continue;
        basis_.push_back(w2);
        if (basis_.size() > pres_.basis_guard)
          throw NonTerminating("irreducible words exceed the guard of " +
                               std::to_string(pres_.basis_guard));
        next.push_back(std::move(w2));
      }
    }
    frontier = std::move(next);
  }
  std::sort(basis_.begin(), basis_.end(),
            [&](const Word& a, const Word& b) { return listing_less(a, b); });
  index_.clear();
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

std::size_t RewriteEngine::index_of(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end())
    throw InvalidPresentation("word " + label(w) + " is not a basis word");
  return it->second;
}

std::string RewriteEngine::label(const Word& w) const {
  if (w.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    os << pres_.generators[static_cast<std::size_t>(w[i])].name;
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

SVec RewriteEngine::to_svec(const WordPoly& p) const {
  SVec out;
  for (const auto& [w, c] : p) svec_add(out, index_of(w), c);
  return out;
}

HopfData RewriteEngine::structure_constants() const {
  const std::size_t n = pres_.generators.size();
  if (pres_.comul_gen.size() != n)
    throw MissingGeneratorData("coproduct data is not given on every generator");
  if (pres_.counit_gen.size() != n)
    throw MissingGeneratorData("counit data is not given on every generator");
  const bool with_antipode = !pres_.antipode_gen.empty();
  if (with_antipode && pres_.antipode_gen.size() != n)
    throw MissingGeneratorData("antipode data is not given on every generator");

  HopfData H;
  H.dim = basis_.size();
  H.params = pres_.params;
  H.degree_cap = pres_.degree_cap;
  for (const auto& w : basis_) {
    H.basis.push_back(label(w));
    H.degrees.push_back(word_degree(w));
  }

  H.mul.assign(H.dim, std::vector<std::optional<SVec>>(H.dim));
  for (std::size_t i = 0; i < H.dim; ++i) {
    for (std::size_t j = 0; j < H.dim; ++j) {
      Word w = basis_[i];
      w.insert(w.end(), basis_[j].begin(), basis_[j].end());
      if (pres_.degree_cap && word_degree(w) > *pres_.degree_cap) continue;
      H.mul[i][j] = to_svec(normal_form(w));
    }
  }
  H.unit = svec_unit(index_of(Word{}));

  H.comul.assign(H.dim, SVec{});
  H.counit.assign(H.dim, Scalar(0));
  for (std::size_t i = 0; i < H.dim; ++i) {
    std::map<std::pair<Word, Word>, Scalar> tens{{{Word{}, Word{}}, Scalar(1)}};
    Scalar eps(1);
    for (int g : basis_[i]) {
      std::map<std::pair<Word, Word>, Scalar> next;
      for (const auto& [uv, c] : tens) {
        for (const auto& term : pres_.comul_gen[static_cast<std::size_t>(g)]) {
          Word u = uv.first;
          u.insert(u.end(), term.left.begin(), term.left.end());
          Word v = uv.second;
          v.insert(v.end(), term.right.begin(), term.right.end());
          const Scalar cc = c * term.coeff;
          for (const auto& [nu, cu] : normal_form(u))
            for (const auto& [nv, cv] : normal_form(v)) {
              auto key = std::make_pair(nu, nv);
              auto it = next.find(key);
              if (it == next.end()) {
                Scalar val = cc * cu * cv;
                if (!val.is_zero()) next.emplace(std::move(key), std::move(val));
              } else {
                it->second = it->second + cc * cu * cv;
                if (it->second.is_zero()) next.erase(it);
              }
            }
        }
      }
      tens = std::move(next);
      eps = eps * pres_.counit_gen[static_cast<std::size_t>(g)];
    }
    for (const auto& [uv, c] : tens)
      svec_add(H.comul[i], index_of(uv.first) * H.dim + index_of(uv.second), c);
    H.counit[i] = eps;
  }

  if (with_antipode) {
    std::vector<SVec> cols(H.dim);
    for (std::size_t i = 0; i < H.dim; ++i) {
      WordPoly acc{{Word{}, Scalar(1)}};
      const Word& w = basis_[i];
      for (std::size_t k = w.size(); k-- > 0;) {
        WordPoly next;
        for (const auto& [u, c] : acc)
          for (const auto& [t, d] :
               pres_.antipode_gen[static_cast<std::size_t>(w[k])]) {
            Word ut = u;
            ut.insert(ut.end(), t.begin(), t.end());
            wordpoly_add(next, normal_form(ut), c * d);
          }
        acc = std::move(next);
      }
      cols[i] = to_svec(acc);
    }
    H.antipode = std::move(cols);
  }

  H.validate();
  return H;
}

}  // namespace ydforge
