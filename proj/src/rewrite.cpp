#include "aop/rewrite.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <unordered_map>

#include "aop/error.hpp"

namespace aop {

namespace {

bool cancels(const Alphabet& a, Letter x, Letter y) {
  if (x.gen != y.gen) return false;
  return a.involutive(x.gen) ? true : x.sign == -y.sign;
}

Letter partner(const Alphabet& a, Letter x) { return a.involutive(x.gen) ? x : x.inverse(); }

std::size_t code(Letter l) { return static_cast<std::size_t>(l.gen) * 2 + (l.sign < 0 ? 1 : 0); }

std::string key_of(const std::vector<Letter>& w) {
  std::string key;
  key.reserve(w.size() * 3);
  for (Letter l : w) {
    const std::size_t c = code(l);
    key.push_back(static_cast<char>(c & 0xff));
    key.push_back(static_cast<char>((c >> 8) & 0xff));
    key.push_back(static_cast<char>((c >> 16) & 0xff));
  }
  return key;
}

// Stack-based free reduction; each cancellation is recorded at the position
// it occupies in the word at the moment it happens.
void reduce_in_place(std::vector<Letter>& w, const Alphabet& a, std::vector<RewriteStep>* steps) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    if (!stack.empty() && cancels(a, stack.back(), l)) {
      if (steps) {
        RewriteStep s;
        s.kind = RewriteStep::Kind::Cancel;
        s.pos = static_cast<int>(stack.size()) - 1;
        s.letter = stack.back();
        steps->push_back(s);
      }
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  w = std::move(stack);
}

RewriteStep invert_step(const RewriteStep& s) {
  RewriteStep r = s;
  switch (s.kind) {
    case RewriteStep::Kind::Apply: r.forward = !s.forward; break;
    case RewriteStep::Kind::Cancel: r.kind = RewriteStep::Kind::Insert; break;
    case RewriteStep::Kind::Insert: r.kind = RewriteStep::Kind::Cancel; break;
  }
  return r;
}

void append_inverted(std::vector<RewriteStep>& out, const std::vector<RewriteStep>& steps) {
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) out.push_back(invert_step(*it));
}

// A relation side that may be matched, tagged with its (relation, orientation).
struct Move {
  int relation;
  bool forward;
};

struct RelationIndex {
  std::vector<std::vector<Move>> by_first;  // indexed by letter code
  std::vector<Move> empty_side;             // insertions
};

RelationIndex build_index(const RelationSystem& sys) {
  RelationIndex idx;
  for (int r = 0; r < static_cast<int>(sys.relations.size()); ++r) {
    for (bool fwd : {true, false}) {
      const Word& from = fwd ? sys.relations[static_cast<std::size_t>(r)].lhs
                             : sys.relations[static_cast<std::size_t>(r)].rhs;
      if (from.empty()) {
        idx.empty_side.push_back({r, fwd});
        continue;
      }
      const std::size_t c = code(from.letters.front());
      if (idx.by_first.size() <= c) idx.by_first.resize(c + 1);
      idx.by_first[c].push_back({r, fwd});
    }
  }
  return idx;
}

struct Node {
  std::vector<Letter> word;
  int parent = -1;
  std::vector<RewriteStep> steps;  // parent -> this
};

struct Side {
  std::vector<Node> nodes;
  std::unordered_map<std::string, int> index;
  std::vector<int> frontier;

  std::vector<RewriteStep> path_to(int id) const {
    std::vector<const std::vector<RewriteStep>*> chain;
    for (int cur = id; cur >= 0; cur = nodes[static_cast<std::size_t>(cur)].parent)
      chain.push_back(&nodes[static_cast<std::size_t>(cur)].steps);
    std::vector<RewriteStep> out;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
      out.insert(out.end(), (*it)->begin(), (*it)->end());
    return out;
  }
};

class Search {
 public:
  Search(const RelationSystem& sys, const RelationIndex& idx, std::size_t max_len,
         std::size_t budget)
      : sys_(sys), idx_(idx), alpha_(*sys.alphabet), max_len_(max_len), budget_(budget) {
    if (!alpha_.generators(sys.arity).empty()) {
      for (int g : alpha_.generators(sys.arity)) {
        free_letters_.push_back({g, 1});
        if (!alpha_.involutive(g)) free_letters_.push_back({g, -1});
      }
    }
  }

  // Returns true on meeting; fills path (root_a -> root_b).
  bool run(const std::vector<Letter>& a, const std::vector<Letter>& b, bool grow,
           std::size_t budget, std::vector<RewriteStep>& path) {
    grow_ = grow;
    Side sides[2];
    add_root(sides[0], a);
    add_root(sides[1], b);
    std::size_t used = 2;
    while (!sides[0].frontier.empty() || !sides[1].frontier.empty()) {
      int s = 0;
      if (sides[0].frontier.empty())
        s = 1;
      else if (!sides[1].frontier.empty() && sides[1].frontier.size() < sides[0].frontier.size())
        s = 1;
      Side& me = sides[s];
      Side& other = sides[1 - s];
      std::vector<int> layer;
      layer.swap(me.frontier);
      for (int id : layer) {
        // Copy: expanding may reallocate me.nodes.
        const std::vector<Letter> word = me.nodes[static_cast<std::size_t>(id)].word;
        bool met = false;
        expand(word, [&](std::vector<Letter>&& next, std::vector<RewriteStep>&& steps) {
          if (met) return;
          std::string key = key_of(next);
          if (me.index.count(key)) return;
          if (auto hit = other.index.find(key); hit != other.index.end()) {
            std::vector<RewriteStep> mine = me.path_to(id);
            mine.insert(mine.end(), steps.begin(), steps.end());
            std::vector<RewriteStep> theirs = other.path_to(hit->second);
            if (s == 0) {
              path = std::move(mine);
              append_inverted(path, theirs);
            } else {
              path = std::move(theirs);
              append_inverted(path, mine);
            }
            met = true;
            return;
          }
          const int nid = static_cast<int>(me.nodes.size());
          me.nodes.push_back({std::move(next), id, std::move(steps)});
          me.index.emplace(std::move(key), nid);
          me.frontier.push_back(nid);
          ++used;
        });
        if (met) {
          states_ += used;
          return true;
        }
        if (used >= budget) {
          states_ += used;
          return false;
        }
      }
    }
    states_ += used;
    return false;
  }

  std::size_t states() const { return states_; }
  std::size_t budget() const { return budget_; }

 private:
  void add_root(Side& side, const std::vector<Letter>& w) {
    side.nodes.push_back({w, -1, {}});
    side.index.emplace(key_of(w), 0);
    side.frontier.push_back(0);
  }

  template <class Emit>
  void expand(const std::vector<Letter>& w, Emit&& emit) {
    const std::size_t len = w.size();
    std::vector<Move> candidates;
    for (std::size_t pos = 0; pos <= len; ++pos) {
      candidates.clear();
      if (pos < len) {
        const std::size_t c = code(w[pos]);
        if (c < idx_.by_first.size())
          candidates.insert(candidates.end(), idx_.by_first[c].begin(), idx_.by_first[c].end());
      }
      if (grow_) {
        candidates.insert(candidates.end(), idx_.empty_side.begin(), idx_.empty_side.end());
        std::sort(candidates.begin(), candidates.end(), [](const Move& x, const Move& y) {
          return x.relation != y.relation ? x.relation < y.relation : x.forward > y.forward;
        });
      }
      for (const Move& m : candidates) {
        const Relation& rel = sys_.relations[static_cast<std::size_t>(m.relation)];
        const Word& from = m.forward ? rel.lhs : rel.rhs;
        const Word& to = m.forward ? rel.rhs : rel.lhs;
        if (pos + from.size() > len) continue;
        if (!std::equal(from.letters.begin(), from.letters.end(), w.begin() + static_cast<long>(pos)))
          continue;
        const std::size_t raw = len - from.size() + to.size();
        if (raw > (grow_ ? max_len_ : len)) continue;
        std::vector<Letter> next;
        next.reserve(raw);
        next.insert(next.end(), w.begin(), w.begin() + static_cast<long>(pos));
        next.insert(next.end(), to.letters.begin(), to.letters.end());
        next.insert(next.end(), w.begin() + static_cast<long>(pos + from.size()), w.end());
        std::vector<RewriteStep> steps;
        RewriteStep s;
        s.kind = RewriteStep::Kind::Apply;
        s.relation = m.relation;
        s.forward = m.forward;
        s.pos = static_cast<int>(pos);
        steps.push_back(s);
        reduce_in_place(next, alpha_, &steps);
        emit(std::move(next), std::move(steps));
      }
      if (grow_ && len + 2 <= max_len_) {
        for (Letter x : free_letters_) {
          if (alpha_.involutive(x.gen)) continue;  // covered by the involution relations
          std::vector<Letter> next;
          next.reserve(len + 2);
          next.insert(next.end(), w.begin(), w.begin() + static_cast<long>(pos));
          next.push_back(x);
          next.push_back(partner(alpha_, x));
          next.insert(next.end(), w.begin() + static_cast<long>(pos), w.end());
          RewriteStep s;
          s.kind = RewriteStep::Kind::Insert;
          s.pos = static_cast<int>(pos);
          s.letter = x;
          emit(std::move(next), std::vector<RewriteStep>{s});
        }
      }
    }
  }

  const RelationSystem& sys_;
  const RelationIndex& idx_;
  const Alphabet& alpha_;
  std::size_t max_len_;
  std::size_t budget_;
  bool grow_ = false;
  std::size_t states_ = 0;
  std::vector<Letter> free_letters_;
};

}  // namespace

Word concat(const Word& a, const Word& b) {
  if (a.arity != b.arity) throw InputError("concat: arity mismatch");
  Word out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

Word inverse(const Word& w, const Alphabet& alphabet) {
  Word out{w.arity, {}};
  out.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back(alphabet.involutive(it->gen) ? *it : it->inverse());
  return out;
}

void check_word(const Word& w, const Alphabet& alphabet) {
  for (Letter l : w.letters) {
    if (!alphabet.valid(l.gen, w.arity))
      throw InputError("letter " + alphabet.format(l) + " invalid at arity " +
                       std::to_string(w.arity));
    if (l.sign != 1 && (l.sign != -1 || alphabet.involutive(l.gen)))
      throw InputError("bad sign on letter " + alphabet.format(l));
  }
}

Word free_reduce(const Word& w, const Alphabet& alphabet) {
  Word out = w;
  reduce_in_place(out.letters, alphabet, nullptr);
  return out;
}

EqResult equal(const Word& w1, const Word& w2, const RelationSystem& sys, SearchBounds bounds) {
  if (w1.arity != w2.arity || w1.arity != sys.arity)
    throw InputError("equal: arity mismatch (" + std::to_string(w1.arity) + ", " +
                     std::to_string(w2.arity) + ", system " + std::to_string(sys.arity) + ")");
  const Alphabet& alpha = *sys.alphabet;
  EqResult result;

  std::vector<RewriteStep> pre1, pre2;
  std::vector<Letter> a = w1.letters, b = w2.letters;
  reduce_in_place(a, alpha, &pre1);
  reduce_in_place(b, alpha, &pre2);

  if (a == b) {
    result.verdict = EqResult::Verdict::Equal;
    result.path = std::move(pre1);
    append_inverted(result.path, pre2);
    return result;
  }
  for (const Invariant& inv : sys.invariants) {
    if (inv.eval(w1) != inv.eval(w2)) {
      result.verdict = EqResult::Verdict::Distinct;
      result.invariant = inv.name;
      return result;
    }
  }

  const std::size_t max_len =
      bounds.max_len ? bounds.max_len : std::max(w1.size(), w2.size()) + 6;
  const RelationIndex idx = build_index(sys);
  Search search(sys, idx, max_len, bounds.budget);

  // Length-non-increasing moves first; most equalities of interest are found
  // there. Then the full move set with whatever budget remains.
  std::vector<RewriteStep> middle;
  bool found = search.run(a, b, false, bounds.budget / 2, middle);
  if (!found && search.states() < bounds.budget)
    found = search.run(a, b, true, bounds.budget - search.states(), middle);
  result.states = search.states();
  if (!found) return result;

  result.verdict = EqResult::Verdict::Equal;
  result.path = std::move(pre1);
  result.path.insert(result.path.end(), middle.begin(), middle.end());
  append_inverted(result.path, pre2);
  return result;
}

std::optional<Word> replay(const Word& from, const std::vector<RewriteStep>& path,
                           const RelationSystem& sys, std::string* error) {
  const Alphabet& alpha = *sys.alphabet;
  auto fail = [&](std::size_t i, const std::string& why) -> std::optional<Word> {
    if (error) *error = "step " + std::to_string(i + 1) + ": " + why;
    return std::nullopt;
  };
  std::vector<Letter> w = from.letters;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const RewriteStep& s = path[i];
    if (s.pos < 0 || static_cast<std::size_t>(s.pos) > w.size()) return fail(i, "position out of range");
    const auto pos = static_cast<std::size_t>(s.pos);
    switch (s.kind) {
      case RewriteStep::Kind::Apply: {
        if (s.relation < 0 || static_cast<std::size_t>(s.relation) >= sys.relations.size())
          return fail(i, "unknown relation");
        const Relation& rel = sys.relations[static_cast<std::size_t>(s.relation)];
        const Word& f = s.forward ? rel.lhs : rel.rhs;
        const Word& t = s.forward ? rel.rhs : rel.lhs;
        if (pos + f.size() > w.size() ||
            !std::equal(f.letters.begin(), f.letters.end(), w.begin() + static_cast<long>(pos)))
          return fail(i, "relation side does not match");
        w.erase(w.begin() + static_cast<long>(pos), w.begin() + static_cast<long>(pos + f.size()));
        w.insert(w.begin() + static_cast<long>(pos), t.letters.begin(), t.letters.end());
        break;
      }
      case RewriteStep::Kind::Cancel: {
        if (pos + 2 > w.size() || w[pos] != s.letter || !cancels(alpha, w[pos], w[pos + 1]))
          return fail(i, "no cancellable pair");
        w.erase(w.begin() + static_cast<long>(pos), w.begin() + static_cast<long>(pos + 2));
        break;
      }
      case RewriteStep::Kind::Insert: {
        if (!alpha.valid(s.letter.gen, from.arity)) return fail(i, "invalid inserted letter");
        const Letter pair[2] = {s.letter, partner(alpha, s.letter)};
        w.insert(w.begin() + static_cast<long>(pos), pair, pair + 2);
        break;
      }
    }
  }
  return Word{from.arity, std::move(w)};
}

std::vector<std::pair<std::string, int>> invariant_violations(const RelationSystem& sys) {
  std::vector<std::pair<std::string, int>> out;
  for (const Invariant& inv : sys.invariants)
    for (int r = 0; r < static_cast<int>(sys.relations.size()); ++r) {
      const Relation& rel = sys.relations[static_cast<std::size_t>(r)];
      if (inv.eval(rel.lhs) != inv.eval(rel.rhs)) out.emplace_back(inv.name, r);
    }
  return out;
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out.push_back(' ');
    out += alphabet.format(w.letters[i]);
  }
  return out;
}

Word parse_word(std::string_view text, int arity, const Alphabet& alphabet) {
  Word w{arity, {}};
  std::istringstream is{std::string(text)};
  std::string token;
  while (is >> token) {
    if (token == "e") continue;
    auto l = alphabet.parse(token);
    if (!l) throw InputError("unknown " + alphabet.name() + " letter '" + token + "'");
    w.letters.push_back(*l);
  }
  check_word(w, alphabet);
  return w;
}

Perm word_pi(const Word& w, const Alphabet& alphabet) {
  Perm out = Perm::identity(w.arity);
  for (Letter l : w.letters) {
    const Perm p = alphabet.letter_pi(l.gen, w.arity);
    out = out * (l.sign < 0 ? inverse(p) : p);
  }
  return out;
}

std::string format_step(const RewriteStep& s, const Alphabet& alphabet) {
  std::ostringstream os;
  switch (s.kind) {
    case RewriteStep::Kind::Apply:
      os << "apply " << s.relation << (s.forward ? " fwd" : " bwd") << " @" << s.pos;
      break;
    case RewriteStep::Kind::Cancel: os << "cancel " << alphabet.format(s.letter) << " @" << s.pos; break;
    case RewriteStep::Kind::Insert: os << "insert " << alphabet.format(s.letter) << " @" << s.pos; break;
  }
  return os.str();
}

std::string format_path(const std::vector<RewriteStep>& path, const Alphabet& alphabet) {
  std::string out;
  for (const RewriteStep& s : path) {
    out += format_step(s, alphabet);
    out.push_back('\n');
  }
  return out;
}

std::vector<RewriteStep> parse_path(std::string_view text, const Alphabet& alphabet) {
  std::vector<RewriteStep> out;
  std::istringstream lines{std::string(text)};
  std::string line;
  auto parse_pos = [](const std::string& tok) {
    int v = -1;
    if (tok.size() < 2 || tok[0] != '@') throw InputError("expected @<pos>, got '" + tok + "'");
    auto [p, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) throw InputError("bad position '" + tok + "'");
    return v;
  };
  while (std::getline(lines, line)) {
    std::istringstream is(line);
    std::string kind;
    if (!(is >> kind)) continue;
    RewriteStep s;
    if (kind == "apply") {
      std::string rel, dir, pos;
      if (!(is >> rel >> dir >> pos)) throw InputError("bad apply step: " + line);
      s.kind = RewriteStep::Kind::Apply;
      auto [p, ec] = std::from_chars(rel.data(), rel.data() + rel.size(), s.relation);
      if (ec != std::errc() || p != rel.data() + rel.size()) throw InputError("bad relation index: " + line);
      if (dir != "fwd" && dir != "bwd") throw InputError("bad orientation: " + line);
      s.forward = dir == "fwd";
      s.pos = parse_pos(pos);
    } else if (kind == "cancel" || kind == "insert") {
      std::string letter, pos;
      if (!(is >> letter >> pos)) throw InputError("bad step: " + line);
      auto l = alphabet.parse(letter);
      if (!l) throw InputError("bad letter in step: " + line);
      s.kind = kind == "cancel" ? RewriteStep::Kind::Cancel : RewriteStep::Kind::Insert;
      s.letter = *l;
      s.pos = parse_pos(pos);
    } else {
      throw InputError("unknown step kind '" + kind + "'");
    }
    out.push_back(s);
  }
  return out;
}

std::string to_string(EqResult::Verdict v) {
  switch (v) {
    case EqResult::Verdict::Equal: return "Equal";
    case EqResult::Verdict::Distinct: return "Distinct";
    case EqResult::Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

}  // namespace aop
