#include "stonet/workspace.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>

namespace stonet {

namespace {

  struct Token {
    std::string text;
    std::size_t line = 0;
    std::size_t column = 0;
    bool eol = false;  // statement separator: newline or ';'
  };

  bool is_punct(char c) { return c == '{' || c == '}' || c == ';' || c == '=' || c == ':'; }

  std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;
    auto sep = [&](std::size_t l, std::size_t c) {
      if (out.empty() || !out.back().eol) {
        out.push_back(Token{";", l, c, true});
      }
    };
    while (i < text.size()) {
      char const c = text[i];
      if (c == '\n') {
        sep(line, col);
        ++line;
        col = 1;
        ++i;
      } else if (c == '#') {
        while (i < text.size() && text[i] != '\n') {
          ++i;
        }
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++i;
        ++col;
      } else if (c == ';') {
        sep(line, col);
        ++i;
        ++col;
      } else if (is_punct(c)) {
        out.push_back(Token{std::string(1, c), line, col, false});
        ++i;
        ++col;
      } else {
        std::size_t const start = i;
        std::size_t const start_col = col;
        while (i < text.size() && !is_punct(text[i]) && text[i] != '#'
               && std::string_view(" \t\r\n").find(text[i]) == std::string_view::npos) {
          ++i;
          ++col;
        }
        out.push_back(Token{std::string(text.substr(start, i - start)), line, start_col, false});
      }
    }
    sep(line, col);
    return out;
  }

  class Parser {
   public:
    Parser(std::string_view text, std::string file) : toks_(tokenize(text)), file_(std::move(file)) {}

    Workspace run() {
      while (pos_ < toks_.size()) {
        if (peek().eol) {
          ++pos_;
          continue;
        }
        Token const kw = next();
        if (kw.text == "quantale") {
          quantale(kw);
        } else if (kw.text == "theory") {
          theory(kw);
        } else if (kw.text == "tcategory") {
          tcategory(kw);
        } else if (kw.text == "tfunctor") {
          tfunctor(kw);
        } else if (kw.text == "frame") {
          frame(kw);
        } else {
          fail(kw, "unknown declaration '" + kw.text + "'");
        }
        end_statement();
      }
      return std::move(ws_);
    }

   private:
    std::vector<Token> toks_;
    std::string file_;
    std::size_t pos_ = 0;
    Workspace ws_;
    std::map<std::pair<std::string, std::string>, TheoryPtr> theory_cache_;
    std::vector<std::string> rejected_names_;

    [[noreturn]] void fail(const Token& t, const std::string& message) const {
      throw ParseError(t.line, t.column, message);
    }

    const Token& peek() const {
      static const Token eof{"<end of input>", 0, 0, true};
      return pos_ < toks_.size() ? toks_[pos_] : eof;
    }

    Token next() {
      if (pos_ >= toks_.size()) {
        Token const& last = toks_.empty() ? peek() : toks_.back();
        fail(last, "unexpected end of input");
      }
      return toks_[pos_++];
    }

    Token word(const char* what) {
      Token t = next();
      if (t.eol || (t.text.size() == 1 && is_punct(t.text[0]))) {
        fail(t, std::string("expected ") + what + ", found '" + t.text + "'");
      }
      return t;
    }

    void expect(std::string_view text) {
      Token const t = next();
      if (t.text != text || t.eol != (text == ";")) {
        fail(t, "expected '" + std::string(text) + "', found '" + t.text + "'");
      }
    }

    bool accept(std::string_view text) {
      if (!peek().eol && peek().text == text) {
        ++pos_;
        return true;
      }
      return false;
    }

    void end_statement() {
      if (pos_ < toks_.size() && !peek().eol) {
        fail(peek(), "expected end of statement, found '" + peek().text + "'");
      }
    }

    Provenance where(const Token& t) const { return Provenance{file_, t.line}; }

    Token fresh_name() {
      Token t = word("a name");
      if (ws_.defines(t.text)) {
        fail(t, "'" + t.text + "' is already defined");
      }
      return t;
    }

    std::size_t number(const Token& t) {
      std::size_t n = 0;
      auto const* end = t.text.data() + t.text.size();
      auto [p, ec] = std::from_chars(t.text.data(), end, n);
      if (ec != std::errc{} || p != end) {
        fail(t, "expected a number, found '" + t.text + "'");
      }
      return n;
    }

    bool is_rejected(std::string_view name) const {
      return std::find(rejected_names_.begin(), rejected_names_.end(), name)
             != rejected_names_.end();
    }

    void reject(const std::string& entity, const std::string& law, const std::string& witness,
                const Token& t) {
      ws_.rejected.push_back(Rejection{entity, law, witness, where(t)});
      rejected_names_.push_back(entity);
    }

    void reject(const std::string& entity, const ValidationError& e, const Token& t) {
      for (const auto& v : e.violations()) {
        ws_.rejected.push_back(Rejection{entity, v.law, v.witness, where(t)});
      }
      rejected_names_.push_back(entity);
    }

    /// Reads a block `{ stmt; ... }` and calls `fn(first_token)` per statement.
    template <typename Fn>
    void block(Fn&& fn) {
      expect("{");
      while (true) {
        while (peek().eol && pos_ < toks_.size()) {
          ++pos_;
        }
        if (accept("}")) {
          return;
        }
        Token const head = word("a block entry or '}'");
        fn(head);
        if (peek().text == "}" && !peek().eol) {
          continue;
        }
        if (!peek().eol) {
          fail(peek(), "expected end of entry, found '" + peek().text + "'");
        }
      }
    }

    /// Returns nullptr after recording a rejection if `name` is unusable.
    const QuantalePtr* quantale_ref(const Token& t, const std::string& user) {
      if (is_rejected(t.text)) {
        reject(user, "dependency", "quantale " + t.text + " was rejected", t);
        return nullptr;
      }
      auto const* q = ws_.quantale(t.text);
      if (q == nullptr) {
        fail(t, "undefined quantale '" + t.text + "'");
      }
      return q;
    }

    Elem element(const Quantale& q, const Token& t) {
      auto e = q.find(t.text);
      if (!e) {
        fail(t, "'" + t.text + "' is not an element of the quantale");
      }
      return *e;
    }

    void quantale(const Token& kw) {
      Token const name = fresh_name();
      expect("=");
      Token const kind = word("builtin, product or table");
      if (kind.text == "builtin") {
        Token const b = word("a builtin quantale");
        std::string base = b.text;
        std::size_t n = 0;
        if (auto open = base.find('('); open != std::string::npos) {
          if (base.back() != ')') {
            fail(b, "malformed builtin '" + base + "'");
          }
          n = number(Token{base.substr(open + 1, base.size() - open - 2), b.line, b.column, false});
          base = base.substr(0, open);
        } else if (base != "two" && !peek().eol) {
          n = number(word("a size"));
        }
        if (base != "two" && base != "goedel-chain" && base != "lawvere-chain") {
          fail(b, "unknown builtin quantale '" + base + "'");
        }
        try {
          ws_.quantales.push_back({name.text, make_builtin(base, n), where(kw)});
        } catch (const ValidationError& e) {
          reject(name.text, e, kw);
        } catch (const Error& e) {
          fail(b, e.what());
        }
      } else if (kind.text == "product") {
        Token const a = word("a quantale");
        Token const b = word("a quantale");
        auto const* qa = quantale_ref(a, name.text);
        auto const* qb = qa ? quantale_ref(b, name.text) : nullptr;
        if (qa && qb) {
          ws_.quantales.push_back({name.text, make_product(**qa, **qb), where(kw)});
        }
      } else if (kind.text == "table") {
        table(kw, name);
      } else {
        fail(kind, "expected builtin, product or table, found '" + kind.text + "'");
      }
    }

    void table(const Token& kw, const Token& name) {
      QuantaleTable t;
      std::vector<std::pair<Token, Token>> leq;
      std::vector<std::array<Token, 3>> tensor;
      std::optional<Token> unit;
      std::optional<Token> fallback;
      auto index = [&](const Token& tok) {
        auto it = std::find(t.names.begin(), t.names.end(), tok.text);
        if (it == t.names.end()) {
          fail(tok, "'" + tok.text + "' is not a declared element");
        }
        return static_cast<std::size_t>(it - t.names.begin());
      };
      block([&](const Token& head) {
        if (head.text == "elements") {
          while (!peek().eol && peek().text != "}") {
            Token const e = word("an element");
            if (std::find(t.names.begin(), t.names.end(), e.text) != t.names.end()) {
              fail(e, "duplicate element '" + e.text + "'");
            }
            t.names.push_back(e.text);
          }
        } else if (head.text == "leq") {
          Token const a = word("an element");
          Token const b = word("an element");
          leq.emplace_back(a, b);
        } else if (head.text == "unit") {
          unit = word("an element");
        } else if (head.text == "default") {
          expect("=");
          fallback = word("an element");
        } else if (head.text == "tensor") {
          Token const a = word("an element");
          Token const b = word("an element");
          expect("=");
          tensor.push_back({a, b, word("an element")});
        } else {
          fail(head, "unknown table entry '" + head.text + "'");
        }
      });
      std::size_t const n = t.names.size();
      if (n == 0) {
        fail(name, "quantale table without elements");
      }
      if (n > 255) {
        fail(name, "quantale table with more than 255 elements");
      }
      if (!unit) {
        fail(name, "quantale table without unit");
      }
      t.unit = index(*unit);
      t.leq.assign(n * n, false);
      for (std::size_t i = 0; i < n; ++i) {
        t.leq[i * n + i] = true;
      }
      for (const auto& [a, b] : leq) {
        t.leq[index(a) * n + index(b)] = true;
      }
      std::vector<std::optional<std::size_t>> cells(n * n);
      std::vector<bool> explicit_cell(n * n, false);
      for (const auto& [a, b, c] : tensor) {
        std::size_t const i = index(a);
        std::size_t const j = index(b);
        std::size_t const v = index(c);
        cells[i * n + j] = v;
        explicit_cell[i * n + j] = true;
        if (!explicit_cell[j * n + i]) {
          cells[j * n + i] = v;
        }
      }
      t.tensor.assign(n * n, 0);
      for (std::size_t c = 0; c < n * n; ++c) {
        if (cells[c]) {
          t.tensor[c] = *cells[c];
        } else if (fallback) {
          t.tensor[c] = index(*fallback);
        } else {
          reject(name.text, "totality",
                 "tensor " + t.names[c / n] + " " + t.names[c % n] + " is missing", kw);
          return;
        }
      }
      try {
        ws_.quantales.push_back({name.text,
                                 std::make_shared<const Quantale>(
                                     Quantale::from_table(std::move(t), name.text)),
                                 where(kw)});
      } catch (const ValidationError& e) {
        reject(name.text, e, kw);
      }
    }

    TheoryPtr make_theory(const Token& kind, const Token& qname, const QuantalePtr& q) {
      if (kind.text == "word") {
        fail(kind, "the word theory is not supported: T1 != 1");
      }
      if (kind.text != "identity" && kind.text != "finite-ultrafilter") {
        fail(kind, "unknown theory '" + kind.text + "'");
      }
      auto key = std::make_pair(kind.text, qname.text);
      auto it = theory_cache_.find(key);
      if (it != theory_cache_.end()) {
        return it->second;
      }
      TheoryPtr th = kind.text == "identity" ? identity_theory(q) : finite_ultrafilter_theory(q);
      theory_cache_.emplace(key, th);
      return th;
    }

    void theory(const Token& kw) {
      Token const name = fresh_name();
      expect("=");
      Token const kind = word("a theory");
      expect("over");
      Token const qn = word("a quantale");
      auto const* q = quantale_ref(qn, name.text);
      if (q == nullptr) {
        return;
      }
      try {
        ws_.theories.push_back({name.text, make_theory(kind, qn, *q), where(kw)});
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        reject(name.text, "theory", e.what(), kw);
      }
    }

    void tcategory(const Token& kw) {
      Token const name = fresh_name();
      std::optional<Token> qn;
      if (accept("over")) {
        qn = word("a quantale");
      }
      expect("theory");
      Token const tn = word("a theory");
      TheoryPtr th;
      bool dead = false;
      if (ws_.theory(tn.text) != nullptr || is_rejected(tn.text)) {
        if (is_rejected(tn.text)) {
          reject(name.text, "dependency", "theory " + tn.text + " was rejected", tn);
          dead = true;
        } else {
          th = *ws_.theory(tn.text);
          if (qn) {
            auto const* q = ws_.quantale(qn->text);
            if (q != nullptr && q->get() != &th->quantale()) {
              fail(*qn, "theory '" + tn.text + "' is over a different quantale");
            }
          }
        }
      } else {
        if (!qn) {
          fail(tn, "'over QUANTALE' is required with a builtin theory name");
        }
        auto const* q = quantale_ref(*qn, name.text);
        if (q == nullptr) {
          dead = true;
        } else {
          th = make_theory(tn, *qn, *q);
        }
      }

      std::vector<std::string> objects;
      struct Cell {
        Token fx, x, v;
      };
      std::vector<Cell> cells;
      std::vector<std::pair<Token, std::vector<Token>>> rows;
      std::optional<Token> fallback;
      block([&](const Token& head) {
        if (head.text == "objects") {
          while (!peek().eol && peek().text != "}") {
            Token const o = word("an object");
            if (std::find(objects.begin(), objects.end(), o.text) != objects.end()) {
              fail(o, "duplicate object '" + o.text + "'");
            }
            objects.push_back(o.text);
          }
        } else if (head.text == "hom") {
          Token const fx = word("an element of TX");
          Token const x = word("an object");
          expect("=");
          cells.push_back(Cell{fx, x, word("a value")});
        } else if (head.text == "row") {
          Token const fx = word("an element of TX");
          expect("=");
          std::vector<Token> vs;
          while (!peek().eol && peek().text != "}") {
            vs.push_back(word("a value"));
          }
          rows.emplace_back(fx, std::move(vs));
        } else if (head.text == "default") {
          expect("=");
          fallback = word("a value");
        } else {
          fail(head, "unknown tcategory entry '" + head.text + "'");
        }
      });
      if (dead) {
        return;
      }
      const Quantale& q = th->quantale();
      std::size_t const n = objects.size();
      std::size_t const tn_size = th->t(n);
      VMatrix probe(th->quantale_ptr(), n, tn_size);
      TCategory const shape = TCategory::trusted(th, probe, objects);
      auto object = [&](const Token& t) {
        auto it = std::find(objects.begin(), objects.end(), t.text);
        if (it == objects.end()) {
          fail(t, "'" + t.text + "' is not an object of " + name.text);
        }
        return static_cast<std::size_t>(it - objects.begin());
      };
      FinMap const e = th->unit(n);
      auto telement = [&](const Token& t) {
        for (std::size_t fx = 0; fx < tn_size; ++fx) {
          if (shape.tname(fx) == t.text) {
            return fx;
          }
        }
        auto it = std::find(objects.begin(), objects.end(), t.text);
        if (it == objects.end()) {
          fail(t, "'" + t.text + "' is not an element of T" + name.text);
        }
        return e(static_cast<std::size_t>(it - objects.begin()));
      };
      std::vector<std::optional<Elem>> entries(tn_size * n);
      for (const auto& [fx, vs] : rows) {
        if (vs.size() != n) {
          fail(fx, "row has " + std::to_string(vs.size()) + " entries, expected "
                       + std::to_string(n));
        }
        std::size_t const r = telement(fx);
        for (std::size_t x = 0; x < n; ++x) {
          entries[r * n + x] = element(q, vs[x]);
        }
      }
      for (const auto& c : cells) {
        entries[telement(c.fx) * n + object(c.x)] = element(q, c.v);
      }
      std::optional<Elem> const dflt = fallback ? std::optional(element(q, *fallback)) : std::nullopt;
      for (std::size_t fx = 0; fx < tn_size; ++fx) {
        for (std::size_t x = 0; x < n; ++x) {
          auto v = entries[fx * n + x] ? entries[fx * n + x] : dflt;
          if (!v) {
            reject(name.text, "totality",
                   "hom " + shape.tname(fx) + " " + objects[x] + " is missing", kw);
            return;
          }
          probe.set(fx, x, *v);
        }
      }
      try {
        ws_.tcategories.push_back({name.text, TCategory(th, std::move(probe), objects), where(kw)});
      } catch (const ValidationError& err) {
        reject(name.text, err, kw);
      }
    }

    void tfunctor(const Token& kw) {
      Token const name = fresh_name();
      expect(":");
      Token const src = word("a tcategory");
      expect("->");
      Token const dst = word("a tcategory");
      std::vector<std::pair<Token, Token>> arrows;
      block([&](const Token& head) {
        expect("->");
        arrows.emplace_back(head, word("an object"));
      });
      for (const Token* t : {&src, &dst}) {
        if (is_rejected(t->text)) {
          reject(name.text, "dependency", "tcategory " + t->text + " was rejected", *t);
          return;
        }
        if (ws_.tcategory(t->text) == nullptr) {
          fail(*t, "undefined tcategory '" + t->text + "'");
        }
      }
      const TCategory& x = *ws_.tcategory(src.text);
      const TCategory& y = *ws_.tcategory(dst.text);
      if (x.theory_ptr() != y.theory_ptr()) {
        fail(dst, "'" + src.text + "' and '" + dst.text + "' use different theories");
      }
      auto index = [&](const TCategory& c, const Token& t) {
        const auto& ns = c.names();
        auto it = std::find(ns.begin(), ns.end(), t.text);
        if (it == ns.end()) {
          fail(t, "'" + t.text + "' is not an object");
        }
        return static_cast<std::size_t>(it - ns.begin());
      };
      std::vector<std::optional<std::size_t>> img(x.size());
      for (const auto& [a, b] : arrows) {
        img[index(x, a)] = index(y, b);
      }
      FinMap f{y.size(), std::vector<std::size_t>(x.size())};
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (!img[i]) {
          reject(name.text, "totality", "no image for " + x.name(i), kw);
          return;
        }
        f.images[i] = *img[i];
      }
      if (Verdict const v = is_tfunctor(x, y, f); !v) {
        reject(name.text, "t-functor", v.witness, kw);
        return;
      }
      ws_.tfunctors.push_back({name.text, FunctorDecl{src.text, dst.text, std::move(f)}, where(kw)});
    }

    void frame(const Token& kw) {
      Token const name = fresh_name();
      expect("=");
      expect("omega");
      Token const of = word("a tcategory");
      FrameDecl d{of.text, 2};
      if (accept("max-index")) {
        d.max_index = number(word("a number"));
      }
      if (is_rejected(of.text)) {
        reject(name.text, "dependency", "tcategory " + of.text + " was rejected", of);
        return;
      }
      if (ws_.tcategory(of.text) == nullptr) {
        fail(of, "undefined tcategory '" + of.text + "'");
      }
      ws_.frames.push_back({name.text, d, where(kw)});
    }
  };

  template <typename T>
  const T* lookup(const std::vector<Named<T>>& v, std::string_view name) {
    for (const auto& n : v) {
      if (n.name == name) {
        return &n.value;
      }
    }
    return nullptr;
  }

}  // namespace

const QuantalePtr* Workspace::quantale(std::string_view name) const {
  return lookup(quantales, name);
}

const TheoryPtr* Workspace::theory(std::string_view name) const {
  return lookup(theories, name);
}

const TCategory* Workspace::tcategory(std::string_view name) const {
  return lookup(tcategories, name);
}

bool Workspace::defines(std::string_view name) const {
  return quantale(name) != nullptr || theory(name) != nullptr || tcategory(name) != nullptr
         || lookup(tfunctors, name) != nullptr || lookup(frames, name) != nullptr
         || std::any_of(rejected.begin(), rejected.end(),
                        [&](const Rejection& r) { return r.entity == name; });
}

Workspace parse(std::string_view text, const std::string& file) {
  return Parser(text, file).run();
}

}  // namespace stonet
