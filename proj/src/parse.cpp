#include "dehn/parse.hpp"

#include "dehn/error.hpp"

#include <cctype>
#include <string>

namespace dehn {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }
  std::size_t pos() const { return pos_; }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Integer integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected integer");
    }
    Integer v(std::string(text_.substr(digits, pos_ - digits)));
    return text_[start] == '-' ? Integer(-v) : v;
  }

  std::vector<Integer> integer_list() {
    std::vector<Integer> out;
    expect("(");
    if (accept(")")) return out;
    do out.push_back(integer());
    while (accept(","));
    expect(")");
    return out;
  }

  Slope slope() {
    skip_space();
    std::size_t start = pos_;
    if (accept("inf")) return Slope::infinity();
    Integer p = integer();
    Integer q = 1;
    if (accept("/")) q = integer();
    if (p == 0 && q == 0) {
      pos_ = start;
      fail("0/0 is not a slope");
    }
    return Slope(p, q);
  }

  std::string label() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '>') ++pos_;
    if (pos_ == text_.size()) fail("unterminated <label>");
    std::string out(text_.substr(start, pos_ - start));
    ++pos_;
    return out;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t where) const { throw ParseError(what, where); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Manifold manifold_sum(Cursor& in);

template <class F>
Manifold semantic(Cursor& in, std::size_t start, F&& build) {
  try {
    return build();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    in.fail_at(std::string("semantic error: ") + e.what(), start);
  }
}

Manifold manifold_term(Cursor& in) {
  in.skip_space();
  const std::size_t start = in.pos();
  if (in.accept("(")) {
    Manifold m = manifold_sum(in);
    in.expect(")");
    return m;
  }
  if (in.accept("<")) return opaque_tag(in.label());
  if (in.accept("U[")) {
    std::vector<Manifold> pieces;
    do pieces.push_back(manifold_sum(in));
    while (in.accept(","));
    in.expect("]");
    return semantic(in, start, [&] { return torus_union(std::move(pieces)); });
  }
  // Longer keywords first so that "S1xS2" is not read as "S" + garbage.
  if (in.accept("S1xS2")) return s1xs2();
  if (in.accept("S1xD2") || in.accept("ST")) return solid_torus();
  if (in.accept("S3")) return s3();
  if (in.accept("T2xI")) return t2xi();
  if (in.accept("ZxS1")) return zxs1();
  if (in.accept("SFS(")) {
    Integer e = in.integer();
    std::vector<Fiber> fibers;
    if (in.accept(";")) {
      do {
        std::size_t at = in.pos();
        Slope b = in.slope();
        if (b.is_infinite()) in.fail_at("fiber invariant cannot be inf", at);
        fibers.push_back({b.q(), b.p()});
      } while (in.accept(","));
    }
    in.expect(")");
    return semantic(in, start, [&] { return sfs_s2(e, std::move(fibers)); });
  }
  auto orders_only = [&](SfsBase base) {
    auto orders = in.integer_list();
    return semantic(in, start, [&] { return sfs_normalize_orders(base, std::move(orders)); });
  };
  if (in.accept("S2")) return orders_only(SfsBase::S2);
  if (in.accept("D2")) return orders_only(SfsBase::D2);
  if (in.accept("M2")) return orders_only(SfsBase::Mobius);
  auto pair = [&](const char* what) {
    auto args = in.integer_list();
    if (args.size() != 2) in.fail_at(std::string(what) + " takes two integers", start);
    return args;
  };
  if (in.accept("L")) {
    auto args = pair("L(p,q)");
    return semantic(in, start, [&] { return lens_normalize(args[0], args[1]); });
  }
  if (in.accept("C")) {
    auto args = pair("C(s,t)");
    return semantic(in, start, [&] { return cable_space(args[0], args[1]); });
  }
  in.fail("unknown manifold term");
}

Manifold manifold_sum(Cursor& in) {
  std::vector<Manifold> parts{manifold_term(in)};
  while (in.accept("#")) parts.push_back(manifold_term(in));
  if (parts.size() == 1) return std::move(parts.front());
  return connected_sum(std::move(parts));
}

LinkExpr link_term(Cursor& in) {
  in.skip_space();
  const std::size_t start = in.pos();
  auto guarded = [&](auto&& build) -> LinkExpr {
    try {
      return build();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      in.fail_at(std::string("semantic error: ") + e.what(), start);
    }
  };
  if (in.accept("(")) {
    std::vector<LinkExpr> parts{link_term(in)};
    while (in.accept("+")) parts.push_back(link_term(in));
    in.expect(")");
    return link_connected_sum(std::move(parts));
  }
  if (in.accept("unknot")) return unknot();
  if (in.accept("unlink")) {
    in.expect("(");
    Integer n = in.integer();
    in.expect(")");
    if (n < 1 || n > 1000) in.fail_at("unlink needs 1..1000 components", start);
    return unlink(n.convert_to<int>());
  }
  if (in.accept("b(")) {
    Slope r = in.slope();
    if (in.accept(",")) {
      Integer q = in.integer();
      if (!r.is_integer()) in.fail_at("b(p,q) takes two integers", start);
      Integer p = r.p();
      in.expect(")");
      return guarded([&] { return two_bridge(p, q); });
    }
    in.expect(")");
    return numerator_closure(RationalTangle{r});
  }
  if (in.accept("mont(")) {
    Integer e = in.integer();
    std::vector<Slope> branches;
    if (in.accept(";")) {
      do branches.push_back(in.slope());
      while (in.accept(","));
    }
    in.expect(")");
    return guarded([&] { return montesinos_normalize(e, std::move(branches)); });
  }
  in.fail("unknown link term");
}

}  // namespace

Manifold parse_manifold(std::string_view text) {
  Cursor in(text);
  if (in.at_end()) in.fail("empty manifold expression");
  Manifold m = manifold_sum(in);
  if (!in.at_end()) in.fail("trailing input");
  return m;
}

LinkExpr parse_link(std::string_view text) {
  Cursor in(text);
  if (in.at_end()) in.fail("empty link expression");
  std::vector<LinkExpr> parts{link_term(in)};
  while (in.accept("+")) parts.push_back(link_term(in));
  if (!in.at_end()) in.fail("trailing input");
  return link_connected_sum(std::move(parts));
}

}  // namespace dehn
