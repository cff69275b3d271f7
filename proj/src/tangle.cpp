#include "dehn/tangle.hpp"

#include "dehn/error.hpp"

#include <algorithm>

namespace dehn {

LinkExpr make_link(LinkExpr::Shape s) { return LinkExpr(std::move(s)); }

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

int cmp(const Integer& a, const Integer& b) { return a < b ? -1 : (b < a ? 1 : 0); }

bool branch_less(const Slope& a, const Slope& b) {
  if (a.q() != b.q()) return a.q() < b.q();
  return a.p() < b.p();
}

int link_compare(const LinkExpr& a, const LinkExpr& b) {
  if (a.shape().index() != b.shape().index()) return a.shape().index() < b.shape().index() ? -1 : 1;
  return std::visit(
      overloaded{
          [&](const link::Unlink& x) { return cmp(x.components, b.get_if<link::Unlink>()->components); },
          [&](const link::TwoBridge& x) {
            const auto* y = b.get_if<link::TwoBridge>();
            if (int c = cmp(x.p, y->p)) return c;
            return cmp(x.q, y->q);
          },
          [&](const link::Montesinos& x) {
            const auto* y = b.get_if<link::Montesinos>();
            if (int c = cmp(x.e, y->e)) return c;
            if (x.branches.size() != y->branches.size()) return x.branches.size() < y->branches.size() ? -1 : 1;
            for (std::size_t i = 0; i < x.branches.size(); ++i) {
              if (branch_less(x.branches[i], y->branches[i])) return -1;
              if (branch_less(y->branches[i], x.branches[i])) return 1;
            }
            return 0;
          },
          [&](const link::ConnSum& x) {
            const auto* y = b.get_if<link::ConnSum>();
            for (std::size_t i = 0; i < x.summands.size() && i < y->summands.size(); ++i)
              if (int c = link_compare(x.summands[i], y->summands[i])) return c;
            return cmp(x.summands.size(), y->summands.size());
          },
          [](const auto&) { return 0; },
      },
      a.shape());
}

}  // namespace

bool operator==(const LinkExpr& a, const LinkExpr& b) { return link_compare(a, b) == 0; }
bool operator<(const LinkExpr& a, const LinkExpr& b) { return link_compare(a, b) < 0; }

LinkExpr unknot() { return make_link(link::Unknot{}); }

LinkExpr unlink(int components) {
  if (components < 1) throw InvalidArgument("unlink needs at least one component");
  if (components == 1) return unknot();
  return make_link(link::Unlink{components});
}

LinkExpr two_bridge(const Integer& p, const Integer& q) {
  if (gcd(p, q) != 1) throw InvalidArgument("b(" + p.str() + "," + q.str() + ") is not coprime");
  if (p == 0) return unlink(2);
  if (abs(p) == 1) return unknot();
  Integer n = abs(p);
  Integer r = mod(p < 0 ? Integer(-q) : q, n);
  return make_link(link::TwoBridge{n, r});
}

LinkExpr montesinos_normalize(Integer e, std::vector<Slope> branches) {
  for (auto& b : branches) {
    if (b.is_infinite() || b.is_integer())
      throw InvalidArgument("Montesinos branch " + to_string(b) + " is not a proper fraction datum");
    Integer whole = floor_div(b.p(), b.q());
    e += whole;
    b = Slope(b.p() - whole * b.q(), b.q());
  }
  std::sort(branches.begin(), branches.end(), branch_less);
  return make_link(link::Montesinos{std::move(e), std::move(branches)});
}

LinkExpr link_connected_sum(std::vector<LinkExpr> summands) {
  std::vector<LinkExpr> flat;
  for (auto& s : summands) {
    if (auto* cs = s.get_if<link::ConnSum>()) flat.insert(flat.end(), cs->summands.begin(), cs->summands.end());
    else if (!s.is<link::Unknot>()) flat.push_back(std::move(s));
  }
  if (flat.empty()) return unknot();
  if (flat.size() == 1) return std::move(flat.front());
  std::sort(flat.begin(), flat.end());
  return make_link(link::ConnSum{std::move(flat)});
}

LinkExpr numerator_closure(const RationalTangle& t) {
  const Slope& f = t.fraction;
  if (f.is_infinite()) return unlink(2);
  if (f.p() == 0) return unknot();
  return two_bridge(f.p(), f.q());
}

Integer link_determinant(const LinkExpr& l) {
  return std::visit(
      overloaded{
          [](const link::Unknot&) { return Integer(1); },
          [](const link::Unlink&) { return Integer(0); },
          [](const link::TwoBridge& b) { return b.p; },
          [](const link::Montesinos& m) {
            Integer all = 1;
            for (const auto& b : m.branches) all *= b.q();
            Integer total = m.e * all;
            for (std::size_t i = 0; i < m.branches.size(); ++i) {
              Integer term = m.branches[i].p();
              for (std::size_t j = 0; j < m.branches.size(); ++j)
                if (j != i) term *= m.branches[j].q();
              total += term;
            }
            return abs(total);
          },
          [](const link::ConnSum& cs) {
            Integer d = 1;
            for (const auto& s : cs.summands) d *= link_determinant(s);
            return d;
          },
      },
      l.shape());
}

std::string to_string(const LinkExpr& l) {
  return std::visit(
      overloaded{
          [](const link::Unknot&) -> std::string { return "unknot"; },
          [](const link::Unlink& u) { return "unlink(" + std::to_string(u.components) + ")"; },
          [](const link::TwoBridge& b) { return "b(" + b.p.str() + "/" + b.q.str() + ")"; },
          [](const link::Montesinos& m) {
            std::string out = "mont(" + m.e.str() + ";";
            for (std::size_t i = 0; i < m.branches.size(); ++i) {
              out += i ? "," : "";
              out += to_string(m.branches[i]);
            }
            return out + ")";
          },
          [](const link::ConnSum& cs) {
            std::string out;
            for (std::size_t i = 0; i < cs.summands.size(); ++i) {
              if (i) out += "+";
              out += to_string(cs.summands[i]);
            }
            return out;
          },
      },
      l.shape());
}

}  // namespace dehn
