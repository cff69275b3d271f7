#include "dehn/branched_cover.hpp"

namespace dehn {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

Manifold dbc_link(const LinkExpr& l) {
  return std::visit(
      overloaded{
          [](const link::Unknot&) { return s3(); },
          [](const link::Unlink& u) {
            return connected_sum(std::vector<Manifold>(static_cast<std::size_t>(u.components - 1), s1xs2()));
          },
          [](const link::TwoBridge& b) { return lens_normalize(b.p, b.q); },
          [](const link::Montesinos& m) {
            std::vector<Fiber> fibers;
            for (const auto& b : m.branches) fibers.push_back({b.q(), b.p()});
            return sfs_s2(m.e, std::move(fibers));
          },
          [](const link::ConnSum& cs) {
            std::vector<Manifold> covers;
            for (const auto& s : cs.summands) covers.push_back(dbc_link(s));
            return connected_sum(std::move(covers));
          },
      },
      l.shape());
}

}  // namespace dehn
