#include "maharam/schreier.hpp"

#include <algorithm>
#include <sstream>

#include "maharam/errors.hpp"
#include "maharam/galvin.hpp"
#include "maharam/norms.hpp"

namespace maharam {

FiniteSet::FiniteSet(std::vector<std::uint32_t> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end())
    raise(ErrorCode::Precondition, "duplicate element in finite set");
}

FiniteSet FiniteSet::from_csv(const std::string& csv) {
  std::vector<std::uint32_t> out;
  std::string token;
  std::istringstream in(csv);
  while (std::getline(in, token, ',')) {
    std::size_t b = token.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    std::size_t e = token.find_last_not_of(" \t");
    out.push_back(static_cast<std::uint32_t>(std::stoul(token.substr(b, e - b + 1))));
  }
  return FiniteSet(std::move(out));
}

std::uint32_t FiniteSet::min() const {
  if (empty()) raise(ErrorCode::Precondition, "min of empty set");
  return elems_.front();
}

std::uint32_t FiniteSet::max() const {
  if (empty()) raise(ErrorCode::Precondition, "max of empty set");
  return elems_.back();
}

bool FiniteSet::contains(std::uint32_t v) const {
  return std::binary_search(elems_.begin(), elems_.end(), v);
}

bool FiniteSet::is_subset_of(const FiniteSet& o) const {
  return std::includes(o.elems_.begin(), o.elems_.end(), elems_.begin(), elems_.end());
}

FiniteSet FiniteSet::union_with(const FiniteSet& o) const {
  std::vector<std::uint32_t> out;
  std::set_union(elems_.begin(), elems_.end(), o.elems_.begin(), o.elems_.end(),
                 std::back_inserter(out));
  FiniteSet r;
  r.elems_ = std::move(out);
  return r;
}

FiniteSet FiniteSet::minus(const FiniteSet& o) const {
  std::vector<std::uint32_t> out;
  std::set_difference(elems_.begin(), elems_.end(), o.elems_.begin(), o.elems_.end(),
                      std::back_inserter(out));
  FiniteSet r;
  r.elems_ = std::move(out);
  return r;
}

FiniteSet FiniteSet::intersect(const FiniteSet& o) const {
  std::vector<std::uint32_t> out;
  std::set_intersection(elems_.begin(), elems_.end(), o.elems_.begin(), o.elems_.end(),
                        std::back_inserter(out));
  FiniteSet r;
  r.elems_ = std::move(out);
  return r;
}

FiniteSet FiniteSet::slice(std::uint32_t lo, std::uint32_t hi) const {
  FiniteSet r;
  for (auto v : elems_)
    if (v >= lo && v < hi) r.elems_.push_back(v);
  return r;
}

FiniteSet FiniteSet::with(std::uint32_t v) const {
  if (contains(v)) return *this;
  FiniteSet r = *this;
  r.elems_.insert(std::upper_bound(r.elems_.begin(), r.elems_.end(), v), v);
  return r;
}

std::string FiniteSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(elems_[i]);
  }
  return out + "}";
}

bool leq_s(const FiniteSet& a, const FiniteSet& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.elements()[i] > b.elements()[i]) return false;
  return true;
}

// ---------------------------------------------------------------------------

struct Family::Impl {
  enum class Kind { Schreier, Oplus, Power, NormBall } kind;
  Ordinal alpha;                              // Schreier
  std::shared_ptr<const Impl> left, right;    // Oplus
  std::shared_ptr<Norm> norm;                 // Power / NormBall
  unsigned threshold = 0;                     // Power / NormBall
};

namespace {

MemberResult member_impl(const Family::Impl& f, const FiniteSet& set);

MemberResult schreier_member(const Ordinal& alpha, const FiniteSet& set) {
  MemberResult r;
  r.witness.push_back(alpha);
  Ordinal cur = alpha;
  for (auto n : set.elements()) {
    auto next = max_pred(cur, n);
    if (!next) return r;  // chain died before consuming every element
    cur = *next;
    r.witness.push_back(cur);
  }
  r.member = true;
  return r;
}

MemberResult oplus_member(const Family::Impl& left, const Family::Impl& right,
                          const FiniteSet& set) {
  if (set.size() > 20) raise(ErrorCode::Limit, "oplus membership limited to 20 elements");
  const auto& elems = set.elements();
  for (std::uint32_t mask = 0; mask < (1u << set.size()); ++mask) {
    std::vector<std::uint32_t> s, t;
    for (std::size_t i = 0; i < elems.size(); ++i)
      (mask >> i & 1 ? s : t).push_back(elems[i]);
    if (member_impl(left, FiniteSet(std::move(s))).member &&
        member_impl(right, FiniteSet(std::move(t))).member)
      return {true, {}};
  }
  return {};
}

MemberResult member_impl(const Family::Impl& f, const FiniteSet& set) {
  switch (f.kind) {
    case Family::Impl::Kind::Schreier:
      return schreier_member(f.alpha, set);
    case Family::Impl::Kind::Oplus:
      return oplus_member(*f.left, *f.right, set);
    case Family::Impl::Kind::Power:
    case Family::Impl::Kind::NormBall:
      return {f.norm->exact(set) <= f.threshold, {}};
  }
  raise(ErrorCode::Internal, "unknown family kind");
}

std::string describe_impl(const Family::Impl& f) {
  switch (f.kind) {
    case Family::Impl::Kind::Schreier:
      return "S[" + render(f.alpha) + "]";
    case Family::Impl::Kind::Oplus:
      return "(" + describe_impl(*f.left) + " (+) " + describe_impl(*f.right) + ")";
    case Family::Impl::Kind::Power:
    case Family::Impl::Kind::NormBall:
      return "ball(" + f.norm->describe() + ", " + std::to_string(f.threshold) + ")";
  }
  return "?";
}

}  // namespace

Family Family::schreier(const Ordinal& alpha) {
  if (alpha.is_zero()) raise(ErrorCode::Precondition, "Schreier family requires alpha > 0");
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::Schreier;
  impl->alpha = alpha;
  Family f;
  f.impl_ = std::move(impl);
  return f;
}

Family Family::oplus(const Family& s, const Family& t) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::Oplus;
  impl->left = s.impl_;
  impl->right = t.impl_;
  Family f;
  f.impl_ = std::move(impl);
  return f;
}

Family Family::power(const Family& s, unsigned n) {
  if (n == 0) raise(ErrorCode::Precondition, "family power requires n >= 1");
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::Power;
  impl->norm = Norm::cover(s);
  impl->threshold = n;
  Family f;
  f.impl_ = std::move(impl);
  return f;
}

Family Family::norm_ball(std::shared_ptr<Norm> norm, unsigned threshold) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::NormBall;
  impl->norm = std::move(norm);
  impl->threshold = threshold;
  Family f;
  f.impl_ = std::move(impl);
  return f;
}

MemberResult Family::member(const FiniteSet& f) const { return member_impl(*impl_, f); }

std::string Family::describe() const { return describe_impl(*impl_); }

Family oplus(const Family& s, const Family& t) { return Family::oplus(s, t); }

}  // namespace maharam
