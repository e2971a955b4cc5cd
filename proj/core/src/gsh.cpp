#include "parikhseq/gsh.hpp"

#include <stdexcept>

#include "parikhseq/count.hpp"

namespace parikhseq {

Monomial::Monomial(std::vector<std::string> factors) {
  for (auto& f : factors) {
    if (f.empty()) continue;
    for (char c : f) {
      if (!is_symbol(c)) throw ParseError("invalid symbol '" + std::string(1, c) + "' in monomial");
    }
    factors_.push_back(std::move(f));
  }
}

std::size_t Monomial::flat_length() const noexcept {
  std::size_t n = 0;
  for (const auto& f : factors_) n += f.size();
  return n;
}

Monomial Monomial::then(const Monomial& rhs) const {
  Monomial out = *this;
  out.factors_.insert(out.factors_.end(), rhs.factors_.begin(), rhs.factors_.end());
  return out;
}

Monomial Monomial::slice(std::size_t first, std::size_t last) const {
  Monomial out;
  out.factors_.assign(factors_.begin() + static_cast<std::ptrdiff_t>(first),
                      factors_.begin() + static_cast<std::ptrdiff_t>(last));
  return out;
}

std::string Monomial::render() const {
  if (factors_.empty()) return "#e";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out.push_back('.');
    out += factors_[i];
  }
  return out;
}

Monomial parse_monomial(std::string_view text) {
  if (text == "#e") return Monomial();
  return Monomial(parse_genseq(text));
}

BigInt evaluate(const Monomial& m, std::string_view w) {
  if (m.is_epsilon()) return 1;
  return count_runs(w, m.factors(), false, false);
}

LinearGsh LinearGsh::of(Monomial m, BigInt coeff) {
  LinearGsh g;
  g.add(m, coeff);
  return g;
}

void LinearGsh::add(const Monomial& m, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LinearGsh& LinearGsh::operator+=(const LinearGsh& rhs) {
  for (const auto& [m, c] : rhs.terms_) add(m, c);
  return *this;
}

LinearGsh& LinearGsh::operator-=(const LinearGsh& rhs) {
  for (const auto& [m, c] : rhs.terms_) add(m, -c);
  return *this;
}

LinearGsh& LinearGsh::operator*=(const BigInt& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= k;
  return *this;
}

BigInt LinearGsh::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

LinearGsh LinearGsh::then(const LinearGsh& rhs) const {
  LinearGsh out;
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : rhs.terms_) out.add(a.then(b), ca * cb);
  return out;
}

BigInt LinearGsh::evaluate(std::string_view w) const {
  BigInt total = 0;
  for (const auto& [m, c] : terms_) total += c * parikhseq::evaluate(m, w);
  return total;
}

std::string LinearGsh::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1) out += magnitude.str() + " ";
    out += m.render();
    first = false;
  }
  return out;
}

nlohmann::json to_json(const LinearGsh& g) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : g.terms()) out.push_back({{"monomial", m.render()}, {"coeff", c.str()}});
  return out;
}

LinearGsh linear_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("linear GSH JSON must be an array");
  LinearGsh g;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("monomial") || !term.contains("coeff") ||
        !term.at("monomial").is_string() || !term.at("coeff").is_string()) {
      throw std::invalid_argument("linear GSH terms need string \"monomial\" and \"coeff\"");
    }
    BigInt coeff;
    try {
      coeff = BigInt(term.at("coeff").get<std::string>());
    } catch (const std::exception&) {
      throw std::invalid_argument("not a decimal integer: " + term.at("coeff").get<std::string>());
    }
    g.add(parse_monomial(term.at("monomial").get<std::string>()), coeff);
  }
  return g;
}

struct GshExpr::Node {
  Kind kind = Kind::Leaf;
  Monomial monomial;
  BigInt factor;
  GshExpr lhs;
  GshExpr rhs;
};

GshExpr::GshExpr() : node_(nullptr) {}

GshExpr GshExpr::leaf(Monomial m) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Leaf;
  n->monomial = std::move(m);
  return GshExpr(std::move(n));
}

GshExpr GshExpr::scale(BigInt k, GshExpr e) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Scale;
  n->factor = std::move(k);
  n->lhs = std::move(e);
  return GshExpr(std::move(n));
}

GshExpr GshExpr::negate(GshExpr e) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Negate;
  n->lhs = std::move(e);
  return GshExpr(std::move(n));
}

GshExpr GshExpr::sum(GshExpr a, GshExpr b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return GshExpr(std::move(n));
}

GshExpr GshExpr::product(GshExpr a, GshExpr b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Product;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return GshExpr(std::move(n));
}

GshExpr::Kind GshExpr::kind() const noexcept { return node_ ? node_->kind : Kind::Leaf; }

const Monomial& GshExpr::monomial() const {
  static const Monomial epsilon;
  if (!node_) return epsilon;
  if (node_->kind != Kind::Leaf) throw std::logic_error("not a monomial leaf");
  return node_->monomial;
}

const BigInt& GshExpr::factor() const {
  if (kind() != Kind::Scale) throw std::logic_error("not a scaled expression");
  return node_->factor;
}

const GshExpr& GshExpr::lhs() const {
  if (kind() == Kind::Leaf) throw std::logic_error("leaf has no operands");
  return node_->lhs;
}

const GshExpr& GshExpr::rhs() const {
  if (kind() != Kind::Sum && kind() != Kind::Product) throw std::logic_error("expression has no second operand");
  return node_->rhs;
}

std::string GshExpr::render() const {
  switch (kind()) {
    case Kind::Leaf: return monomial().render();
    case Kind::Scale: return factor().str() + " (" + lhs().render() + ")";
    case Kind::Negate: return "-(" + lhs().render() + ")";
    case Kind::Sum: return "(" + lhs().render() + " + " + rhs().render() + ")";
    case Kind::Product: return "(" + lhs().render() + " * " + rhs().render() + ")";
  }
  return {};
}

GshExpr to_expr(const LinearGsh& g) {
  std::optional<GshExpr> out;
  for (const auto& [m, c] : g.terms()) {
    GshExpr term = c == 1 ? GshExpr::leaf(m) : GshExpr::scale(c, GshExpr::leaf(m));
    out = out ? GshExpr::sum(*out, term) : term;
  }
  return out ? *out : GshExpr::scale(0, GshExpr::leaf(Monomial()));
}

BigInt evaluate(const GshExpr& e, std::string_view w) {
  switch (e.kind()) {
    case GshExpr::Kind::Leaf: return evaluate(e.monomial(), w);
    case GshExpr::Kind::Scale: return e.factor() * evaluate(e.lhs(), w);
    case GshExpr::Kind::Negate: return -evaluate(e.lhs(), w);
    case GshExpr::Kind::Sum: return evaluate(e.lhs(), w) + evaluate(e.rhs(), w);
    case GshExpr::Kind::Product: return evaluate(e.lhs(), w) * evaluate(e.rhs(), w);
  }
  return 0;
}

}  // namespace parikhseq
