#include "qkgr/qk_element.hpp"

#include <json.hpp>

namespace qkgr {

QKElement QKElement::basis(const Partition& p, int degree, Coeff coeff) {
  QKElement e;
  e.add(p, degree, coeff);
  return e;
}

void QKElement::add(const Partition& p, int degree, Coeff coeff) {
  if (coeff == 0) return;
  if (degree < 0) throw std::invalid_argument("negative q-degree");
  auto [it, inserted] = terms_.try_emplace(Term{degree, p}, coeff);
  if (!inserted) {
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
  }
}

void QKElement::add(const QKElement& other, Coeff scale) {
  for (const auto& [term, c] : other.terms_) add(term.partition, term.degree, checked_mul(c, scale));
}

Coeff QKElement::coefficient(const Partition& p, int degree) const {
  auto it = terms_.find(Term{degree, p});
  return it == terms_.end() ? 0 : it->second;
}

int QKElement::max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree; }

int QKElement::min_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree; }

QKElement QKElement::degree_part(int degree) const {
  QKElement out;
  for (const auto& [term, c] : terms_) {
    if (term.degree == degree) out.terms_.emplace(Term{0, term.partition}, c);
  }
  return out;
}

QKElement QKElement::shifted(int shift) const {
  QKElement out;
  for (const auto& [term, c] : terms_) out.terms_.emplace(Term{term.degree + shift, term.partition}, c);
  return out;
}

void QKElement::check_truncation(const GrContext& ctx) const {
  if (max_degree() > ctx.D) {
    throw TruncationError("q-degree " + std::to_string(max_degree()) + " exceeds truncation bound " +
                          std::to_string(ctx.D) + " of " + ctx.describe());
  }
}

QKElement operator*(Coeff s, const QKElement& a) {
  QKElement out;
  if (s == 0) return out;
  for (const auto& [term, c] : a.terms_) out.terms_.emplace(term, checked_mul(s, c));
  return out;
}

std::string QKElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [term, c] : terms_) {
    const Coeff mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) out += std::to_string(mag);
    if (term.degree == 1) {
      out += "q*";
    } else if (term.degree > 1) {
      out += "q^" + std::to_string(term.degree) + "*";
    } else if (mag != 1) {
      out += "*";
    }
    out += "O^(" + term.partition.to_string() + ")";
  }
  return out;
}

std::string QKElement::to_json() const {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [term, c] : terms_) {
    terms.push_back({{"q", term.degree}, {"partition", term.partition.vec()}, {"coeff", c}});
  }
  return nlohmann::ordered_json{{"terms", terms}}.dump();
}

QKElement QKElement::from_json(const GrContext& ctx, std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed element JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw std::invalid_argument("element JSON needs a \"terms\" array");
  }
  QKElement out;
  for (const auto& t : j["terms"]) {
    const int q = t.at("q").get<int>();
    out.add(make_partition(ctx, t.at("partition").get<std::vector<int>>()), q, t.at("coeff").get<Coeff>());
  }
  out.check_truncation(ctx);
  return out;
}

std::vector<Coeff> euler_char(const QKElement& a) {
  std::vector<Coeff> out(static_cast<std::size_t>(a.max_degree() + 1), 0);
  for (const auto& [term, c] : a.terms()) out[term.degree] = checked_add(out[term.degree], c);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace qkgr
