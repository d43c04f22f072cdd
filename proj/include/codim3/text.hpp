// Text forms of polynomials and generator matrices.
//
// Machine form is the Macaulay2-readable grammar
//     term ('+'|'-') term ...     term = [coeff '*'] var ['^' exp] ['*' ...]
// with variables exactly x, y, z and GF(p) coefficients printed as balanced
// representatives.  Human form is the same with '*' and '^' elided.  Generator
// lists render as matrix{{p1,p2,...}} with no whitespace.

#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "codim3/errors.hpp"
#include "codim3/polynomial.hpp"

namespace codim3 {

enum class TextMode { machine, human };

namespace detail {
inline const char kVarNames[kNumVars] = {'x', 'y', 'z'};

inline int var_index(char c) {
  for (int i = 0; i < kNumVars; ++i)
    if (detail::kVarNames[i] == c) return i;
  return -1;
}
}  // namespace detail

template <class F>
std::string to_text(const F& k, const Poly<F>& f, TextMode mode) {
  if (f.is_zero()) return "0";
  const bool machine = mode == TextMode::machine;
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    const bool negative = k.print_negative(t.coeff);
    if (!first)
      out += negative ? '-' : '+';
    else if (negative)
      out += '-';
    first = false;

    std::string mag = k.print_abs(t.coeff);
    const bool unit_coeff = mag == "1";
    const bool has_vars = t.mono.degree() > 0;
    if (!unit_coeff || !has_vars) {
      out += mag;
      if (machine && has_vars) out += '*';
    }
    bool first_var = true;
    for (int i = 0; i < kNumVars; ++i) {
      int e = t.mono.e[i];
      if (e == 0) continue;
      if (!first_var && machine) out += '*';
      first_var = false;
      out += detail::kVarNames[i];
      if (e > 1) {
        if (machine) out += '^';
        out += std::to_string(e);
      }
    }
  }
  return out;
}

template <class F>
std::string to_machine(const F& k, const Poly<F>& f) {
  return to_text(k, f, TextMode::machine);
}
template <class F>
std::string to_human(const F& k, const Poly<F>& f) {
  return to_text(k, f, TextMode::human);
}

template <class F>
std::string machine_matrix(const F& k, const std::vector<Poly<F>>& gens) {
  std::string out = "matrix{{";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ',';
    out += to_machine(k, gens[i]);
  }
  out += "}}";
  return out;
}

template <class F>
std::string human_list(const F& k, const std::vector<Poly<F>>& gens) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ' ';
    out += to_human(k, gens[i]);
  }
  return out;
}

// Derives the human rendering from a machine matrix line without needing the
// field: elide '*' and '^', comma becomes space.
inline std::string human_from_machine_matrix(const std::string& machine) {
  std::string body = machine;
  const std::string prefix = "matrix{{", suffix = "}}";
  if (body.size() >= prefix.size() + suffix.size() &&
      body.compare(0, prefix.size(), prefix) == 0 &&
      body.compare(body.size() - suffix.size(), suffix.size(), suffix) == 0)
    body = body.substr(prefix.size(), body.size() - prefix.size() - suffix.size());
  std::string out;
  for (char c : body) {
    if (c == '*' || c == '^') continue;
    out += c == ',' ? ' ' : c;
  }
  return out;
}

namespace detail {

template <class F>
class PolyParser {
 public:
  PolyParser(const F& k, const std::string& text) : k_(k), s_(text) {}

  Poly<F> parse() {
    std::vector<typename Poly<F>::Term> terms;
    skip_ws();
    if (done()) throw parse_error("empty polynomial text");
    // allow a literal "0"
    if (s_[pos_] == '0' && pos_ + 1 == after_ws_end()) return Poly<F>();
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = take() == '-';
    for (;;) {
      terms.push_back(parse_term(negative));
      skip_ws();
      if (done()) break;
      char c = take();
      if (c == '+')
        negative = false;
      else if (c == '-')
        negative = true;
      else
        throw parse_error(std::string("unexpected character '") + c + "' in polynomial");
    }
    int deg = -1;
    for (const auto& t : terms) {
      if (deg < 0) deg = t.mono.degree();
      if (t.mono.degree() != deg)
        throw parse_error("polynomial is not homogeneous");
    }
    auto p = Poly<F>::from_terms(k_, std::move(terms));
    return p.is_zero() && deg > 0 ? Poly<F>::zero(deg) : p;
  }

 private:
  typename Poly<F>::Term parse_term(bool negative) {
    skip_ws();
    if (done()) throw parse_error("missing term after sign");
    typename F::Elem coeff = k_.one();
    bool saw_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      long long num = parse_number();
      long long den = 1;
      if (!done() && peek() == '/') {
        take();
        if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
          throw parse_error("malformed fractional coefficient");
        den = parse_number();
      }
      coeff = k_.from_fraction(num, den);
      saw_factor = true;
      skip_ws();
      if (!done() && peek() == '*') {
        take();
        skip_ws();
      } else if (!done() && var_index(peek()) >= 0) {
        throw parse_error("missing '*' between coefficient and variable");
      }
    }
    Monomial mono;
    for (;;) {
      skip_ws();
      if (done()) break;
      int v = var_index(peek());
      if (v < 0) {
        if (!saw_factor)
          throw parse_error(std::string("unknown symbol '") + peek() + "'");
        break;
      }
      take();
      saw_factor = true;
      int exp = 1;
      skip_ws();
      if (!done() && peek() == '^') {
        take();
        skip_ws();
        if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
          throw parse_error("malformed exponent");
        exp = static_cast<int>(parse_number());
      }
      mono.e[v] = static_cast<std::int16_t>(mono.e[v] + exp);
      skip_ws();
      if (!done() && peek() == '*') {
        take();
        continue;
      }
      break;
    }
    if (!saw_factor) throw parse_error("expected a term");
    if (negative) coeff = k_.neg(coeff);
    return {mono, coeff};
  }

  long long parse_number() {
    long long v = 0;
    if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw parse_error("expected a number");
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (take() - '0');
      if (v > (1LL << 48)) throw parse_error("numeric literal too large");
    }
    return v;
  }

  std::size_t after_ws_end() const {
    std::size_t e = s_.size();
    while (e > pos_ && std::isspace(static_cast<unsigned char>(s_[e - 1]))) --e;
    return e;
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() const { return s_[pos_]; }
  char take() { return s_[pos_++]; }

  const F& k_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <class F>
Poly<F> parse_polynomial(const F& k, const std::string& text) {
  detail::PolyParser<F> p(k, text);
  return p.parse();
}

// Accepts either a single polynomial or a full matrix{{p1,p2,...}} wrapper and
// returns the generator list.
template <class F>
std::vector<Poly<F>> parse_generators(const F& k, const std::string& text) {
  std::string s = text;
  // trim
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  const std::string prefix = "matrix{{", suffix = "}}";
  if (s.compare(0, prefix.size(), prefix) == 0) {
    if (s.size() < prefix.size() + suffix.size() ||
        s.compare(s.size() - suffix.size(), suffix.size(), suffix) != 0)
      throw parse_error("unterminated matrix{{...}} wrapper");
    std::string body = s.substr(prefix.size(), s.size() - prefix.size() - suffix.size());
    std::vector<Poly<F>> out;
    std::size_t start = 0;
    while (start <= body.size()) {
      std::size_t comma = body.find(',', start);
      std::string piece = body.substr(start, comma == std::string::npos ? std::string::npos
                                                                        : comma - start);
      out.push_back(parse_polynomial(k, piece));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return out;
  }
  return {parse_polynomial(k, s)};
}

}  // namespace codim3
