#pragma once

// Text syntax for scalars, forms, morphisms and points.
//
//   form  := ["-"] term (("+" | "-") term)*
//   term  := coeff ["*" mono] | mono
//   mono  := var ["^" nat] ("*" var ["^" nat])*
//   var   := "u" | "v"
//   coeff := int | int "/" int
//
// Whitespace is ignored. Homogeneity is checked after parsing.

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "strata/binary_form.hpp"
#include "strata/error.hpp"
#include "strata/field.hpp"
#include "strata/morphism.hpp"
#include "strata/projective.hpp"

namespace strata {

// ---------------------------------------------------------------------------
// Rendering

template <FieldScalar K>
std::string render(const BinaryForm<K>& f) {
  if (f.is_zero()) return "0";
  const std::size_t d = f.degree();
  std::string out;
  bool first = true;
  for (std::size_t j = 0; j <= d; ++j) {
    K c = f.coefficient(j);
    if (c.is_zero()) continue;
    const bool negative = c.is_negative();
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string mono;
    const std::size_t ue = d - j;
    const std::size_t ve = j;
    if (ue > 0) mono += ue == 1 ? "u" : "u^" + std::to_string(ue);
    if (ve > 0) {
      if (!mono.empty()) mono += "*";
      mono += ve == 1 ? "v" : "v^" + std::to_string(ve);
    }
    if (mono.empty()) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += c.to_string() + "*" + mono;
    }
  }
  return out;
}

template <FieldScalar K>
std::string render(const MorphismP1<K>& f) {
  std::string out = "(";
  for (std::size_t i = 0; i < f.forms().size(); ++i) {
    if (i > 0) out += " : ";
    out += render(f.form(i));
  }
  return out + ")";
}

template <FieldScalar K>
std::string render(const ProjectivePoint<K>& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.coords().size(); ++i) {
    if (i > 0) out += ":";
    out += p[i].to_string();
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

template <FieldScalar K>
class Parser {
 public:
  Parser(std::string_view text, const FieldSpec& spec, const char* operation)
      : text_(text), spec_(spec), operation_(operation) {}

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

  std::size_t position() const { return pos_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError, operation_, what, pos_);
  }

  mpz_class natural() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected a number");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  std::size_t small_natural() {
    const std::size_t at = pos_;
    const mpz_class n = natural();
    if (n > 4096) {
      throw Error(ErrorCode::SyntaxError, operation_, "exponent too large", at);
    }
    return n.get_ui();
  }

  /// int | int "/" int, with an optional leading sign.
  K scalar() {
    const bool negative = accept('-');
    const mpz_class num = natural();
    mpz_class den = 1;
    if (accept('/')) den = natural();
    K value = K::from_literal(spec_, num, den);
    return negative ? -value : value;
  }

  struct Term {
    K coeff;
    std::size_t u_exp = 0;
    std::size_t v_exp = 0;
  };

  Term term() {
    Term t{K::one(spec_)};
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const mpz_class num = natural();
      mpz_class den = 1;
      if (accept('/')) den = natural();
      t.coeff = K::from_literal(spec_, num, den);
      if (!accept('*')) return t;
    }
    monomial(t);
    return t;
  }

  void monomial(Term& t) {
    do {
      const char c = peek();
      if (c != 'u' && c != 'v') fail("expected 'u' or 'v'");
      ++pos_;
      std::size_t e = 1;
      if (accept('^')) e = small_natural();
      (c == 'u' ? t.u_exp : t.v_exp) += e;
    } while (accept('*'));
  }

  BinaryForm<K> form() {
    const std::size_t start = pos_;
    std::vector<Term> terms;
    bool negative = accept('-');
    while (true) {
      Term t = term();
      if (negative) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      if (accept('+')) {
        negative = false;
      } else if (accept('-')) {
        negative = true;
      } else {
        break;
      }
    }
    const std::size_t d = terms.front().u_exp + terms.front().v_exp;
    std::vector<K> coeffs(d + 1, K::zero(spec_));
    for (const Term& t : terms) {
      if (t.u_exp + t.v_exp != d) {
        throw Error(ErrorCode::NotHomogeneous, operation_,
                    "terms of degree " + std::to_string(d) + " and " +
                        std::to_string(t.u_exp + t.v_exp),
                    start);
      }
      coeffs[t.v_exp] = coeffs[t.v_exp] + t.coeff;
    }
    return BinaryForm<K>::from_coefficients(spec_, std::move(coeffs));
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view text_;
  FieldSpec spec_;
  const char* operation_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <FieldScalar K>
K parse_scalar(std::string_view text, const FieldSpec& spec) {
  detail::Parser<K> p(text, spec, "parse_scalar");
  K value = p.scalar();
  p.expect_end();
  return value;
}

template <FieldScalar K>
BinaryForm<K> parse_form(std::string_view text, const FieldSpec& spec) {
  detail::Parser<K> p(text, spec, "parse_form");
  auto f = p.form();
  p.expect_end();
  return f;
}

/// Parsed morphism plus the common factor normalization removed.
template <FieldScalar K>
struct ParsedMorphism {
  MorphismP1<K> morphism;
  BinaryForm<K> stripped_factor;
  bool stripped() const { return !stripped_factor.is_constant(); }
};

template <FieldScalar K>
ParsedMorphism<K> parse_morphism(std::string_view text, const FieldSpec& spec) {
  detail::Parser<K> p(text, spec, "parse_morphism");
  p.expect('(');
  std::vector<BinaryForm<K>> forms{p.form()};
  while (p.accept(':')) forms.push_back(p.form());
  p.expect(')');
  p.expect_end();
  if (forms.size() < 2) p.fail("a morphism needs at least two components");
  auto norm = MorphismP1<K>::normalize_reporting(std::move(forms));
  return {std::move(norm.morphism), std::move(norm.common_factor)};
}

template <FieldScalar K>
ProjectivePoint<K> parse_point(std::string_view text, const FieldSpec& spec) {
  detail::Parser<K> p(text, spec, "parse_point");
  p.expect('(');
  std::vector<K> coords{p.scalar()};
  while (p.accept(':')) coords.push_back(p.scalar());
  p.expect(')');
  p.expect_end();
  return ProjectivePoint<K>::normalize(std::move(coords));
}

/// One or more points "(..)" separated by whitespace, ',' or ';'.
template <FieldScalar K>
std::vector<ProjectivePoint<K>> parse_point_list(std::string_view text,
                                                 const FieldSpec& spec) {
  std::vector<ProjectivePoint<K>> out;
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',' ||
            text[pos] == ';')) {
      ++pos;
    }
    if (pos >= text.size()) break;
    if (text[pos] != '(') {
      throw Error(ErrorCode::SyntaxError, "parse_point", "expected '('", pos);
    }
    const std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) {
      throw Error(ErrorCode::SyntaxError, "parse_point", "unterminated point", pos);
    }
    out.push_back(parse_point<K>(text.substr(pos, close - pos + 1), spec));
    pos = close + 1;
  }
  return out;
}

}  // namespace strata
