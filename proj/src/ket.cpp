// Copyright 2026 The slocc-invariants Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "slocc/ket.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>
#include <vector>

namespace slocc {
namespace {

enum class TokKind {
  kLParen,
  kRParen,
  kPlus,
  kMinus,
  kStar,
  kSlash,
  kNumber,
  kImag,
  kSqrt,
  kKet,
  kEnd,
};

struct Token {
  TokKind kind;
  std::string text;  // number digits or ket body
  std::size_t pos = 0;
  bool is_integer = true;  // for kNumber: no '.' or exponent
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    switch (c) {
      case '(':
        out.push_back({TokKind::kLParen, "(", start, true});
        ++i;
        continue;
      case ')':
        out.push_back({TokKind::kRParen, ")", start, true});
        ++i;
        continue;
      case '+':
        out.push_back({TokKind::kPlus, "+", start, true});
        ++i;
        continue;
      case '-':
        out.push_back({TokKind::kMinus, "-", start, true});
        ++i;
        continue;
      case '*':
        out.push_back({TokKind::kStar, "*", start, true});
        ++i;
        continue;
      case '/':
        out.push_back({TokKind::kSlash, "/", start, true});
        ++i;
        continue;
      case '|': {
        ++i;
        std::string body;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
          body += text[i];
          ++i;
        }
        if (body.empty()) throw KetParseError("empty ket body", start);
        if (i >= n || text[i] != '>')
          throw KetParseError("unterminated ket, expected '>'", start);
        ++i;
        out.push_back({TokKind::kKet, body, start, true});
        continue;
      }
      default:
        break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      bool integer = true;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i])))
        num += text[i++];
      if (i < n && text[i] == '.') {
        integer = false;
        num += text[i++];
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i])))
          num += text[i++];
      }
      if (i < n && (text[i] == 'e' || text[i] == 'E')) {
        // Consume an exponent only when it is well formed; otherwise leave
        // the 'e' for the identifier lexer (it will be rejected there).
        std::size_t j = i + 1;
        if (j < n && (text[j] == '+' || text[j] == '-')) ++j;
        if (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) {
          integer = false;
          num += text[i++];  // e/E
          if (text[i] == '+' || text[i] == '-') num += text[i++];
          while (i < n && std::isdigit(static_cast<unsigned char>(text[i])))
            num += text[i++];
        }
      }
      out.push_back({TokKind::kNumber, num, start, integer});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string word;
      while (i < n && std::isalpha(static_cast<unsigned char>(text[i])))
        word += text[i++];
      if (word == "i") {
        out.push_back({TokKind::kImag, word, start, true});
      } else if (word == "sqrt") {
        out.push_back({TokKind::kSqrt, word, start, true});
      } else {
        throw KetParseError("unknown identifier '" + word + "'", start);
      }
      continue;
    }
    throw KetParseError(std::string("unexpected character '") + c + "'",
                        start);
  }
  out.push_back({TokKind::kEnd, "", n, true});
  return out;
}

// Largest square divisor split: k = square_part^2 * residue.
struct RootSplit {
  unsigned long long square_part;
  unsigned long long residue;
};

RootSplit split_square(unsigned long long k) {
  unsigned long long s = 1;
  for (unsigned long long d = 2; d * d <= k; ++d) {
    while (k % (d * d) == 0) {
      k /= d * d;
      s *= d;
    }
  }
  return {s, k};
}

// The floating value of r / sqrt(root), computed identically by the parser
// and the formatter so that exact-style output round-trips bit-for-bit.
double exact_component_value(const Rational& r, unsigned long long root) {
  const double x = r.convert_to<double>();
  return root == 1 ? x : x / std::sqrt(static_cast<double>(root));
}

// One parsed summand: coefficient (exact or floating) times a ket.
struct Contribution {
  bool has_ket = false;
  std::string ket_body;
  std::size_t ket_pos = 0;
  bool exact = true;
  GaussianRational coeff;           // valid when exact
  unsigned long long root = 1;      // square-free when exact
  Cplx approx;                      // valid when !exact (root folded in)
};

constexpr unsigned long long kMaxRoot = 1000000000000ULL;

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  std::vector<Contribution> parse_expr() {
    std::vector<Contribution> out;
    if (peek().kind == TokKind::kLParen) {
      next();
      parse_sum(out);
      expect(TokKind::kRParen, "expected ')'");
      expect(TokKind::kSlash, "expected '/' after ')'");
      const unsigned long long g = parse_root();
      for (Contribution& c : out) apply_root_divisor(c, g);
    } else {
      parse_sum(out);
    }
    if (peek().kind != TokKind::kEnd)
      throw KetParseError("unexpected trailing input", peek().pos);
    return out;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t idx = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[idx];
  }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  void expect(TokKind kind, const char* msg) {
    if (peek().kind != kind) throw KetParseError(msg, peek().pos);
    next();
  }

  static void apply_root_divisor(Contribution& c, unsigned long long g) {
    if (c.exact) {
      const unsigned long long raw = c.root * g;
      if (raw > kMaxRoot) throw KetParseError("root too large", 0);
      const RootSplit rs = split_square(raw);
      c.coeff = c.coeff / GaussianRational(Rational(rs.square_part));
      c.root = rs.residue;
    } else {
      c.approx /= std::sqrt(static_cast<double>(g));
    }
  }

  unsigned long long parse_root() {
    expect(TokKind::kSqrt, "expected 'sqrt('");
    expect(TokKind::kLParen, "expected '(' after sqrt");
    const Token& num = peek();
    if (num.kind != TokKind::kNumber || !num.is_integer)
      throw KetParseError("expected unsigned integer inside sqrt()", num.pos);
    unsigned long long k = 0;
    try {
      k = std::stoull(num.text);
    } catch (const std::exception&) {
      throw KetParseError("root too large", num.pos);
    }
    if (k == 0) throw KetParseError("sqrt(0) is not a valid divisor", num.pos);
    if (k > kMaxRoot) throw KetParseError("root too large", num.pos);
    next();
    expect(TokKind::kRParen, "expected ')' after sqrt argument");
    return k;
  }

  void parse_sum(std::vector<Contribution>& out) {
    bool first = true;
    while (true) {
      int sep = 1;
      if (!first) {
        if (peek().kind == TokKind::kPlus) {
          next();
        } else if (peek().kind == TokKind::kMinus) {
          next();
          sep = -1;
        } else {
          break;
        }
      }
      parse_term(sep, out);
      first = false;
    }
  }

  void parse_term(int sep, std::vector<Contribution>& out) {
    int sign = sep;
    if (peek().kind == TokKind::kPlus) {
      next();
    } else if (peek().kind == TokKind::kMinus) {
      next();
      sign = -sign;
    }

    Contribution c;
    bool have_coeff = false;
    if (peek().kind != TokKind::kKet) {
      c = parse_factor();
      have_coeff = true;
      if (peek().kind == TokKind::kStar) {
        next();
        if (peek().kind != TokKind::kKet)
          throw KetParseError("expected ket after '*'", peek().pos);
      }
    } else {
      c.exact = true;
      c.coeff = GaussianRational(1);
      c.root = 1;
    }
    if (peek().kind == TokKind::kKet) {
      const Token& ket = next();
      c.has_ket = true;
      c.ket_body = ket.text;
      c.ket_pos = ket.pos;
    } else if (!have_coeff) {
      throw KetParseError("expected term", peek().pos);
    }
    if (sign < 0) {
      if (c.exact)
        c.coeff = GaussianRational(-1) * c.coeff;
      else
        c.approx = -c.approx;
    }
    out.push_back(std::move(c));
  }

  Contribution parse_factor() {
    Contribution c;
    const Token& t = peek();
    switch (t.kind) {
      case TokKind::kSqrt: {
        // A bare sqrt(k) multiplier: sqrt(k) = s*sqrt(r) = (s*r)/sqrt(r).
        const unsigned long long k = parse_root();
        const RootSplit rs = split_square(k);
        c.exact = true;
        c.coeff = GaussianRational(Rational(rs.square_part * rs.residue));
        c.root = rs.residue;
        return c;
      }
      case TokKind::kImag: {
        next();
        c.exact = true;
        c.coeff = GaussianRational{Rational(0), Rational(1)};
        c.root = 1;
        maybe_divide_by_root(c);
        return c;
      }
      case TokKind::kNumber: {
        next();
        if (t.is_integer) {
          Rational value(BigInt(t.text));
          if (peek().kind == TokKind::kSlash &&
              peek(1).kind == TokKind::kNumber) {
            const Token& den = peek(1);
            if (!den.is_integer)
              throw KetParseError("expected integer denominator", den.pos);
            const BigInt d(den.text);
            if (d == 0) throw KetParseError("division by zero", den.pos);
            next();
            next();
            value /= Rational(d);
          }
          c.exact = true;
          c.coeff = GaussianRational(value);
          c.root = 1;
          if (peek().kind == TokKind::kImag) {
            next();
            c.coeff = GaussianRational{Rational(0), Rational(1)} * c.coeff;
          }
          maybe_divide_by_root(c);
        } else {
          double v = 0;
          try {
            v = std::stod(t.text);
          } catch (const std::exception&) {
            throw KetParseError("malformed number", t.pos);
          }
          c.exact = false;
          c.approx = Cplx(v, 0.0);
          if (peek().kind == TokKind::kSlash &&
              peek(1).kind == TokKind::kNumber)
            throw KetParseError(
                "rational denominators require integer numerators", t.pos);
          if (peek().kind == TokKind::kImag) {
            next();
            c.approx = Cplx(0.0, v);
          }
          if (peek().kind == TokKind::kSlash &&
              peek(1).kind == TokKind::kSqrt) {
            next();
            const unsigned long long k = parse_root();
            c.approx /= std::sqrt(static_cast<double>(k));
          }
        }
        return c;
      }
      default:
        throw KetParseError("expected coefficient or ket", t.pos);
    }
  }

  // Optional "/ sqrt(k)" suffix on an exact factor.
  void maybe_divide_by_root(Contribution& c) {
    if (peek().kind == TokKind::kSlash && peek(1).kind == TokKind::kSqrt) {
      next();
      const unsigned long long k = parse_root();
      const RootSplit rs = split_square(k);
      c.coeff = c.coeff / GaussianRational(Rational(rs.square_part));
      c.root = rs.residue;
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

bool is_bits(const std::string& body) {
  return std::all_of(body.begin(), body.end(),
                     [](char c) { return c == '0' || c == '1'; });
}

int bit_width_of(std::size_t v) {
  int b = 1;
  while ((v >> b) != 0) ++b;
  return b;
}

}  // namespace

ParsedState parse_ket(const std::string& text, std::optional<int> qubits) {
  if (qubits && (*qubits < 2 || *qubits > kMaxQubits))
    throw KetParseError("qubit count must be between 2 and 8", 0);

  Parser parser(tokenize(text));
  std::vector<Contribution> contributions = parser.parse_expr();
  if (contributions.empty()) throw KetParseError("empty expression", 0);

  // Classify each ket as bitstring or decimal index.
  struct Resolved {
    std::size_t index;
    const Contribution* c;
  };
  int bitstring_len = 0;
  for (const Contribution& c : contributions) {
    if (!c.has_ket) continue;
    const bool bits =
        is_bits(c.ket_body) &&
        (qubits ? static_cast<int>(c.ket_body.size()) == *qubits
                : c.ket_body.size() >= 2);
    if (!bits) continue;
    const int len = static_cast<int>(c.ket_body.size());
    if (bitstring_len != 0 && bitstring_len != len)
      throw KetParseError("conflicting bitstring lengths", c.ket_pos);
    bitstring_len = len;
  }

  std::vector<Resolved> resolved;
  std::size_t max_index = 0;
  for (const Contribution& c : contributions) {
    std::size_t index = 0;
    if (c.has_ket) {
      const bool bits = is_bits(c.ket_body) &&
                        static_cast<int>(c.ket_body.size()) == bitstring_len;
      if (bits) {
        for (char ch : c.ket_body) index = (index << 1) | (ch == '1');
      } else {
        if (c.ket_body.size() > 6)
          throw KetParseError("basis index too large", c.ket_pos);
        index = std::stoul(c.ket_body);
      }
    }
    max_index = std::max(max_index, index);
    resolved.push_back({index, &c});
  }

  int n = 0;
  if (qubits) {
    n = *qubits;
  } else if (bitstring_len != 0) {
    n = bitstring_len;
    if (max_index >= (std::size_t{1} << n)) {
      for (const Resolved& r : resolved)
        if (r.index == max_index)
          throw KetParseError(
              "basis index exceeds the qubit count fixed by a bitstring",
              r.c->ket_pos);
    }
  } else {
    n = std::max(2, bit_width_of(max_index));
  }
  if (n > kMaxQubits)
    throw KetParseError("state requires more than 8 qubits", 0);
  const std::size_t dim = std::size_t{1} << n;
  for (const Resolved& r : resolved) {
    if (r.index >= dim)
      throw KetParseError("basis index " + std::to_string(r.index) +
                              " exceeds 2^n - 1",
                          r.c->has_ket ? r.c->ket_pos : 0);
  }

  // Accumulate floating amplitudes and, in parallel, exact parts keyed by
  // square-free root.
  std::vector<Cplx> amps(dim, Cplx(0.0, 0.0));
  bool all_exact = true;
  std::map<std::size_t, std::map<unsigned long long, GaussianRational>>
      exact_parts;
  for (const Resolved& r : resolved) {
    const Contribution& c = *r.c;
    if (c.exact) {
      amps[r.index] += Cplx(exact_component_value(c.coeff.re, c.root),
                            exact_component_value(c.coeff.im, c.root));
      exact_parts[r.index][c.root] += c.coeff;
    } else {
      all_exact = false;
      amps[r.index] += c.approx;
    }
  }

  bool any_nonzero = false;
  for (const Cplx& a : amps)
    if (a != Cplx(0.0, 0.0)) any_nonzero = true;
  if (all_exact) {
    any_nonzero = false;
    for (auto& [idx, parts] : exact_parts)
      for (auto& [root, coeff] : parts)
        if (!coeff.is_zero()) any_nonzero = true;
  }
  if (!any_nonzero)
    throw KetParseError("expression denotes the zero state", 0);

  ParsedState result;
  result.value = StateF{n, std::move(amps)};

  if (all_exact) {
    // Exact representation requires one common square-free root across all
    // nonzero merged coefficients.
    unsigned long long common_root = 0;
    bool representable = true;
    for (auto& [idx, parts] : exact_parts) {
      for (auto& [root, coeff] : parts) {
        if (coeff.is_zero()) continue;
        if (common_root == 0) {
          common_root = root;
        } else if (common_root != root) {
          representable = false;
        }
      }
    }
    if (representable) {
      if (common_root == 0) common_root = 1;
      StateQ numerator{n, std::vector<GaussianRational>(dim)};
      for (auto& [idx, parts] : exact_parts)
        for (auto& [root, coeff] : parts)
          if (!coeff.is_zero()) numerator.amps[idx] += coeff;
      result.numerator = std::move(numerator);
      result.root = static_cast<unsigned>(common_root);
    }
  }
  return result;
}

StateF parse_state(const std::string& text, std::optional<int> qubits) {
  return parse_ket(text, qubits).value;
}

namespace {

// Best rational approximation with bounded denominator (continued
// fractions).
bool rational_approx(double x, long long max_den, long long* num,
                     long long* den) {
  if (!std::isfinite(x)) return false;
  const bool neg = x < 0;
  double v = std::fabs(x);
  if (v > 1e15) return false;
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    const double fl = std::floor(v);
    if (fl > 9e17) return false;
    const long long a = static_cast<long long>(fl);
    const long long p2 = a * p1 + p0;
    const long long q2 = a * q1 + q0;
    if (q2 > max_den || q2 < 0 || p2 < 0) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double rem = v - fl;
    if (rem < 1e-15) break;
    v = 1.0 / rem;
  }
  if (q1 == 0) return false;
  *num = neg ? -p1 : p1;
  *den = q1;
  return true;
}

// Tries to represent every nonzero component of `amps` as (p/q)/sqrt(k) for
// the given k, reproducing each double bit-for-bit.  On success fills
// `rationals` (numerator Gaussian rationals).
bool recognize_with_root(const std::vector<Cplx>& amps, unsigned long long k,
                         std::vector<GaussianRational>* rationals) {
  const double sk = std::sqrt(static_cast<double>(k));
  for (std::size_t i = 0; i < amps.size(); ++i) {
    for (int part = 0; part < 2; ++part) {
      const double comp = part == 0 ? amps[i].real() : amps[i].imag();
      Rational* slot = part == 0 ? &(*rationals)[i].re : &(*rationals)[i].im;
      if (comp == 0.0) {
        *slot = 0;
        continue;
      }
      long long p = 0, q = 1;
      if (!rational_approx(comp * sk, 1000000, &p, &q)) return false;
      const Rational cand{BigInt(p), BigInt(q)};
      if (exact_component_value(cand, k) != comp) return false;
      *slot = cand;
    }
  }
  return true;
}

void append_signed_term(std::string* out, bool first, bool negative,
                        const std::string& body) {
  if (first) {
    if (negative) *out += "- ";
  } else {
    *out += negative ? " - " : " + ";
  }
  *out += body;
}

std::string rational_text(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1)
    os << "/" << boost::multiprecision::denominator(r);
  return os.str();
}

std::string ket_label(std::size_t index, int n, bool decimal_labels) {
  if (decimal_labels) return "|" + std::to_string(index) + ">";
  std::string bits(n, '0');
  for (int b = 0; b < n; ++b)
    if (index & (std::size_t{1} << (n - 1 - b))) bits[b] = '1';
  return "|" + bits + ">";
}

bool use_decimal_labels(std::size_t max_nonzero_index, int n) {
  return std::max(2, bit_width_of(max_nonzero_index)) == n;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// Renders one exact component p/q (positive) with optional imaginary marker.
std::string exact_coeff_text(const Rational& magnitude, bool imaginary) {
  std::string body;
  if (magnitude != 1)
    body += rational_text(magnitude);
  if (imaginary) body += "i";
  return body;
}

std::string format_exact_terms(const std::vector<GaussianRational>& rationals,
                               int n, unsigned long long root) {
  std::size_t max_idx = 0;
  for (std::size_t i = 0; i < rationals.size(); ++i)
    if (!rationals[i].is_zero()) max_idx = i;
  const bool decimal_labels = use_decimal_labels(max_idx, n);

  std::string sum;
  bool first = true;
  for (std::size_t i = 0; i < rationals.size(); ++i) {
    const GaussianRational& g = rationals[i];
    for (int part = 0; part < 2; ++part) {
      const Rational& comp = part == 0 ? g.re : g.im;
      if (comp == 0) continue;
      const bool negative = comp < 0;
      const Rational magnitude = negative ? Rational(-comp) : comp;
      append_signed_term(&sum, first, negative,
                         exact_coeff_text(magnitude, part == 1) +
                             ket_label(i, n, decimal_labels));
      first = false;
    }
  }
  if (root > 1) return "(" + sum + ")/sqrt(" + std::to_string(root) + ")";
  return sum;
}

}  // namespace

std::string format_ket(const StateF& s) {
  bool any = false;
  for (const Cplx& a : s.amps)
    if (a != Cplx(0.0, 0.0)) any = true;
  if (!any) return "0";

  // Prefer an exact rendering over a common square-free root.
  for (unsigned long long k = 1; k <= 400; ++k) {
    if (split_square(k).square_part != 1) continue;
    std::vector<GaussianRational> rationals(s.amps.size());
    if (recognize_with_root(s.amps, k, &rationals))
      return format_exact_terms(rationals, s.qubits, k);
  }

  std::size_t max_idx = 0;
  for (std::size_t i = 0; i < s.amps.size(); ++i)
    if (s.amps[i] != Cplx(0.0, 0.0)) max_idx = i;
  const bool decimal_labels = use_decimal_labels(max_idx, s.qubits);

  std::string sum;
  bool first = true;
  for (std::size_t i = 0; i < s.amps.size(); ++i) {
    for (int part = 0; part < 2; ++part) {
      const double comp = part == 0 ? s.amps[i].real() : s.amps[i].imag();
      if (comp == 0.0) continue;
      const bool negative = comp < 0;
      std::string coeff = format_double(std::fabs(comp));
      std::string body;
      if (coeff != "1") body += coeff;
      if (part == 1) body += "i";
      body += ket_label(i, s.qubits, decimal_labels);
      append_signed_term(&sum, first, negative, body);
      first = false;
    }
  }
  return sum;
}

std::string format_ket(const StateQ& numerator, unsigned root) {
  bool any = false;
  for (const GaussianRational& a : numerator.amps)
    if (!a.is_zero()) any = true;
  if (!any) return "0";
  return format_exact_terms(numerator.amps, numerator.qubits, root);
}

std::string format_ket(const ParsedState& s) {
  if (s.exact()) return format_ket(*s.numerator, s.root);
  return format_ket(s.value);
}

ParsedState load_ket_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open state file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();

  std::optional<int> declared;
  static const std::regex header(R"(^\s*qubits\s*:\s*([0-9]+)\s*)");
  std::smatch m;
  if (std::regex_search(text, m, header) && m.position(0) == 0) {
    declared = std::stoi(m[1].str());
    text = text.substr(static_cast<std::size_t>(m.length(0)));
  }
  return parse_ket(text, declared);
}

}  // namespace slocc
