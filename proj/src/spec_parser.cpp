#include <array>
#include <cctype>
#include <charconv>
#include <string>
#include <utility>

#include "hlab/sequences.hpp"

namespace hlab {

namespace {

struct FamilyName {
  std::string_view name;
  Family family;
  char key;  // '\0' when the family takes no parameter
};

constexpr std::array<FamilyName, 10> kFamilies{{
    {"catalan", Family::Catalan, '\0'},
    {"central-binomial", Family::CentralBinomial, '\0'},
    {"catconv", Family::CatConv, 'r'},
    {"u", Family::U, 'r'},
    {"narayana", Family::Narayana, '\0'},
    {"narayana-b", Family::NarayanaB, '\0'},
    {"convpoly", Family::ConvPoly, 'm'},
    {"fibonacci", Family::Fibonacci, '\0'},
    {"lucas", Family::Lucas, '\0'},
    {"f-number", Family::FNumber, 'r'},
}};

struct TransformName {
  std::string_view name;
  TransformKind kind;
};

constexpr std::array<TransformName, 7> kTransforms{{
    {"shift", TransformKind::Shift},
    {"double-signed", TransformKind::DoubleSigned},
    {"aerate", TransformKind::Aerate},
    {"abs", TransformKind::Abs},
    {"consecutive-sum", TransformKind::ConsecutiveSum},
    {"eval", TransformKind::EvalAt},
    {"scale", TransformKind::Scale},
}};

struct Token {
  std::string_view text;
  std::size_t pos;
};

std::vector<Token> split(std::string_view text, std::size_t base, char sep) {
  std::vector<Token> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      out.push_back({text.substr(start, i - start), base + start});
      start = i + 1;
    }
  }
  return out;
}

Token trim(Token t) {
  std::size_t b = 0;
  std::size_t e = t.text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(t.text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(t.text[e - 1]))) --e;
  return {t.text.substr(b, e - b), t.pos + b};
}

long parse_int(Token t) {
  long value = 0;
  std::string_view s = t.text;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("expected an integer, got '" + std::string(t.text) + "'", t.pos);
  }
  return value;
}

Rational parse_rational_token(Token t) {
  try {
    return parse_rational(t.text);
  } catch (const ParseError&) {
    throw ParseError("expected a rational number, got '" + std::string(t.text) + "'", t.pos);
  }
}

}  // namespace

SequenceSpec parse_spec(std::string_view text) {
  const std::vector<Token> segments = split(text, 0, '|');
  SequenceSpec spec;

  // family[:key=int]*
  const std::vector<Token> head = split(segments[0].text, segments[0].pos, ':');
  const Token fam = trim(head[0]);
  const FamilyName* family = nullptr;
  for (const auto& f : kFamilies) {
    if (f.name == fam.text) family = &f;
  }
  if (family == nullptr) throw ParseError("unknown family '" + std::string(fam.text) + "'", fam.pos);
  spec.family = family->family;
  bool have_param = false;
  for (std::size_t i = 1; i < head.size(); ++i) {
    const Token kv = trim(head[i]);
    const std::size_t eq = kv.text.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key=int, got '" + std::string(kv.text) + "'", kv.pos);
    const Token key = trim({kv.text.substr(0, eq), kv.pos});
    if (family->key == '\0' || key.text.size() != 1 || key.text[0] != family->key) {
      throw ParseError("unknown parameter '" + std::string(key.text) + "' for family '" + std::string(family->name) + "'",
                       key.pos);
    }
    if (have_param) throw ParseError("parameter given twice", key.pos);
    const Token value = trim({kv.text.substr(eq + 1), kv.pos + eq + 1});
    spec.param = parse_int(value);
    have_param = true;
    const bool positive_only = family->family != Family::FNumber;
    if (positive_only && spec.param < 1) {
      throw ParseError(std::string("parameter ") + family->key + " must be >= 1", value.pos);
    }
  }
  if (family->key != '\0' && !have_param) {
    throw ParseError(std::string("family '") + std::string(family->name) + "' needs " + family->key + "=<int>",
                     fam.pos + fam.text.size());
  }

  // ("|" transform[:arg])*
  TermKind kind = base_kind(spec.family);
  for (std::size_t s = 1; s < segments.size(); ++s) {
    const std::vector<Token> parts = split(segments[s].text, segments[s].pos, ':');
    const Token name = trim(parts[0]);
    const TransformName* tn = nullptr;
    for (const auto& t : kTransforms) {
      if (t.name == name.text) tn = &t;
    }
    if (tn == nullptr) throw ParseError("unknown transform '" + std::string(name.text) + "'", name.pos);
    Transform tr{tn->kind};
    const bool takes_arg =
        tn->kind == TransformKind::Shift || tn->kind == TransformKind::EvalAt || tn->kind == TransformKind::Scale;
    if (parts.size() > 2) throw ParseError("too many ':' in transform", parts[2].pos - 1);
    if (takes_arg && parts.size() != 2) {
      throw ParseError("transform '" + std::string(tn->name) + "' needs an argument", name.pos + name.text.size());
    }
    if (!takes_arg && parts.size() != 1) {
      throw ParseError("transform '" + std::string(tn->name) + "' takes no argument", parts[1].pos);
    }
    if (takes_arg) {
      const Token arg = trim(parts[1]);
      switch (tn->kind) {
        case TransformKind::Shift:
          tr.shift = parse_int(arg);
          if (tr.shift < 0) throw ParseError("shift must be >= 0", arg.pos);
          break;
        case TransformKind::EvalAt: {
          const std::size_t eq = arg.text.find('=');
          if (eq == std::string_view::npos || trim({arg.text.substr(0, eq), arg.pos}).text != "t") {
            throw ParseError("eval expects t=<rational>", arg.pos);
          }
          tr.value = parse_rational_token(trim({arg.text.substr(eq + 1), arg.pos + eq + 1}));
          break;
        }
        default:
          tr.value = parse_rational_token(arg);
          break;
      }
    }
    if (tr.kind == TransformKind::EvalAt) {
      if (kind != TermKind::Polynomial) throw ParseError("eval-at applied to an integer family", name.pos);
      kind = TermKind::Scalar;
    }
    if (tr.kind == TransformKind::Abs && kind != TermKind::Scalar) {
      throw ParseError("abs applied to polynomial terms", name.pos);
    }
    spec.transforms.push_back(tr);
  }
  return spec;
}

std::string to_string(const SequenceSpec& spec) {
  std::string out;
  for (const auto& f : kFamilies) {
    if (f.family != spec.family) continue;
    out = std::string(f.name);
    if (f.key != '\0') out += std::string(":") + f.key + "=" + std::to_string(spec.param);
  }
  for (const Transform& tr : spec.transforms) {
    for (const auto& t : kTransforms) {
      if (t.kind == tr.kind) out += "|" + std::string(t.name);
    }
    if (tr.kind == TransformKind::Shift) out += ":" + std::to_string(tr.shift);
    if (tr.kind == TransformKind::EvalAt) out += ":t=" + to_string(tr.value);
    if (tr.kind == TransformKind::Scale) out += ":" + to_string(tr.value);
  }
  return out;
}

}  // namespace hlab
