#include "weyl/field.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <string>

#include "weyl/error.hpp"

namespace weyl {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::NotContaining: return "NotContaining";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::NoRoundups: return "NoRoundups";
    case ErrorKind::NotGrassmann: return "NotGrassmann";
    case ErrorKind::DirectionAmbiguous: return "DirectionAmbiguous";
    case ErrorKind::SeriesDiverged: return "SeriesDiverged";
    case ErrorKind::NotTypeI: return "NotTypeI";
    case ErrorKind::UnrecognizedStructure: return "UnrecognizedStructure";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::UnsupportedSpec: return "UnsupportedSpec";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

// GF(4) = GF(2)[x]/(x^2+x+1) with 2 = x and 3 = x+1.
constexpr std::array<std::uint8_t, 16> kGf4Add = {0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0};
constexpr std::array<std::uint8_t, 16> kGf4Mul = {0, 0, 0, 0, 0, 1, 2, 3, 0, 2, 3, 1, 0, 3, 1, 2};

}  // namespace

bool FieldSpec::supported(int q) { return q == 2 || q == 3 || q == 4 || q == 5 || q == 7; }

FieldSpec::FieldSpec(int q) : q_(q) {
  if (!supported(q)) throw Error(ErrorKind::UnsupportedOrder, "q=" + std::to_string(q));
  add_.resize(q * q);
  mul_.resize(q * q);
  if (q == 4) {
    p_ = 2;
    e_ = 2;
    for (int k = 0; k < 16; ++k) {
      add_[k] = kGf4Add[k];
      mul_[k] = kGf4Mul[k];
    }
  } else {
    p_ = q;
    e_ = 1;
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        add_[a * q + b] = static_cast<Elem>((a + b) % q);
        mul_[a * q + b] = static_cast<Elem>((a * b) % q);
      }
  }

  neg_.assign(q, 0);
  inv_.assign(q, 0);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      if (add_[a * q + b] == 0) neg_[a] = static_cast<Elem>(b);
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<Elem>(b);
    }

  frob_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    Elem r = 1;
    for (int t = 0; t < p_; ++t) r = mul_[r * q + a];
    frob_[a] = r;
  }

  for (int g = 1; g < q; ++g) {
    int ord = 1;
    Elem x = static_cast<Elem>(g);
    while (x != 1) {
      x = mul_[x * q + g];
      ++ord;
    }
    if (ord == q - 1) {
      primitive_ = static_cast<Elem>(g);
      break;
    }
  }

  verify();
}

void FieldSpec::verify() const {
  auto fail = [&](const char* what) {
    throw Error(ErrorKind::AxiomViolation, std::string(what) + " fails for q=" + std::to_string(q_));
  };
  for (int a = 0; a < q_; ++a) {
    if (add(a, 0) != a || mul(a, 1) != a) fail("identity");
    if (add(a, neg(a)) != 0) fail("additive inverse");
    if (a != 0 && mul(a, inv(a)) != 1) fail("multiplicative inverse");
    for (int b = 0; b < q_; ++b) {
      if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) fail("commutativity");
      for (int c = 0; c < q_; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) fail("additive associativity");
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("multiplicative associativity");
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("distributivity");
      }
    }
  }
}

const FieldSpec& FieldSpec::get(int q) {
  static std::mutex mu;
  static std::array<std::unique_ptr<FieldSpec>, 8> cache;
  if (!supported(q)) throw Error(ErrorKind::UnsupportedOrder, "q=" + std::to_string(q));
  std::lock_guard lock(mu);
  if (!cache[q]) cache[q] = std::make_unique<FieldSpec>(q);
  return *cache[q];
}

}  // namespace weyl
