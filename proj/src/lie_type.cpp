#include "liebranch/lie_type.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace liebranch {

namespace {

Family family_from_char(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
  }
  throw UsageError(std::string("unknown Lie family '") + c + "'");
}

}  // namespace

bool SimpleLieType::is_canonical(Family family, int rank) {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 3;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

SimpleLieType::SimpleLieType(Family family, int rank) : family_(family), rank_(rank) {
  if (!is_canonical(family, rank)) {
    throw UsageError("non-canonical simple type " + std::string(1, static_cast<char>(family)) +
                     std::to_string(rank));
  }
}

std::string SimpleLieType::name() const {
  return std::string(1, static_cast<char>(family_)) + std::to_string(rank_);
}

LieType::LieType(std::vector<SimpleLieType> factors, int torus_rank)
    : factors_(std::move(factors)), torus_rank_(torus_rank) {
  if (torus_rank < 0) throw UsageError("negative torus rank");
}

LieType LieType::from_family(Family family, int rank) {
  if (rank < 0) throw UsageError("negative rank");
  if (SimpleLieType::is_canonical(family, rank)) return LieType{SimpleLieType(family, rank)};
  switch (family) {
    case Family::B:
    case Family::C:
      if (rank == 0) return LieType{};
      if (rank == 1) return LieType{SimpleLieType(Family::A, 1)};
      if (rank == 2) return LieType{SimpleLieType(Family::B, 2)};
      break;
    case Family::D:
      if (rank == 0) return LieType{};
      if (rank == 2) return LieType({SimpleLieType(Family::A, 1), SimpleLieType(Family::A, 1)});
      if (rank == 3) return LieType{SimpleLieType(Family::A, 3)};
      // D1 is a one-dimensional torus.
      if (rank == 1) return LieType({}, 1);
      break;
    default:
      break;
  }
  throw UsageError("invalid Lie type " + std::string(1, static_cast<char>(family)) +
                   std::to_string(rank));
}

LieType LieType::parse(std::string_view text) {
  LieType result;
  std::size_t pos = 0;
  if (text.empty()) throw UsageError("empty Lie type");
  while (pos < text.size()) {
    char letter = text[pos++];
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw UsageError("missing rank in Lie type '" + std::string(text) + "'");
    int rank = 0;
    std::from_chars(text.data() + start, text.data() + pos, rank);
    if (letter == 'T' || letter == 't') {
      result.torus_rank_ += rank;
      continue;
    }
    if (rank == 0) throw UsageError("zero rank in Lie type '" + std::string(text) + "'");
    result = result * from_family(family_from_char(letter), rank);
  }
  return result;
}

int LieType::semisimple_rank() const {
  int r = 0;
  for (const auto& f : factors_) r += f.rank();
  return r;
}

const SimpleLieType& LieType::simple() const {
  if (factors_.size() != 1) throw UsageError("type " + name() + " is not simple");
  return factors_.front();
}

LieType LieType::operator*(const LieType& other) const {
  LieType out = *this;
  out.factors_.insert(out.factors_.end(), other.factors_.begin(), other.factors_.end());
  out.torus_rank_ += other.torus_rank_;
  return out;
}

std::string LieType::name() const {
  std::string s;
  for (const auto& f : factors_) s += f.name();
  if (torus_rank_ > 0 || s.empty()) s += "T" + std::to_string(torus_rank_);
  return s;
}

bool Weight::is_dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

bool operator<(const Weight& a, const Weight& b) {
  if (a.coords != b.coords) return a.coords < b.coords;
  return std::lexicographical_compare(a.central.begin(), a.central.end(), b.central.begin(),
                                      b.central.end());
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw UsageError("bad rational '" + std::string(text) + "'");
    }
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  long long den = parse_int(text.substr(slash + 1));
  if (den == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

}  // namespace liebranch
