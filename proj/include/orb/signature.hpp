#ifndef ORB_SIGNATURE_HPP_
#define ORB_SIGNATURE_HPP_

// Combinatorial closed 2-orbifolds: underlying surface, cone points,
// reflector circles (silvered boundary), and the invariants read off them.
//
// Signature grammar (ASCII):
//   sig        := surface cones reflectors
//   surface    := "S2" | "RP2" | "T" | "Kb" | "O" int(>=0) | "N" int(>=1)
//   cones      := "(" [ int ("," int)* ] ")"
//   reflectors := "[" [ circle ("," circle)* ] "]"
//   circle     := "*" | "*(" int ("," int)* ")"
// Examples: "S2(2,2,2,2)[]", "S2()[*,*]" (the silvered annulus),
// "RP2()[*]" (the silvered Moebius band), "S2(2,2)[*]".

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "orb/rational.hpp"

namespace orb {

struct OrbifoldSignature {
  bool orientable = true;
  Int genus = 0;  // crosscap count when non-orientable (>= 1)
  std::vector<Int> cone_orders;
  std::vector<std::vector<Int>> reflector_circles;  // corner orders per circle

  Int cone_count() const { return static_cast<Int>(cone_orders.size()); }
  Int circle_count() const { return static_cast<Int>(reflector_circles.size()); }

  bool has_corners() const {
    for (const auto& c : reflector_circles)
      if (!c.empty()) return true;
    return false;
  }

  bool all_cones_order_two() const {
    for (Int n : cone_orders)
      if (n != 2) return false;
    return true;
  }

  bool singular_locus_empty() const {
    return cone_orders.empty() && reflector_circles.empty();
  }

  // Sphere with a single cone point (the only in-scope bad orbifold).
  bool is_s2_one_cone() const {
    return orientable && genus == 0 && cone_count() == 1 && circle_count() == 0;
  }

  bool operator==(const OrbifoldSignature& o) const {
    return orientable == o.orientable && genus == o.genus &&
           cone_orders == o.cone_orders && reflector_circles == o.reflector_circles;
  }
};

struct SignatureParseError : std::runtime_error {
  size_t position;
  SignatureParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

namespace detail {

class SigParser {
 public:
  explicit SigParser(const std::string& text) : text_(text) {}

  OrbifoldSignature parse() {
    OrbifoldSignature sig;
    parse_surface(sig);
    expect('(');
    parse_int_list(sig.cone_orders, ')');
    for (Int n : sig.cone_orders)
      if (n < 2) fail("cone order must be at least 2");
    expect('[');
    if (!try_consume(']')) {
      while (true) {
        sig.reflector_circles.push_back(parse_circle());
        if (try_consume(']')) break;
        expect(',');
      }
    }
    if (pos_ != text_.size()) fail("trailing characters after signature");
    return sig;
  }

 private:
  void parse_surface(OrbifoldSignature& sig) {
    if (try_consume_word("S2")) {
      sig.orientable = true;
      sig.genus = 0;
    } else if (try_consume_word("RP2")) {
      sig.orientable = false;
      sig.genus = 1;
    } else if (try_consume_word("T")) {
      sig.orientable = true;
      sig.genus = 1;
    } else if (try_consume_word("Kb")) {
      sig.orientable = false;
      sig.genus = 2;
    } else if (try_consume_word("O")) {
      sig.orientable = true;
      sig.genus = parse_int();
    } else if (try_consume_word("N")) {
      sig.orientable = false;
      sig.genus = parse_int();
      if (sig.genus < 1) fail("crosscap count must be at least 1");
    } else {
      fail("expected surface symbol S2, RP2, T, Kb, O<n> or N<n>");
    }
  }

  std::vector<Int> parse_circle() {
    expect('*');
    std::vector<Int> corners;
    if (try_consume('(')) {
      parse_int_list(corners, ')');
      if (corners.empty()) fail("corner list must be nonempty");
      for (Int n : corners)
        if (n < 2) fail("corner order must be at least 2");
    }
    return corners;
  }

  void parse_int_list(std::vector<Int>& out, char close) {
    if (try_consume(close)) return;
    while (true) {
      out.push_back(parse_int());
      if (try_consume(close)) return;
      expect(',');
    }
  }

  Int parse_int() {
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected integer");
    return std::strtoll(text_.substr(start, pos_ - start).c_str(), nullptr, 10);
  }

  bool try_consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool try_consume_word(const std::string& w) {
    if (text_.compare(pos_, w.size(), w) == 0) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!try_consume(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& msg) { throw SignatureParseError(msg, pos_); }

  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace detail

inline OrbifoldSignature parse_signature(const std::string& text) {
  return detail::SigParser(text).parse();
}

inline std::string print_signature(const OrbifoldSignature& sig) {
  std::ostringstream os;
  if (sig.orientable) {
    if (sig.genus == 0) os << "S2";
    else if (sig.genus == 1) os << "T";
    else os << "O" << sig.genus;
  } else {
    if (sig.genus == 1) os << "RP2";
    else if (sig.genus == 2) os << "Kb";
    else os << "N" << sig.genus;
  }
  os << "(";
  for (size_t i = 0; i < sig.cone_orders.size(); ++i) {
    if (i) os << ",";
    os << sig.cone_orders[i];
  }
  os << ")[";
  for (size_t i = 0; i < sig.reflector_circles.size(); ++i) {
    if (i) os << ",";
    os << "*";
    const auto& corners = sig.reflector_circles[i];
    if (!corners.empty()) {
      os << "(";
      for (size_t j = 0; j < corners.size(); ++j) {
        if (j) os << ",";
        os << corners[j];
      }
      os << ")";
    }
  }
  os << "]";
  return os.str();
}

// chi^orb = chi(underlying surface cut along reflector circles)
//           - sum over cones (1 - 1/n) - 1/2 sum over corners (1 - 1/m).
inline Rational euler_characteristic(const OrbifoldSignature& sig) {
  Int surface_chi = sig.orientable ? 2 - 2 * sig.genus : 2 - sig.genus;
  Rational chi(checked_sub(surface_chi, sig.circle_count()));
  for (Int n : sig.cone_orders) chi = chi - (Rational(1) - Rational(1, n));
  for (const auto& circle : sig.reflector_circles)
    for (Int m : circle) chi = chi - (Rational(1, 2) * (Rational(1) - Rational(1, m)));
  return chi;
}

enum class GeometryClass { Spherical, Euclidean, Hyperbolic, Bad };

inline std::string to_string(GeometryClass g) {
  switch (g) {
    case GeometryClass::Spherical: return "spherical";
    case GeometryClass::Euclidean: return "euclidean";
    case GeometryClass::Hyperbolic: return "hyperbolic";
    case GeometryClass::Bad: return "bad";
  }
  return "?";
}

inline GeometryClass geometry_class(const OrbifoldSignature& sig) {
  if (sig.is_s2_one_cone()) return GeometryClass::Bad;
  int s = euler_characteristic(sig).sign();
  if (s > 0) return GeometryClass::Spherical;
  if (s == 0) return GeometryClass::Euclidean;
  return GeometryClass::Hyperbolic;
}

// Enumeration/ordering measure: k + r + genus + (1 if non-orientable).
inline Int complexity(const OrbifoldSignature& sig) {
  return sig.cone_count() + sig.circle_count() + sig.genus + (sig.orientable ? 0 : 1);
}

}  // namespace orb

#endif  // ORB_SIGNATURE_HPP_
