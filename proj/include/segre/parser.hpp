#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "segre/chow.hpp"
#include "segre/ideal_ops.hpp"

namespace segre {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Polynomial over Z, kept exact until a prime is chosen.
struct IntPolynomial {
  std::map<std::vector<int>, Integer> terms;  // exponent vector -> nonzero coefficient

  bool is_zero() const { return terms.empty(); }
  /// -1 for the zero polynomial, -2 when not homogeneous.
  int homogeneous_degree() const;
  Polynomial reduce(const RingPtr& ring) const;
  std::string to_string(const std::vector<std::string>& names) const;
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

struct NamedIdeal {
  std::string name;
  std::vector<IntPolynomial> gens;
  friend bool operator==(const NamedIdeal&, const NamedIdeal&) = default;
};

struct InputDocument {
  std::optional<std::uint64_t> prime;
  std::vector<std::string> variables;
  std::vector<NamedIdeal> ideals;

  const NamedIdeal* find(const std::string& name) const;
  RingPtr ring(const PrimeField& field) const;
  /// Throws std::invalid_argument for an unknown name.
  ProjectiveScheme scheme(const std::string& name, const RingPtr& ring) const;
  /// Text that parses back to the same document.
  std::string to_string() const;
  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

InputDocument parse_input(const std::string& text);

/// One polynomial over the variables of `ring`, e.g. "x*y - z^2".
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);
/// Comma-separated homogeneous polynomials as a projective scheme.
ProjectiveScheme parse_scheme(const RingPtr& ring, const std::string& text);

}  // namespace segre
