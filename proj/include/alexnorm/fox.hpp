#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alexnorm/kernels.hpp"
#include "alexnorm/laurent.hpp"
#include "alexnorm/surgery.hpp"

namespace alexnorm {

struct Letter {
  std::size_t gen;  ///< 0-based generator index
  int exp;          ///< +1 or -1

  bool operator==(const Letter&) const = default;
};

/// A word in a free group.
class FreeWord {
 public:
  FreeWord() = default;
  FreeWord(std::initializer_list<Letter> letters);
  explicit FreeWord(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  FreeWord reduced() const;
  FreeWord inverse() const;
  FreeWord operator*(const FreeWord& o) const;
  bool operator==(const FreeWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Words are written `x1 x2^-1 x3` with 1-based generator numbers.
std::string to_string(const FreeWord& w);
FreeWord parse_word(std::string_view text);

/// Finite presentation together with an abelianization onto Z^mu.
class GroupPresentation {
 public:
  /// Validates that every relator abelianizes to zero and that the
  /// abelianization is onto Z^mu (all invariant factors equal to one).
  GroupPresentation(std::size_t generators, std::vector<FreeWord> relators, std::vector<ExponentVector> abelianization);

  std::size_t generator_count() const { return generators_; }
  std::size_t arity() const { return arity_; }
  const std::vector<FreeWord>& relators() const { return relators_; }
  const std::vector<ExponentVector>& abelianization() const { return ab_; }

  ExponentVector abelianize(const FreeWord& w) const;

 private:
  std::size_t generators_;
  std::size_t arity_;
  std::vector<FreeWord> relators_;
  std::vector<ExponentVector> ab_;
};

/// `gen <n>`, `ab <g> <e1> ... <emu>` for every generator, `rel <word>` lines.
std::string to_text(const GroupPresentation& p);
GroupPresentation parse_presentation(std::string_view text);

/// Planar diagram code. Crossing `X a b c d s`: a is the incoming under
/// edge, c the outgoing under edge, and a, b, c, d run counterclockwise.
/// For s = +1 the over strand runs d -> b, for s = -1 it runs b -> d.
struct PDCrossing {
  std::array<int, 4> edges;
  int sign;
};

struct PDCode {
  std::vector<PDCrossing> crossings;
  std::vector<std::vector<int>> components;  ///< edge labels in orientation order

  std::size_t component_of(int edge) const;
};

PDCode parse_pd(std::string_view text);
std::string to_text(const PDCode& pd);

/// Half the signed count of crossings between distinct components.
IntMatrix linking_numbers(const PDCode& pd);

/// One generator per arc, one relator per crossing; each arc abelianizes to
/// the basis vector of its component.
GroupPresentation wirtinger_from_pd(const PDCode& pd);

/// Fox derivative of w with respect to generator g, pushed through the
/// abelianization.
LaurentPoly fox_derivative_abelianized(const FreeWord& w, std::size_t g, const std::vector<ExponentVector>& ab);

using AlexanderMatrix = kernels::PolyMatrix;

AlexanderMatrix alexander_matrix(const GroupPresentation& pres);

struct AlexanderOptions {
  /// Relator row to drop; defaults to the last.
  std::optional<std::size_t> dropped_relator;
  bool parallel = true;
};

struct AlexanderResult {
  LaurentPoly polynomial;
  std::vector<LaurentPoly> minors;     ///< D_j, column j deleted
  std::vector<LaurentPoly> quotients;  ///< D_j / (ab(x_j) - 1), or D_j for knots
  std::optional<std::size_t> dropped_relator;  ///< empty when no row was dropped
};

/// Multivariable Alexander polynomial up to units, in normalize_units form.
/// For one variable the column-deleted minors are used as they are; for
/// mu >= 2 each D_j is divided by ab(x_j) - 1 and all quotients must agree.
AlexanderResult alexander_polynomial_details(const GroupPresentation& pres, const AlexanderOptions& opt = {});
LaurentPoly alexander_polynomial(const GroupPresentation& pres, const AlexanderOptions& opt = {});

}  // namespace alexnorm
