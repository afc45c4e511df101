#pragma once

#include <string>
#include <vector>

#include "apoly/errors.hpp"

namespace apoly {

/// Integer partition. Stored trimmed (no trailing zeros); zero-padding is a
/// presentation concern handled by padded()/to_string_padded().
class Partition {
 public:
  Partition() = default;
  /// Validates weak decrease, trims trailing zeros.
  explicit Partition(std::vector<int> parts);

  /// "3,2,2,1"; "0" parses to the empty partition.
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int num_parts() const { return static_cast<int>(parts_.size()); }
  /// 1-based; zero beyond the stored parts.
  int part(int i) const;
  int sum() const;

  std::vector<int> padded(int n) const;

  Partition conjugate() const;

  /// Side length of the Durfee square.
  int durfee() const;

  std::string to_string() const;
  std::string to_string_padded(int n) const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }
  /// Canonical order: lexicographic on the zero-padded part lists.
  bool operator<(const Partition& o) const;

 private:
  std::vector<int> parts_;
};

/// Frobenius coordinates (a_1,...,a_l | b_1,...,b_l), both strictly
/// decreasing and non-negative, l the Durfee side.
struct FrobeniusForm {
  std::vector<int> arms;
  std::vector<int> legs;

  /// "(2,0|4,2)" or "(|)".
  static FrobeniusForm parse(const std::string& text);
  std::string to_string() const;

  int size() const { return static_cast<int>(arms.size()); }
  bool operator==(const FrobeniusForm& o) const {
    return arms == o.arms && legs == o.legs;
  }
};

FrobeniusForm to_frobenius(const Partition& p);
/// Validates strict decrease of both coordinate lists.
Partition from_frobenius(const FrobeniusForm& f);

/// lambda_1 <= n-1 and a_i < b_i in Frobenius form (at most n parts).
bool is_modified_balanced(const Partition& p, int n);

/// All modified balanced partitions of size n in canonical order; there are
/// Catalan(n) of them.
std::vector<Partition> enumerate_modified_balanced(int n);

/// Lattice path over {N, E} with the Dyck prefix property.
class DyckPath {
 public:
  /// Accepts raw "NNEE" or run-length "N2 E2" text.
  static DyckPath parse(const std::string& text);
  /// Validates: equal N/E counts, every prefix has #N >= #E.
  explicit DyckPath(std::string steps);

  const std::string& steps() const { return steps_; }
  int semilength() const { return static_cast<int>(steps_.size() / 2); }
  /// "N2 E1 N2 E2 N1 E2"
  std::string run_length() const;

  bool operator==(const DyckPath& o) const { return steps_ == o.steps_; }

 private:
  std::string steps_;
};

/// The Catalan bijection: modified balanced partitions of size n onto Dyck
/// paths of semilength n.
DyckPath dyck_encode(const Partition& p, int n);
Partition dyck_decode(const DyckPath& path);

}  // namespace apoly
