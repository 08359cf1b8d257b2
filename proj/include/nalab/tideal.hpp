#pragma once

#include <map>
#include <string>
#include <vector>

#include "nalab/presets.hpp"
#include "nalab/rational.hpp"

namespace nalab {

/// Number of multilinear nonassociative monomials of degree n
/// (tree shapes times permutations).
Integer multilinear_monomial_count(int n);

/// Sparse matrix whose columns are the degree-n multilinear monomials and
/// whose rows span the multilinear component of the T-ideal generated by the
/// defining identities.
struct MultilinearMatrix {
  int degree = 0;
  std::vector<std::string> columns;  // canonical monomial text per column id
  std::vector<std::map<int, Rational>> rows;
  std::vector<std::string> row_descs;

  int rank() const;
  int rank_with_order(const std::vector<std::size_t>& order) const;
};

MultilinearMatrix tideal_multilinear_span(const std::vector<const IdentityPreset*>& defining,
                                          int n, bool allow_degree6 = false,
                                          const std::vector<int>& central_vars = {});

struct ConsequenceCertificate {
  std::string verdict;  // "MEMBER" | "NOT_MEMBER"
  int degree = 0;
  std::string candidate;  // canonical term text over x1..xn

  struct Part {
    std::string description;  // provenance of the row
    std::string row;          // the row as a term polynomial (parseable)
    Rational coeff;
  };
  std::vector<Part> parts;  // MEMBER: candidate = sum coeff * row

  std::map<std::string, Rational> functional;  // NOT_MEMBER: separating covector

  long long rows_generated = 0;
  int span_rank = 0;
};

/// Exact membership of the multilinear degree-n candidate in the multilinear
/// component of the T-ideal of the defining identities. `central_vars` lists
/// candidate variables hypothesised central: rows [x_j, w] are adjoined and
/// only these variables may fill central defining slots.
ConsequenceCertificate is_consequence(const TermPoly& candidate,
                                      const std::vector<const IdentityPreset*>& defining, int n,
                                      bool allow_degree6 = false,
                                      const std::vector<int>& central_vars = {});

/// Soundness checks: MEMBER certificates re-expand exactly to the candidate;
/// NOT_MEMBER functionals annihilate every generated row and not the
/// candidate.
bool verify_member_certificate(const ConsequenceCertificate& cert, const TermPoly& candidate);
bool verify_not_member_certificate(const ConsequenceCertificate& cert, const TermPoly& candidate,
                                   const std::vector<const IdentityPreset*>& defining,
                                   bool allow_degree6 = false,
                                   const std::vector<int>& central_vars = {});

}  // namespace nalab
