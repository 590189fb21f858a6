#pragma once

#include <array>
#include <utility>
#include <vector>

#include "skly3/matrix.hpp"

namespace skly3 {

// Generators are indexed x = 0, y = 1, z = 2 throughout.

struct SklyParams {
  Scalar a, b, c;
};

// Throws ParamsInForbiddenLocus naming the condition that fired.
void validate_params(const Field& F, const SklyParams& p);

// f_k = sum_{i,j} lam[k][i][j] x_i x_j, the word x_i x_j meaning "first x_i,
// then x_j".
struct RelationTensor {
  std::array<std::array<std::array<Scalar, 3>, 3>, 3> lam;

  static RelationTensor from_params(const SklyParams& p);
  const Scalar& at(int k, int i, int j) const { return lam[k][i][j]; }
};

// Degreewise model of A = Skly3(a,b,c): basis dimensions, right and left
// multiplication by the generators, and word decompositions of the chosen
// basis (basis element f of degree d is the image of b_m * x_j for
// words[d][f] = (m, j)).
class AlgebraTable {
 public:
  AlgebraTable(const Field& F, const SklyParams& p, int md)
      : field(F), params(p), rel(RelationTensor::from_params(p)), max_deg(md) {}

  Field field;
  SklyParams params;
  RelationTensor rel;
  int max_deg;
  std::vector<int> dims;
  std::vector<std::pair<int, int>> words_at(int d) const { return words_[d]; }

  // A_d -> A_{d+1}
  const Matrix& rmul_gen(int g, int d) const { return rmul_[g][d]; }
  const Matrix& lmul_gen(int g, int d) const { return lmul_[g][d]; }

  // Multiplication by a homogeneous element w of degree e, as A_d -> A_{d+e}.
  Matrix rmul_elem(int e, const std::vector<Scalar>& w, int d) const;
  Matrix lmul_elem(int e, const std::vector<Scalar>& w, int d) const;

  friend AlgebraTable build_algebra(const Field& F, const SklyParams& p, int max_deg);

 private:
  std::vector<std::vector<std::pair<int, int>>> words_;
  std::array<std::vector<Matrix>, 3> rmul_, lmul_;

  Matrix rmul_basis(int e, int f, int d) const;
  Matrix lmul_basis(int e, int f, int d) const;
};

AlgebraTable build_algebra(const Field& F, const SklyParams& p, int max_deg);

// The degree-3 central element, normalized so its first nonzero coordinate
// (degree-3 basis order) is 1. Throws NoCentralCubic / CenterTooBig.
std::vector<Scalar> find_central_cubic(const AlgebraTable& T);

enum class QuotientSide { RightQuotient, LeftQuotient };  // A/wA resp. A/Aw

// Cyclic quotient module, degreewise. For the right quotient A/wA the stored
// action is right multiplication by the generators, for A/Aw it is left
// multiplication; proj/section tie module coordinates back to A.
struct CyclicModuleTable {
  QuotientSide side;
  int wdeg;
  std::vector<Scalar> w;
  std::vector<int> dims;

  const Matrix& act(int g, int d) const { return act_[g][d]; }   // M_d -> M_{d+1}
  const Matrix& proj(int d) const { return proj_[d]; }           // A_d -> M_d
  const Matrix& section(int d) const { return section_[d]; }     // M_d -> A_d

  std::array<std::vector<Matrix>, 3> act_;
  std::vector<Matrix> proj_, section_;
};

CyclicModuleTable cyclic_quotient(const AlgebraTable& T, int wdeg,
                                  const std::vector<Scalar>& w, QuotientSide side);

std::vector<int> hilbert_data(const std::vector<int>& dims, int through);

}  // namespace skly3
