#pragma once

#include <string>
#include <vector>

#include "permeq/linalg.hpp"

namespace permeq {

/// Commutative Frobenius algebra over the dataset field: structure tensors in
/// a declared basis.  The coproduct is always derived from (mul, counit);
/// construction validates every axiom and throws ValidationError with a
/// witness otherwise.
class FrobeniusAlgebra {
  public:
    /// mul[i][j][k] = coefficient of e_k in e_i * e_j.
    static FrobeniusAlgebra build(unsigned dim,
                                  std::vector<std::vector<std::vector<Scalar>>> mul,
                                  std::vector<Scalar> unit, std::vector<Scalar> counit,
                                  std::vector<std::string> basis_names = {});

    unsigned dim() const { return dim_; }
    unsigned conductor() const { return conductor_; }
    const std::vector<std::string>& basis_names() const { return names_; }

    const Scalar& mul(unsigned i, unsigned j, unsigned k) const { return mul_[i][j][k]; }
    const std::vector<Scalar>& unit() const { return unit_; }
    const std::vector<Scalar>& counit() const { return counit_; }
    /// comul[i] as a dim x dim matrix: Delta(e_i) = sum_{j,k} comul(i)[j][k] e_j (x) e_k.
    const Mat& comul(unsigned i) const { return comul_[i]; }

    /// Matrix of multiplication R (x) R -> R (row index k, column index i*dim+j).
    Mat mul_matrix() const;
    /// Matrix of comultiplication R -> R (x) R.
    Mat comul_matrix() const;
    /// Pairing kappa_{ij} = counit(e_i e_j).
    Mat pairing() const;

    std::vector<Scalar> multiply(const std::vector<Scalar>& a,
                                 const std::vector<Scalar>& b) const;
    /// The handle operator m . Delta applied to x.
    std::vector<Scalar> handle(const std::vector<Scalar>& x) const;

    /// Iterated multiplication R^{(x)k} -> R; k = 0 gives the unit map.
    Mat iterated_mul(unsigned k) const;
    /// Iterated comultiplication R -> R^{(x)k}; k = 0 gives the counit map.
    Mat iterated_comul(unsigned k) const;
    Mat handle_matrix() const;

  private:
    unsigned dim_ = 0;
    unsigned conductor_ = 1;
    std::vector<std::string> names_;
    std::vector<std::vector<std::vector<Scalar>>> mul_;
    std::vector<Scalar> unit_, counit_;
    std::vector<Mat> comul_;

    void derive_comul();
    void validate() const;
};

}  // namespace permeq
