// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gcodelab/ffield.hpp"
#include "gcodelab/group.hpp"
#include "gcodelab/linalg.hpp"

namespace gcodelab {

/// An element sum_g a_g g of the group algebra F_p G; coefficient i belongs to element index i.
class AlgElem {
public:
    /// The zero element.
    AlgElem(GroupPtr group, FieldSpec spec);
    /// Coefficients are reduced mod p; length must equal the group order.
    AlgElem(GroupPtr group, FieldSpec spec, Vector coeffs);

    static AlgElem one(GroupPtr group, FieldSpec spec);
    static AlgElem basis(GroupPtr group, FieldSpec spec, Elem g);
    /// sum_{g in G} g
    static AlgElem all_ones(GroupPtr group, FieldSpec spec);
    /// sum_{g in S} g
    static AlgElem indicator(GroupPtr group, FieldSpec spec, const std::vector<Elem>& elems);
    /// Comma separated residues in index order, e.g. "1,2".
    static AlgElem parse(GroupPtr group, FieldSpec spec, std::string_view text);

    const GroupPtr& group() const noexcept { return group_; }
    const FieldSpec& spec() const noexcept { return spec_; }
    const Vector& coeffs() const noexcept { return coeffs_; }
    Residue operator[](Elem g) const { return coeffs_[g]; }
    FieldElem coeff(Elem g) const { return {spec_, coeffs_[g]}; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    bool is_zero() const;

    std::string to_string() const;

    friend bool operator==(const AlgElem& a, const AlgElem& b) {
        return a.group_ == b.group_ && a.spec_ == b.spec_ && a.coeffs_ == b.coeffs_;
    }

private:
    GroupPtr group_;
    FieldSpec spec_;
    Vector coeffs_;
};

std::vector<Elem> support(const AlgElem& f);
std::size_t weight(const AlgElem& f);
std::size_t hamming_distance(const AlgElem& f, const AlgElem& h);

AlgElem add(const AlgElem& f, const AlgElem& h);
AlgElem sub(const AlgElem& f, const AlgElem& h);
AlgElem scale(const AlgElem& f, Residue s);

/// Group algebra product: (f h)[k] = sum over g_i g_j = g_k of f[i] h[j].
AlgElem convolve(const AlgElem& f, const AlgElem& h);
/// f g: the coefficient of x in the result is the coefficient of x g^-1 in f.
AlgElem right_translate(const AlgElem& f, Elem g);
/// Componentwise product.
AlgElem schur(const AlgElem& f, const AlgElem& h);
/// Sum of coefficients.
FieldElem augmentation(const AlgElem& f);
/// Standard dot product, equal to augmentation(schur(f, h)).
FieldElem inner(const AlgElem& f, const AlgElem& h);

/// Matrix of v -> f v on the basis G: column j holds the coefficients of f g_j,
/// so the rank is dim fKG.
Matrix multiplication_matrix(const AlgElem& f);

}  // namespace gcodelab
