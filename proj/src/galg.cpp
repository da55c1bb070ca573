// SPDX-License-Identifier: Apache-2.0
#include "gcodelab/galg.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace gcodelab {

AlgElem::AlgElem(GroupPtr group, FieldSpec spec) : group_(std::move(group)), spec_(spec), coeffs_(group_->order(), 0) {}

AlgElem::AlgElem(GroupPtr group, FieldSpec spec, Vector coeffs)
    : group_(std::move(group)), spec_(spec), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != group_->order())
        throw std::invalid_argument("element has " + std::to_string(coeffs_.size()) + " coefficients, group order is " +
                                    std::to_string(group_->order()));
    for (auto& c : coeffs_) c = spec_.reduce(c);
}

AlgElem AlgElem::one(GroupPtr group, FieldSpec spec) { return basis(std::move(group), spec, 0); }

AlgElem AlgElem::basis(GroupPtr group, FieldSpec spec, Elem g) {
    AlgElem e(std::move(group), spec);
    if (g >= e.size()) throw std::invalid_argument("group element index out of range");
    e.coeffs_[g] = 1;
    return e;
}

AlgElem AlgElem::all_ones(GroupPtr group, FieldSpec spec) {
    const std::size_t n = group->order();
    return AlgElem(std::move(group), spec, Vector(n, 1));
}

AlgElem AlgElem::indicator(GroupPtr group, FieldSpec spec, const std::vector<Elem>& elems) {
    AlgElem e(std::move(group), spec);
    for (Elem g : elems) {
        if (g >= e.size()) throw std::invalid_argument("group element index out of range");
        e.coeffs_[g] = 1;
    }
    return e;
}

AlgElem AlgElem::parse(GroupPtr group, FieldSpec spec, std::string_view text) {
    Vector coeffs;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view tok = text.substr(pos, end - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        long long v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
            throw std::invalid_argument("bad coefficient '" + std::string(tok) + "' in element text");
        const long long p = spec.p();
        coeffs.push_back(static_cast<Residue>(((v % p) + p) % p));
        pos = end + 1;
    }
    return AlgElem(std::move(group), spec, std::move(coeffs));
}

bool AlgElem::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Residue c) { return c == 0; });
}

std::string AlgElem::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coeffs_[i]);
    }
    return s;
}

namespace {

void require_compatible(const AlgElem& f, const AlgElem& h) {
    if (f.group() != h.group() && f.group()->table() != h.group()->table())
        throw std::invalid_argument("group algebra elements over different groups");
    if (f.spec() != h.spec()) throw std::invalid_argument("group algebra elements over different fields");
}

}  // namespace

std::vector<Elem> support(const AlgElem& f) {
    std::vector<Elem> s;
    for (Elem g = 0; g < f.size(); ++g)
        if (f[g]) s.push_back(g);
    return s;
}

std::size_t weight(const AlgElem& f) {
    return static_cast<std::size_t>(std::count_if(f.coeffs().begin(), f.coeffs().end(), [](Residue c) { return c != 0; }));
}

std::size_t hamming_distance(const AlgElem& f, const AlgElem& h) { return weight(sub(f, h)); }

AlgElem add(const AlgElem& f, const AlgElem& h) {
    require_compatible(f, h);
    Vector out(f.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.spec().add(f[i], h[i]);
    return AlgElem(f.group(), f.spec(), std::move(out));
}

AlgElem sub(const AlgElem& f, const AlgElem& h) {
    require_compatible(f, h);
    Vector out(f.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.spec().sub(f[i], h[i]);
    return AlgElem(f.group(), f.spec(), std::move(out));
}

AlgElem scale(const AlgElem& f, Residue s) {
    Vector out(f.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.spec().mul(f[i], f.spec().reduce(s));
    return AlgElem(f.group(), f.spec(), std::move(out));
}

AlgElem convolve(const AlgElem& f, const AlgElem& h) {
    require_compatible(f, h);
    const Group& g = *f.group();
    const FieldSpec& k = f.spec();
    Vector out(f.size(), 0);
    for (Elem i = 0; i < f.size(); ++i) {
        if (!f[i]) continue;
        for (Elem j = 0; j < h.size(); ++j) {
            if (!h[j]) continue;
            Residue& slot = out[g.mul(i, j)];
            slot = k.add(slot, k.mul(f[i], h[j]));
        }
    }
    return AlgElem(f.group(), k, std::move(out));
}

AlgElem right_translate(const AlgElem& f, Elem g) {
    const Group& grp = *f.group();
    if (g >= grp.order()) throw std::invalid_argument("group element index out of range");
    Vector out(f.size(), 0);
    for (Elem y = 0; y < f.size(); ++y) out[grp.mul(y, g)] = f[y];
    return AlgElem(f.group(), f.spec(), std::move(out));
}

AlgElem schur(const AlgElem& f, const AlgElem& h) {
    require_compatible(f, h);
    Vector out(f.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.spec().mul(f[i], h[i]);
    return AlgElem(f.group(), f.spec(), std::move(out));
}

FieldElem augmentation(const AlgElem& f) {
    std::uint64_t acc = 0;
    for (Residue c : f.coeffs()) acc += c;
    return {f.spec(), acc};
}

FieldElem inner(const AlgElem& f, const AlgElem& h) {
    require_compatible(f, h);
    return {f.spec(), dot(f.spec(), f.coeffs(), h.coeffs())};
}

Matrix multiplication_matrix(const AlgElem& f) {
    const std::size_t n = f.size();
    Matrix t(f.spec(), n, n);
    const Group& g = *f.group();
    // column j = f g_j; coefficient of y g_j is f[y].
    for (Elem j = 0; j < n; ++j)
        for (Elem y = 0; y < n; ++y) t(g.mul(y, j), j) = f[y];
    return t;
}

}  // namespace gcodelab
