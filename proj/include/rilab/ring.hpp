#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rilab/field.hpp"
#include "rilab/monomial.hpp"

namespace rilab {

// Immutable description of a graded polynomial ring k[x_1..x_d] with a fixed
// global monomial order. Shared by handle; all values built over the same
// handle are interoperable.
template <class K>
struct RingData {
    K field;
    std::vector<std::string> names;
    MonomialOrder order;

    int nvars() const { return static_cast<int>(names.size()); }
};

template <class K>
using Ring = std::shared_ptr<const RingData<K>>;

template <class K>
Ring<K> make_ring(K field, std::vector<std::string> names, MonomialOrder order) {
    if (names.empty() || names.size() > kMaxVars) throw InputError("variable count out of range");
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j]) throw InputError("duplicate variable name: " + names[i]);
    if (order.nvars != static_cast<int>(names.size())) throw InputError("order/variable count mismatch");
    auto d = std::make_shared<RingData<K>>();
    d->field = std::move(field);
    d->names = std::move(names);
    d->order = order;
    return d;
}

template <class K>
Ring<K> make_ring(K field, std::vector<std::string> names) {
    MonomialOrder o = MonomialOrder::grevlex(static_cast<int>(names.size()));
    return make_ring<K>(std::move(field), std::move(names), o);
}

inline std::vector<std::string> numbered_names(const std::string& prefix, int n, int from = 1) {
    std::vector<std::string> v;
    v.reserve(n);
    for (int i = 0; i < n; ++i) v.push_back(prefix + std::to_string(from + i));
    return v;
}

// Same variables, different order.
template <class K>
Ring<K> with_order(const Ring<K>& r, MonomialOrder order) {
    return make_ring<K>(r->field, r->names, order);
}

// Extend by one fresh leading variable under an elimination order (the
// t-trick ring for intersections and colons).
template <class K>
Ring<K> extend_front(const Ring<K>& r, const std::string& fresh) {
    std::vector<std::string> names;
    names.push_back(fresh);
    names.insert(names.end(), r->names.begin(), r->names.end());
    return make_ring<K>(r->field, names, MonomialOrder::elimination(static_cast<int>(names.size()), 1));
}

template <class K>
bool same_ring(const Ring<K>& a, const Ring<K>& b) {
    if (a == b) return true;
    return a->field == b->field && a->names == b->names && a->order == b->order;
}

}  // namespace rilab
