#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "superdix/pbw.hpp"

namespace superdix::detail {

/// Straightened products monomial * generator, shared by all elements of one algebra.
struct PbwMemo {
    using Terms = std::vector<std::pair<Exponents, Scalar>>;
    std::mutex mutex;
    std::map<std::pair<Exponents, std::size_t>, Terms> right_generator;
};

}  // namespace superdix::detail
