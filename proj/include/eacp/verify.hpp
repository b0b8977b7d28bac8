#ifndef EACP_VERIFY_HPP
#define EACP_VERIFY_HPP

#include "eacp/algebra.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace eacp {

struct PropertyResult {
    enum class Status { Pass, Fail, Skip, Undetermined };
    std::string module;
    std::string name;
    Status status = Status::Pass;
    std::string detail;
};

std::string to_string(PropertyResult::Status s);

/// Runs the property checks of every module on one algebra. Random
/// elements come from a generator seeded with `seed`.
std::vector<PropertyResult> verify_algebra(const Algebra& alg, std::uint64_t seed, unsigned m_max);

}  // namespace eacp

#endif  // EACP_VERIFY_HPP
