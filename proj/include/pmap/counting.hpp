#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pmap {

using BigCount = boost::multiprecision::cpp_int;

enum class Formula { theta_ni, theta_n, lambda_ni, lambda_n, a_n };

std::optional<Formula> parse_formula(const std::string& name);

/// Theta(n,i) = 2/(n(n+1)^2) C(n+1,i) C(n+1,i+1) C(n+1,i+2), 0 <= i < n.
BigCount theta(int n, int i);
/// Baxter number: sum of theta(n,i) over i.
BigCount theta(int n);
/// Lambda(n,i) = (n+i)!(2n-i-1)! / ((i+1)!(n-i)!(2i+1)!(2n-2i-1)!), 0 <= i < n.
BigCount lambda(int n, int i);
/// Rooted non-separable maps with n+1 edges: 2(3n)!/((n+1)!(2n+1)!).
BigCount lambda(int n);
/// Rooted loopless maps with n edges: 2(4n+1)!/((n+1)!(3n+2)!).
BigCount a(int n);

/// Dispatch by name; `i` is required for the two-index families.
BigCount count_formula(Formula f, int n, std::optional<int> i = std::nullopt);

/// num / den, throwing NonIntegerResult when the remainder is not zero.
BigCount exact_div(const BigCount& num, const BigCount& den);

}  // namespace pmap
