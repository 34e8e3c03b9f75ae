#pragma once

#include <string>

#include "reciplab/characters.hpp"
#include "reciplab/cyclotomic.hpp"
#include "reciplab/rational.hpp"

namespace reciplab {

enum class HardyVariant { S, s1, s2, s3, s4, s5 };

HardyVariant parse_hardy_variant(const std::string& name);
std::string to_string(HardyVariant v);

Rational hardy_sum(HardyVariant v, long h, long k);

// s_n(h, k) = sum_{a=1}^{k-1} (a/k) Bbar_n(ha/k)
Rational apostol_sum(int n, long h, long k);

struct RationalResidual {
  Rational lhs;
  Rational rhs;
  Rational residual;
  bool zero() const { return residual.is_zero(); }
};

// (n+1)(h k^n s_n(h,k) + k h^n s_n(k,h)) against
// sum_j C(n+1,j) (-1)^j B_j h^j B_{n+1-j} k^{n+1-j} + n B_{n+1}.
RationalResidual apostol_reciprocity(int n, long h, long k);

// f^{n-1} sum_{a<f} chi(a) Bbar_n((a+x)/f): equals B_{n,chi}(x) for 0 < x < 1, period f.
Scalar char_bernoulli_function(int n, const DirichletCharacter& chi, const Rational& x);

// s(h, k; chi) = sum_{a<kf} chi(a) Bbar_{1,chi}(ha/k) Bbar_1(a/(kf)), chi primitive.
Scalar berndt_char_dedekind(long h, long k, const DirichletCharacter& chi);

// HB_{n,variant}(h, k) with (-1)^{ha/k} read as (-1)^{ha} for odd k.
Rational hb_sum(int variant, int n, long h, long k);

// For odd k: the u = -1 sum through Frobenius-Euler functions and through
// Bernoulli functions.
struct PipelineCheck {
  Rational fe_pipeline;
  Rational bernoulli_pipeline;
  bool equal() const { return fe_pipeline == bernoulli_pipeline; }
};
PipelineCheck m5_check(int n, long h, long k);

}  // namespace reciplab
