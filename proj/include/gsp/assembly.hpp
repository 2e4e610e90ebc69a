#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "gsp/arch.hpp"
#include "gsp/dirichlet.hpp"
#include "gsp/satake.hpp"

namespace gsp {

// C_N(pi, chi, r) = (-1)^k pi^{2r+4-2k} c_{k,r,2,N}
//   * L^N(r, pi x chi) / (L^N(r+2, chi) L^N(2r, chi^2) L^N(2r+2, chi^2)),
// split into the exact prefactor and the truncated L-ratio.
struct CnAssembly {
    PiPower prefactor;            // (-1)^k pi^{2r+4-2k} c_{k,r,2,N}
    std::complex<double> lratio;  // truncated Euler products
    double error_bound;           // absolute, on lratio
    std::complex<double> value;   // prefactor * lratio
};

// n = 2 only. The numerator product runs over primes p <= P not dividing N,
// with caller-supplied Satake data; its tail bound assumes |alpha_i| <= p^{1/2}.
// Throws for r <= 2 (outside the absolutely convergent range), for a prime
// missing from the table, and when the factorization disagrees with the
// character modulus.
CnAssembly c_n_assembly(const ArchContext& ctx, long r,
                        const std::map<long, SatakeData>& satake_table,
                        const DirichletCharacter& chi,
                        const std::vector<std::pair<long, int>>& n_factorization,
                        long P);

}  // namespace gsp
