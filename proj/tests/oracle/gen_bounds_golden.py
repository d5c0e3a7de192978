#!/usr/bin/env python3
"""High-precision golden values for the closed-form bound evaluators.

Run from anywhere; prints name / value pairs at 50-digit working precision.
The frozen constants in tests/test_bounds.cpp were produced by this script.
"""

import mpmath as mp

mp.mp.dps = 50

OUT = []


def emit(name, value):
    OUT.append((name, mp.nstr(mp.mpf(value), 20)))


def clamped_log(t):
    return max(mp.log(t), mp.mpf(1))


def measurement_bound(delta, s, kappa, D, G, g, eta, c=1):
    bracket = (
        s * kappa**2 * mp.log(D) * clamped_log(s) ** 2
        * (mp.log(G) + g * clamped_log(s * kappa))
        + mp.log(1 / mp.mpf(eta))
    )
    return c * delta**-2 * bracket


def gnsp(delta, linear_denom=True):
    den = mp.sqrt(1 - delta**2) - (delta / 4 if linear_denom else delta**2 / 4)
    rho = delta / den
    tau = mp.sqrt(1 + delta) / den
    C = (1 + rho) ** 2 / (1 - rho)
    Dc = (3 + rho) * tau / (1 - rho)
    return rho, tau, C, Dc


def covnum_volumetric(s, G, g, u):
    return s * mp.log(mp.e * G / s) + 2 * s * g * mp.log(1 + 4 / mp.mpf(u))


def maurey_K(mu, M, eps):
    return mp.ceil(16 * mu**2 * mp.log(M) / mp.mpf(eps) ** 2)


def covnum_maurey(mu, D, G, g, eps):
    return (mu * mp.sqrt(mp.log(D)) / eps) * (
        mp.sqrt(mp.log(G)) + mp.sqrt(g * mp.log(1 + 8 / mp.mpf(eps)))
    )


def extended_maurey(A, u, Ns):
    return 16 * (A / mp.mpf(u)) ** 2 * mp.log(mp.fsum(Ns))


def gamma2_entropy(mu, s, D, G, g):
    return (
        mp.sqrt(s) * mu * mp.sqrt(mp.log(D)) * clamped_log(s)
        * (mp.sqrt(mp.log(G)) + mp.sqrt(g * clamped_log(s * mu)))
    )


def dense_lower_bound(s, G, g, c1=1):
    return c1 * (s * mp.log(mp.e * G / s) + s * g)


emit("measurement_bound(d=0.5,s=2,mu=1,D=1024,G=16,g=64,eta=0.01,c=1)",
     measurement_bound(mp.mpf("0.5"), 2, 1, 1024, 16, 64, mp.mpf("0.01")))

rho, tau, C, Dc = gnsp(mp.mpf("0.5"))
emit("gnsp.rho(0.5)", rho)
emit("gnsp.tau(0.5)", tau)
emit("gnsp.C(0.5)", C)
emit("gnsp.D(0.5)", Dc)

rho_b, _, _, _ = gnsp(4 / mp.sqrt(41))
emit("gnsp.rho(4/sqrt(41))", rho_b)
rho_p, tau_p, _, _ = gnsp(mp.mpf("0.5"), linear_denom=False)
emit("gnsp_printed.rho(0.5)", rho_p)
emit("gnsp_printed.tau(0.5)", tau_p)

emit("covnum_volumetric(1,4,1,1)", covnum_volumetric(1, 4, 1, 1))
emit("maurey_K(1,100,0.5)", maurey_K(1, 100, mp.mpf("0.5")))
emit("covnum_maurey(1,256,8,4,1)", covnum_maurey(1, 256, 8, 4, 1))
emit("extended_maurey(1,0.5,[3,5])", extended_maurey(1, mp.mpf("0.5"), [3, 5]))
emit("gamma2_entropy(0.5,4,256,8,4)", gamma2_entropy(mp.mpf("0.5"), 4, 256, 8, 4))
emit("dense_lower_bound(4,16,8,1)", dense_lower_bound(4, 16, 8))

# recovery error bounds, Thm-level composition
rho, tau, s, sig, eps = mp.mpf("0.5"), mp.mpf(1), 4, mp.mpf(2), mp.mpf("0.1")
C = (1 + rho) ** 2 / (1 - rho)
Dc = (3 + rho) * tau / (1 - rho)
emit("recovery_l2(rho=.5,tau=1,s=4,sig=2,eps=.1)", C / mp.sqrt(s) * sig + Dc * eps)
Ct = (1 + rho) / (1 - rho)
Dt = 2 * tau / (1 - rho)
emit("recovery_l1(rho=.5,tau=1,s=4,sig=2,eps=.1)", Ct * sig + Dt * mp.sqrt(s) * eps)

for name, val in OUT:
    print(f"{name:<60s} {val}")
