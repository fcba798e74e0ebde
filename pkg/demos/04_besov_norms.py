"""Gaussian Besov-Lipschitz norms, their closed forms, and the decay lemma.

The smoothness-alpha norm weights the k-th time derivative of the
subordinated orbit by t^(k-alpha) and takes an L^q average in dt/t (or a sup
for q = inf).  On a single basis function everything reduces to a Gamma
integral, which makes a sharp correctness check.
"""

import math

import numpy as np

from gausscalc import (
    HermiteExpansion,
    ak_constant,
    besov_norm,
    besov_params,
    besov_seminorm,
    hardy_check,
    kdecay_report,
    smallest_k,
)

h1 = HermiteExpansion.basis((1,))
params = besov_params(alpha=0.5, p=2, q=2)
print("k chosen for alpha=0.5:", params.k, " (smallest integer above alpha)")

semi = besov_seminorm(h1, params)
print("seminorm of the first mode:", semi, " closed form:", 1 / math.sqrt(2))

res = besov_norm(h1, params)
print("full norm:", res.total, " = L^p part", res.lp_part, "+ seminorm", res.seminorm)
print("as JSON:", res.to_dict())

# q = inf replaces the integral by the best constant in the decay bound
ak = ak_constant(h1, 0.5, 2, 1)
print("sup constant:", ak, " closed form:", math.sqrt(0.5) * math.exp(-0.5))

# richer expansion: norms at several smoothness levels; higher alpha costs more
f = HermiteExpansion(1, {(1,): 0.8, (2,): -0.5, (5,): 0.3})
for alpha in (0.25, 0.75, 1.5):
    r = besov_norm(f, besov_params(alpha, 2, 2))
    print(f"alpha={alpha:4.2f}: total {r.total:.6f} (k = {smallest_k(alpha)})")

# the decay lemma: t -> ||d^k/dt^k P_t f||_p never increases, and t^k times it
# stays bounded by a constant multiple of ||f||_p
rep = kdecay_report(f, p=2.0, k=2)
print("monotone decay:", rep.non_increasing, " fitted constant:", rep.fitted_c)
print("first rows of the decay table:")
for t, v in rep.rows()[:4]:
    print(f"  t = {t:8.4f}   norm = {v:.6e}")

# weighted averaging inequality; at p = 1 the head form is an identity
lhs, rhs = hardy_check(lambda y: y * np.exp(-y), p=1.0, r=1.0, kind="head")
print("averaging identity at p=1:", lhs, "=", rhs)
lhs, rhs = hardy_check(lambda y: y**2 * np.exp(-y), p=2.0, r=1.0, kind="tail")
print("tail inequality at p=2:", lhs, "<=", rhs)
