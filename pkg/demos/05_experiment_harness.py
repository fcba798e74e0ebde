"""Driving the verification harness from Python.

Each named experiment checks one property on a seeded family of random
expansions and returns a report object; the CLI (`gausscalc run ...`) is a
thin wrapper around exactly this.  Reports are deterministic given the
config, so their serialized form works as a regression baseline.
"""

from gausscalc import ExperimentConfig, emit_report, gen_family, list_experiments, run_experiment

print("registered experiments:")
for name, statement in list_experiments():
    print(f"  {name:32s} {statement}")

# families are counter-based-seeded: same config, same bytes
fam = gen_family(seed=7, d=2, M=3, N=8)
print("\nthree seeded members (d=2):")
for f in fam:
    print(" ", f, "norm", round(sum(c * c for c in f.coeffs.values()) ** 0.5, 12))

cfg = ExperimentConfig(family_size=12, max_degree=8, seed=7)

rep = run_experiment("inversion", cfg)
print("\ninversion report:")
print(emit_report(rep, "text"))

# boundedness experiments report norm ratios; the max ratio is the number to
# track across versions (no theoretical constant exists to compare against)
rep = run_experiment("riesz-potential-bounded", cfg)
print("riesz-potential-bounded: passed =", rep.passed, " max ratio =", rep.max_ratio)
print("checks:", [(c["name"], c["passed"]) for c in rep.checks[:3]], "...")

# a config violating an experiment's hypothesis is rejected with the
# violated inequality spelled out
try:
    run_experiment("riesz-derivative-bounded-lt1", ExperimentConfig(alphas=(0.4,), betas=(0.7,)))
except ValueError as exc:
    print("\nhypothesis guard:", exc)
