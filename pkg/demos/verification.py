"""Running the seeded suites from Python.  The same suites are behind `padic-bruhat verify`."""

import json

from padic_bruhat import SUITES, RunConfig, run_suite

cfg = RunConfig(p=3, n=3, seed=7, trials=50)
print("suites:", ", ".join(SUITES))

# %% Each report is deterministic in its configuration.
for name in ("reconstruction", "bplus-monotonicity", "theta-lemma", "nprime-invariance"):
    rep = run_suite(name, cfg)
    print(f"{name:20s} trials={rep.trials:5d} failures={len(rep.failures)} aborts={rep.precision_aborts}")

# %% Failure witnesses are plain JSON and can be replayed.
rep = run_suite("nprime-invariance", cfg.replace(seed=2, trials=40))
if rep.failures:
    print(json.dumps(rep.failures[0]))
