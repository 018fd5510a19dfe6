"""Functions f_w in a mod p principal series, and the n = 3 counterexample."""

from padic_bruhat import Character, PMatrix, PSElement, WeylElement, act_bplus, eval_element, eval_fw
from padic_bruhat.matrix import DiagElement
from padic_bruhat.principal_series import build_counterexample, lemma_theta_check, lower_cells_sampler
from padic_bruhat.sampling import trial_rng

p = 3
chi = Character.make(p, c=[1, 1, 1], e=[0, 1, 0])

# %% f_w is supported on U^(1) w B and transforms by chi^-1 on the right.
w = WeylElement.parse("2,1,3")
b = PMatrix.from_rationals([[3, 1, 0], [0, 2, 5], [0, 0, 1]], p)
print("f_w(w b) =", eval_fw(chi, w, w.matrix(p) @ b), "  chi^-1(b) =", chi(b).inverse())
print("f_w(1) =", eval_fw(chi, w, PMatrix.identity(3, p)))

# %% The monoid of n·t with n in N_0 and t dominant acts by left translation.
t = DiagElement.from_valuations(p, [1, 0, 0])
v = act_bplus(PMatrix.identity(3, p), t, PSElement.basis(chi, w))
print("(t f_w)(t w) =", eval_element(v, t.matrix() @ w.matrix(p)))

# %% Averaging over coset representatives recovers chi(w^-1 t' w) f_w near the lower cells.
w0 = WeylElement.longest(3)
rep = lemma_theta_check(chi, w0, 1, lambda k: trial_rng(0, "demo", k), lower_cells_sampler(w0, p), 50)
print("theta check:", rep.trials, "points,", len(rep.failures), "failures, coset count", rep.details["theta_size"])

# %% A combination of translates of f_{w_2} that vanishes on the first five cells but not at z.
f, z = build_counterexample(chi)
print("terms:", len(f), " f(z) =", eval_element(f, z))
