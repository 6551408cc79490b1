# %% [markdown]
# # Testing the coefficient ansatz
#
# For k <= 3 every coefficient c_i(n) is a fixed combination of
# 1, (-1)^w, R(n) and (-1)^w R(n). The lab fits those four weights exactly on a
# small training set and then checks every other n.

# %%
from eulerset import ansatz_fit, compare_across_k, ratio_report

training = [2, 3, 6, 10]
validation = [n for n in range(2, 2001) if n not in training]
for k, i in [(2, 2), (3, 2), (3, 3)]:
    fit = ansatz_fit(k, i, training, validation)
    print(k, i, fit.verdict.value, [str(w) for w in fit.weights])

# %% [markdown]
# From k = 4 on, the constant term picks up products over the primes of n
# such as prod (p^2 + p + 1), which no fixed combination of the basis can
# match. The fitter reports the smallest witness.

# %%
fit = ansatz_fit(4, 4, training, validation, max_witnesses=5)
print(fit.verdict.value)
for w in fit.witnesses:
    print(w.n, w.observed, w.fitted)

# %% [markdown]
# How the c_2 weights move with k (reported, not interpreted):

# %%
report = compare_across_k(range(2, 9), 2, training, validation[:300])
for d in report["differences"]:
    print(d)

# %% [markdown]
# The ratio S(k,n)/(phi(n) n^k) against 1/(k+1). For k = 3 the gap is exactly R(n)/(4n^2).

# %%
for e in ratio_report(3, [10, 100, 1000, 9973]).entries:
    print(e.n, e.ratio, float(e.deviation))
