"""
How efficient can a frictional Otto engine get?
===============================================

At high temperatures the sudden-expansion (SE) and sudden-compression (SC)
cycles each have a closed-form maximum efficiency.  Here we set both against
the Carnot efficiency together with the efficiency at maximum work.
"""

import matplotlib.pyplot as plt
import numpy as np

from asymotto import high_temp as ht

# %%
# Tabulate the four curves along the Carnot efficiency.
eta_c = np.linspace(0.0, 0.99, 300)
tau = 1.0 - eta_c
up_se = [ht.eta_up_se(t) for t in tau]
up_sc = [ht.eta_up_sc(t) for t in tau]
mw_se = [ht.eta_mw_se(e) for e in eta_c]
mw_sc = [ht.eta_mw_sc(e) for e in eta_c]

fig, ax = plt.subplots()
ax.plot(eta_c, up_se, "r-", label="max, SE")
ax.plot(eta_c, mw_se, "b--", label="at max work, SE")
ax.plot(eta_c, up_sc, "k-", label="max, SC")
ax.plot(eta_c, mw_sc, "g--", label="at max work, SC")
ax.set_xlabel(r"$\eta_C$")
ax.set_ylabel(r"$\eta$")
ax.legend()

# %%
# The gap between the maximum and the efficiency at maximum work stays small:
# friction, not the operating point, dominates the losses.
inset = ax.inset_axes([0.12, 0.55, 0.3, 0.3])
inset.plot(eta_c, np.subtract(up_se, mw_se), "r-")
inset.plot(eta_c, np.subtract(up_sc, mw_sc), "b--")
inset.set_title(r"$\Delta$, $\Delta'$", fontsize=8)

# %%
# Near equilibrium all four curves start with the slopes stored in the
# library's series tables.
for curve in ht.TaylorCurve:
    print(curve.value, ["%.5f" % c for c in ht.taylor_coefficients(curve)])

plt.show()
