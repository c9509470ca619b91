"""
Four driving schemes side by side
=================================

At fixed temperature ratio ``tau`` we sweep the compression ratio ``z`` and
compare work and efficiency for adiabatic driving (AD), sudden expansion (SE),
sudden compression (SC) and a sudden switch on both strokes (SS).
"""

import matplotlib.pyplot as plt
import numpy as np

from asymotto import high_temp as ht

tau = 0.36
z = np.linspace(0.3, 1.0, 2000)

# %%
# Work.  SE and SC produce the same work at ``z = sqrt(tau)``, and both peak
# at ``z = tau ** (1/3)``.
fig, (ax_w, ax_e) = plt.subplots(1, 2, figsize=(10, 4))
for scheme in ht.Scheme:
    ax_w.plot(z, ht.ht_work(scheme, z, tau), label=scheme.value.upper())
ax_w.set_ylim(-0.1, 0.25)
ax_w.axvline(np.sqrt(tau), color="grey", lw=0.5)
ax_w.axvline(tau ** (1 / 3), color="grey", lw=0.5, ls=":")
ax_w.set_xlabel("z")
ax_w.set_ylabel(r"$\beta_h W$")
ax_w.legend()

# %%
# Efficiency.  The SE and SC curves cross exactly at the SS maximum.
for scheme in ("se", "sc", "ss"):
    ax_e.plot(z, ht.ht_efficiency(scheme, z, tau), label=scheme.upper())
crossing = ht.intersections(tau)
ax_e.plot(crossing.z_eff, crossing.eta_intsec, "ko")
ax_e.set_xlabel("z")
ax_e.set_ylabel(r"$\eta$")
ax_e.legend()
print(crossing)

# %%
# Plotting work against efficiency traces closed loops, one per scheme.
fig, ax = plt.subplots()
for scheme in ("se", "sc"):
    eta = ht.ht_efficiency(scheme, z, tau)
    ax.plot(eta, ht.ht_work(scheme, z, tau), label=scheme.upper())
ax.set_xlabel(r"$\eta$")
ax.set_ylabel(r"$\beta_h W$")
ax.legend()

plt.show()
