"""
From sudden quench to slow ramp
===============================

The adiabaticity parameter ``lambda`` measures how far a stroke strays from
quasi-static driving.  We integrate the classical oscillator through linear
and exponential ramps of growing duration.
"""

import matplotlib.pyplot as plt
import numpy as np

from asymotto.adiabaticity import (IntegratorConfig, exponential_ramp, lambda_numeric,
                                   lambda_sudden, linear_ramp)

durations = np.logspace(-2, 1.5, 40)
cfg = IntegratorConfig(step_count=4000)

fig, ax = plt.subplots()
for ramp, style in ((linear_ramp, "-"), (exponential_ramp, "--")):
    lam = [lambda_numeric(ramp(1.0, 2.0, T), cfg) for T in durations]
    ax.semilogx(durations, lam, style, label=ramp.__name__)

# %%
# Short ramps reproduce the quench value, long ones tend to 1 with
# oscillations from the ramp's abrupt start and stop.
ax.axhline(lambda_sudden(1.0, 2.0), color="k", lw=0.5)
ax.axhline(1.0, color="k", lw=0.5)
ax.set_xlabel("ramp duration")
ax.set_ylabel(r"$\lambda$")
ax.legend()
plt.show()
