"""
Operating modes across the (tau, z) plane
=========================================

Each point of the unit square runs the cycle as an engine, refrigerator,
heater or accelerator, read off from the signs of work and heats.
"""

import matplotlib.pyplot as plt
from matplotlib.colors import ListedColormap

from asymotto.cycle_core import OperationalMode
from asymotto.phase_map import MODE_CODES, phase_grid

# %%
# Rasterize both asymmetric schemes.  Cells on a boundary curve get code 0.
colors = ListedColormap(["white", "tab:red", "tab:blue", "tab:orange", "tab:green"])
fig, axes = plt.subplots(1, 2, figsize=(10, 4.5), sharey=True)
for ax, scheme in zip(axes, ("se", "sc")):
    grid = phase_grid(scheme, resolution=400)
    ax.imshow(grid.cells.T, origin="lower", extent=(0, 1, 0, 1), cmap=colors,
              vmin=-0.5, vmax=4.5, interpolation="nearest")
    ax.set_title(scheme.upper())
    ax.set_xlabel(r"$\tau$")
    shares = {m.value: round(grid.fraction(m), 3) for m in MODE_CODES if m is not OperationalMode.BOUNDARY}
    print(scheme, shares)
axes[0].set_ylabel("z")

# %%
# Under sudden compression the refrigerator fills the whole lower triangle
# ``z < tau`` and the heater and accelerator strips get narrower.
plt.show()
