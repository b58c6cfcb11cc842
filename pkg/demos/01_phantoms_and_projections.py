"""Phantoms, sinograms, and the projector pair.

Generates each phantom kind, forward-projects to a dense 180-view
sinogram, and shows what few-view subsampling throws away.  Writes
demo01_phantoms.png and demo01_sinograms.png next to this script.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from fewviewct import (
    PhantomSpec,
    dense_geometry,
    forward_project,
    make_phantom,
    sample_views,
)

here = Path(__file__).parent

kinds = ["shepp_logan", "random_ellipses", "uniform_disk"]
phantoms = {k: make_phantom(PhantomSpec(k, seed=3, size=128)) for k in kinds}

fig, axes = plt.subplots(1, 3, figsize=(9, 3))
for ax, kind in zip(axes, kinds):
    ax.imshow(phantoms[kind].values, cmap="gray", vmin=0, vmax=1)
    ax.set_title(kind)
    ax.set_axis_off()
fig.tight_layout()
fig.savefig(here / "demo01_phantoms.png", dpi=120)

# dense sinogram vs 9-view subsampling
geom = dense_geometry(128)
dense = forward_project(phantoms["shepp_logan"], geom)
few = sample_views(dense, 9)
print(f"dense sinogram: {dense.num_views} views x {dense.num_bins} bins")
print(f"few-view input: angles {[int(a) for a in few.angles_deg]}")

fig, axes = plt.subplots(1, 2, figsize=(9, 3.5))
axes[0].imshow(dense.values, aspect="auto", cmap="magma")
axes[0].set_title("180 views")
axes[0].set_xlabel("detector bin")
axes[0].set_ylabel("view")
sparse = np.zeros_like(dense.values)
sparse[::20] = dense.values[::20]
axes[1].imshow(sparse, aspect="auto", cmap="magma")
axes[1].set_title("9 of 180 views kept")
axes[1].set_xlabel("detector bin")
fig.tight_layout()
fig.savefig(here / "demo01_sinograms.png", dpi=120)
print("wrote demo01_phantoms.png, demo01_sinograms.png")
