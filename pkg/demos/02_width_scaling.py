"""How the variance components shrink with width on a small MNIST task.

The linearized predictor splits into an averaged part (functional noise at
the mean kernel), a centered part (kernel noise only), an interaction part and
a residual.  A crossed design reuses the same kernel draws for every
functional draw, so the split is exact within the sample.  Widening the
network leaves the averaged part roughly unchanged while the kernel-driven
parts fall like 1/width and the residual faster.

Run: python demos/02_width_scaling.py
"""
import numpy as np

from ntkvar.data import load_named, select_classes, subset
from ntkvar.kernel_models import crossed_lin_ensembles
from ntkvar.nn import MlpArchitecture
from ntkvar.variance import decompose, loglog_slope

raw = select_classes(load_named("mnist", "train"), (0, 1))
train = subset(raw, 30, seed=0, classes=2, mode="binary_pm1")
test = subset(select_classes(load_named("mnist", "t10k"), (0, 1)), 20, seed=1, classes=2, mode="binary_pm1")

widths = (64, 128, 256, 512)
rows = []
for h in widths:
    arch = MlpArchitecture((784, h, 1))
    ens = crossed_lin_ensembles(arch, train, test.xs, 10, 12, seed=0)
    rep = decompose(ens.predictions, ens.mean, ens.bundles)
    rows.append((h, rep.v_a.mean(), rep.v_c.mean(), rep.v_i.mean(), abs(rep.v_res.mean())))
    print(f"width {h:4d}  v_a {rows[-1][1]:.3e}  v_c {rows[-1][2]:.3e}  v_i {rows[-1][3]:.3e}  |v_res| {rows[-1][4]:.3e}")

table = np.array(rows)
for j, name in enumerate(("v_a", "v_c", "v_i", "|v_res|"), start=1):
    print(f"log-log slope of {name:8s} {loglog_slope(table[:, 0], table[:, j]):+.2f}")
