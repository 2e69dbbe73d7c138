"""Closed-form single-point variances against a simulated ensemble.

With one training point and a bias-free one-hidden-layer ReLU network, the
first-order variances of the centered, interaction and averaged models have
closed forms in the input norms, the angle and the width.  Here a 2000-member
ensemble of the actual networks is compared with them.

Run: python demos/03_closed_form_check.py
"""
import numpy as np

from ntkvar.analytic import analytic_variance_terms
from ntkvar.data import Dataset
from ntkvar.kernel_models import lin_ensembles
from ntkvar.nn import MlpArchitecture
from ntkvar.variance import total_variance, variance_stderr

x = np.array([1.0, 0.0])
queries = np.array([[np.cos(t), np.sin(t)] for t in np.linspace(0.3, np.pi - 0.3, 5)])
h = 1024
arch = MlpArchitecture((2, h, 1), activation="relu")
data = Dataset(x[None], np.array([[1.0]]))
preds, _, _ = lin_ensembles(arch, data, queries, 2000, seed=0, variants=("lin_a", "lin_c", "lin_i"),
                            m=4000, zero_bias=True)

print(f"{'angle':>7}  {'term':>4}  {'closed form':>11}  {'ensemble':>9}  {'z':>5}")
for k, q in enumerate(queries):
    exact = analytic_variance_terms(x, q, h=h)
    for j, key in enumerate(("lin_a", "lin_c", "lin_i")):
        v, se = total_variance(preds[key])[k], variance_stderr(preds[key])[k]
        print(f"{np.degrees(np.arctan2(q[1], q[0])):7.1f}  {key[4:]:>4}  {exact[j]:11.3e}  {v:9.3e}  "
              f"{(v - exact[j]) / se:+5.1f}")
