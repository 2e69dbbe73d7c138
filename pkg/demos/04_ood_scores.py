"""Ensemble variance as an out-of-distribution score.

Small gradient-descent ensembles are trained on four MNIST digits.  Each
member's predictive variance on held-out MNIST digits and on FashionMNIST
images is scored with AUROC; higher means FashionMNIST gets larger variance.
The plain ensemble mixes functional and kernel noise; the centered variant
keeps only what training does to the kernel; the averaged variant starts every
member from one shared initialization and re-adds per-member initial
functions.

Run: python demos/04_ood_scores.py           (a few minutes on one core)
"""
from ntkvar.config import default_config
from ntkvar.experiments import run

cfg = default_config("ood", width=128, members=4, n_train=100, n_eval=400, classes=(0, 1, 2, 3),
                     ood=("fashion_mnist",), max_steps=3000, out="results/demo-ood")
summary = run(cfg, cache_dir=False)

for variant, acc in summary["accuracy"].items():
    au = summary["auroc"][variant]["fashion_mnist"]
    conv = sum(summary["training"][variant]["converged"])
    print(f"{variant:5s} accuracy {acc['accuracy_percent']:5.1f}%  AUROC vs FashionMNIST {au:.3f}  "
          f"converged {conv}/{cfg.members}")
for variant, why in summary["skipped_variants"].items():
    print(f"{variant:5s} skipped: {why}")
print(f"tables written to {cfg.out}")
