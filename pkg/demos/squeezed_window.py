"""Multiphoton nonclassical states from a squeezed-vacuum input.

Squeezed vacuum populates even photon numbers only.  Heralding an odd count
is therefore forbidden at the full-swap point, and heralding N = 2 opens a
window of interaction times where mode a holds several photons on average
while staying sub-Poissonian.
"""

import math
from pathlib import Path

import numpy as np

from heraldkit import squeezed_record

R = 1.0
N_CUT = 110

# parity rule: odd herald at lt = pi/2 never fires
odd = squeezed_record(R, 1, math.pi / 2.0, N_CUT)
print(f"herald N=1 at lt=pi/2: prob = {odd.herald_prob}  (forbidden by parity)")

lts = np.linspace(0.0025, 0.5, 200) * math.pi
records = [squeezed_record(R, 2, lt, N_CUT) for lt in lts]

best = max(
    (r for r in records if r.mandel_q is not None and r.mandel_q < 0.0),
    key=lambda r: r.mean,
)
print(f"\nherald N=2, r={R}:")
print(f"largest sub-Poissonian mean: {best.mean:.4f} photons "
      f"at lt/pi = {best.lambda_t / math.pi:.4f} (Q = {best.mandel_q:.4f})")

swap = squeezed_record(R, 2, math.pi / 2.0, N_CUT)
print(f"at lt = pi/2: mean={swap.mean:.6f}, Q={swap.mandel_q:.6f}, "
      f"prob={swap.herald_prob:.6f} = tanh^2(r)/(2 cosh r)")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not installed; skipping plot")
else:
    x = lts / math.pi
    fig, (top, bottom) = plt.subplots(2, 1, figsize=(6, 6))
    top.plot(x, [r.mean for r in records], label="mean")
    top.plot(x, [r.mandel_q for r in records], label="Mandel Q")
    top.axhline(0.0, color="gray", lw=0.6)
    top.set_xlabel("lambda t / pi")
    top.legend()
    top.set_title(f"squeezed vacuum r={R}, herald N=2")
    dist = best.distribution[:13]
    bottom.bar(np.arange(dist.size), dist)
    bottom.set_xlabel("n")
    bottom.set_ylabel("P(n)")
    bottom.set_title(f"heralded distribution at lt/pi = {best.lambda_t / math.pi:.3f}")
    fig.tight_layout()
    out = Path(__file__).parent / "output"
    out.mkdir(exist_ok=True)
    fig.savefig(out / "squeezed_window.png", dpi=120)
    print(f"wrote {out / 'squeezed_window.png'}")
