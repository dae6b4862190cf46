"""Herald a single photon out of a coherent beam.

Two modes exchange photons under H = lambda (a^dag b + b^dag a).  Mode a
starts in a coherent state, mode b carries one photon.  Detecting exactly
one photon in b afterwards leaves mode a in a field-dependent superposition;
at lambda t = pi/2 the exchange is complete and mode a collapses to the
one-photon Fock state no matter what alpha was.
"""

import math
from pathlib import Path

import numpy as np

from heraldkit import coherent_record, oracle_record, Coherent

ALPHA = 2.0
N_CUT = 48

lts = np.linspace(0.0, 0.5, 201) * math.pi
records = [coherent_record(ALPHA, 1, lt, N_CUT) for lt in lts]

print(f"coherent input alpha={ALPHA}, herald N=1")
print(f"{'lt/pi':>8} {'mean':>10} {'mandel_q':>10} {'prob':>10}")
for k in range(0, 201, 25):
    r = records[k]
    q = f"{r.mandel_q:10.5f}" if r.mandel_q is not None else "      --  "
    print(f"{lts[k] / math.pi:8.4f} {r.mean:10.5f} {q} {r.herald_prob:10.6f}")

# endpoint sanity: the closed form and the truncated-grid pipeline agree
end = records[-1]
orc = oracle_record(Coherent(ALPHA), 1, math.pi / 2.0)
print(f"\nat lt = pi/2: mean={end.mean:.12f} (expect 1), q={end.mandel_q:.12f} (expect -1)")
print(f"herald prob closed={end.herald_prob:.15f} oracle={orc.herald_prob:.15f}")
print(f"prob 4 e^-4 = {4.0 * math.exp(-4.0):.15f}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not installed; skipping plot")
else:
    fig, axes = plt.subplots(3, 1, sharex=True, figsize=(6, 7))
    x = lts / math.pi
    axes[0].plot(x, [r.mean for r in records])
    axes[0].set_ylabel("mean photons")
    axes[1].plot(x, [r.mandel_q if r.mandel_q is not None else np.nan for r in records])
    axes[1].axhline(0.0, color="gray", lw=0.6)
    axes[1].set_ylabel("Mandel Q")
    axes[2].plot(x, [r.herald_prob for r in records])
    axes[2].set_ylabel("herald prob")
    axes[2].set_xlabel("lambda t / pi")
    fig.suptitle(f"coherent alpha={ALPHA}, herald N=1")
    out = Path(__file__).parent / "output"
    out.mkdir(exist_ok=True)
    fig.savefig(out / "coherent_sweep.png", dpi=120)
    print(f"wrote {out / 'coherent_sweep.png'}")
