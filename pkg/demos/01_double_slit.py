#!/usr/bin/env python3
"""Single-particle interference and its loss.

One particle, two paths to the same detector. With full coherence the two
path amplitudes add and the detection probability oscillates with their
relative phase; with no coherence the path probabilities add and the phase
dependence disappears. Partial coherence scales the fringe contrast.
"""

import numpy as np

from interfere import double_slit

phases = np.linspace(0.0, 2.0 * np.pi, 9)
coherences = [1.0, 0.6, 0.3, 0.0]

header = "phase/pi " + " ".join(f"coh={a:4.1f}" for a in coherences)
print(header)
print("-" * len(header))
for phi in phases:
    row = " ".join(f"{double_slit(phi, a):8.4f}" for a in coherences)
    print(f"{phi / np.pi:8.2f} {row}")

print()
print("fringe visibility (max-min)/(max+min) per coherence:")
fine = np.linspace(0.0, 2.0 * np.pi, 721)
for a in coherences:
    values = np.array([double_slit(phi, a) for phi in fine])
    vis = (values.max() - values.min()) / (values.max() + values.min())
    print(f"  coherence {a:4.1f}: visibility {vis:.4f}")
