"""Constructive membership: writing a labeling's binomial in terms of minors.

    PYTHONPATH=src python3 demos/06_certificates.py
"""

import random

from polyomino_ideals import (
    admissible_lattice,
    balanced_certificate_treelike,
    expand_certificate,
    labeling_binomial,
    parse_grid,
    polynomial_str,
    render_grid,
)

staple = parse_grid(".##\n##.\n.##")
names = [f"x{i}{j}" for (i, j) in staple.vertices]
print(render_grid(staple))
print()

# Build a random admissible labeling from the kernel of the interval
# constraints, then replay the good-leaf peeling into an explicit identity
#   f_labeling = sum(multiplier * inner minor).
rng = random.Random(8)
basis = admissible_lattice(staple)
vec = [0] * staple.num_vertices
while not any(vec):
    vec = [0] * staple.num_vertices
    for row in basis.vectors:
        c = rng.randint(-2, 2)
        vec = [x + c * y for x, y in zip(vec, row)]
alpha = {staple.vertices[k]: v for k, v in enumerate(vec) if v}

target = labeling_binomial(staple, alpha)
print("labeling:", alpha)
print("binomial:", polynomial_str(target, names=names))
print()

certificate = balanced_certificate_treelike(staple, alpha)
print(f"certificate with {len(certificate)} steps:")
for multiplier, minor in certificate:
    print(f"  ({polynomial_str(multiplier, names=names)}) * ({polynomial_str(minor, names=names)})")
print()
print("expands back to the binomial exactly:",
      expand_certificate(certificate) == target)
