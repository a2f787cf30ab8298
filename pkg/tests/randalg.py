"""Random generators for smooth, proper, connected gentle algebras."""

import random

from gentle_topo.algebra import Arrow, GentleAlgebra, GradedQuiver, check_proper, check_smooth


def random_gentle(rng: random.Random, n_vertices: int, degree_range=(-3, 3), density=None):
    """A random gentle algebra (not necessarily smooth, proper or connected)."""
    verts = [str(i) for i in range(1, n_vertices + 1)]
    outdeg = {v: 0 for v in verts}
    indeg = {v: 0 for v in verts}
    target = rng.randint(n_vertices - 1, 2 * n_vertices) if density is None else density
    arrows = []
    for _ in range(6 * target):
        if len(arrows) >= target:
            break
        u, v = rng.sample(verts, 2) if n_vertices > 1 else (verts[0], verts[0])
        if u == v or outdeg[u] >= 2 or indeg[v] >= 2:
            continue
        outdeg[u] += 1
        indeg[v] += 1
        arrows.append(Arrow(f"x{len(arrows)}", u, v, rng.randint(*degree_range)))
    relations = set()
    for v in verts:
        ins = [a.name for a in arrows if a.target == v]
        outs = [a.name for a in arrows if a.source == v]
        if len(ins) == 2 and len(outs) == 2:
            if rng.random() < 0.5:
                outs.reverse()
            relations |= {(ins[0], outs[0]), (ins[1], outs[1])}
        elif len(ins) == 2 and len(outs) == 1:
            relations.add((rng.choice(ins), outs[0]))
        elif len(ins) == 1 and len(outs) == 2:
            relations.add((ins[0], rng.choice(outs)))
        elif len(ins) == 1 and len(outs) == 1 and rng.random() < 0.5:
            relations.add((ins[0], outs[0]))
    return GentleAlgebra(GradedQuiver(tuple(verts), tuple(arrows)), frozenset(relations))


def random_smooth_proper(rng: random.Random, max_vertices: int = 8, degree_range=(-3, 3)):
    while True:
        n = rng.randint(1, max_vertices)
        A = random_gentle(rng, n, degree_range)
        if A.is_connected() and check_proper(A) and check_smooth(A):
            return A
