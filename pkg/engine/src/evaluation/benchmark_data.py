"""
Acceptance instances and the exact values they are checked against
Covers: edgeless, clique, regularity, neighbourhood, transitivity, identity, spectral instances
"""

EDGELESS_INSTANCES = [
    {"n": 4, "k": 2, "q": 3},
    {"n": 5, "k": 3, "q": 3},
    {"n": 6, "k": 3, "q": 3},
]

CLIQUE_INSTANCES = [
    {"n": 4, "k": 1, "q": 3, "clique_number": 3},
    {"n": 5, "k": 2, "q": 3, "clique_number": 2},
    {"n": 7, "k": 2, "q": 3, "clique_number": 3},
]

DEGREE_INSTANCES = [
    {"n": 5, "k": 2, "q": 3, "vertex_count": 270, "degree": 3},
    {"n": 5, "k": 1, "q": 5},
]

TRANSITIVITY_INSTANCES = [
    {"n": 4, "k": 1, "q": 3, "arcs": True},
    {"n": 5, "k": 2, "q": 3, "arcs": False},
]

IDENTITY_INSTANCES = [
    {"n": 4, "k": 1, "q": 3, "a": 4, "d": 13},
    {"n": 5, "k": 2, "q": 3, "a": 0, "d": 13},
]

SPECTRAL_INSTANCES = [
    {"n": 5, "k": 2, "q": 3, "bound_squared": 13},
]

ALL_INSTANCES = sorted(
    {(i["n"], i["k"], i["q"]) for group in (
        EDGELESS_INSTANCES, CLIQUE_INSTANCES, DEGREE_INSTANCES,
        TRANSITIVITY_INSTANCES, IDENTITY_INSTANCES, SPECTRAL_INSTANCES,
    ) for i in group}
)
