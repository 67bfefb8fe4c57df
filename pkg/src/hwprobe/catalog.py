"""Built-in jobs reproducing the concrete desk-scale computations.

Every entry records the field actually used (prime characteristics only) and
the expected outputs it was verified against; ``expected`` is documentation
consumed by the selftest, not by the job runner.
"""

from .jobs import JobError

_GP_IDEAL = ["x1^2", "x2^2", "x3^2", "x3*x4", "x4^2",
             "x1*x4 + x2*x4", "2*x1*x3 + x2*x3"]


def _a1_threefold_theta():
    return {
        "name": "a1-threefold-theta",
        "field": 101,
        "variables": ["x", "y", "z", "w"],
        "weights": [1, 1, 1, 1],
        "ideal": ["x*w - y*z"],
        "domain": True,
        "modules": {
            "M": {"type": "quotient", "ideal": ["x", "z"]},
            "N": {"type": "quotient", "ideal": ["x", "y"]},
        },
        "tasks": [
            {"op": "tor_lengths", "module": "M", "against": "N",
             "lo": 1, "hi": 6},
            {"op": "theta", "module": "M", "against": "N"},
        ],
        "expected": {
            "tor_lengths_1_to_6": [1, 0, 1, 0, 1, 0],
            "theta": -1,
        },
    }


def _gasharov_peeva():
    # alpha = 2 in F_5: alpha^4 = 1 != alpha^3; the presentation matrix of N
    # is [[x1, alpha*x3 + x4], [0, x2]] and its syzygies cycle with period 4.
    return {
        "name": "gasharov-peeva",
        "field": 5,
        "variables": ["x1", "x2", "x3", "x4", "t"],
        "weights": [1, 1, 1, 1, 1],
        "ideal": _GP_IDEAL,
        "domain": False,
        "modules": {
            "N": {"type": "presentation", "twists": [0, 0],
                  "matrix": [["x1", "2*x3 + x4"], ["0", "x2"]]},
            "O1": {"type": "syzygy", "of": "N", "n": 1},
            "O2": {"type": "syzygy", "of": "N", "n": 2},
            "O3": {"type": "syzygy", "of": "N", "n": 3},
            "O4": {"type": "syzygy", "of": "N", "n": 4},
            "O2n": {"type": "twist", "of": "O2", "s": 2},
            "X": {"type": "direct_sum", "left": "N", "right": "O2n"},
            "OX2": {"type": "syzygy", "of": "X", "n": 2},
        },
        "tasks": [
            {"op": "betti", "module": "N", "window": 8},
            {"op": "periodicity", "module": "N", "q": 4, "window": 4},
            {"op": "is_isomorphic", "module": "N", "other": "O1"},
            {"op": "is_isomorphic", "module": "N", "other": "O2"},
            {"op": "is_isomorphic", "module": "N", "other": "O3"},
            {"op": "is_isomorphic", "module": "N", "other": "O4"},
            {"op": "is_isomorphic", "module": "X", "other": "OX2"},
        ],
        "expected": {
            "betti_0_to_8": [2] * 9,
            "periodicity": {"period": 4},
            "iso_verdicts": ["NOT_ISO", "NOT_ISO", "NOT_ISO", "ISO", "ISO"],
        },
    }


def _cusp_hw():
    return {
        "name": "cusp-hw",
        "field": 7,
        "variables": ["x", "y"],
        "weights": [3, 2],
        "ideal": ["x^2 - y^3"],
        "domain": True,
        "modules": {
            "m": {"type": "ideal", "gens": ["x", "y"]},
        },
        "tasks": [
            {"op": "hw_check", "module": "m"},
            {"op": "depth_zero_check", "module": "m"},
            {"op": "freeness_via_transpose", "module": "m"},
        ],
        "expected": {
            "hw_verdict": "CONJECTURE_HOLDS",
            "torsion_length_at_least": 1,
        },
    }


def _a1_surface_even_dim():
    return {
        "name": "a1-surface-even-dim",
        "field": 101,
        "variables": ["x", "y", "z"],
        "weights": [1, 1, 1],
        "ideal": ["x*z - y^2"],
        "domain": True,
        "modules": {
            "M": {"type": "presentation", "twists": [0, 0],
                  "matrix": [["x", "y"], ["y", "z"]]},
        },
        "tasks": [
            {"op": "even_dim_torsion_check", "module": "M"},
            {"op": "periodicity", "module": "M", "q": 2, "window": 4},
        ],
        "expected": {
            "even_dim_verdict": "TORSION_PRESENT",
        },
    }


def _fermat_style_dim1():
    return {
        "name": "fermat-style-dim1",
        "field": 101,
        "variables": ["x", "y"],
        "weights": [4, 3],
        "ideal": ["x^3 - y^4"],
        "domain": True,
        "modules": {
            "m": {"type": "ideal", "gens": ["x", "y"]},
        },
        "tasks": [
            {"op": "hw_check", "module": "m"},
            {"op": "freeness_via_transpose", "module": "m"},
        ],
        "expected": {
            "hw_verdict": "CONJECTURE_HOLDS",
            "torsion_length_at_least": 1,
        },
    }


def _torus_knot_dim1():
    return {
        "name": "torus-knot-dim1",
        "field": 101,
        "variables": ["x", "y"],
        "weights": [5, 2],
        "ideal": ["x^2 - y^5"],
        "domain": True,
        "modules": {
            "m": {"type": "ideal", "gens": ["x", "y"]},
        },
        "tasks": [
            {"op": "hw_check", "module": "m"},
            {"op": "freeness_via_transpose", "module": "m"},
        ],
        "expected": {
            "hw_verdict": "CONJECTURE_HOLDS",
            "torsion_length_at_least": 1,
        },
    }


_CATALOG = {
    "a1-threefold-theta": _a1_threefold_theta,
    "gasharov-peeva": _gasharov_peeva,
    "cusp-hw": _cusp_hw,
    "a1-surface-even-dim": _a1_surface_even_dim,
    "fermat-style-dim1": _fermat_style_dim1,
    "torus-knot-dim1": _torus_knot_dim1,
}


def catalog_names():
    return sorted(_CATALOG)


def catalog(name: str) -> dict:
    """The built-in job for a named example, with documented expectations."""
    fn = _CATALOG.get(name)
    if fn is None:
        raise JobError(f"unknown catalog entry {name!r}; available: "
                       + ", ".join(catalog_names()))
    return fn()
