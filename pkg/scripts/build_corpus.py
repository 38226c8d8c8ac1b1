"""Regenerate corpus/ (rings, modules, instance files) from the definitions below.

    python3 scripts/build_corpus.py [outdir]
"""

import os
import sys

from linkage import quotient_ring
from linkage.generators import SimplicialComplex, random_monomial_module, stanley_reisner
from linkage.io import facets_to_text, module_to_text, ring_to_text
from linkage.resolution import PresentedModule

RANDOM_SEEDS = range(20)

COMPLEXES = {
    "nonpure": SimplicialComplex(4, [[1, 2, 3], [3, 4]]),
    "two_edges": SimplicialComplex(4, [[1, 2], [3, 4]]),
    "two_triangles": SimplicialComplex(6, [[1, 2, 3], [4, 5, 6]]),
}


def rings():
    return {
        "s2": quotient_ring("x y"),
        "s3": quotient_ring("x y z"),
        "s4": quotient_ring("x y z w"),
        "hyp": quotient_ring("x y", ["x*y"]),
        "hyp3": quotient_ring("x y z", ["x*y"]),
        "ci": quotient_ring("x y z w", ["x*z", "y*w"]),
        "cubic": quotient_ring("a b c d", ["a*c - b^2", "b*d - c^2", "a*d - b*c"]),
        "sr": stanley_reisner(COMPLEXES["nonpure"]),
        "hyp4": quotient_ring("x1 x2 x3 x4", ["x1*x4"]),
        "ci6": quotient_ring("x1 x2 x3 x4 x5 x6", ["x1*x4", "x2*x5", "x3*x6"]),
    }


def modules(R):
    q = PresentedModule.quotient
    ideal = PresentedModule.ideal
    mods = {
        "hyp_x": q(R["hyp"], ["x"]),
        "hyp_y": q(R["hyp"], ["y"]),
        "k2": q(R["s2"], ["x", "y"]),
        "m2": ideal(R["s2"], ["x", "y"]),
        "m2_plus_k2": ideal(R["s2"], ["x", "y"]).direct_sum(q(R["s2"], ["x", "y"])),
        "x2xy": q(R["s2"], ["x^2", "x*y"]),
        "fat3": q(R["s3"], ["x^2", "x*y", "y^2"]),
        "k3": q(R["s3"], ["x", "y", "z"]),
        "m3": ideal(R["s3"], ["x", "y", "z"]),
        "s3_x": q(R["s3"], ["x"]),
        "s3_free": R["s3"].as_module(),
        "planes_s4": q(R["s4"], ["x*z", "x*w", "y*z", "y*w"]),
        "ci_free": R["ci"].as_module(),
        "ci_planes": q(R["ci"], ["x*w", "y*z"]),
        "hyp3_fl": q(R["hyp3"], ["x", "y", "z^2"]),
        "cubic_free": R["cubic"].as_module(),
        "cubic_a": q(R["cubic"], ["a"]),
        "cubic_m": ideal(R["cubic"], ["a", "b", "c", "d"]),
        "cubic_omega": R["cubic"].canonical_module,
        "cubic_rand": q(R["cubic"], ["a^2", "b*d"]),
        "sr_free": R["sr"].as_module(),
        # the same Stanley-Reisner ring, as a module over a CM hypersurface
        "sr_over_hyp4": q(R["hyp4"], ["x2*x4"]),
        # two disjoint triangles: Buchsbaum, depth 1, over a 3-dim complete intersection
        "triangles": q(R["ci6"], ["x1*x5", "x1*x6", "x2*x4", "x2*x6", "x3*x4", "x3*x5"]),
    }
    for s in RANDOM_SEEDS:
        mods[f"rand{s:02d}"] = random_monomial_module(s, R["s3"], 3, 4)
    return mods


RANDOM_TAGS = ("prop-2.3", "thm-2.5", "cor-2.8", "seq-e")

INSTANCES = [
    ("prop-2.3", "hyp_x", {}),
    ("prop-2.3", "x2xy", {}),
    ("cor-2.4", "hyp_x", {}),
    ("cor-2.4", "cubic_omega", {}),
    ("cor-2.4", "ci_free", {}),
    ("thm-2.5", "x2xy", {}),
    ("thm-2.5", "planes_s4", {}),
    ("cor-2.8", "x2xy", {}),
    ("cor-2.8", "planes_s4", {}),
    ("prop-2.10", "s3_x", {"c1": "x*y", "c2": "y*z"}),
    ("prop-2.10", "fat3", {"c1": "x^2, y^2", "c2": "x^2, y^2"}),
    ("thm-2.11", "cubic_free", {}),
    ("thm-2.11", "cubic_a", {}),
    ("thm-2.11", "cubic_m", {}),
    ("thm-2.11", "cubic_omega", {}),
    ("thm-2.11", "cubic_rand", {}),
    ("seq-e", "x2xy", {}),
    ("seq-e", "planes_s4", {}),
    ("seq-e", "k3", {}),
    ("prop-3.1", "k2", {}),
    ("prop-3.1", "m2", {}),
    ("prop-3.1", "m2_plus_k2", {}),
    ("prop-3.1", "ci_planes", {}),
    ("prop-3.1", "cubic_m", {}),
    ("cor-3.2", "k2", {}),
    ("cor-3.2", "m2", {}),
    ("cor-3.2", "x2xy", {}),
    ("thm-3.3", "ci_planes", {}),
    ("thm-3.3", "m3", {}),
    ("thm-3.3", "cubic_m", {}),
    ("thm-3.3", "sr_free", {}),
    ("thm-3.3", "sr_over_hyp4", {}),
    ("thm-3.3", "triangles", {}),
    ("cor-3.4", "k3", {}),
    ("cor-3.4", "k2", {}),
    ("cor-3.4", "hyp3_fl", {}),
]


def main(out):
    R = rings()
    M = modules(R)
    for sub in ("rings", "modules", "instances", "complexes"):
        os.makedirs(os.path.join(out, sub), exist_ok=True)
    for name, ring in R.items():
        with open(os.path.join(out, "rings", f"{name}.ring"), "w") as fh:
            fh.write(ring_to_text(ring))
    for name, D in COMPLEXES.items():
        with open(os.path.join(out, "complexes", f"{name}.facets"), "w") as fh:
            fh.write(facets_to_text(D))
    for name, mod in M.items():
        with open(os.path.join(out, "modules", f"{name}.mod"), "w") as fh:
            fh.write(module_to_text(mod))
    insts = list(INSTANCES)
    for s in RANDOM_SEEDS:
        insts += [(tag, f"rand{s:02d}", {}) for tag in RANDOM_TAGS]
    for tag, mod, extra in insts:
        fname = f"{tag}__{mod}.toml"
        lines = [f'tag = "{tag}"', f'name = "{mod}"', f'module = "../modules/{mod}.mod"']
        lines += [f'{k} = "{v}"' for k, v in extra.items()]
        with open(os.path.join(out, "instances", fname), "w") as fh:
            fh.write("\n".join(lines) + "\n")
    print(f"wrote {len(R)} rings, {len(M)} modules, {len(insts)} instances to {out}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "..", "corpus"))
