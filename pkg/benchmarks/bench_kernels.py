"""Compare the compiled and pure-Python kernel backends on realistic inputs.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
from __future__ import annotations

import argparse
import timeit

from supervogan import _kernels_py
from supervogan.algebra_catalog import A, B, C, D, D21, F4
from supervogan.dynkin import _edge_codes, _labels, affine_diagram, finite_diagram
from supervogan.moves import eligible_mask, flip_masks

try:
    from supervogan import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def _path_graph(n: int):
    """Unlabeled path: automorphism search has to explore and reject many branches."""
    codes = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        codes[i][i + 1] = codes[i + 1][i] = 4
    return [0] * n, codes


def workloads():
    out = []
    for f in (A(4, 3), D(4, 3), D21(2), F4()):
        ad = affine_diagram(f)
        out.append((f"automorphisms {f}", "graph_automorphisms", (_labels(ad), _edge_codes(ad))))
    out.append(("automorphisms path(9)", "graph_automorphisms", _path_graph(9)))
    for f in (B(4, 4), C(8), D(4, 4), A(5, 4)):
        d = finite_diagram(f)
        ident = tuple(range(d.size))
        elig = eligible_mask(d, ident)
        out.append((f"flip orbits {f}", "flip_orbits", (elig, flip_masks(d, ident))))
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = [("python", _kernels_py)]
    if _kernels_c is not None:
        backends.append(("cython", _kernels_c))
    else:
        print("compiled backend not built; timing the python backend only")
    print(f"{'workload':32} " + " ".join(f"{name:>12}" for name, _ in backends) + "   speedup")
    for label, fn, inputs in workloads():
        ref = getattr(_kernels_py, fn)(*inputs)
        times = []
        for _, mod in backends:
            impl = getattr(mod, fn)
            assert impl(*inputs) == ref, f"{label}: backends disagree"
            t = min(timeit.repeat(lambda: impl(*inputs), number=1, repeat=args.repeat))
            times.append(t)
        speed = f"{times[0] / times[1]:8.1f}x" if len(times) == 2 and times[1] > 0 else ""
        print(f"{label:32} " + " ".join(f"{t * 1e3:10.3f}ms" for t in times) + f"  {speed}")


if __name__ == "__main__":
    main()
