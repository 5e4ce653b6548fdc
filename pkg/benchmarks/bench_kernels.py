"""Compare the compiled and pure-Python contour-quadrature kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Times the near-zone pair integral (mode 0) and the regulated retarded
integral (mode 1) on both backends and checks that they agree.
"""

import argparse
import timeit

from exvdw import kernels
from exvdw.core import EXCITED, GROUND, TwoLevelAtom
from exvdw.quadrature import resonance_contour
from exvdw.response import COHERENT, pole_expansion


def cases():
    pa, ra = pole_expansion(TwoLevelAtom(1.0), EXCITED, COHERENT, width=0.0)
    pb, rb = pole_expansion(TwoLevelAtom(0.9, 0.02), GROUND, COHERENT)
    near = resonance_contour(1, (1.0, 0.9), 0.02, 1e4)
    eta = 0.002
    far = resonance_contour(1, (1.0, 0.9), 0.02, 50 / eta)
    yield "near zone (mode 0)", (near, pa, ra, pb, rb, 0, 1.0, 0.0, 0.0, 1e-10, 4000)
    yield "retarded, R=1e-3 (mode 1)", (far, pa, ra, pb, rb, 1, 1e-3, eta, 0.0, 1e-10, 20000)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = [("python", kernels.python_integrate_path)]
    if kernels.compiled_integrate_path is not None:
        backends.insert(0, ("cython", kernels.compiled_integrate_path))
    else:
        print("compiled extension not built; timing the Python kernel only")
    print(f"{'case':28s} {'backend':8s} {'best ms':>10s} {'evals':>8s} {'speed-up':>9s}")
    for name, args_ in cases():
        times, values = {}, {}
        for label, fn in backends:
            number = 1 if label == "python" else 10
            t = min(timeit.repeat(lambda: fn(*args_), number=number, repeat=args.repeat))
            times[label] = 1e3 * t / number
            values[label] = fn(*args_)
        base = times["python"]
        for label, _ in backends:
            v = values[label]
            print(f"{name:28s} {label:8s} {times[label]:10.3f} {v[2]:8d} "
                  f"{base / times[label]:8.1f}x")
        if len(values) == 2:
            a, b = values["cython"][0], values["python"][0]
            print(f"{'':28s} relative difference {abs(a - b) / abs(b):.1e}")


if __name__ == "__main__":
    main()
