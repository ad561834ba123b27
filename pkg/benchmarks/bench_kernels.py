"""Compare the compiled and pure-Python kernels on the largest suite group.

Run with ``python benchmarks/bench_kernels.py [--repeat N]``.
"""
import argparse
import time

from intcayley import kernels, make_group
from intcayley.characters import weights
from intcayley.cyclotomic import cyclotomic_poly
from intcayley.divisors import equiv_class
from intcayley.group import elements
from intcayley.spectra import c_bruteforce_row, spectrum


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def workloads(G):
    es = elements(G)
    W, N = weights(G), G.exponent_N
    modulus = cyclotomic_poly(N).coeffs
    x = G.crt_forward((1, 1, 4))
    # a union of two classes, so the spectrum is integral
    S = equiv_class(G, x).members | equiv_class(G, G.crt_forward((0, 1, 0))).members
    conn = sorted(S)
    alpha, lam = spectrum(G, S).per_alpha[7]

    return {
        "psi_exponents (625 elems x 625 alphas)": lambda: [kernels.psi_exponents(a, es, W, N) for a in es],
        "char_sum_table (625 alphas, |S| = %d)" % len(S): lambda: kernels.char_sum_table(
            es, conn, W, N, modulus
        ),
        "c_bruteforce_row (x = (1,1,4))": lambda: c_bruteforce_row(G, x),
        "eigen_rows_hold (one alpha, |S| = %d)" % len(S): lambda: kernels.eigen_rows_hold(
            alpha, es, conn, G.canonical_factors, W, N, modulus, lam
        ),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    G = make_group([5, 5, 25])
    jobs = workloads(G)
    backends = kernels.available_backends()
    print(f"group Z5 x Z5 x Z25, backends: {', '.join(backends)}")
    print(f"{'workload':<45}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    for name, fn in jobs.items():
        row = {}
        for b in backends:
            with kernels.using(b):
                row[b] = best_of(fn, args.repeat)
        line = f"{name:<45}" + "".join(f"{row[b] * 1e3:>10.2f}ms" for b in backends)
        if "cython" in row:
            line += f"{row['python'] / row['cython']:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
