#!/usr/bin/env python3
"""Print a star-product multiplication table for low-degree monomials.

Shows both the primal product and its left-right dual for a chosen builtin
algebra, together with the first-order comparison against the Lie-Poisson
bracket, as a quick qualitative sanity check of the engine.
"""

import argparse
import itertools

from lieweyl import (
    I,
    Polynomial,
    Scalar,
    g2_algebra,
    kappa_algebra,
    make_context,
    poisson_first_order,
    star,
    su2_algebra,
)


def monomials(n, max_degree):
    for exps in itertools.product(range(max_degree + 1), repeat=n):
        if 1 <= sum(exps) <= max_degree:
            yield Polynomial(n, {exps: Scalar(1)})


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument(
        "algebra", nargs="?", default="g2", choices=("g2", "su2", "kappa3")
    )
    ap.add_argument("--max-degree", type=int, default=2)
    ap.add_argument("--order", type=int, default=6)
    args = ap.parse_args()

    g = {
        "g2": g2_algebra,
        "su2": su2_algebra,
        "kappa3": lambda: kappa_algebra([I, Scalar(0), Scalar(0)]),
    }[args.algebra]()
    ctx = make_context(g, args.order)

    monos = list(monomials(g.n, args.max_degree))
    for f, h in itertools.product(monos, repeat=2):
        prod = star(ctx, f, h)
        dual = star(ctx, f, h, "dual")
        line = f"({f}) * ({h}) = {prod}"
        if dual != prod:
            line += f"   [dual: {dual}]"
        print(line)

    print()
    print("first-order check on generator pairs:")
    for mu in range(g.n):
        for nu in range(g.n):
            f = Polynomial.variable(g.n, mu)
            h = Polynomial.variable(g.n, nu)
            comm = star(ctx, f, h) - star(ctx, h, f)
            pb = poisson_first_order(g, f, h)
            mark = "ok" if comm == pb else "MISMATCH"
            print(f"  [x{mu + 1}, x{nu + 1}]_* = {comm}   {{.,.}} = {pb}   {mark}")


if __name__ == "__main__":
    main()
