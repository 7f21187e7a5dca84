"""Recompute the two small-value tables: I(G;-1) for K1, K2, C3, C6 and the brackets of C6^l."""

from indpoly.counting import bracket, value_at_minus_one
from indpoly.graph import RootedGraph, extend, make_complete, make_cycle

if __name__ == "__main__":
    print("G    I(G;-1)")
    for name, g in [("K1", make_complete(1)), ("K2", make_complete(2)), ("C3", make_cycle(3)), ("C6", make_cycle(6))]:
        print(f"{name:<4} {value_at_minus_one(g)}")
    print()
    print("l    bracket of C6^l")
    c6 = RootedGraph(make_cycle(6), 0)
    for ell in range(7):
        print(f"{ell:<4} {bracket(extend(c6, ell))}")
