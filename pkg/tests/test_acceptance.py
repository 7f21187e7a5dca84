"""Exit criteria.  Each test prints one PASS/FAIL line in the pytest summary."""

import random
import time

from indpoly.brackets import Bracket, extend_bracket, paste_brackets
from indpoly.cli import C6_TABLE, main
from indpoly.counting import (
    X,
    bracket,
    brute_force_census,
    independence_polynomial,
    oracle_cap,
    value_at_minus_one,
)
from indpoly.decycling import exhaustive_decycling, min_decycling
from indpoly.edgelist import write_edge_list
from indpoly.graph import (
    RootedGraph,
    delete_closed_neighborhood,
    delete_vertex,
    disjoint_union,
    extend,
    is_connected,
    make_complete,
    make_cycle,
    paste,
    random_graph,
)
from indpoly.synth import C6_CERT, ClaimForm, claim_graph, connectify, realize, synth
from indpoly.verify import engstrom_sweep, verify_certificate

PROBS = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)


def seeded_graphs(count, seed, n_min=1, n_max=12):
    rng = random.Random(seed)
    for i in range(count):
        yield random_graph(rng.randint(n_min, n_max), PROBS[i % len(PROBS)], rng)


def test_1_table_fixtures(tmp_path, capsys, acceptance_line):
    t0 = time.perf_counter()
    got = {}
    for name, g in [("K1", make_complete(1)), ("K2", make_complete(2)), ("C3", make_cycle(3)), ("C6", make_cycle(6))]:
        path = tmp_path / f"{name}.txt"
        write_edge_list(path, g)
        assert main(["eval", str(path)]) == 0
        got[name] = int(capsys.readouterr().out.splitlines()[0].split("=")[1])
    table_rc = main(["table", "c6"])
    capsys.readouterr()
    c6 = RootedGraph(make_cycle(6), 0)
    rows = [bracket(extend(c6, ell)).as_tuple() for ell in range(7)]
    elapsed = time.perf_counter() - t0
    ok = (
        got == {"K1": 0, "K2": -1, "C3": -2, "C6": 2}
        and table_rc == 0
        and rows == [(2, 1, -1), (1, 2, 1), (-1, 1, 2), (-2, -1, 1), (-1, -2, -1), (1, -1, -2), (2, 1, -1)]
        and rows == C6_TABLE
        and elapsed < 1.0
    )
    acceptance_line(1, ok, f"small-graph values {got}, C6^l table rows match, {elapsed:.2f}s")
    assert ok


def test_2_kq_sweep_exact(acceptance_line):
    t0 = time.perf_counter()
    cases = oracle_checked = 0
    failures = []
    for k in range(1, 5):
        for q in range(-(2**k), 2**k + 1):
            cases += 1
            g = realize(synth(k, q)).graph
            if g.n <= oracle_cap():
                val = brute_force_census(g)(-1)
                oracle_checked += 1
            else:
                val = value_at_minus_one(g)
            phi = min_decycling(g)[0]
            if not (is_connected(g) and val == q and phi == k):
                failures.append((k, q, val, phi))
    elapsed = time.perf_counter() - t0
    ok = cases == 64 and not failures and elapsed < 60
    acceptance_line(
        2, ok, f"{cases} cases, {oracle_checked} by census, failures {failures[:3]}, {elapsed:.1f}s"
    )
    assert ok


def test_3_spot_checks_at_k10(acceptance_line):
    t0 = time.perf_counter()
    bad = []
    for q in (0, 1, -1, 341, -341, 1023, -1023, 1024, -1024):
        rep = verify_certificate(synth(10, q))
        phi_clause = next(c for c in rep.clauses if c.name == "phi")
        if not rep.passed or "phi=10 via 10" not in phi_clause.detail:
            bad.append((q, rep.failed()))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 10
    acceptance_line(3, ok, f"k=10 certificates, failures {bad}, {elapsed:.2f}s")
    assert ok


def test_4_bracket_soundness(acceptance_line):
    graphs = list(seeded_graphs(200, seed=4, n_min=2))
    rng = random.Random(44)
    rooted = [RootedGraph(g, rng.randrange(g.n)) for g in graphs]
    fails = {"paste": 0, "extend": 0, "recursion": 0, "product": 0}
    for Gv, Hw in zip(rooted, rooted[1:] + rooted[:1]):
        if bracket(paste(Gv, Hw)) != paste_brackets(bracket(Gv), bracket(Hw)):
            fails["paste"] += 1
    for Gv in rooted:
        B = bracket(Gv)
        for ell in range(9):
            if bracket(extend(Gv, ell)) != extend_bracket(B, ell):
                fails["extend"] += 1
    for g in graphs:
        v = rng.randrange(g.n)
        lhs = independence_polynomial(g)
        rhs = independence_polynomial(delete_vertex(g, v)) + X * independence_polynomial(
            delete_closed_neighborhood(g, v)
        )
        fails["recursion"] += lhs != rhs
    for g, h in zip(graphs[::2], graphs[1::2]):
        if independence_polynomial(disjoint_union(g, h)) != independence_polynomial(g) * independence_polynomial(h):
            fails["product"] += 1
    ok = not any(fails.values())
    acceptance_line(4, ok, f"200 rooted graphs, failures {fails}")
    assert ok


def test_5_engstrom_bound(acceptance_line):
    rep = engstrom_sweep(n_max=10, trials=1000, seed=5)
    # a connected tight case built by the synthesizer: |I| = 2^k
    tight = realize(connectify(C6_CERT, C6_CERT)).graph
    tight_ok = abs(value_at_minus_one(tight)) == 4 and min_decycling(tight)[0] == 2 and is_connected(tight)
    ok = rep.passed and rep.checked >= 1000 and any(p >= 1 for p in rep.tight_by_phi) and tight_ok
    acceptance_line(5, ok, rep.to_text() + f"; connectified C6,C6 tight: {tight_ok}")
    assert ok


def test_6_oracle_equivalence(acceptance_line):
    poly_bad = sum(independence_polynomial(g) != brute_force_census(g) for g in seeded_graphs(300, seed=6))
    phi_bad = sum(min_decycling(g)[0] != exhaustive_decycling(g) for g in seeded_graphs(300, seed=66))
    ok = poly_bad == 0 and phi_bad == 0
    acceptance_line(6, ok, f"polynomial discrepancies {poly_bad}/300, phi discrepancies {phi_bad}/300")
    assert ok


def test_7_claim_forms(acceptance_line):
    t0 = time.perf_counter()
    checked, bad = 0, []
    for k in range(1, 7):
        for q in range(1, 2**k, 2):
            cert, form = claim_graph(k, q)
            want = Bracket(q, 2**k, 2**k - q) if form is ClaimForm.FORM1 else Bracket(q, q - 2**k, -(2**k))
            if cert.tree.bracket != want or bracket(realize(cert)) != want:
                bad.append((k, q))
            checked += 1
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 30
    acceptance_line(7, ok, f"{checked} odd targets for k<=6, failures {bad}, {elapsed:.2f}s")
    assert ok
