import pytest
from hypothesis import given
from hypothesis import strategies as st

from indpoly.brackets import Bracket
from indpoly.counting import bracket, brute_force_census, value_at_minus_one
from indpoly.decycling import min_decycling
from indpoly.graph import Graph, is_connected, make_path
from indpoly.synth import (
    C6_CERT,
    K1_CERT,
    K2_CERT,
    Base,
    BoundViolation,
    Certificate,
    CertificateError,
    ClaimForm,
    Extend,
    InconsistentCertificate,
    Paste,
    base,
    check_claims,
    claim_graph,
    connectify,
    ext,
    from_json,
    glue,
    predicted_bracket,
    predicted_phi,
    realize,
    realize_with_blocks,
    structure_problems,
    synth,
    to_json,
    vertex_count,
)

from conftest import enum_value


def kq(cert):
    g = realize(cert).graph
    return min_decycling(g)[0], value_at_minus_one(g), is_connected(g)


def test_realize_bases():
    rg = realize(base("C6"))
    assert rg.root == 0 and bracket(rg) == Bracket(2, 1, -1)
    c61 = realize(ext(base("C6"), 1))
    assert c61.n == 7 and bracket(c61) == Bracket(1, 2, 1)
    p = realize(glue(ext(base("C6"), 1), ext(base("C6"), 1)))
    assert p.n == 13 and enum_value(p.graph) == 3


def test_realize_rejects_malformed():
    with pytest.raises(CertificateError):
        realize(Paste(base("K1"), base("C6"), Bracket(0, 1, 1), 1))
    with pytest.raises(CertificateError):
        realize(Base("K7", Bracket(0, 0, 0), 0))
    with pytest.raises(CertificateError):
        realize(Extend(-1, base("C6"), Bracket(2, 1, -1), 1))


def test_predicted_folds():
    assert predicted_bracket(base("C6")) == Bracket(2, 1, -1) and predicted_phi(base("C6")) == 1
    e3 = ext(base("C6"), 3)
    assert predicted_bracket(e3) == Bracket(-2, -1, 1) and predicted_phi(e3) == 1
    p3 = glue(base("K2"), base("K2"))
    assert predicted_bracket(p3) == Bracket(-1, 0, 1) and predicted_phi(p3) == 0
    g = realize(p3).graph
    assert g.n == 3 and g.m == 2 and enum_value(g) == -1


def test_tampered_claims_detected():
    node = glue(ext(base("C6"), 1), ext(base("C6"), 1))
    check_claims(node)
    bad = Paste(node.left, node.right, Bracket(5, 5, 0), node.phi)
    with pytest.raises(InconsistentCertificate):
        check_claims(bad)
    with pytest.raises(InconsistentCertificate):
        check_claims(Paste(node.left, node.right, node.bracket, 3))


def test_connectify_examples():
    c = connectify(C6_CERT, K2_CERT)
    assert (c.k, c.q) == (1, -2)
    assert kq(c) == (1, -2, True)
    c = connectify(synth(3, 5), C6_CERT)
    assert (c.k, c.q) == (4, 10) and kq(c) == (4, 10, True)
    c = connectify(synth(2, -3), K1_CERT)
    assert (c.k, c.q) == (2, 0) and kq(c) == (2, 0, True)
    assert c.tree.bracket.value == 0


def test_connectify_k2_wrap_alone_keeps_the_wrong_sign():
    # ((F'^2 ^ K2^2)^1 multiplies by -(-1) = 1, leaving -q1*q2
    inner = ext(glue(ext(C6_CERT.tree, 2), ext(K2_CERT.tree, 2)), 1)
    literal = ext(glue(ext(inner, 2), ext(base("K2"), 2)), 1)
    assert value_at_minus_one(realize(literal).graph) == 2
    assert value_at_minus_one(realize(connectify(C6_CERT, K2_CERT)).graph) == -2


def test_claim_graph_examples():
    cert, form = claim_graph(1, 1)
    assert form is ClaimForm.FORM1 and cert.tree.bracket == Bracket(1, 2, 1)
    cert, form = claim_graph(2, 3)
    assert form is ClaimForm.FORM1 and cert.tree == glue(ext(base("C6"), 1), ext(base("C6"), 1))
    assert cert.tree.bracket == Bracket(3, 4, 1)
    cert, form = claim_graph(2, 1)
    assert form is ClaimForm.FORM2 and cert.tree.bracket == Bracket(1, -3, -4)
    assert bracket(realize(cert)) == Bracket(1, -3, -4)


@pytest.mark.parametrize("k,q", [(2, 2), (2, 4), (2, 0), (0, 1), (3, -1)])
def test_claim_graph_rejects(k, q):
    with pytest.raises(ValueError):
        claim_graph(k, q)


def test_synth_k1_rotates_c6():
    for q, ell in [(2, 0), (1, 1), (-1, 2), (-2, 3)]:
        c = synth(1, q)
        assert c.tree == ext(base("C6"), ell)
        assert kq(c) == (1, q, True)


def test_synth_examples():
    assert kq(synth(2, -3)) == (2, -3, True)
    c = synth(3, 8)
    assert kq(c) == (3, 8, True)
    # doubled twice from (1, 2)
    assert c.tree.bracket.value == 8


def test_synth_rejects():
    with pytest.raises(BoundViolation):
        synth(1, 3)
    with pytest.raises(BoundViolation):
        synth(3, -9)
    with pytest.raises(ValueError):
        synth(0, 0)


def _root_on_cycle(rg) -> bool:
    G, r = rg.graph, rg.root
    for w in G.adj[r]:
        seen, stack = {w}, [w]
        while stack:
            u = stack.pop()
            for x in G.adj[u]:
                if x == r and u != w:
                    return True
                if x != r and x not in seen:
                    seen.add(x)
                    stack.append(x)
    return False


def _paste_nodes(node):
    if isinstance(node, Paste):
        yield node
        yield from _paste_nodes(node.left)
        yield from _paste_nodes(node.right)
    elif isinstance(node, Extend):
        yield from _paste_nodes(node.child)


def test_root_on_cycle_helper():
    assert _root_on_cycle(realize(base("C6")))
    assert not _root_on_cycle(realize(ext(base("C6"), 1)))


ks = st.integers(1, 5)


@st.composite
def targets(draw):
    k = draw(ks)
    return k, draw(st.integers(-(2**k), 2**k))


@given(targets())
def test_end_to_end(target):
    k, q = target
    cert = synth(k, q)
    assert (cert.k, cert.q) == (k, q)
    real = realize_with_blocks(cert)
    g = real.rooted.graph
    assert value_at_minus_one(g) == q
    assert is_connected(g)
    assert predicted_phi(cert.tree) == k == len(real.cycle_blocks)
    assert bracket(real.rooted) == predicted_bracket(cert.tree) == cert.tree.bracket
    assert g.n <= 30 * k + 30
    assert not structure_problems(cert.tree)
    for p in _paste_nodes(cert.tree):
        assert vertex_count(p.left) >= 2 and vertex_count(p.right) >= 2
        assert not _root_on_cycle(realize(p.left)) and not _root_on_cycle(realize(p.right))
    if k <= 3:
        assert min_decycling(g)[0] == k
    if g.n <= 25:
        assert brute_force_census(g)(-1) == q


@given(st.integers(1, 6), st.data())
def test_claim_forms(k, data):
    q = data.draw(st.integers(0, 2 ** (k - 1) - 1)) * 2 + 1
    cert, form = claim_graph(k, q)
    assert cert.tree.bracket == form.bracket(k, q)
    assert cert.form is form


@given(targets())
def test_certificate_json_round_trip(target):
    cert = synth(*target)
    assert from_json(to_json(cert)) == cert


def test_certificate_json_errors():
    with pytest.raises(CertificateError):
        from_json("{")
    with pytest.raises(CertificateError):
        from_json('{"version": "cert-v0"}')
    with pytest.raises(CertificateError):
        from_json('{"version": "cert-v1", "target": {"k": 1, "q": 2}, "tree": {"kind": "twist"}}')
    with pytest.raises(CertificateError):
        from_json('{"version": "cert-v1", "target": {"k": 1, "q": 2},'
                  ' "tree": {"kind": "extend", "ell": 1, "bracket": [1, 2, 1], "phi": 1, "children": []}}')


def test_certificate_is_plain_data():
    cert = synth(2, 3)
    assert isinstance(cert, Certificate)
    assert realize(cert) == realize(cert)
    assert isinstance(realize(K1_CERT).graph, Graph)
    assert realize(ext(base("K1"), 2)).graph == make_path(3)
