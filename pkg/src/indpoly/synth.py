"""Construction of connected (k, q)-graphs as checkable operation trees.

A certificate is a tree over the base graphs K1, K2 and C6 with two kinds
of internal node, ``Extend`` (hang a path at the root) and ``Paste``
(glue two roots).  Every node carries the bracket and decycling number it
claims; :func:`realize` builds the actual graph so the claims can be
checked independently.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Union

from .brackets import (
    C6_BRACKET,
    K1_BRACKET,
    K2_BRACKET,
    Bracket,
    extend_bracket,
    paste_brackets,
)
from .graph import RootedGraph, extend as extend_graph, make_complete, make_cycle, paste_with_map

CERT_VERSION = "cert-v1"

BASES = {
    "K1": (K1_BRACKET, 0),
    "K2": (K2_BRACKET, 0),
    "C6": (C6_BRACKET, 1),
}


class CertificateError(ValueError):
    """Malformed certificate tree."""


class InconsistentCertificate(CertificateError):
    """A claimed bracket or phi disagrees with the bottom-up fold."""


class BoundViolation(ValueError):
    """|q| > 2**k, impossible since |I(G;-1)| <= 2**phi(G) for every graph."""


@dataclass(frozen=True)
class Base:
    name: str
    bracket: Bracket
    phi: int


@dataclass(frozen=True)
class Extend:
    ell: int
    child: Node
    bracket: Bracket
    phi: int


@dataclass(frozen=True)
class Paste:
    left: Node
    right: Node
    bracket: Bracket
    phi: int


Node = Union[Base, Extend, Paste]


class ClaimForm(enum.Enum):
    FORM1 = "form1"  # <q, 2^k, 2^k - q>
    FORM2 = "form2"  # <q, q - 2^k, -2^k>

    def bracket(self, k: int, q: int) -> Bracket:
        if self is ClaimForm.FORM1:
            return Bracket(q, 2**k, 2**k - q)
        return Bracket(q, q - 2**k, -(2**k))


@dataclass(frozen=True)
class Certificate:
    tree: Node
    k: int
    q: int
    form: ClaimForm | None = None


# builders fill in the claimed fields from the bracket algebra --------------

def base(name: str) -> Base:
    if name not in BASES:
        raise CertificateError(f"unknown base graph {name!r}")
    br, phi = BASES[name]
    return Base(name, br, phi)


def ext(node: Node, ell: int) -> Node:
    if ell == 0:
        return node
    return Extend(ell, node, extend_bracket(node.bracket, ell), node.phi)


def glue(left: Node, right: Node) -> Paste:
    return Paste(left, right, paste_brackets(left.bracket, right.bracket), left.phi + right.phi)


# folds -------------------------------------------------------------------------

def _children(node: Node) -> tuple[Node, ...]:
    if isinstance(node, Base):
        return ()
    if isinstance(node, Extend):
        return (node.child,)
    if isinstance(node, Paste):
        return (node.left, node.right)
    raise CertificateError(f"not a certificate node: {node!r}")


def vertex_count(node: Node) -> int:
    if isinstance(node, Base):
        return {"K1": 1, "K2": 2, "C6": 6}[node.name]
    if isinstance(node, Extend):
        return vertex_count(node.child) + node.ell
    return vertex_count(node.left) + vertex_count(node.right) - 1


def structure_problems(node: Node) -> list[str]:
    """Shape errors: unknown kinds or bases, bad lengths, small paste operands."""
    out: list[str] = []
    if isinstance(node, Base):
        if node.name not in BASES:
            out.append(f"unknown base {node.name!r}")
    elif isinstance(node, Extend):
        if not isinstance(node.ell, int) or node.ell < 0:
            out.append(f"bad extension length {node.ell!r}")
        out += structure_problems(node.child)
    elif isinstance(node, Paste):
        for side in (node.left, node.right):
            sub = structure_problems(side)
            out += sub
            if not sub and vertex_count(side) < 2:
                out.append("paste operand with fewer than 2 vertices")
    else:
        out.append(f"not a certificate node: {type(node).__name__}")
    return out


def predicted_bracket(node: Node) -> Bracket:
    """Bracket folded bottom-up from the base brackets, ignoring claims."""
    if isinstance(node, Base):
        return BASES[node.name][0]
    if isinstance(node, Extend):
        return extend_bracket(predicted_bracket(node.child), node.ell)
    if isinstance(node, Paste):
        return paste_brackets(predicted_bracket(node.left), predicted_bracket(node.right))
    raise CertificateError(f"not a certificate node: {node!r}")


def predicted_phi(node: Node) -> int:
    if isinstance(node, Base):
        return BASES[node.name][1]
    if isinstance(node, Extend):
        return predicted_phi(node.child)
    if isinstance(node, Paste):
        return predicted_phi(node.left) + predicted_phi(node.right)
    raise CertificateError(f"not a certificate node: {node!r}")


def claim_problems(node: Node, path: str = "root") -> list[str]:
    out = []
    for i, child in enumerate(_children(node)):
        out += claim_problems(child, f"{path}.{i}")
    br, phi = predicted_bracket(node), predicted_phi(node)
    if node.bracket != br:
        out.append(f"{path}: claimed bracket {node.bracket} but fold gives {br}")
    if node.phi != phi:
        out.append(f"{path}: claimed phi {node.phi} but fold gives {phi}")
    return out


def check_claims(node: Node) -> None:
    problems = claim_problems(node)
    if problems:
        raise InconsistentCertificate("; ".join(problems))


# realization -------------------------------------------------------------------

@dataclass(frozen=True)
class Realization:
    rooted: RootedGraph
    cycle_blocks: tuple[tuple[int, ...], ...]  # each C6 base, in cycle order


def _base_graph(name: str) -> RootedGraph:
    g = {"K1": make_complete(1), "K2": make_complete(2), "C6": make_cycle(6)}[name]
    return RootedGraph(g, 0)


def _realize(node: Node) -> Realization:
    if isinstance(node, Base):
        rg = _base_graph(node.name)
        blocks = (tuple(range(6)),) if node.name == "C6" else ()
        return Realization(rg, blocks)
    if isinstance(node, Extend):
        inner = _realize(node.child)
        return Realization(extend_graph(inner.rooted, node.ell), inner.cycle_blocks)
    left, right = _realize(node.left), _realize(node.right)
    rg, hmap = paste_with_map(left.rooted, right.rooted)
    moved = tuple(tuple(hmap[v] for v in blk) for blk in right.cycle_blocks)
    return Realization(rg, left.cycle_blocks + moved)


def realize_with_blocks(cert: Certificate | Node) -> Realization:
    node = cert.tree if isinstance(cert, Certificate) else cert
    problems = structure_problems(node)
    if problems:
        raise CertificateError("; ".join(problems))
    return _realize(node)


def realize(cert: Certificate | Node) -> RootedGraph:
    """Deterministic rooted graph for a certificate; bases are rooted at 0."""
    return realize_with_blocks(cert).rooted


# the construction ----------------------------------------------------------

def connectify(G: Certificate, H: Certificate) -> Certificate:
    """Connected (k1 + k2, q1 * q2)-graph from a (k1, q1)- and a (k2, q2)-graph.

    ``F' = (G^2 ^ H^2)^1`` has value -q1*q2; a 3-extension flips the sign.
    The 2-extensions make the roots pendant and both paste operands have
    at least 3 vertices.
    """
    inner = ext(glue(ext(G.tree, 2), ext(H.tree, 2)), 1)
    return Certificate(ext(inner, 3), G.k + H.k, G.q * H.q)


def _base_cert(name: str) -> Certificate:
    node = base(name)
    return Certificate(node, node.phi, node.bracket.value)


K1_CERT = _base_cert("K1")
K2_CERT = _base_cert("K2")
C6_CERT = _base_cert("C6")


def claim_graph(k: int, q: int) -> tuple[Certificate, ClaimForm]:
    """Connected (k, q)-graph for odd 0 < q < 2**k whose bracket has 2**k in it.

    Upper half (q > 2**(k-1)): paste C6^1 (or C6^2) onto the claim graph for
    (k-1, 2**(k-1) - r) where r = 2**k - q.  Lower half: extend the upper-half
    graph for 2**k - q by 4 (form 1 -> form 2) or 2 (form 2 -> form 1).
    """
    if k < 1:
        raise ValueError("k must be positive")
    if q % 2 == 0 or not 0 < q < 2**k:
        raise ValueError(f"claim graphs need odd q in (0, {2**k}), got {q}")
    if k == 1:
        return Certificate(ext(base("C6"), 1), 1, 1, ClaimForm.FORM1), ClaimForm.FORM1
    half = 2 ** (k - 1)
    if q > half:
        r = 2**k - q
        child, form = claim_graph(k - 1, half - r)
        ell = 1 if form is ClaimForm.FORM1 else 2
        node = glue(child.tree, ext(base("C6"), ell))
    else:
        upper, upper_form = claim_graph(k, 2**k - q)
        ell, form = (4, ClaimForm.FORM2) if upper_form is ClaimForm.FORM1 else (2, ClaimForm.FORM1)
        node = ext(upper.tree, ell)
    return Certificate(node, k, q, form), form


_K1_ROTATION = {2: 0, 1: 1, -1: 2, -2: 3}


def synth(k: int, q: int) -> Certificate:
    """Certificate for a connected graph with phi = k and I(G;-1) = q."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    if abs(q) > 2**k:
        raise BoundViolation(f"|q| = {abs(q)} exceeds 2^k = {2**k}: |I(G;-1)| <= 2^phi(G)")
    if q == 0:
        return connectify(synth(k, 1), K1_CERT)
    if k == 1:
        return Certificate(ext(base("C6"), _K1_ROTATION[q]), 1, q)
    if q < 0:
        return connectify(synth(k, -q), K2_CERT)
    if q % 2 == 0:
        return connectify(synth(k - 1, q // 2), C6_CERT)
    return claim_graph(k, q)[0]


# serialization ---------------------------------------------------------------

def node_to_dict(node: Node) -> dict:
    d: dict = {"kind": type(node).__name__.lower()}
    if isinstance(node, Base):
        d["base"] = node.name
    elif isinstance(node, Extend):
        d["ell"] = node.ell
    d["bracket"] = list(node.bracket.as_tuple())
    d["phi"] = node.phi
    kids = _children(node)
    if kids:
        d["children"] = [node_to_dict(c) for c in kids]
    return d


def node_from_dict(d: dict) -> Node:
    try:
        kind = d["kind"]
        br = Bracket(*d["bracket"])
        phi = d["phi"]
        kids = [node_from_dict(c) for c in d.get("children", [])]
        if kind == "base":
            if kids:
                raise CertificateError("base node with children")
            return Base(d["base"], br, phi)
        if kind == "extend":
            (child,) = kids
            return Extend(d["ell"], child, br, phi)
        if kind == "paste":
            left, right = kids
            return Paste(left, right, br, phi)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, CertificateError):
            raise
        raise CertificateError(f"malformed node: {exc}") from exc
    raise CertificateError(f"unknown node kind {kind!r}")


def to_json(cert: Certificate, indent: int | None = 1) -> str:
    doc = {
        "version": CERT_VERSION,
        "target": {"k": cert.k, "q": cert.q},
        "tree": node_to_dict(cert.tree),
    }
    if cert.form is not None:
        doc["form"] = cert.form.value
    return json.dumps(doc, indent=indent)


def from_json(text: str) -> Certificate:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateError(f"not JSON: {exc}") from exc
    if doc.get("version") != CERT_VERSION:
        raise CertificateError(f"expected version {CERT_VERSION!r}, got {doc.get('version')!r}")
    try:
        target = doc["target"]
        form = ClaimForm(doc["form"]) if "form" in doc else None
        return Certificate(node_from_dict(doc["tree"]), target["k"], target["q"], form)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, CertificateError):
            raise
        raise CertificateError(f"malformed certificate: {exc}") from exc
