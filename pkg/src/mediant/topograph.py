"""The topograph on extended rationals, restricted to the forward flow.

Vertices are unordered triples of pairwise Z-distinct extended rationals; two
vertices are adjacent when they share a pair.  Each Z-distinct pair belongs to
exactly two triples (its mediant and its difference), so directing the edge
{0/1, 1/0} toward {0/1, 1/0, 1/1} induces a flow with in-degree one
everywhere, and the forward flow unfolds into a binary tree of oriented
frames.  Conjugating each frame's Moebius matrix reproduces the matrix tree,
and verify_topograph_proof checks that correspondence exhaustively.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Any, Iterator, Optional

from ._sweep import earliest_failure, run_spans
from .matrices import Mat2, Path, from_path, validate_path
from .rational import ExtendedRational, is_z_distinct, mediant
from .trees import sb_node

__all__ = [
    "OrientedVertex",
    "TopographReport",
    "Vertex",
    "conjugate_shadow",
    "farey_label",
    "forward_tree",
    "neighbors",
    "triples_containing",
    "verify_topograph_proof",
    "vertex_matrix",
]

_ZERO = ExtendedRational(0, 1)
_ONE = ExtendedRational(1, 1)
_INF = ExtendedRational(1, 0)


@dataclass(frozen=True)
class Vertex:
    """An unordered triple of pairwise Z-distinct extended rationals.

    Elements are stored sorted, so equal triples compare equal regardless of
    construction order.
    """

    elements: tuple[ExtendedRational, ExtendedRational, ExtendedRational]

    def __init__(self, x: ExtendedRational, y: ExtendedRational, z: ExtendedRational):
        triple = tuple(sorted((x, y, z)))
        for i in range(3):
            for j in range(i + 1, 3):
                if not is_z_distinct(triple[i], triple[j]):
                    raise ValueError(
                        f"not Z-distinct: {triple[i]}, {triple[j]}"
                    )
        object.__setattr__(self, "elements", triple)

    def __str__(self) -> str:
        return "{%s}" % ", ".join(str(e) for e in self.elements)


@dataclass(frozen=True)
class OrientedVertex:
    """A forward-flow frame: region labels left, right, forward at a path.

    left < right, forward is their mediant, and with left = a/c, right = b/d
    the frame determinant ad - bc is -1.  Frames are produced by forward_tree;
    the invariants are checked by verify_topograph_proof rather than here.
    """

    left: ExtendedRational
    right: ExtendedRational
    forward: ExtendedRational
    path: Path


def triples_containing(
    x: ExtendedRational, y: ExtendedRational
) -> tuple[Vertex, Vertex]:
    """The two triples through a Z-distinct pair: mediant and difference.

    The difference (x.num - y.num)/(x.den - y.den) is canonicalized, so its
    sign convention never leaks out.
    """
    if not is_z_distinct(x, y):
        raise ValueError(f"not a Z-distinct pair: {x}, {y}")
    med = ExtendedRational(x.num + y.num, x.den + y.den)
    diff = ExtendedRational(x.num - y.num, x.den - y.den)
    return Vertex(x, y, med), Vertex(x, y, diff)


def neighbors(v: Vertex) -> tuple[Vertex, Vertex, Vertex]:
    """For each pair inside v, the other triple containing that pair."""
    x, y, z = v.elements
    out = []
    for pair in ((x, y), (x, z), (y, z)):
        first, second = triples_containing(*pair)
        out.append(second if first == v else first)
    return tuple(out)


def forward_tree(depth: int, prefix: Path = "") -> Iterator[OrientedVertex]:
    """BFS of forward-flow frames from the root edge {0/1, 1/0}.

    Root frame (left 0/1, right 1/0, forward 1/1).  The left child keeps the
    left label and advances across the edge {left, forward}; the right child
    keeps the right label.  Yields 2^(depth+1) - 1 frames for levels
    0..depth; a non-empty `prefix` restricts to that subtree, as in
    trees.level_iter.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    validate_path(prefix)
    if len(prefix) > depth:
        raise ValueError("prefix cannot be longer than depth")
    return _forward_tree(depth, prefix)


def _forward_tree(depth: int, prefix: Path) -> Iterator[OrientedVertex]:
    left, right = _ZERO, _INF
    forward = _ONE
    for step in prefix:
        if step == "L":
            right = forward
        else:
            left = forward
        forward = mediant(left, right)
    states = [(prefix, left, right, forward)]
    for level in range(len(prefix), depth + 1):
        for path, left, right, forward in states:
            yield OrientedVertex(left=left, right=right, forward=forward, path=path)
        if level == depth:
            break
        states = [
            child
            for path, left, right, forward in states
            for child in (
                (path + "L", left, forward, mediant(left, forward)),
                (path + "R", forward, right, mediant(forward, right)),
            )
        ]


def farey_label(v: OrientedVertex) -> ExtendedRational:
    """The peak label of the frame: the region between its outgoing edges."""
    return v.forward


def vertex_matrix(v: OrientedVertex) -> Mat2:
    """The Moebius matrix of the frame: sends 1/0, 0/1, 1/1 to left, right, forward.

    With left = a/c and right = b/d this is (a b; c d), determinant -1.
    """
    return Mat2.frame(v.left.num, v.right.num, v.left.den, v.right.den)


def conjugate_shadow(m: Mat2) -> Mat2:
    """(a b; c d) -> (c a; d b): carries vertex matrices onto the matrix tree.

    Flips the determinant, so a frame matrix (det -1) lands in the monoid;
    anything else is rejected by the member constructor.
    """
    return Mat2(m.c, m.a, m.d, m.b)


@dataclass(frozen=True)
class TopographReport:
    """Outcome of one exhaustive forward-flow sweep."""

    depth: int
    frames: int
    conjugation_failures: int
    label_failures: int
    mobius_failures: int
    frame_failures: int
    first_failure_path: Optional[str]
    elapsed_s: float

    @property
    def ok(self) -> bool:
        return (
            self.conjugation_failures == 0
            and self.label_failures == 0
            and self.mobius_failures == 0
            and self.frame_failures == 0
        )

    def as_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "depth": self.depth,
            "frames": self.frames,
            "conjugation_failures": self.conjugation_failures,
            "label_failures": self.label_failures,
            "mobius_failures": self.mobius_failures,
            "frame_failures": self.frame_failures,
        }
        if self.first_failure_path is not None:
            out["first_failure_path"] = self.first_failure_path
        out["elapsed_s"] = self.elapsed_s
        return out


def _frame_ok(v: OrientedVertex) -> bool:
    det = v.left.num * v.right.den - v.left.den * v.right.num
    if det != -1:
        return False
    if v.forward != ExtendedRational(v.left.num + v.right.num, v.left.den + v.right.den):
        return False
    return is_z_distinct(v.left, v.forward) and is_z_distinct(v.forward, v.right)


def _check_span(prefix: str, depth: int) -> tuple[int, int, int, int, int, Optional[str]]:
    """Run the four per-frame checks over one subtree span."""
    frames = conj_bad = label_bad = mobius_bad = frame_bad = 0
    first: Optional[str] = None
    for v in forward_tree(depth, prefix):
        frames += 1
        hit = False
        try:
            ok = conjugate_shadow(vertex_matrix(v)) == from_path(v.path)
        except (TypeError, ValueError):
            ok = False
        if not ok:
            conj_bad += 1
            hit = True
        if farey_label(v) != sb_node(v.path).value:
            label_bad += 1
            hit = True
        try:
            ok = vertex_matrix(v)(_ONE) == v.forward
        except (TypeError, ValueError):
            ok = False
        if not ok:
            mobius_bad += 1
            hit = True
        if not _frame_ok(v):
            frame_bad += 1
            hit = True
        if hit and first is None:
            first = v.path
    return frames, conj_bad, label_bad, mobius_bad, frame_bad, first


def verify_topograph_proof(depth: int, jobs: int = 1) -> TopographReport:
    """Check the flow-to-matrix-tree correspondence exhaustively to `depth`.

    Per frame: the conjugated vertex matrix equals the matrix-tree node at
    the same path; the peak label equals the Stern-Brocot value there; the
    vertex matrix sends 1 to the forward label; and the frame invariants
    (determinant -1, mediant structure, Z-distinctness) hold.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    start = time.perf_counter()
    parts = run_spans(_check_span, depth, jobs)
    return TopographReport(
        depth=depth,
        frames=sum(p[0] for p in parts),
        conjugation_failures=sum(p[1] for p in parts),
        label_failures=sum(p[2] for p in parts),
        mobius_failures=sum(p[3] for p in parts),
        frame_failures=sum(p[4] for p in parts),
        first_failure_path=earliest_failure([p[5] for p in parts]),
        elapsed_s=time.perf_counter() - start,
    )
