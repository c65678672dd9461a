"""Named standard algebras used by the verification suite and scripts."""

from __future__ import annotations

from .algebra import Algebra, Arrow, Quiver, Relation, build_algebra
from .linalg import QQ
from .series import series_algebra


def hereditary_a(n: int, field=QQ) -> Algebra:
    """Path algebra of the linear quiver n -> ... -> 1, no relations."""
    vertices = tuple(str(i) for i in range(1, n + 1))
    arrows = tuple(Arrow(f"a{i}", str(i + 1), str(i)) for i in range(1, n))
    return build_algebra(Quiver(vertices, arrows), [], field=field)


def hereditary_d3(field=QQ) -> Algebra:
    quiver = Quiver(("1", "2", "3"), (Arrow("b1", "3", "1"), Arrow("b2", "3", "2")))
    return build_algebra(quiver, [], field=field)


def selfinjective_nakayama2(field=QQ) -> Algebra:
    """Two vertices, arrows both ways, all paths of length three zero."""
    quiver = Quiver(("1", "2"), (Arrow("a", "1", "2"), Arrow("b", "2", "1")))
    rels = [Relation.monomial(("a", "b", "a")), Relation.monomial(("b", "a", "b"))]
    return build_algebra(quiver, rels, field=field)


def ka2_times_k(field=QQ) -> Algebra:
    """Hereditary A2 next to an isolated vertex (its simple is projective-injective)."""
    quiver = Quiver(("1", "2", "3"), (Arrow("a", "2", "1"),))
    return build_algebra(quiver, [], field=field)


def standard_corpus(field=QQ) -> dict[str, Algebra]:
    corpus: dict[str, Algebra] = {}
    for n in range(1, 7):
        corpus[f"A{n}^2"] = series_algebra("A", n, field=field)
    for n in range(3, 6):
        corpus[f"D{n}^2"] = series_algebra("D", n, field=field)
    corpus["KA2"] = hereditary_a(2, field=field)
    corpus["KA3"] = hereditary_a(3, field=field)
    corpus["KD3"] = hereditary_d3(field=field)
    corpus["nakayama2"] = selfinjective_nakayama2(field=field)
    corpus["KA2xK"] = ka2_times_k(field=field)
    return corpus
