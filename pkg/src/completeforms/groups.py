"""Symbolic automorphism group expressions.

Groups are finite expression trees over two atoms: projective linear groups
and the order-two swap group.  Equality is structural and rendering is
deterministic, which is all the package needs (no group arithmetic happens
here; the trees are catalog answers).
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "GroupDescriptor",
    "PGL",
    "SwapGroup",
    "GroupProduct",
    "SemidirectLeft",
    "SemidirectRight",
]


class GroupDescriptor:
    """Base class; concrete nodes implement render()."""

    def render(self) -> str:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.render()


def _wrap(g: "GroupDescriptor") -> str:
    if isinstance(g, (PGL, SwapGroup)):
        return g.render()
    return "(%s)" % g.render()


@dataclass(frozen=True)
class PGL(GroupDescriptor):
    """Projective linear group acting on a space of the given matrix size."""

    size: int

    def render(self) -> str:
        return "PGL(%d)" % self.size


@dataclass(frozen=True)
class SwapGroup(GroupDescriptor):
    """The two-element group exchanging a pair of factors or a form with its dual."""

    def render(self) -> str:
        return "S2"


@dataclass(frozen=True)
class GroupProduct(GroupDescriptor):
    left: GroupDescriptor
    right: GroupDescriptor

    def render(self) -> str:
        return "%s × %s" % (_wrap(self.left), _wrap(self.right))


@dataclass(frozen=True)
class SemidirectLeft(GroupDescriptor):
    """acting |x normal: the swap acts on the normal subgroup from the left."""

    acting: GroupDescriptor
    normal: GroupDescriptor

    def render(self) -> str:
        return "%s ⋉ %s" % (_wrap(self.acting), _wrap(self.normal))


@dataclass(frozen=True)
class SemidirectRight(GroupDescriptor):
    """normal x| acting: an outer swap glued on from the right."""

    normal: GroupDescriptor
    acting: GroupDescriptor

    def render(self) -> str:
        return "%s ⋊ %s" % (_wrap(self.normal), _wrap(self.acting))
