"""
Shared soft sets used across the test modules.
"""

from soft_intgroups.groups import cyclic, dihedral, klein
from soft_intgroups.int_groups import SoftIntGroup
from soft_intgroups.soft_sets import SoftSet, Universe, characteristic

UNIVERSE_A = Universe.of_size(1)
UNIVERSE_AB = Universe.of_size(2)

# dihedral:3 indices: e=0, u=1, u2=2, v=3, vu=4, vu2=5
E, U, U2, V, VU, VU2 = range(6)


def cyclic4_graded() -> SoftIntGroup:
    """Z4 over {a,b}: {a,b} on the even elements, {a} on the odd ones."""
    return SoftIntGroup(SoftSet(cyclic(4), UNIVERSE_AB, (3, 1, 3, 1)))


def dihedral_reflection() -> SoftIntGroup:
    """Characteristic soft set of {e, v} in D3; an int-group that is not normal."""
    return SoftIntGroup(characteristic(dihedral(3), UNIVERSE_A, (E, V)))


def dihedral_peaked() -> SoftIntGroup:
    """D3 over {a,b}: {a,b} at e and {a} elsewhere; normal."""
    return SoftIntGroup(SoftSet(dihedral(3), UNIVERSE_AB, (3, 1, 1, 1, 1, 1)))


def klein_split() -> SoftIntGroup:
    """Klein group over {a,b} with e:{a,b} x:{a} y:{b} xy:{}; images not a chain."""
    return SoftIntGroup(SoftSet(klein(), UNIVERSE_AB, (3, 1, 2, 0)))


SOFT_FILES = {
    "cyclic4_graded": "universe 2 a b\n0 : {a,b}\n1 : {a}\n2 : {a,b}\n3 : {a}\n",
    "dihedral_reflection": "universe 1 a\n# e and v\n0 : {a}\nv : {a}\n",
    "dihedral_peaked": "universe 2 a b\ne : {a,b}\nu : {a}\nu2 : {a}\nv : {a}\nvu : {a}\nvu2 : {a}\n",
    "klein_split": "universe 2 a b\ne : {a,b}\nx : {a}\ny : {b}\n",
}
