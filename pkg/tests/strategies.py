"""
Hypothesis strategies for small groups, soft sets and soft int-groups.
"""

from hypothesis import strategies as st

from soft_intgroups.enumeration import generate_chain_int_group
from soft_intgroups.groups import cyclic, dihedral, klein, quaternion
from soft_intgroups.soft_sets import SoftSet, Universe

SMALL_GROUPS = (cyclic(4), cyclic(6), klein(), dihedral(3), dihedral(4), quaternion())
universes = st.integers(min_value=1, max_value=3).map(Universe.of_size)
groups = st.sampled_from(SMALL_GROUPS)


def masks_for(group, universe):
    return st.lists(
        st.integers(min_value=0, max_value=universe.full_mask),
        min_size=group.order, max_size=group.order,
    ).map(tuple)


@st.composite
def soft_sets(draw, group=None, universe=None):
    group = group or draw(groups)
    universe = universe or draw(universes)
    return SoftSet(group, universe, draw(masks_for(group, universe)))


@st.composite
def soft_set_pairs(draw):
    group, universe = draw(groups), draw(universes)
    return (
        SoftSet(group, universe, draw(masks_for(group, universe))),
        SoftSet(group, universe, draw(masks_for(group, universe))),
    )


@st.composite
def int_groups(draw, normal_only=False, group=None):
    group = group or draw(groups)
    universe = draw(universes)
    seed = draw(st.integers(min_value=0, max_value=2 ** 32))
    return generate_chain_int_group(group, universe, seed, normal_only=normal_only)
