"""Hypothesis strategies shared by the property tests."""
import math

from hypothesis import strategies as st

from cookmodel.diagnostics import Position
from cookmodel.mix import EnergySource, GenerationMix
from cookmodel.parser import SECTIONS, ListValue, Number, Pair, ScenarioDocument, Section, String
from cookmodel.tariff import Block, TariffSchedule

ORIGIN = Position(1, 1)

_LOWER = "abcdefghijklmnopqrstuvwxyz"
names = st.builds(
    str.__add__, st.sampled_from(_LOWER), st.text(_LOWER + "0123456789_", max_size=11),
)


def sources():
    return st.builds(
        EnergySource,
        name=names,
        energy=st.floats(0, 5e7),
        primary_factor=st.floats(0.5, 4),
        emission_factor=st.floats(0, 1.2),
    )


@st.composite
def mixes(draw, min_size=1, max_size=8):
    rows = draw(st.lists(sources(), min_size=min_size, max_size=max_size, unique_by=lambda s: s.name))
    if all(s.energy == 0 for s in rows):
        rows[0] = EnergySource(rows[0].name, 1.0, rows[0].primary_factor, rows[0].emission_factor)
    return GenerationMix(draw(st.integers(2000, 2050)), rows)


@st.composite
def schedules(draw, max_blocks=5):
    bounds = draw(st.lists(st.floats(1, 1000), max_size=max_blocks - 1, unique=True))
    rates = draw(st.lists(st.floats(0, 1), min_size=len(bounds) + 1, max_size=len(bounds) + 1))
    blocks = [Block(b, r) for b, r in zip(sorted(bounds) + [math.inf], rates)]
    return TariffSchedule(blocks, draw(st.floats(0, 1)))


# -- document trees for parser round trips ---------------------------------

_digits = st.text("0123456789", min_size=1, max_size=9)
numbers = st.one_of(
    st.builds(
        lambda sign, whole, frac: sign + whole + (f".{frac}" if frac else ""),
        st.sampled_from(["", "+", "-"]), _digits, st.one_of(st.none(), _digits),
    ),
    st.just("inf"),
).map(lambda t: Number(t, ORIGIN))

strings = st.text(
    st.characters(blacklist_categories=("Cc", "Cs"), blacklist_characters="\n\r"),
    max_size=20,
).map(lambda s: String(s, ORIGIN))

scalars = st.one_of(numbers, strings)
values = st.one_of(
    scalars,
    st.lists(scalars, min_size=2, max_size=4).map(lambda xs: ListValue(tuple(xs), ORIGIN)),
)


@st.composite
def sections(draw, name):
    keys = draw(st.lists(names, max_size=6, unique=True))
    pairs = [Pair(k, draw(values), ORIGIN) for k in keys]
    pairs += [Pair("block", draw(values), ORIGIN) for _ in range(draw(st.integers(0, 3)))]
    order = draw(st.permutations(range(len(pairs))))
    return Section(name, SECTIONS[name], tuple(pairs[i] for i in order), ORIGIN)


@st.composite
def documents(draw):
    singles = [n for n, rep in SECTIONS.items() if not rep]
    repeated = [n for n, rep in SECTIONS.items() if rep]
    chosen = draw(st.lists(st.sampled_from(singles), unique=True))
    chosen += draw(st.lists(st.sampled_from(repeated), max_size=6))
    chosen = draw(st.permutations(chosen))
    return ScenarioDocument(tuple(draw(sections(n)) for n in chosen))
