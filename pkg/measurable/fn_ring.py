"""
Function Ring for the Measurable Function Ring Auditor
The ring M(X) of measurable functions on a finite measurable space: exact
rational values, pointwise ring and lattice operations, zero-sets,
characteristic functions, units and annihilators.
"""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from measurable.errors import InputShapeError, MeasurabilityError, NonUnitError, SpaceMismatchError
from measurable.space_core import MeasurableSpace, Subset, union_all

# Configure logging
logger = logging.getLogger(__name__)

Number = Union[int, Fraction, str]

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True, eq=False)
class MeasurableFn:
    """
    An element of M(X): one exact rational per point, constant on every atom.

    Build through mk_fn; the operations below produce atom-constant results
    from atom-constant inputs and skip re-validation.
    """

    space: MeasurableSpace
    values: Tuple[Fraction, ...]

    def __eq__(self, other) -> bool:
        return (isinstance(other, MeasurableFn) and self.space == other.space
                and self.values == other.values)

    def __hash__(self) -> int:
        return hash(self.values)

    def __call__(self, point: int) -> Fraction:
        return self.values[point]

    def at(self, label: str) -> Fraction:
        return self.values[self.space.ground.index(label)]

    def __add__(self, other: 'MeasurableFn') -> 'MeasurableFn':
        return add(self, other)

    def __sub__(self, other: 'MeasurableFn') -> 'MeasurableFn':
        return sub(self, other)

    def __mul__(self, other: 'MeasurableFn') -> 'MeasurableFn':
        return mul(self, other)

    def __neg__(self) -> 'MeasurableFn':
        return neg(self)

    def __abs__(self) -> 'MeasurableFn':
        return abs_(self)

    def __pow__(self, n: int) -> 'MeasurableFn':
        result = one(self.space)
        for _ in range(n):
            result = mul(result, self)
        return result

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)

    def atom_values(self) -> Tuple[Fraction, ...]:
        return tuple(self.values[min(atom)] for atom in self.space.atoms)

    def render(self) -> str:
        labels = self.space.ground.labels
        return '{' + ', '.join(f"{label}:{value}" for label, value in zip(labels, self.values)) + '}'

    def __repr__(self) -> str:
        return f"MeasurableFn({self.render()})"


def _trusted(space: MeasurableSpace, values: Iterable[Fraction]) -> MeasurableFn:
    return MeasurableFn(space, tuple(values))


def mk_fn(space: MeasurableSpace, values: Union[Sequence[Number], Mapping[str, Number]]) -> MeasurableFn:
    """
    Build a measurable function, rejecting values that are not atom-constant.

    Args:
        space: the measurable space
        values: one value per point, either positional or keyed by label

    Returns:
        The validated MeasurableFn

    Raises:
        InputShapeError: wrong number of values or unknown labels
        MeasurabilityError: values differ inside an atom
    """
    ground = space.ground
    if isinstance(values, Mapping):
        extra = set(map(str, values)) - set(ground.labels)
        if extra:
            raise InputShapeError(f"Unknown point(s) in function: {', '.join(sorted(extra))}")
        missing = [label for label in ground.labels if label not in values]
        if missing:
            raise InputShapeError(f"Function has no value for: {', '.join(missing)}")
        values = [values[label] for label in ground.labels]
    values = list(values)
    if len(values) != ground.size:
        raise InputShapeError(f"Expected {ground.size} values, got {len(values)}")
    try:
        exact = tuple(Fraction(v) for v in values)
    except (ValueError, TypeError, ZeroDivisionError) as e:
        raise InputShapeError(f"Function values must be rationals: {e}") from None

    for atom in space.atoms:
        points = list(atom)
        first = exact[points[0]]
        if any(exact[i] != first for i in points[1:]):
            atom_labels = atom.labels(ground)
            raise MeasurabilityError(
                f"Function is not constant on atom {space.render(atom)}", atom_labels)
    return MeasurableFn(space, exact)


def from_atom_values(space: MeasurableSpace, atom_values: Sequence[Number]) -> MeasurableFn:
    """Function taking atom_values[k] on the k-th atom."""
    if len(atom_values) != len(space.atoms):
        raise InputShapeError(f"Expected {len(space.atoms)} atom values, got {len(atom_values)}")
    values = [ZERO] * space.size
    for atom, value in zip(space.atoms, atom_values):
        for i in atom:
            values[i] = Fraction(value)
    return _trusted(space, values)


def _same_space(f: MeasurableFn, g: MeasurableFn):
    if f.space is not g.space and f.space != g.space:
        raise SpaceMismatchError("Functions live on different measurable spaces")


def scalar(space: MeasurableSpace, r: Number) -> MeasurableFn:
    return _trusted(space, [Fraction(r)] * space.size)


def zero(space: MeasurableSpace) -> MeasurableFn:
    return scalar(space, 0)


def one(space: MeasurableSpace) -> MeasurableFn:
    return scalar(space, 1)


def add(f: MeasurableFn, g: MeasurableFn) -> MeasurableFn:
    _same_space(f, g)
    return _trusted(f.space, (a + b for a, b in zip(f.values, g.values)))


def mul(f: MeasurableFn, g: MeasurableFn) -> MeasurableFn:
    _same_space(f, g)
    return _trusted(f.space, (a * b for a, b in zip(f.values, g.values)))


def neg(f: MeasurableFn) -> MeasurableFn:
    return _trusted(f.space, (-a for a in f.values))


def sub(f: MeasurableFn, g: MeasurableFn) -> MeasurableFn:
    _same_space(f, g)
    return _trusted(f.space, (a - b for a, b in zip(f.values, g.values)))


def join(f: MeasurableFn, g: MeasurableFn) -> MeasurableFn:
    _same_space(f, g)
    return _trusted(f.space, (max(a, b) for a, b in zip(f.values, g.values)))


def meet(f: MeasurableFn, g: MeasurableFn) -> MeasurableFn:
    _same_space(f, g)
    return _trusted(f.space, (min(a, b) for a, b in zip(f.values, g.values)))


def abs_(f: MeasurableFn) -> MeasurableFn:
    return _trusted(f.space, (abs(a) for a in f.values))


def pos_part(f: MeasurableFn) -> MeasurableFn:
    """f⁺ = f ∨ 𝟎."""
    return join(f, zero(f.space))


def neg_part(f: MeasurableFn) -> MeasurableFn:
    """f⁻ = −(f ∧ 𝟎), so f = f⁺ − f⁻ and f ∧ 𝟎 = −f⁻."""
    return neg(meet(f, zero(f.space)))


def zero_set(f: MeasurableFn) -> Subset:
    mask = 0
    for i, v in enumerate(f.values):
        if v == 0:
            mask |= 1 << i
    return Subset(mask, f.space.size)


def cozero(f: MeasurableFn) -> Subset:
    return zero_set(f).complement()


def characteristic(space: MeasurableSpace, subset: Subset) -> MeasurableFn:
    """χ_A: 1 on A, 0 off A; Z(χ_A) = A^c."""
    space.require_member(subset)
    return _trusted(space, (ONE if i in subset else ZERO for i in range(space.size)))


def is_unit(f: MeasurableFn) -> bool:
    return not zero_set(f)


def inverse(f: MeasurableFn) -> MeasurableFn:
    if not is_unit(f):
        raise NonUnitError(f"{f.render()} vanishes on {f.space.render(zero_set(f))}")
    return _trusted(f.space, (1 / a for a in f.values))


def partial_inverse(f: MeasurableFn) -> MeasurableFn:
    """h(x) = 1/f(x) on coz(f) and 0 on Z(f); then g = (g·h)·f whenever Z(f) ⊆ Z(g)."""
    return _trusted(f.space, (1 / a if a != 0 else ZERO for a in f.values))


def annihilator(f: MeasurableFn):
    """
    Ann(f) = {g : fg = 𝟎} = {g : coz(g) ⊆ Z(f)}.

    Returned as the ideal of all g with coz(f) ⊆ Z(g); for a unit that is {𝟎}
    and for 𝟎 it is the whole ring.
    """
    from measurable.ring_ideal import RingIdealRep
    return RingIdealRep.from_generator(f.space, cozero(f))


def sign_patterns(space: MeasurableSpace) -> List[MeasurableFn]:
    """Every function with values in {−1, 0, +1} on each atom."""
    return [from_atom_values(space, pattern)
            for pattern in product((-1, 0, 1), repeat=len(space.atoms))]


def random_functions(space: MeasurableSpace, seed: int, count: int) -> List[MeasurableFn]:
    """Seeded random rational functions; roughly a third of atom values are zero."""
    rng = random.Random(seed)
    functions = []
    for _ in range(count):
        atom_values = []
        for _ in space.atoms:
            if rng.random() < 0.33:
                atom_values.append(ZERO)
            else:
                atom_values.append(Fraction(rng.randint(-9, 9) or 1, rng.randint(1, 6)))
        functions.append(from_atom_values(space, atom_values))
    return functions


def zero_set_image(space: MeasurableSpace) -> List[Subset]:
    """
    Z_A[X]: the zero-sets of the function quotient, which is the algebra itself.

    Returns the family in canonical order; a mismatch with the algebra is
    logged so callers can audit the difference.
    """
    family = sorted({zero_set(f) for f in sign_patterns(space)}, key=Subset.sort_key)
    if tuple(family) != space.algebra.sets:
        logger.warning(f"Zero-set image differs from the algebra: {len(family)} vs {len(space.algebra)} members")
    return family


def zero_set_family_closed(space: MeasurableSpace, functions: Sequence[MeasurableFn]) -> Optional[str]:
    """
    Check that zero-sets of the given functions are closed under pairwise
    intersection and union inside Z_A[X]; returns a witness on failure.
    """
    image = {s.mask for s in zero_set_image(space)}
    zero_sets = [zero_set(f) for f in functions]
    for a in zero_sets:
        for b in zero_sets:
            if (a & b).mask not in image or (a | b).mask not in image:
                return f"{space.render(a)}, {space.render(b)}"
    return None


class FunctionSample:
    """
    The finite function quotient used by every audit: all atom sign patterns,
    then any caller-supplied functions, then seeded random rational functions.

    Membership questions are answered with index bitmasks so pairwise sweeps
    stay cheap.
    """

    def __init__(self, space: MeasurableSpace, seed: int, random_count: int = 100,
                 extra: Sequence[MeasurableFn] = ()):
        self.space = space
        self.seed = seed
        self.patterns = sign_patterns(space)
        for f in extra:
            _same_space(f, self.patterns[0])
        self.extra = list(extra)
        self.randoms = random_functions(space, seed, random_count)
        self.functions = self.patterns + self.extra + self.randoms
        self.zero_sets = [zero_set(f) for f in self.functions]
        logger.debug(f"Function sample: {len(self.patterns)} patterns + {len(self.randoms)} random, seed {seed}")

    def __len__(self) -> int:
        return len(self.functions)

    def __iter__(self):
        return iter(self.functions)

    def members_of(self, ideal) -> int:
        """Bitmask of sampled functions belonging to the ideal."""
        mask = 0
        for k, z in enumerate(self.zero_sets):
            if ideal.contains_zero_set(z):
                mask |= 1 << k
        return mask

    def select(self, mask: int) -> List[MeasurableFn]:
        return [f for k, f in enumerate(self.functions) if mask >> k & 1]

    @cached_property
    def zero_partners(self) -> List[int]:
        """zero_partners[i] has bit j set iff f_i · f_j = 𝟎, computed by multiplying."""
        n = len(self.patterns)
        partners = [0] * n
        for i in range(n):
            f = self.patterns[i]
            for j in range(i, n):
                if mul(f, self.patterns[j]).is_zero():
                    partners[i] |= 1 << j
                    partners[j] |= 1 << i
        return partners

    @cached_property
    def double_annihilators(self) -> List[int]:
        """Bit j of entry i is set iff f_j kills everything that kills f_i."""
        partners = self.zero_partners
        result = []
        for ann in partners:
            mask = 0
            for j, other in enumerate(partners):
                if ann & ~other == 0:
                    mask |= 1 << j
            result.append(mask)
        return result

    @cached_property
    def pattern_count(self) -> int:
        return len(self.patterns)


def cozero_union(functions: Iterable[MeasurableFn], width: int) -> Subset:
    """⋃ coz(f) over the functions."""
    return union_all(width, (cozero(f) for f in functions))
