"""Slice-word calculus for Legendrian front diagrams.

A front is encoded as a left-to-right word of elementary slice events acting
on a stack of horizontal strands, numbered from 1 at the top:

* ``L p`` -- left cusp: insert a new strand pair at positions ``p``, ``p+1``
* ``X p`` -- crossing: swap the strands at positions ``p``, ``p+1``
* ``R p`` -- right cusp: join the strands at positions ``p``, ``p+1`` and
  remove them

A word is *closed* when it begins and ends with zero strands.  Arcs run from
their birth (left) cusp to their death (right) cusp, passing straight through
crossings.  At a crossing the strand moving downward (from ``p`` to ``p+1``)
is the one in front; for fronts this is forced, not a choice.

Each component is an immersed circle whose traversal alternates horizontal
direction at every cusp.  The canonical traversal runs the component's
lowest-numbered arc left to right; an orientation of a diagram is a sign per
component relative to the canonical traversal (components are ordered by
their smallest arc index).

Sign conventions, calibrated so that kink insertion has writhe +1 and the
two crossings of a cusp-pass cancel:

* crossing sign = product of the two strands' horizontal directions
* a cusp is *down* if the traversal passes from its upper arc to its lower
* rotation number = (down cusps - up cusps) / 2
* tb = (sum of self-crossing signs) - (own cusp count) / 2
* lk(i, j) = half the signed count of crossings between components i and j
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence


class EventKind(str, Enum):
    """The three elementary slice events."""

    LEFT_CUSP = "L"
    CROSSING = "X"
    RIGHT_CUSP = "R"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, order=True)
class FrontEvent:
    """A single slice event at a 1-based strand position (1 = top strand)."""

    kind: EventKind
    pos: int

    def __str__(self) -> str:
        return f"{self.kind.value}{self.pos}"


def word(text: str | Iterable[FrontEvent]) -> tuple[FrontEvent, ...]:
    """Parse a compact event word such as ``"L1 L2 X1 R2 R1"``.

    Commas count as whitespace.  A sequence of events passes through
    unchanged, so callers can accept either form.
    """
    if not isinstance(text, str):
        return tuple(text)
    out = []
    for token in text.replace(",", " ").split():
        head, tail = token[:1], token[1:]
        if head not in ("L", "X", "R") or not tail.isdigit():
            raise ValueError(f"bad event token {token!r}")
        out.append(FrontEvent(EventKind(head), int(tail)))
    return tuple(out)


class FrontError(Exception):
    """Base class for malformed slice words and misused front operations."""


class PositionOutOfRange(FrontError):
    """An event addresses a strand position that does not exist."""

    def __init__(self, index: int, event: FrontEvent, strands: int):
        self.index = index
        self.event = event
        self.strands = strands
        super().__init__(
            f"event {index} ({event}) is out of range with {strands} strands active"
        )


class NegativeStrandCount(FrontError):
    """A right cusp would drop the strand count below zero."""

    def __init__(self, index: int, event: FrontEvent, strands: int):
        self.index = index
        self.event = event
        self.strands = strands
        super().__init__(
            f"event {index} ({event}) would close more strands than the "
            f"{strands} active"
        )


class NonClosedFront(FrontError):
    """The word ends with strands still open."""

    def __init__(self, leftover: int):
        self.leftover = leftover
        super().__init__(f"word ends with {leftover} strands still open")


class RightCuspOnDisjointArcs(FrontError):
    """Reserved.

    A right cusp joining arcs of two different components is legal -- it is
    the cusp connected sum and simply merges the components -- so validation
    never raises this.  The class is kept so callers that want to forbid the
    merge can do so themselves.
    """


class MultiComponentInput(FrontError):
    """A single-component front was required."""


@dataclass(frozen=True)
class CuspInfo:
    """One cusp of a diagram, with its oriented traversal sense.

    ``sense`` is +1 when the oriented traversal passes from the upper arc to
    the lower one (a down cusp), -1 otherwise.
    """

    event: int
    kind: EventKind
    upper: int
    lower: int
    component: int
    sense: int


@dataclass(frozen=True)
class CrossingInfo:
    """One crossing, with arc indices and its sign under the orientation."""

    event: int
    over: int
    under: int
    sign: int


class _Structure:
    """Arc/cusp/crossing combinatorics of a validated word (orientation-free)."""

    __slots__ = (
        "arc_count",
        "births",
        "deaths",
        "cusps",
        "crossings",
        "component_of",
        "components",
        "walk_dir",
        "cusp_sense",
        "max_strands",
    )

    def __init__(self, events: Sequence[FrontEvent]):
        active: list[int] = []
        births: list[int] = []  # arc -> cusp index
        deaths: list[int] = []
        cusps: list[tuple[int, EventKind, int, int]] = []
        crossings: list[tuple[int, int, int]] = []
        max_strands = 0
        for i, ev in enumerate(events):
            n = len(active)
            if ev.kind is EventKind.LEFT_CUSP:
                if not 1 <= ev.pos <= n + 1:
                    raise PositionOutOfRange(i, ev, n)
                u = len(births)
                births.extend((len(cusps), len(cusps)))
                deaths.extend((-1, -1))
                active[ev.pos - 1 : ev.pos - 1] = [u, u + 1]
                cusps.append((i, ev.kind, u, u + 1))
            elif ev.kind is EventKind.CROSSING:
                if not 1 <= ev.pos <= n - 1:
                    raise PositionOutOfRange(i, ev, n)
                a, b = active[ev.pos - 1], active[ev.pos]
                crossings.append((i, a, b))
                active[ev.pos - 1], active[ev.pos] = b, a
            else:
                if n < 2:
                    raise NegativeStrandCount(i, ev, n)
                if not 1 <= ev.pos <= n - 1:
                    raise PositionOutOfRange(i, ev, n)
                a, b = active[ev.pos - 1], active[ev.pos]
                deaths[a] = deaths[b] = len(cusps)
                cusps.append((i, ev.kind, a, b))
                del active[ev.pos - 1 : ev.pos + 1]
            max_strands = max(max_strands, len(active))
        if active:
            raise NonClosedFront(len(active))

        arc_count = len(births)
        component_of = [-1] * arc_count
        walk_dir = [0] * arc_count
        cusp_sense = [0] * len(cusps)
        components: list[tuple[int, ...]] = []
        for start in range(arc_count):
            if component_of[start] >= 0:
                continue
            members = []
            arc, direction = start, +1
            while True:
                component_of[arc] = len(components)
                walk_dir[arc] = direction
                members.append(arc)
                ci = deaths[arc] if direction > 0 else births[arc]
                _, _, upper, lower = cusps[ci]
                cusp_sense[ci] = +1 if arc == upper else -1
                arc = lower if arc == upper else upper
                direction = -direction
                if arc == start and direction > 0:
                    break
            components.append(tuple(members))

        self.arc_count = arc_count
        self.births = tuple(births)
        self.deaths = tuple(deaths)
        self.cusps = tuple(cusps)
        self.crossings = tuple(crossings)
        self.component_of = tuple(component_of)
        self.components = tuple(components)
        self.walk_dir = tuple(walk_dir)
        self.cusp_sense = tuple(cusp_sense)
        self.max_strands = max_strands


@dataclass(frozen=True)
class FrontDiagram:
    """A validated closed front word plus a choice of component orientations.

    Construction validates the word eagerly and raises a ``FrontError``
    subclass on the first offending event.  The empty word is a valid front
    with no components.
    """

    events: tuple[FrontEvent, ...]
    orientations: tuple[int, ...] | None = None

    def __post_init__(self):
        events = tuple(self.events)
        for ev in events:
            if not isinstance(ev, FrontEvent):
                raise TypeError(f"not a FrontEvent: {ev!r}")
        object.__setattr__(self, "events", events)
        structure = _Structure(events)
        object.__setattr__(self, "_structure", structure)
        ncomp = len(structure.components)
        if self.orientations is None:
            orientations = (1,) * ncomp
        else:
            orientations = tuple(self.orientations)
            if len(orientations) != ncomp or any(o not in (-1, 1) for o in orientations):
                raise ValueError(
                    f"need {ncomp} orientation signs, got {self.orientations!r}"
                )
        object.__setattr__(self, "orientations", orientations)

    # -- constructors -------------------------------------------------

    @classmethod
    def from_word(
        cls, text: str | Iterable[FrontEvent], orientations: Sequence[int] | None = None
    ) -> "FrontDiagram":
        return cls(word(text), None if orientations is None else tuple(orientations))

    # -- presentation --------------------------------------------------

    def notation(self) -> str:
        """The plain event word, e.g. ``"L1 L2 R2 R1"``."""
        return " ".join(str(ev) for ev in self.events)

    def __str__(self) -> str:
        text = self.notation() or "(empty)"
        if any(o < 0 for o in self.orientations):
            marks = "".join("+" if o > 0 else "-" for o in self.orientations)
            return f"{text}  [{marks}]"
        return text

    # -- basic structure ------------------------------------------------

    @property
    def component_count(self) -> int:
        return len(self._structure.components)

    @property
    def max_strands(self) -> int:
        return self._structure.max_strands

    def component_of(self, arc: int) -> int:
        return self._structure.component_of[arc]

    def arc_direction(self, arc: int) -> int:
        """Horizontal traversal direction of an arc under the orientation."""
        s = self._structure
        return s.walk_dir[arc] * self.orientations[s.component_of[arc]]

    def cusps(self) -> tuple[CuspInfo, ...]:
        s = self._structure
        return tuple(
            CuspInfo(
                event=event,
                kind=kind,
                upper=upper,
                lower=lower,
                component=s.component_of[upper],
                sense=s.cusp_sense[i] * self.orientations[s.component_of[upper]],
            )
            for i, (event, kind, upper, lower) in enumerate(s.cusps)
        )

    def crossings(self) -> tuple[CrossingInfo, ...]:
        return tuple(
            CrossingInfo(
                event=event,
                over=over,
                under=under,
                sign=self.arc_direction(over) * self.arc_direction(under),
            )
            for event, over, under in self._structure.crossings
        )

    # -- classical invariants --------------------------------------------

    def writhe(self) -> int:
        """Signed crossing count of the whole diagram (all components)."""
        return sum(c.sign for c in self.crossings())

    def _require_knot(self) -> None:
        if self.component_count != 1:
            raise MultiComponentInput(
                f"need a single component, found {self.component_count}"
            )

    def thurston_bennequin(self) -> int:
        self._require_knot()
        return self.writhe() - len(self._structure.cusps) // 2

    def rotation_number(self) -> int:
        self._require_knot()
        total = sum(c.sense for c in self.cusps())
        return total // 2

    def classical_invariants(self) -> tuple[tuple[int, int], ...]:
        """Per-component ``(tb, rot)``, using each component's own crossings."""
        s = self._structure
        ncomp = len(s.components)
        self_writhe = [0] * ncomp
        cusp_count = [0] * ncomp
        sense_sum = [0] * ncomp
        for c in self.crossings():
            co, cu = s.component_of[c.over], s.component_of[c.under]
            if co == cu:
                self_writhe[co] += c.sign
        for cusp in self.cusps():
            cusp_count[cusp.component] += 1
            sense_sum[cusp.component] += cusp.sense
        return tuple(
            (self_writhe[c] - cusp_count[c] // 2, sense_sum[c] // 2)
            for c in range(ncomp)
        )

    def linking_number(self, i: int, j: int) -> int:
        """lk between components ``i`` and ``j`` under the orientations."""
        if i == j:
            raise ValueError("linking number needs two distinct components")
        s = self._structure
        pair = {i, j}
        total = sum(
            c.sign
            for c in self.crossings()
            if {s.component_of[c.over], s.component_of[c.under]} == pair
        )
        if total % 2:
            raise AssertionError("odd inter-component crossing sum")
        return total // 2

    def linking_matrix(self) -> tuple[tuple[int, ...], ...]:
        n = self.component_count
        return tuple(
            tuple(0 if i == j else self.linking_number(i, j) for j in range(n))
            for i in range(n)
        )

    # -- orientation handling ---------------------------------------------

    def with_orientations(self, orientations: Sequence[int]) -> "FrontDiagram":
        return FrontDiagram(self.events, tuple(orientations))

    def reverse(self) -> "FrontDiagram":
        """Reverse every component's orientation (negates rot, fixes tb)."""
        return FrontDiagram(self.events, tuple(-o for o in self.orientations))

    # -- mirrors -----------------------------------------------------------

    def vertical_mirror(self) -> "FrontDiagram":
        """Flip the diagram upside down.

        The orientation is pushed forward, so tb is preserved per component
        and rot is negated.  Involution.
        """
        out = []
        n = 0
        for ev in self.events:
            if ev.kind is EventKind.LEFT_CUSP:
                out.append(FrontEvent(ev.kind, n + 2 - ev.pos))
                n += 2
            elif ev.kind is EventKind.CROSSING:
                out.append(FrontEvent(ev.kind, n - ev.pos))
            else:
                out.append(FrontEvent(ev.kind, n - ev.pos))
                n -= 2
        base = FrontDiagram(tuple(out))
        # the mirror swaps each birth pair: arc a of the mirror corresponds
        # to arc a^1 here, and horizontal directions are preserved
        s = base._structure
        orientations = []
        for members in s.components:
            lead = min(members)
            desired = self.arc_direction(lead ^ 1)
            orientations.append(desired * s.walk_dir[lead])
        return base.with_orientations(orientations)

    def horizontal_mirror(self) -> "FrontDiagram":
        """Flip the diagram left to right.

        Cusps swap roles (the word reverses, L and R exchange), heights are
        kept, and every arc's horizontal direction reverses.  With the
        pushed-forward orientation both tb and rot are preserved.  Involution.
        """
        flipped = {
            EventKind.LEFT_CUSP: EventKind.RIGHT_CUSP,
            EventKind.RIGHT_CUSP: EventKind.LEFT_CUSP,
            EventKind.CROSSING: EventKind.CROSSING,
        }
        out = tuple(
            FrontEvent(flipped[ev.kind], ev.pos) for ev in reversed(self.events)
        )
        base = FrontDiagram(out)
        # arc of the mirror born (upper/lower) at event j <-> arc here dying
        # (upper/lower) at event len-1-j
        last = len(self.events) - 1
        here = self._structure
        death_at: dict[tuple[int, bool], int] = {}
        for ci, (event, kind, upper, lower) in enumerate(here.cusps):
            if kind is EventKind.RIGHT_CUSP:
                death_at[(event, True)] = upper
                death_at[(event, False)] = lower
        s = base._structure
        orientations = []
        for members in s.components:
            lead = min(members)
            b_event, _, b_upper, _ = s.cusps[s.births[lead]]
            twin = death_at[(last - b_event, lead == b_upper)]
            desired = -self.arc_direction(twin)
            orientations.append(desired * s.walk_dir[lead])
        return base.with_orientations(orientations)

    # -- component surgery ---------------------------------------------------

    def delete_component(self, index: int) -> "FrontDiagram":
        """Remove one component, renumbering the remaining events' positions.

        Crossings between the removed component and the rest vanish with it;
        the remaining components keep their own structure, orientations and
        order.
        """
        s = self._structure
        if not 0 <= index < self.component_count:
            raise IndexError(f"no component {index}")
        doomed = set(s.components[index])
        out: list[FrontEvent] = []
        active: list[int] = []
        next_arc = 0

        def kept_position(pos: int) -> int:
            return pos - sum(1 for a in active[: pos - 1] if a in doomed)

        for ev in self.events:
            if ev.kind is EventKind.LEFT_CUSP:
                u = next_arc
                next_arc += 2
                if u not in doomed:
                    out.append(FrontEvent(ev.kind, kept_position(ev.pos)))
                active[ev.pos - 1 : ev.pos - 1] = [u, u + 1]
            elif ev.kind is EventKind.CROSSING:
                a, b = active[ev.pos - 1], active[ev.pos]
                if a not in doomed and b not in doomed:
                    out.append(FrontEvent(ev.kind, kept_position(ev.pos)))
                active[ev.pos - 1], active[ev.pos] = b, a
            else:
                a = active[ev.pos - 1]
                if a not in doomed:
                    out.append(FrontEvent(ev.kind, kept_position(ev.pos)))
                del active[ev.pos - 1 : ev.pos + 1]
        orientations = tuple(
            o for c, o in enumerate(self.orientations) if c != index
        )
        return FrontDiagram(tuple(out), orientations)


def _splice(f: FrontDiagram, g: FrontDiagram) -> FrontDiagram:
    """Join two knots end to end when some reflection of ``g`` lines up."""
    s = f._structure
    _, _, upper, _ = s.cusps[-1]
    d_f = f.arc_direction(upper)
    rot_g = g.rotation_number()

    candidates = [g, g.reverse(), g.horizontal_mirror(), g.horizontal_mirror().reverse()]
    for h in candidates:
        if h.rotation_number() != rot_g:
            continue
        _, _, first_upper, _ = h._structure.cusps[0]
        if h.arc_direction(first_upper) != d_f:
            continue
        base = FrontDiagram(f.events[:-1] + h.events[1:])
        # arc 0 belongs to f's part; keep f's direction on it
        orientation = f.arc_direction(0) * base._structure.walk_dir[0]
        return base.with_orientations((orientation,))
    raise FrontError("connected sum: no orientation-compatible splice found")


# Invariant-neutral filler knot: tb = -1, rot = 0, and its two end cusps are
# traversed in opposite directions.  Splicing it between two fronts keeps
# both postconditions of the sum (its tb cancels the extra +1) while letting
# the exit direction be flipped to whatever the right factor needs.
_SPLICE_ADAPTOR_WORD = "L1 L1 X2 R3 R1"


def front_connected_sum(f: FrontDiagram, g: FrontDiagram) -> FrontDiagram:
    """Oriented connected sum of two single-component fronts.

    Splices the right end of ``f`` to the left end of ``g``: the final right
    cusp of ``f`` and the initial left cusp of ``g`` are removed and the open
    strand pairs are identified.  The splice needs the traversal directions
    at the two removed cusps to agree; reflections of ``g`` that preserve its
    rotation number are tried first, and if none lines up (possible whenever
    ``g``'s end cusps are traversed in opposite directions and rot(g) != 0),
    an invariant-neutral adaptor knot is spliced in between.  Either way

    * tb(sum) = tb(f) + tb(g) + 1
    * rot(sum) = rot(f) + rot(g)

    both hold for the input orientations.
    """
    for diagram in (f, g):
        if diagram.component_count != 1:
            raise MultiComponentInput("connected sum needs single-component fronts")
    try:
        return _splice(f, g)
    except FrontError:
        return _splice(_splice(f, FrontDiagram.from_word(_SPLICE_ADAPTOR_WORD)), g)
