"""Axiom checkers for the partial-magma hierarchy and the combined report.

Checkers return ``True`` or a falsy :class:`~poloids.tables.Witness`; the
witness names the elements whose replay against the table reproduces the
failure, always the first failure in lexicographic index order.  The
hierarchy covered:

    group => monoid => poloid;  groupoid => poloid;
    poloid => semigroupoid => right-directed semigroupoid;
    poloid => right poloid (with the local right unit being the
    effective right unit).

A right poloid is the same thing as a small (left) constellation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .tables import PartialMagma, Witness, left_units, right_units, units

VERDICT_NAMES = (
    "semigroupoid",
    "poloid",
    "groupoid",
    "total",
    "monoid",
    "group",
    "right_directed_semigroupoid",
    "right_poloid",
    "normal",
    "unit_posetal",
)


def is_total(m: PartialMagma) -> bool:
    return all(cell is not None for row in m.table for cell in row)


def _first_undefined(m: PartialMagma) -> Witness:
    for x in range(m.size):
        for y in range(m.size):
            if m.table[x][y] is None:
                return Witness("undefined-cell", (x, y))
    raise ValueError("table is total")


def is_semigroupoid(m: PartialMagma):
    """Triple law: once a triple is composable at all, both bracketings
    are defined and agree.

    The trigger for (x, y, z) is: xy and yz defined, or (xy)z defined,
    or x(yz) defined.
    """
    t = m.table
    n = m.size
    for x in range(n):
        for y in range(n):
            xy = t[x][y]
            for z in range(n):
                yz = t[y][z]
                trigger = (
                    (xy is not None and yz is not None)
                    or (xy is not None and t[xy][z] is not None)
                    or (yz is not None and t[x][yz] is not None)
                )
                if not trigger:
                    continue
                if xy is None or yz is None:
                    return Witness("associativity", (x, y, z))
                if t[xy][z] is None or t[x][yz] is None or t[xy][z] != t[x][yz]:
                    return Witness("associativity", (x, y, z))
    return True


def is_right_directed_semigroupoid(m: PartialMagma):
    """One-sided triple law: triggered by (xy)z defined or by xy and yz
    defined, never by x(yz) alone."""
    t = m.table
    n = m.size
    for x in range(n):
        for y in range(n):
            xy = t[x][y]
            if xy is None:
                continue
            for z in range(n):
                yz = t[y][z]
                if yz is None and t[xy][z] is None:
                    continue
                if yz is None or t[xy][z] is None or t[x][yz] is None:
                    return Witness("associativity", (x, y, z))
                if t[xy][z] != t[x][yz]:
                    return Witness("associativity", (x, y, z))
    return True


def _poloid_data(m: PartialMagma):
    """(eps, vareps) index maps, or the disqualifying witness."""
    sg = is_semigroupoid(m)
    if not sg:
        return sg
    t = m.table
    e_set = units(m)
    eps = []
    vareps = []
    for x in range(m.size):
        lefts = [e for e in e_set if t[e][x] is not None]
        rights = [e for e in e_set if t[x][e] is not None]
        if not lefts or not rights:
            return Witness("missing-unit", (x,))
        if len(lefts) > 1 or len(rights) > 1:  # impossible in a semigroupoid
            raise RuntimeError("effective units not unique in a semigroupoid")
        eps.append(lefts[0])
        vareps.append(rights[0])
    return tuple(eps), tuple(vareps)


def is_poloid(m: PartialMagma):
    """Semigroupoid in which every element has effective units on both sides."""
    data = _poloid_data(m)
    return data if isinstance(data, Witness) else True


def effective_unit_maps(m: PartialMagma) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The maps x -> eps_x and x -> vareps_x of a verified poloid."""
    data = _poloid_data(m)
    if isinstance(data, Witness):
        raise PreconditionError("not a poloid", data)
    return data


def _groupoid_data(m: PartialMagma):
    data = _poloid_data(m)
    if isinstance(data, Witness):
        return data
    eps, vareps = data
    t = m.table
    e_set = set(units(m))
    inverses = []
    for x in range(m.size):
        candidates = [
            y
            for y in range(m.size)
            if t[x][y] in e_set and t[y][x] in e_set
            and t[x][y] is not None and t[y][x] is not None
        ]
        if len(candidates) != 1:
            return Witness("non-unique-inverse", (x, *candidates[:2]))
        y = candidates[0]
        inverses.append(y)
        if t[x][y] != eps[x] or t[x][y] != vareps[y]:
            raise RuntimeError("inverse does not meet the effective-unit identities")
        if t[y][x] != vareps[x] or t[y][x] != eps[y]:
            raise RuntimeError("inverse does not meet the effective-unit identities")
    return tuple(inverses)


def is_groupoid(m: PartialMagma):
    """Poloid with a unique two-sided inverse for every element."""
    data = _groupoid_data(m)
    return data if isinstance(data, Witness) else True


def is_monoid(m: PartialMagma) -> bool:
    """Poloid with a single unit; totality is verified, not assumed."""
    data = _poloid_data(m)
    return not isinstance(data, Witness) and len(units(m)) == 1 and is_total(m)


def is_group(m: PartialMagma) -> bool:
    data = _groupoid_data(m)
    return not isinstance(data, Witness) and len(units(m)) == 1


def _phi_data(m: PartialMagma):
    """x -> phi_x map of a right poloid, or the disqualifying witness.

    phi_x is the unique left unit of the magma that is a local right
    unit for x (x.phi_x defined and equal to x).
    """
    rd = is_right_directed_semigroupoid(m)
    if not rd:
        return rd
    t = m.table
    lefts = left_units(m)
    phi = []
    for x in range(m.size):
        candidates = [l for l in lefts if t[x][l] == x]
        if not candidates:
            return Witness("missing-unit", (x,))
        if len(candidates) > 1:
            return Witness("left-unit-clash", (x, candidates[0], candidates[1]))
        phi.append(candidates[0])
    for l in lefts:  # forced: every left unit is idempotent here
        if t[l][l] != l:
            raise RuntimeError("left unit not idempotent in a right poloid")
    return tuple(phi)


def is_right_poloid(m: PartialMagma):
    """Right-directed semigroupoid with a unique local right unit
    phi_x among the left units, for every x."""
    data = _phi_data(m)
    return data if isinstance(data, Witness) else True


def phi_map(m: PartialMagma) -> tuple[int, ...]:
    """The map x -> phi_x of a verified right poloid."""
    data = _phi_data(m)
    if isinstance(data, Witness):
        raise PreconditionError("not a right poloid", data)
    return data


def is_normal(m: PartialMagma):
    """Whether phi_x.phi_y and phi_y.phi_x both defined forces phi_x = phi_y."""
    phi = phi_map(m)
    t = m.table
    for x in range(m.size):
        for y in range(m.size):
            px, py = phi[x], phi[y]
            if px != py and t[px][py] is not None and t[py][px] is not None:
                return Witness("left-unit-clash", (x, y))
    return True


def natural_preorder(m: PartialMagma) -> tuple[tuple[bool, ...], ...]:
    """The relation x <= y iff y.phi_x is defined and equals x.

    Reflexive and transitive on every right poloid; both are verified.
    """
    phi = phi_map(m)
    t = m.table
    n = m.size
    leq = tuple(
        tuple(t[y][phi[x]] == x and t[y][phi[x]] is not None for y in range(n))
        for x in range(n)
    )
    for x in range(n):
        if not leq[x][x]:
            raise RuntimeError("natural preorder not reflexive")
        for y in range(n):
            for z in range(n):
                if leq[x][y] and leq[y][z] and not leq[x][z]:
                    raise RuntimeError("natural preorder not transitive")
    return leq


def is_unit_posetal(m: PartialMagma):
    """Antisymmetry of the natural preorder restricted to left units."""
    leq = natural_preorder(m)
    lefts = left_units(m)
    for a in lefts:
        for b in lefts:
            if a < b and leq[a][b] and leq[b][a]:
                return Witness("antisymmetry", (a, b))
    return True


def is_meet_semilattice_on_left_units(m: PartialMagma) -> bool:
    """Whether every pair of left units has a greatest lower bound."""
    posetal = is_unit_posetal(m)
    if not posetal:
        raise PreconditionError("left-unit order is not a partial order", posetal)
    leq = natural_preorder(m)
    lefts = left_units(m)
    for a in lefts:
        for b in lefts:
            lower = [c for c in lefts if leq[c][a] and leq[c][b]]
            if not any(all(leq[c][d] for c in lower) for d in lower):
                return False
    return True


def initial_units(m: PartialMagma) -> tuple[int, ...]:
    """Units u such that for every unit e exactly one x has u.x and x.e defined."""
    data = _poloid_data(m)
    if isinstance(data, Witness):
        raise PreconditionError("not a poloid", data)
    t = m.table
    e_set = units(m)
    out = []
    for u in e_set:
        if all(
            sum(1 for x in range(m.size) if t[u][x] is not None and t[x][e] is not None) == 1
            for e in e_set
        ):
            out.append(u)
    return tuple(out)


@dataclass(frozen=True)
class ClassReport:
    """Everything classify() found out about one partial magma.

    ``eps``/``vareps`` are present exactly when the magma is a poloid,
    ``phi`` when it is a right poloid, ``inverses`` when a groupoid.
    ``witnesses`` pairs each failed verdict with a counterexample.
    """

    magma: PartialMagma
    verdicts: dict[str, bool]
    units: tuple[int, ...]
    left_units: tuple[int, ...]
    right_units: tuple[int, ...]
    eps: tuple[int, ...] | None
    vareps: tuple[int, ...] | None
    phi: tuple[int, ...] | None
    inverses: tuple[int, ...] | None
    witnesses: tuple[tuple[str, Witness], ...]

    def witness_for(self, verdict: str) -> Witness | None:
        for name, w in self.witnesses:
            if name == verdict:
                return w
        return None

    def to_dict(self) -> dict:
        names = self.magma.elements

        def name_map(values):
            if values is None:
                return None
            return {names[i]: names[v] for i, v in enumerate(values)}

        return {
            "elements": list(names),
            "verdicts": dict(self.verdicts),
            "units": [names[i] for i in self.units],
            "left_units": [names[i] for i in self.left_units],
            "right_units": [names[i] for i in self.right_units],
            "eps": name_map(self.eps),
            "vareps": name_map(self.vareps),
            "phi": name_map(self.phi),
            "inverses": name_map(self.inverses),
            "witnesses": [
                {"verdict": v, "kind": w.kind, "elements": [names[i] for i in w.elements]}
                for v, w in self.witnesses
            ],
        }

    def to_text(self) -> str:
        names = self.magma.elements
        out = ["elements: " + " ".join(names)]
        for verdict in VERDICT_NAMES:
            out.append("%s: %s" % (verdict, "yes" if self.verdicts[verdict] else "no"))
        for label, idxs in (
            ("units", self.units),
            ("left_units", self.left_units),
            ("right_units", self.right_units),
        ):
            out.append("%s: %s" % (label, " ".join(names[i] for i in idxs)))
        for label, values in (
            ("eps", self.eps),
            ("vareps", self.vareps),
            ("phi", self.phi),
            ("inverses", self.inverses),
        ):
            if values is not None:
                pairs = " ".join(f"{names[i]}->{names[v]}" for i, v in enumerate(values))
                out.append(f"{label}: {pairs}")
        if self.witnesses:
            out.append("witnesses:")
            for verdict, w in self.witnesses:
                out.append("  %s: %s" % (verdict, w.format(names)))
        return "\n".join(out) + "\n"


def classify(m: PartialMagma) -> ClassReport:
    """Run every checker and assemble the combined report."""
    verdicts: dict[str, bool] = {}
    witnesses: list[tuple[str, Witness]] = []

    def record(name: str, result) -> bool:
        ok = not isinstance(result, Witness)
        verdicts[name] = ok
        if not ok:
            witnesses.append((name, result))
        return ok

    e_set = units(m)
    lefts = left_units(m)
    rights = right_units(m)

    record("semigroupoid", is_semigroupoid(m))
    poloid_data = _poloid_data(m)
    eps = vareps = None
    if record("poloid", poloid_data):
        eps, vareps = poloid_data
    groupoid_data = _groupoid_data(m)
    inverses = None
    if record("groupoid", groupoid_data):
        inverses = groupoid_data

    total = is_total(m)
    verdicts["total"] = total
    if not total:
        witnesses.append(("total", _first_undefined(m)))

    monoid = verdicts["poloid"] and len(e_set) == 1 and total
    verdicts["monoid"] = monoid
    if not monoid:
        if not verdicts["poloid"]:
            witnesses.append(("monoid", poloid_data))
        elif len(e_set) > 1:
            witnesses.append(("monoid", Witness("extra-unit", (e_set[0], e_set[1]))))
        else:
            witnesses.append(("monoid", _first_undefined(m)))

    group = verdicts["groupoid"] and len(e_set) == 1
    verdicts["group"] = group
    if not group:
        if not verdicts["groupoid"]:
            witnesses.append(("group", groupoid_data))
        else:
            witnesses.append(("group", Witness("extra-unit", (e_set[0], e_set[1]))))

    record("right_directed_semigroupoid", is_right_directed_semigroupoid(m))
    phi_data = _phi_data(m)
    phi = None
    if record("right_poloid", phi_data):
        phi = phi_data
        record("normal", is_normal(m))
        record("unit_posetal", is_unit_posetal(m))
    else:
        verdicts["normal"] = False
        verdicts["unit_posetal"] = False
        witnesses.append(("normal", phi_data))
        witnesses.append(("unit_posetal", phi_data))

    verdicts = {name: verdicts[name] for name in VERDICT_NAMES}
    return ClassReport(
        magma=m,
        verdicts=verdicts,
        units=e_set,
        left_units=lefts,
        right_units=rights,
        eps=eps,
        vareps=vareps,
        phi=phi,
        inverses=inverses,
        witnesses=tuple(witnesses),
    )
