"""Citation-annotated tables of input groups.

Every value consumed by the higher modules (stable stems, single-copy
cohomotopy of CP^n, Hopf-induced kernels and images, Fujii's real
K-groups of CP^n, Wall groups) lives in a line-delimited JSON data file
shipped with the package, one record per entry with a citation string.
Records without a citation are refused at load time.  Entries sourced
from reference tables rather than pinned by the connected-sum analysis
carry ``external: true`` so the test suites can tell them apart.

The environment variable ``FGAB_TABLES`` overrides the data file path.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .fgab import FgAbGroup

DATA_ENV = "FGAB_TABLES"


class TableError(ValueError):
    """Malformed table data file."""


class UntabulatedDegree(LookupError):
    """The requested parameters are outside the tabulated range."""


@dataclass(frozen=True)
class GeneratorLabel:
    """Symbolic basis element attached to a group summand.

    ``power`` is the exponent on the bundle class (or the index for
    xi-generators), ``copy_index`` names which connected summand the
    class lives on, ``decoration`` is one of "", "q*", "d*", "c*".
    """

    symbol: str
    power: int = 0
    copy_index: int = 1
    decoration: str = ""
    relation: str | None = None

    def __post_init__(self):
        if self.power < 0:
            raise ValueError("power must be nonnegative")
        if self.copy_index < 1:
            raise ValueError("copy index starts at 1")
        if self.decoration not in ("", "q*", "d*", "c*"):
            raise ValueError(f"unknown decoration {self.decoration!r}")

    def __str__(self) -> str:
        if self.symbol == "omega":
            core = "omega"
        elif self.symbol == "xi":
            core = f"xi_{self.power}"
        elif self.symbol in ("sigma", "tau"):
            core = f"{self.symbol}_{self.copy_index}"
        else:
            core = f"{self.symbol}_{self.copy_index}^{self.power}"
        if self.decoration:
            return f"{self.decoration}({core})"
        return core

    def to_record(self) -> dict:
        rec = {
            "symbol": self.symbol,
            "power": self.power,
            "copy_index": self.copy_index,
            "decoration": self.decoration,
        }
        if self.relation:
            rec["relation"] = self.relation
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> "GeneratorLabel":
        return cls(
            symbol=rec["symbol"],
            power=int(rec.get("power", 0)),
            copy_index=int(rec.get("copy_index", 1)),
            decoration=rec.get("decoration", ""),
            relation=rec.get("relation"),
        )


@dataclass(frozen=True)
class TableEntry:
    """One tabulated group with its provenance."""

    kind: str
    params: tuple[tuple[str, int], ...]
    group: FgAbGroup
    generators: tuple[GeneratorLabel, ...] = ()
    citation: str = ""
    external: bool = False

    def __post_init__(self):
        if not self.citation:
            raise TableError(f"entry {self.kind}{dict(self.params)} lacks a citation")
        if self.generators and len(self.generators) != self.group.ngens:
            raise TableError(
                f"entry {self.kind}{dict(self.params)}: {len(self.generators)} "
                f"generators for a group with {self.group.ngens} summands"
            )

    @property
    def params_dict(self) -> dict:
        return dict(self.params)

    def to_record(self) -> dict:
        return {
            "kind": self.kind,
            "params": self.params_dict,
            "group": self.group.to_json(),
            "generators": [g.to_record() for g in self.generators],
            "citation": self.citation,
            "external": self.external,
        }

    @classmethod
    def from_record(cls, rec: dict) -> "TableEntry":
        return cls(
            kind=rec["kind"],
            params=tuple(sorted((k, int(v)) for k, v in rec["params"].items())),
            group=FgAbGroup.from_json(rec["group"]),
            generators=tuple(
                GeneratorLabel.from_record(g) for g in rec.get("generators", [])
            ),
            citation=rec.get("citation", ""),
            external=bool(rec.get("external", False)),
        )


def _default_path() -> str:
    return str(resources.files("cpsums").joinpath("data/tables.jsonl"))


def data_path() -> str:
    return os.environ.get(DATA_ENV) or _default_path()


@lru_cache(maxsize=8)
def _load(path: str) -> dict[tuple, dict]:
    records: dict[tuple, dict] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                raise TableError(f"{path}:{lineno}: not valid JSON: {exc}") from exc
            if not rec.get("citation"):
                raise TableError(
                    f"{path}:{lineno}: record {rec.get('kind')!r} lacks a citation"
                )
            key = (rec["kind"], tuple(sorted((k, int(v)) for k, v in rec["params"].items())))
            if key in records:
                raise TableError(f"{path}:{lineno}: duplicate record {key}")
            records[key] = rec
    return records


def _record(kind: str, **params) -> dict:
    key = (kind, tuple(sorted((k, int(v)) for k, v in params.items())))
    table = _load(data_path())
    if key not in table:
        raise UntabulatedDegree(f"no table entry for {kind} {params}")
    return table[key]


def _group_of(rec: dict) -> FgAbGroup:
    return FgAbGroup.from_json(rec["group"])


def entry(kind: str, **params) -> TableEntry:
    """Generic accessor returning the full annotated entry."""
    rec = _record(kind, **params)
    if "group" in rec:
        return TableEntry.from_record({"generators": [], **rec})
    raise TableError(f"record {kind} {params} is parametric; use its dedicated accessor")


def all_raw_records() -> list[dict]:
    """Every record in the active data file, in file order."""
    return list(_load(data_path()).values())


# -- concrete tables ---------------------------------------------------------


def stable_stem(n: int) -> FgAbGroup:
    """Stable n-stem pi_n^s, for the degrees the computations touch."""
    return _group_of(_record("stable_stem", n=n))


def stable_stem_localized(n: int, p: int) -> FgAbGroup:
    """Localized stem value tabulated separately (only the 2-local 13-stem)."""
    return _group_of(_record("stable_stem_localized", n=n, p=p))


def pi_s0_single_cp(n: int) -> FgAbGroup:
    """pi_s^0(CP^n) for 3 <= n <= 8."""
    if not 3 <= n <= 8:
        raise UntabulatedDegree(f"pi_s^0(CP^n) tabulated for 3 <= n <= 8, got {n}")
    return _group_of(_record("pi_s0_cp", n=n))


def hopf_kernel(n: int) -> FgAbGroup:
    """ker(h^*: pi_s^0(CP^n) -> pi_{2n+1}^s) for 3 <= n <= 7."""
    return _group_of(_record("hopf_kernel", n=n))


def hopf_image_suspension(n: int) -> FgAbGroup:
    """im((Sigma h)^*) inside pi_{2n}^s for 3 <= n <= 8."""
    return _group_of(_record("hopf_image_suspension", n=n))


def wall_group(i: int) -> FgAbGroup:
    """Simply-connected Wall group L_i: the 4-periodic table Z, 0, Z_2, 0."""
    return _group_of(_record("wall_group", i_mod_4=i % 4))


def _affine(coeffs, m: int) -> int:
    a, b = coeffs
    return a * m + b


def _format_relation(template: str, m: int) -> str:
    out = template
    for expr, value in (
        ("{2m+1}", 2 * m + 1),
        ("{2m-1}", 2 * m - 1),
        ("{2m}", 2 * m),
    ):
        out = out.replace(expr, str(value))
    return out


def ko_single_cp(s: int, n: int) -> TableEntry:
    """Fujii's KO^{-s}(CP^n) with generator labels, closed form in n mod 4."""
    if not 0 <= s <= 7:
        raise ValueError(f"KO degree s must lie in 0..7, got {s}")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    m, q = divmod(n, 4)
    rec = _record("ko_cp_case", s=s, q=q)
    rank = _affine(rec["rank"], m)
    torsion = tuple(int(d) for d in rec["torsion"])
    group = FgAbGroup(rank, torsion)
    labels: list[GeneratorLabel] = []
    for gen in rec["generators"]:
        relation = gen.get("relation")
        relation = _format_relation(relation, m) if relation else None
        if "j_from" not in gen:
            labels.append(
                GeneratorLabel(symbol=gen["symbol"], copy_index=1, relation=relation)
            )
            continue
        lo = _affine(gen["j_from"], m)
        hi = _affine(gen["j_to"], m)
        for j in range(lo, hi + 1):
            labels.append(
                GeneratorLabel(
                    symbol=gen["symbol"], power=j, copy_index=1, relation=relation
                )
            )
    return TableEntry(
        kind="ko_cp",
        params=(("n", n), ("s", s)),
        group=group,
        generators=tuple(labels),
        citation=rec["citation"],
        external=rec["external"],
    )


def pl_over_o_entry(k: int, n: int) -> TableEntry:
    """[#_k CP^n, PL/O] for tabulated n, parametric in k."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    rec = _record("pl_over_o", n=n)
    orders: list[int] = []
    for d, coeffs in rec["torsion"]:
        orders.extend([int(d)] * _affine(coeffs, k))
    return TableEntry(
        kind="pl_over_o",
        params=(("k", k), ("n", n)),
        group=FgAbGroup.from_cyclic_orders(*orders),
        citation=rec["citation"],
        external=rec["external"],
    )
