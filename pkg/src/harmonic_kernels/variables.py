"""Variable systems: ordered registries of named real/complex vector variables.

A real group of length m exposes the formal symbols x[1]..x[m].  A complex
group of length N exposes 2N formal symbols: z[1]..z[N] and the conjugate
family zbar[1]..zbar[N], treated as independent (Wirtinger convention).

Symbols are identified by dense integer ids.  Ids are assigned in canonical
order -- group declaration order, then index, then bar flag -- so that id
order doubles as the deterministic term order used for formatting.
"""

from __future__ import annotations

from .errors import KindMismatchError, UnknownSymbolError

REAL = "real"
COMPLEX = "complex"


class Group:
    """One named vector variable: (name, length, kind) plus its symbol ids."""

    __slots__ = ("name", "length", "kind", "sym_ids", "unbarred", "barred")

    def __init__(self, name, length, kind, sym_ids, unbarred, barred):
        self.name = name
        self.length = length
        self.kind = kind
        self.sym_ids = sym_ids      # all symbols, canonical order
        self.unbarred = unbarred    # per index 1..length
        self.barred = barred        # per index, complex only (else ())

    @property
    def is_complex(self) -> bool:
        return self.kind == COMPLEX


class VariableSystem:
    """Immutable, hashable registry of variable groups.

    Construct with a sequence of (name, length, kind) triples, e.g.::

        VariableSystem([("x", 3, "real"), ("z", 2, "complex")])
    """

    __slots__ = ("spec", "groups", "_by_name", "_display", "_info", "_hash")

    def __init__(self, groups):
        spec = []
        for name, length, kind in groups:
            if kind not in (REAL, COMPLEX):
                raise KindMismatchError(f"unknown group kind {kind!r}")
            if not isinstance(length, int) or length <= 0:
                raise ValueError(f"group {name!r} needs a positive integer length")
            spec.append((str(name), length, kind))
        names = [s[0] for s in spec]
        if len(set(names)) != len(names):
            raise ValueError("group names must be unique")
        object.__setattr__(self, "spec", tuple(spec))

        display = []       # sid -> "name[idx]" text
        info = []          # sid -> (group_pos, name, idx, bar)
        by_name = {}
        group_objs = []
        for gpos, (name, length, kind) in enumerate(spec):
            sym_ids = []
            unbarred = []
            barred = []
            for idx in range(1, length + 1):
                sid = len(display)
                display.append(f"{name}[{idx}]")
                info.append((gpos, name, idx, False))
                sym_ids.append(sid)
                unbarred.append(sid)
                if kind == COMPLEX:
                    sid = len(display)
                    display.append(f"{name}bar[{idx}]")
                    info.append((gpos, name, idx, True))
                    sym_ids.append(sid)
                    barred.append(sid)
            by_name[name] = Group(name, length, kind, tuple(sym_ids),
                                  tuple(unbarred), tuple(barred))
            group_objs.append(by_name[name])
        object.__setattr__(self, "groups", tuple(group_objs))
        object.__setattr__(self, "_by_name", by_name)
        object.__setattr__(self, "_display", tuple(display))
        object.__setattr__(self, "_info", tuple(info))
        object.__setattr__(self, "_hash", hash(self.spec))

    def __setattr__(self, name, value):
        raise AttributeError("VariableSystem is immutable")

    def __eq__(self, other):
        return isinstance(other, VariableSystem) and self.spec == other.spec

    def __hash__(self):
        return self._hash

    def __repr__(self):
        parts = ", ".join(f"{n}:{l}:{k}" for n, l, k in self.spec)
        return f"VariableSystem({parts})"

    # -- lookups --------------------------------------------------------------

    @property
    def n_symbols(self) -> int:
        return len(self._display)

    def group(self, name: str) -> Group:
        try:
            return self._by_name[name]
        except KeyError:
            raise UnknownSymbolError(f"unknown group {name!r}") from None

    def has_group(self, name: str) -> bool:
        return name in self._by_name

    def symbol_id(self, name: str, idx: int, bar: bool = False) -> int:
        g = self.group(name)
        if not 1 <= idx <= g.length:
            raise UnknownSymbolError(f"index {idx} out of range for group {name!r}")
        if bar:
            if not g.is_complex:
                raise UnknownSymbolError(f"real group {name!r} has no conjugate symbols")
            return g.barred[idx - 1]
        return g.unbarred[idx - 1]

    def resolve_name(self, text: str, idx: int) -> int:
        """Resolve a factor name from the text grammar ('z' or 'zbar')."""
        if text in self._by_name:
            return self.symbol_id(text, idx, bar=False)
        if text.endswith("bar"):
            base = text[:-3]
            if base in self._by_name and self._by_name[base].is_complex:
                return self.symbol_id(base, idx, bar=True)
        raise UnknownSymbolError(f"unknown symbol family {text!r}")

    def display(self, sid: int) -> str:
        return self._display[sid]

    def info(self, sid: int):
        """(group_pos, group_name, index, bar) for a symbol id."""
        return self._info[sid]

    def group_of(self, sid: int) -> str:
        return self._info[sid][1]

    def is_barred(self, sid: int) -> bool:
        return self._info[sid][3]

    def conj_sid(self, sid: int) -> int:
        """Partner under conjugation: z[i] <-> zbar[i]; real symbols fixed."""
        gpos, name, idx, bar = self._info[sid]
        g = self.groups[gpos]
        if not g.is_complex:
            return sid
        return g.unbarred[idx - 1] if bar else g.barred[idx - 1]
