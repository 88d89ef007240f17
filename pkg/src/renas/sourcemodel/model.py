"""Entity population and syntactic facts extracted from a Java project."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import AmbiguousEntityError, CacheFormatError, EntityResolutionError
from ..lexical import ExpansionHistory, Inflection, NormalizedName, WordToken

CLASS = "class"
INTERFACE = "interface"
METHOD = "method"
FIELD = "field"
PARAMETER = "parameter"
LOCAL_VARIABLE = "localVariable"

ENTITY_KINDS = (CLASS, INTERFACE, METHOD, FIELD, PARAMETER, LOCAL_VARIABLE)
TYPE_KINDS = (CLASS, INTERFACE)
MEMBER_KINDS = (FIELD, METHOD)

MODEL_FORMAT = "renas-index"
MODEL_VERSION = 1


@dataclass
class Entity:
    """A named declaration in the project."""

    id: str
    kind: str
    name: str
    file: str
    line: int
    col: int
    end_line: int
    enclosing: str | None = None
    normalized: NormalizedName | None = None

    @property
    def location(self) -> tuple[str, int, int]:
        return (self.file, self.line, self.col)

    @property
    def sort_key(self) -> tuple[str, str, str, str]:
        """Deterministic ranking key: file name, identifier, kind, full id."""
        return (self.file, self.name, self.kind, self.id)


@dataclass
class Invocation:
    caller: str | None          # enclosing method entity id
    method: str                 # callee entity id
    args: tuple[str | None, ...]  # positional argument entity ids


@dataclass
class SourceModel:
    """Immutable snapshot of a parsed project."""

    root: str
    digest: str
    entities: dict[str, Entity] = field(default_factory=dict)
    typed_as: list[tuple[str, str]] = field(default_factory=list)
    extends: list[tuple[str, str]] = field(default_factory=list)
    assignments: list[tuple[str, tuple[str, ...]]] = field(default_factory=list)
    invocations: list[Invocation] = field(default_factory=list)
    history: ExpansionHistory = field(default_factory=ExpansionHistory)
    diagnostics: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        self._children: dict[str, list[str]] = {}
        self._by_file: dict[str, list[str]] = {}
        for entity in self.entities.values():
            self._index(entity)

    def _index(self, entity: Entity) -> None:
        if entity.enclosing is not None:
            self._children.setdefault(entity.enclosing, []).append(entity.id)
        self._by_file.setdefault(entity.file, []).append(entity.id)

    def add_entity(self, entity: Entity) -> None:
        if entity.id in self.entities:
            raise ValueError(f"duplicate entity id {entity.id!r}")
        self.entities[entity.id] = entity
        self._index(entity)

    def children_of(self, entity_id: str) -> list[Entity]:
        return [self.entities[cid] for cid in self._children.get(entity_id, [])]

    def members_of(self, class_id: str) -> list[Entity]:
        return [e for e in self.children_of(class_id) if e.kind in MEMBER_KINDS]

    def params_of(self, method_id: str) -> list[Entity]:
        return [e for e in self.children_of(method_id) if e.kind == PARAMETER]

    def type_entities(self) -> list[Entity]:
        return [e for e in self.entities.values() if e.kind in TYPE_KINDS]

    def overload_groups(self) -> list[list[str]]:
        """Method ids grouped per (class, name) with two or more overloads."""
        groups: dict[tuple[str, str], list[str]] = {}
        for entity in self.entities.values():
            if entity.kind == METHOD and entity.enclosing is not None:
                groups.setdefault((entity.enclosing, entity.name), []).append(entity.id)
        return [ids for key, ids in sorted(groups.items()) if len(ids) > 1]

    # -- seed lookup --------------------------------------------------------

    def resolve(
        self, file: str, line: int, name: str, kind: str | None = None
    ) -> Entity:
        """The unique entity named name whose declaration spans line in file."""
        candidates = [
            self.entities[eid]
            for eid in self._by_file.get(file, [])
            if self.entities[eid].name == name
            and (kind is None or self.entities[eid].kind == kind)
        ]
        if not candidates:
            raise EntityResolutionError(
                f"no entity named {name!r} in {file!r}"
                + (f" of kind {kind}" if kind else "")
            )
        exact = [e for e in candidates if e.line == line]
        if len(exact) == 1:
            return exact[0]
        if len(exact) > 1:
            raise AmbiguousEntityError(
                f"{len(exact)} entities named {name!r} declared at {file}:{line}; "
                "disambiguate with an explicit kind"
            )
        spanning = [e for e in candidates if e.line <= line <= e.end_line]
        if len(spanning) == 1:
            return spanning[0]
        if len(spanning) > 1:
            spanning.sort(key=lambda e: (e.end_line - e.line, e.line))
            tightest = spanning[0]
            runner = spanning[1]
            if (tightest.end_line - tightest.line) < (runner.end_line - runner.line):
                return tightest
            raise AmbiguousEntityError(
                f"{len(spanning)} entities named {name!r} span {file}:{line}; "
                "disambiguate with an explicit kind"
            )
        raise EntityResolutionError(
            f"no declaration of {name!r} spans {file}:{line}"
        )

    # -- serialization ------------------------------------------------------

    def to_payload(self) -> dict:
        entities = []
        for entity in self.entities.values():
            tokens = None
            if entity.normalized is not None:
                tokens = [
                    {
                        "surface": t.surface,
                        "lemma": t.lemma,
                        "inflection": t.inflection.value,
                        "expandedFrom": t.expanded_from,
                    }
                    for t in entity.normalized.tokens
                ]
            entities.append(
                {
                    "id": entity.id,
                    "kind": entity.kind,
                    "name": entity.name,
                    "file": entity.file,
                    "line": entity.line,
                    "col": entity.col,
                    "endLine": entity.end_line,
                    "enclosing": entity.enclosing,
                    "tokens": tokens,
                }
            )
        return {
            "format": MODEL_FORMAT,
            "version": MODEL_VERSION,
            "root": self.root,
            "digest": self.digest,
            "entities": entities,
            "typedAs": [list(pair) for pair in self.typed_as],
            "extends": [list(pair) for pair in self.extends],
            "assignments": [[lhs, list(rhs)] for lhs, rhs in self.assignments],
            "invocations": [
                {"caller": inv.caller, "method": inv.method, "args": list(inv.args)}
                for inv in self.invocations
            ],
            "expansions": [
                {
                    "abbreviation": r.abbreviation,
                    "expansion": r.expansion,
                    "sourceFile": r.source_file,
                    "count": r.count,
                }
                for r in self.history.records()
            ],
            "diagnostics": self.diagnostics,
        }

    @classmethod
    def from_payload(cls, payload: dict) -> "SourceModel":
        if not isinstance(payload, dict) or payload.get("format") != MODEL_FORMAT:
            raise CacheFormatError("not a renas index file")
        if payload.get("version") != MODEL_VERSION:
            raise CacheFormatError(
                f"index version {payload.get('version')!r} is not supported "
                f"(expected {MODEL_VERSION})"
            )
        model = cls(root=payload["root"], digest=payload["digest"])
        for raw in payload["entities"]:
            normalized = None
            if raw["tokens"] is not None:
                normalized = NormalizedName(
                    raw=raw["name"],
                    tokens=tuple(
                        WordToken(
                            surface=t["surface"],
                            lemma=t["lemma"],
                            inflection=Inflection(t["inflection"]),
                            expanded_from=t["expandedFrom"],
                        )
                        for t in raw["tokens"]
                    ),
                )
            model.add_entity(
                Entity(
                    id=raw["id"],
                    kind=raw["kind"],
                    name=raw["name"],
                    file=raw["file"],
                    line=raw["line"],
                    col=raw["col"],
                    end_line=raw["endLine"],
                    enclosing=raw["enclosing"],
                    normalized=normalized,
                )
            )
        model.typed_as = [tuple(pair) for pair in payload["typedAs"]]
        model.extends = [tuple(pair) for pair in payload["extends"]]
        model.assignments = [
            (lhs, tuple(rhs)) for lhs, rhs in payload["assignments"]
        ]
        model.invocations = [
            Invocation(raw["caller"], raw["method"], tuple(raw["args"]))
            for raw in payload["invocations"]
        ]
        for record in payload["expansions"]:
            model.history.add(
                record["abbreviation"],
                record["expansion"],
                record["sourceFile"],
                record["count"],
            )
        model.diagnostics = payload["diagnostics"]
        return model
