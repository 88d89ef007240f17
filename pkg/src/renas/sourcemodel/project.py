"""Project indexing: parse every Java file, build the entity population,
resolve name references into facts, and normalize every identifier."""

from __future__ import annotations

import hashlib
import logging
from pathlib import Path
from typing import Mapping

from ..errors import DegenerateNameError, JavaParseError
from ..graph import build_graph
from ..lexical import (
    ExpansionContext,
    is_expansion,
    is_expansion_candidate,
    merged_dictionary,
    normalize,
    split,
)
from .javaparser import (
    CallFact,
    FieldDecl,
    FileParse,
    MethodDecl,
    PRIMITIVES,
    TypeDecl,
    parse_java,
)
from .model import (
    CLASS,
    FIELD,
    INTERFACE,
    Invocation,
    LOCAL_VARIABLE,
    METHOD,
    PARAMETER,
    Entity,
    SourceModel,
)

logger = logging.getLogger(__name__)

_UNRESOLVABLE_TYPES = PRIMITIVES | {"void", "var", None}


def project_digest(files: list[tuple[str, bytes]]) -> str:
    hasher = hashlib.sha256()
    for relpath, data in files:
        hasher.update(relpath.encode("utf-8"))
        hasher.update(b"\0")
        hasher.update(hashlib.sha256(data).digest())
        hasher.update(b"\n")
    return hasher.hexdigest()


def parse_project(
    root: str | Path, user_dictionary: Mapping[str, str] | None = None
) -> SourceModel:
    """Parse every ``.java`` file under root into a SourceModel.

    Unreadable roots are fatal; files that fail to parse are skipped with a
    warning recorded in the diagnostics summary.
    """
    root = Path(root)
    if not root.exists():
        raise FileNotFoundError(f"project root {root} does not exist")
    if not root.is_dir():
        raise NotADirectoryError(f"project root {root} is not a directory")

    paths = sorted(
        (p for p in root.rglob("*.java") if p.is_file()),
        key=lambda p: p.relative_to(root).as_posix(),
    )
    contents: list[tuple[str, bytes]] = []
    for path in paths:
        contents.append((path.relative_to(root).as_posix(), path.read_bytes()))

    parses: list[FileParse] = []
    skipped: list[list[str]] = []
    for relpath, data in contents:
        try:
            parses.append(parse_java(data.decode("utf-8", errors="replace"), relpath))
        except JavaParseError as exc:
            logger.warning("skipping %s: %s", relpath, exc)
            skipped.append([relpath, str(exc)])

    model = SourceModel(root=str(root), digest=project_digest(contents))
    model.diagnostics = {
        "files": len(contents),
        "parsedFiles": len(parses),
        "skippedFiles": skipped,
        "warningCount": len(skipped),
        "unresolvedTypes": 0,
        "unresolvedRefs": 0,
        "degenerateNames": [],
    }

    builder = _ModelBuilder(model)
    for file_parse in parses:
        builder.add_file(file_parse)
    builder.resolve_facts()
    _build_expansion_history(model)
    _normalize_entities(model, user_dictionary)
    return model


class _ModelBuilder:
    def __init__(self, model: SourceModel) -> None:
        self.model = model
        # declaration back-references used during fact resolution
        self.type_decls: list[tuple[str, TypeDecl, str]] = []  # (id, decl, file)
        self.method_decls: list[tuple[str, MethodDecl, str]] = []  # (id, decl, class id)
        self.declared_type: dict[str, str | None] = {}  # entity id -> type name
        self.class_registry: dict[str, list[str]] = {}
        self.field_scope: dict[str, dict[str, str]] = {}  # class id -> name -> id
        self.method_scope: dict[str, dict] = {}  # method id -> scope info
        self.field_inits: list[tuple[str, str, FieldDecl]] = []  # (field id, class id, decl)

    # -- entity creation ----------------------------------------------------

    def add_file(self, file_parse: FileParse) -> None:
        for type_decl in file_parse.types:
            self._add_type(file_parse.path, file_parse.path, None, type_decl)

    def _unique_id(self, candidate: str, line: int, col: int) -> str:
        if candidate not in self.model.entities:
            return candidate
        return f"{candidate}@{line}:{col}"

    def _add_type(
        self, file: str, parent_id: str, enclosing: str | None, decl: TypeDecl
    ) -> None:
        kind = INTERFACE if decl.kind == "interface" else CLASS
        type_id = self._unique_id(
            f"{parent_id}:{kind}:{decl.name}", decl.line, decl.col
        )
        self.model.add_entity(
            Entity(
                id=type_id,
                kind=kind,
                name=decl.name,
                file=file,
                line=decl.line,
                col=decl.col,
                end_line=decl.end_line,
                enclosing=enclosing,
            )
        )
        self.type_decls.append((type_id, decl, file))
        self.class_registry.setdefault(decl.name, []).append(type_id)
        self.field_scope[type_id] = {}

        members: list[tuple[int, int, str, object]] = []
        for fdecl in decl.fields:
            members.append((fdecl.line, fdecl.col, "field", fdecl))
        for mdecl in decl.methods:
            members.append((mdecl.line, mdecl.col, "method", mdecl))
        for ndecl in decl.nested:
            members.append((ndecl.line, ndecl.col, "type", ndecl))
        members.sort(key=lambda item: (item[0], item[1]))

        for line, col, member_kind, member in members:
            if member_kind == "field":
                self._add_field(file, type_id, member)
            elif member_kind == "method":
                self._add_method(file, type_id, member)
            else:
                self._add_type(file, type_id, type_id, member)

    def _add_field(self, file: str, class_id: str, decl: FieldDecl) -> None:
        field_id = self._unique_id(
            f"{class_id}:{FIELD}:{decl.name}", decl.line, decl.col
        )
        self.model.add_entity(
            Entity(
                id=field_id,
                kind=FIELD,
                name=decl.name,
                file=file,
                line=decl.line,
                col=decl.col,
                end_line=decl.line,
                enclosing=class_id,
            )
        )
        self.declared_type[field_id] = decl.type_name
        self.field_scope[class_id][decl.name] = field_id
        if decl.init_refs or decl.init_calls:
            self.field_inits.append((field_id, class_id, decl))

    def _add_method(self, file: str, class_id: str, decl: MethodDecl) -> None:
        method_id = self._unique_id(
            f"{class_id}:{METHOD}:{decl.signature}", decl.line, decl.col
        )
        self.model.add_entity(
            Entity(
                id=method_id,
                kind=METHOD,
                name=decl.name,
                file=file,
                line=decl.line,
                col=decl.col,
                end_line=decl.end_line,
                enclosing=class_id,
            )
        )
        self.method_decls.append((method_id, decl, class_id))
        self.declared_type[method_id] = decl.return_type

        params: dict[str, str] = {}
        for pdecl in decl.params:
            param_id = self._unique_id(
                f"{method_id}:{PARAMETER}:{pdecl.name}", pdecl.line, pdecl.col
            )
            self.model.add_entity(
                Entity(
                    id=param_id,
                    kind=PARAMETER,
                    name=pdecl.name,
                    file=file,
                    line=pdecl.line,
                    col=pdecl.col,
                    end_line=pdecl.line,
                    enclosing=method_id,
                )
            )
            self.declared_type[param_id] = pdecl.type_name
            params[pdecl.name] = param_id

        local_list: list[tuple[str, int, str]] = []
        for ldecl in decl.locals:
            local_id = self._unique_id(
                f"{method_id}:{LOCAL_VARIABLE}:{ldecl.name}@{ldecl.line}:{ldecl.col}",
                ldecl.line,
                ldecl.col,
            )
            self.model.add_entity(
                Entity(
                    id=local_id,
                    kind=LOCAL_VARIABLE,
                    name=ldecl.name,
                    file=file,
                    line=ldecl.line,
                    col=ldecl.col,
                    end_line=ldecl.line,
                    enclosing=method_id,
                )
            )
            self.declared_type[local_id] = ldecl.type_name
            local_list.append((ldecl.name, ldecl.line, local_id))

        self.method_scope[method_id] = {
            "class": class_id,
            "params": params,
            "locals": local_list,
        }

    # -- fact resolution ----------------------------------------------------

    def resolve_facts(self) -> None:
        model = self.model

        for entity_id, type_name in self.declared_type.items():
            class_id = self._resolve_class(type_name)
            if class_id is not None and class_id != entity_id:
                model.typed_as.append((entity_id, class_id))
            elif type_name not in _UNRESOLVABLE_TYPES and class_id is None:
                model.diagnostics["unresolvedTypes"] += 1

        for type_id, decl, _file in self.type_decls:
            for super_name in decl.supertypes:
                super_id = self._resolve_class(super_name)
                if super_id is not None and super_id != type_id:
                    model.extends.append((type_id, super_id))
                else:
                    model.diagnostics["unresolvedTypes"] += 1

        for field_id, class_id, decl in self.field_inits:
            calls = self._resolve_calls(decl.init_calls, None, class_id)
            rhs = self._resolve_refs(decl.init_refs, None, class_id, decl.line, calls)
            if rhs:
                model.assignments.append((field_id, tuple(rhs)))

        for method_id, decl, class_id in self.method_decls:
            calls = self._resolve_calls(decl.calls, method_id, class_id)
            for assign in decl.assigns:
                lhs = self._resolve_value(assign.lhs, method_id, class_id, assign.line)
                if lhs is None:
                    model.diagnostics["unresolvedRefs"] += 1
                    continue
                rhs = self._resolve_refs(
                    assign.refs, method_id, class_id, assign.line, calls
                )
                if rhs:
                    model.assignments.append((lhs, tuple(rhs)))

    def _resolve_refs(
        self,
        refs: list[tuple[str, str]],
        method_id: str | None,
        class_id: str,
        line: int,
        calls: dict[tuple[str, int], str],
    ) -> list[str]:
        resolved: list[str] = []
        for ref_kind, name in refs:
            target: str | None
            if ref_kind == "call":
                target = calls.get((name, line))
                if target is None:
                    target = self._resolve_project_method(name, None)
            else:
                target = self._resolve_value(name, method_id, class_id, line)
            if target is not None:
                if target not in resolved:
                    resolved.append(target)
            else:
                self.model.diagnostics["unresolvedRefs"] += 1
        return resolved

    def _resolve_calls(
        self, call_facts: list[CallFact], method_id: str | None, class_id: str
    ) -> dict[tuple[str, int], str]:
        """Resolve invocations, record Invocation facts, and return a lookup
        from (name, line) to the callee entity id."""
        resolved: dict[tuple[str, int], str] = {}
        for call in call_facts:
            callee = self._resolve_invocation(call, method_id, class_id)
            if callee is None:
                self.model.diagnostics["unresolvedRefs"] += 1
                continue
            args = tuple(
                self._resolve_value(arg, method_id, class_id, call.line)
                if arg is not None
                else None
                for arg in call.args
            )
            self.model.invocations.append(Invocation(method_id, callee, args))
            resolved.setdefault((call.name, call.line), callee)
        return resolved

    def _resolve_class(self, name: str | None) -> str | None:
        if name in _UNRESOLVABLE_TYPES:
            return None
        candidates = self.class_registry.get(name, [])
        return candidates[0] if len(candidates) == 1 else None

    def _enclosing_chain(self, class_id: str) -> list[str]:
        chain = []
        current: str | None = class_id
        while current is not None:
            chain.append(current)
            current = self.model.entities[current].enclosing
            if current is not None and self.model.entities[current].kind == METHOD:
                current = self.model.entities[current].enclosing
        return chain

    def _resolve_value(
        self, name: str, method_id: str | None, class_id: str, line: int
    ) -> str | None:
        """Lexical lookup: locals, then parameters, then fields, then a
        project-wide unique class name."""
        if method_id is not None:
            scope = self.method_scope[method_id]
            in_scope = [
                (decl_line, local_id)
                for local_name, decl_line, local_id in scope["locals"]
                if local_name == name
            ]
            if in_scope:
                preceding = [item for item in in_scope if item[0] <= line]
                if preceding:
                    return max(preceding)[1]
                return min(in_scope)[1]
            if name in scope["params"]:
                return scope["params"][name]
        for enclosing in self._enclosing_chain(class_id):
            if name in self.field_scope.get(enclosing, {}):
                return self.field_scope[enclosing][name]
        return self._resolve_class(name)

    def _methods_named(self, class_id: str, name: str) -> list[str]:
        return [
            e.id
            for e in self.model.members_of(class_id)
            if e.kind == METHOD and e.name == name
        ]

    def _resolve_project_method(self, name: str, arity: int | None) -> str | None:
        candidates = [
            e.id
            for e in self.model.entities.values()
            if e.kind == METHOD and e.name == name
        ]
        return self._pick_overload(candidates, arity)

    def _pick_overload(self, candidates: list[str], arity: int | None) -> str | None:
        if arity is not None and len(candidates) > 1:
            matching = [
                mid
                for mid in candidates
                if len(self.model.params_of(mid)) == arity
            ]
            if matching:
                candidates = matching
        return candidates[0] if len(candidates) == 1 else None

    def _resolve_invocation(
        self, call: CallFact, method_id: str | None, class_id: str
    ) -> str | None:
        arity = len(call.args)
        if call.receiver in (None, "this"):
            for enclosing in self._enclosing_chain(class_id):
                named = self._methods_named(enclosing, call.name)
                if named:
                    return self._pick_overload(named, arity)
            return self._resolve_project_method(call.name, arity)
        if call.receiver == "?":
            return self._resolve_project_method(call.name, arity)
        receiver_entity = self._resolve_value(
            call.receiver, method_id, class_id, call.line
        )
        if receiver_entity is not None:
            entity = self.model.entities[receiver_entity]
            if entity.kind in (CLASS, INTERFACE):
                receiver_class: str | None = receiver_entity
            else:
                receiver_class = self._resolve_class(
                    self.declared_type.get(receiver_entity)
                )
            if receiver_class is not None:
                named = self._methods_named(receiver_class, call.name)
                if named:
                    return self._pick_overload(named, arity)
        return self._resolve_project_method(call.name, arity)


def _build_expansion_history(model: SourceModel) -> None:
    """Record abbreviation expansions found among one-hop related identifiers."""
    graph = build_graph(model)
    neighbor_ids: dict[str, set[str]] = {}
    for edge in graph.edges:
        neighbor_ids.setdefault(edge.source, set()).add(edge.target)
        neighbor_ids.setdefault(edge.target, set()).add(edge.source)

    for entity in sorted(model.entities.values(), key=lambda e: (e.file, e.line, e.col, e.id)):
        try:
            words = split(entity.name)
        except DegenerateNameError:
            continue
        candidates = [w for w in words if is_expansion_candidate(w)]
        if not candidates:
            continue
        neighbor_words: list[str] = []
        for neighbor_id in sorted(neighbor_ids.get(entity.id, ())):
            try:
                neighbor_words.extend(split(model.entities[neighbor_id].name))
            except DegenerateNameError:
                continue
        for word in candidates:
            for neighbor_word in neighbor_words:
                if is_expansion(word, neighbor_word):
                    model.history.add(word, neighbor_word, entity.file)


def _normalize_entities(
    model: SourceModel, user_dictionary: Mapping[str, str] | None
) -> None:
    dictionary = merged_dictionary(user_dictionary)
    for entity in model.entities.values():
        context = ExpansionContext(
            history=model.history,
            source_file=entity.file,
            dictionary=dictionary,
        )
        try:
            entity.normalized = normalize(entity.name, context)
        except DegenerateNameError:
            entity.normalized = None
            model.diagnostics["degenerateNames"].append(entity.id)
