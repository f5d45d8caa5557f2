"""Bounded feature-constrained phrase-structure grammar engine.

A grammar file is a line-oriented DSL:

    rule NAME := token [OTHER] ...
    frame ID position=before|after := token <SLOT ...> [NAME] ...
    constraint FRAME-ID SLOTA.gender == SLOTB.gender
    note FRAME-ID free text
    # comment

Frames are top-level sentence templates. Slot syntax:

    <TRIGGER:kin>                  kinship trigger noun
    <TRIGGER:pron case=nom>        pronoun trigger (nom|acc|poss|refl)
    <OCC>                          the occupation noun (exactly one per frame)
    <ADJ attach=trigger>           adjective cue; attach=trigger|occupation
    <VSUBJ attach=... form=past>   subject-indicative verb cue; form=past
                                   inflects to simple past at realization
    <VOBJ attach=...>              object-indicative verb cue (bare form)

A ``?`` after the class name (``<ADJ? attach=occupation>``) marks a cue slot
optional: it is filled only when the requested cue count calls for it.
Rules (nonterminals, referenced as ``[NAME]``) may expand to literals and
other rules only, one alternative per ``rule`` line; recursion is rejected
so every derivation is finite and corpora enumerate exactly.

All trigger slots within a derivation are forced to one gender by feature
unification; ``constraint`` lines add explicit equations on top.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field
from itertools import combinations, product
from pathlib import Path
from typing import Iterator, Optional, Union

from .errors import (
    EmptySlotClass,
    GrammarSyntaxError,
    MissingOccSlot,
    RecursionDetected,
)
from .lexicon import PRONOUN_CASES, ContextCue, Lexicon, Occupation, Trigger

SLOT_CLASSES = ("TRIGGER", "OCC", "ADJ", "VSUBJ", "VOBJ")
CUE_CLASSES = ("ADJ", "VSUBJ", "VOBJ")
CUE_KIND_BY_CLASS = {"ADJ": "adjective", "VSUBJ": "verb_subj", "VOBJ": "verb_obj"}

# Simple past for verb cues: a small irregular table, then orthographic
# suffixation. Covers every shipped verb_subj entry.
IRREGULAR_PAST = {
    "weep": "wept",
    "spin": "spun",
    "win": "won",
    "speak": "spoke",
    "clap": "clapped",
}

VOWELS = "aeiou"


def past_tense(lemma: str) -> str:
    if lemma in IRREGULAR_PAST:
        return IRREGULAR_PAST[lemma]
    if lemma.endswith("e"):
        return lemma + "d"
    return lemma + "ed"


@dataclass(frozen=True)
class Slot:
    name: str  # positional name within the frame, e.g. TRIGGER1, ADJ1
    cls: str
    optional: bool = False
    trigger_kind: Optional[str] = None  # kinship | pronoun
    pronoun_case: Optional[str] = None
    attach: Optional[str] = None  # trigger | occupation (cue slots)
    form: Optional[str] = None  # past (VSUBJ)


@dataclass(frozen=True)
class Literal:
    text: str


@dataclass(frozen=True)
class NonterminalRef:
    rule: str
    key: str  # occurrence name within the frame, e.g. FIXADJ1


RhsItem = Union[Literal, Slot, NonterminalRef]


@dataclass
class Frame:
    id: str
    position: str  # before | after: trigger slots relative to the OCC slot
    rhs: tuple[RhsItem, ...]
    constraints: list[tuple[tuple[str, str], tuple[str, str]]] = field(default_factory=list)
    note: str = ""

    @property
    def slots(self) -> tuple[Slot, ...]:
        return tuple(it for it in self.rhs if isinstance(it, Slot))

    @property
    def cue_slots(self) -> tuple[Slot, ...]:
        return tuple(s for s in self.slots if s.cls in CUE_CLASSES)

    @property
    def trigger_slots(self) -> tuple[Slot, ...]:
        return tuple(s for s in self.slots if s.cls == "TRIGGER")

    @property
    def nt_refs(self) -> tuple[NonterminalRef, ...]:
        return tuple(it for it in self.rhs if isinstance(it, NonterminalRef))

    def slot(self, name: str) -> Slot:
        for s in self.slots:
            if s.name == name:
                return s
        raise KeyError(name)


@dataclass
class Grammar:
    frames: dict[str, Frame]
    rules: dict[str, list[tuple[str, ...]]]  # nonterminal -> expanded token tuples
    source_sha256: str

    def frame_ids(self) -> list[str]:
        return sorted(self.frames)


@dataclass(frozen=True)
class Derivation:
    frame_id: str
    # slot or nonterminal-occurrence name -> lexicon entry (str for NT choices)
    bindings: dict[str, Union[Trigger, Occupation, ContextCue, str]]
    tokens: tuple[str, ...]
    slot_indices: dict[str, int]


# --------------------------------------------------------------- parsing

_SLOT_HEAD = re.compile(r"^([A-Z]+)(\?)?(?::([a-z]+))?$")
_RHS_TOKEN = re.compile(r"<[^>]*>|\[[^\]]*\]|\S+")


def _parse_slot(path, line_no, body: str, counters: dict[str, int]) -> Slot:
    parts = body.split()
    if not parts:
        raise GrammarSyntaxError(path, line_no, "empty slot <>")
    head = _SLOT_HEAD.match(parts[0])
    if not head:
        raise GrammarSyntaxError(path, line_no, f"bad slot head {parts[0]!r}")
    cls, opt_mark, subtype = head.group(1), head.group(2), head.group(3)
    if cls not in SLOT_CLASSES:
        raise GrammarSyntaxError(path, line_no, f"unknown slot class {cls!r}")
    attrs = {}
    for part in parts[1:]:
        if "=" not in part:
            raise GrammarSyntaxError(path, line_no, f"bad slot attribute {part!r}")
        k, v = part.split("=", 1)
        if k in attrs:
            raise GrammarSyntaxError(path, line_no, f"repeated slot attribute {k!r}")
        attrs[k] = v

    optional = opt_mark is not None
    trigger_kind = pronoun_case = attach = form = None

    if cls == "TRIGGER":
        if optional:
            raise GrammarSyntaxError(path, line_no, "trigger slots cannot be optional")
        if subtype == "kin":
            trigger_kind = "kinship"
            if attrs:
                raise GrammarSyntaxError(path, line_no, "kinship slots take no attributes")
        elif subtype == "pron":
            trigger_kind = "pronoun"
            pronoun_case = attrs.pop("case", None)
            if pronoun_case not in PRONOUN_CASES:
                raise GrammarSyntaxError(
                    path, line_no, f"pronoun slot needs case= one of {PRONOUN_CASES}")
        else:
            raise GrammarSyntaxError(path, line_no, "trigger slot needs :kin or :pron")
    elif cls == "OCC":
        if optional or subtype or attrs:
            raise GrammarSyntaxError(path, line_no, "<OCC> takes no modifiers")
    else:  # cue classes
        if subtype:
            raise GrammarSyntaxError(path, line_no, f"{cls} takes no subtype")
        # verb cues default to trigger attachment; adjectives must say
        default_attach = None if cls == "ADJ" else "trigger"
        attach = attrs.pop("attach", default_attach)
        if attach not in ("trigger", "occupation"):
            raise GrammarSyntaxError(
                path, line_no, f"{cls} slot needs attach=trigger|occupation")
        if cls == "VSUBJ":
            form = attrs.pop("form", None)
            if form not in (None, "past"):
                raise GrammarSyntaxError(path, line_no, "VSUBJ form= must be 'past'")
    if attrs:
        raise GrammarSyntaxError(path, line_no, f"unknown slot attributes {sorted(attrs)}")

    counters[cls] = counters.get(cls, 0) + 1
    return Slot(
        name=f"{cls}{counters[cls]}",
        cls=cls,
        optional=optional,
        trigger_kind=trigger_kind,
        pronoun_case=pronoun_case,
        attach=attach,
        form=form,
    )


def _parse_rhs(path, line_no, text: str, *, allow_slots: bool):
    items = []
    slot_counters: dict[str, int] = {}
    nt_counters: dict[str, int] = {}
    for tok in _RHS_TOKEN.findall(text):
        if tok.startswith("<") and tok.endswith(">"):
            if not allow_slots:
                raise GrammarSyntaxError(
                    path, line_no, "slots are only allowed in frames, not rules")
            items.append(_parse_slot(path, line_no, tok[1:-1], slot_counters))
        elif tok.startswith("[") and tok.endswith("]"):
            name = tok[1:-1]
            if not name:
                raise GrammarSyntaxError(path, line_no, "empty nonterminal reference")
            nt_counters[name] = nt_counters.get(name, 0) + 1
            items.append(NonterminalRef(name, f"{name}{nt_counters[name]}"))
        elif any(ch in tok for ch in "<>[]"):
            raise GrammarSyntaxError(path, line_no, f"malformed token {tok!r}")
        else:
            items.append(Literal(tok))
    if not items:
        raise GrammarSyntaxError(path, line_no, "empty right-hand side")
    return items


def _validate_frame(path, line_no, frame: Frame) -> None:
    occ_count = sum(1 for s in frame.slots if s.cls == "OCC")
    if occ_count != 1:
        raise MissingOccSlot(frame.id, occ_count)
    if not frame.trigger_slots:
        raise GrammarSyntaxError(path, line_no, f"frame {frame.id!r} has no trigger slot")
    occ_pos = next(i for i, it in enumerate(frame.rhs)
                   if isinstance(it, Slot) and it.cls == "OCC")
    trig_pos = [i for i, it in enumerate(frame.rhs)
                if isinstance(it, Slot) and it.cls == "TRIGGER"]
    if frame.position == "before" and not all(p < occ_pos for p in trig_pos):
        raise GrammarSyntaxError(
            path, line_no, f"frame {frame.id!r}: position=before but a trigger "
            "slot follows the occupation slot")
    if frame.position == "after" and not all(p > occ_pos for p in trig_pos):
        raise GrammarSyntaxError(
            path, line_no, f"frame {frame.id!r}: position=after but a trigger "
            "slot precedes the occupation slot")


def _expand_rules(path, raw_rules: dict[str, list[list]], use_lines: dict[str, int]):
    """Check acyclicity and expand every nonterminal to flat token tuples."""
    # detect recursion with a three-color DFS
    state: dict[str, int] = {}  # 1 = in progress, 2 = done

    def visit(name: str):
        if state.get(name) == 2:
            return
        if state.get(name) == 1:
            raise RecursionDetected(name)
        state[name] = 1
        for alt in raw_rules[name]:
            for item in alt:
                if isinstance(item, NonterminalRef):
                    if item.rule not in raw_rules:
                        raise GrammarSyntaxError(
                            path, use_lines.get(item.rule, 0),
                            f"undefined nonterminal [{item.rule}]")
                    visit(item.rule)
        state[name] = 2

    for name in raw_rules:
        visit(name)

    expanded: dict[str, list[tuple[str, ...]]] = {}

    def expansions(name: str) -> list[tuple[str, ...]]:
        if name in expanded:
            return expanded[name]
        out = []
        for alt in raw_rules[name]:
            parts: list[list[tuple[str, ...]]] = []
            for item in alt:
                if isinstance(item, Literal):
                    parts.append([(item.text,)])
                else:
                    parts.append(expansions(item.rule))
            for combo in product(*parts):
                out.append(tuple(t for chunk in combo for t in chunk))
        expanded[name] = out
        return out

    for name in raw_rules:
        expansions(name)
    return expanded


def parse_grammar(path) -> Grammar:
    """Parse and validate a grammar file.

    Raises GrammarSyntaxError, RecursionDetected, or MissingOccSlot.
    """
    path = Path(path)
    if not path.is_file():
        raise GrammarSyntaxError(path, 0, "grammar file not found")
    source = path.read_bytes()

    frames: dict[str, Frame] = {}
    raw_rules: dict[str, list[list]] = {}
    rule_use_lines: dict[str, int] = {}
    pending_constraints = []  # (line_no, frame_id, (a, fa), (b, fb))
    pending_notes = []

    for line_no, raw in enumerate(source.decode("utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        keyword = line.split(None, 1)[0]

        if keyword in ("rule", "frame"):
            head, sep, rhs_text = line.partition(":=")
            if not sep:
                raise GrammarSyntaxError(path, line_no, f"{keyword} line needs ':='")
            head_parts = head.split()
            if keyword == "rule":
                if len(head_parts) != 2:
                    raise GrammarSyntaxError(path, line_no, "rule line: rule NAME := ...")
                name = head_parts[1]
                items = _parse_rhs(path, line_no, rhs_text, allow_slots=False)
                raw_rules.setdefault(name, []).append(items)
                for it in items:
                    if isinstance(it, NonterminalRef):
                        rule_use_lines.setdefault(it.rule, line_no)
            else:
                if len(head_parts) != 3 or not head_parts[2].startswith("position="):
                    raise GrammarSyntaxError(
                        path, line_no, "frame line: frame ID position=before|after := ...")
                frame_id = head_parts[1]
                position = head_parts[2].split("=", 1)[1]
                if position not in ("before", "after"):
                    raise GrammarSyntaxError(path, line_no, f"bad position {position!r}")
                if frame_id in frames:
                    raise GrammarSyntaxError(path, line_no, f"duplicate frame {frame_id!r}")
                items = _parse_rhs(path, line_no, rhs_text, allow_slots=True)
                frame = Frame(id=frame_id, position=position, rhs=tuple(items))
                _validate_frame(path, line_no, frame)
                for it in frame.nt_refs:
                    rule_use_lines.setdefault(it.rule, line_no)
                frames[frame_id] = frame

        elif keyword == "constraint":
            m = re.match(r"constraint\s+(\S+)\s+(\w+)\.(\w+)\s*==\s*(\w+)\.(\w+)$", line)
            if not m:
                raise GrammarSyntaxError(
                    path, line_no, "constraint line: constraint FRAME A.gender == B.gender")
            pending_constraints.append(
                (line_no, m.group(1), (m.group(2), m.group(3)), (m.group(4), m.group(5))))

        elif keyword == "note":
            parts = line.split(None, 2)
            if len(parts) < 3:
                raise GrammarSyntaxError(path, line_no, "note line: note FRAME text")
            pending_notes.append((line_no, parts[1], parts[2]))

        else:
            raise GrammarSyntaxError(path, line_no, f"unknown directive {keyword!r}")

    for line_no, frame_id, a, b in pending_constraints:
        frame = frames.get(frame_id)
        if frame is None:
            raise GrammarSyntaxError(path, line_no, f"constraint names unknown frame {frame_id!r}")
        for slot_name, feat in (a, b):
            try:
                frame.slot(slot_name)
            except KeyError:
                raise GrammarSyntaxError(
                    path, line_no, f"constraint names unknown slot {slot_name!r} "
                    f"in frame {frame_id!r}") from None
            if feat != "gender":
                raise GrammarSyntaxError(path, line_no, f"unsupported feature {feat!r}")
        frame.constraints.append((a, b))

    for line_no, frame_id, text in pending_notes:
        frame = frames.get(frame_id)
        if frame is None:
            raise GrammarSyntaxError(path, line_no, f"note names unknown frame {frame_id!r}")
        frame.note = text

    for frame in frames.values():
        for ref in frame.nt_refs:
            if ref.rule not in raw_rules:
                raise GrammarSyntaxError(
                    path, rule_use_lines.get(ref.rule, 0),
                    f"undefined nonterminal [{ref.rule}]")

    rules = _expand_rules(path, raw_rules, rule_use_lines)
    return Grammar(frames=frames, rules=rules,
                   source_sha256=hashlib.sha256(source).hexdigest())


# ------------------------------------------------------------ unification

def unify(a: Optional[dict], b: Optional[dict]) -> Optional[dict]:
    """Merge two feature bundles; None (conflict) if a shared key disagrees.

    Conflict is a value, not an error; None inputs propagate.
    """
    if a is None or b is None:
        return None
    for key in a.keys() & b.keys():
        if a[key] != b[key]:
            return None
    merged = dict(a)
    merged.update(b)
    return merged


def _feature_value(slot: Slot, entry, feature: str):
    # 'gender' resolves per class: trigger gender, occupation stereotype,
    # cue indicative gender.
    if slot.cls == "TRIGGER":
        return entry.gender
    if slot.cls == "OCC":
        return entry.stereotype
    return entry.indicative_gender


# ------------------------------------------------------------ enumeration

def _slot_pool(lexicon: Lexicon, slot: Slot):
    if slot.cls == "TRIGGER":
        if slot.trigger_kind == "kinship":
            return lexicon.kinship_triggers()
        return lexicon.pronoun_triggers(slot.pronoun_case)
    if slot.cls == "OCC":
        return list(lexicon.occupations)
    return lexicon.cues_of(CUE_KIND_BY_CLASS[slot.cls])


def _surface(slot: Slot, entry) -> str:
    if slot.cls == "OCC":
        return entry.surface_form
    if slot.cls == "VSUBJ" and slot.form == "past":
        return past_tense(entry.lemma)
    return entry.lemma


def realize(grammar: Grammar, frame_id: str, bindings: dict) -> tuple[tuple[str, ...], dict[str, int]]:
    """Rebuild the token sequence and slot indices for a binding map.

    ``bindings`` maps slot names to lexicon entries and nonterminal
    occurrence names to their chosen expansion (tokens joined by spaces).
    Optional slots absent from the map are omitted from the output.
    """
    frame = grammar.frames[frame_id]
    tokens: list[str] = []
    indices: dict[str, int] = {}
    for item in frame.rhs:
        if isinstance(item, Literal):
            tokens.append(item.text)
        elif isinstance(item, NonterminalRef):
            chosen = bindings[item.key]
            indices[item.key] = len(tokens)
            tokens.extend(chosen.split(" "))
        else:
            if item.name not in bindings:
                if not item.optional:
                    raise KeyError(f"missing binding for slot {item.name}")
                continue
            indices[item.name] = len(tokens)
            tokens.append(_surface(item, bindings[item.name]))
    # Orthographic article choice: 'a' becomes 'an' before a vowel-initial
    # token. No lexicon entry is itself 'a', so a flat pass is safe.
    for i, tok in enumerate(tokens[:-1]):
        if tok == "a" and tokens[i + 1][0].lower() in VOWELS:
            tokens[i] = "an"
    return tuple(tokens), indices


def _constraints_ok(frame: Frame, bindings: dict) -> bool:
    bundle: Optional[dict] = {}
    for slot in frame.trigger_slots:
        if slot.name in bindings:
            bundle = unify(bundle, {"gender": bindings[slot.name].gender})
            if bundle is None:
                return False
    for (name_a, feat_a), (name_b, feat_b) in frame.constraints:
        if name_a not in bindings or name_b not in bindings:
            continue  # a constraint on an unfilled optional slot is vacuous
        va = _feature_value(frame.slot(name_a), bindings[name_a], feat_a)
        vb = _feature_value(frame.slot(name_b), bindings[name_b], feat_b)
        if va != vb:
            return False
    return True


def enumerate_derivations(
    grammar: Grammar,
    lexicon: Lexicon,
    frame_filter: Optional[set[str]] = None,
    cue_count: int = 0,
) -> Iterator[Derivation]:
    """Yield every licensed derivation with exactly ``cue_count`` cues.

    Frames whose required cue slots exceed ``cue_count``, or that cannot
    reach it even with all optional cue slots filled, yield nothing.
    Deterministic: frames in lexicographic id order, then optional-slot
    choices, nonterminal alternatives, and slot bindings in definition
    order with lexicon entries in file order.
    """
    if cue_count not in (0, 1, 2):
        raise ValueError("cue_count must be 0, 1 or 2")
    for frame_id in grammar.frame_ids():
        if frame_filter is not None and frame_id not in frame_filter:
            continue
        frame = grammar.frames[frame_id]
        required = [s for s in frame.cue_slots if not s.optional]
        optional = [s for s in frame.cue_slots if s.optional]
        need = cue_count - len(required)
        if need < 0 or need > len(optional):
            continue
        for chosen in combinations(optional, need):
            chosen_set = {s.name for s in chosen}
            active = [s for s in frame.slots
                      if s.cls not in CUE_CLASSES or not s.optional
                      or s.name in chosen_set]
            pools = []
            for slot in active:
                pool = _slot_pool(lexicon, slot)
                if not pool:
                    raise EmptySlotClass(frame_id, slot.name)
                pools.append(pool)
            nt_alternatives = [
                [" ".join(alt) for alt in grammar.rules[ref.rule]]
                for ref in frame.nt_refs
            ]
            names = [s.name for s in active]
            nt_keys = [ref.key for ref in frame.nt_refs]
            for nt_combo in product(*nt_alternatives):
                nt_bindings = dict(zip(nt_keys, nt_combo))
                for combo in product(*pools):
                    bindings = dict(zip(names, combo))
                    if not _constraints_ok(frame, bindings):
                        continue
                    bindings.update(nt_bindings)
                    tokens, indices = realize(grammar, frame_id, bindings)
                    yield Derivation(frame_id=frame_id, bindings=bindings,
                                     tokens=tokens, slot_indices=indices)


def binding_order(frame: Frame) -> list[str]:
    """Canonical binding-name order (definition order of bindable items)."""
    order = []
    for item in frame.rhs:
        if isinstance(item, Slot):
            order.append(item.name)
        elif isinstance(item, NonterminalRef):
            order.append(item.key)
    return order
