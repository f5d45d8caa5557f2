"""Independent brute-force oracles the tests check the fast paths against.

These deliberately avoid the library's enumeration and aggregation code:
counting is done with plain nested loops over the same inputs.
"""

from itertools import combinations, product

from genspect.grammar import CUE_KIND_BY_CLASS
from genspect.evaluator import CORRECT, INCONCLUSIVE, WRONG


def _pool(lexicon, slot):
    if slot.cls == "TRIGGER":
        if slot.trigger_kind == "kinship":
            return [t for t in lexicon.triggers if t.kind == "kinship"]
        return [t for t in lexicon.triggers
                if t.kind == "pronoun" and t.pronoun_case == slot.pronoun_case]
    if slot.cls == "OCC":
        return list(lexicon.occupations)
    kind = CUE_KIND_BY_CLASS[slot.cls]
    return [c for c in lexicon.cues if c.kind == kind]


def _gender_of(slot, entry):
    if slot.cls == "TRIGGER":
        return entry.gender
    if slot.cls == "OCC":
        return entry.stereotype
    return entry.indicative_gender


def count_frame_derivations(frame, lexicon, cue_count, nt_alternative_counts):
    """Walk every slot combination and count the licensed ones."""
    nt_factor = 1
    for n in nt_alternative_counts:
        nt_factor *= n

    required = [s for s in frame.cue_slots if not s.optional]
    optional = [s for s in frame.cue_slots if s.optional]
    need = cue_count - len(required)
    if need < 0 or need > len(optional):
        return 0

    total = 0
    for chosen in combinations(optional, need):
        chosen_names = {s.name for s in chosen}
        active = [s for s in frame.slots
                  if s.cls not in ("ADJ", "VSUBJ", "VOBJ") or not s.optional
                  or s.name in chosen_names]
        for combo in product(*(_pool(lexicon, s) for s in active)):
            bound = dict(zip((s.name for s in active), combo))
            trigger_genders = {e.gender for s, e in zip(active, combo)
                               if s.cls == "TRIGGER"}
            if len(trigger_genders) > 1:
                continue
            ok = True
            for (name_a, _), (name_b, _) in frame.constraints:
                if name_a in bound and name_b in bound:
                    slot_a = frame.slot(name_a)
                    slot_b = frame.slot(name_b)
                    if _gender_of(slot_a, bound[name_a]) != _gender_of(slot_b, bound[name_b]):
                        ok = False
                        break
            if ok:
                total += 1
    return total * nt_factor


def count_by_group(outcomes, key_fn):
    """Plain counting aggregation: group -> (n, correct, wrong, inconclusive)."""
    table = {}
    for o in outcomes:
        key = key_fn(o)
        n, c, w, i = table.get(key, (0, 0, 0, 0))
        table[key] = (
            n + 1,
            c + (o.verdict == CORRECT),
            w + (o.verdict == WRONG),
            i + (o.verdict == INCONCLUSIVE),
        )
    return table
