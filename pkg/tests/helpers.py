"""Deterministic stand-in translator used to exercise the pipeline.

Produces token-level Spanish or German renderings of the copular kinship
sentences. It picks the target occupation form agreeing with the trigger
gender when the dictionary offers one, so most verdicts come out Correct;
lemmas lacking a gendered form surface as Wrong/Inconclusive, which is
also useful coverage.
"""

from genspect import data_path
from genspect.annotation import (
    Translation,
    load_gender_dictionary,
    load_occupation_forms,
)

KIN_ES = {
    "sister": "hermana", "brother": "hermano",
    "mother": "madre", "father": "padre",
    "aunt": "tía", "uncle": "tío",
    "grandmother": "abuela", "grandfather": "abuelo",
    "daughter": "hija", "son": "hijo",
    "niece": "sobrina", "nephew": "sobrino",
}

KIN_DE = {
    "sister": "Schwester", "brother": "Bruder",
    "mother": "Mutter", "father": "Vater",
    "aunt": "Tante", "uncle": "Onkel",
    "grandmother": "Großmutter", "grandfather": "Großvater",
    "daughter": "Tochter", "son": "Sohn",
    "niece": "Nichte", "nephew": "Neffe",
}


def _gendered_form(forms, gdict, gender):
    for form in sorted(forms):
        if gdict.form_to_gender.get(form) == gender:
            return form
    return sorted(forms)[0]


def toy_translate(records, lang):
    """Translate F-COP-KIN-BEFORE records ("My <kin> is a <occ> .")."""
    gdict = load_gender_dictionary(data_path("dicts", f"{lang}_gender.tsv"), lang)
    forms = load_occupation_forms(data_path("dicts", f"{lang}_occupations.tsv"))
    expected = {"F": "Fem", "M": "Masc"}
    out = []
    for rec in records:
        assert rec.frame_id == "F-COP-KIN-BEFORE", "toy translator only covers one frame"
        occ = _gendered_form(forms[rec.occupation_lemma], gdict,
                             expected[rec.trigger_gender])
        occ_gender = gdict.form_to_gender.get(occ)
        if lang == "es":
            art = "una" if occ_gender == "Fem" else "un"
            tokens = ("Mi", KIN_ES[rec.trigger_lemma], "es", art, occ, ".")
        else:
            art = "eine" if occ_gender == "Fem" else "ein"
            tokens = ("Meine" if rec.trigger_gender == "F" else "Mein",
                      KIN_DE[rec.trigger_lemma], "ist", art, occ, ".")
        out.append(Translation(id=rec.id, lang=lang, tokens=tokens))
    return out
