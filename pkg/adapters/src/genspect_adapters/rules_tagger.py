"""Rule-based morphological gender tagger for German and Spanish.

Three layers, in order: a closed-class table (articles, determiners,
possessives), intrinsic suffix rules, and determiner agreement (a noun with
no intrinsic gender inherits the gender of the closest preceding determiner
in a small window). Tokens stay untouched and in order; genders are
Masc/Fem/Neut or none.
"""

GERMAN_CLOSED = {
    "der": "Masc", "die": "Fem", "das": "Neut",
    "ein": "Masc", "eine": "Fem", "einen": "Masc", "einem": "Masc",
    "einer": "Fem",
    "dieser": "Masc", "diese": "Fem", "dieses": "Neut",
    "mein": "Masc", "meine": "Fem", "meinen": "Masc", "meiner": "Fem",
    "sein": "Masc", "seine": "Fem",
    "ihr": "Masc", "ihre": "Fem",
    "kein": "Masc", "keine": "Fem",
}

GERMAN_SUFFIXES = (
    ("erin", "Fem"), ("istin", "Fem"), ("ärin", "Fem"), ("eurin", "Fem"),
    ("schwester", "Fem"), ("mutter", "Fem"), ("tochter", "Fem"),
    ("frau", "Fem"), ("in", "Fem"),
    ("er", "Masc"), ("eur", "Masc"), ("ist", "Masc"), ("mann", "Masc"),
    ("or", "Masc"),
)

SPANISH_CLOSED = {
    "el": "Masc", "la": "Fem", "un": "Masc", "una": "Fem",
    "ese": "Masc", "esa": "Fem", "este": "Masc", "esta": "Fem",
    "los": "Masc", "las": "Fem", "unos": "Masc", "unas": "Fem",
}

SPANISH_SUFFIXES = (
    ("ora", "Fem"), ("era", "Fem"), ("esa", "Fem"), ("triz", "Fem"),
    ("a", "Fem"), ("o", "Masc"), ("or", "Masc"),
)

AGREEMENT_WINDOW = 3  # determiner may sit a couple of adjectives away

LANG_RULES = {
    "de": (GERMAN_CLOSED, GERMAN_SUFFIXES, True),
    "es": (SPANISH_CLOSED, SPANISH_SUFFIXES, False),
}


def supported_languages():
    return sorted(LANG_RULES)


def _intrinsic(token, closed, suffixes, nouns_capitalized):
    lowered = token.lower()
    if lowered in closed:
        return closed[lowered], "DET"
    if nouns_capitalized and not token[:1].isupper():
        # German nouns are capitalized; don't suffix-guess function words
        return None, None
    for sfx, gender in suffixes:
        if lowered.endswith(sfx) and len(lowered) >= len(sfx):
            pos = "NOUN" if (not nouns_capitalized or token[:1].isupper()) else None
            return gender, pos
    return None, None


def tag_tokens(lang, tokens):
    """[(form, gender, pos)] rows, one per token, order preserved."""
    if lang not in LANG_RULES:
        raise ValueError(f"no rules for language {lang!r}; "
                         f"supported: {', '.join(supported_languages())}")
    closed, suffixes, nouns_capitalized = LANG_RULES[lang]
    rows = []
    for idx, token in enumerate(tokens):
        gender, pos = _intrinsic(token, closed, suffixes, nouns_capitalized)
        looks_nominal = token[:1].isupper() and idx > 0 if nouns_capitalized \
            else token.isalpha()
        if gender is None and looks_nominal:
            for back in range(1, AGREEMENT_WINDOW + 1):
                if idx - back < 0:
                    break
                prev = tokens[idx - back].lower()
                if prev in closed:
                    gender, pos = closed[prev], "NOUN"
                    break
        if nouns_capitalized and pos is None and idx > 0 and token[:1].isupper():
            pos = "NOUN"
        rows.append((token, gender, pos))
    return rows
