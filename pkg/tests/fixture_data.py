"""Reference benchmark numbers for a large multilingual MT system.

Used to build realistic synthetic outcome sets and to cross-check the
aggregation pipeline:

- QUADRANT_PROPORTIONS[lang][quadrant] = (correct, wrong, inconclusive)
  fractions per quadrant (trigger gender x occupation stereotype).
- OVERALL_CORRECT[lang] is the published overall correct rate; with equal
  quadrant sizes it must equal the mean of the four quadrant rates to
  within rounding of the inputs (+-0.011).
- LARGER_FEMININE_DROP lists the languages whose feminine-trigger accuracy
  drop (FF - FM) is reported to exceed the masculine one (MM - MF).
"""

QUADRANT_PROPORTIONS = {
    "de": {"MM": (0.97, 0.02, 0.02), "FF": (0.76, 0.23, 0.01),
           "MF": (0.83, 0.16, 0.01), "FM": (0.37, 0.61, 0.02)},
    "pt": {"MM": (0.95, 0.02, 0.03), "FF": (0.72, 0.26, 0.02),
           "MF": (0.81, 0.17, 0.02), "FM": (0.42, 0.56, 0.03)},
    "pl": {"MM": (0.95, 0.02, 0.03), "FF": (0.59, 0.39, 0.02),
           "MF": (0.83, 0.15, 0.02), "FM": (0.21, 0.76, 0.03)},
    "cs": {"MM": (0.95, 0.02, 0.03), "FF": (0.59, 0.39, 0.02),
           "MF": (0.82, 0.16, 0.02), "FM": (0.31, 0.66, 0.03)},
    "ru": {"MM": (0.95, 0.02, 0.03), "FF": (0.43, 0.56, 0.01),
           "MF": (0.85, 0.14, 0.01), "FM": (0.18, 0.78, 0.04)},
    "lt": {"MM": (0.94, 0.03, 0.02), "FF": (0.51, 0.48, 0.01),
           "MF": (0.87, 0.11, 0.01), "FM": (0.22, 0.75, 0.03)},
    "lv": {"MM": (0.93, 0.05, 0.02), "FF": (0.45, 0.52, 0.02),
           "MF": (0.79, 0.20, 0.01), "FM": (0.30, 0.67, 0.03)},
    "uk": {"MM": (0.92, 0.04, 0.04), "FF": (0.49, 0.50, 0.02),
           "MF": (0.78, 0.20, 0.02), "FM": (0.20, 0.76, 0.04)},
    "hr": {"MM": (0.91, 0.04, 0.05), "FF": (0.61, 0.36, 0.03),
           "MF": (0.73, 0.24, 0.03), "FM": (0.36, 0.58, 0.07)},
    "fr": {"MM": (0.91, 0.02, 0.07), "FF": (0.57, 0.37, 0.06),
           "MF": (0.80, 0.14, 0.07), "FM": (0.25, 0.69, 0.07)},
    "el": {"MM": (0.91, 0.02, 0.08), "FF": (0.41, 0.53, 0.07),
           "MF": (0.85, 0.10, 0.05), "FM": (0.19, 0.72, 0.10)},
    "es": {"MM": (0.84, 0.01, 0.15), "FF": (0.58, 0.22, 0.20),
           "MF": (0.68, 0.15, 0.17), "FM": (0.37, 0.46, 0.17)},
    "ro": {"MM": (0.83, 0.05, 0.12), "FF": (0.43, 0.52, 0.04),
           "MF": (0.80, 0.16, 0.04), "FM": (0.28, 0.61, 0.12)},
    "hi": {"MM": (0.81, 0.08, 0.11), "FF": (0.25, 0.67, 0.08),
           "MF": (0.79, 0.13, 0.08), "FM": (0.17, 0.72, 0.11)},
    "he": {"MM": (0.78, 0.03, 0.19), "FF": (0.54, 0.39, 0.07),
           "MF": (0.69, 0.22, 0.08), "FM": (0.22, 0.63, 0.16)},
    "it": {"MM": (0.77, 0.02, 0.21), "FF": (0.49, 0.28, 0.23),
           "MF": (0.62, 0.15, 0.23), "FM": (0.23, 0.55, 0.22)},
    "ur": {"MM": (0.76, 0.05, 0.19), "FF": (0.14, 0.67, 0.19),
           "MF": (0.73, 0.07, 0.20), "FM": (0.10, 0.70, 0.20)},
    "ca": {"MM": (0.75, 0.01, 0.24), "FF": (0.53, 0.29, 0.18),
           "MF": (0.67, 0.14, 0.19), "FM": (0.28, 0.48, 0.24)},
    "be": {"MM": (0.66, 0.15, 0.19), "FF": (0.50, 0.36, 0.14),
           "MF": (0.54, 0.33, 0.12), "FM": (0.32, 0.47, 0.21)},
    "sr": {"MM": (0.34, 0.58, 0.09), "FF": (0.87, 0.10, 0.03),
           "MF": (0.21, 0.76, 0.03), "FM": (0.68, 0.23, 0.09)},
}

OVERALL_CORRECT = {
    "de": 0.73, "pt": 0.72, "cs": 0.67, "lt": 0.63, "pl": 0.65,
    "hr": 0.65, "fr": 0.63, "lv": 0.62, "es": 0.61, "ru": 0.60,
    "uk": 0.60, "el": 0.59, "ro": 0.59, "ca": 0.56, "he": 0.55,
    "it": 0.53, "sr": 0.52, "hi": 0.51, "be": 0.51, "ur": 0.44,
}

LARGER_FEMININE_DROP = frozenset({
    "be", "ca", "cs", "de", "el", "es", "fr", "he", "hr", "it",
    "lt", "lv", "pl", "pt", "ro", "sr", "uk",
})


def build_synthetic_outcomes(n_per_quadrant=1000):
    """Per-language outcome sets realizing the reference quadrant
    proportions with four equal-size quadrants. Correct counts are exact;
    the wrong/inconclusive split absorbs the rounding slack."""
    from genspect.evaluator import CORRECT, INCONCLUSIVE, WRONG, Outcome

    outcomes = []
    for lang, quads in QUADRANT_PROPORTIONS.items():
        for quad, (c_frac, w_frac, _) in quads.items():
            c = round(c_frac * n_per_quadrant)
            w = min(round(w_frac * n_per_quadrant), n_per_quadrant - c)
            i = n_per_quadrant - c - w
            for verdict, count in ((CORRECT, c), (WRONG, w), (INCONCLUSIVE, i)):
                outcomes += [Outcome(
                    id="s", lang=lang, verdict=verdict,
                    resolved_gender=None, reason="OK",
                    trigger_gender=quad[0], occupation_stereotype=quad[1],
                    occupation_lemma="-", frame_id="-", trigger_position="before",
                )] * count
    return outcomes
