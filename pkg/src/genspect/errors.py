"""Exception types shared across the toolkit."""


class GenspectError(Exception):
    """Base class for all toolkit errors."""


# ---------------------------------------------------------------- lexicon

class MissingFile(GenspectError):
    pass


class MalformedRow(GenspectError):
    def __init__(self, path, line_no, message):
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = str(path)
        self.line_no = line_no


class BalanceViolation(GenspectError):
    def __init__(self, which, f_count, m_count):
        super().__init__(
            f"gender balance violated for {which}: F={f_count} M={m_count}"
        )
        self.which = which
        self.f_count = f_count
        self.m_count = m_count


class UnknownLemma(GenspectError):
    pass


# ---------------------------------------------------------------- grammar

class GrammarSyntaxError(GenspectError):
    def __init__(self, path, line_no, message):
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = str(path)
        self.line_no = line_no


class RecursionDetected(GenspectError):
    def __init__(self, nonterminal):
        super().__init__(f"nonterminal {nonterminal!r} derives itself; "
                         "grammars must be non-recursive")
        self.nonterminal = nonterminal


class MissingOccSlot(GenspectError):
    def __init__(self, frame_id, count):
        super().__init__(
            f"frame {frame_id!r} has {count} occupation slots, needs exactly 1"
        )
        self.frame_id = frame_id
        self.count = count


class EmptySlotClass(GenspectError):
    def __init__(self, frame_id, slot):
        super().__init__(f"frame {frame_id!r}: no lexicon entries for slot {slot}")
        self.frame_id = frame_id
        self.slot = slot


# -------------------------------------------------------------- generator

class EmptyQuadrant(GenspectError):
    def __init__(self, quadrant):
        super().__init__(f"no records for quadrant {quadrant}; "
                         "corpus cannot be balanced")
        self.quadrant = quadrant


class EmptyTokens(GenspectError):
    pass


# ------------------------------------------------------------- annotation

class MalformedLine(GenspectError):
    def __init__(self, path, line_no, message):
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = str(path)
        self.line_no = line_no


class DuplicateId(GenspectError):
    def __init__(self, record_id):
        super().__init__(f"duplicate id {record_id!r}")
        self.record_id = record_id


class LanguageMismatch(GenspectError):
    pass


# -------------------------------------------------------------- evaluator

class IdMismatch(GenspectError):
    pass


class LengthMismatch(GenspectError):
    pass


# ---------------------------------------------------------------- metrics

class UnknownDimension(GenspectError):
    def __init__(self, dimension):
        super().__init__(f"unknown grouping dimension {dimension!r}")
        self.dimension = dimension
