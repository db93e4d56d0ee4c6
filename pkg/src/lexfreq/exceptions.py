class LexfreqError(Exception):
    """Base class for all errors raised by lexfreq."""


class CorpusError(LexfreqError):
    pass


class AnnotationError(LexfreqError):
    pass


class RulesetError(LexfreqError):
    pass


class StatsError(LexfreqError):
    pass


class DictionaryError(LexfreqError):
    pass


class FallbackError(LexfreqError):
    """Raised in strict mode when a token could only be lemmatized from its surface."""
