"""Frequency dictionaries and lexical statistics for annotated literary text."""

from .compare import ComparisonReport, compare, report_tsv, truncate_prefix
from .dictionary import (
    ALPHABETIC_FREQUENCY,
    FREQUENCY_ALPHABETIC,
    CoveragePoint,
    DictionaryEntry,
    build_dictionary,
    coverage_table,
    emit,
    emit_plot_data,
    format_top,
    plot_data,
)
from .exceptions import (
    AnnotationError,
    CorpusError,
    DictionaryError,
    FallbackError,
    LexfreqError,
    RulesetError,
    StatsError,
)
from .ingest import (
    AnnotatedToken,
    AnnotationRow,
    RawCorpus,
    dump_annotations,
    load_annotations,
    load_corpus,
    merge_annotations,
    parse_annotations,
    read_annotated,
)
from .lemma import (
    FrequencyRecord,
    LemmaKey,
    LemmaOccurrence,
    LemmaRuleSet,
    VariantGroup,
    aggregate,
    default_ruleset,
    dump_ruleset,
    lemmatize,
    lemmatize_all,
    load_ruleset,
    parse_ruleset,
)
from .pipeline import Analysis, analyze
from .statistics import (
    CorpusStats,
    compute_stats,
    count_wordforms,
    format_stats,
    hapax_set,
    round_half_up,
    stats_tsv,
    threshold_mass,
)
from .tokenizer import Token, count_tokens, dump_tokens, tokenize

__version__ = "0.1.0"
