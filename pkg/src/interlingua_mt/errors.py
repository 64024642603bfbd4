"""Exception types shared by the pipeline stages."""


class PipelineError(Exception):
    """Base error; ``stage`` names the pipeline stage that failed."""

    stage = "pipeline"

    def __init__(self, message, stage=None):
        super().__init__(message)
        if stage is not None:
            self.stage = stage

    def __str__(self):
        return f"[{self.stage}] {super().__str__()}"


class CorpusError(PipelineError):
    stage = "corpus"


class CodecError(PipelineError):
    stage = "codec"


class MorphologyError(PipelineError):
    stage = "morphology"


class LexiconError(PipelineError):
    stage = "lexicon"


class OOVError(LexiconError):
    """A lemma has no thesaurus entry."""

    def __init__(self, token, lemma):
        super().__init__(f"no thesaurus entry for {lemma!r} (token {token!r})")
        self.token = token
        self.lemma = lemma


class NoParseError(PipelineError):
    """No meaning assignment makes the sentence reduce to ``s``."""

    stage = "grammar"

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace or []


class GenerationError(PipelineError):
    stage = "generation"


class AlignmentError(PipelineError):
    stage = "aligner"


class ConfigError(PipelineError):
    stage = "config"
