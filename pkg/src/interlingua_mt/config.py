"""Pipeline configuration: INI file ``[pipeline]`` section plus flag overrides."""
from __future__ import annotations

import configparser
import hashlib
import json
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path
from typing import Optional

from . import fixtures
from .errors import ConfigError, CorpusError, LexiconError, MorphologyError

SECTION = "pipeline"
ALIGN_METHODS = ("entropy", "bigram", "oracle")


@dataclass(frozen=True)
class PipelineConfig:
    corpus: str = str(fixtures.SOURCE_CORPUS)
    target_corpus: str = str(fixtures.TARGET_CORPUS)
    thesaurus: str = str(fixtures.THESAURUS)
    exceptions: str = str(fixtures.EXCEPTIONS)
    # empty: induce rules from the corpus
    rules: str = str(fixtures.SUFFIX_RULES)
    vocab_size: int = 5000
    codec: bool = False
    align_method: str = "bigram"
    min_support: int = 2
    max_suffix: int = 5
    trace: bool = False
    seed: int = 0
    random_pairs: int = 50
    timestamp: str = ""

    def __post_init__(self):
        if self.vocab_size < 1:
            raise ConfigError("vocab_size must be >= 1")
        if self.align_method not in ALIGN_METHODS:
            raise ConfigError(f"align_method must be one of {ALIGN_METHODS}")

    def override(self, **kw) -> "PipelineConfig":
        return replace(self, **{k: v for k, v in kw.items() if v is not None})

    def check_files(self) -> None:
        """Raise a stage-named error for the first missing input file."""
        owners = [
            ("corpus", CorpusError),
            ("target_corpus", CorpusError),
            ("rules", MorphologyError),
            ("exceptions", MorphologyError),
            ("thesaurus", LexiconError),
        ]
        for key, err in owners:
            path = getattr(self, key)
            if path and not Path(path).is_file():
                raise err(f"{key} file not found: {path}")

    def input_paths(self) -> list[Path]:
        keys = ("corpus", "target_corpus", "rules", "exceptions", "thesaurus")
        return [Path(getattr(self, k)) for k in keys if getattr(self, k)]

    def config_hash(self) -> str:
        """SHA-256 over the settings and the bytes of every input file."""
        h = hashlib.sha256()
        settings = asdict(self)
        for key in ("corpus", "target_corpus", "rules", "exceptions", "thesaurus"):
            settings[key] = Path(settings[key]).name if settings[key] else ""
        h.update(json.dumps(settings, sort_keys=True).encode())
        for p in self.input_paths():
            h.update(hashlib.sha256(p.read_bytes()).digest())
        return h.hexdigest()


def _convert(field_type, raw: str):
    if field_type in (bool, "bool"):
        val = raw.strip().lower()
        if val in ("1", "true", "yes", "on"):
            return True
        if val in ("0", "false", "no", "off"):
            return False
        raise ConfigError(f"not a boolean: {raw!r}")
    if field_type in (int, "int"):
        try:
            return int(raw)
        except ValueError:
            raise ConfigError(f"not an integer: {raw!r}") from None
    return raw.strip()


def load_config(path: Optional[str] = None) -> PipelineConfig:
    if path is None:
        return PipelineConfig()
    parser = configparser.ConfigParser()
    try:
        with open(path, encoding="utf-8") as fh:
            parser.read_file(fh)
    except (OSError, configparser.Error) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    if not parser.has_section(SECTION):
        raise ConfigError(f"config {path} has no [{SECTION}] section")
    known = {f.name: f.type for f in fields(PipelineConfig)}
    values = {}
    base = Path(path).parent
    for key, raw in parser.items(SECTION):
        if key not in known:
            raise ConfigError(f"unknown config key {key!r}")
        val = _convert(known[key], raw)
        if key in ("corpus", "target_corpus", "thesaurus", "exceptions", "rules") and val:
            val = str((base / val).resolve()) if not Path(val).is_absolute() else val
        values[key] = val
    return PipelineConfig(**values)
