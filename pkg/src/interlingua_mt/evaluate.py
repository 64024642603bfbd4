"""End-to-end run over the configured corpora, reported as JSON lines."""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Optional

from .aligner import (
    align_by_bigrams,
    align_by_entropy,
    align_oracle,
    build_bigram_model,
    build_surprisal_table,
)
from .codec import build_codebook, decode, encode, entropy, letter_frequencies
from .config import PipelineConfig
from .corpus import count_words, read_corpus, truncate_vocabulary
from .errors import PipelineError
from .fixtures import random_corpus
from .lexicon import load_thesaurus
from .morphology import (
    build_inverse_dictionary,
    induce_suffixes,
    lemmatize,
    load_lemma_table,
    load_rules,
)
from .translator import Resources, translate

ORACLE_MAX_TOKENS = 6


@dataclass
class EvalReport:
    config_hash: str
    timestamp: str
    stages: list = field(default_factory=list)
    complete: bool = False
    failed_stage: Optional[str] = None
    error: Optional[str] = None

    def add(self, stage: str, **stats):
        self.stages.append({"stage": stage, **stats})

    def to_jsonl(self) -> str:
        lines = [json.dumps(s, ensure_ascii=False, sort_keys=True) for s in self.stages]
        summary = {
            "stage": "summary",
            "complete": self.complete,
            "config_hash": self.config_hash,
            "timestamp": self.timestamp,
        }
        if self.failed_stage:
            summary.update(failed_stage=self.failed_stage, error=self.error)
        lines.append(json.dumps(summary, ensure_ascii=False, sort_keys=True))
        return "\n".join(lines) + "\n"


def _timestamp(config: PipelineConfig) -> str:
    # derived from inputs, never the wall clock, so reruns are byte-identical
    if config.timestamp:
        return config.timestamp
    latest = max((p.stat().st_mtime for p in config.input_paths()), default=0)
    return datetime.fromtimestamp(int(latest), tz=timezone.utc).isoformat()


def evaluate(config: PipelineConfig) -> EvalReport:
    try:
        config.check_files()
        report = EvalReport(config.config_hash(), _timestamp(config))
    except PipelineError as exc:
        report = EvalReport("", "")
        report.failed_stage, report.error = exc.stage, exc.args[0]
        return report
    try:
        _run(config, report)
        report.complete = True
    except PipelineError as exc:
        report.failed_stage, report.error = exc.stage, exc.args[0]
    return report


def _run(config: PipelineConfig, report: EvalReport) -> None:
    source = read_corpus(config.corpus)
    target = read_corpus(config.target_corpus)
    freq = count_words(source)
    vocab = truncate_vocabulary(freq, config.vocab_size) if len(freq) else None
    report.add(
        "corpus",
        sentences=len(source),
        tokens=freq.total,
        types=len(freq),
        vocab_size=len(vocab) if vocab else 0,
    )

    dist = letter_frequencies(source)
    cb = build_codebook(dist)
    words = list(vocab) if vocab else []
    round_trip = sum(decode(encode(w, cb), cb) == w for w in words)
    report.add(
        "codec",
        alphabet=len(dist.probs),
        entropy_bits=round(entropy(dist), 9),
        mean_code_length=round(cb.expected_length(dist), 9),
        round_trip_ok=round_trip,
        round_trip_total=len(words),
    )

    invdict = build_inverse_dictionary(words)
    induced = induce_suffixes(invdict, config.min_support, config.max_suffix)
    rules = tuple(load_rules(config.rules)) if config.rules else tuple(induced)
    table = load_lemma_table(config.exceptions)
    tokens = [w for s in source for w in s.words]
    hits = sum(w in table.exceptions for w in tokens)
    report.add(
        "morphology",
        inverse_dictionary=len(invdict),
        induced_rules=len(induced),
        rules_used=len(rules),
        exception_hits=hits,
    )

    thesaurus = load_thesaurus(config.thesaurus)
    lemmas = [lemmatize(w, rules, table) for w in tokens]
    oov = sum(l not in thesaurus for l in lemmas)
    report.add(
        "lexicon",
        entries=len(thesaurus),
        oov_tokens=oov,
        oov_rate=round(oov / len(lemmas), 9) if lemmas else 0.0,
    )

    resources = Resources(rules, table, thesaurus, cb if config.codec else None)
    outcomes: dict[str, int] = {}
    translations = []
    for sent in source:
        try:
            result = translate(sent, resources)
            translations.append(result.target)
            outcomes["ok"] = outcomes.get("ok", 0) + 1
        except PipelineError as exc:
            translations.append(None)
            outcomes[exc.stage] = outcomes.get(exc.stage, 0) + 1
    report.add("translator", outcomes=outcomes, translations=translations)

    report.add("aligner", **_alignment_stats(config, source, target))


def _alignment_stats(config, source, target) -> dict:
    src_model = build_bigram_model(source)
    tgt_model = build_bigram_model(target)
    src_table = build_surprisal_table(count_words(source))
    tgt_table = build_surprisal_table(count_words(target))
    pairs = list(zip(source, target))

    rng = random.Random(config.seed)
    src_vocab = sorted(src_model.vocabulary)
    tgt_vocab = sorted(tgt_model.vocabulary)
    pairs += list(
        zip(
            random_corpus(rng, src_vocab, config.random_pairs, ORACLE_MAX_TOKENS),
            random_corpus(rng, tgt_vocab, config.random_pairs, ORACLE_MAX_TOKENS),
        )
    )

    checked = agree = 0
    pharaoh = []
    for s, t in pairs:
        if config.align_method == "entropy":
            pharaoh.append(align_by_entropy(s, t, src_table, tgt_table).pharaoh())
        elif config.align_method == "oracle":
            pharaoh.append(align_oracle(s, t, src_model, tgt_model).alignment.pharaoh())
        else:
            pharaoh.append(align_by_bigrams(s, t, src_model, tgt_model).alignment.pharaoh())
        if max(len(s), len(t)) <= ORACLE_MAX_TOKENS:
            checked += 1
            main = align_by_bigrams(s, t, src_model, tgt_model, mode="exhaustive")
            oracle = align_oracle(s, t, src_model, tgt_model)
            agree += main.alignment == oracle.alignment and main.cost == oracle.cost
    return {
        "method": config.align_method,
        "pairs": len(pairs),
        "oracle_checked": checked,
        "oracle_agreement": agree / checked if checked else 1.0,
        "bitext_alignments": pharaoh[: min(len(source), len(target))],
    }
